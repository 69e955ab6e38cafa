#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace evc;
using fx::pp;

namespace {

// Generators of the vanishing ideal without interpolation: the ideals of the
// individual points are pairwise comaximal, so their intersection equals
// their product, generated by all s^m products of linear factors.
std::vector<Polynomial> product_generators(const PointSet& X) {
    const Field& F = X.field();
    int s = X.dim();
    std::vector<Polynomial> gens{Polynomial::constant(F, s, F.one())};
    for (int i = 0; i < X.size(); ++i) {
        std::vector<Polynomial> next;
        for (int j = 0; j < s; ++j) {
            Monomial tj = Monomial::one(s);
            tj.e[j] = 1;
            Polynomial lin = Polynomial::monomial(F, tj, F.one());
            lin.add_term(Monomial::one(s), F.neg(X[i][j]));
            for (const Polynomial& g : gens) next.push_back(g * lin);
        }
        gens = std::move(next);
    }
    return gens;
}

PointSet random_points(const Field& F, int s, int m, std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(0, static_cast<int>(F.q()) - 1);
    std::set<std::vector<Fq>> seen;
    while (static_cast<int>(seen.size()) < m) {
        std::vector<Fq> p(s);
        for (int i = 0; i < s; ++i) p[i] = Fq{static_cast<std::uint32_t>(coord(rng))};
        seen.insert(p);
    }
    return PointSet(F, {seen.begin(), seen.end()});
}

// Exhaustive minimum-degree indicator search over the footprint span.
int min_indicator_degree(const IndicatorSet& ind, int which) {
    const Field& F = ind.points().field();
    const PointSet& X = ind.points();
    const auto& delta = ind.fp().monomials;
    int m = X.size();
    int best = -1;
    std::vector<std::uint32_t> coeff(delta.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < coeff.size()) {
            if (++coeff[i] < F.q()) break;
            coeff[i] = 0;
            ++i;
        }
        if (i == coeff.size()) break;
        Polynomial g(F, X.dim());
        for (std::size_t k = 0; k < delta.size(); ++k) g.add_term(delta[k], Fq{coeff[k]});
        if (g.is_zero()) continue;
        bool indicator = !F.is_zero(g.eval(X[which]));
        for (int j = 0; indicator && j < m; ++j)
            if (j != which && !F.is_zero(g.eval(X[j]))) indicator = false;
        if (indicator) {
            int d = g.total_degree();
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("interpolated bases match buchberger on expanded product generators") {
    MonomialOrder ord = fx::grevlex();
    std::mt19937 rng(101);
    Field F3(3, 1);
    Field F2(2, 1);
    Field F4(2, 2);
    Field F9(3, 2);

    struct Instance {
        const Field* F;
        int s, m;
    };
    std::vector<Instance> instances = {{&F9, 1, 8}, {&F3, 2, 5}, {&F3, 3, 4},
                                       {&F2, 2, 4}, {&F4, 1, 4}};
    for (const Instance& inst : instances) {
        PointSet X = random_points(*inst.F, inst.s, inst.m, rng);
        GroebnerBasis direct = buchberger(product_generators(X), ord);
        VanishingIdeal vi = vanishing_ideal(X, ord);
        CHECK(direct.gens == vi.gb.gens);  // reduced bases are unique
    }
}

TEST_CASE("the five-point basis also arises from expanded products") {
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    PointSet X = fx::five_points_a3(F3);
    GroebnerBasis direct = buchberger(product_generators(X), ord);
    CHECK(direct.gens == vanishing_ideal(X, ord).gb.gens);
    CHECK(direct.gens.size() == 6);
}

TEST_CASE("indicator degrees equal the exhaustive minimum-degree search") {
    MonomialOrder ord = fx::grevlex();
    std::mt19937 rng(103);
    Field F3(3, 1);
    Field F2(2, 1);

    struct Instance {
        const Field* F;
        int s, m;
    };
    // exhaustive search costs q^m, keep the instances tiny
    std::vector<Instance> instances = {{&F3, 2, 5}, {&F3, 1, 3}, {&F2, 3, 6}, {&F2, 2, 4}};
    for (const Instance& inst : instances) {
        PointSet X = random_points(*inst.F, inst.s, inst.m, rng);
        IndicatorSet ind(X, ord);
        for (int i = 0; i < X.size(); ++i)
            CHECK(ind.degrees()[i] == min_indicator_degree(ind, i));
    }
}

TEST_CASE("algebraic dual agrees with the direct annihilator system") {
    // oracle route: solve phi(g * f_j) = 0 for g over the footprint basis
    MonomialOrder ord = fx::grevlex();
    std::mt19937 rng(107);
    Field F3(3, 1);
    for (int trial = 0; trial < 12; ++trial) {
        PointSet X = random_points(F3, 2, 5 + trial % 3, rng);
        IndicatorSet ind(X, ord);
        const Field& F = X.field();
        int m = X.size();

        std::uniform_int_distribution<int> coef(0, 2), howmany(1, 3);
        std::vector<Polynomial> space;
        for (int k = howmany(rng); k > 0; --k) {
            Polynomial f(F, 2);
            for (const Monomial& mo : monomials_up_to_degree(2, 2))
                f.add_term(mo, Fq{static_cast<std::uint32_t>(coef(rng))});
            if (!f.is_zero()) space.push_back(f);
        }
        if (space.empty()) continue;

        std::vector<Polynomial> tilde = standard_function_space(space, ind.gb());
        Matrix system(F, static_cast<int>(tilde.size()), m);
        for (std::size_t r = 0; r < tilde.size(); ++r) {
            std::vector<Fq> fvals = evaluate_at_points(tilde[r], X);
            for (int a = 0; a < m; ++a) {
                Fq sum = Field::zero();
                for (int i = 0; i < m; ++i)
                    sum = F.add(sum, F.mul(ind.evaluation_matrix().at(i, a), fvals[i]));
                system.at(static_cast<int>(r), a) = sum;
            }
        }
        std::vector<Polynomial> from_system;
        for (const auto& v : null_space(system)) {
            Polynomial g(F, 2);
            for (int a = 0; a < m; ++a) g.add_term(ind.fp().monomials[a], v[a]);
            from_system.push_back(g);
        }
        AlgebraicDual dual = algebraic_dual(space, ind);
        CHECK(same_span(dual.basis, from_system, ind.fp()));
    }
}

TEST_CASE("one-variable vanishing ideals expand the root product") {
    Field F7(7, 1);
    MonomialOrder ord = fx::grevlex();
    PointSet X = fx::four_points_line7(F7);
    GroebnerBasis gb = buchberger(product_generators(X), ord);
    REQUIRE(gb.gens.size() == 1);
    CHECK(gb.gens[0] == pp(F7, 1, "t1^4 + t1^3 + 3*t1^2 + 5*t1 + 4"));
}
