#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include "fixtures.hpp"

using namespace evc;
using fx::pp;

namespace {

std::set<std::string> span_texts(const std::vector<Polynomial>& polys, MonomialOrder ord) {
    std::set<std::string> out;
    for (const auto& f : polys) out.insert(poly_to_string(f, ord));
    return out;
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

}  // namespace

TEST_CASE("evaluating spaces of polynomials") {
    Field F3(3, 1);
    PointSet X8 = fx::eight_points_a3(F3);

    LinearCode rep = evaluate_space({pp(F3, 3, "1")}, X8);
    CHECK(rep.length() == 8);
    CHECK(rep.dim() == 1);

    LinearCode c2 = evaluate_space(degree_space(F3, 3, 2), X8);
    CHECK(c2.dim() == 7);

    PointSet X5 = fx::five_points_a2(F3);
    LinearCode c1 = evaluate_space(fx::polys(F3, 2, {"1", "t1", "t2"}), X5);
    CHECK(c1.length() == 5);
    CHECK(c1.dim() == 3);
}

TEST_CASE("standard function space of the degree-two code on eight points") {
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    PointSet X = fx::eight_points_a3(F3);
    auto basis = standard_function_space(degree_space(F3, 3, 2), X, ord);
    CHECK(span_texts(basis, ord) ==
          std::set<std::string>{"1", "t3", "t2", "t1", "t3^2", "t2*t3", "t1*t3"});
    // same code, smaller representation
    CHECK(evaluate_space(basis, X) == evaluate_space(degree_space(F3, 3, 2), X));
}

TEST_CASE("standard function space fixes spaces already inside the footprint span") {
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    PointSet X = fx::five_points_a2(F3);
    auto vi = vanishing_ideal(X, ord);
    auto space = fx::polys(F3, 2, {"t1*t2 - t1", "t2"});
    for (const auto& f : space)
        for (const auto& [m, c] : f.terms()) REQUIRE(vi.fp.contains(m));
    auto basis = standard_function_space(space, vi.gb);
    CHECK(same_span(basis, space, vi.fp));

    auto sle1 = standard_function_space(fx::polys(F3, 2, {"1", "t1", "t2"}), vi.gb);
    CHECK(span_texts(sle1, ord) == std::set<std::string>{"1", "t1", "t2"});
}

TEST_CASE("dimension of the code equals dimension of its standard space") {
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coef(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        PointSet X = random_points(F3, 2, 6, rng);
        std::vector<Polynomial> space;
        for (int k = 0; k < 3; ++k) {
            Polynomial f(F3, 2);
            for (const Monomial& m : monomials_up_to_degree(2, 2))
                f.add_term(m, Fq{static_cast<std::uint32_t>(coef(rng))});
            if (!f.is_zero()) space.push_back(f);
        }
        EvaluationCode ec(space, X, ord);
        CHECK(static_cast<int>(ec.standard_basis().size()) == ec.code().dim());
    }
}

TEST_CASE("monomial-space detection") {
    Field F7(7, 1);
    MonomialOrder ord = fx::grevlex();
    // binomial vanishing ideal: monomial spaces stay monomial
    CartesianSpec torus = torus_spec(F7, {3, 2});
    PointSet T = cartesian_pointset(torus);
    auto [is_mono, basis] = is_standard_monomial_code(
        fx::polys(F7, 2, {"1", "t1", "t2", "t1*t2"}), T, ord);
    CHECK(is_mono);
    REQUIRE(basis.size() == 4);

    Field F3(3, 1);
    PointSet X8 = fx::eight_points_a3(F3);
    auto [mono8, basis8] = is_standard_monomial_code({pp(F3, 3, "t1 + t2")}, X8, ord);
    CHECK_FALSE(mono8);

    auto [mono1, basis1] = is_standard_monomial_code({pp(F3, 3, "1")}, X8, ord);
    CHECK(mono1);
    CHECK(basis1 == std::vector<Monomial>{Monomial::one(3)});
}

TEST_CASE("minimum distances of the five-point plane code") {
    Field F3(3, 1);
    PointSet X = fx::five_points_a2(F3);
    LinearCode c1 = evaluate_space(degree_space(F3, 2, 1), X);
    CHECK(min_distance(c1) == 2);
    CHECK(min_distance(dual_code(c1)) == 3);
}

TEST_CASE("minimum distances on seven points") {
    Field F3(3, 1);
    PointSet X = fx::seven_points_a3(F3);
    LinearCode c1 = evaluate_space(degree_space(F3, 3, 1), X);
    CHECK(min_distance(c1) == 1);
    CHECK(min_distance(dual_code(c1)) == 3);
}

TEST_CASE("repetition code has full minimum distance") {
    Field F5(5, 1);
    PointSet X(F5, {fx::point(F5, {0}), fx::point(F5, {1}), fx::point(F5, {2}), fx::point(F5, {3})});
    CHECK(min_distance(evaluate_space({pp(F5, 1, "1")}, X)) == 4);
}

TEST_CASE("minimum distance guards") {
    Field F3(3, 1);
    PointSet X = fx::five_points_a2(F3);
    LinearCode zero = evaluate_space({}, X);
    CHECK(zero.dim() == 0);
    CHECK_THROWS_AS(min_distance(zero), DomainError);

    LinearCode c2 = evaluate_space(degree_space(F3, 2, 2), X);  // k = 5
    CHECK_THROWS_AS(min_distance(c2, 100), DomainError);        // 3^5 > 100
    CHECK(min_distance(c2, 243) == 1);
}

TEST_CASE("distance decreases and hilbert grows along the degree filtration") {
    MonomialOrder ord = fx::grevlex();
    std::mt19937 rng(47);
    for (auto [p, v, s, m] : std::vector<std::array<int, 4>>{{3, 1, 2, 7}, {2, 1, 3, 6}, {2, 2, 1, 4}}) {
        Field F(p, v);
        for (int trial = 0; trial < 4; ++trial) {
            PointSet X = random_points(F, s, m, rng);
            HilbertProfile prof = hilbert_profile(X, ord);
            int prev_dim = 0, prev_dist = X.size() + 1;
            for (int d = 0; d <= prof.r0; ++d) {
                LinearCode c = evaluate_space(degree_space(F, s, d), X);
                CHECK(c.dim() == prof.hilbert(d));
                CHECK(c.dim() >= prev_dim);
                int dist = min_distance(c);
                CHECK(dist <= prev_dist);
                if (prev_dist > 1) CHECK(dist < prev_dist);  // strictly decreasing until 1
                CHECK(dist <= X.size() - c.dim() + 1);       // Singleton bound
                prev_dim = c.dim();
                prev_dist = dist;
            }
            CHECK(prev_dim == X.size());
            CHECK(prev_dist == 1);
        }
    }
}
