#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"

using namespace evc;
using fx::pp;

TEST_CASE("rref basics") {
    Field F7(7, 1);
    Matrix id = Matrix::identity(F7, 4);
    RrefResult r = rref(id);
    CHECK(r.rank == 4);
    CHECK(r.reduced == id);

    Matrix m = Matrix::from_rows(F7, {{Fq{1}, Fq{2}}, {Fq{2}, Fq{4}}}, 2);
    CHECK(rref(m).rank == 1);  // second row is proportional
}

TEST_CASE("rank of the five-point evaluation matrix") {
    Field F3(3, 1);
    IndicatorSet ind(fx::five_points_a3(F3), fx::grevlex());
    CHECK(rref(ind.evaluation_matrix()).rank == 5);
}

TEST_CASE("null space of a generator matrix") {
    Field F3(3, 1);
    PointSet X = fx::eight_points_a3(F3);
    LinearCode c = evaluate_space(degree_space(F3, 3, 2), X);
    auto basis = null_space(c.generator());
    REQUIRE(basis.size() == 1);
    // spans K(0,0,1,1,1,-1,-1,-1)
    std::vector<Fq> expect = fx::word(F3, {0, 0, 1, 1, 1, -1, -1, -1});
    Fq fix = F3.div(Fq{1}, basis[0][2]);
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(F3.mul(basis[0][i], fix) == expect[i]);

    Field F7(7, 1);
    PointSet L = fx::four_points_line7(F7);
    LinearCode c2 = evaluate_space(degree_space(F7, 1, 2), L);
    auto basis2 = null_space(c2.generator());
    REQUIRE(basis2.size() == 1);
    // spans K(2,2,2,1)
    Fq scale = F7.div(Fq{2}, basis2[0][0]);
    std::vector<Fq> scaled;
    for (Fq x : basis2[0]) scaled.push_back(F7.mul(x, scale));
    CHECK(scaled == fx::word(F7, {2, 2, 2, 1}));

    CHECK(null_space(Matrix::identity(F7, 3)).empty());
}

TEST_CASE("null-space vectors are orthogonal to every row") {
    std::mt19937 rng(5);
    Field F4(2, 2);
    std::uniform_int_distribution<int> entry(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m(F4, 3, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = Fq{static_cast<std::uint32_t>(entry(rng))};
        for (const auto& v : null_space(m)) {
            for (int i = 0; i < 3; ++i) {
                Fq dot = Field::zero();
                for (int j = 0; j < 6; ++j) dot = F4.add(dot, F4.mul(m.at(i, j), v[j]));
                CHECK(dot == Field::zero());
            }
        }
    }
}

TEST_CASE("matrix inversion") {
    Field F3(3, 1);
    Matrix id = Matrix::identity(F3, 3);
    CHECK(invert(id) == id);

    // the inverse evaluation matrix columns carry the indicator coefficients
    IndicatorSet ind(fx::five_points_a3(F3), fx::grevlex());
    Matrix inv = invert(ind.evaluation_matrix());
    CHECK(inv == ind.inverse_matrix());
    // first column = coefficients of t3 + t1 - t3^2 over {1, t3, t2, t1, t3^2}
    std::vector<Fq> col0;
    for (int i = 0; i < 5; ++i) col0.push_back(inv.at(i, 0));
    CHECK(col0 == fx::word(F3, {0, 1, 0, 1, -1}));

    Field F7(7, 1);
    Matrix one(F7, 1, 1);
    one.at(0, 0) = Fq{3};
    CHECK(invert(one).at(0, 0) == Fq{5});
    Matrix sing = Matrix::from_rows(F7, {{Fq{1}, Fq{2}}, {Fq{2}, Fq{4}}}, 2);
    CHECK_THROWS_AS(invert(sing), DomainError);
}

TEST_CASE("basis algorithm collapses dependent polynomials") {
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    auto basis = basis_algorithm(fx::polys(F3, 2, {"t1", "t1", "t1 + t2"}), ord);
    REQUIRE(basis.size() == 2);
    CHECK(monomial_to_string(basis[0].leading_monomial(ord)) == "t1");
    CHECK(monomial_to_string(basis[1].leading_monomial(ord)) == "t2");

    auto single = basis_algorithm(fx::polys(F3, 2, {"2*t1 + 1"}), ord);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == pp(F3, 2, "t1 + 2"));  // normalized monic

    CHECK(basis_algorithm({}, ord).empty());
}

TEST_CASE("basis algorithm spans the degree-two standard space on eight points") {
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    auto vi = vanishing_ideal(fx::eight_points_a3(F3), ord);
    std::vector<Polynomial> rem;
    for (const Polynomial& f : degree_space(F3, 3, 2)) {
        Polynomial r = remainder(f, vi.gb);
        if (!r.is_zero()) rem.push_back(r);
    }
    auto basis = basis_algorithm(rem, ord);
    CHECK(basis.size() == 7);
}

TEST_CASE("basis algorithm cardinality equals matrix rank") {
    std::mt19937 rng(17);
    Field F3(3, 1);
    MonomialOrder ord = fx::grevlex();
    std::uniform_int_distribution<int> expo(0, 2), coef(0, 2), count(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial> polys;
        std::set<Monomial> support;
        int n = count(rng);
        for (int k = 0; k < n; ++k) {
            Polynomial f(F3, 2);
            for (int t = 0; t < 3; ++t) {
                Monomial m = Monomial::one(2);
                m.e[0] = expo(rng);
                m.e[1] = expo(rng);
                f.add_term(m, Fq{static_cast<std::uint32_t>(coef(rng))});
            }
            if (!f.is_zero()) {
                polys.push_back(f);
                for (const auto& [m, c] : f.terms()) support.insert(m);
            }
        }
        std::vector<Monomial> cols(support.begin(), support.end());
        Matrix m(F3, static_cast<int>(polys.size()), static_cast<int>(cols.size()));
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) = polys[i].coeff(cols[j]);
        auto basis = basis_algorithm(polys, ord);
        CHECK(static_cast<int>(basis.size()) == rref(m).rank);

        // initial monomials strictly decrease
        for (std::size_t i = 1; i < basis.size(); ++i)
            CHECK(order_compare(basis[i].leading_monomial(ord), basis[i - 1].leading_monomial(ord), ord) < 0);

        // every input reduces to zero against the output by leading-term elimination
        for (Polynomial f : polys) {
            for (;;) {
                if (f.is_zero()) break;
                bool hit = false;
                for (const Polynomial& b : basis)
                    if (!f.is_zero() && f.leading_monomial(ord) == b.leading_monomial(ord)) {
                        f = f - b.scaled(f.leading_coeff(ord));
                        hit = true;
                        break;
                    }
                if (!hit) break;
            }
            CHECK(f.is_zero());
        }
    }
}
