#pragma once

#include <set>
#include <vector>

#include "evc/points.hpp"
#include "evc/poly.hpp"

namespace evc {

// Reduced Groebner basis: generators monic, tails reduced against the other
// leading monomials, sorted ascending by leading monomial.
struct GroebnerBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order;

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> lms;
        lms.reserve(gens.size());
        for (const auto& g : gens) lms.push_back(g.leading_monomial(order));
        return lms;
    }
};

// Standard monomials outside the initial ideal, sorted ascending by the order.
struct Footprint {
    std::vector<Monomial> monomials;
    MonomialOrder order;

    int size() const { return static_cast<int>(monomials.size()); }
    int max_degree() const {
        int d = 0;
        for (const auto& m : monomials) d = std::max(d, m.degree());
        return d;
    }
    bool contains(const Monomial& m) const {
        for (const auto& x : monomials)
            if (x == m) return true;
        return false;
    }
};

namespace detail {

inline Polynomial divide_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors,
                                   MonomialOrder ord) {
    const Field& F = f.field();
    Polynomial p = f;
    Polynomial r(F, f.nvars());
    while (!p.is_zero()) {
        auto [lm, lc] = p.leading_term(ord);
        bool divided = false;
        for (const Polynomial& g : divisors) {
            Monomial glm = g.leading_monomial(ord);
            if (!glm.divides(lm)) continue;
            Fq factor = F.div(lc, g.leading_coeff(ord));
            p = p - g.scaled(factor) * Polynomial::monomial(F, lm.quotient(glm), F.one());
            divided = true;
            break;
        }
        if (!divided) {
            r.add_term(lm, lc);
            p.add_term(lm, F.neg(lc));
        }
    }
    return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder ord) {
    const Field& F = f.field();
    Monomial lf = f.leading_monomial(ord), lg = g.leading_monomial(ord);
    Monomial l = Monomial::lcm(lf, lg);
    Polynomial a = f.scaled(F.inv(f.leading_coeff(ord))) *
                   Polynomial::monomial(F, l.quotient(lf), F.one());
    Polynomial b = g.scaled(F.inv(g.leading_coeff(ord))) *
                   Polynomial::monomial(F, l.quotient(lg), F.one());
    return a - b;
}

}  // namespace detail

// Remainder of f on division by the basis; for a Groebner basis the result is
// the unique normal form with support among the standard monomials.
inline Polynomial remainder(const Polynomial& f, const GroebnerBasis& gb) {
    return detail::divide_remainder(f, gb.gens, gb.order);
}

// Classical Buchberger completion with normal (smallest-lcm-first) pair
// selection, followed by minimalization and tail reduction.  The reduced
// basis is unique for the order, so the output is deterministic.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder ord) {
    if (gens.empty()) throw DomainError("groebner/empty", "need at least one generator");
    const Field& F = gens.front().field();
    std::vector<Polynomial> basis;
    for (const Polynomial& f : gens) {
        Polynomial r = detail::divide_remainder(f, basis, ord);
        if (!r.is_zero()) basis.push_back(r.monic(ord));
    }
    if (basis.empty())
        throw DomainError("groebner/zero-ideal", "generators are all zero");

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) {
            Monomial a = basis[i].leading_monomial(ord);
            Monomial b = basis[upto].leading_monomial(ord);
            Monomial l = Monomial::lcm(a, b);
            if (l.degree() == a.degree() + b.degree()) continue;  // coprime criterion
            pairs.push_back({l, i, upto});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    while (!pairs.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = order_compare(pairs[k].lcm, pairs[best].lcm, ord);
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        Polynomial s = detail::s_polynomial(basis[pr.i], basis[pr.j], ord);
        Polynomial r = detail::divide_remainder(s, basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(r.monic(ord));
        push_pairs(basis.size() - 1);
    }

    // minimal generators of the initial ideal
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial lm = basis[i].leading_monomial(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial other = basis[j].leading_monomial(ord);
            if (other.divides(lm) && (other != lm || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail reduction; normal forms are unique, one pass suffices
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(detail::divide_remainder(minimal[i], others, ord).monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order_less(a.leading_monomial(ord), b.leading_monomial(ord), ord);
    });
    return {std::move(reduced), ord};
}

// Standard monomials of a zero-dimensional initial ideal, enumerated inside
// the pure-power box and sorted ascending.
inline Footprint footprint(const GroebnerBasis& gb) {
    const std::vector<Monomial> lms = gb.leading_monomials();
    int n = gb.gens.front().nvars();
    std::vector<int> bound(n, -1);
    for (const Monomial& lm : lms) {
        int support = 0, var = -1;
        for (int i = 0; i < n; ++i)
            if (lm.e[i] > 0) { ++support; var = i; }
        if (support == 0) return {{}, gb.order};  // ideal contains a unit
        if (support == 1 && (bound[var] < 0 || lm.e[var] < bound[var])) bound[var] = lm.e[var];
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw DomainError("groebner/infinite-footprint",
                              "no pure power of t" + std::to_string(i + 1) + " in the initial ideal");

    std::vector<Monomial> out;
    Monomial cur = Monomial::one(n);
    for (;;) {
        bool standard = true;
        for (const Monomial& lm : lms)
            if (lm.divides(cur)) { standard = false; break; }
        if (standard) out.push_back(cur);
        int i = 0;
        while (i < n) {
            if (++cur.e[i] < bound[i]) break;
            cur.e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), OrderLess{gb.order});
    return {std::move(out), gb.order};
}

struct VanishingIdeal {
    GroebnerBasis gb;
    Footprint fp;
};

// Buchberger--Moeller interpolation: walk candidate monomials in ascending
// order, reduce their evaluation vectors against the pivots of the accepted
// standard monomials, and harvest a reduced Groebner basis element whenever a
// vector reduces to zero.
inline VanishingIdeal vanishing_ideal(const PointSet& X, MonomialOrder ord) {
    const Field& F = X.field();
    const int m = X.size();
    const int n = X.dim();

    std::vector<Monomial> delta;
    std::vector<std::vector<Fq>> reduced_vecs;
    std::vector<int> pivots;
    std::vector<Polynomial> exprs;   // exprs[k] evaluates to reduced_vecs[k]
    std::vector<Polynomial> gb_gens;
    std::vector<Monomial> gb_lms;

    std::set<Monomial, OrderLess> candidates{OrderLess{ord}};
    candidates.insert(Monomial::one(n));

    while (!candidates.empty()) {
        Monomial t = *candidates.begin();
        candidates.erase(candidates.begin());
        bool in_initial = false;
        for (const Monomial& lm : gb_lms)
            if (lm.divides(t)) { in_initial = true; break; }
        if (in_initial) continue;

        std::vector<Fq> v(m);
        for (int i = 0; i < m; ++i) {
            Fq val = F.one();
            for (int j = 0; j < n; ++j)
                if (t.e[j] > 0) val = F.mul(val, F.pow(X[i][j], t.e[j]));
            v[i] = val;
        }
        Polynomial h = Polynomial::monomial(F, t, F.one());
        for (std::size_t k = 0; k < delta.size(); ++k) {
            Fq c = F.div(v[pivots[k]], reduced_vecs[k][pivots[k]]);
            if (F.is_zero(c)) continue;
            for (int i = 0; i < m; ++i) v[i] = F.sub(v[i], F.mul(c, reduced_vecs[k][i]));
            h = h - exprs[k].scaled(c);
        }
        int pivot = -1;
        for (int i = 0; i < m; ++i)
            if (!F.is_zero(v[i])) { pivot = i; break; }
        if (pivot < 0) {
            gb_gens.push_back(h);  // monic with initial monomial t, tail standard
            gb_lms.push_back(t);
        } else {
            delta.push_back(t);
            reduced_vecs.push_back(std::move(v));
            pivots.push_back(pivot);
            exprs.push_back(std::move(h));
            for (int j = 0; j < n; ++j) {
                Monomial next = t;
                ++next.e[j];
                candidates.insert(next);
            }
        }
    }

    GroebnerBasis gb{std::move(gb_gens), ord};
    Footprint fp{std::move(delta), ord};
    if (fp.size() != m)
        throw DomainError("groebner/internal", "footprint size does not match point count");
    return {std::move(gb), std::move(fp)};
}

}  // namespace evc
