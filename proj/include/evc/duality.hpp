#pragma once

#include <vector>

#include "evc/invariants.hpp"

namespace evc {

// Orthogonal complement as a linear code: null space of the generator.
inline LinearCode dual_code(const LinearCode& c) {
    std::vector<std::vector<Fq>> basis = null_space(c.generator());
    if (basis.empty()) return LinearCode(c.field(), c.length(), Matrix(c.field(), 0, c.length()));
    return LinearCode::from_rows(c.field(), basis, c.length());
}

struct AlgebraicDual {
    std::vector<Polynomial> basis;  // monic, strictly decreasing initial monomials
};

// Basis of the algebraic dual: pull each dual-code generator back through the
// inverse evaluation matrix into the footprint span, then normalize.  The
// evaluation of the result is checked against the dual code.
inline AlgebraicDual algebraic_dual(const std::vector<Polynomial>& space, const IndicatorSet& ind) {
    const PointSet& X = ind.points();
    LinearCode primal = evaluate_space(space, X);
    LinearCode dual = dual_code(primal);
    std::vector<Polynomial> pulled;
    pulled.reserve(dual.dim());
    for (int i = 0; i < dual.dim(); ++i) pulled.push_back(ind.interpolate(dual.generator().row(i)));
    AlgebraicDual out{basis_algorithm(std::move(pulled), ind.order())};
    if (static_cast<int>(out.basis.size()) != X.size() - primal.dim())
        throw DomainError("duality/internal", "dual dimension identity failed");
    if (!(evaluate_space(out.basis, X) == dual))
        throw DomainError("duality/internal", "evaluated dual basis does not span the dual code");
    return out;
}

inline AlgebraicDual algebraic_dual(const std::vector<Polynomial>& space, const PointSet& X,
                                    MonomialOrder ord) {
    return algebraic_dual(space, IndicatorSet(X, ord));
}

struct DualMonomialCheck {
    bool is_monomial = false;
    std::vector<Monomial> certificate;  // monomial basis of the dual when monomial
};

// Monomial criterion: the dual is a standard monomial code iff the number of
// standard monomials t^a with phi(t^a f) = 0 for all f in the space equals
// |X| - dim.
inline DualMonomialCheck is_dual_monomial(const std::vector<Polynomial>& space,
                                          const IndicatorSet& ind) {
    const Field& F = ind.points().field();
    const int m = ind.points().size();
    std::vector<Polynomial> tilde = standard_function_space(space, ind.gb());
    std::vector<std::vector<Fq>> rows;
    rows.reserve(tilde.size());
    for (const Polynomial& f : tilde) rows.push_back(evaluate_at_points(f, ind.points()));

    DualMonomialCheck out;
    for (int a = 0; a < m; ++a) {
        bool annihilates = true;
        for (const auto& row : rows) {
            Fq sum = Field::zero();
            for (int i = 0; i < m; ++i) sum = F.add(sum, F.mul(ind.evaluation_matrix().at(i, a), row[i]));
            if (!F.is_zero(sum)) { annihilates = false; break; }
        }
        if (annihilates) out.certificate.push_back(ind.fp().monomials[a]);
    }
    if (static_cast<int>(out.certificate.size()) == m - static_cast<int>(tilde.size())) {
        out.is_monomial = true;
    } else {
        out.certificate.clear();
    }
    return out;
}

// Taking the algebraic dual twice returns to the same canonical subspace.
inline bool double_dual_check(const std::vector<Polynomial>& space, const IndicatorSet& ind) {
    std::vector<Polynomial> tilde = standard_function_space(space, ind.gb());
    AlgebraicDual once = algebraic_dual(tilde, ind);
    AlgebraicDual twice = algebraic_dual(once.basis, ind);
    return same_span(twice.basis, tilde, ind.fp());
}

// C2 == beta . C1 with beta coordinatewise nonzero.
inline bool verify_monomial_equivalence(const LinearCode& c1, const LinearCode& c2,
                                        const std::vector<Fq>& beta) {
    if (c1.length() != c2.length() || static_cast<int>(beta.size()) != c1.length())
        throw DomainError("equivalence/length", "codes and scaling vector disagree on length");
    const Field& F = c1.field();
    for (Fq b : beta)
        if (F.is_zero(b)) throw DomainError("equivalence/zero-entry", "scaling vector has a zero entry");
    std::vector<std::vector<Fq>> rows;
    for (int i = 0; i < c1.dim(); ++i) {
        std::vector<Fq> r = c1.generator().row(i);
        for (int j = 0; j < c1.length(); ++j) r[j] = F.mul(r[j], beta[j]);
        rows.push_back(std::move(r));
    }
    LinearCode scaled = rows.empty()
                            ? LinearCode(F, c1.length(), Matrix(F, 0, c1.length()))
                            : LinearCode::from_rows(F, rows, c1.length());
    return scaled == c2;
}

// Combinatorial pairing: when the largest standard monomial t^e is essential,
// |G1| + |G2| = |X| and e is not a sum g1 + g2, the vector of t^e-coefficients
// of the indicator functions scales the code of G1 onto the dual of the code
// of G2.  The equivalence is verified before returning.
inline std::vector<Fq> combinatorial_pairing(const std::vector<Monomial>& gamma1,
                                             const std::vector<Monomial>& gamma2,
                                             const IndicatorSet& ind) {
    const Field& F = ind.points().field();
    const Footprint& fp = ind.fp();
    for (const auto& g : {gamma1, gamma2})
        for (const Monomial& m : g)
            if (!fp.contains(m))
                throw DomainError("pairing/nonstandard", "exponent outside the footprint");

    const Monomial top = fp.monomials.back();
    for (const Polynomial& f : ind.functions())
        if (F.is_zero(f.coeff(top)))
            throw DomainError("pairing/not-essential",
                              "largest standard monomial is missing from an indicator function");
    if (static_cast<int>(gamma1.size() + gamma2.size()) != ind.points().size())
        throw DomainError("pairing/condition1", "|Gamma1| + |Gamma2| must equal |X|");
    for (const Monomial& a : gamma1)
        for (const Monomial& b : gamma2)
            if (a.times(b) == top)
                throw DomainError("pairing/condition2", "top exponent is a sum from Gamma1 + Gamma2");

    std::vector<Fq> beta;
    beta.reserve(ind.functions().size());
    for (const Polynomial& f : ind.functions()) beta.push_back(f.coeff(top));

    auto span_of = [&](const std::vector<Monomial>& g) {
        std::vector<Polynomial> polys;
        for (const Monomial& m : g) polys.push_back(Polynomial::monomial(F, m, F.one()));
        return polys;
    };
    LinearCode c1 = evaluate_space(span_of(gamma1), ind.points());
    LinearCode c2 = evaluate_space(span_of(gamma2), ind.points());
    if (!verify_monomial_equivalence(c1, dual_code(c2), beta))
        throw DomainError("pairing/internal", "pairing verification failed");
    return beta;
}

}  // namespace evc
