#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "evc/duality.hpp"

namespace evc {

// One Cartesian axis: a multiplicative subgroup of K* of the given order,
// optionally together with 0.
struct CartesianAxis {
    std::uint32_t subgroup_order = 1;
    bool with_zero = false;
};

// Product of per-axis component sets.  All-subgroup products are degenerate
// tori (vanishing ideal {t_i^{d_i} - 1}); products of subgroup-plus-zero sets
// are degenerate affine spaces (vanishing ideal {t_i^{e_i} - t_i}).
struct CartesianSpec {
    const Field* field = nullptr;
    std::vector<CartesianAxis> axes;

    int dim() const { return static_cast<int>(axes.size()); }

    bool is_torus() const {
        return std::none_of(axes.begin(), axes.end(), [](const CartesianAxis& a) { return a.with_zero; });
    }
    bool is_affine() const {
        return std::all_of(axes.begin(), axes.end(), [](const CartesianAxis& a) { return a.with_zero; });
    }

    // d_i: subgroup order on axis i
    int d(int i) const { return static_cast<int>(axes[i].subgroup_order); }
    // e_i: component size on axis i
    int e(int i) const { return d(i) + (axes[i].with_zero ? 1 : 0); }
    // largest standard exponent on axis i
    int max_exponent(int i) const { return e(i) - 1; }

    int r0() const {
        int r = 0;
        for (int i = 0; i < dim(); ++i) r += max_exponent(i);
        return r;
    }

    std::uint64_t npoints() const {
        std::uint64_t n = 1;
        for (int i = 0; i < dim(); ++i) n *= static_cast<std::uint64_t>(e(i));
        return n;
    }

    // Footprint of the product ideal: the exponent box, sorted ascending.
    std::vector<Monomial> delta(MonomialOrder ord) const {
        std::vector<Monomial> out;
        Monomial cur = Monomial::one(dim());
        for (;;) {
            out.push_back(cur);
            int i = 0;
            while (i < dim()) {
                if (++cur.e[i] <= max_exponent(i)) break;
                cur.e[i] = 0;
                ++i;
            }
            if (i == dim()) break;
        }
        std::sort(out.begin(), out.end(), OrderLess{ord});
        return out;
    }

    bool in_delta(const Monomial& m) const {
        if (m.nvars() != dim()) return false;
        for (int i = 0; i < dim(); ++i)
            if (m.e[i] > max_exponent(i)) return false;
        return true;
    }
};

inline CartesianSpec make_cartesian_spec(const Field& F, const std::vector<std::uint32_t>& orders,
                                         const std::vector<bool>& with_zero) {
    if (orders.empty() || orders.size() != with_zero.size())
        throw DomainError("family/axes", "need one subgroup order and zero flag per axis");
    CartesianSpec spec;
    spec.field = &F;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0 || (F.q() - 1) % orders[i] != 0)
            throw DomainError("field/subgroup-order", "axis order must divide q-1");
        spec.axes.push_back({orders[i], with_zero[i]});
    }
    return spec;
}

inline CartesianSpec torus_spec(const Field& F, const std::vector<std::uint32_t>& orders) {
    return make_cartesian_spec(F, orders, std::vector<bool>(orders.size(), false));
}

inline CartesianSpec affine_spec(const Field& F, const std::vector<std::uint32_t>& orders) {
    return make_cartesian_spec(F, orders, std::vector<bool>(orders.size(), true));
}

// Full degenerate affine space K^s (every axis is all of K).
inline CartesianSpec full_affine_spec(const Field& F, int s) {
    return affine_spec(F, std::vector<std::uint32_t>(s, F.q() - 1));
}

// Points enumerated lexicographically with axis 1 slowest; each axis lists 0
// first (when present) followed by the subgroup in power order.
inline PointSet cartesian_pointset(const CartesianSpec& spec) {
    const Field& F = *spec.field;
    std::vector<std::vector<Fq>> axes;
    for (int i = 0; i < spec.dim(); ++i) {
        std::vector<Fq> ax;
        if (spec.axes[i].with_zero) ax.push_back(Field::zero());
        for (Fq x : F.subgroup(spec.axes[i].subgroup_order)) ax.push_back(x);
        axes.push_back(std::move(ax));
    }
    std::vector<std::vector<Fq>> pts;
    std::vector<std::size_t> idx(spec.dim(), 0);
    for (;;) {
        std::vector<Fq> p(spec.dim());
        for (int i = 0; i < spec.dim(); ++i) p[i] = axes[i][idx[i]];
        pts.push_back(std::move(p));
        int i = spec.dim() - 1;
        while (i >= 0) {
            if (++idx[i] < axes[i].size()) break;
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return PointSet(F, std::move(pts));
}

// Reed-Muller-type code of degree d: the code of all polynomials of total
// degree at most d.  Degree -1 gives the zero code.
inline EvaluationCode reed_muller(const PointSet& X, int d, MonomialOrder ord) {
    if (d < -1) throw DomainError("rm/degree", "degree must be at least -1");
    return EvaluationCode(degree_space(X.field(), X.dim(), d), X, ord);
}

namespace detail {

inline void require_standard(const std::vector<Monomial>& A, const CartesianSpec& spec,
                             const char* code) {
    for (const Monomial& a : A)
        if (!spec.in_delta(a)) throw DomainError(code, "monomial outside the footprint");
}

}  // namespace detail

// Closed-form dual on a degenerate torus: complement of the mirrored set
// b_i = prod_{j in supp(a_i)} t_j^{d_j - a_ij} (with b = 1 for a = 1).
inline std::vector<Monomial> torus_monomial_dual(const std::vector<Monomial>& A,
                                                 const CartesianSpec& spec, MonomialOrder ord) {
    if (!spec.is_torus()) throw DomainError("torus/spec", "spec is not a degenerate torus");
    detail::require_standard(A, spec, "torus/nonstandard");
    std::set<Monomial> mirrored;
    for (const Monomial& a : A) {
        Monomial b = Monomial::one(spec.dim());
        for (int j = 0; j < spec.dim(); ++j)
            if (a.e[j] > 0) b.e[j] = spec.d(j) - a.e[j];
        mirrored.insert(b);
    }
    std::vector<Monomial> out;
    for (const Monomial& m : spec.delta(ord))
        if (!mirrored.count(m)) out.push_back(m);
    return out;
}

// Weakly divisor-closed: deleting from any member every variable sitting at
// its maximal exponent d_j (any subset of them) stays inside the set.
inline bool weakly_divisor_closed(const std::vector<Monomial>& A, const CartesianSpec& spec) {
    if (!spec.is_affine()) throw DomainError("affine/spec", "spec is not a degenerate affine space");
    detail::require_standard(A, spec, "affine/nonstandard");
    std::set<Monomial> members(A.begin(), A.end());
    if (spec.dim() == 1) {
        // one-variable classification: top exponent below d, or 1 present
        int top = 0;
        for (const Monomial& a : A) top = std::max(top, a.e[0]);
        return top < spec.d(0) || members.count(Monomial::one(1)) > 0;
    }
    for (const Monomial& a : A) {
        std::vector<int> at_max;
        for (int j = 0; j < spec.dim(); ++j)
            if (a.e[j] == spec.d(j)) at_max.push_back(j);
        for (std::uint32_t mask = 1; mask < (1u << at_max.size()); ++mask) {
            Monomial quot = a;
            for (std::size_t b = 0; b < at_max.size(); ++b)
                if (mask & (1u << b)) quot.e[at_max[b]] = 0;
            if (!members.count(quot)) return false;
        }
    }
    return true;
}

// Closed-form dual on a degenerate affine space with char(K) dividing every
// e_i.  Returns nothing when the dual is not a monomial space (exactly the
// non-weakly-divisor-closed case).
inline std::optional<std::vector<Monomial>> affine_monomial_dual(const std::vector<Monomial>& A,
                                                                 const CartesianSpec& spec,
                                                                 MonomialOrder ord) {
    if (!spec.is_affine()) throw DomainError("affine/spec", "spec is not a degenerate affine space");
    const int p = spec.field->p();
    for (int i = 0; i < spec.dim(); ++i)
        if (spec.e(i) % p != 0)
            throw DomainError("affine/characteristic", "char(K) must divide every axis size");
    detail::require_standard(A, spec, "affine/nonstandard");
    if (!weakly_divisor_closed(A, spec)) return std::nullopt;
    std::set<Monomial> mirrored;
    for (const Monomial& a : A) {
        Monomial b = Monomial::one(spec.dim());
        for (int j = 0; j < spec.dim(); ++j) b.e[j] = spec.d(j) - a.e[j];
        mirrored.insert(b);
    }
    std::vector<Monomial> out;
    for (const Monomial& m : spec.delta(ord))
        if (!mirrored.count(m)) out.push_back(m);
    return out;
}

// Dual of the degree-d standard monomial space on a degenerate affine space:
// the standard monomials of degree at most r0 - d - 1.  Cross-checked against
// the mirrored-set complement.
inline std::vector<Monomial> affine_rm_dual(int d, const CartesianSpec& spec, MonomialOrder ord) {
    if (!spec.is_affine()) throw DomainError("affine/spec", "spec is not a degenerate affine space");
    for (int i = 0; i < spec.dim(); ++i)
        if (spec.e(i) % spec.field->p() != 0)
            throw DomainError("affine/characteristic", "char(K) must divide every axis size");
    if (d < -1 || d > spec.r0())
        throw DomainError("rm/degree", "degree must lie in [-1, r0]");
    std::vector<Monomial> A;
    for (const Monomial& m : spec.delta(ord))
        if (m.degree() <= d) A.push_back(m);
    std::vector<Monomial> direct;
    for (const Monomial& m : spec.delta(ord))
        if (m.degree() <= spec.r0() - d - 1) direct.push_back(m);
    if (A.empty()) return direct;  // d = -1: dual is the whole footprint
    std::optional<std::vector<Monomial>> mirrored = affine_monomial_dual(A, spec, ord);
    if (!mirrored || !(*mirrored == direct))
        throw DomainError("affine/internal", "mirrored complement disagrees with the degree cut");
    return direct;
}

struct CriterionReport {
    bool holds = false;
    bool hilbert_complement = false;  // H(d) + H(r0-d-1) = |X| throughout
    bool v_numbers_equal_r0 = false;  // every local v-number equals r0
    int r0 = 0;
    std::optional<Polynomial> g;      // witness with g(P_i) = beta_i, when the criterion holds
    std::vector<Fq> beta;
};

// Duality criterion for Reed-Muller-type codes: C_X(d) is monomially
// equivalent to C_X(r0-d-1)^perp for all d iff the Hilbert complement holds
// and every local v-number equals r0.  When it holds the witness
// g = sum lc(f_i) f_i is built and the equivalence verified for every degree.
inline CriterionReport duality_criterion(const IndicatorSet& ind) {
    const PointSet& X = ind.points();
    if (X.size() < 2) throw DomainError("points/too-few", "criterion needs at least two points");
    const Field& F = X.field();
    HilbertProfile profile = hilbert_profile(ind.fp());
    SymmetryReport sym = symmetry_and_duality_condition(profile);

    CriterionReport rep;
    rep.r0 = profile.r0;
    rep.hilbert_complement = sym.complement_holds;
    rep.v_numbers_equal_r0 = std::all_of(ind.degrees().begin(), ind.degrees().end(),
                                         [&](int d) { return d == profile.r0; });
    rep.holds = rep.hilbert_complement && rep.v_numbers_equal_r0;
    if (!rep.holds) return rep;

    Polynomial g(F, X.dim());
    for (const Polynomial& f : ind.functions())
        g = g + f.scaled(f.leading_coeff(ind.order()));
    rep.beta.reserve(X.size());
    for (int i = 0; i < X.size(); ++i) {
        Fq gi = g.eval(X[i]);
        if (!(gi == ind.functions()[i].leading_coeff(ind.order())))
            throw DomainError("criterion/internal", "witness values disagree with leading coefficients");
        rep.beta.push_back(gi);
    }
    for (int d = -1; d <= profile.r0; ++d) {
        LinearCode cd = evaluate_space(degree_space(F, X.dim(), d), X);
        LinearCode comp = evaluate_space(degree_space(F, X.dim(), profile.r0 - d - 1), X);
        if (!verify_monomial_equivalence(cd, dual_code(comp), rep.beta))
            throw DomainError("criterion/internal", "duality criterion verification failed");
    }
    rep.g = std::move(g);
    return rep;
}

inline CriterionReport duality_criterion(const PointSet& X, MonomialOrder ord) {
    return duality_criterion(IndicatorSet(X, ord));
}

// Self-dual Reed-Muller-type code alpha . C_X((r0-1)/2) in characteristic 2
// with odd r0, where alpha_i is the square root of lc(f_i).
inline LinearCode self_dual_code(const PointSet& X, MonomialOrder ord) {
    const Field& F = X.field();
    if (F.p() != 2)
        throw DomainError("selfdual/characteristic", "construction needs characteristic 2");
    IndicatorSet ind(X, ord);
    CriterionReport rep = duality_criterion(ind);
    if (!rep.holds) throw DomainError("selfdual/criterion", "duality criterion fails on this set");
    if (rep.r0 % 2 == 0) throw DomainError("selfdual/r0-even", "regularity index must be odd");

    std::vector<Fq> alpha(rep.beta.size());
    for (std::size_t i = 0; i < rep.beta.size(); ++i)
        alpha[i] = F.pow(rep.beta[i], F.q() / 2);  // Frobenius square root
    LinearCode base = evaluate_space(degree_space(F, X.dim(), (rep.r0 - 1) / 2), X);
    std::vector<std::vector<Fq>> rows;
    for (int i = 0; i < base.dim(); ++i) {
        std::vector<Fq> r = base.generator().row(i);
        for (int j = 0; j < base.length(); ++j) r[j] = F.mul(r[j], alpha[j]);
        rows.push_back(std::move(r));
    }
    LinearCode scaled = LinearCode::from_rows(F, rows, base.length());
    if (!(scaled == dual_code(scaled)))
        throw DomainError("selfdual/internal", "constructed code is not self-dual");
    return scaled;
}

}  // namespace evc
