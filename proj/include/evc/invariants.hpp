#pragma once

#include <vector>

#include "evc/evalcode.hpp"

namespace evc {

// The unique indicator functions f_i in the footprint span with
// f_i(P_j) = delta_ij, read off the columns of the inverse evaluation matrix.
// Doubles as the shared per-(X, order) cache: vanishing ideal, footprint,
// evaluation matrix and its inverse.
class IndicatorSet {
public:
    IndicatorSet(PointSet X, MonomialOrder ord)
        : points_(std::move(X)),
          order_(ord),
          ideal_(vanishing_ideal(points_, ord)),
          m_ev_(points_.field(), points_.size(), points_.size()),
          m_ev_inv_(points_.field(), 0, 0) {
        const Field& F = points_.field();
        const int m = points_.size();
        for (int j = 0; j < m; ++j) {
            Polynomial mono = Polynomial::monomial(F, ideal_.fp.monomials[j], F.one());
            for (int i = 0; i < m; ++i) m_ev_.at(i, j) = mono.eval(points_[i]);
        }
        m_ev_inv_ = invert(m_ev_);
        functions_.reserve(m);
        degrees_.reserve(m);
        for (int i = 0; i < m; ++i) {
            Polynomial f(F, X.dim());
            for (int j = 0; j < m; ++j) f.add_term(ideal_.fp.monomials[j], m_ev_inv_.at(j, i));
            degrees_.push_back(f.total_degree());
            functions_.push_back(std::move(f));
        }
    }

    const PointSet& points() const { return points_; }
    MonomialOrder order() const { return order_; }
    const GroebnerBasis& gb() const { return ideal_.gb; }
    const Footprint& fp() const { return ideal_.fp; }
    const Matrix& evaluation_matrix() const { return m_ev_; }
    const Matrix& inverse_matrix() const { return m_ev_inv_; }
    const std::vector<Polynomial>& functions() const { return functions_; }
    // degrees()[i] is the v-number of the vanishing ideal at P_i
    const std::vector<int>& degrees() const { return degrees_; }

    // Unique polynomial in the footprint span with the given values on X.
    Polynomial interpolate(const std::vector<Fq>& values) const {
        const Field& F = points_.field();
        std::vector<Fq> coeffs = mat_vec(m_ev_inv_, values);
        Polynomial g(F, points_.dim());
        for (int j = 0; j < points_.size(); ++j) g.add_term(ideal_.fp.monomials[j], coeffs[j]);
        return g;
    }

private:
    PointSet points_;
    MonomialOrder order_;
    VanishingIdeal ideal_;
    Matrix m_ev_, m_ev_inv_;
    std::vector<Polynomial> functions_;
    std::vector<int> degrees_;
};

struct VNumbers {
    std::vector<int> local;  // per point, in point order
    int global;              // min over points
};

inline VNumbers v_numbers(const IndicatorSet& ind) {
    if (ind.points().size() < 2)
        throw DomainError("points/too-few", "v-numbers need at least two points");
    VNumbers out{ind.degrees(), ind.degrees().front()};
    for (int d : out.local) out.global = std::min(out.global, d);
    return out;
}

inline VNumbers v_numbers(const PointSet& X, MonomialOrder ord) {
    return v_numbers(IndicatorSet(X, ord));
}

// Affine Hilbert data of the vanishing ideal, all derived from per-degree
// footprint counts: h-vector, cumulative Hilbert function, regularity index.
struct HilbertProfile {
    std::vector<int> h;          // h[d] = number of standard monomials of degree d
    std::vector<int> cumulative; // cumulative[d] = H(d) for d = 0..r0
    int r0 = 0;
    int npoints = 0;

    // H(d) for any d >= -1
    int hilbert(int d) const {
        if (d < 0) return 0;
        if (d >= r0) return npoints;
        return cumulative[d];
    }
};

inline HilbertProfile hilbert_profile(const Footprint& fp) {
    HilbertProfile out;
    out.npoints = fp.size();
    out.r0 = fp.max_degree();
    out.h.assign(out.r0 + 1, 0);
    for (const Monomial& m : fp.monomials) ++out.h[m.degree()];
    out.cumulative.assign(out.r0 + 1, 0);
    int acc = 0;
    for (int d = 0; d <= out.r0; ++d) {
        acc += out.h[d];
        out.cumulative[d] = acc;
    }
    return out;
}

inline HilbertProfile hilbert_profile(const PointSet& X, MonomialOrder ord) {
    return hilbert_profile(vanishing_ideal(X, ord).fp);
}

struct SymmetryReport {
    bool h_symmetric = false;
    bool complement_holds = false;       // H(d) + H(r0-d-1) = |X| for -1 <= d <= r0
    std::vector<int> failing_degrees;    // degrees d where the complement identity fails
};

inline SymmetryReport symmetry_and_duality_condition(const HilbertProfile& p) {
    SymmetryReport rep;
    rep.h_symmetric = true;
    for (int i = 0; i <= p.r0; ++i)
        if (p.h[i] != p.h[p.r0 - i]) { rep.h_symmetric = false; break; }
    rep.complement_holds = true;
    for (int d = -1; d <= p.r0; ++d)
        if (p.hilbert(d) + p.hilbert(p.r0 - d - 1) != p.npoints) {
            rep.complement_holds = false;
            rep.failing_degrees.push_back(d);
        }
    if (rep.h_symmetric != rep.complement_holds)
        throw DomainError("invariants/internal", "h-vector symmetry disagrees with the complement identity");
    return rep;
}

// All monomials of total degree <= d in n variables.
inline std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur = Monomial::one(nvars);
    for (;;) {
        if (cur.degree() <= d) out.push_back(cur);
        int i = 0;
        while (i < nvars) {
            if (++cur.e[i] <= d) break;
            cur.e[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return out;
}

inline std::vector<Polynomial> degree_space(const Field& F, int nvars, int d) {
    std::vector<Polynomial> out;
    for (const Monomial& m : monomials_up_to_degree(nvars, d))
        out.push_back(Polynomial::monomial(F, m, F.one()));
    return out;
}

enum class RegDeltaMode { ViaVNumber, BruteForce };

// Regularity index of the minimum-distance function d -> delta_X(d): the
// first degree whose Reed-Muller-type code contains a weight-one word.  The
// v-number route and the exhaustive route agree (checked when brute-forcing).
inline int reg_delta(const PointSet& X, MonomialOrder ord, RegDeltaMode mode,
                     std::uint64_t budget = kDefaultEnumerationBudget) {
    if (X.size() < 2)
        throw DomainError("points/too-few", "regularity of the distance needs at least two points");
    int via_v = v_numbers(X, ord).global;
    if (mode == RegDeltaMode::ViaVNumber) return via_v;
    for (int d = 0;; ++d) {
        LinearCode c = evaluate_space(degree_space(X.field(), X.dim(), d), X);
        if (min_distance(c, budget) == 1) {
            if (d != via_v)
                throw DomainError("invariants/internal", "distance regularity disagrees with the v-number");
            return d;
        }
    }
}

// Standard monomials appearing with nonzero coefficient in every indicator
// function.
inline std::vector<Monomial> essential_monomials(const IndicatorSet& ind) {
    const Field& F = ind.points().field();
    std::vector<Monomial> out;
    for (const Monomial& m : ind.fp().monomials) {
        bool everywhere = true;
        for (const Polynomial& f : ind.functions())
            if (F.is_zero(f.coeff(m))) { everywhere = false; break; }
        if (everywhere) out.push_back(m);
    }
    return out;
}

}  // namespace evc
