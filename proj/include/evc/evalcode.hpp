#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evc/groebner.hpp"
#include "evc/linalg.hpp"

namespace evc {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// Linear [m, k] code held by a full-rank generator matrix in reduced row
// echelon form, so two codes are equal iff their generators are equal.
class LinearCode {
public:
    LinearCode(const Field& field, int length, const Matrix& rows) : field_(&field), length_(length), gen_(field, 0, length) {
        if (rows.cols() != length)
            throw DomainError("code/length", "generator width does not match code length");
        RrefResult rr = rref(rows);
        Matrix g(field, rr.rank, length);
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < length; ++j) g.at(i, j) = rr.reduced.at(i, j);
        gen_ = std::move(g);
    }

    static LinearCode from_rows(const Field& field, const std::vector<std::vector<Fq>>& rows, int length) {
        return LinearCode(field, length, Matrix::from_rows(field, rows, length));
    }

    const Field& field() const { return *field_; }
    int length() const { return length_; }
    int dim() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    bool contains(const std::vector<Fq>& word) const {
        std::vector<std::vector<Fq>> rows;
        for (int i = 0; i < gen_.rows(); ++i) rows.push_back(gen_.row(i));
        rows.push_back(word);
        return rref(Matrix::from_rows(*field_, rows, length_)).rank == dim();
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.length_ == b.length_ && a.gen_ == b.gen_;
    }
    friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

private:
    const Field* field_;
    int length_;
    Matrix gen_;
};

inline std::vector<Fq> evaluate_at_points(const Polynomial& f, const PointSet& X) {
    if (f.nvars() != X.dim())
        throw DomainError("poly/dimension", "polynomial ring does not match point dimension");
    std::vector<Fq> v(X.size());
    for (int i = 0; i < X.size(); ++i) v[i] = f.eval(X[i]);
    return v;
}

// Image of span(space) under the evaluation map.
inline LinearCode evaluate_space(const std::vector<Polynomial>& space, const PointSet& X) {
    std::vector<std::vector<Fq>> rows;
    rows.reserve(space.size());
    for (const Polynomial& f : space) rows.push_back(evaluate_at_points(f, X));
    if (rows.empty()) return LinearCode(X.field(), X.size(), Matrix(X.field(), 0, X.size()));
    return LinearCode::from_rows(X.field(), rows, X.size());
}

// Basis of the unique subspace of the footprint span evaluating to the same
// code: remainders of the generators followed by Gaussian normalization.
inline std::vector<Polynomial> standard_function_space(const std::vector<Polynomial>& space,
                                                       const GroebnerBasis& gb) {
    std::vector<Polynomial> remainders;
    for (const Polynomial& f : space) {
        Polynomial r = remainder(f, gb);
        if (!r.is_zero()) remainders.push_back(std::move(r));
    }
    return basis_algorithm(std::move(remainders), gb.order);
}

inline std::vector<Polynomial> standard_function_space(const std::vector<Polynomial>& space,
                                                       const PointSet& X, MonomialOrder ord) {
    return standard_function_space(space, vanishing_ideal(X, ord).gb);
}

// Coefficient matrix of the polynomials over the footprint columns sorted
// descending, in RREF: the canonical form for comparing subspaces of the
// standard span.
inline Matrix space_canonical_matrix(const std::vector<Polynomial>& polys, const Footprint& fp) {
    if (polys.empty()) throw DomainError("space/empty", "no polynomials given");
    const Field& F = polys.front().field();
    std::vector<Monomial> cols(fp.monomials.rbegin(), fp.monomials.rend());
    Matrix m(F, static_cast<int>(polys.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = polys[i].coeff(cols[j]);
    return rref(m).reduced;
}

inline bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                      const Footprint& fp) {
    auto canonical_rows = [&](const std::vector<Polynomial>& polys) {
        std::vector<std::vector<Fq>> rows;
        if (polys.empty()) return rows;
        const Field& F = polys.front().field();
        Matrix m = space_canonical_matrix(polys, fp);
        for (int i = 0; i < m.rows(); ++i) {
            std::vector<Fq> r = m.row(i);
            bool zero = true;
            for (Fq c : r)
                if (!F.is_zero(c)) { zero = false; break; }
            if (!zero) rows.push_back(std::move(r));
        }
        return rows;
    };
    return canonical_rows(a) == canonical_rows(b);
}

struct MonomialSpaceCheck {
    bool is_monomial = false;
    std::vector<Monomial> basis;  // ascending when is_monomial
};

// A subspace of the footprint span is a monomial space iff its canonical RREF
// rows are single terms.
inline MonomialSpaceCheck monomial_space_check(const std::vector<Polynomial>& basis,
                                               const Footprint& fp) {
    MonomialSpaceCheck out;
    if (basis.empty()) { out.is_monomial = true; return out; }
    const Field& F = basis.front().field();
    Matrix m = space_canonical_matrix(basis, fp);
    std::vector<Monomial> cols(fp.monomials.rbegin(), fp.monomials.rend());
    for (int i = 0; i < m.rows(); ++i) {
        int nonzero = 0, where = -1;
        for (int j = 0; j < m.cols(); ++j)
            if (!F.is_zero(m.at(i, j))) { ++nonzero; where = j; }
        if (nonzero == 0) continue;
        if (nonzero > 1) return {};
        out.basis.push_back(cols[where]);
    }
    std::sort(out.basis.begin(), out.basis.end(), OrderLess{fp.order});
    out.is_monomial = true;
    return out;
}

// Code of the standard function space of span(space) with the supporting data
// computed once and cached.
class EvaluationCode {
public:
    EvaluationCode(std::vector<Polynomial> space, PointSet X, MonomialOrder ord)
        : points_(std::move(X)),
          order_(ord),
          space_(std::move(space)),
          ideal_(vanishing_ideal(points_, ord)),
          standard_basis_(standard_function_space(space_, ideal_.gb)),
          code_(evaluate_space(space_, points_)) {}

    const PointSet& points() const { return points_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Polynomial>& space() const { return space_; }
    const GroebnerBasis& gb() const { return ideal_.gb; }
    const Footprint& fp() const { return ideal_.fp; }
    const std::vector<Polynomial>& standard_basis() const { return standard_basis_; }
    const LinearCode& code() const { return code_; }

    MonomialSpaceCheck standard_monomial_check() const {
        return monomial_space_check(standard_basis_, ideal_.fp);
    }

private:
    PointSet points_;
    MonomialOrder order_;
    std::vector<Polynomial> space_;
    VanishingIdeal ideal_;
    std::vector<Polynomial> standard_basis_;
    LinearCode code_;
};

inline std::pair<bool, std::vector<Monomial>> is_standard_monomial_code(
    const std::vector<Polynomial>& space, const PointSet& X, MonomialOrder ord) {
    EvaluationCode ec(space, X, ord);
    MonomialSpaceCheck chk = ec.standard_monomial_check();
    return {chk.is_monomial, chk.basis};
}

namespace detail {

struct DistanceScan {
    const Field& F;
    const Matrix& gen;
    int k, m;
    std::uint32_t q;
    std::vector<std::vector<Fq>> partial;
    int best;

    DistanceScan(const Field& field, const Matrix& g)
        : F(field), gen(g), k(g.rows()), m(g.cols()), q(field.q()),
          partial(static_cast<std::size_t>(k) + 1, std::vector<Fq>(m, Field::zero())),
          best(m + 1) {}

    void run(int level, bool nonzero) {
        if (best == 1) return;
        if (level == k) {
            if (!nonzero) return;
            int w = 0;
            for (int j = 0; j < m; ++j)
                if (!F.is_zero(partial[level][j])) ++w;
            if (w < best) best = w;
            return;
        }
        for (std::uint32_t c = 0; c < q; ++c) {
            if (c == 0) {
                partial[level + 1] = partial[level];
            } else {
                Fq fc{c};
                for (int j = 0; j < m; ++j)
                    partial[level + 1][j] = F.add(partial[level][j], F.mul(fc, gen.at(level, j)));
            }
            run(level + 1, nonzero || c != 0);
            if (best == 1) return;
        }
    }
};

}  // namespace detail

// Minimum Hamming weight over all nonzero codewords, by exhaustive scan of
// the q^k message space in lexicographic order of field-element codes.
inline int min_distance(const LinearCode& code,
                        std::uint64_t budget = kDefaultEnumerationBudget) {
    if (code.dim() == 0)
        throw DomainError("code/zero-dimension", "minimum distance undefined for the zero code");
    long double total = 1;
    for (int i = 0; i < code.dim(); ++i) total *= code.field().q();
    if (total > static_cast<long double>(budget))
        throw DomainError("distance/budget",
                          "enumeration of q^k messages exceeds the budget; raise it to override");
    detail::DistanceScan scan(code.field(), code.generator());
    scan.run(0, false);
    return scan.best;
}

}  // namespace evc
