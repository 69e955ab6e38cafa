#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "evc/field.hpp"

namespace evc {

// Monomial t1^e1 * ... * ts^es, kept as its exponent vector.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial times(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    // Exact quotient; caller guarantees m.divides(*this).
    Monomial quotient(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    // Container ordering only; mathematical comparisons go through order_compare.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
};

enum class OrderKind { GrevLex, GrLex, Lex };

// Monomial order with variable precedence t1 > t2 > ... > ts.  GrevLex and
// GrLex compare total degree first.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;

    friend bool operator==(MonomialOrder a, MonomialOrder b) { return a.kind == b.kind; }
};

// Returns negative when a < b, zero when equal, positive when a > b.
inline int order_compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (a.nvars() != b.nvars())
        throw DomainError("poly/dimension", "monomials live in different rings");
    int n = a.nvars();
    if (ord.kind != OrderKind::Lex) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (ord.kind == OrderKind::GrevLex) {
        // ties broken by the rightmost nonzero exponent difference, reversed
        for (int i = n - 1; i >= 0; --i) {
            int d = a.e[i] - b.e[i];
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (int i = 0; i < n; ++i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

inline bool order_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    return order_compare(a, b, ord) < 0;
}

// Comparator object for containers sorted by a monomial order.
struct OrderLess {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return order_less(a, b, ord); }
};

// Sparse multivariate polynomial over GF(q).  Zero coefficients are never
// stored; the zero polynomial has an empty term map.
class Polynomial {
public:
    Polynomial(const Field& field, int nvars) : field_(&field), nvars_(nvars) {}

    static Polynomial monomial(const Field& field, const Monomial& m, Fq c) {
        Polynomial f(field, m.nvars());
        if (!field.is_zero(c)) f.terms_[m] = c;
        return f;
    }

    static Polynomial constant(const Field& field, int nvars, Fq c) {
        return monomial(field, Monomial::one(nvars), c);
    }

    const Field& field() const { return *field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Fq>& terms() const { return terms_; }

    Fq coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Field::zero() : it->second;
    }

    void add_term(const Monomial& m, Fq c) {
        if (field_->is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = field_->add(it->second, c);
            if (field_->is_zero(it->second)) terms_.erase(it);
        }
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    Monomial leading_monomial(MonomialOrder ord) const {
        return leading_term(ord).first;
    }

    Fq leading_coeff(MonomialOrder ord) const {
        return leading_term(ord).second;
    }

    std::pair<Monomial, Fq> leading_term(MonomialOrder ord) const {
        if (terms_.empty())
            throw DomainError("poly/zero-leading-term", "zero polynomial has no leading term");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order_less(best->first, it->first, ord)) best = it;
        return {best->first, best->second};
    }

    // Terms sorted by the given order, descending by default.
    std::vector<std::pair<Monomial, Fq>> sorted_terms(MonomialOrder ord, bool descending = true) const {
        std::vector<std::pair<Monomial, Fq>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            int c = order_compare(a.first, b.first, ord);
            return descending ? c > 0 : c < 0;
        });
        return out;
    }

    Fq eval(std::span<const Fq> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw DomainError("poly/dimension", "point dimension does not match ring");
        Fq total = Field::zero();
        for (const auto& [m, c] : terms_) {
            Fq val = c;
            for (int i = 0; i < nvars_; ++i)
                if (m.e[i] > 0) val = field_->mul(val, field_->pow(point[i], m.e[i]));
            total = field_->add(total, val);
        }
        return total;
    }

    Polynomial scaled(Fq c) const {
        Polynomial r(*field_, nvars_);
        if (field_->is_zero(c)) return r;
        for (const auto& [m, a] : terms_) r.terms_[m] = field_->mul(a, c);
        return r;
    }

    Polynomial monic(MonomialOrder ord) const {
        if (is_zero()) return *this;
        return scaled(field_->inv(leading_coeff(ord)));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, a.field_->neg(c));
        return r;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(*a.field_, a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = a.field_->neg(c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r(*a.field_, a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.times(mb), a.field_->mul(ca, cb));
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && *a.field_ == *b.field_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void check_compatible(const Polynomial& other) const {
        if (nvars_ != other.nvars_ || *field_ != *other.field_)
            throw DomainError("poly/ring-mismatch", "polynomials live in different rings");
    }

    const Field* field_;
    int nvars_;
    std::map<Monomial, Fq> terms_;
};

// True when f is a scalar multiple of g (both nonzero, same scalar for every
// term); used for projective comparisons against published indicator lists.
inline bool proportional(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.num_terms() != g.num_terms()) return false;
    const Field& F = f.field();
    Fq ratio = Field::zero();
    for (const auto& [m, c] : f.terms()) {
        Fq d = g.coeff(m);
        if (F.is_zero(d)) return false;
        Fq r = F.div(c, d);
        if (F.is_zero(ratio)) ratio = r;
        else if (!(ratio == r)) return false;
    }
    return true;
}

}  // namespace evc
