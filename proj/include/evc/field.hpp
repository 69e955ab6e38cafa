#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evc/errors.hpp"

namespace evc {

// Element of GF(p^v).  The code is the base-p encoding of the coefficient
// vector of the element over GF(p): code = c0 + c1*p + ... + c_{v-1}*p^{v-1}.
struct Fq {
    std::uint32_t code = 0;

    friend constexpr bool operator==(Fq a, Fq b) { return a.code == b.code; }
    friend constexpr bool operator!=(Fq a, Fq b) { return a.code != b.code; }
    friend constexpr bool operator<(Fq a, Fq b) { return a.code < b.code; }
};

// GF(p^v) with q = p^v <= 2^16.  Multiplication runs on exp/log tables built
// from a fixed primitive element; addition is digit-wise mod p.  Instances
// are immutable after construction and safe to share across threads.
class Field {
public:
    Field(int p, int v, std::optional<std::vector<int>> irreducible = std::nullopt)
        : p_(p), v_(v) {
        if (p < 2 || !is_prime(p)) throw DomainError("field/nonprime", "characteristic must be prime");
        if (v < 1) throw DomainError("field/degree", "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (int i = 0; i < v; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > 65536) throw DomainError("field/too-large", "field size bounded to 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);

        if (v_ == 1) {
            if (irreducible) throw DomainError("field/irreducible-unexpected", "prime fields take no modulus");
        } else if (irreducible) {
            irr_ = normalize_modulus(*irreducible);
            if (!is_irreducible(irr_)) throw DomainError("field/reducible", "supplied modulus is reducible");
        } else {
            irr_ = smallest_irreducible();
        }
        build_tables();
    }

    int p() const { return p_; }
    int v() const { return v_; }
    std::uint32_t q() const { return q_; }
    // Coefficient list c0..cv of the modulus (empty for v = 1).
    const std::vector<int>& irreducible() const { return irr_; }
    Fq generator() const { return gen_; }

    static Fq zero() { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    bool is_zero(Fq a) const { return a.code == 0; }

    // Reduces an integer mod p and embeds it in the prime subfield.
    Fq from_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        return Fq{static_cast<std::uint32_t>(r)};
    }

    // Coefficient list c0..c_{v-1} over GF(p); shorter lists are zero-padded.
    Fq from_coeffs(const std::vector<long long>& cs) const {
        if (static_cast<int>(cs.size()) > v_)
            throw DomainError("field/element", "coefficient list longer than extension degree");
        std::uint32_t code = 0, scale = 1;
        for (int i = 0; i < v_; ++i) {
            long long c = i < static_cast<int>(cs.size()) ? cs[i] % p_ : 0;
            if (c < 0) c += p_;
            code += static_cast<std::uint32_t>(c) * scale;
            scale *= p_;
        }
        return Fq{code};
    }

    std::vector<int> coeffs(Fq a) const {
        std::vector<int> cs(v_);
        std::uint32_t c = a.code;
        for (int i = 0; i < v_; ++i) { cs[i] = static_cast<int>(c % p_); c /= p_; }
        return cs;
    }

    Fq add(Fq a, Fq b) const {
        std::uint32_t code = 0, scale = 1, x = a.code, y = b.code;
        for (int i = 0; i < v_; ++i) {
            code += ((x + y) % p_) * scale;
            x /= p_; y /= p_;
            scale *= p_;
        }
        return Fq{code};
    }

    Fq neg(Fq a) const {
        std::uint32_t code = 0, scale = 1, x = a.code;
        for (int i = 0; i < v_; ++i) {
            code += ((p_ - x % p_) % p_) * scale;
            x /= p_;
            scale *= p_;
        }
        return Fq{code};
    }

    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }

    Fq mul(Fq a, Fq b) const {
        if (a.code == 0 || b.code == 0) return zero();
        return Fq{exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)]};
    }

    Fq inv(Fq a) const {
        if (a.code == 0) throw DomainError("field/inverse-of-zero", "zero has no inverse");
        return Fq{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
    }

    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    // a^e for e >= 0, with 0^0 = 1.
    Fq pow(Fq a, long long e) const {
        if (e < 0) throw DomainError("field/negative-exponent", "use inv for negative powers");
        if (e == 0) return one();
        if (a.code == 0) return zero();
        std::uint64_t k = (static_cast<std::uint64_t>(log_[a.code]) * static_cast<std::uint64_t>(e % (q_ - 1))) % (q_ - 1);
        return Fq{exp_[k]};
    }

    int mult_order(Fq a) const {
        if (a.code == 0) throw DomainError("field/order-of-zero", "zero has no multiplicative order");
        return static_cast<int>((q_ - 1) / gcd_u32(log_[a.code], q_ - 1));
    }

    std::vector<Fq> elements() const {
        std::vector<Fq> all(q_);
        for (std::uint32_t c = 0; c < q_; ++c) all[c] = Fq{c};
        return all;
    }

    // The unique subgroup of K* of order d, listed as consecutive powers of
    // generator^((q-1)/d).
    std::vector<Fq> subgroup(std::uint32_t d) const {
        if (d == 0 || (q_ - 1) % d != 0)
            throw DomainError("field/subgroup-order", "subgroup order must divide q-1");
        Fq h = pow(gen_, (q_ - 1) / d);
        std::vector<Fq> out;
        out.reserve(d);
        Fq x = one();
        for (std::uint32_t i = 0; i < d; ++i) { out.push_back(x); x = mul(x, h); }
        return out;
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.v_ == b.v_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b) {
        while (b) { std::uint32_t t = a % b; a = b; b = t; }
        return a;
    }

    std::vector<int> normalize_modulus(const std::vector<int>& raw) const {
        if (static_cast<int>(raw.size()) != v_ + 1)
            throw DomainError("field/irreducible-degree", "modulus must list v+1 coefficients");
        std::vector<int> m(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            int c = raw[i] % p_;
            m[i] = c < 0 ? c + p_ : c;
        }
        if (m.back() != 1) throw DomainError("field/irreducible-monic", "modulus must be monic");
        return m;
    }

    // Remainder of polynomial a (coefficients ascending) modulo monic b, over GF(p).
    std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b) const {
        int db = static_cast<int>(b.size()) - 1;
        for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
            int c = a[i];
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j)
                a[i - db + j] = ((a[i - db + j] - c * b[j]) % p_ + p_ * p_) % p_;
        }
        a.resize(db);
        return a;
    }

    static bool all_zero(const std::vector<int>& a) {
        for (int c : a)
            if (c != 0) return false;
        return true;
    }

    bool is_irreducible(const std::vector<int>& f) const {
        // Trial division by every monic polynomial of degree 1..v/2.
        int deg = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= deg; ++d) {
            std::uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t tail = 0; tail < count; ++tail) {
                std::vector<int> g(d + 1);
                std::uint64_t t = tail;
                for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % p_); t /= p_; }
                g[d] = 1;
                if (all_zero(poly_mod(f, g))) return false;
            }
        }
        return true;
    }

    // Deterministic default modulus: the first irreducible x^v + tail when
    // tails are enumerated in increasing base-p encoding.
    std::vector<int> smallest_irreducible() const {
        std::uint64_t count = 1;
        for (int i = 0; i < v_; ++i) count *= p_;
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            std::vector<int> f(v_ + 1);
            std::uint64_t t = tail;
            for (int i = 0; i < v_; ++i) { f[i] = static_cast<int>(t % p_); t /= p_; }
            f[v_] = 1;
            if (is_irreducible(f)) return f;
        }
        throw DomainError("field/no-irreducible", "no irreducible polynomial found");  // unreachable
    }

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        if (v_ == 1) return (a * b) % p_;
        std::vector<int> da(v_), db(v_);
        std::uint32_t x = a, y = b;
        for (int i = 0; i < v_; ++i) { da[i] = x % p_; x /= p_; }
        for (int i = 0; i < v_; ++i) { db[i] = y % p_; y /= p_; }
        std::vector<int> prod(2 * v_ - 1, 0);
        for (int i = 0; i < v_; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < v_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        std::vector<int> r = poly_mod(prod, irr_);
        std::uint32_t code = 0, scale = 1;
        for (int i = 0; i < v_; ++i) { code += r[i] * scale; scale *= p_; }
        return code;
    }

    std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t n = q_ - 1;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_factors.push_back(n);

        std::uint32_t g = 0;
        for (std::uint32_t c = 1; c < q_; ++c) {
            bool primitive = true;
            for (std::uint32_t r : prime_factors)
                if (pow_raw(c, (q_ - 1) / r) == 1) { primitive = false; break; }
            if (primitive) { g = c; break; }
        }
        gen_ = Fq{g};

        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_raw(x, g);
        }
    }

    int p_, v_;
    std::uint32_t q_;
    std::vector<int> irr_;
    Fq gen_;
    std::vector<std::uint32_t> exp_, log_;
};

}  // namespace evc
