#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "evc/poly.hpp"

namespace evc {

// Balanced residue for prime-field printing: 2 -> -1 over GF(3), 5 -> -2 over
// GF(7).  Ties go to the positive representative.
inline long long balanced_residue(int p, std::uint32_t code) {
    long long c = code;
    return 2 * c > p ? c - p : c;
}

inline std::string element_to_string(const Field& F, Fq a) {
    if (F.v() == 1) return std::to_string(balanced_residue(F.p(), a.code));
    std::string s = "[";
    const auto cs = F.coeffs(a);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cs[i]);
    }
    return s + "]";
}

inline std::string monomial_to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(i + 1);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

// Terms descending by the order; coefficients as balanced integers on prime
// fields and as coefficient lists on extensions, e.g. "t1*t3 - t2 + 1".
inline std::string poly_to_string(const Polynomial& f, MonomialOrder ord) {
    if (f.is_zero()) return "0";
    const Field& F = f.field();
    std::string s;
    for (const auto& [m, c] : f.sorted_terms(ord)) {
        bool negative = false;
        std::string coeff;
        if (F.v() == 1) {
            long long b = balanced_residue(F.p(), c.code);
            negative = b < 0;
            long long abs = negative ? -b : b;
            if (abs != 1 || m.is_one()) coeff = std::to_string(abs);
        } else if (!(c == F.one()) || m.is_one()) {
            coeff = element_to_string(F, c);
        }
        if (s.empty()) s += negative ? "-" : "";
        else s += negative ? " - " : " + ";
        if (!coeff.empty()) {
            s += coeff;
            if (!m.is_one()) s += "*";
        }
        if (!m.is_one()) s += monomial_to_string(m);
    }
    return s;
}

namespace detail {

class PolyParser {
public:
    PolyParser(const Field& field, int nvars, const std::string& text)
        : F_(field), nvars_(nvars), s_(text) {}

    Polynomial parse() {
        Polynomial out(F_, nvars_);
        skip_ws();
        if (done()) throw ParseError("empty polynomial");
        bool negative = consume_sign();
        for (;;) {
            parse_term(out, negative);
            skip_ws();
            if (done()) break;
            char c = s_[pos_];
            if (c == '+') negative = false;
            else if (c == '-') negative = true;
            else throw ParseError("expected '+' or '-' near '" + s_.substr(pos_) + "'");
            ++pos_;
            skip_ws();
        }
        return out;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        if (!done() && s_[pos_] == '-') { ++pos_; skip_ws(); return true; }
        if (!done() && s_[pos_] == '+') { ++pos_; skip_ws(); }
        return false;
    }

    long long parse_int() {
        skip_ws();
        bool neg = false;
        if (!done() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
        if (done() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer in polynomial text");
        long long n = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > (1LL << 40)) throw ParseError("integer literal too large");
            ++pos_;
        }
        return neg ? -n : n;
    }

    Fq parse_coefficient() {
        skip_ws();
        if (!done() && s_[pos_] == '[') {
            ++pos_;
            std::vector<long long> cs;
            for (;;) {
                cs.push_back(parse_int());
                skip_ws();
                if (done()) throw ParseError("unterminated coefficient list");
                if (s_[pos_] == ']') { ++pos_; break; }
                if (s_[pos_] != ',') throw ParseError("expected ',' in coefficient list");
                ++pos_;
            }
            return F_.from_coeffs(cs);
        }
        return F_.from_int(parse_int());
    }

    void parse_term(Polynomial& out, bool negative) {
        skip_ws();
        if (done()) throw ParseError("trailing operator in polynomial text");
        Fq c = F_.one();
        Monomial m = Monomial::one(nvars_);
        bool saw_factor = false;
        if (s_[pos_] == '[' || std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            c = parse_coefficient();
            saw_factor = true;
            skip_ws();
            if (!done() && s_[pos_] == '*') { ++pos_; skip_ws(); }
            else if (!done() && s_[pos_] == 't')
                throw ParseError("expected '*' between coefficient and variable");
        }
        while (!done() && s_[pos_] == 't') {
            ++pos_;
            long long idx = parse_int();
            if (idx < 1 || idx > nvars_)
                throw ParseError("variable t" + std::to_string(idx) + " outside ring with " +
                                 std::to_string(nvars_) + " variables");
            long long e = 1;
            skip_ws();
            if (!done() && s_[pos_] == '^') {
                ++pos_;
                e = parse_int();
                if (e < 0) throw ParseError("negative exponent");
            }
            m.e[idx - 1] += static_cast<int>(e);
            saw_factor = true;
            skip_ws();
            if (!done() && s_[pos_] == '*') { ++pos_; skip_ws(); }
            else break;
        }
        if (!saw_factor) throw ParseError("expected term near '" + s_.substr(pos_) + "'");
        if (negative) c = F_.neg(c);
        out.add_term(m, c);
    }

    const Field& F_;
    int nvars_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const Field& field, int nvars, const std::string& text) {
    return detail::PolyParser(field, nvars, text).parse();
}

inline Monomial parse_monomial(const Field& field, int nvars, const std::string& text) {
    Polynomial f = parse_polynomial(field, nvars, text);
    if (f.num_terms() != 1 || !(f.terms().begin()->second == field.one()))
        throw ParseError("expected a monomial: " + text);
    return f.terms().begin()->first;
}

}  // namespace evc
