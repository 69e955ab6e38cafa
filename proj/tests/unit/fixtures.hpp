#pragma once

#include <initializer_list>
#include <vector>

#include "evc/evc.hpp"

namespace fx {

inline evc::MonomialOrder grevlex() { return {evc::OrderKind::GrevLex}; }

inline std::vector<evc::Fq> point(const evc::Field& F, std::initializer_list<long long> cs) {
    std::vector<evc::Fq> p;
    for (long long c : cs) p.push_back(F.from_int(c));
    return p;
}

// Eight points in GF(3)^3 whose vanishing ideal has a non-symmetric v-profile.
inline evc::PointSet eight_points_a3(const evc::Field& F3) {
    return evc::PointSet(F3, {point(F3, {1, 1, 1}), point(F3, {1, 1, -1}), point(F3, {0, 0, 0}),
                              point(F3, {0, 0, 1}), point(F3, {0, 0, -1}), point(F3, {0, 1, 0}),
                              point(F3, {0, 1, 1}), point(F3, {0, 1, -1})});
}

// Five points in GF(3)^3: coordinate axes, origin, and a diagonal point.
inline evc::PointSet five_points_a3(const evc::Field& F3) {
    return evc::PointSet(F3, {point(F3, {1, 0, 0}), point(F3, {0, 1, 0}), point(F3, {0, 0, 1}),
                              point(F3, {0, 0, 0}), point(F3, {2, 2, 2})});
}

// Seven points in GF(3)^3 with one point cut out by a degree-1 indicator.
inline evc::PointSet seven_points_a3(const evc::Field& F3) {
    return evc::PointSet(F3, {point(F3, {1, 1, -1}), point(F3, {0, 0, 0}), point(F3, {0, 0, 1}),
                              point(F3, {0, 0, -1}), point(F3, {0, 1, 0}), point(F3, {0, 1, 1}),
                              point(F3, {0, 1, -1})});
}

// Four collinear points {1,3,4,5} in GF(7).
inline evc::PointSet four_points_line7(const evc::Field& F7) {
    return evc::PointSet(F7, {point(F7, {1}), point(F7, {3}), point(F7, {4}), point(F7, {5})});
}

// Five points in GF(3)^2.
inline evc::PointSet five_points_a2(const evc::Field& F3) {
    return evc::PointSet(F3, {point(F3, {0, 0}), point(F3, {1, 0}), point(F3, {0, 1}),
                              point(F3, {1, 1}), point(F3, {0, -1})});
}

inline evc::Polynomial pp(const evc::Field& F, int nvars, const std::string& text) {
    return evc::parse_polynomial(F, nvars, text);
}

inline evc::Monomial mono(const evc::Field& F, int nvars, const std::string& text) {
    return evc::parse_monomial(F, nvars, text);
}

inline std::vector<evc::Polynomial> polys(const evc::Field& F, int nvars,
                                          std::initializer_list<const char*> texts) {
    std::vector<evc::Polynomial> out;
    for (const char* t : texts) out.push_back(pp(F, nvars, t));
    return out;
}

inline std::vector<evc::Monomial> monos(const evc::Field& F, int nvars,
                                        std::initializer_list<const char*> texts) {
    std::vector<evc::Monomial> out;
    for (const char* t : texts) out.push_back(mono(F, nvars, t));
    return out;
}

inline std::vector<evc::Fq> word(const evc::Field& F, std::initializer_list<long long> cs) {
    return point(F, cs);
}

}  // namespace fx
