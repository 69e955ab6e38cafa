#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "evc/evalcode.hpp"
#include "evc/text.hpp"

namespace evc {

using ordered_json = nlohmann::ordered_json;

// Field descriptor {"p": int, "v": int, "irreducible": [c0..cv]?}.
inline ordered_json field_to_json(const Field& F) {
    ordered_json j;
    j["p"] = F.p();
    j["v"] = F.v();
    if (F.v() > 1) j["irreducible"] = F.irreducible();
    return j;
}

inline Field parse_field(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("v"))
        throw ParseError("field descriptor needs \"p\" and \"v\"");
    if (!j["p"].is_number_integer() || !j["v"].is_number_integer())
        throw ParseError("field descriptor entries must be integers");
    std::optional<std::vector<int>> irr;
    if (j.contains("irreducible")) {
        if (!j["irreducible"].is_array()) throw ParseError("irreducible must be a coefficient list");
        irr = j["irreducible"].get<std::vector<int>>();
    }
    return Field(j["p"].get<int>(), j["v"].get<int>(), irr);
}

// Element: plain integer for v = 1, coefficient list [c0..c_{v-1}] for v > 1.
inline Fq parse_element(const Field& F, const nlohmann::json& j) {
    if (j.is_number_integer()) {
        if (F.v() != 1) throw ParseError("extension-field elements must be coefficient lists");
        return F.from_int(j.get<long long>());
    }
    if (j.is_array()) {
        std::vector<long long> cs;
        for (const auto& c : j) {
            if (!c.is_number_integer()) throw ParseError("element coefficients must be integers");
            cs.push_back(c.get<long long>());
        }
        return F.from_coeffs(cs);
    }
    throw ParseError("element must be an integer or a coefficient list");
}

inline ordered_json element_to_json(const Field& F, Fq a) {
    if (F.v() == 1) return static_cast<long long>(a.code);
    return ordered_json(F.coeffs(a));
}

// Point set {"field": descriptor, "points": [[elem,...],...]}.  The field is
// heap-held so the point set's reference to it stays valid across moves.
struct ParsedPoints {
    std::shared_ptr<const Field> field;
    std::shared_ptr<const PointSet> points;
};

inline ParsedPoints parse_pointset(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("points"))
        throw ParseError("point set needs \"field\" and \"points\"");
    auto F = std::make_shared<const Field>(parse_field(j["field"]));
    if (!j["points"].is_array() || j["points"].empty())
        throw ParseError("\"points\" must be a nonempty array");
    std::vector<std::vector<Fq>> pts;
    for (const auto& row : j["points"]) {
        if (!row.is_array() || row.empty()) throw ParseError("each point must be a nonempty array");
        std::vector<Fq> p;
        for (const auto& c : row) p.push_back(parse_element(*F, c));
        pts.push_back(std::move(p));
    }
    return {F, std::make_shared<const PointSet>(*F, std::move(pts))};
}

inline ordered_json pointset_to_json(const PointSet& X) {
    ordered_json j;
    j["field"] = field_to_json(X.field());
    ordered_json pts = ordered_json::array();
    for (const auto& p : X.points()) {
        ordered_json row = ordered_json::array();
        for (Fq c : p) row.push_back(element_to_json(X.field(), c));
        pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

inline ordered_json code_to_json(const LinearCode& c) {
    ordered_json j;
    j["length"] = c.length();
    j["k"] = c.dim();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < c.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (Fq x : c.generator().row(i)) row.push_back(element_to_json(c.field(), x));
        rows.push_back(row);
    }
    j["generator"] = rows;
    return j;
}

inline ordered_json polys_to_json(const std::vector<Polynomial>& polys, MonomialOrder ord) {
    ordered_json arr = ordered_json::array();
    for (const Polynomial& f : polys) arr.push_back(poly_to_string(f, ord));
    return arr;
}

inline ordered_json monomials_to_json(const std::vector<Monomial>& ms) {
    ordered_json arr = ordered_json::array();
    for (const Monomial& m : ms) arr.push_back(monomial_to_string(m));
    return arr;
}

}  // namespace evc
