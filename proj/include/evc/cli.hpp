#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evc/evc.hpp"
#include "evc/json.hpp"

namespace evc::cli {

// One CLI invocation: verb plus validated payload, dispatched to the library.
struct JobRequest {
    std::string verb;
    std::optional<std::string> field_arg;     // inline JSON descriptor
    std::optional<std::string> points_arg;    // file or inline JSON
    std::optional<std::string> space_arg;     // file or inline, one polynomial per line
    std::optional<std::string> monomials_arg; // file or inline, comma/newline separated
    std::optional<int> degree;
    std::optional<std::string> gamma1_arg, gamma2_arg;  // JSON exponent lists
    std::string family_kind;                  // torus | affine | cartesian
    std::vector<std::uint32_t> orders;
    std::vector<bool> zeros;
    std::uint64_t budget = kDefaultEnumerationBudget;
    bool use_dual = false;
    bool assert_holds = false;
    std::string order_name = "grevlex";
    std::string format = "json";

    MonomialOrder order() const {
        if (order_name == "grevlex") return {OrderKind::GrevLex};
        if (order_name == "grlex") return {OrderKind::GrLex};
        throw ParseError("unknown order: " + order_name);
    }
};

namespace detail {

inline std::string read_arg_or_file(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

inline nlohmann::json parse_json_text(const std::string& text, const char* what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string("malformed JSON for ") + what);
    return j;
}

struct Workspace {
    std::shared_ptr<const Field> field;
    std::shared_ptr<const PointSet> points;
    MonomialOrder ord{};

    const PointSet& X() const {
        if (!points) throw ParseError("this verb needs --points");
        return *points;
    }
    const Field& F() const {
        if (field) return *field;
        throw ParseError("this verb needs --points or --field");
    }
};

inline Workspace make_workspace(const JobRequest& req) {
    Workspace ws;
    ws.ord = req.order();
    if (req.points_arg) {
        ParsedPoints pp = parse_pointset(parse_json_text(read_arg_or_file(*req.points_arg), "--points"));
        ws.field = pp.field;
        ws.points = pp.points;
        if (req.field_arg && !(*ws.field == parse_field(parse_json_text(*req.field_arg, "--field"))))
            throw ParseError("--field disagrees with the field of --points");
    } else if (req.field_arg) {
        ws.field = std::make_shared<const Field>(parse_field(parse_json_text(*req.field_arg, "--field")));
    }
    return ws;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n' || c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    std::erase_if(out, [](const std::string& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos;
    });
    return out;
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == '\n' || c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Defining space: --degree d means all monomials of degree at most d,
// --space supplies explicit polynomials.
inline std::vector<Polynomial> resolve_space(const JobRequest& req, const Workspace& ws) {
    if (req.degree && req.space_arg)
        throw ParseError("--degree and --space are mutually exclusive");
    if (req.degree) {
        if (*req.degree < -1) throw ParseError("--degree must be at least -1");
        return degree_space(ws.X().field(), ws.X().dim(), *req.degree);
    }
    if (!req.space_arg) throw ParseError("this verb needs --space or --degree");
    std::vector<Polynomial> out;
    for (const std::string& line : split_lines(read_arg_or_file(*req.space_arg)))
        out.push_back(parse_polynomial(ws.X().field(), ws.X().dim(), line));
    if (out.empty()) throw ParseError("--space is empty");
    return out;
}

inline std::vector<Monomial> resolve_monomials(const std::string& arg, const Field& F, int nvars) {
    std::vector<Monomial> out;
    for (const std::string& tok : split_list(read_arg_or_file(arg)))
        out.push_back(parse_monomial(F, nvars, tok));
    if (out.empty()) throw ParseError("monomial list is empty");
    return out;
}

inline std::vector<Monomial> parse_gamma(const std::string& arg, int nvars) {
    nlohmann::json j = parse_json_text(read_arg_or_file(arg), "exponent list");
    if (!j.is_array()) throw ParseError("exponent list must be a JSON array");
    std::vector<Monomial> out;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != nvars)
            throw ParseError("each exponent vector must have one entry per variable");
        std::vector<int> e;
        for (const auto& c : row) {
            if (!c.is_number_integer() || c.get<int>() < 0)
                throw ParseError("exponents must be nonnegative integers");
            e.push_back(c.get<int>());
        }
        out.emplace_back(std::move(e));
    }
    return out;
}

inline CartesianSpec resolve_family(const JobRequest& req, const Workspace& ws) {
    if (req.orders.empty()) throw ParseError("family specs need --orders");
    if (req.family_kind == "torus") return torus_spec(ws.F(), req.orders);
    if (req.family_kind == "affine") return affine_spec(ws.F(), req.orders);
    if (req.family_kind == "cartesian") {
        if (req.zeros.size() != req.orders.size())
            throw ParseError("cartesian specs need one --zeros flag per axis");
        return make_cartesian_spec(ws.F(), req.orders, req.zeros);
    }
    throw ParseError("unknown family kind: " + req.family_kind);
}

inline ordered_json beta_to_json(const Field& F, const std::vector<Fq>& beta) {
    ordered_json arr = ordered_json::array();
    for (Fq b : beta) arr.push_back(element_to_json(F, b));
    return arr;
}

inline void emit(const ordered_json& j, const JobRequest& req, std::ostream& out) {
    if (req.format == "text") {
        for (const auto& [key, value] : j.items()) {
            out << key << ": ";
            if (value.is_string()) out << value.get<std::string>();
            else out << value.dump();
            out << "\n";
        }
    } else {
        out << j.dump(2) << "\n";
    }
}

inline ordered_json dispatch(const JobRequest& req) {
    Workspace ws = make_workspace(req);
    ordered_json j;

    if (req.verb == "vanishing-ideal" || req.verb == "footprint") {
        VanishingIdeal vi = vanishing_ideal(ws.X(), ws.ord);
        if (req.verb == "vanishing-ideal") j["groebner_basis"] = polys_to_json(vi.gb.gens, ws.ord);
        j["footprint"] = monomials_to_json(vi.fp.monomials);
        j["r0"] = vi.fp.max_degree();
        return j;
    }
    if (req.verb == "code" || req.verb == "dual" || req.verb == "min-distance") {
        LinearCode c = evaluate_space(resolve_space(req, ws), ws.X());
        if (req.verb == "min-distance") {
            if (req.use_dual) c = dual_code(c);
            j["min_distance"] = min_distance(c, req.budget);
            return j;
        }
        if (req.verb == "dual") c = dual_code(c);
        return code_to_json(c);
    }
    if (req.verb == "algebraic-dual") {
        IndicatorSet ind(ws.X(), ws.ord);
        AlgebraicDual dual = algebraic_dual(resolve_space(req, ws), ind);
        j["basis"] = polys_to_json(dual.basis, ws.ord);
        DualMonomialCheck chk = is_dual_monomial(resolve_space(req, ws), ind);
        j["monomial"] = chk.is_monomial;
        if (chk.is_monomial) j["monomial_basis"] = monomials_to_json(chk.certificate);
        return j;
    }
    if (req.verb == "indicators" || req.verb == "vnumber") {
        IndicatorSet ind(ws.X(), ws.ord);
        VNumbers vn = v_numbers(ind);
        if (req.verb == "indicators") {
            j["indicators"] = polys_to_json(ind.functions(), ws.ord);
            j["v_local"] = vn.local;
            j["v_global"] = vn.global;
            j["r0"] = ind.fp().max_degree();
            j["essential"] = monomials_to_json(essential_monomials(ind));
        } else {
            j["v_local"] = vn.local;
            j["v_global"] = vn.global;
        }
        return j;
    }
    if (req.verb == "hvector") {
        HilbertProfile profile = hilbert_profile(ws.X(), ws.ord);
        SymmetryReport sym = symmetry_and_duality_condition(profile);
        j["h_vector"] = profile.h;
        j["r0"] = profile.r0;
        j["symmetric"] = sym.h_symmetric;
        j["hilbert_complement"] = sym.complement_holds;
        if (!sym.complement_holds) j["failing_degrees"] = sym.failing_degrees;
        return j;
    }
    if (req.verb == "criterion") {
        CriterionReport rep = duality_criterion(ws.X(), ws.ord);
        j["holds"] = rep.holds;
        j["hilbert_complement"] = rep.hilbert_complement;
        j["v_numbers_equal_r0"] = rep.v_numbers_equal_r0;
        j["r0"] = rep.r0;
        if (rep.holds) {
            j["g"] = poly_to_string(*rep.g, ws.ord);
            j["beta"] = beta_to_json(ws.X().field(), rep.beta);
        }
        if (req.assert_holds && !rep.holds)
            throw DomainError("criterion/fails", "duality criterion does not hold on this set");
        return j;
    }
    if (req.verb == "pairing") {
        if (!req.gamma1_arg || !req.gamma2_arg) throw ParseError("pairing needs --gamma1 and --gamma2");
        IndicatorSet ind(ws.X(), ws.ord);
        std::vector<Fq> beta = combinatorial_pairing(parse_gamma(*req.gamma1_arg, ws.X().dim()),
                                                     parse_gamma(*req.gamma2_arg, ws.X().dim()), ind);
        j["beta"] = beta_to_json(ws.X().field(), beta);
        return j;
    }
    if (req.verb == "family") {
        CartesianSpec spec = resolve_family(req, ws);
        PointSet X = cartesian_pointset(spec);
        VanishingIdeal vi = vanishing_ideal(X, ws.ord);
        j["kind"] = req.family_kind;
        j["points"] = pointset_to_json(X);
        j["groebner_basis"] = polys_to_json(vi.gb.gens, ws.ord);
        j["footprint"] = monomials_to_json(vi.fp.monomials);
        j["r0"] = spec.r0();
        if (req.monomials_arg) {
            std::vector<Monomial> A = resolve_monomials(*req.monomials_arg, ws.F(), spec.dim());
            if (spec.is_torus()) {
                j["dual_monomials"] = monomials_to_json(torus_monomial_dual(A, spec, ws.ord));
            } else if (spec.is_affine()) {
                bool wdc = weakly_divisor_closed(A, spec);
                j["weakly_divisor_closed"] = wdc;
                std::optional<std::vector<Monomial>> dual = affine_monomial_dual(A, spec, ws.ord);
                if (dual) j["dual_monomials"] = monomials_to_json(*dual);
                else j["dual_monomials"] = nullptr;
            } else {
                throw ParseError("--monomials needs a pure torus or pure affine family");
            }
        }
        return j;
    }
    if (req.verb == "rm") {
        if (!req.degree) throw ParseError("rm needs --degree");
        if (req.points_arg) {
            EvaluationCode ec = reed_muller(ws.X(), *req.degree, ws.ord);
            j["code"] = code_to_json(ec.code());
            j["standard_basis"] = polys_to_json(ec.standard_basis(), ws.ord);
            return j;
        }
        CartesianSpec spec = resolve_family(req, ws);
        PointSet X = cartesian_pointset(spec);
        EvaluationCode ec = reed_muller(X, *req.degree, ws.ord);
        j["code"] = code_to_json(ec.code());
        j["dual_monomials"] = monomials_to_json(affine_rm_dual(*req.degree, spec, ws.ord));
        return j;
    }
    if (req.verb == "self-dual") {
        if (req.points_arg) return {{"code", code_to_json(self_dual_code(ws.X(), ws.ord))}};
        PointSet X = cartesian_pointset(resolve_family(req, ws));
        j["code"] = code_to_json(self_dual_code(X, ws.ord));
        return j;
    }
    throw ParseError("unknown verb: " + req.verb);
}

}  // namespace detail

// Parses argv-style arguments, runs one verb, writes one report to `out`.
// Exit status: 0 success, 1 domain error, 2 usage or parse error.
inline int run(std::vector<std::string> args, std::ostream& out) {
    JobRequest req;
    CLI::App app{"evaluation codes over finite fields", "evc"};
    app.require_subcommand(1);

    const std::vector<std::string> verbs = {
        "vanishing-ideal", "footprint", "code", "min-distance", "dual", "algebraic-dual",
        "indicators", "vnumber", "hvector", "criterion", "pairing", "family", "rm", "self-dual"};
    for (const std::string& verb : verbs) {
        CLI::App* sub = app.add_subcommand(verb);
        sub->add_option("--points", req.points_arg, "point set: JSON file or inline JSON");
        sub->add_option("--field", req.field_arg, "field descriptor as inline JSON");
        sub->add_option("--order", req.order_name, "monomial order")
            ->check(CLI::IsMember({"grevlex", "grlex"}));
        sub->add_option("--format", req.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--budget", req.budget, "enumeration budget for distance scans");
        if (verb == "code" || verb == "dual" || verb == "min-distance" || verb == "algebraic-dual") {
            sub->add_option("--space", req.space_arg, "polynomials, one per line (file or inline)");
            sub->add_option("--degree", req.degree, "use all monomials of total degree <= d");
        }
        if (verb == "rm") sub->add_option("--degree", req.degree, "Reed-Muller degree")->required();
        if (verb == "min-distance") sub->add_flag("--dual", req.use_dual, "measure the dual code");
        if (verb == "criterion") sub->add_flag("--assert", req.assert_holds, "exit 1 unless the criterion holds");
        if (verb == "pairing") {
            sub->add_option("--gamma1", req.gamma1_arg, "JSON list of exponent vectors");
            sub->add_option("--gamma2", req.gamma2_arg, "JSON list of exponent vectors");
        }
        if (verb == "family" || verb == "rm" || verb == "self-dual") {
            sub->add_option("--kind", req.family_kind, "torus | affine | cartesian")
                ->default_val(std::string("affine"));
            sub->add_option("--orders", req.orders, "subgroup order per axis");
            sub->add_option("--zeros", req.zeros, "per-axis zero flags (cartesian)");
        }
        if (verb == "family") sub->add_option("--monomials", req.monomials_arg, "monomial set (file or inline)");
        sub->callback([&req, verb]() { req.verb = verb; });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        out << "{\"error\": {\"code\": \"cli/usage\", \"message\": " << ordered_json(e.what()).dump()
            << "}}" << "\n";
        return 2;
    }

    try {
        detail::emit(detail::dispatch(req), req, out);
        return 0;
    } catch (const DomainError& e) {
        ordered_json j;
        j["error"] = {{"code", e.code()}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    } catch (const ParseError& e) {
        ordered_json j;
        j["error"] = {{"code", "input/parse"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 2;
    }
}

}  // namespace evc::cli
