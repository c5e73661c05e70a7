#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "logres/ci.hpp"
#include "logres/stverify.hpp"

namespace logres {

using nlohmann::json;

struct ArrangementFile {
    Arrangement arrangement{0, {}};
    std::optional<std::vector<std::vector<Poly>>> ci_columns;
    unsigned long seed = 1;
    int coeff_bound = 4;
};

namespace detail {

inline Rational json_rational(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(path + ": " + e.what());
        }
    }
    throw input_error(path + ": expected an integer or a rational string");
}

inline Poly json_linear_form(const json& v, int nvars, const std::string& path) {
    if (!v.is_string()) throw input_error(path + ": expected a polynomial string");
    Poly f;
    try {
        f = parse_poly(v.get<std::string>(), nvars);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
    return f;
}

}  // namespace detail

inline ArrangementFile parse_arrangement_file(const json& j) {
    if (!j.is_object()) throw input_error("arrangement file: expected a JSON object");
    if (!j.contains("ambient_dimension") || !j["ambient_dimension"].is_number_integer())
        throw input_error("arrangement file: missing integer field 'ambient_dimension'");
    const int l = j["ambient_dimension"].get<int>();
    if (l < 1) throw input_error("ambient_dimension must be positive");

    ArrangementFile out;
    std::vector<LinearSubspace> comps;
    if (j.contains("subspaces")) {
        if (!j["subspaces"].is_array()) throw input_error("subspaces: expected an array");
        int si = 0;
        for (const json& sub : j["subspaces"]) {
            std::string spath = "subspaces[" + std::to_string(si++) + "]";
            const json* forms = nullptr;
            if (sub.is_array()) {
                forms = &sub;
            } else if (sub.is_object() && sub.contains("forms")) {
                forms = &sub["forms"];
            } else {
                throw input_error(spath + ": expected a matrix or an object with 'forms'");
            }
            if (!forms->is_array() || forms->empty())
                throw input_error(spath + ".forms: expected a nonempty matrix");
            QMatrix m;
            int ri = 0;
            for (const json& row : *forms) {
                std::string rpath = spath + ".forms[" + std::to_string(ri++) + "]";
                if (!row.is_array() || static_cast<int>(row.size()) != l)
                    throw input_error(rpath + ": expected " + std::to_string(l) + " entries");
                QRow r;
                int ci = 0;
                for (const json& v : row)
                    r.push_back(detail::json_rational(v, rpath + "[" + std::to_string(ci++) + "]"));
                m.push_back(std::move(r));
            }
            comps.push_back(LinearSubspace(l, std::move(m)));
        }
    }
    out.arrangement = Arrangement(l, std::move(comps));

    if (j.contains("ci")) {
        if (!j["ci"].is_array()) throw input_error("ci: expected an array (one entry per h_j)");
        std::vector<std::vector<Poly>> columns;
        int jidx = 0;
        for (const json& col : j["ci"]) {
            std::string cpath = "ci[" + std::to_string(jidx++) + "]";
            std::vector<Poly> factors;
            if (col.is_string()) {
                factors.push_back(detail::json_linear_form(col, l, cpath));
            } else if (col.is_array()) {
                int fi = 0;
                for (const json& f : col)
                    factors.push_back(
                        detail::json_linear_form(f, l, cpath + "[" + std::to_string(fi++) + "]"));
            } else {
                throw input_error(cpath + ": expected a string or an array of factor strings");
            }
            columns.push_back(std::move(factors));
        }
        out.ci_columns = std::move(columns);
    }
    if (j.contains("seed")) out.seed = j["seed"].get<unsigned long>();
    if (j.contains("coeff_bound")) out.coeff_bound = j["coeff_bound"].get<int>();
    return out;
}

inline ArrangementFile parse_arrangement_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    return parse_arrangement_file(j);
}

inline CIData obtain_ci(const ArrangementFile& file) {
    if (file.ci_columns) return make_ci(file.arrangement, *file.ci_columns, true);
    CIData C = build_generic_ci(file.arrangement, file.seed, file.coeff_bound);
    return C;
}

// ---------------------------------------------------------------------------
// Report serialization.
// ---------------------------------------------------------------------------

inline std::vector<long long> laurent_coeff_list(const LaurentZ& p, int len) {
    std::vector<long long> out;
    for (int e = 0; e < len; ++e) {
        Integer c = p.coeff(e);
        if (!c.fits_slong_p())
            throw internal_error("coefficient too large for the JSON report: " + c.get_str());
        out.push_back(c.get_si());
    }
    return out;
}

inline json report_to_json(const VerificationReport& rep) {
    json j;
    j["ambient_dim"] = rep.ambient_dim;
    j["codim"] = rep.codim;
    j["ci_degrees"] = rep.ci_degrees;
    json nodes = json::array();
    for (const NodeResult& n : rep.nodes) {
        json jn;
        jn["dim"] = n.dim;
        jn["components"] = n.num_components;
        jn["chi"] = laurent_coeff_list(n.chi, rep.ambient_dim + 1);
        jn["psi_residue_at_1"] = laurent_coeff_list(n.psi_residue_at_1, rep.ambient_dim + 1);
        jn["condition_value"] = integer_to_string(n.condition_value);
        jn["formula_holds"] = n.formula_holds;
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    j["hypothesis_holds"] = rep.hypothesis_holds;
    j["theorem_consistent"] = rep.theorem_consistent;
    return j;
}

// Inverse of report_to_json on the serialized fields (round-trip check).
inline VerificationReport report_from_json(const json& j) {
    VerificationReport rep;
    rep.ambient_dim = j.at("ambient_dim").get<int>();
    rep.codim = j.at("codim").get<int>();
    rep.ci_degrees = j.at("ci_degrees").get<std::vector<int>>();
    for (const json& jn : j.at("nodes")) {
        NodeResult n;
        n.dim = jn.at("dim").get<int>();
        n.num_components = jn.at("components").get<int>();
        auto to_laurent = [](const std::vector<long long>& v) {
            LaurentZ p;
            for (std::size_t e = 0; e < v.size(); ++e)
                p += LaurentZ::monomial(static_cast<int>(e), Integer(static_cast<long>(v[e])));
            return p;
        };
        n.chi = to_laurent(jn.at("chi").get<std::vector<long long>>());
        n.psi_residue_at_1 = to_laurent(jn.at("psi_residue_at_1").get<std::vector<long long>>());
        n.condition_value = Integer(jn.at("condition_value").get<std::string>());
        n.formula_holds = jn.at("formula_holds").get<bool>();
        rep.nodes.push_back(std::move(n));
    }
    rep.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
    rep.theorem_consistent = j.at("theorem_consistent").get<bool>();
    return rep;
}

inline bool report_round_trip_equal(const VerificationReport& a, const VerificationReport& b) {
    if (a.ambient_dim != b.ambient_dim || a.codim != b.codim || a.ci_degrees != b.ci_degrees ||
        a.hypothesis_holds != b.hypothesis_holds || a.theorem_consistent != b.theorem_consistent ||
        a.nodes.size() != b.nodes.size())
        return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        const NodeResult& x = a.nodes[i];
        const NodeResult& y = b.nodes[i];
        if (x.dim != y.dim || x.num_components != y.num_components || x.chi != y.chi ||
            x.psi_residue_at_1 != y.psi_residue_at_1 || x.condition_value != y.condition_value ||
            x.formula_holds != y.formula_holds)
            return false;
    }
    return true;
}

inline json betti_to_json(const FreeResolution& R, int degree_twist) {
    json steps = json::array();
    for (int j = 0; j < R.length(); ++j) {
        json step = json::object();
        for (const auto& [shift, mult] : R.betti(j, degree_twist))
            step[std::to_string(shift)] = mult;
        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace logres
