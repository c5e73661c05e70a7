#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "logres/io.hpp"

namespace logres::cli {

// exit codes: 0 formula verified (or command succeeded), 1 hypothesis or
// formula fails, 2 input error, 3 internal invariant violation
enum ExitCode { exit_ok = 0, exit_finding = 1, exit_input = 2, exit_internal = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void print_lattice_text(const IntersectionLattice& L, std::ostream& out) {
    out << "lattice nodes (" << L.size() << "):\n";
    for (int i = 0; i < L.size(); ++i) {
        const LatticeNode& n = L.node(i);
        out << "  dim " << n.dim << "  mu " << integer_to_string(n.mobius) << "  components {";
        for (std::size_t c = 0; c < n.components.size(); ++c)
            out << (c ? "," : "") << n.components[c] + 1;
        out << "}\n";
    }
    out << "chi = " << characteristic_polynomial(L).to_string("t") << "\n";
}

inline json lattice_json(const IntersectionLattice& L) {
    json j;
    json nodes = json::array();
    for (int i = 0; i < L.size(); ++i) {
        const LatticeNode& n = L.node(i);
        json jn;
        jn["dim"] = n.dim;
        jn["mobius"] = integer_to_string(n.mobius);
        json comps = json::array();
        for (int c : n.components) comps.push_back(c + 1);
        jn["components"] = std::move(comps);
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);
    j["chi"] = laurent_coeff_list(characteristic_polynomial(L), L.ambient_dim() + 1);
    return j;
}

inline json series_json(const HilbertSeries& h) {
    json j;
    json num = json::array();
    if (!h.numerator().is_zero())
        for (int e = h.numerator().min_exp(); e <= h.numerator().max_exp(); ++e)
            if (h.numerator().coeff(e) != 0)
                num.push_back({e, integer_to_string(h.numerator().coeff(e))});
    j["numerator"] = std::move(num);
    j["denominator_power"] = h.denom_pow();
    j["display"] = h.to_string();
    return j;
}

inline void print_ci_text(const CIData& C, std::ostream& out) {
    out << "complete intersection (codim " << C.codim() << ", degrees [";
    for (std::size_t i = 0; i < C.degrees.size(); ++i) out << (i ? "," : "") << C.degrees[i];
    out << "], d = " << C.total_degree << ")\n";
    for (std::size_t j = 0; j < C.columns.size(); ++j) {
        out << "  h_" << j + 1 << " = " << poly_to_string(C.hs[j]) << "  (factors:";
        for (const Poly& f : C.columns[j]) out << " " << poly_to_string(f) << ";";
        out << ")\n";
    }
    out << "  components: " << C.components.size() << "\n";
    out << "  source: " << (C.user_supplied ? "user-supplied" : "generic (seed " +
                            std::to_string(C.seed) + ", coefficient bound " +
                            std::to_string(C.coeff_bound) + ")")
        << "\n";
}

inline json ci_json(const CIData& C) {
    json j;
    j["codim"] = C.codim();
    j["degrees"] = C.degrees;
    j["total_degree"] = C.total_degree;
    json hs = json::array();
    for (const Poly& h : C.hs) hs.push_back(poly_to_string(h));
    j["h"] = std::move(hs);
    json cols = json::array();
    for (const auto& col : C.columns) {
        json c = json::array();
        for (const Poly& f : col) c.push_back(poly_to_string(f));
        cols.push_back(std::move(c));
    }
    j["factors"] = std::move(cols);
    j["components"] = static_cast<int>(C.components.size());
    j["user_supplied"] = C.user_supplied;
    if (!C.user_supplied) {
        j["seed"] = C.seed;
        j["coeff_bound"] = C.coeff_bound;
    }
    return j;
}

inline void print_verify_text(const VerificationReport& rep, std::ostream& out) {
    out << "ambient dimension " << rep.ambient_dim << ", codimension " << rep.codim
        << ", ci degrees [";
    for (std::size_t i = 0; i < rep.ci_degrees.size(); ++i)
        out << (i ? "," : "") << rep.ci_degrees[i];
    out << "]\n";
    for (const NodeResult& n : rep.nodes) {
        out << "  node dim " << n.dim << " (" << n.num_components << " component"
            << (n.num_components == 1 ? "" : "s") << ")\n";
        out << "    chi            = " << n.chi.to_string("t") << "\n";
        out << "    psi(R,1,t)     = " << n.psi_residue_at_1.to_string("t") << "\n";
        out << "    psi(R,1,1)     = " << integer_to_string(n.condition_value) << "\n";
        out << "    formula        : " << (n.formula_holds ? "holds" : "FAILS") << "\n";
    }
    out << "hypothesis psi(R,1,1) = 1 at every proper node: "
        << (rep.hypothesis_holds ? "holds" : "FAILS") << "\n";
    out << "generalized formula at every node: " << (rep.formula_all_nodes ? "holds" : "FAILS")
        << "\n";
    if (!rep.theorem_consistent)
        out << "THEOREM CONTRADICTION: hypothesis holds but the formula fails (engine bug)\n";
    out << "elapsed: " << rep.elapsed_seconds << " s\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Solomon-Terao verification for central subspace arrangements", "logres"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    unsigned long seed = 0;
    bool seed_given = false;
    int coeff_bound = 0;
    bool bound_given = false;
    int q = 0;
    bool certify = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "arrangement JSON file")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", seed, "seed for the generic construction")
            ->each([&](const std::string&) { seed_given = true; });
        sub->add_option("--coeff-bound", coeff_bound, "coefficient height bound")
            ->each([&](const std::string&) { bound_given = true; });
    };

    CLI::App* cmd_lattice = app.add_subcommand("lattice", "intersection lattice and Mobius values");
    CLI::App* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    CLI::App* cmd_buildci =
        app.add_subcommand("build-ci", "build and certify a complete intersection");
    CLI::App* cmd_logforms =
        app.add_subcommand("logforms", "series and Betti table of one log-form module");
    CLI::App* cmd_psi = app.add_subcommand("psi", "the three Psi polynomials");
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the Solomon-Terao verification");
    for (CLI::App* sub :
         {cmd_lattice, cmd_charpoly, cmd_buildci, cmd_logforms, cmd_psi, cmd_verify})
        add_common(sub);
    cmd_logforms->add_option("--q", q, "form degree")->required();
    cmd_buildci->add_flag("--certify-radical", certify,
                          "additionally check <h> = intersection of component ideals");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        ArrangementFile input = parse_arrangement_file(detail::read_file(file));
        if (seed_given) input.seed = seed;
        if (bound_given) input.coeff_bound = coeff_bound;
        const Arrangement& A = input.arrangement;
        const bool as_json = (format == "json");

        if (cmd_lattice->parsed() || cmd_charpoly->parsed()) {
            IntersectionLattice L(A);
            if (cmd_lattice->parsed()) {
                if (as_json)
                    out << detail::lattice_json(L).dump(2) << "\n";
                else
                    detail::print_lattice_text(L, out);
            } else {
                LaurentZ chi = characteristic_polynomial(L);
                if (as_json) {
                    json j;
                    j["chi"] = laurent_coeff_list(chi, A.ambient_dim() + 1);
                    j["chi_string"] = chi.to_string("t");
                    out << j.dump(2) << "\n";
                } else {
                    out << chi.to_string("t") << "\n";
                }
            }
            return exit_ok;
        }

        CIData C = obtain_ci(input);

        if (cmd_buildci->parsed()) {
            CIVerification v = verify_ci(A, C);
            bool radical_ok = true;
            if (certify) radical_ok = radical_certificate(C);
            if (as_json) {
                json j = detail::ci_json(C);
                j["verified"] = v.ok();
                if (certify) j["radical_certificate"] = radical_ok;
                out << j.dump(2) << "\n";
            } else {
                detail::print_ci_text(C, out);
                out << "  certificate (regular sequence, containment, grid conditions): "
                    << (v.ok() ? "pass" : "FAIL") << "\n";
                if (certify)
                    out << "  radical certificate <h> = intersection of components: "
                        << (radical_ok ? "pass" : "FAIL") << "\n";
            }
            return v.ok() && radical_ok ? exit_ok : exit_finding;
        }

        if (cmd_logforms->parsed()) {
            LogFormModule m = logform_module(A, C, q);
            FreeResolution R = minimal_free_resolution(m.module);
            if (as_json) {
                json j;
                j["q"] = q;
                j["series"] = detail::series_json(m.series);
                j["betti"] = betti_to_json(R, C.total_degree);
                j["generators"] = static_cast<int>(minimal_generators(m.module).size());
                out << j.dump(2) << "\n";
            } else {
                out << "q = " << q << "\n";
                out << "Poin(Omega^q(log X/C), x) = " << m.series.to_string() << "\n";
                out << "betti (displayed shifts):";
                for (int jstep = 0; jstep < R.length(); ++jstep) {
                    out << (jstep ? " <- " : " ");
                    bool first = true;
                    for (const auto& [shift, mult] : R.betti(jstep, C.total_degree)) {
                        out << (first ? "" : " + ") << "S(" << shift << ")";
                        if (mult > 1) out << "^" << mult;
                        first = false;
                    }
                }
                out << "\n";
            }
            return exit_ok;
        }

        if (cmd_psi->parsed()) {
            LogformAnalysis an = analyze_logforms(A, C);
            if (as_json) {
                json j;
                j["psi_log"] = an.psi_log.to_string();
                j["psi_koszul"] = an.psi_koszul.to_string();
                j["psi_residue"] = an.psi_residue.to_string();
                j["psi_log_at_1"] = laurent_coeff_list(an.psi_log.eval_x1(), an.l + 1);
                j["psi_residue_at_1"] = laurent_coeff_list(an.psi_residue.eval_x1(), an.l + 1);
                j["condition_value"] = integer_to_string(an.psi_residue.eval_x1_t1());
                out << j.dump(2) << "\n";
            } else {
                out << "Psi(Omega(log X/C), x, t) = " << an.psi_log.to_string() << "\n";
                out << "Psi((1/h)I_C Omega, x, t) = " << an.psi_koszul.to_string() << "\n";
                out << "Psi(R, x, t)              = " << an.psi_residue.to_string() << "\n";
                out << "Psi(Omega(log X/C), 1, t) = " << an.psi_log.eval_x1().to_string("t")
                    << "\n";
                out << "Psi(R, 1, t)              = " << an.psi_residue.eval_x1().to_string("t")
                    << "\n";
                out << "Psi(R, 1, 1)              = "
                    << integer_to_string(an.psi_residue.eval_x1_t1()) << "\n";
            }
            return exit_ok;
        }

        // verify
        VerificationReport rep = verify_solomon_terao(A, C);
        if (as_json)
            out << report_to_json(rep).dump(2) << "\n";
        else
            detail::print_verify_text(rep, out);
        if (!rep.theorem_consistent) return exit_internal;
        return rep.formula_all_nodes ? exit_ok : exit_finding;
    } catch (const internal_error& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return exit_internal;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const construction_error& e) {
        err << "construction error: " << e.what() << "\n";
        return exit_input;
    }
}

}  // namespace logres::cli
