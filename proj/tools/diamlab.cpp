// Command-line front end: constructions, analysis, layered-family tools,
// certified paths, decomposability, bound tables and the verification suite.
//
// Exit codes: 0 success, 1 assertion failure, 2 input error, 3 cap/budget.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "diameterlab/bounds.hpp"
#include "diameterlab/canonical.hpp"
#include "diameterlab/clm.hpp"
#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/decompose.hpp"
#include "diameterlab/diameter.hpp"
#include "diameterlab/experiment.hpp"
#include "diameterlab/induced_path.hpp"
#include "diameterlab/json_io.hpp"
#include "diameterlab/legal.hpp"
#include "diameterlab/nonpure.hpp"
#include "diameterlab/nonrevisiting.hpp"

using namespace dlab;

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << content;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

json bound_report_json(const BoundReport& report) {
    json j;
    j["schema"] = 1;
    j["context"] = report.context;
    j["entries"] = json::array();
    for (const auto& e : report.entries) {
        json entry;
        entry["name"] = e.name;
        entry["kind"] = e.kind;
        entry["value"] = e.value;
        if (e.exact_rational) entry["rational"] = e.rational.str();
        if (e.constant_free) entry["constant_free"] = true;
        if (!e.note.empty()) entry["note"] = e.note;
        j["entries"].push_back(entry);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diameterlab: dual-graph diameters of simplicial complexes and multicomplexes"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "seed for randomized searches");
    app.add_option("--jobs", jobs, "worker count (results are job-count independent)");

    // construct -------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit a construction as JSON");
    std::string kind, out_path;
    int cn = 0, cd = 0, ck = 1, ca = 2, cb = 2;
    std::string in1, in2;
    construct->add_option("kind", kind,
                          "complete|corridor2|join|iterated-join|nabla|barycentric|johnson-dot")
        ->required();
    construct->add_option("--n", cn, "vertex count");
    construct->add_option("--d", cd, "facet size");
    construct->add_option("--k", ck, "iteration count");
    construct->add_option("--a", ca, "first parameter");
    construct->add_option("--b", cb, "second parameter");
    construct->add_option("--in1", in1, "first input complex (join/barycentric)");
    construct->add_option("--in2", in2, "second input complex (join)");
    construct->add_option("-o,--out", out_path, "output file (default stdout)");

    // analyze ---------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "run predicates on a complex file");
    std::string analyze_file;
    std::vector<std::string> checks;
    bool emit_dot = false;
    analyze->add_option("file", analyze_file, "complex JSON")->required();
    analyze->add_option("--check", checks,
                        "assertions: corridor,pseudomanifold,connected,normal,flag,diameter=K");
    analyze->add_flag("--dot", emit_dot, "emit the dual graph as DOT");
    analyze->add_option("-o,--out", out_path, "output file");

    // clm -------------------------------------------------------------------
    auto* clm = app.add_subcommand("clm", "layered multicomplex tools");
    std::string clm_action, clm_file;
    int clm_n = 3, clm_d = 2;
    long long clm_budget = 200'000'000;
    clm->add_option("action", clm_action, "build-complete|build-injective|validate|search|substitute|nonpure")
        ->required();
    clm->add_option("--n", clm_n, "elements");
    clm->add_option("--d", clm_d, "rank");
    clm->add_option("--file", clm_file, "layered multicomplex JSON (validate/substitute)");
    clm->add_option("--budget", clm_budget, "search node budget");
    clm->add_option("-o,--out", out_path, "output file");

    // path ------------------------------------------------------------------
    auto* path_cmd = app.add_subcommand("path", "certified non-revisiting paths");
    std::string path_file;
    int from_idx = 0, to_idx = 0;
    bool allow_nonflag = false;
    path_cmd->add_option("file", path_file, "complex JSON")->required();
    path_cmd->add_option("--from", from_idx, "facet index")->required();
    path_cmd->add_option("--to", to_idx, "facet index")->required();
    path_cmd->add_flag("--allow-nonflag", allow_nonflag, "run without the flagness guarantee");
    path_cmd->add_option("-o,--out", out_path, "output file");

    // decompose ---------------------------------------------------------------
    auto* decomp = app.add_subcommand("decompose", "k-decomposability deciders");
    std::string dec_file;
    int dec_k = 0;
    bool dec_weak = false;
    long long dec_budget = 50'000'000;
    decomp->add_option("file", dec_file, "complex JSON")->required();
    decomp->add_option("--k", dec_k, "max shedding face dimension");
    decomp->add_flag("--weak", dec_weak, "weak variant (no link condition)");
    decomp->add_option("--budget", dec_budget, "node budget");
    decomp->add_option("-o,--out", out_path, "output file");

    // bounds ------------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the bound tables");
    int bn = 10, bd = 3, bM = 1, bk = 1, bl = 0, bdelta = -1;
    bounds_cmd->add_option("--n", bn, "facets / elements");
    bounds_cmd->add_option("--d", bd, "dimension / rank");
    bounds_cmd->add_option("--M", bM, "subdeterminant bound");
    bounds_cmd->add_option("--k", bk, "family parameter");
    bounds_cmd->add_option("--l", bl, "spindle length");
    bounds_cmd->add_option("--delta", bdelta, "observed diameter (for excess)");
    bounds_cmd->add_option("-o,--out", out_path, "output file");

    // search ------------------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "longest induced path in J(n,d)");
    int sn = 5, sd = 2;
    bool heuristic = false;
    long long s_budget = 50'000'000;
    search_cmd->add_option("--n", sn, "vertices")->required();
    search_cmd->add_option("--d", sd, "facet size")->required();
    search_cmd->add_flag("--heuristic", heuristic, "budgeted greedy instead of exact");
    search_cmd->add_option("--budget", s_budget, "node budget");
    search_cmd->add_option("-o,--out", out_path, "output file");

    // verify-paper --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify-paper", "run the verification suite");
    std::string scale = "full";
    verify->add_option("--scale", scale, "full|small");
    verify->add_option("-o,--out", out_path, "JSON verdict file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            json j;
            if (kind == "complete") {
                j = to_json(complete_complex(cn, cd));
            } else if (kind == "corridor2") {
                j = to_json(corridor_2complex(cn));
            } else if (kind == "join") {
                auto c1 = complex_from_json(load_json(in1));
                auto c2 = complex_from_json(load_json(in2));
                j = to_json(join(c1, c2));
            } else if (kind == "iterated-join") {
                j = to_json(iterated_join_corridor(cn, cd, ck));
            } else if (kind == "nabla") {
                j = to_json(nabla(ca, cb));
            } else if (kind == "barycentric") {
                auto c = complex_from_json(load_json(in1));
                j = to_json(barycentric_subdivision(c));
            } else if (kind == "johnson-dot") {
                write_output(out_path, dot_johnson(cn, cd));
                return 0;
            } else {
                throw InputError("unknown construction kind: " + kind);
            }
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*analyze) {
            json j = load_json(analyze_file);
            bool all_ok = true;
            json report;
            report["schema"] = 1;
            if (json_is_multicomplex(j)) {
                auto c = multicomplex_from_json(j);
                report["n"] = c.n;
                report["d"] = c.d;
                report["facets"] = c.size();
                for (const auto& check : checks) {
                    if (check == "connected") {
                        bool v = is_strongly_connected(c);
                        report["connected"] = v;
                        all_ok &= v;
                    } else if (check == "normal") {
                        bool v = is_normal(c);
                        report["normal"] = v;
                        all_ok &= v;
                    } else if (check.rfind("diameter=", 0) == 0) {
                        int want = std::stoi(check.substr(9));
                        int got = dual_diameter(c).diameter;
                        report["diameter"] = got;
                        all_ok &= got == want;
                    } else {
                        throw InputError("unsupported multicomplex check: " + check);
                    }
                }
                if (emit_dot) {
                    write_output(out_path, dot_dual_graph(c));
                    return 0;
                }
            } else {
                auto c = complex_from_json(j);
                report["n"] = c.n;
                report["d"] = c.d;
                report["facets"] = c.size();
                for (const auto& check : checks) {
                    bool v = true;
                    if (check == "corridor")
                        v = is_corridor(c);
                    else if (check == "pseudomanifold")
                        v = is_pseudomanifold(c);
                    else if (check == "connected")
                        v = is_strongly_connected(c);
                    else if (check == "normal")
                        v = is_normal(c);
                    else if (check == "flag")
                        v = is_flag(c);
                    else if (check.rfind("diameter=", 0) == 0) {
                        int want = std::stoi(check.substr(9));
                        int got = dual_diameter(c).diameter;
                        report["diameter"] = got;
                        v = got == want;
                    } else {
                        throw InputError("unknown check: " + check);
                    }
                    report[check] = v;
                    all_ok &= v;
                }
                if (emit_dot) {
                    write_output(out_path, dot_dual_graph(c));
                    return 0;
                }
            }
            report["ok"] = all_ok;
            write_output(out_path, report.dump(2) + "\n");
            return all_ok ? 0 : 1;
        }

        if (*clm) {
            if (clm_action == "build-complete") {
                write_output(out_path, to_json(complete_clm(clm_n, clm_d)).dump(2) + "\n");
            } else if (clm_action == "build-injective") {
                write_output(out_path, to_json(injective_clm(clm_n, clm_d)).dump(2) + "\n");
            } else if (clm_action == "validate") {
                auto m = layered_from_json(load_json(clm_file));
                auto v = validate_clm(m);
                json j;
                j["valid"] = v.ok;
                j["length"] = m.length();
                if (!v.ok) {
                    j["witness_face"] = v.face;
                    j["missing_layer"] = v.missing_layer;
                }
                write_output(out_path, j.dump(2) + "\n");
                return v.ok ? 0 : 1;
            } else if (clm_action == "search") {
                auto r = max_clm_search(clm_n, clm_d, clm_budget);
                json j = to_json(r.witness);
                j["max_length"] = r.max_length;
                j["nodes"] = r.nodes;
                write_output(out_path, j.dump(2) + "\n");
            } else if (clm_action == "substitute") {
                auto m = layered_from_json(load_json(clm_file));
                write_output(out_path, to_json(multicomplex_to_complex(m)).dump(2) + "\n");
            } else if (clm_action == "nonpure") {
                auto f = example_hnp5();
                json j;
                j["n"] = f.n;
                j["layers"] = f.layers;
                j["length"] = f.length();
                j["valid"] = validate_nonpure(f).ok;
                write_output(out_path, j.dump(2) + "\n");
            } else {
                throw InputError("unknown clm action: " + clm_action);
            }
            return 0;
        }

        if (*path_cmd) {
            auto c = complex_from_json(load_json(path_file));
            if (from_idx < 0 || to_idx < 0 || from_idx >= static_cast<int>(c.size()) ||
                to_idx >= static_cast<int>(c.size()))
                throw InputError("facet index out of range");
            auto path =
                non_revisiting_path(c, c.facets[from_idx], c.facets[to_idx], !allow_nonflag);
            json j = to_json(path);
            j["length"] = static_cast<int>(path.size()) - 1;
            j["non_revisiting"] = is_non_revisiting(path).ok;
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*decomp) {
            auto c = complex_from_json(load_json(dec_file));
            json j;
            if (dec_weak) {
                auto r = is_weakly_k_decomposable(c, dec_k, dec_budget);
                j["weakly_decomposable"] = r.decomposable;
                j["states"] = r.states;
                if (r.decomposable) j["shedding_sequence"] = r.shedding_sequence;
            } else {
                auto r = is_k_decomposable(c, dec_k, dec_budget);
                j["decomposable"] = r.decomposable;
                if (r.certificate) j["certificate"] = to_json(*r.certificate);
            }
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*bounds_cmd) {
            json j;
            j["polytope"] = bound_report_json(polytope_bounds(bn, bd));
            j["subdeterminant"] = bound_report_json(subdeterminant_bounds(bd, bM, bn));
            j["misc"] = bound_report_json(misc_bounds(bn, bd, bk));
            if (auto hb = known_Hb(bn, bd)) j["known_exact"] = *hb;
            if (bdelta >= 0) j["hirsch_excess"] = hirsch_excess(bn, bd, bdelta).str();
            if (bl > 0) {
                auto ds = strong_dstep(bn, bd, bl);
                j["strong_dstep"] = {{"dimension", ds.dimension},
                                     {"facets", ds.facets},
                                     {"diameter_lb", ds.diameter_lb},
                                     {"violates_hirsch", ds.violates_hirsch}};
                j["spindle_excess"] = spindle_excess(bn, bd, bl).str();
            }
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*search_cmd) {
            auto r = longest_induced_path_johnson(
                sn, sd, heuristic ? SearchMode::heuristic : SearchMode::exact, s_budget, seed);
            json j = to_json(r.path);
            j["length"] = static_cast<int>(r.path.size()) - 1;
            j["exact"] = r.exact;
            j["nodes"] = r.nodes;
            write_output(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*verify) {
            auto results =
                run_acceptance(scale == "small" ? Scale::small_scale : Scale::full, seed);
            int code = print_acceptance(results, std::cout);
            if (!out_path.empty()) {
                json j;
                j["schema"] = 1;
                j["scale"] = scale;
                j["checks"] = json::array();
                bool all = true;
                for (const auto& r : results) {
                    j["checks"].push_back({{"name", r.name},
                                           {"pass", r.pass},
                                           {"seconds", r.seconds},
                                           {"detail", r.detail}});
                    all &= r.pass;
                }
                j["ok"] = all;
                write_output(out_path, j.dump(2) + "\n");
            }
            return code;
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
