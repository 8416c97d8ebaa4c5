// quadfree: construct, verify, bound and search C4-free extremal graphs.
//
// Subcommands: field, plane, construct, verify, bounds, search.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// Reports are JSON with sorted keys; identical invocations produce
// byte-identical reports apart from wall-clock fields (with the default
// single worker; node counts can vary across runs with --workers > 1).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "quadfree/bounds.hpp"
#include "quadfree/constructions.hpp"
#include "quadfree/galois.hpp"
#include "quadfree/graph.hpp"
#include "quadfree/graph6.hpp"
#include "quadfree/projective.hpp"
#include "quadfree/search.hpp"
#include "quadfree/smallgraph.hpp"

namespace {

using nlohmann::json;
using namespace quadfree;

constexpr const char* kVersion = "1.0.0";

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

Graph read_graph6_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open for reading: " + path);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.pop_back();
        if (!line.empty()) return graph6_decode(line);
    }
    throw Error("no graph6 record in " + path);
}

void print_report(const json& report) { std::cout << report.dump(2) << "\n"; }

json degree_classes_json(const DegreeClassCounts& dc) {
    json j;
    j["q"] = dc.q;
    j["deg_q_plus_2"] = dc.at_q_plus_2;
    j["deg_q_plus_1"] = dc.at_q_plus_1;
    j["deg_q"] = dc.at_q;
    j["deg_q_minus_1"] = dc.at_q_minus_1;
    j["deg_q_minus_2"] = dc.at_q_minus_2;
    j["deg_le_q_minus_3"] = dc.le_q_minus_3;
    j["deg_ge_q_plus_3"] = dc.ge_q_plus_3;
    j["min_degree"] = dc.min_degree;
    j["max_degree"] = dc.max_degree;
    return j;
}

json verdict_json(const LemmaVerdict& v) {
    json j;
    j["lemma"] = v.lemma;
    j["q"] = v.q;
    if (v.d >= 0) j["d"] = v.d;
    j["value"] = to_string(v.value);
    j["feasible"] = v.feasible;
    j["q_in_asserted_regime"] = v.q_in_asserted_regime;
    if (!v.extras.empty()) {
        json e;
        for (const auto& [name, val] : v.extras) e[name] = to_string(val);
        j["extras"] = e;
    }
    return j;
}

// ---------------------------------------------------------------- field

int run_field(unsigned q, bool dump_tables, Clock::time_point start) {
    Field f(q);
    if (dump_tables) {
        // q rows by q columns; entry (a, b) is the index of a*b
        std::string csv;
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b) {
                if (b) csv += ',';
                csv += std::to_string(f.mul(a, b));
            }
            csv += '\n';
        }
        std::cout << csv;
        return 0;
    }
    json report;
    report["subcommand"] = "field";
    report["version"] = kVersion;
    report["parameters"] = {{"q", q}};
    report["field"] = {{"p", f.p()}, {"k", f.k()}, {"q", f.q()},
                       {"modulus", f.modulus()}};
    report["wall_secs"] = secs_since(start);
    print_report(report);
    return 0;
}

// ---------------------------------------------------------------- plane

int run_plane(unsigned q, bool list_absolute, Clock::time_point start) {
    Field f(q);
    const auto points = all_points(f);
    const auto lines = all_lines(f);
    const auto absolute = absolute_points(f);

    json report;
    report["subcommand"] = "plane";
    report["version"] = kVersion;
    report["parameters"] = {{"q", q}, {"list_absolute", list_absolute}};
    report["points"] = points.size();
    report["lines"] = lines.size();
    report["absolute_count"] = absolute.size();
    report["absolute_count_is_q_plus_1"] = (absolute.size() == q + 1);
    if (list_absolute) {
        json triples = json::array();
        for (const auto& p : absolute) {
            const auto idx = p.indices();
            triples.push_back({idx[0], idx[1], idx[2]});
        }
        report["absolute_points"] = triples;
    }
    report["wall_secs"] = secs_since(start);
    print_report(report);
    return 0;
}

// -------------------------------------------------------------- construct

int run_construct(unsigned q, bool delete_min, const std::string& out,
                  const std::string& report_path, Clock::time_point start) {
    Graph g = [&] {
        if (delete_min) return extremal_witness(q);
        Field f(q);
        return polarity_graph(f);
    }();

    // every reported claim is recomputed from the finished graph
    const bool c4 = is_c4_free(g);
    const DegreeClassCounts dc = degree_classes(g, q);

    write_file(out, graph6_encode(g) + "\n");

    json report;
    report["subcommand"] = "construct";
    report["version"] = kVersion;
    report["parameters"] = {{"q", q}, {"delete_min", delete_min}, {"out", out}};
    report["n"] = g.n();
    report["e"] = g.e();
    report["c4_free"] = c4;
    report["degree_classes"] = degree_classes_json(dc);
    report["two_paths"] = count_2paths(g);
    json outputs;
    outputs["graph"] = out;
    if (!report_path.empty()) outputs["report"] = report_path;
    report["outputs"] = outputs;
    report["wall_secs"] = secs_since(start);

    if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
    print_report(report);
    return c4 ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& in, unsigned q, Clock::time_point start) {
    Graph g = read_graph6_file(in);
    const auto c4 = find_c4(g);
    const DegreeClassCounts dc = degree_classes(g, q);

    json report;
    report["subcommand"] = "verify";
    report["version"] = kVersion;
    report["parameters"] = {{"in", in}, {"q", q}};
    report["n"] = g.n();
    report["e"] = g.e();
    report["c4_free"] = !c4.has_value();
    if (c4) report["witness"] = {c4->a, c4->b, c4->c, c4->d};
    report["degree_classes"] = degree_classes_json(dc);
    report["two_paths"] = count_2paths(g);
    report["two_path_budget"] =
        to_string(two_path_budget(q, g.e(), dc.at_q_plus_1, dc.at_q_plus_2));
    report["wall_secs"] = secs_since(start);
    print_report(report);

    if (c4) {
        std::cerr << "verification failed: 4-cycle " << c4->a << "-" << c4->b
                  << "-" << c4->c << "-" << c4->d << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- bounds

json lemma1_json(unsigned q) {
    json j;
    j["q"] = q;
    j["at_q_plus_1"] = verdict_json(max_degree_feasibility(q, q + 1));
    const uint64_t lo = static_cast<uint64_t>(q) + 3;
    const uint64_t hi = static_cast<uint64_t>(q) * q + q - 1;
    bool all_infeasible = true;
    for (uint64_t d = lo; d <= hi; ++d)
        if (max_degree_feasibility(q, d).feasible) all_infeasible = false;
    j["infeasible_band"] = {lo, hi};
    j["band_all_infeasible"] = all_infeasible;
    j["at_band_start"] = verdict_json(max_degree_feasibility(q, lo));
    return j;
}

json lemma5_json(unsigned q) {
    json j;
    j["q"] = q;
    json rows = json::array();
    for (uint64_t d = q - 2; d <= static_cast<uint64_t>(q) + 2; ++d)
        rows.push_back({{"d", d}, {"g", g_table(q, d)}});
    j["unreachable_pair_bounds"] = rows;
    return j;
}

json lemma6_json(unsigned q) {
    const Lemma6Result probe = lemma6_roots(q, 1);
    const Lemma6Result at_min = lemma6_roots(q, probe.threshold_min_x_q2);
    json j;
    j["q"] = q;
    j["threshold_min_x_q2"] = at_min.threshold_min_x_q2;
    j["threshold_holds"] = at_min.threshold_holds;
    j["implies_x_q2_gt_q_half_plus_1"] = at_min.implies_gt_q_half_plus_1;
    j["lower_root_bracket"] = {to_string(at_min.lower_root_lo),
                               to_string(at_min.lower_root_hi)};
    j["upper_root_bracket"] = {to_string(at_min.upper_root_lo),
                               to_string(at_min.upper_root_hi)};
    return j;
}

json final_json(unsigned q) {
    json j;
    for (char c : {'A', 'B', 'C', 'D'}) {
        const FinalCaseResult r = final_case_z_bound(q, c);
        json cj;
        cj["z_bound"] = to_string(r.z_bound);
        cj["z_min"] = r.z_min;
        cj["z_max"] = r.z_max;
        cj["integer_feasible"] = r.integer_feasible;
        j[std::string(1, c)] = cj;
    }
    return j;
}

void bounds_text(const json& results) {
    // compact human-readable lines; --json for the full report
    for (const auto& [key, val] : results.items()) {
        if (key == "final") {
            for (const auto& [c, cj] : val.items())
                std::cout << "final case " << c << ": z <= "
                          << cj["z_bound"].get<std::string>()
                          << (cj["integer_feasible"].get<bool>()
                                  ? " (integer feasible)"
                                  : " (no integer z admissible)")
                          << "\n";
        } else if (key == "reiman") {
            std::cout << "reiman bound: " << val << "\n";
        } else if (val.contains("value")) {
            std::cout << key << ": value = " << val["value"].get<std::string>()
                      << (val["feasible"].get<bool>() ? " (feasible)"
                                                      : " (infeasible)")
                      << "\n";
        } else if (val.contains("band_all_infeasible")) {
            std::cout << key << ": degrees " << val["infeasible_band"][0]
                      << ".." << val["infeasible_band"][1] << " all infeasible: "
                      << (val["band_all_infeasible"].get<bool>() ? "yes" : "no")
                      << "\n";
        } else if (val.contains("threshold_min_x_q2")) {
            std::cout << key << ": smallest admissible x_{q+2} = "
                      << val["threshold_min_x_q2"] << "\n";
        } else if (val.contains("unreachable_pair_bounds")) {
            std::cout << key << ":";
            for (const auto& row : val["unreachable_pair_bounds"])
                std::cout << " g(" << row["d"] << ")=" << row["g"];
            std::cout << "\n";
        }
    }
}

int run_bounds(bool reiman, uint64_t n, unsigned q, const std::string& lemma,
               bool as_json, bool printed_denominator, Clock::time_point start) {
    json results;
    json parameters;
    if (reiman) {
        parameters["n"] = n;
        results["reiman"] = reiman_bound(n);
    } else {
        parameters["q"] = q;
        parameters["lemma"] = lemma;
        const bool all = (lemma == "all");
        if (all || lemma == "1") results["lemma1"] = lemma1_json(q);
        if (all || lemma == "4")
            results["lemma4"] = verdict_json(lemma4_expression(q));
        if (all || lemma == "5") results["lemma5"] = lemma5_json(q);
        if (all || lemma == "6") results["lemma6"] = lemma6_json(q);
        if (all || lemma == "7")
            results["lemma7"] = verdict_json(lemma7_expression(q));
        if (all || lemma == "8") {
            results["lemma8"] = verdict_json(lemma8_expression(q, false));
            if (printed_denominator)
                results["lemma8_printed_denominator"] =
                    verdict_json(lemma8_expression(q, true));
        }
        if (all || lemma == "final") results["final"] = final_json(q);
    }

    if (as_json) {
        json report;
        report["subcommand"] = "bounds";
        report["version"] = kVersion;
        report["parameters"] = parameters;
        report["results"] = results;
        report["wall_secs"] = secs_since(start);
        print_report(report);
    } else {
        bounds_text(results);
    }
    return 0;
}

// ---------------------------------------------------------------- search

int run_search(unsigned n, bool all_extremal, double budget, unsigned workers,
               const std::string& seed_path, const std::string& out_dir,
               Clock::time_point start) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.budget_secs = budget;  // 0 defers to QUADFREE_BUDGET_SECS / default
    cfg.workers = workers;
    cfg.enumerate_all = all_extremal;
    if (!seed_path.empty())
        cfg.seed_witness = SmallGraph::from_graph(read_graph6_file(seed_path));

    std::filesystem::create_directories(out_dir);
    const SearchResult r = max_edges_c4free(cfg);

    const std::string witness_path =
        (std::filesystem::path(out_dir) / "witness.g6").string();
    write_file(witness_path, r.witness_g6 + "\n");

    json report;
    report["subcommand"] = "search";
    report["version"] = kVersion;
    json parameters;
    parameters["n"] = n;
    parameters["all_extremal"] = all_extremal;
    parameters["budget_secs"] = (budget > 0 ? budget : default_budget_secs());
    parameters["workers"] = workers;
    if (!seed_path.empty()) parameters["seed_witness"] = seed_path;
    parameters["out"] = out_dir;
    report["parameters"] = parameters;
    report["n"] = r.n;
    report["ex"] = r.ex;
    report["optimal"] = r.optimal;
    report["nodes"] = r.nodes;
    report["witness"] = r.witness_g6;
    report["search_wall_secs"] = r.wall_secs;

    json outputs;
    outputs["witness"] = witness_path;
    if (all_extremal && !r.extremal_g6.empty()) {
        const std::string ext_path =
            (std::filesystem::path(out_dir) / "extremal.g6").string();
        std::string lines;
        for (const auto& g6 : r.extremal_g6) lines += g6 + "\n";
        write_file(ext_path, lines);
        report["extremal_count"] = r.extremal_g6.size();
        outputs["extremal"] = ext_path;
    } else if (all_extremal) {
        report["extremal_count"] = nullptr;  // enumeration did not finish
    }
    const std::string result_path =
        (std::filesystem::path(out_dir) / "result.json").string();
    outputs["result"] = result_path;
    report["outputs"] = outputs;
    report["wall_secs"] = secs_since(start);

    write_file(result_path, report.dump(2) + "\n");
    print_report(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const Clock::time_point start = Clock::now();

    CLI::App app{"C4-free extremal graphs: construction, verification, exact "
                 "bounds and exhaustive search"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    auto* field = app.add_subcommand("field", "finite field construction and tables");
    unsigned field_q = 0;
    bool dump_tables = false;
    field->add_option("--q", field_q, "field order (prime power)")->required();
    field->add_flag("--dump-tables", dump_tables,
                    "emit the q-by-q multiplication table as CSV");

    auto* plane = app.add_subcommand("plane", "projective plane point/line counts");
    unsigned plane_q = 0;
    bool list_absolute = false;
    plane->add_option("--q", plane_q, "plane order (prime power)")->required();
    plane->add_flag("--list-absolute", list_absolute,
                    "list the absolute points as coordinate triples");

    auto* construct = app.add_subcommand("construct", "build a polarity graph");
    unsigned construct_q = 0;
    bool delete_min = false;
    std::string construct_out, construct_report;
    construct->add_option("--q", construct_q, "plane order (prime power)")->required();
    construct->add_flag("--delete-min", delete_min,
                        "delete one minimum-degree vertex");
    construct->add_option("--out", construct_out, "output graph6 file")->required();
    construct->add_option("--report", construct_report, "output JSON report file");

    auto* verify = app.add_subcommand("verify", "verify a graph6 file");
    std::string verify_in;
    unsigned verify_q = 0;
    verify->add_option("--in", verify_in, "input graph6 file")->required();
    verify->add_option("--q", verify_q, "parameter q for the degree census")
        ->required();

    auto* bounds = app.add_subcommand("bounds", "exact bound and lemma checks");
    unsigned bounds_q = 0;
    std::string lemma = "all";
    bool bounds_json = false, reiman = false, printed_denominator = false;
    uint64_t reiman_n = 0;
    bounds->add_option("--q", bounds_q, "even plane order for the lemma checks");
    bounds->add_option("--lemma", lemma, "which check to run")
        ->check(CLI::IsMember({"all", "1", "4", "5", "6", "7", "8", "final"}));
    bounds->add_flag("--json", bounds_json, "emit a JSON report");
    bounds->add_flag("--reiman", reiman, "evaluate the pair-counting bound");
    bounds->add_option("--n", reiman_n, "vertex count for --reiman");
    bounds->add_flag("--printed-denominator", printed_denominator,
                     "also evaluate the overlap expression with the source's "
                     "literal denominator");

    auto* search = app.add_subcommand("search", "exact maximum-edge search");
    unsigned search_n = 0, workers = 1;
    bool all_extremal = false;
    double budget = 0.0;
    std::string seed_path, out_dir;
    search->add_option("--n", search_n, "number of vertices")->required();
    search->add_flag("--all-extremal", all_extremal,
                     "enumerate every extremal graph up to isomorphism");
    search->add_option("--budget", budget,
                       "time budget in seconds (default: QUADFREE_BUDGET_SECS "
                       "or 600)");
    search->add_option("--workers", workers, "worker threads (default 1)");
    search->add_option("--seed-witness", seed_path,
                       "graph6 file with a known C4-free graph on n vertices");
    search->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    try {
        if (field->parsed()) return run_field(field_q, dump_tables, start);
        if (plane->parsed()) return run_plane(plane_q, list_absolute, start);
        if (construct->parsed())
            return run_construct(construct_q, delete_min, construct_out,
                                 construct_report, start);
        if (verify->parsed()) return run_verify(verify_in, verify_q, start);
        if (bounds->parsed()) {
            if (reiman && bounds->count("--n") == 0) {
                std::cerr << "bounds: --reiman requires --n\n";
                return 2;
            }
            if (!reiman && bounds->count("--q") == 0) {
                std::cerr << "bounds: provide --q, or --reiman with --n\n";
                return 2;
            }
            return run_bounds(reiman, reiman_n, bounds_q, lemma, bounds_json,
                              printed_denominator, start);
        }
        if (search->parsed())
            return run_search(search_n, all_extremal, budget, workers,
                              seed_path, out_dir, start);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand guarantees a branch
}
