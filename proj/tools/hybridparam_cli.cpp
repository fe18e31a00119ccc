// Command-line front end: generate suite instances, validate decompositions,
// solve exactly, run the approximation schemes, and benchmark suites into
// machine-readable reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybridparam/bench.hpp"
#include "hybridparam/graph_io.hpp"

using namespace hybridparam;
using nlohmann::json;

namespace {

ProblemKind parse_problem(const std::string& name) {
    for (ProblemKind k :
         {ProblemKind::VertexCover, ProblemKind::FeedbackVertexSet, ProblemKind::IndependentSet,
          ProblemKind::DominatingSet, ProblemKind::BlueWhiteDominatingSet,
          ProblemKind::SetIntersectingVertexCover, ProblemKind::ConnectedVertexCover,
          ProblemKind::CyclePacking, ProblemKind::MinorPacking, ProblemKind::SubgraphPacking})
        if (kind_name(k) == name) return k;
    throw input_error("unknown problem: " + name);
}

void print_solution(const Solution& sol) {
    if (!sol.packing) {
        std::cout << "witness";
        for (Vertex v : sol.vertices) std::cout << ' ' << v;
        std::cout << '\n';
        return;
    }
    for (const auto& t : sol.pack.tuples) {
        std::cout << "tuple pattern_n=" << t.pattern.num_vertices() << " host";
        for (Vertex v : t.host_vertices) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

json row_to_json(const BenchRow& r) {
    json j;
    j["instance"] = r.instance;
    j["problem"] = r.problem;
    j["param"] = r.param;
    j["eps"] = r.eps;
    j["alg_value"] = r.alg_value;
    j["opt_value"] = r.opt_value ? json(*r.opt_value) : json(nullptr);
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
    j["case"] = r.case_taken;
    j["time_ms"] = r.time_ms;
    j["seed"] = r.seed;
    return j;
}

void print_rows_tsv(const std::vector<BenchRow>& rows) {
    std::cout << "instance\tproblem\tparam\teps\talg_value\topt_value\tratio\tcase\ttime_ms\tseed\n";
    for (const auto& r : rows) {
        std::cout << r.instance << '\t' << r.problem << '\t' << r.param << '\t' << r.eps << '\t'
                  << r.alg_value << '\t';
        if (r.opt_value) std::cout << *r.opt_value;
        else std::cout << "null";
        std::cout << '\t';
        if (r.ratio) std::cout << *r.ratio;
        else std::cout << "null";
        std::cout << '\t' << r.case_taken << '\t' << r.time_ms << '\t' << r.seed << '\n';
    }
}

int cmd_gen(const std::string& spec, uint64_t seed, const std::string& out_dir) {
    SuiteInstance si = suites::make(spec, seed);
    std::filesystem::create_directories(out_dir);
    std::string stem = out_dir + "/" + spec + "-" + std::to_string(seed);
    write_graph_file(stem + ".gr", si.graph);
    std::cout << stem + ".gr" << '\n';
    if (si.param == "mod") {
        write_vertex_set_file(stem + ".mod", si.modulator);
        std::cout << stem + ".mod" << '\n';
    } else {
        write_htd_file(stem + ".htd", si.htd, si.graph.num_vertices());
        std::cout << stem + ".htd" << '\n';
    }
    return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& htd_path,
                 const std::string& td_path, const std::string& helim_path) {
    Graph g = read_graph_file(graph_path);
    Validation val;
    if (!htd_path.empty()) {
        val = validate_htd(g, read_htd_file(htd_path));
    } else if (!td_path.empty()) {
        TreeDecomposition td = read_td_file(td_path);
        val = validate_td(g, td);
    } else if (!helim_path.empty()) {
        val = validate_helim(g, read_helim_file(helim_path));
    } else {
        std::cout << "ok graph n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
        return 0;
    }
    if (val.ok) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "violation condition=" << val.condition << ": " << val.detail << '\n';
    return 1;
}

int cmd_solve(const std::string& problem, const std::string& engine, const std::string& graph_path,
              const std::string& decomp_path, const std::string& blue, const std::string& annotated,
              const std::string& intersect, const std::string& patterns_path) {
    ProblemKind kind = parse_problem(problem);
    AnnotatedGraphFile file = read_annotated_graph_file(graph_path);
    ProblemInstance inst{kind, file.graph, {}, {}, {}, {}, {}};
    if (kind == ProblemKind::BlueWhiteDominatingSet) inst.blue = file.blue;
    if (kind == ProblemKind::DominatingSet) inst.dominated = file.dominated;
    if (!blue.empty()) {
        VertexSet b = parse_vertex_list(blue);
        if (kind == ProblemKind::BlueWhiteDominatingSet) inst.blue = b;
        else inst.forced = b;
    }
    if (!annotated.empty()) inst.dominated = parse_vertex_list(annotated);
    if (!intersect.empty()) inst.must_intersect = parse_vertex_list(intersect);
    if (!patterns_path.empty()) inst.patterns = read_graph_list_file(patterns_path);
    if (kind == ProblemKind::CyclePacking && inst.patterns.empty())
        inst.patterns = {cycle_graph(3)};
    if (is_packing(kind) && inst.patterns.empty())
        throw input_error("packing problems need --patterns");

    OptResult r;
    if (engine == "brute") {
        r = brute_opt(inst);
    } else if (engine == "td-dp") {
        TreeDecomposition td;
        if (!decomp_path.empty()) {
            std::ifstream in(decomp_path);
            if (!in) throw input_error("cannot open decomposition: " + decomp_path);
            auto raw = detail::read_raw_decomposition(in);
            if (raw.base.empty()) {
                td.bags = raw.bags;
                td.tree_edges = raw.edges;
            } else {
                HTreeDecomposition d;
                d.bags = raw.bags;
                d.tree_edges = raw.edges;
                d.base = raw.base;
                d.family = raw.family;
                std::map<int, TreeDecomposition> per_leaf;
                for (int t : d.leaves()) {
                    VertexSet bp = d.base_part(t);
                    if (bp.empty()) continue;
                    auto sub = induced_subgraph(inst.graph, bp);
                    TreeDecomposition local = hybridparam::detail::decomposition_for(sub.graph);
                    for (auto& bag : local.bags) bag = sub.lift(bag);
                    per_leaf[t] = std::move(local);
                }
                td = htd_to_td(inst.graph, d, per_leaf);
            }
        } else {
            td = hybridparam::detail::decomposition_for(inst.graph);
        }
        r = td_dp_opt(inst, inst.graph, td);
    } else {
        throw input_error("unknown engine: " + engine);
    }
    if (!r.feasible) {
        std::cout << "infeasible\n";
        return 1;
    }
    std::cout << "value " << r.value << '\n';
    print_solution(r.solution);
    return 0;
}

int cmd_approx(const std::string& problem, const std::string& param, double eps,
               const std::string& graph_path, const std::string& modulator_path,
               const std::string& htd_path, double alpha, double lossy) {
    SuiteInstance si;
    si.kind = parse_problem(problem);
    si.param = param;
    si.graph = read_graph_file(graph_path);
    si.alpha = alpha;
    si.lossy = lossy;
    if (si.kind == ProblemKind::CyclePacking || si.kind == ProblemKind::MinorPacking ||
        si.kind == ProblemKind::SubgraphPacking)
        si.patterns = {cycle_graph(3)};
    if (param == "mod") {
        if (modulator_path.empty()) throw input_error("--param mod needs --modulator");
        si.modulator = read_vertex_set_file(modulator_path);
        si.family = FamilyPredicate::treewidth_at_most(2);
    } else if (param == "twh") {
        if (htd_path.empty()) throw input_error("--param twh needs --htd");
        si.htd = read_htd_file(htd_path);
        si.family = si.htd.family;
    } else {
        throw input_error("--param must be mod or twh");
    }
    RunOutcome out = run_suite_instance(si, eps);
    if (!out.feasible) {
        std::cout << "infeasible\n";
        return 1;
    }
    std::cout << "value " << out.alg_value << '\n';
    print_solution(out.solution);
    std::cout << "case " << out.case_taken << '\n';
    std::cout << "verified " << (out.solution_ok ? "yes" : "no") << '\n';
    auto opt = oracle_value(si);
    if (opt) {
        std::cout << "opt " << *opt << '\n';
        if (*opt > 0)
            std::cout << "ratio " << (static_cast<double>(out.alg_value) / static_cast<double>(*opt))
                      << '\n';
        else
            std::cout << "ratio " << (out.alg_value == 0 ? "1" : "null") << '\n';
    } else {
        std::cout << "opt null\nratio null\n";
    }
    return out.solution_ok ? 0 : 1;
}

int cmd_bench(const std::string& manifest_path, const std::string& eps_csv,
              const std::string& report_path, bool as_json) {
    auto manifest = read_manifest_file(manifest_path);
    std::vector<double> eps_list;
    {
        std::string cur;
        for (char c : eps_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) eps_list.push_back(std::stod(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    if (eps_list.empty()) throw input_error("--eps-list is empty");
    auto rows = run_bench(manifest, eps_list);
    if (as_json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        std::cout << arr.dump(2) << '\n';
    } else {
        print_rows_tsv(rows);
    }
    if (!report_path.empty()) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        std::ofstream out(report_path);
        if (!out) throw input_error("cannot open report file: " + report_path);
        out << arr.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-parameter approximation schemes over hybrid graph parameters"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a suite instance");
    std::string gen_spec, gen_out = ".";
    uint64_t gen_seed = 1;
    gen->add_option("--spec", gen_spec, "suite spec name")->required();
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--out", gen_out, "output directory");

    auto* validate = app.add_subcommand("validate", "validate a graph or decomposition");
    std::string v_graph, v_htd, v_td, v_helim;
    validate->add_option("--graph", v_graph)->required();
    validate->add_option("--htd", v_htd);
    validate->add_option("--td", v_td);
    validate->add_option("--helim", v_helim);

    auto* solve = app.add_subcommand("solve", "exact solvers");
    std::string s_problem, s_engine = "brute", s_graph, s_decomp, s_blue, s_annotated, s_intersect,
                s_patterns;
    solve->add_option("--problem", s_problem)->required();
    solve->add_option("--engine", s_engine);
    solve->add_option("--graph", s_graph)->required();
    solve->add_option("--decomp", s_decomp);
    solve->add_option("--blue", s_blue, "forced/blue vertices, comma separated");
    solve->add_option("--annotated", s_annotated, "pre-dominated vertices, comma separated");
    solve->add_option("--intersect", s_intersect, "SIVC target set, comma separated");
    solve->add_option("--patterns", s_patterns, "pattern graph file");

    auto* approx = app.add_subcommand("approx", "approximation schemes");
    std::string a_problem, a_param, a_graph, a_mod, a_htd;
    double a_eps = 0.5, a_alpha = 0.0, a_lossy = 0.0;
    approx->add_option("--problem", a_problem)->required();
    approx->add_option("--param", a_param)->required();
    approx->add_option("--eps", a_eps)->required();
    approx->add_option("--graph", a_graph)->required();
    approx->add_option("--modulator", a_mod);
    approx->add_option("--htd", a_htd);
    approx->add_option("--alpha", a_alpha, "use the constant-factor route with this alpha");
    approx->add_option("--lossy-base", a_lossy, "base-solver slack factor in [0,1]");

    auto* bench = app.add_subcommand("bench", "run a suite manifest");
    std::string b_manifest, b_eps = "0.1,0.2,0.5", b_report;
    bool b_json = false;
    bench->add_option("--suite", b_manifest)->required();
    bench->add_option("--eps-list", b_eps);
    bench->add_option("--report", b_report);
    bench->add_flag("--json", b_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_spec, gen_seed, gen_out);
        if (validate->parsed()) return cmd_validate(v_graph, v_htd, v_td, v_helim);
        if (solve->parsed())
            return cmd_solve(s_problem, s_engine, s_graph, s_decomp, s_blue, s_annotated,
                             s_intersect, s_patterns);
        if (approx->parsed())
            return cmd_approx(a_problem, a_param, a_eps, a_graph, a_mod, a_htd, a_alpha, a_lossy);
        if (bench->parsed()) return cmd_bench(b_manifest, b_eps, b_report, b_json);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
