#ifndef HYBRIDPARAM_BENCH_HPP
#define HYBRIDPARAM_BENCH_HPP

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hybridparam/domset.hpp"
#include "hybridparam/gen.hpp"

namespace hybridparam {

// A generated benchmark instance together with the parameterization the
// suite exercises.
struct SuiteInstance {
    ProblemKind kind = ProblemKind::VertexCover;
    std::string param;  // "mod" or "twh"
    Graph graph;
    VertexSet modulator;
    HTreeDecomposition htd;
    FamilyPredicate family = FamilyPredicate::treewidth_at_most(2);
    std::vector<Graph> patterns;
    double lossy = 0.0;   // base-solver slack
    double alpha = 0.0;   // >0 selects the constant-factor route
    bool guess = false;   // subset-guessing variant over the modulator
};

namespace suites {

inline SuiteInstance vc_mod(uint64_t seed, int p_lo, int p_hi, int comp_lo, int comp_hi,
                            int components) {
    Rng rng(seed);
    ModulatorSpec spec;
    spec.family = FamilyPredicate::treewidth_at_most(2);
    spec.components = components;
    spec.comp_lo = comp_lo;
    spec.comp_hi = comp_hi;
    spec.p = rng.range(p_lo, p_hi);
    spec.attach_density = 0.4;
    auto pm = plant_modulator_instance(spec, rng.next());
    SuiteInstance si;
    si.kind = ProblemKind::VertexCover;
    si.param = "mod";
    si.graph = pm.graph;
    si.modulator = pm.modulator;
    si.family = pm.family;
    return si;
}

inline SuiteInstance make(const std::string& name, uint64_t seed) {
    Rng rng(seed ^ 0x5eedULL);
    if (name == "vc-mod-ocean") return vc_mod(seed, 0, 1, 7, 9, 2);
    if (name == "vc-mod-bucket") return vc_mod(seed, 3, 5, 3, 5, 1);
    if (name == "vc-mod-mixed") return vc_mod(seed, 0, 4, 4, 7, 2);
    if (name == "vc-mod-lossy") {
        SuiteInstance si = vc_mod(seed, 0, 2, 6, 8, 2);
        si.lossy = 1.0;
        return si;
    }
    if (name == "vc-mod-alpha2") {
        SuiteInstance si = vc_mod(seed, 0, 3, 5, 8, 2);
        si.alpha = 2.0;
        return si;
    }
    if (name == "vc-mod-guess" || name == "is-mod-guess") {
        SuiteInstance si = vc_mod(seed, 0, 3, 4, 6, 2);
        si.kind = name[0] == 'v' ? ProblemKind::VertexCover : ProblemKind::IndependentSet;
        si.guess = true;
        return si;
    }
    if (name == "fvs-mod-small") {
        Rng r2(seed);
        ModulatorSpec spec;
        spec.family = FamilyPredicate::treewidth_at_most(2);
        spec.components = 2;
        spec.comp_lo = 4;
        spec.comp_hi = 7;
        spec.base_keep = 0.9;
        spec.p = r2.range(0, 3);
        auto pm = plant_modulator_instance(spec, r2.next());
        SuiteInstance si;
        si.kind = ProblemKind::FeedbackVertexSet;
        si.param = "mod";
        si.graph = pm.graph;
        si.modulator = pm.modulator;
        si.family = pm.family;
        return si;
    }
    if (name == "cycpack-mod-small") {
        Rng r2(seed);
        ModulatorSpec spec;
        spec.family = FamilyPredicate::treewidth_at_most(2);
        spec.components = 2;
        spec.comp_lo = 3;
        spec.comp_hi = 5;
        spec.base_keep = 0.95;
        spec.p = r2.range(0, 2);
        auto pm = plant_modulator_instance(spec, r2.next());
        SuiteInstance si;
        si.kind = ProblemKind::CyclePacking;
        si.param = "mod";
        si.graph = pm.graph;
        si.modulator = pm.modulator;
        si.family = pm.family;
        si.patterns = {cycle_graph(3)};
        return si;
    }
    if (name == "ds-mod-small" || name == "ds-mod-path") {
        Rng r2(seed);
        bool small = name == "ds-mod-small";
        int len = small ? r2.range(8, 14) : r2.range(40, 90);
        Graph path = path_graph(len);
        int p = r2.range(1, small ? 2 : 1);
        Graph g(len + p);
        for (auto [u, v] : path.edges()) g.add_edge_internal(u, v);
        for (int i = 0; i < p; ++i) {
            Vertex mv = len + 1 + i;
            for (Vertex u = 1; u <= len; ++u)
                if (r2.chance(small ? 0.3 : 0.15)) g.add_edge_internal(mv, u);
            g.add_edge_internal(mv, 1);
        }
        g.finalize();
        SuiteInstance si;
        si.kind = ProblemKind::DominatingSet;
        si.param = "mod";
        si.graph = g;
        for (int i = 0; i < p; ++i) si.modulator.push_back(len + 1 + i);
        si.family = FamilyPredicate::treewidth_at_most(1);
        return si;
    }
    if (name == "cvc-mod-small") {
        Rng r2(seed);
        int len = r2.range(8, 13);
        Graph base = random_partial_ktree(len, 2, 0.85, r2.next());
        // the modulator vertex stitches every base component, keeping G connected
        Graph g(len + 1);
        for (auto [u, v] : base.edges()) g.add_edge_internal(u, v);
        Vertex mv = len + 1;
        for (Vertex u = 1; u <= len; ++u)
            if (r2.chance(0.5)) g.add_edge_internal(mv, u);
        for (const auto& comp : connected_components(base)) g.add_edge_internal(mv, comp[0]);
        g.finalize();
        SuiteInstance si;
        si.kind = ProblemKind::ConnectedVertexCover;
        si.param = "mod";
        si.graph = g;
        si.modulator = {mv};
        si.family = FamilyPredicate::treewidth_at_most(2);
        return si;
    }
    if (name == "vc-twh-small" || name == "fvs-twh-small" || name == "is-twh-small" ||
        name == "vc-twh-lossy" || name == "vc-twh-alpha2") {
        Rng r2(seed);
        HtdSpec spec;
        spec.family = FamilyPredicate::treewidth_at_most(2);
        spec.num_leaves = r2.range(2, 3);
        spec.ell = r2.range(1, 3);
        spec.internal_nodes = r2.range(1, 2);
        spec.base_lo = 3;
        spec.base_hi = 5;
        spec.rt_empty_prob = 0.4;
        auto ph = plant_htd_instance(spec, r2.next());
        SuiteInstance si;
        si.kind = name[0] == 'f' ? ProblemKind::FeedbackVertexSet
                 : name[0] == 'i' ? ProblemKind::IndependentSet
                                  : ProblemKind::VertexCover;
        si.param = "twh";
        si.graph = ph.graph;
        si.htd = ph.htd;
        si.family = spec.family;
        if (name == "vc-twh-lossy") si.lossy = 1.0;
        if (name == "vc-twh-alpha2") si.alpha = 2.0;
        return si;
    }
    if (name == "pack-twh-small" || name == "subpack-twh-small") {
        Rng r2(seed);
        HtdSpec spec;
        spec.family = FamilyPredicate::treewidth_at_most(2);
        spec.num_leaves = 2;
        spec.ell = 1;
        spec.internal_nodes = 1;
        spec.base_lo = 3;
        spec.base_hi = 6;
        spec.base_keep = 0.95;
        spec.rt_empty_prob = 0.5;
        // worst case every leaf is bad and the whole graph lands on the
        // exact side, so n must stay within the packing search cap
        auto ph = plant_htd_instance(spec, r2.next());
        SuiteInstance si;
        si.kind = name[0] == 'p' ? ProblemKind::MinorPacking : ProblemKind::SubgraphPacking;
        si.param = "twh";
        si.graph = ph.graph;
        si.htd = ph.htd;
        si.family = spec.family;
        si.patterns = {cycle_graph(3)};
        return si;
    }
    if (name == "ds-twh-small" || name == "ds-twh-path") {
        Rng r2(seed);
        HtdSpec spec;
        spec.family = FamilyPredicate::treewidth_at_most(1);
        spec.num_leaves = 2;
        spec.ell = 0;
        spec.internal_nodes = 1;
        spec.base_lo = 3;
        spec.base_hi = 6;
        spec.base_keep = 1.0;
        if (name == "ds-twh-path") {
            spec.big_leaves = 1;
            spec.big_lo = 95;
            spec.big_hi = 135;
        }
        auto ph = plant_htd_instance(spec, r2.next());
        SuiteInstance si;
        si.kind = ProblemKind::DominatingSet;
        si.param = "twh";
        si.graph = ph.graph;
        si.htd = ph.htd;
        si.family = spec.family;
        return si;
    }
    if (name == "bwds-small") {
        Rng r2(seed);
        int n = r2.range(6, 12);
        Graph g = random_partial_ktree(n, 2, 0.8, r2.next());
        VertexSet blue;
        for (Vertex v = 1; v <= n; ++v)
            if (r2.chance(0.25)) blue.push_back(v);
        SuiteInstance si;
        si.kind = ProblemKind::BlueWhiteDominatingSet;
        si.param = "mod";
        si.graph = g;
        si.modulator = blue;  // reused as the blue set
        si.family = FamilyPredicate::treewidth_at_most(2);
        return si;
    }
    throw input_error("unknown suite spec: " + name);
}

inline std::vector<std::string> names() {
    return {"vc-mod-ocean",  "vc-mod-bucket",  "vc-mod-mixed",  "vc-mod-lossy",
            "vc-mod-alpha2", "vc-mod-guess",   "is-mod-guess",  "fvs-mod-small",
            "cycpack-mod-small", "ds-mod-small", "ds-mod-path", "cvc-mod-small",
            "vc-twh-small",  "fvs-twh-small",  "is-twh-small",  "vc-twh-lossy",
            "vc-twh-alpha2", "pack-twh-small", "subpack-twh-small", "ds-twh-small",
            "ds-twh-path",   "bwds-small"};
}

}  // namespace suites

// One algorithm run on a suite instance.
struct RunOutcome {
    bool feasible = true;
    long long alg_value = 0;
    Solution solution;
    std::string case_taken = "NONE";
    bool solution_ok = false;
};

inline RunOutcome run_suite_instance(const SuiteInstance& si, double eps) {
    RunOutcome out;
    ProblemInstance check{si.kind, si.graph, {}, {}, {}, {}, si.patterns};
    if (si.kind == ProblemKind::BlueWhiteDominatingSet) check.blue = si.modulator;

    auto fill = [&](const Solution& sol, CaseTaken ct) {
        out.solution = sol;
        out.alg_value = sol.value();
        out.case_taken = ct == CaseTaken::Ocean ? "OCEAN" : "BUCKET";
        out.solution_ok = verify_solution(check, sol);
    };

    if (si.param == "mod") {
        switch (si.kind) {
            case ProblemKind::VertexCover: {
                if (si.guess) {
                    Solution s = vc_mod_guess(si.graph, si.modulator, eps, si.family,
                                              exact_base_solver(false));
                    out.solution = s;
                    out.alg_value = s.value();
                    out.solution_ok = verify_solution(check, s);
                    break;
                }
                if (si.alpha > 0.0) {
                    auto dec = default_decider(ProblemKind::VertexCover);
                    auto r = mod_alpha(si.kind, si.graph, si.modulator, eps, si.family,
                                       matching_vc_base_solver(), dec);
                    fill(r.solution, r.case_taken);
                } else {
                    BaseSolver base = si.lossy > 0.0 ? lossy_base_solver(si.lossy, false)
                                                     : exact_base_solver(false);
                    auto dec = default_decider(ProblemKind::VertexCover);
                    auto r = mod_fptas_vertex_deletion(si.kind, si.graph, si.modulator, eps,
                                                       si.family, base, dec);
                    fill(r.solution, r.case_taken);
                }
                break;
            }
            case ProblemKind::FeedbackVertexSet: {
                BaseSolver base = exact_base_solver(false);
                auto dec = default_decider(ProblemKind::FeedbackVertexSet);
                auto r = mod_fptas_vertex_deletion(si.kind, si.graph, si.modulator, eps, si.family,
                                                   base, dec);
                fill(r.solution, r.case_taken);
                break;
            }
            case ProblemKind::IndependentSet: {
                Solution s = is_mod_guess(si.graph, si.modulator, eps, si.family,
                                          exact_base_solver(true));
                out.solution = s;
                out.alg_value = s.value();
                out.solution_ok = verify_solution(check, s);
                break;
            }
            case ProblemKind::CyclePacking: {
                auto r = cycpack_mod_fptas(si.graph, si.modulator, eps, si.family,
                                           exact_base_solver(true), [](const Graph& h) {
                                               return brute_opt(ProblemInstance::cycle_packing(h));
                                           });
                fill(r.solution, r.case_taken);
                break;
            }
            case ProblemKind::DominatingSet: {
                auto r = ds_mod_fptas(si.graph, si.modulator, eps, si.family,
                                      exact_base_solver(false));
                fill(r.solution, r.case_taken);
                break;
            }
            case ProblemKind::ConnectedVertexCover: {
                auto r = cvc_mod_fptas(si.graph, si.modulator, eps, si.family,
                                       exact_base_solver(false), [](const Graph& h) {
                                           return brute_opt(
                                               ProblemInstance::connected_vertex_cover(h));
                                       });
                if (!r.feasible) {
                    out.feasible = false;
                    return out;
                }
                fill(r.solution, r.case_taken);
                break;
            }
            case ProblemKind::BlueWhiteDominatingSet: {
                OptResult r = bwds_solve_exact(si.graph, si.modulator);
                out.solution = r.solution;
                out.alg_value = r.value;
                out.solution_ok = verify_solution(check, r.solution);
                break;
            }
            default:
                throw input_error("suite does not cover this mod problem");
        }
        // subset-guess variant for vertex cover gets its own spec name
        return out;
    }

    switch (si.kind) {
        case ProblemKind::VertexCover: {
            if (si.alpha > 0.0) {
                auto r = twh_alpha(si.kind, si.graph, si.htd, eps, matching_vc_base_solver());
                fill(r.solution, r.case_taken);
            } else {
                BaseSolver base =
                    si.lossy > 0.0 ? lossy_base_solver(si.lossy, false) : exact_base_solver(false);
                auto r = eta_modulated_fptas(si.kind, si.graph, si.htd, eps, 0, base);
                fill(r.solution, r.case_taken);
            }
            break;
        }
        case ProblemKind::FeedbackVertexSet: {
            auto r = eta_modulated_fptas(si.kind, si.graph, si.htd, eps, 1,
                                         exact_base_solver(false));
            fill(r.solution, r.case_taken);
            break;
        }
        case ProblemKind::IndependentSet: {
            auto r = twh_fptas_is(si.graph, si.htd, eps, exact_base_solver(true));
            fill(r.solution, r.case_taken);
            break;
        }
        case ProblemKind::MinorPacking:
        case ProblemKind::SubgraphPacking: {
            auto r = twh_fptas_packing(si.kind, si.graph, si.htd, eps, exact_base_solver(true),
                                       si.patterns);
            fill(r.solution, r.case_taken);
            break;
        }
        case ProblemKind::DominatingSet: {
            auto r = twh_fptas_ds(si.graph, si.htd, eps);
            fill(r.solution, r.case_taken);
            break;
        }
        default:
            throw input_error("suite does not cover this twh problem");
    }
    return out;
}

// Oracle value if the instance is within the exhaustive-search caps;
// otherwise absent (the report shows null rather than trusting a solver that
// is itself under test).
inline std::optional<long long> oracle_value(const SuiteInstance& si) {
    int n = si.graph.num_vertices();
    if (is_packing(si.kind) ? n > 14 : n > 22) return std::nullopt;
    ProblemInstance inst{si.kind, si.graph, {}, {}, {}, {}, si.patterns};
    if (si.kind == ProblemKind::BlueWhiteDominatingSet) inst.blue = si.modulator;
    OptResult r = brute_opt(inst);
    if (!r.feasible) return std::nullopt;
    return r.value;
}

struct BenchRow {
    std::string instance;
    std::string problem;
    std::string param;
    double eps = 0.0;
    long long alg_value = 0;
    std::optional<long long> opt_value;
    std::optional<double> ratio;
    std::string case_taken;
    long long time_ms = 0;
    uint64_t seed = 0;
};

struct ManifestEntry {
    uint64_t seed = 0;
    std::string spec;
};

// Manifest: one line per instance, `inst <seed> <specName>`.
inline std::vector<ManifestEntry> read_manifest(std::istream& in) {
    std::vector<ManifestEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok != "inst") throw input_error("manifest: unknown line: " + line);
        ManifestEntry e;
        if (!(ls >> e.seed >> e.spec)) throw input_error("manifest: bad line: " + line);
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<ManifestEntry> read_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open manifest: " + path);
    return read_manifest(in);
}

inline int bench_worker_count(size_t jobs) {
    if (const char* env = std::getenv("HYBRIDPARAM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<int>(std::min<size_t>(static_cast<size_t>(v), jobs));
    }
    return 1;
}

inline std::vector<BenchRow> run_bench(const std::vector<ManifestEntry>& manifest,
                                       const std::vector<double>& eps_list) {
    struct Job {
        size_t index;
        ManifestEntry entry;
        double eps;
    };
    std::vector<Job> jobs;
    for (const auto& e : manifest)
        for (double eps : eps_list) jobs.push_back({jobs.size(), e, eps});
    std::vector<BenchRow> rows(jobs.size());

    auto work = [&](const Job& job) {
        SuiteInstance si = suites::make(job.entry.spec, job.entry.seed);
        BenchRow row;
        row.instance = job.entry.spec + "-" + std::to_string(job.entry.seed);
        row.problem = kind_name(si.kind);
        row.param = si.param;
        row.eps = job.eps;
        row.seed = job.entry.seed;
        auto t0 = std::chrono::steady_clock::now();
        RunOutcome outcome = run_suite_instance(si, job.eps);
        auto t1 = std::chrono::steady_clock::now();
        row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        row.case_taken = outcome.feasible ? outcome.case_taken : "INFEASIBLE";
        row.alg_value = outcome.alg_value;
        if (outcome.feasible) {
            row.opt_value = oracle_value(si);
            if (row.opt_value) {
                if (*row.opt_value == 0)
                    row.ratio = row.alg_value == 0 ? std::optional<double>(1.0) : std::nullopt;
                else
                    row.ratio = static_cast<double>(row.alg_value) /
                                static_cast<double>(*row.opt_value);
            }
        }
        rows[job.index] = std::move(row);
    };

    int workers = bench_worker_count(jobs.size());
    if (workers <= 1) {
        for (const auto& job : jobs) work(job);
    } else {
        std::mutex mu;
        size_t next = 0;
        auto loop = [&] {
            for (;;) {
                size_t mine;
                {
                    std::lock_guard<std::mutex> lk(mu);
                    if (next >= jobs.size()) return;
                    mine = next++;
                }
                work(jobs[mine]);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(loop);
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace hybridparam

#endif
