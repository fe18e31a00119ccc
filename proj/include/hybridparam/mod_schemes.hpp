#ifndef HYBRIDPARAM_MOD_SCHEMES_HPP
#define HYBRIDPARAM_MOD_SCHEMES_HPP

#include <cmath>
#include <functional>
#include <optional>

#include "hybridparam/base_solver.hpp"
#include "hybridparam/branching.hpp"
#include "hybridparam/decomposition.hpp"
#include "hybridparam/ds_annotated.hpp"
#include "hybridparam/selfreduce.hpp"

namespace hybridparam {

enum class CaseTaken { Ocean, Bucket };

struct ApproxStats {
    long long base_calls = 0;
    long long exact_calls = 0;
    int good_leaves = 0;
    int bad_leaves = 0;
};

struct ApproxResult {
    bool feasible = true;
    Solution solution;
    CaseTaken case_taken = CaseTaken::Ocean;
    double epsilon_used = 0.0;
    ApproxStats stats;

    long long value() const { return solution.value(); }
};

namespace detail {

inline void check_epsilon(double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw input_error("epsilon must satisfy 0 < eps <= 1");
}

inline void check_modulator(const Graph& g, const VertexSet& m, const FamilyPredicate& family) {
    for (Vertex v : m) g.check_vertex(v);
    auto rest = delete_vertices(g, m);
    for (const auto& comp : connected_components(rest.graph)) {
        Graph cg = induced_subgraph(rest.graph, comp).graph;
        if (!family.contains_certain(cg))
            throw input_error("modulator check failed: a component of G - M is not certainly in " +
                              family.name());
    }
}

inline PackingSolution lift_packing(const InducedSubgraph& sub, const PackingSolution& p) {
    PackingSolution out;
    for (const auto& t : p.tuples) {
        PackingTuple lifted;
        lifted.pattern = t.pattern;
        lifted.host_vertices = sub.lift(t.host_vertices);
        for (auto [u, v] : t.host_edges) {
            Vertex lu = sub.old_label(u), lv = sub.old_label(v);
            lifted.host_edges.emplace_back(std::min(lu, lv), std::max(lu, lv));
        }
        for (const auto& [pv, branch] : t.phi) lifted.phi[pv] = sub.lift(branch);
        out.tuples.push_back(std::move(lifted));
    }
    return out;
}

// smallest k with decider(g, k) = yes, scanning k = 0..limit
inline std::optional<int> minimum_yes(const Decider& d, const Graph& g, int limit) {
    for (int k = 0; k <= limit; ++k)
        if (d(g, k)) return k;
    return std::nullopt;
}

}  // namespace detail

// Default FPT-by-solution-size deciders for the bucket branch.
inline Decider default_decider(ProblemKind kind) {
    Decider d;
    switch (kind) {
        case ProblemKind::VertexCover:
            d.decide = [](const Graph& g, int k) { return k >= 0 && vc_decide_branch(g, k); };
            break;
        case ProblemKind::FeedbackVertexSet:
            d.decide = [](const Graph& g, int k) {
                if (k < 0) return false;
                return brute_opt(ProblemInstance::feedback_vertex_set(g)).value <= k;
            };
            break;
        default:
            throw input_error("no default decider for " + kind_name(kind));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Vertex-deletion scheme: solve on the ocean G - M, add the bucket M for free
// when it is small, otherwise the optimum is parameter-bounded and an exact
// search takes over.
// ---------------------------------------------------------------------------

inline ApproxResult mod_fptas_vertex_deletion(ProblemKind kind, const Graph& g, const VertexSet& m,
                                              double eps, const FamilyPredicate& family,
                                              const BaseSolver& base, const Decider& fpt_by_size) {
    if (kind != ProblemKind::VertexCover && kind != ProblemKind::FeedbackVertexSet)
        throw input_error("mod_fptas_vertex_deletion expects a vertex-deletion problem");
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);

    ApproxResult res;
    res.epsilon_used = eps;
    auto rest = delete_vertices(g, m);
    ProblemInstance restricted{kind, rest.graph, {}, {}, {}, {}, {}};
    long long calls0 = *base.call_count;
    Solution s_local = base.run(restricted, eps / 2.0);
    res.stats.base_calls = *base.call_count - calls0;
    VertexSet s = rest.lift(s_local.vertices);

    if (static_cast<double>(m.size()) <= (eps / 3.0) * static_cast<double>(s.size())) {
        res.case_taken = CaseTaken::Ocean;
        res.solution = Solution::of(set_union(m, s));
        return res;
    }

    res.case_taken = CaseTaken::Bucket;
    double bound = static_cast<double>(m.size()) * (1.0 + 3.0 / eps);
    int limit = g.num_vertices();
    auto k_star = detail::minimum_yes(fpt_by_size, g, limit);
    if (!k_star) throw oracle_fault("bucket branch: decider rejected the trivial solution");
    if (static_cast<double>(*k_star) > bound)
        throw oracle_fault("bucket branch: optimum exceeds the |M| + 3|M|/eps bound");
    auto ext = extract_vertex_deletion(fpt_by_size, g, *k_star);
    if (!ext.yes) throw oracle_fault("bucket branch: extraction failed at the optimum");
    res.stats.exact_calls = fpt_by_size.calls;
    res.solution = Solution::of(ext.witness);
    return res;
}

// Vertex cover with subset guessing over the modulator: for each guess Y the
// uncovered modulator part must be independent and its outside neighborhood
// is forced into the solution.
inline Solution vc_mod_guess(const Graph& g, const VertexSet& m, double eps,
                             const FamilyPredicate& family, const BaseSolver& base) {
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);
    std::optional<VertexSet> best;
    size_t guesses = static_cast<size_t>(1) << m.size();
    for (size_t mask = 0; mask < guesses; ++mask) {
        VertexSet y;
        for (size_t i = 0; i < m.size(); ++i)
            if (mask & (static_cast<size_t>(1) << i)) y.push_back(m[i]);
        VertexSet uncovered = set_minus(m, y);
        bool independent = true;
        for (Vertex u : uncovered) {
            for (Vertex w : g.neighbors(u))
                if (set_contains(uncovered, w)) {
                    independent = false;
                    break;
                }
            if (!independent) break;
        }
        if (!independent) continue;
        VertexSet forced = set_minus(neighborhood(g, uncovered), m);
        VertexSet remaining = set_minus(set_minus(g.vertices(), m), forced);
        auto sub = induced_subgraph(g, remaining);
        Solution s = base.run(ProblemInstance::vertex_cover(sub.graph), eps);
        VertexSet candidate = set_union(set_union(y, forced), sub.lift(s.vertices));
        if (!best || candidate.size() < best->size() ||
            (candidate.size() == best->size() && candidate < *best))
            best = candidate;
    }
    if (!best) throw oracle_fault("vc_mod_guess: no feasible guess");
    return Solution::of(*best);
}

// Constant-factor variant: an alpha-approximate base solution is good enough
// when the bucket is below eps/(2*alpha) of it; the output is then within
// alpha + eps of the optimum.
inline ApproxResult mod_alpha(ProblemKind kind, const Graph& g, const VertexSet& m, double eps,
                              const FamilyPredicate& family, const BaseSolver& alpha_base,
                              const Decider& fpt_by_size) {
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);
    double alpha =
        alpha_base.guarantee == BaseSolver::Guarantee::ConstantAlpha ? alpha_base.alpha : 1.0;

    ApproxResult res;
    res.epsilon_used = eps;
    auto rest = delete_vertices(g, m);
    ProblemInstance restricted{kind, rest.graph, {}, {}, {}, {}, {}};
    Solution s_local = alpha_base.run(restricted, eps);
    VertexSet s = rest.lift(s_local.vertices);
    res.stats.base_calls = 1;

    if (static_cast<double>(m.size()) <= (eps / (2.0 * alpha)) * static_cast<double>(s.size())) {
        res.case_taken = CaseTaken::Ocean;
        res.solution = Solution::of(set_union(m, s));
        return res;
    }
    res.case_taken = CaseTaken::Bucket;
    double bound = static_cast<double>(m.size()) * (1.0 + 2.0 * alpha / eps);
    auto k_star = detail::minimum_yes(fpt_by_size, g, g.num_vertices());
    if (!k_star) throw oracle_fault("bucket branch: decider rejected the trivial solution");
    if (static_cast<double>(*k_star) > bound)
        throw oracle_fault("bucket branch: optimum exceeds the |M| + 2*alpha*|M|/eps bound");
    auto ext = extract_vertex_deletion(fpt_by_size, g, *k_star);
    if (!ext.yes) throw oracle_fault("bucket branch: extraction failed at the optimum");
    res.stats.exact_calls = fpt_by_size.calls;
    res.solution = Solution::of(ext.witness);
    return res;
}

// Independent set with subset guessing: a guess claims Y of the modulator,
// its neighbors outside are off limits, and the base solves the rest.
inline Solution is_mod_guess(const Graph& g, const VertexSet& m, double eps,
                             const FamilyPredicate& family, const BaseSolver& base) {
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);
    std::optional<VertexSet> best;
    size_t guesses = static_cast<size_t>(1) << m.size();
    for (size_t mask = 0; mask < guesses; ++mask) {
        VertexSet y;
        for (size_t i = 0; i < m.size(); ++i)
            if (mask & (static_cast<size_t>(1) << i)) y.push_back(m[i]);
        bool independent = true;
        for (Vertex u : y) {
            for (Vertex w : g.neighbors(u))
                if (set_contains(y, w)) {
                    independent = false;
                    break;
                }
            if (!independent) break;
        }
        if (!independent) continue;
        VertexSet blocked = set_minus(neighborhood(g, y), m);
        VertexSet remaining = set_minus(set_minus(g.vertices(), m), blocked);
        auto sub = induced_subgraph(g, remaining);
        Solution s = base.run(ProblemInstance::independent_set(sub.graph), eps);
        VertexSet candidate = set_union(y, sub.lift(s.vertices));
        if (!best || candidate.size() > best->size() ||
            (candidate.size() == best->size() && candidate < *best))
            best = candidate;
    }
    if (!best) throw oracle_fault("is_mod_guess: no feasible guess");
    return Solution::of(*best);
}

// ---------------------------------------------------------------------------
// Cycle packing (pattern family {C3} as minors).
// ---------------------------------------------------------------------------

inline ApproxResult cycpack_mod_fptas(const Graph& g, const VertexSet& m, double eps,
                                      const FamilyPredicate& family, const BaseSolver& base,
                                      const std::function<OptResult(const Graph&)>& exact_by_size) {
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);

    ApproxResult res;
    res.epsilon_used = eps;
    auto rest = delete_vertices(g, m);
    Solution s_local = base.run(ProblemInstance::cycle_packing(rest.graph), eps / 2.0);
    PackingSolution s = detail::lift_packing(rest, s_local.pack);
    res.stats.base_calls = 1;

    if (static_cast<double>(m.size()) <= (eps / 2.0) * static_cast<double>(s.size())) {
        res.case_taken = CaseTaken::Ocean;
        res.solution = Solution::of(std::move(s));
        return res;
    }
    res.case_taken = CaseTaken::Bucket;
    OptResult exact = exact_by_size(g);
    res.stats.exact_calls = 1;
    double bound = (1.0 + 4.0 / eps) * static_cast<double>(m.size());
    if (static_cast<double>(exact.value) > bound)
        throw oracle_fault("cycle packing bucket: optimum exceeds the (1 + 4/eps)|M| bound");
    res.solution = exact.solution;
    return res;
}

// ---------------------------------------------------------------------------
// Dominating set: annotate the ocean with D = N(M), add the bucket for free
// when small; otherwise the whole graph has small treewidth and the exact
// dynamic program finishes.
// ---------------------------------------------------------------------------

inline ApproxResult ds_mod_fptas(const Graph& g, const VertexSet& m, double eps,
                                 const FamilyPredicate& family, const BaseSolver& annotated_base) {
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);

    ApproxResult res;
    res.epsilon_used = eps;
    auto rest = delete_vertices(g, m);
    VertexSet d_global = neighborhood(g, m);  // subset of V \ M by definition
    VertexSet d_local = rest.restrict(d_global);
    AnnotatedDSInstance annotated = annotate_normalize(rest.graph, d_local);
    Solution s_local = annotated_base.run(annotated.as_problem(), eps / 2.0);
    VertexSet s = rest.lift(s_local.vertices);
    res.stats.base_calls = 1;

    if (static_cast<double>(m.size()) <= (eps / 3.0) * static_cast<double>(s.size())) {
        res.case_taken = CaseTaken::Ocean;
        res.solution = Solution::of(set_union(m, s));
        return res;
    }

    res.case_taken = CaseTaken::Bucket;
    // exact dominating set on G over a decomposition assembled from the
    // modulator: width at most tw(G - M) + |M|
    HTreeDecomposition htd = htd_from_modulator(g, m, family);
    std::map<int, TreeDecomposition> per_leaf;
    for (int t : htd.leaves()) {
        VertexSet base_part = htd.base_part(t);
        if (base_part.empty()) continue;
        auto sub = induced_subgraph(g, base_part);
        TreeDecomposition local = detail::decomposition_for(sub.graph);
        for (auto& bag : local.bags) bag = sub.lift(bag);
        per_leaf[t] = std::move(local);
    }
    TreeDecomposition td = htd_to_td(g, htd, per_leaf);
    OptResult exact = td_dp_opt(ProblemInstance::dominating_set(g), g, td);
    res.stats.exact_calls = 1;
    res.solution = exact.solution;
    return res;
}

// ---------------------------------------------------------------------------
// Connected vertex cover.
// ---------------------------------------------------------------------------

// Grow S u M into a connected vertex cover: while disconnected, some vertex
// neighbors two pieces and gets added; each addition drops the component
// count.
inline VertexSet connectivity_repair(const Graph& g, const VertexSet& s, const VertexSet& m) {
    VertexSet cur = set_union(s, m);
    if (!detail::is_vertex_cover(g, cur))
        throw input_error("connectivity_repair: S u M is not a vertex cover");
    for (;;) {
        auto sub = induced_subgraph(g, cur);
        auto comps = connected_components(sub.graph);
        if (comps.size() <= 1) return cur;
        // component id per vertex of G (0 = outside cur)
        std::vector<int> comp_of(static_cast<size_t>(g.num_vertices()) + 1, 0);
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (Vertex v : comps[ci])
                comp_of[static_cast<size_t>(sub.old_label(v))] = static_cast<int>(ci) + 1;
        Vertex connector = 0;
        for (Vertex v = 1; v <= g.num_vertices() && connector == 0; ++v) {
            if (set_contains(cur, v)) continue;
            int first = 0;
            for (Vertex w : g.neighbors(v)) {
                int c = comp_of[static_cast<size_t>(w)];
                if (c == 0) continue;
                if (first == 0) first = c;
                else if (first != c) {
                    connector = v;
                    break;
                }
            }
        }
        if (connector == 0)
            throw input_error("connectivity_repair: graph is disconnected across the cover");
        cur = set_union(cur, {connector});
    }
}

inline ApproxResult cvc_mod_fptas(const Graph& g, const VertexSet& m, double eps,
                                  const FamilyPredicate& family, const BaseSolver& sivc_base,
                                  const std::function<OptResult(const Graph&)>& exact_by_size) {
    detail::check_epsilon(eps);
    detail::check_modulator(g, m, family);
    double eps_prime = eps / 5.0;

    ApproxResult res;
    res.epsilon_used = eps;

    std::vector<VertexSet> comps = connected_components(g);
    std::vector<VertexSet> nontrivial;
    for (auto& c : comps)
        if (c.size() >= 2) nontrivial.push_back(c);
    if (nontrivial.size() >= 2) {
        res.feasible = false;  // a connected cover cannot span two components
        return res;
    }
    if (nontrivial.empty()) {
        res.case_taken = CaseTaken::Ocean;
        res.solution = Solution::of(VertexSet{});
        return res;
    }

    // work inside the single nontrivial component; isolated vertices are
    // never part of an optimal connected cover
    auto comp_sub = induced_subgraph(g, nontrivial[0]);
    const Graph& gc = comp_sub.graph;
    VertexSet mc = comp_sub.restrict(m);

    auto exact_branch = [&](void) {
        OptResult exact = exact_by_size(gc);
        res.stats.exact_calls = 1;
        if (!exact.feasible) throw oracle_fault("cvc exact branch infeasible on a connected graph");
        res.case_taken = CaseTaken::Bucket;
        res.solution = Solution::of(comp_sub.lift(exact.solution.vertices));
        return res;
    };

    if (mc.empty()) return exact_branch();  // no bucket to compare against

    auto rest = delete_vertices(gc, mc);
    VertexSet x = rest.restrict(neighborhood(gc, mc));
    Solution s_local = sivc_base.run(ProblemInstance::sivc(rest.graph, x), eps_prime);
    res.stats.base_calls = 1;
    VertexSet s_prime = rest.lift(s_local.vertices);

    if (static_cast<double>(mc.size()) > eps_prime * static_cast<double>(s_prime.size()))
        return exact_branch();

    VertexSet repaired = connectivity_repair(gc, s_prime, mc);
    if (repaired.size() > s_prime.size() + 2 * mc.size())
        throw oracle_fault("cvc repair exceeded the |S'| + 2|M| bound");
    res.case_taken = CaseTaken::Ocean;
    res.solution = Solution::of(comp_sub.lift(repaired));
    return res;
}

}  // namespace hybridparam

#endif
