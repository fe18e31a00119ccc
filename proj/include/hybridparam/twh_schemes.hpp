#ifndef HYBRIDPARAM_TWH_SCHEMES_HPP
#define HYBRIDPARAM_TWH_SCHEMES_HPP

#include <cmath>
#include <map>
#include <vector>

#include "hybridparam/mod_schemes.hpp"

namespace hybridparam {

struct LeafReport {
    int node = 0;
    Solution local;            // base solution on G[H_t], in G's labels
    long long local_size = 0;  // |S_t| resp. |sigma_t|
    int rt_size = 0;           // |R_t|
    bool good = false;
    double threshold = 0.0;        // RHS the comparison used
    double bad_certificate = 0.0;  // bound on OPT(G[H_t]) when bad (covering only)
};

struct LeafClassification {
    std::vector<int> good_leaves;
    std::vector<int> bad_leaves;  // bad *leaves*; internal nodes are bad by definition
    std::map<int, LeafReport> per_leaf;
    int ell = 0;  // bag-size bound: width(D) + 1
};

namespace detail {

inline ProblemInstance instance_on(ProblemKind kind, Graph g, const std::vector<Graph>& patterns) {
    ProblemInstance inst{kind, std::move(g), {}, {}, {}, {}, {}};
    if (is_packing(kind)) inst.patterns = patterns;
    return inst;
}

inline Solution lift_solution(const InducedSubgraph& sub, const Solution& s) {
    if (s.packing) return Solution::of(lift_packing(sub, s.pack));
    return Solution::of(sub.lift(s.vertices));
}

// Relabel a decomposition given in G's labels down to the induced subgraph.
inline TreeDecomposition restrict_td(const TreeDecomposition& td, const InducedSubgraph& sub) {
    TreeDecomposition out;
    out.tree_edges = td.tree_edges;
    out.bags.assign(td.bags.size(), {});
    for (size_t i = 1; i < td.bags.size(); ++i) out.bags[i] = sub.restrict(td.bags[i]);
    return out;
}

}  // namespace detail

// Bucket-vs-ocean test per leaf: the base solution on the base component is
// the ocean, the bag remainder R_t the bucket. Thresholds by problem:
// covering eps/3, independent set and packing eps/2, constant-factor
// eps/(2*alpha). For bad covering leaves the certificate OPT <= 3*ell/eps is
// recorded.
inline LeafClassification classify_leaves(const Graph& g, const HTreeDecomposition& d, double eps,
                                          ProblemKind kind, const BaseSolver& base,
                                          const std::vector<Graph>& patterns = {}) {
    detail::check_epsilon(eps);
    LeafClassification cls;
    cls.ell = width(d) + 1;
    double alpha =
        base.guarantee == BaseSolver::Guarantee::ConstantAlpha ? base.alpha : 1.0;
    for (int t : d.leaves()) {
        LeafReport rep;
        rep.node = t;
        VertexSet ht = d.base_part(t);
        rep.rt_size = static_cast<int>(d.non_base_part(t).size());
        auto sub = induced_subgraph(g, ht);
        double factor;
        if (base.guarantee == BaseSolver::Guarantee::ConstantAlpha) {
            rep.local = detail::lift_solution(sub,
                base.run(detail::instance_on(kind, sub.graph, patterns), eps));
            factor = eps / (2.0 * alpha);
        } else if (kind == ProblemKind::VertexCover || kind == ProblemKind::FeedbackVertexSet) {
            rep.local = detail::lift_solution(sub,
                base.run(detail::instance_on(kind, sub.graph, patterns), eps / 2.0));
            factor = eps / 3.0;
        } else {
            rep.local = detail::lift_solution(sub,
                base.run(detail::instance_on(kind, sub.graph, patterns), eps / 2.0));
            factor = eps / 2.0;
        }
        rep.local_size = rep.local.value();
        rep.threshold = factor * static_cast<double>(rep.local_size);
        // leaves whose base solution is empty are bad by definition
        rep.good = rep.local_size > 0 && static_cast<double>(rep.rt_size) <= rep.threshold;
        if (!rep.good && !is_maximization(kind))
            rep.bad_certificate = (base.guarantee == BaseSolver::Guarantee::ConstantAlpha
                                       ? 2.0 * alpha
                                       : 3.0) *
                                  static_cast<double>(cls.ell) / eps;
        (cls.per_leaf[t] = rep).good ? cls.good_leaves.push_back(t) : cls.bad_leaves.push_back(t);
    }
    return cls;
}

struct TwhStats : ApproxStats {
    int assembled_width = -1;
    double width_bound = -1.0;
};

struct TwhResult {
    Solution solution;
    CaseTaken case_taken = CaseTaken::Bucket;
    double epsilon_used = 0.0;
    TwhStats stats;
    LeafClassification classification;

    long long value() const { return solution.value(); }

    ApproxResult as_approx() const {
        ApproxResult r;
        r.solution = solution;
        r.case_taken = case_taken;
        r.epsilon_used = epsilon_used;
        r.stats = stats;
        return r;
    }
};

namespace detail {

// Standard tree decomposition of G[V_b]: project the H-tree decomposition,
// then give every bad leaf a decomposition of its base component. For
// covering problems the base solution S_t is stripped first (leaving
// treewidth <= eta) and re-added to every bag.
inline TreeDecomposition assemble_bad_side(const Graph& g, const HTreeDecomposition& d,
                                           const LeafClassification& cls, const VertexSet& vb,
                                           bool strip_local, int eta) {
    HTreeDecomposition projected = project_htd(d, vb);
    std::map<int, TreeDecomposition> per_leaf;
    for (int t : projected.leaves()) {
        VertexSet base_part = projected.base_part(t);
        if (base_part.empty()) continue;
        TreeDecomposition local;
        auto it = cls.per_leaf.find(t);
        if (strip_local && it != cls.per_leaf.end()) {
            VertexSet st = it->second.local.vertices;
            VertexSet residue = set_minus(base_part, st);
            auto sub = induced_subgraph(g, residue);
            local = decomposition_for(sub.graph);
            for (auto& bag : local.bags) bag = sub.lift(bag);
            if (sub.graph.num_vertices() <= 14 && local.width() > eta)
                throw oracle_fault("bad leaf residue exceeds the eta treewidth bound");
            VertexSet add = set_intersect(st, base_part);
            for (size_t i = 1; i < local.bags.size(); ++i)
                local.bags[i] = set_union(local.bags[i], add);
            if (local.num_nodes() == 0) {
                local.bags.assign(2, {});
                local.bags[1] = add;
            }
        } else {
            auto sub = induced_subgraph(g, base_part);
            local = decomposition_for(sub.graph);
            for (auto& bag : local.bags) bag = sub.lift(bag);
        }
        per_leaf[t] = std::move(local);
    }
    return htd_to_td(g, projected, per_leaf);
}

}  // namespace detail

// Decomposition route for covering problems whose target family has
// treewidth at most eta (vertex cover: 0, feedback vertex set: 1). Good
// leaves contribute S_t u R_t; the rest of the graph has bounded treewidth
// and is solved exactly.
inline TwhResult eta_modulated_fptas(ProblemKind kind, const Graph& g,
                                     const HTreeDecomposition& d, double eps, int eta,
                                     const BaseSolver& base) {
    if (kind != ProblemKind::VertexCover && kind != ProblemKind::FeedbackVertexSet)
        throw input_error("eta_modulated_fptas expects a vertex-deletion problem");
    if (eta < 0) throw input_error("eta must be nonnegative");
    detail::check_epsilon(eps);
    Validation val = validate_htd(g, d);
    if (!val.ok) throw input_error("eta_modulated_fptas: invalid decomposition: " + val.detail);

    TwhResult res;
    res.epsilon_used = eps;
    long long calls0 = *base.call_count;
    res.classification = classify_leaves(g, d, eps, kind, base);
    const LeafClassification& cls = res.classification;
    res.stats.base_calls = *base.call_count - calls0;
    res.stats.good_leaves = static_cast<int>(cls.good_leaves.size());
    res.stats.bad_leaves = static_cast<int>(cls.bad_leaves.size());

    VertexSet s1, s2, vg;
    for (int t : cls.good_leaves) {
        s1 = set_union(s1, cls.per_leaf.at(t).local.vertices);
        s2 = set_union(s2, d.non_base_part(t));
        vg = set_union(vg, d.bag(t));
    }
    VertexSet vb = set_minus(g.vertices(), vg);

    TreeDecomposition assembled = detail::assemble_bad_side(g, d, cls, vb, true, eta);
    res.stats.assembled_width = assembled.width();
    res.stats.width_bound =
        static_cast<double>(cls.ell) * (1.0 + 3.0 / eps) + static_cast<double>(eta);
    if (static_cast<double>(res.stats.assembled_width) > res.stats.width_bound)
        throw oracle_fault("assembled bad-side decomposition exceeds ell + 3*ell/eps + eta");

    auto sub = induced_subgraph(g, vb);
    VertexSet sb;
    if (kind == ProblemKind::VertexCover) {
        TreeDecomposition local = detail::restrict_td(assembled, sub);
        OptResult exact = td_dp_opt(ProblemInstance::vertex_cover(sub.graph), sub.graph, local);
        sb = sub.lift(exact.solution.vertices);
    } else {
        OptResult exact = brute_opt(ProblemInstance::feedback_vertex_set(sub.graph));
        sb = sub.lift(exact.solution.vertices);
    }
    res.stats.exact_calls = 1;
    res.solution = Solution::of(set_union(set_union(s1, s2), sb));
    res.case_taken = cls.good_leaves.empty() ? CaseTaken::Bucket : CaseTaken::Ocean;
    return res;
}

// Independent set: good leaves keep only their base solutions, the bad side
// is solved exactly over its assembled decomposition.
inline TwhResult twh_fptas_is(const Graph& g, const HTreeDecomposition& d, double eps,
                              const BaseSolver& base) {
    detail::check_epsilon(eps);
    Validation val = validate_htd(g, d);
    if (!val.ok) throw input_error("twh_fptas_is: invalid decomposition: " + val.detail);

    TwhResult res;
    res.epsilon_used = eps;
    long long calls0 = *base.call_count;
    res.classification = classify_leaves(g, d, eps, ProblemKind::IndependentSet, base);
    const LeafClassification& cls = res.classification;
    res.stats.base_calls = *base.call_count - calls0;
    res.stats.good_leaves = static_cast<int>(cls.good_leaves.size());
    res.stats.bad_leaves = static_cast<int>(cls.bad_leaves.size());

    VertexSet s1, vg;
    for (int t : cls.good_leaves) {
        s1 = set_union(s1, cls.per_leaf.at(t).local.vertices);
        vg = set_union(vg, d.bag(t));
    }
    VertexSet vb = set_minus(g.vertices(), vg);

    TreeDecomposition assembled = detail::assemble_bad_side(g, d, cls, vb, false, 0);
    res.stats.assembled_width = assembled.width();
    auto sub = induced_subgraph(g, vb);
    TreeDecomposition local = detail::restrict_td(assembled, sub);
    OptResult exact = td_dp_opt(ProblemInstance::independent_set(sub.graph), sub.graph, local);
    res.stats.exact_calls = 1;
    res.solution = Solution::of(set_union(s1, sub.lift(exact.solution.vertices)));
    res.case_taken = cls.good_leaves.empty() ? CaseTaken::Bucket : CaseTaken::Ocean;
    return res;
}

// Packing: good leaves keep their packings; their bag remainders R_t stay on
// the bad side, whose packing is found exactly.
inline TwhResult twh_fptas_packing(ProblemKind kind, const Graph& g, const HTreeDecomposition& d,
                                   double eps, const BaseSolver& base,
                                   const std::vector<Graph>& patterns) {
    if (!is_packing(kind)) throw input_error("twh_fptas_packing expects a packing problem");
    detail::check_epsilon(eps);
    Validation val = validate_htd(g, d);
    if (!val.ok) throw input_error("twh_fptas_packing: invalid decomposition: " + val.detail);

    TwhResult res;
    res.epsilon_used = eps;
    long long calls0 = *base.call_count;
    res.classification = classify_leaves(g, d, eps, kind, base, patterns);
    const LeafClassification& cls = res.classification;
    res.stats.base_calls = *base.call_count - calls0;
    res.stats.good_leaves = static_cast<int>(cls.good_leaves.size());
    res.stats.bad_leaves = static_cast<int>(cls.bad_leaves.size());

    PackingSolution sigma;
    VertexSet vg;
    for (int t : cls.good_leaves) {
        for (const auto& tup : cls.per_leaf.at(t).local.pack.tuples) sigma.tuples.push_back(tup);
        vg = set_union(vg, d.base_part(t));  // base parts only; R_t stays bad
    }
    VertexSet vb = set_minus(g.vertices(), vg);
    auto sub = induced_subgraph(g, vb);
    OptResult exact = brute_opt(detail::instance_on(kind, sub.graph, patterns));
    res.stats.exact_calls = 1;
    for (const auto& tup : detail::lift_packing(sub, exact.solution.pack).tuples)
        sigma.tuples.push_back(tup);
    res.solution = Solution::of(std::move(sigma));
    res.case_taken = cls.good_leaves.empty() ? CaseTaken::Bucket : CaseTaken::Ocean;
    return res;
}

// Constant-factor variant of the equivalence route.
inline TwhResult twh_alpha(ProblemKind kind, const Graph& g, const HTreeDecomposition& d,
                           double eps, const BaseSolver& alpha_base) {
    if (kind != ProblemKind::VertexCover && kind != ProblemKind::FeedbackVertexSet)
        throw input_error("twh_alpha expects a vertex-deletion problem");
    detail::check_epsilon(eps);
    Validation val = validate_htd(g, d);
    if (!val.ok) throw input_error("twh_alpha: invalid decomposition: " + val.detail);

    TwhResult res;
    res.epsilon_used = eps;
    long long calls0 = *alpha_base.call_count;
    res.classification = classify_leaves(g, d, eps, kind, alpha_base);
    const LeafClassification& cls = res.classification;
    res.stats.base_calls = *alpha_base.call_count - calls0;
    res.stats.good_leaves = static_cast<int>(cls.good_leaves.size());
    res.stats.bad_leaves = static_cast<int>(cls.bad_leaves.size());

    VertexSet s1, s2, vg;
    for (int t : cls.good_leaves) {
        s1 = set_union(s1, cls.per_leaf.at(t).local.vertices);
        s2 = set_union(s2, d.non_base_part(t));
        vg = set_union(vg, d.bag(t));
    }
    VertexSet vb = set_minus(g.vertices(), vg);
    auto sub = induced_subgraph(g, vb);
    OptResult exact = brute_opt(detail::instance_on(kind, sub.graph, {}));
    res.stats.exact_calls = 1;
    res.solution = Solution::of(set_union(set_union(s1, s2), sub.lift(exact.solution.vertices)));
    res.case_taken = cls.good_leaves.empty() ? CaseTaken::Bucket : CaseTaken::Ocean;
    return res;
}

}  // namespace hybridparam

#endif
