#ifndef HYBRIDPARAM_DOMSET_HPP
#define HYBRIDPARAM_DOMSET_HPP

#include <cmath>
#include <functional>

#include "hybridparam/twh_schemes.hpp"

namespace hybridparam {

// Triangulated k x k grid with the corner (k,k) joined to the whole border.
// Vertex (x,y) gets label (x-1)*k + y.
inline Graph gamma_grid(int k) {
    if (k < 2) throw unsupported_error("gamma_grid: need k >= 2");
    auto id = [k](int x, int y) { return (x - 1) * k + y; };
    Graph g(k * k);
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y) {
            if (x < k) g.add_edge_internal(id(x, y), id(x + 1, y));
            if (y < k) g.add_edge_internal(id(x, y), id(x, y + 1));
        }
    for (int x = 1; x <= k - 1; ++x)
        for (int y = 1; y <= k - 1; ++y)
            g.add_edge_internal(id(x + 1, y), id(x, y + 1));
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y) {
            if (x == k && y == k) continue;
            if (x == 1 || x == k || y == 1 || y == k) g.add_edge_internal(id(k, k), id(x, y));
        }
    g.finalize();
    return g;
}

// G[V_t] plus a fresh apex v* adjacent to exactly R_t. Removing R_t leaves
// the base component together with an isolated v*.
struct DsGadget {
    Graph graph;          // |V_t| + 1 vertices; v* is the last label
    Vertex vstar;
    InducedSubgraph sub;  // label maps between G and G[V_t]
};

inline DsGadget ds_gadget_graph(const Graph& g, const VertexSet& vt, const VertexSet& rt) {
    if (!set_subset(rt, vt)) throw input_error("ds_gadget_graph: R_t must be inside V_t");
    DsGadget out;
    out.sub = induced_subgraph(g, vt);
    int n = out.sub.graph.num_vertices();
    out.vstar = n + 1;
    Graph h(n + 1);
    for (auto [u, v] : out.sub.graph.edges()) h.add_edge_internal(u, v);
    for (Vertex v : rt) h.add_edge_internal(out.vstar, out.sub.new_label(v));
    h.finalize();
    out.graph = std::move(h);
    return out;
}

struct BWDSInstance {
    Graph graph;
    VertexSet blue;
    int k = 0;

    VertexSet white() const { return set_minus(graph.vertices(), blue); }
};

// Pendant reduction: attaching n^2 fresh pendant vertices to every blue
// vertex makes "dominating set containing B" and plain "dominating set"
// agree at any budget k <= n.
inline std::pair<Graph, int> bwds_to_ds(const BWDSInstance& inst) {
    int n = inst.graph.num_vertices();
    if (inst.k > n)
        throw unsupported_error("bwds_to_ds: the counting argument needs k <= |V(G)|");
    long long pendants_per = static_cast<long long>(n) * n;
    Graph h(static_cast<int>(n + pendants_per * static_cast<long long>(inst.blue.size())));
    for (auto [u, v] : inst.graph.edges()) h.add_edge_internal(u, v);
    Vertex next = n + 1;
    for (Vertex b : inst.blue)
        for (long long i = 0; i < pendants_per; ++i) h.add_edge_internal(b, next++);
    h.finalize();
    return {std::move(h), inst.k};
}

// Minimum dominating set containing all blue vertices, by the forced-set
// dynamic program.
inline OptResult bwds_solve_exact(const Graph& g, const VertexSet& blue) {
    ProblemInstance inst = ProblemInstance::dominating_set(g, {}, blue);
    TreeDecomposition td = detail::decomposition_for(g);
    return td_dp_opt(inst, g, td);
}

// Decision handle for blue-white dominating set on a fixed graph.
struct BwdsDecider {
    std::function<bool(const Graph&, const VertexSet&, int)> decide;
    mutable long long calls = 0;

    bool operator()(const Graph& g, const VertexSet& blue, int k) const {
        ++calls;
        return decide(g, blue, k);
    }
};

inline BwdsDecider default_bwds_decider() {
    BwdsDecider d;
    d.decide = [](const Graph& g, const VertexSet& blue, int k) {
        return bwds_solve_exact(g, blue).value <= k;
    };
    return d;
}

// Extraction for blue-white dominating set: find the optimum budget k*, then
// force one vertex at a time while the decision stays yes. A vertex rejected
// once can never re-enter a k*-solution extending the grown blue set.
inline Solution bwds_extract(const BwdsDecider& decider, const Graph& g, const VertexSet& blue) {
    int n = g.num_vertices();
    int k_star = -1;
    for (int k = static_cast<int>(blue.size()); k <= n; ++k)
        if (decider(g, blue, k)) {
            k_star = k;
            break;
        }
    if (k_star < 0) throw oracle_fault("bwds_extract: oracle rejected every budget up to n");

    VertexSet current = blue;
    auto dominating = [&](const VertexSet& s) {
        return detail::dominates(g, s, {});
    };
    for (Vertex u = 1; u <= n && !dominating(current); ++u) {
        if (set_contains(current, u)) continue;
        if (decider(g, set_union(current, {u}), k_star)) current = set_union(current, {u});
    }
    if (!dominating(current))
        throw oracle_fault("bwds_extract: scan ended before the set became dominating");
    if (static_cast<int>(current.size()) != k_star)
        throw oracle_fault("bwds_extract: witness size disagrees with the optimum budget");
    return Solution::of(current);
}

// ---------------------------------------------------------------------------
// Decomposition route for dominating set: per leaf, solve the v*-gadget with
// the modulator scheme at eps/4; a leaf is good when ell <= eps/29 * |S_t|.
// Good leaves contribute S_t u R_t, and the rest is finished exactly as a
// blue-white instance with the R_t's forced blue.
// ---------------------------------------------------------------------------

inline TwhResult twh_fptas_ds(const Graph& g, const HTreeDecomposition& d, double eps) {
    detail::check_epsilon(eps);
    Validation val = validate_htd(g, d);
    if (!val.ok) throw input_error("twh_fptas_ds: invalid decomposition: " + val.detail);

    TwhResult res;
    res.epsilon_used = eps;
    LeafClassification& cls = res.classification;
    cls.ell = width(d) + 1;

    BaseSolver annotated_base = exact_base_solver(false);
    for (int t : d.leaves()) {
        LeafReport rep;
        rep.node = t;
        VertexSet vt = d.bag(t);
        VertexSet rt = d.non_base_part(t);
        rep.rt_size = static_cast<int>(rt.size());
        DsGadget gadget = ds_gadget_graph(g, vt, rt);
        VertexSet rt_local = gadget.sub.restrict(rt);
        ApproxResult inner =
            ds_mod_fptas(gadget.graph, rt_local, eps / 4.0, d.family, annotated_base);
        res.stats.base_calls += 1;
        VertexSet st_local = set_minus(inner.solution.vertices, {gadget.vstar});
        st_local = set_intersect(st_local, gadget.sub.graph.vertices());
        rep.local = Solution::of(gadget.sub.lift(st_local));
        rep.local_size = rep.local.value();
        rep.threshold = (eps / 29.0) * static_cast<double>(rep.local_size);
        rep.good = static_cast<double>(cls.ell) <= rep.threshold;
        if (!rep.good) rep.bad_certificate = 29.0 * static_cast<double>(cls.ell) / eps;
        (cls.per_leaf[t] = rep).good ? cls.good_leaves.push_back(t) : cls.bad_leaves.push_back(t);
    }
    res.stats.good_leaves = static_cast<int>(cls.good_leaves.size());
    res.stats.bad_leaves = static_cast<int>(cls.bad_leaves.size());

    VertexSet s1, s2, vg;
    for (int t : cls.good_leaves) {
        s1 = set_union(s1, cls.per_leaf.at(t).local.vertices);
        s2 = set_union(s2, d.non_base_part(t));
        vg = set_union(vg, d.base_part(t));
    }
    VertexSet remainder = set_minus(g.vertices(), vg);  // S2 u V_b

    TreeDecomposition assembled = detail::assemble_bad_side(g, d, cls, remainder, false, 0);
    res.stats.assembled_width = assembled.width();
    auto sub = induced_subgraph(g, remainder);
    TreeDecomposition local = detail::restrict_td(assembled, sub);
    ProblemInstance bwds = ProblemInstance::dominating_set(sub.graph, {}, sub.restrict(s2));
    OptResult exact = td_dp_opt(bwds, sub.graph, local);
    res.stats.exact_calls = 1;
    VertexSet sb = sub.lift(exact.solution.vertices);  // contains s2

    res.solution = Solution::of(set_union(s1, sb));
    res.case_taken = cls.good_leaves.empty() ? CaseTaken::Bucket : CaseTaken::Ocean;
    return res;
}

}  // namespace hybridparam

#endif
