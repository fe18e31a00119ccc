#ifndef HYBRIDPARAM_PROBLEM_HPP
#define HYBRIDPARAM_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "hybridparam/graph.hpp"
#include "hybridparam/minor.hpp"

namespace hybridparam {

enum class ProblemKind {
    VertexCover,
    FeedbackVertexSet,
    IndependentSet,
    DominatingSet,       // annotated (dominated set D) + forced set B
    BlueWhiteDominatingSet,
    SetIntersectingVertexCover,
    ConnectedVertexCover,
    CyclePacking,
    MinorPacking,
    SubgraphPacking,
};

inline bool is_maximization(ProblemKind k) {
    return k == ProblemKind::IndependentSet || k == ProblemKind::CyclePacking ||
           k == ProblemKind::MinorPacking || k == ProblemKind::SubgraphPacking;
}

inline bool is_packing(ProblemKind k) {
    return k == ProblemKind::CyclePacking || k == ProblemKind::MinorPacking ||
           k == ProblemKind::SubgraphPacking;
}

inline std::string kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::VertexCover: return "vc";
        case ProblemKind::FeedbackVertexSet: return "fvs";
        case ProblemKind::IndependentSet: return "is";
        case ProblemKind::DominatingSet: return "ds";
        case ProblemKind::BlueWhiteDominatingSet: return "bwds";
        case ProblemKind::SetIntersectingVertexCover: return "sivc";
        case ProblemKind::ConnectedVertexCover: return "cvc";
        case ProblemKind::CyclePacking: return "cycle-pack";
        case ProblemKind::MinorPacking: return "minor-pack";
        case ProblemKind::SubgraphPacking: return "subgraph-pack";
    }
    return "?";
}

struct ProblemInstance {
    ProblemKind kind = ProblemKind::VertexCover;
    Graph graph;
    VertexSet dominated;           // DS: D, vertices not requiring domination
    VertexSet forced;              // DS: B, vertices that must enter the solution
    VertexSet blue;                // BWDS
    VertexSet must_intersect;      // SIVC: X
    std::vector<Graph> patterns;   // minor / subgraph packing

    static ProblemInstance vertex_cover(Graph g) { return {ProblemKind::VertexCover, std::move(g), {}, {}, {}, {}, {}}; }
    static ProblemInstance feedback_vertex_set(Graph g) { return {ProblemKind::FeedbackVertexSet, std::move(g), {}, {}, {}, {}, {}}; }
    static ProblemInstance independent_set(Graph g) { return {ProblemKind::IndependentSet, std::move(g), {}, {}, {}, {}, {}}; }
    static ProblemInstance dominating_set(Graph g, VertexSet dominated = {}, VertexSet forced = {}) {
        return {ProblemKind::DominatingSet, std::move(g), std::move(dominated), std::move(forced), {}, {}, {}};
    }
    static ProblemInstance blue_white_ds(Graph g, VertexSet blue) {
        return {ProblemKind::BlueWhiteDominatingSet, std::move(g), {}, {}, std::move(blue), {}, {}};
    }
    static ProblemInstance sivc(Graph g, VertexSet x) {
        return {ProblemKind::SetIntersectingVertexCover, std::move(g), {}, {}, {}, std::move(x), {}};
    }
    static ProblemInstance connected_vertex_cover(Graph g) {
        return {ProblemKind::ConnectedVertexCover, std::move(g), {}, {}, {}, {}, {}};
    }
    static ProblemInstance cycle_packing(Graph g) {
        return {ProblemKind::CyclePacking, std::move(g), {}, {}, {}, {}, {cycle_graph(3)}};
    }
    static ProblemInstance minor_packing(Graph g, std::vector<Graph> patterns) {
        return {ProblemKind::MinorPacking, std::move(g), {}, {}, {}, {}, std::move(patterns)};
    }
    static ProblemInstance subgraph_packing(Graph g, std::vector<Graph> patterns) {
        return {ProblemKind::SubgraphPacking, std::move(g), {}, {}, {}, {}, std::move(patterns)};
    }
};

// One packed structure: a host subgraph of the instance graph (vertex list +
// edge list), the pattern it realizes, and the witness map.
struct PackingTuple {
    VertexSet host_vertices;
    std::vector<std::pair<Vertex, Vertex>> host_edges;
    Graph pattern;
    std::map<Vertex, VertexSet> phi;  // pattern vertex -> branch set (singletons for iso)
};

struct PackingSolution {
    std::vector<PackingTuple> tuples;
    int size() const { return static_cast<int>(tuples.size()); }
};

struct Solution {
    bool packing = false;
    VertexSet vertices;
    PackingSolution pack;

    long long value() const {
        return packing ? pack.size() : static_cast<long long>(vertices.size());
    }

    static Solution of(VertexSet s) { return {false, std::move(s), {}}; }
    static Solution of(PackingSolution p) { return {true, {}, std::move(p)}; }
};

namespace detail {

inline void check_witness_labels(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.valid_vertex(v))
            throw input_error("witness mentions unknown vertex " + std::to_string(v));
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!set_contains(s, u) && !set_contains(s, v)) return false;
    return true;
}

inline bool dominates(const Graph& g, const VertexSet& s, const VertexSet& exempt) {
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
        if (set_contains(exempt, v) || set_contains(s, v)) continue;
        bool dom = false;
        for (Vertex w : g.neighbors(v))
            if (set_contains(s, w)) {
                dom = true;
                break;
            }
        if (!dom) return false;
    }
    return true;
}

inline bool verify_packing(const ProblemInstance& inst, const PackingSolution& p) {
    const Graph& g = inst.graph;
    VertexSet used;
    for (const auto& t : p.tuples) {
        check_witness_labels(g, t.host_vertices);
        if (!sets_disjoint(used, t.host_vertices)) return false;
        used = set_union(used, t.host_vertices);
        // host edges must exist in G and stay inside the host vertex set
        Graph host(static_cast<int>(t.host_vertices.size()));
        InducedSubgraph sub = induced_subgraph(g, t.host_vertices);
        for (auto [u, v] : t.host_edges) {
            if (!set_contains(t.host_vertices, u) || !set_contains(t.host_vertices, v))
                throw input_error("packing tuple edge leaves its vertex set");
            if (!g.has_edge(u, v)) return false;
            host.add_edge_internal(sub.new_label(u), sub.new_label(v));
        }
        host.finalize();
        // pattern must come from the instance's family
        bool known = false;
        for (const auto& pat : inst.patterns) {
            if (pat.num_vertices() > 8 || t.pattern.num_vertices() > 8) continue;
            if (is_isomorphic(pat, t.pattern)) {
                known = true;
                break;
            }
        }
        if (!known) return false;
        if (inst.kind == ProblemKind::SubgraphPacking) {
            // phi must be a bijection host <- pattern realizing every edge
            if (static_cast<int>(t.phi.size()) != t.pattern.num_vertices()) return false;
            if (t.pattern.num_vertices() != static_cast<int>(t.host_vertices.size())) return false;
            VertexSet image;
            for (const auto& [pv, branch] : t.phi) {
                if (branch.size() != 1) return false;
                image = set_union(image, branch);
            }
            if (image != t.host_vertices) return false;
            for (auto [pu, pv] : t.pattern.edges()) {
                Vertex hu = t.phi.at(pu)[0], hv = t.phi.at(pv)[0];
                bool present = false;
                for (auto [a, b] : t.host_edges)
                    if ((a == hu && b == hv) || (a == hv && b == hu)) present = true;
                if (!present) return false;
            }
        } else {
            MinorModel m;
            m.pattern = t.pattern;
            m.host = host;
            for (const auto& [pv, branch] : t.phi) m.phi[pv] = sub.restrict(branch);
            if (!verify_minor_model(m)) return false;
        }
    }
    return true;
}

}  // namespace detail

// Feasibility of a witness for its instance. Malformed witnesses (labels
// outside the graph) raise input_error; a well-formed infeasible witness
// returns false.
inline bool verify_solution(const ProblemInstance& inst, const Solution& sol) {
    const Graph& g = inst.graph;
    if (sol.packing != is_packing(inst.kind))
        throw input_error("witness shape does not match problem kind");
    if (sol.packing) return detail::verify_packing(inst, sol.pack);

    const VertexSet& s = sol.vertices;
    detail::check_witness_labels(g, s);
    switch (inst.kind) {
        case ProblemKind::VertexCover:
            return detail::is_vertex_cover(g, s);
        case ProblemKind::FeedbackVertexSet:
            return is_forest(delete_vertices(g, s).graph);
        case ProblemKind::IndependentSet: {
            for (auto [u, v] : g.edges())
                if (set_contains(s, u) && set_contains(s, v)) return false;
            return true;
        }
        case ProblemKind::DominatingSet:
            if (!set_subset(inst.forced, s)) return false;
            return detail::dominates(g, s, inst.dominated);
        case ProblemKind::BlueWhiteDominatingSet:
            if (!set_subset(inst.blue, s)) return false;
            return detail::dominates(g, s, {});
        case ProblemKind::SetIntersectingVertexCover: {
            if (!detail::is_vertex_cover(g, s)) return false;
            auto sub = induced_subgraph(g, s);
            for (const auto& comp : connected_components(sub.graph))
                if (set_intersect(sub.lift(comp), inst.must_intersect).empty()) return false;
            return true;
        }
        case ProblemKind::ConnectedVertexCover: {
            if (!detail::is_vertex_cover(g, s)) return false;
            return induces_connected(g, s);
        }
        default:
            throw input_error("verify_solution: packing kind with vertex witness");
    }
}

}  // namespace hybridparam

#endif
