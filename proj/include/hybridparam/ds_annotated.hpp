#ifndef HYBRIDPARAM_DS_ANNOTATED_HPP
#define HYBRIDPARAM_DS_ANNOTATED_HPP

#include "hybridparam/graph.hpp"
#include "hybridparam/problem.hpp"

namespace hybridparam {

// Annotated dominating set instance: vertices in `dominated` never require
// domination, and the normalization keeps them pairwise non-adjacent.
struct AnnotatedDSInstance {
    Graph graph;
    VertexSet dominated;

    ProblemInstance as_problem() const {
        return ProblemInstance::dominating_set(graph, dominated, {});
    }
};

// Drop all edges inside D; the optimum is unchanged because a solution vertex
// in D is only ever useful through its neighbors outside D.
inline AnnotatedDSInstance annotate_normalize(const Graph& g, const VertexSet& d) {
    for (Vertex v : d) g.check_vertex(v);
    Graph h(g.num_vertices());
    for (auto [u, v] : g.edges())
        if (!(set_contains(d, u) && set_contains(d, v))) h.add_edge_internal(u, v);
    h.finalize();
    return {std::move(h), d};
}

// Contract an edge of an annotated instance; the merged vertex is always
// undominated, so D stays independent and the optimum cannot grow.
inline AnnotatedDSInstance contract_annotated(const AnnotatedDSInstance& inst, Vertex u,
                                              Vertex v) {
    if (!inst.graph.has_edge(u, v)) throw input_error("contract_annotated: not an edge");
    auto c = contract_edge(inst.graph, u, v);
    VertexSet d;
    for (Vertex w : inst.dominated) {
        if (w == u || w == v) continue;
        d.push_back(c.contraction_map[static_cast<size_t>(w)]);
    }
    return {std::move(c.graph), make_set(std::move(d))};
}

}  // namespace hybridparam

#endif
