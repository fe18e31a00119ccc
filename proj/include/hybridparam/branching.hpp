#ifndef HYBRIDPARAM_BRANCHING_HPP
#define HYBRIDPARAM_BRANCHING_HPP

#include "hybridparam/graph.hpp"

namespace hybridparam {

// Classic edge branching: a vertex cover of size <= k exists iff for any
// edge uv one of the endpoints can be taken.
inline bool vc_decide_branch(const Graph& g, int k) {
    if (g.num_edges() == 0) return true;
    if (k <= 0) return false;
    auto [u, v] = g.edges().front();
    if (vc_decide_branch(delete_vertices(g, {u}).graph, k - 1)) return true;
    return vc_decide_branch(delete_vertices(g, {v}).graph, k - 1);
}

}  // namespace hybridparam

#endif
