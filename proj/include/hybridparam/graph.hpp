#ifndef HYBRIDPARAM_GRAPH_HPP
#define HYBRIDPARAM_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hybridparam {

using Vertex = int;

// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct oracle_fault : std::logic_error {
    using std::logic_error::logic_error;
};

inline VertexSet make_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline bool set_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    return set_intersect(a, b).empty();
}

// Simple undirected graph on vertices 1..n. No loops, no parallel edges.
// Immutable after construction; every operation returns a fresh graph.
class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
        if (n < 0) throw input_error("Graph: negative vertex count");
    }

    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
        finalize();
    }

    int num_vertices() const { return n_; }

    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool valid_vertex(Vertex v) const { return v >= 1 && v <= n_; }

    void check_vertex(Vertex v) const {
        if (!valid_vertex(v))
            throw input_error("vertex label " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        if (!valid_vertex(u) || !valid_vertex(v) || u == v) return false;
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    VertexSet vertices() const {
        VertexSet v(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) v[static_cast<size_t>(i)] = i + 1;
        return v;
    }

    // Builder used by constructors and generators; call finalize() once done.
    void add_edge_internal(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return;
        if (u > v) std::swap(u, v);
        pending_.emplace_back(u, v);
    }

    void finalize() {
        std::sort(pending_.begin(), pending_.end());
        pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());
        edges_ = std::move(pending_);
        pending_.clear();
        for (auto& a : adj_) a.clear();
        for (auto [u, v] : edges_) {
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

private:
    int n_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::pair<Vertex, Vertex>> pending_;
};

// Induced subgraph together with the label maps in both directions.
// to_old[new] = old label (1-indexed); to_new maps old label -> new label
// (0 where the old vertex was dropped).
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_old;  // size |S|+1, slot 0 unused
    std::vector<Vertex> to_new;  // size n(G)+1, 0 = not present

    Vertex old_label(Vertex v) const { return to_old[static_cast<size_t>(v)]; }
    Vertex new_label(Vertex v) const { return to_new[static_cast<size_t>(v)]; }

    VertexSet lift(const VertexSet& s) const {
        VertexSet out;
        out.reserve(s.size());
        for (Vertex v : s) out.push_back(old_label(v));
        return make_set(std::move(out));
    }

    VertexSet restrict(const VertexSet& s) const {
        VertexSet out;
        for (Vertex v : s)
            if (v < static_cast<Vertex>(to_new.size()) && to_new[static_cast<size_t>(v)] != 0)
                out.push_back(to_new[static_cast<size_t>(v)]);
        return make_set(std::move(out));
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    InducedSubgraph out;
    out.to_old.assign(s.size() + 1, 0);
    out.to_new.assign(static_cast<size_t>(g.num_vertices()) + 1, 0);
    Vertex next = 1;
    for (Vertex v : s) {
        out.to_old[static_cast<size_t>(next)] = v;
        out.to_new[static_cast<size_t>(v)] = next;
        ++next;
    }
    Graph h(static_cast<int>(s.size()));
    for (auto [u, v] : g.edges()) {
        Vertex nu = out.to_new[static_cast<size_t>(u)];
        Vertex nv = out.to_new[static_cast<size_t>(v)];
        if (nu != 0 && nv != 0) h.add_edge_internal(nu, nv);
    }
    h.finalize();
    out.graph = std::move(h);
    return out;
}

inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    return induced_subgraph(g, set_minus(g.vertices(), s));
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw input_error("delete_edge: not an edge");
    Graph h(g.num_vertices());
    for (auto [a, b] : g.edges())
        if (!((a == std::min(u, v)) && (b == std::max(u, v)))) h.add_edge_internal(a, b);
    h.finalize();
    return h;
}

// Contract edge uv. The merged vertex takes label min(u,v) in the result
// after compacting labels; multi-edges and loops are dropped. contraction_map
// sends each old vertex to its new label, with u and v mapping together.
struct Contraction {
    Graph graph;
    std::vector<Vertex> contraction_map;  // old label -> new label
};

inline Contraction contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw input_error("contract_edge: not an edge");
    if (u > v) std::swap(u, v);
    Contraction out;
    out.contraction_map.assign(static_cast<size_t>(g.num_vertices()) + 1, 0);
    Vertex next = 1;
    for (Vertex w = 1; w <= g.num_vertices(); ++w) {
        if (w == v) continue;
        out.contraction_map[static_cast<size_t>(w)] = next++;
    }
    out.contraction_map[static_cast<size_t>(v)] = out.contraction_map[static_cast<size_t>(u)];
    Graph h(g.num_vertices() - 1);
    for (auto [a, b] : g.edges()) {
        Vertex na = out.contraction_map[static_cast<size_t>(a)];
        Vertex nb = out.contraction_map[static_cast<size_t>(b)];
        if (na != nb) h.add_edge_internal(na, nb);
    }
    h.finalize();
    out.graph = std::move(h);
    return out;
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph h(g1.num_vertices() + g2.num_vertices());
    for (auto [u, v] : g1.edges()) h.add_edge_internal(u, v);
    int shift = g1.num_vertices();
    for (auto [u, v] : g2.edges()) h.add_edge_internal(u + shift, v + shift);
    h.finalize();
    return h;
}

// Components ordered by smallest member; members sorted.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<size_t>(g.num_vertices()) + 1, 0);
    int nc = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= g.num_vertices(); ++s) {
        if (comp[static_cast<size_t>(s)] != 0) continue;
        ++nc;
        comp[static_cast<size_t>(s)] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == 0) {
                    comp[static_cast<size_t>(w)] = nc;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<VertexSet> out(static_cast<size_t>(nc));
    for (Vertex v = 1; v <= g.num_vertices(); ++v)
        out[static_cast<size_t>(comp[static_cast<size_t>(v)] - 1)].push_back(v);
    return out;  // scanning order gives smallest-member ordering already
}

inline bool is_connected(const Graph& g) {
    return g.num_vertices() == 0 || connected_components(g).size() == 1;
}

inline bool induces_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    return is_connected(induced_subgraph(g, s).graph);
}

inline bool is_forest(const Graph& g) {
    // acyclic iff every component has |E| = |V| - 1
    auto comps = connected_components(g);
    size_t edge_budget = 0;
    for (const auto& c : comps) edge_budget += c.size() - 1;
    return static_cast<size_t>(g.num_edges()) <= edge_budget;
}

// Open neighborhood N(S) \ S.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> out;
    for (Vertex v : s)
        for (Vertex w : g.neighbors(v))
            if (!set_contains(s, w)) out.push_back(w);
    return make_set(std::move(out));
}

inline bool is_edgeless(const Graph& g) { return g.num_edges() == 0; }

// Exhaustive isomorphism; supported only for n <= 8.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    if (a.num_edges() != b.num_edges()) return false;
    int n = a.num_vertices();
    if (n > 8) throw unsupported_error("is_isomorphic: only supported for n <= 8");
    std::vector<int> da, db;
    for (Vertex v = 1; v <= n; ++v) da.push_back(a.degree(v));
    for (Vertex v = 1; v <= n; ++v) db.push_back(b.degree(v));
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<Vertex> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    do {
        bool ok = true;
        for (Vertex v = 1; v <= n && ok; ++v)
            if (da[static_cast<size_t>(v - 1)] !=
                db[static_cast<size_t>(perm[static_cast<size_t>(v - 1)] - 1)])
                ok = false;
        for (auto [u, v] : a.edges()) {
            if (!ok) break;
            if (!b.has_edge(perm[static_cast<size_t>(u - 1)], perm[static_cast<size_t>(v - 1)]))
                ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Small named graphs, used all over the tests and generators.
inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge_internal(i, i + 1);
    g.finalize();
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle_graph: need n >= 3");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge_internal(i, i + 1);
    g.add_edge_internal(n, 1);
    g.finalize();
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge_internal(i, j);
    g.finalize();
    return g;
}

inline Graph star_graph(int leaves) {  // center is vertex 1
    Graph g(leaves + 1);
    for (int i = 2; i <= leaves + 1; ++i) g.add_edge_internal(1, i);
    g.finalize();
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

}  // namespace hybridparam

#endif
