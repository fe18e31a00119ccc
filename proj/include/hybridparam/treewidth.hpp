#ifndef HYBRIDPARAM_TREEWIDTH_HPP
#define HYBRIDPARAM_TREEWIDTH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hybridparam/graph.hpp"
#include "hybridparam/minor.hpp"

namespace hybridparam {

// Standard (rooted) tree decomposition. Nodes are 1..num_nodes(), node 1 is
// the root by convention.
struct TreeDecomposition {
    std::vector<VertexSet> bags;               // index 0 unused
    std::vector<std::pair<int, int>> tree_edges;

    int num_nodes() const { return static_cast<int>(bags.size()) - 1; }

    const VertexSet& bag(int t) const { return bags[static_cast<size_t>(t)]; }

    int width() const {
        int w = 0;
        for (int t = 1; t <= num_nodes(); ++t)
            w = std::max(w, static_cast<int>(bag(t).size()) - 1);
        return std::max(w, 0);
    }

    std::vector<std::vector<int>> node_adjacency() const {
        std::vector<std::vector<int>> adj(bags.size());
        for (auto [a, b] : tree_edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        return adj;
    }
};

struct Validation {
    bool ok = true;
    int condition = 0;
    std::string detail;

    static Validation fail(int cond, std::string why) { return {false, cond, std::move(why)}; }
};

namespace detail {

inline bool tree_is_connected_acyclic(int num_nodes,
                                      const std::vector<std::pair<int, int>>& edges) {
    if (num_nodes == 0) return edges.empty();
    if (static_cast<int>(edges.size()) != num_nodes - 1) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(num_nodes) + 1);
    for (auto [a, b] : edges) {
        if (a < 1 || a > num_nodes || b < 1 || b > num_nodes || a == b) return false;
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<bool> seen(static_cast<size_t>(num_nodes) + 1, false);
    std::vector<int> stack = {1};
    seen[1] = true;
    int cnt = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++cnt;
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    return cnt == num_nodes;
}

inline bool occurrences_connected(const Graph& g, const TreeDecomposition& td, Vertex v,
                                  const std::vector<std::vector<int>>& adj) {
    (void)g;
    std::vector<int> holders;
    for (int t = 1; t <= td.num_nodes(); ++t)
        if (set_contains(td.bag(t), v)) holders.push_back(t);
    if (holders.empty()) return false;
    std::vector<bool> in_holders(static_cast<size_t>(td.num_nodes()) + 1, false);
    for (int t : holders) in_holders[static_cast<size_t>(t)] = true;
    std::vector<bool> seen(static_cast<size_t>(td.num_nodes()) + 1, false);
    std::vector<int> stack = {holders[0]};
    seen[static_cast<size_t>(holders[0])] = true;
    size_t cnt = 0;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        ++cnt;
        for (int s : adj[static_cast<size_t>(t)])
            if (in_holders[static_cast<size_t>(s)] && !seen[static_cast<size_t>(s)]) {
                seen[static_cast<size_t>(s)] = true;
                stack.push_back(s);
            }
    }
    return cnt == holders.size();
}

}  // namespace detail

namespace detail {

// Bags are sorted duplicate-free lists throughout; reject anything else
// loudly instead of letting binary searches misfire.
inline bool bag_well_formed(const VertexSet& bag) {
    for (size_t i = 1; i < bag.size(); ++i)
        if (bag[i - 1] >= bag[i]) return false;
    return true;
}

}  // namespace detail

inline Validation validate_td(const Graph& g, const TreeDecomposition& td) {
    if (td.num_nodes() < 1) return Validation::fail(0, "decomposition has no nodes");
    for (int t = 1; t <= td.num_nodes(); ++t)
        if (!detail::bag_well_formed(td.bag(t)))
            return Validation::fail(0, "bag of node " + std::to_string(t) +
                                           " is not a sorted vertex set");
    if (!detail::tree_is_connected_acyclic(td.num_nodes(), td.tree_edges))
        return Validation::fail(0, "node edges do not form a tree");
    for (int t = 1; t <= td.num_nodes(); ++t)
        for (Vertex v : td.bag(t))
            if (!g.valid_vertex(v))
                return Validation::fail(0, "bag of node " + std::to_string(t) +
                                               " mentions unknown vertex " + std::to_string(v));
    auto adj = td.node_adjacency();
    for (Vertex v = 1; v <= g.num_vertices(); ++v)
        if (!detail::occurrences_connected(g, td, v, adj))
            return Validation::fail(1, "vertex " + std::to_string(v) +
                                           " has empty or disconnected occurrence set");
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int t = 1; t <= td.num_nodes() && !covered; ++t)
            if (set_contains(td.bag(t), u) && set_contains(td.bag(t), v)) covered = true;
        if (!covered)
            return Validation::fail(2, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                           " covered by no bag");
    }
    return {};
}

// Build the tree decomposition induced by an elimination order: bag of v is
// v plus its later neighbors in the fill-in graph; each bag hangs under the
// bag of its earliest later fill-neighbor.
inline TreeDecomposition td_from_elimination_order(const Graph& g,
                                                   const std::vector<Vertex>& order) {
    int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n)
        throw input_error("elimination order must list every vertex exactly once");
    if (n == 0) {
        TreeDecomposition td;
        td.bags.assign(2, {});
        return td;  // single empty bag
    }
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    // fill-in via successive elimination on adjacency sets
    std::vector<VertexSet> nb(static_cast<size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v) nb[static_cast<size_t>(v)] = g.neighbors(v);
    std::vector<VertexSet> bags(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(i)];
        VertexSet later;
        for (Vertex w : nb[static_cast<size_t>(v)])
            if (pos[static_cast<size_t>(w)] > i) later.push_back(w);
        later = make_set(std::move(later));
        bags[static_cast<size_t>(v)] = set_union({v}, later);
        // connect later neighbors pairwise
        for (Vertex a : later)
            for (Vertex b : later)
                if (a < b && !set_contains(nb[static_cast<size_t>(a)], b)) {
                    nb[static_cast<size_t>(a)] = set_union(nb[static_cast<size_t>(a)], {b});
                    nb[static_cast<size_t>(b)] = set_union(nb[static_cast<size_t>(b)], {a});
                }
    }
    // node ids: node i+1 holds bag of order[n-1-i], so the last-eliminated
    // vertex becomes the root (node 1)
    std::vector<int> node_of(static_cast<size_t>(n) + 1, 0);
    TreeDecomposition td;
    td.bags.assign(static_cast<size_t>(n) + 1, {});
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(n - 1 - i)];
        node_of[static_cast<size_t>(v)] = i + 1;
        td.bags[static_cast<size_t>(i + 1)] = bags[static_cast<size_t>(v)];
    }
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(i)];
        Vertex parent = 0;
        int best = n + 1;
        for (Vertex w : bags[static_cast<size_t>(v)])
            if (w != v && pos[static_cast<size_t>(w)] < best) {
                best = pos[static_cast<size_t>(w)];
                parent = w;
            }
        if (parent != 0)
            td.tree_edges.emplace_back(node_of[static_cast<size_t>(parent)],
                                       node_of[static_cast<size_t>(v)]);
        else if (v != order[static_cast<size_t>(n - 1)])
            // isolated piece: hang under the root to keep one tree
            td.tree_edges.emplace_back(1, node_of[static_cast<size_t>(v)]);
    }
    return td;
}

namespace detail {

// Number of vertices outside S u {v} reachable from v through S.
inline int elimination_degree(const Graph& g, uint32_t s_mask, Vertex v) {
    int n = g.num_vertices();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    std::vector<Vertex> stack = {v};
    seen[static_cast<size_t>(v)] = true;
    int count = 0;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(x)) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            if (s_mask & (1u << (w - 1)))
                stack.push_back(w);  // pass through S
            else
                ++count;
        }
    }
    return count;
}

}  // namespace detail

// Exact treewidth by dynamic programming over subsets of elimination
// prefixes. Guaranteed only up to n = 14.
inline std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g) {
    int n = g.num_vertices();
    if (n > 14) throw unsupported_error("treewidth_exact: n > 14");
    if (n == 0) return {0, td_from_elimination_order(g, {})};
    std::vector<int> f(static_cast<size_t>(1) << n, 0);
    std::vector<int8_t> choice(static_cast<size_t>(1) << n, -1);
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int best = n + 1;
        int8_t pick = -1;
        for (int v = 1; v <= n; ++v) {
            if (!(s & (1u << (v - 1)))) continue;
            uint32_t rest = s & ~(1u << (v - 1));
            int cand = std::max(f[rest], detail::elimination_degree(g, rest, v));
            if (cand < best) {
                best = cand;
                pick = static_cast<int8_t>(v);
            }
        }
        f[s] = best;
        choice[s] = pick;
    }
    std::vector<Vertex> order(static_cast<size_t>(n));
    uint32_t s = (1u << n) - 1;
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = choice[s];
        order[static_cast<size_t>(i)] = v;
        s &= ~(1u << (v - 1));
    }
    TreeDecomposition td = td_from_elimination_order(g, order);
    return {f[(1u << n) - 1], td};
}

// Min-fill greedy elimination. Always a valid decomposition, width is only
// an upper bound on the true treewidth.
inline TreeDecomposition treewidth_greedy(const Graph& g) {
    int n = g.num_vertices();
    std::vector<VertexSet> nb(static_cast<size_t>(n) + 1);
    for (Vertex v = 1; v <= n; ++v) nb[static_cast<size_t>(v)] = g.neighbors(v);
    std::vector<bool> gone(static_cast<size_t>(n) + 1, false);
    std::vector<Vertex> order;
    order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = 0;
        long long best_fill = -1;
        int best_deg = 0;
        for (Vertex v = 1; v <= n; ++v) {
            if (gone[static_cast<size_t>(v)]) continue;
            const auto& cand = nb[static_cast<size_t>(v)];
            long long fill = 0;
            for (size_t i = 0; i < cand.size(); ++i)
                for (size_t j = i + 1; j < cand.size(); ++j)
                    if (!set_contains(nb[static_cast<size_t>(cand[i])], cand[j])) ++fill;
            int deg = static_cast<int>(cand.size());
            if (best == 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        order.push_back(best);
        gone[static_cast<size_t>(best)] = true;
        auto cand = nb[static_cast<size_t>(best)];
        for (size_t i = 0; i < cand.size(); ++i)
            for (size_t j = i + 1; j < cand.size(); ++j) {
                nb[static_cast<size_t>(cand[i])] =
                    set_union(nb[static_cast<size_t>(cand[i])], {cand[j]});
                nb[static_cast<size_t>(cand[j])] =
                    set_union(nb[static_cast<size_t>(cand[j])], {cand[i]});
            }
        for (Vertex w : cand)
            nb[static_cast<size_t>(w)] = set_minus(nb[static_cast<size_t>(w)], {best});
    }
    return td_from_elimination_order(g, order);
}

inline int degeneracy(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> gone(static_cast<size_t>(n) + 1, false);
    for (Vertex v = 1; v <= n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        Vertex best = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (!gone[static_cast<size_t>(v)] &&
                (best == 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                best = v;
        d = std::max(d, deg[static_cast<size_t>(best)]);
        gone[static_cast<size_t>(best)] = true;
        for (Vertex w : g.neighbors(best))
            if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    return d;
}

enum class Membership { Yes, No, Unknown };

// Decide tw(G) <= w: exact for n <= 14, otherwise greedy upper bound vs.
// degeneracy / clique-minor lower bounds, with an honest Unknown in between.
inline Membership treewidth_at_most(const Graph& g, int w) {
    if (g.num_vertices() <= 14) return treewidth_exact(g).first <= w ? Membership::Yes : Membership::No;
    if (treewidth_greedy(g).width() <= w) return Membership::Yes;
    if (degeneracy(g) > w) return Membership::No;
    if (g.num_vertices() <= 20 && has_minor(g, complete_graph(w + 2))) return Membership::No;
    return Membership::Unknown;
}

}  // namespace hybridparam

#endif
