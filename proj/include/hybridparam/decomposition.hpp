#ifndef HYBRIDPARAM_DECOMPOSITION_HPP
#define HYBRIDPARAM_DECOMPOSITION_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hybridparam/family.hpp"
#include "hybridparam/graph.hpp"
#include "hybridparam/treewidth.hpp"

namespace hybridparam {

// H-tree decomposition (T, chi, L): a rooted tree of bags where the base
// vertices L live in unique leaf bags whose base parts induce members of the
// family. Node 1 is the root.
struct HTreeDecomposition {
    std::vector<VertexSet> bags;  // index 0 unused
    std::vector<std::pair<int, int>> tree_edges;
    VertexSet base;               // L
    FamilyPredicate family = FamilyPredicate::edgeless();

    int num_nodes() const { return static_cast<int>(bags.size()) - 1; }
    const VertexSet& bag(int t) const { return bags[static_cast<size_t>(t)]; }

    std::vector<std::vector<int>> node_adjacency() const {
        std::vector<std::vector<int>> adj(bags.size());
        for (auto [a, b] : tree_edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        return adj;
    }

    // children/parent relative to root 1
    std::vector<int> parents() const {
        auto adj = node_adjacency();
        std::vector<int> par(bags.size(), 0);
        std::vector<bool> seen(bags.size(), false);
        std::vector<int> stack = {1};
        seen[1] = true;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int s : adj[static_cast<size_t>(t)])
                if (!seen[static_cast<size_t>(s)]) {
                    seen[static_cast<size_t>(s)] = true;
                    par[static_cast<size_t>(s)] = t;
                    stack.push_back(s);
                }
        }
        return par;
    }

    std::vector<int> leaves() const {
        auto par = parents();
        std::vector<bool> has_child(bags.size(), false);
        for (int t = 2; t <= num_nodes(); ++t) has_child[static_cast<size_t>(par[static_cast<size_t>(t)])] = true;
        std::vector<int> out;
        for (int t = 1; t <= num_nodes(); ++t)
            if (!has_child[static_cast<size_t>(t)]) out.push_back(t);
        return out;
    }

    VertexSet base_part(int t) const { return set_intersect(bag(t), base); }   // H_t
    VertexSet non_base_part(int t) const { return set_minus(bag(t), base); }   // R_t

    bool operator==(const HTreeDecomposition& other) const {
        auto norm = [](std::vector<std::pair<int, int>> e) {
            for (auto& [a, b] : e)
                if (a > b) std::swap(a, b);
            std::sort(e.begin(), e.end());
            return e;
        };
        return bags == other.bags && norm(tree_edges) == norm(other.tree_edges) &&
               base == other.base && family.kind() == other.family.kind() &&
               family.width_bound() == other.family.width_bound();
    }
};

// Width per the max-with-zero formula, so an all-base decomposition has
// width 0 rather than -1.
inline int width(const HTreeDecomposition& d) {
    int w = 0;
    for (int t = 1; t <= d.num_nodes(); ++t)
        w = std::max(w, static_cast<int>(d.non_base_part(t).size()) - 1);
    return std::max(0, w);
}

inline Validation validate_htd(const Graph& g, const HTreeDecomposition& d) {
    if (d.num_nodes() < 1) return Validation::fail(0, "decomposition has no nodes");
    for (int t = 1; t <= d.num_nodes(); ++t)
        if (!detail::bag_well_formed(d.bag(t)))
            return Validation::fail(0, "bag of node " + std::to_string(t) +
                                           " is not a sorted vertex set");
    if (!detail::bag_well_formed(d.base))
        return Validation::fail(0, "base vertex set is not sorted");
    if (!detail::tree_is_connected_acyclic(d.num_nodes(), d.tree_edges))
        return Validation::fail(0, "node edges do not form a tree");
    for (int t = 1; t <= d.num_nodes(); ++t)
        for (Vertex v : d.bag(t))
            if (!g.valid_vertex(v))
                return Validation::fail(0, "node " + std::to_string(t) +
                                               " mentions unknown vertex " + std::to_string(v));
    for (Vertex v : d.base)
        if (!g.valid_vertex(v)) return Validation::fail(0, "base set mentions unknown vertex");

    auto adj = d.node_adjacency();
    TreeDecomposition shim;  // reuse the occurrence-connectivity helper
    shim.bags = d.bags;
    shim.tree_edges = d.tree_edges;
    for (Vertex v = 1; v <= g.num_vertices(); ++v)
        if (!detail::occurrences_connected(g, shim, v, adj))
            return Validation::fail(1, "vertex " + std::to_string(v) +
                                           " has empty or disconnected occurrence set");

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int t = 1; t <= d.num_nodes() && !covered; ++t)
            if (set_contains(d.bag(t), u) && set_contains(d.bag(t), v)) covered = true;
        if (!covered)
            return Validation::fail(2, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                           " covered by no bag");
    }

    auto leaf_list = d.leaves();
    std::vector<bool> is_leaf(d.bags.size(), false);
    for (int t : leaf_list) is_leaf[static_cast<size_t>(t)] = true;
    for (Vertex v : d.base) {
        int occurrences = 0;
        bool at_leaf = true;
        for (int t = 1; t <= d.num_nodes(); ++t)
            if (set_contains(d.bag(t), v)) {
                ++occurrences;
                if (!is_leaf[static_cast<size_t>(t)]) at_leaf = false;
            }
        if (occurrences != 1 || !at_leaf)
            return Validation::fail(3, "base vertex " + std::to_string(v) +
                                           " must appear in exactly one bag, at a leaf");
    }

    for (int t : leaf_list) {
        Graph base_graph = induced_subgraph(g, d.base_part(t)).graph;
        if (!d.family.contains_certain(base_graph))
            return Validation::fail(4, "base part of leaf " + std::to_string(t) +
                                           " is not certainly in family " + d.family.name());
    }
    return {};
}

// H-elimination decomposition (rooted forest). Roots are the nodes without a
// parent; within each tree the smallest node id is its root.
struct HElimDecomposition {
    std::vector<VertexSet> bags;  // index 0 unused
    std::vector<std::pair<int, int>> forest_edges;
    VertexSet base;
    FamilyPredicate family = FamilyPredicate::edgeless();

    int num_nodes() const { return static_cast<int>(bags.size()) - 1; }
    const VertexSet& bag(int t) const { return bags[static_cast<size_t>(t)]; }

    std::vector<std::vector<int>> node_adjacency() const {
        std::vector<std::vector<int>> adj(bags.size());
        for (auto [a, b] : forest_edges) {
            adj[static_cast<size_t>(a)].push_back(b);
            adj[static_cast<size_t>(b)].push_back(a);
        }
        return adj;
    }

    // parent array (0 = root); roots are chosen as smallest id per tree
    std::vector<int> parents() const {
        auto adj = node_adjacency();
        std::vector<int> par(bags.size(), -1);
        for (int r = 1; r <= num_nodes(); ++r) {
            if (par[static_cast<size_t>(r)] != -1) continue;
            par[static_cast<size_t>(r)] = 0;
            std::vector<int> stack = {r};
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int s : adj[static_cast<size_t>(t)])
                    if (par[static_cast<size_t>(s)] == -1) {
                        par[static_cast<size_t>(s)] = t;
                        stack.push_back(s);
                    }
            }
        }
        return par;
    }

    std::vector<int> leaves() const {
        auto par = parents();
        std::vector<bool> has_child(bags.size(), false);
        for (int t = 1; t <= num_nodes(); ++t)
            if (par[static_cast<size_t>(t)] > 0) has_child[static_cast<size_t>(par[static_cast<size_t>(t)])] = true;
        std::vector<int> out;
        for (int t = 1; t <= num_nodes(); ++t)
            if (!has_child[static_cast<size_t>(t)]) out.push_back(t);
        return out;
    }

    int depth() const {
        auto par = parents();
        int best = 0;
        for (int t = 1; t <= num_nodes(); ++t) {
            int d = 0;
            for (int x = t; par[static_cast<size_t>(x)] > 0; x = par[static_cast<size_t>(x)]) ++d;
            best = std::max(best, d);
        }
        return best;
    }
};

inline Validation validate_helim(const Graph& g, const HElimDecomposition& d) {
    if (d.num_nodes() < 1) return Validation::fail(0, "decomposition has no nodes");
    for (int t = 1; t <= d.num_nodes(); ++t)
        if (!detail::bag_well_formed(d.bag(t)))
            return Validation::fail(0, "bag of node " + std::to_string(t) +
                                           " is not a sorted vertex set");
    if (!detail::bag_well_formed(d.base))
        return Validation::fail(0, "base vertex set is not sorted");
    // forest: no cycles
    {
        int n = d.num_nodes();
        std::vector<std::vector<int>> adj = d.node_adjacency();
        std::vector<int> comp(static_cast<size_t>(n) + 1, 0);
        int nc = 0;
        for (int r = 1; r <= n; ++r) {
            if (comp[static_cast<size_t>(r)]) continue;
            ++nc;
            std::vector<int> stack = {r};
            comp[static_cast<size_t>(r)] = nc;
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int s : adj[static_cast<size_t>(t)])
                    if (!comp[static_cast<size_t>(s)]) {
                        comp[static_cast<size_t>(s)] = nc;
                        stack.push_back(s);
                    }
            }
        }
        if (static_cast<int>(d.forest_edges.size()) != n - nc)
            return Validation::fail(0, "node edges do not form a forest");
    }

    auto par = d.parents();
    auto leaf_list = d.leaves();
    std::vector<bool> is_leaf(d.bags.size(), false);
    for (int t : leaf_list) is_leaf[static_cast<size_t>(t)] = true;

    // condition 1: internal bags are single non-base vertices (or empty)
    for (int t = 1; t <= d.num_nodes(); ++t) {
        if (is_leaf[static_cast<size_t>(t)]) continue;
        if (d.bag(t).size() > 1)
            return Validation::fail(1, "internal node " + std::to_string(t) + " has bag size > 1");
        for (Vertex v : d.bag(t))
            if (set_contains(d.base, v))
                return Validation::fail(1, "internal node " + std::to_string(t) +
                                               " contains base vertex " + std::to_string(v));
    }

    // condition 2: bags partition V(G)
    {
        std::vector<int> holder(static_cast<size_t>(g.num_vertices()) + 1, 0);
        for (int t = 1; t <= d.num_nodes(); ++t)
            for (Vertex v : d.bag(t)) {
                if (!g.valid_vertex(v))
                    return Validation::fail(2, "bag mentions unknown vertex " + std::to_string(v));
                if (holder[static_cast<size_t>(v)] != 0)
                    return Validation::fail(2, "vertex " + std::to_string(v) +
                                                   " appears in two bags");
                holder[static_cast<size_t>(v)] = t;
            }
        for (Vertex v = 1; v <= g.num_vertices(); ++v)
            if (holder[static_cast<size_t>(v)] == 0)
                return Validation::fail(2, "vertex " + std::to_string(v) + " appears in no bag");
    }

    // condition 3: leaf bags inside L and inducing family members; they also
    // cover L because bags partition V and internal bags avoid L
    for (int t : leaf_list) {
        if (!set_subset(d.bag(t), d.base))
            return Validation::fail(3, "leaf " + std::to_string(t) +
                                           " contains a non-base vertex");
        Graph base_graph = induced_subgraph(g, d.bag(t)).graph;
        if (!d.family.contains_certain(base_graph))
            return Validation::fail(3, "base component of leaf " + std::to_string(t) +
                                           " is not certainly in family " + d.family.name());
    }

    // condition 4: edges respect ancestor-descendant relation
    {
        std::vector<int> holder(static_cast<size_t>(g.num_vertices()) + 1, 0);
        for (int t = 1; t <= d.num_nodes(); ++t)
            for (Vertex v : d.bag(t)) holder[static_cast<size_t>(v)] = t;
        auto is_ancestor = [&](int a, int t) {
            for (int x = t; x != 0; x = par[static_cast<size_t>(x)])
                if (x == a) return true;
            return false;
        };
        for (auto [u, v] : g.edges()) {
            int tu = holder[static_cast<size_t>(u)], tv = holder[static_cast<size_t>(v)];
            if (!is_ancestor(tu, tv) && !is_ancestor(tv, tu))
                return Validation::fail(4, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                               " spans unrelated nodes");
        }
    }
    return {};
}

// Modulator-shaped decomposition: root bag M, one leaf per component C of
// G - M with bag C u M and base part C.
inline HTreeDecomposition htd_from_modulator(const Graph& g, const VertexSet& m,
                                             const FamilyPredicate& family) {
    for (Vertex v : m) g.check_vertex(v);
    auto rest = delete_vertices(g, m);
    auto comps = connected_components(rest.graph);
    for (const auto& c : comps) {
        Graph cg = induced_subgraph(rest.graph, c).graph;
        if (!family.contains_certain(cg))
            throw input_error("htd_from_modulator: a component of G - M is not certainly in " +
                              family.name());
    }
    HTreeDecomposition d;
    d.family = family;
    d.base = set_minus(g.vertices(), m);
    if (m.empty()) {
        // single all-base leaf
        d.bags.assign(2, {});
        d.bags[1] = g.vertices();
        return d;
    }
    d.bags.assign(2 + comps.size(), {});
    d.bags[1] = m;
    int next = 2;
    for (const auto& c : comps) {
        d.bags[static_cast<size_t>(next)] = set_union(rest.lift(c), m);
        d.tree_edges.emplace_back(1, next);
        ++next;
    }
    return d;
}

// H-elimination decomposition to H-tree decomposition: each node's bag
// becomes its own bag plus everything on the path to its root.
inline HTreeDecomposition htd_from_helim(const Graph& g, const HElimDecomposition& e) {
    Validation v = validate_helim(g, e);
    if (!v.ok) throw input_error("htd_from_helim: invalid input decomposition: " + v.detail);
    auto par = e.parents();
    int n = e.num_nodes();
    std::vector<int> roots;
    for (int t = 1; t <= n; ++t)
        if (par[static_cast<size_t>(t)] == 0) roots.push_back(t);

    HTreeDecomposition d;
    d.family = e.family;
    d.base = e.base;
    bool need_root = roots.size() > 1;
    int offset = need_root ? 1 : 0;  // new node ids: old t -> t + offset
    d.bags.assign(static_cast<size_t>(n + offset) + 1, {});
    std::vector<VertexSet> closure(static_cast<size_t>(n) + 1);
    // process parents before children
    std::vector<int> order;
    {
        std::vector<std::vector<int>> kids(static_cast<size_t>(n) + 1);
        for (int t = 1; t <= n; ++t)
            if (par[static_cast<size_t>(t)] > 0) kids[static_cast<size_t>(par[static_cast<size_t>(t)])].push_back(t);
        std::vector<int> stack = roots;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            order.push_back(t);
            for (int s : kids[static_cast<size_t>(t)]) stack.push_back(s);
        }
    }
    for (int t : order) {
        int p = par[static_cast<size_t>(t)];
        closure[static_cast<size_t>(t)] =
            p == 0 ? e.bag(t) : set_union(e.bag(t), closure[static_cast<size_t>(p)]);
    }
    if (need_root) d.bags[1] = {};
    for (int t = 1; t <= n; ++t) {
        int id = t + offset;
        d.bags[static_cast<size_t>(id)] = closure[static_cast<size_t>(t)];
        int p = par[static_cast<size_t>(t)];
        if (p > 0)
            d.tree_edges.emplace_back(p + offset, id);
        else if (need_root)
            d.tree_edges.emplace_back(1, id);
    }
    if (!need_root && roots[0] != 1) {
        // rotate ids so the root is node 1
        int r = roots[0];
        std::swap(d.bags[1], d.bags[static_cast<size_t>(r)]);
        for (auto& [a, b] : d.tree_edges) {
            if (a == 1) a = r; else if (a == r) a = 1;
            if (b == 1) b = r; else if (b == r) b = 1;
        }
    }
    return d;
}

// Restriction of a decomposition to an induced subgraph G[W].
inline HTreeDecomposition project_htd(const HTreeDecomposition& d, const VertexSet& w) {
    HTreeDecomposition out;
    out.family = d.family;
    out.base = set_intersect(d.base, w);
    out.tree_edges = d.tree_edges;
    out.bags.assign(d.bags.size(), {});
    for (int t = 1; t <= d.num_nodes(); ++t)
        out.bags[static_cast<size_t>(t)] = set_intersect(d.bag(t), w);
    return out;
}

// Flatten to a standard tree decomposition: each leaf keeps bag R_t and its
// base component's decomposition hangs beneath it with R_t added to every
// bag. per_leaf maps leaf node -> tree decomposition of G[chi(t) n L], in the
// labels of G.
inline TreeDecomposition htd_to_td(const Graph& g, const HTreeDecomposition& d,
                                   const std::map<int, TreeDecomposition>& per_leaf) {
    TreeDecomposition out;
    out.bags.assign(d.bags.size(), {});
    out.tree_edges = d.tree_edges;
    for (int t = 1; t <= d.num_nodes(); ++t) out.bags[static_cast<size_t>(t)] = d.bag(t);

    for (int t : d.leaves()) {
        VertexSet base_part = d.base_part(t);
        VertexSet r = d.non_base_part(t);
        out.bags[static_cast<size_t>(t)] = r;
        if (base_part.empty()) continue;
        auto it = per_leaf.find(t);
        if (it == per_leaf.end())
            throw input_error("htd_to_td: missing decomposition for leaf " + std::to_string(t));
        const TreeDecomposition& leaf_td = it->second;
        Graph comp = induced_subgraph(g, base_part).graph;
        {
            // leaf decompositions must cover exactly the base part
            TreeDecomposition local;
            local.bags.assign(leaf_td.bags.size(), {});
            local.tree_edges = leaf_td.tree_edges;
            auto sub = induced_subgraph(g, base_part);
            for (int i = 1; i <= leaf_td.num_nodes(); ++i) {
                for (Vertex v : leaf_td.bag(i))
                    if (!set_contains(base_part, v))
                        throw input_error("htd_to_td: leaf decomposition strays outside base part");
                local.bags[static_cast<size_t>(i)] = sub.restrict(leaf_td.bag(i));
            }
            Validation val = validate_td(comp, local);
            if (!val.ok)
                throw input_error("htd_to_td: invalid leaf decomposition for leaf " +
                                  std::to_string(t) + ": " + val.detail);
        }
        int shift = out.num_nodes();
        for (int i = 1; i <= leaf_td.num_nodes(); ++i)
            out.bags.push_back(set_union(leaf_td.bag(i), r));
        for (auto [a, b] : leaf_td.tree_edges)
            out.tree_edges.emplace_back(a + shift, b + shift);
        out.tree_edges.emplace_back(t, 1 + shift);  // hang leaf TD root under t
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition file format (shared by H-tree, H-elimination and standard
// tree decompositions; standard ones simply have an empty `l` line):
//   htd <numNodes> <n>
//   b <node> <v...>
//   t <a> <b>
//   l <v...>
//   f <EDGELESS|FORESTS|TW> [w]
// ---------------------------------------------------------------------------

namespace detail {

struct RawDecomposition {
    int num_nodes = 0;
    int n = 0;
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
    VertexSet base;
    FamilyPredicate family = FamilyPredicate::edgeless();
    bool family_given = false;
};

inline RawDecomposition read_raw_decomposition(std::istream& in) {
    RawDecomposition raw;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "htd") {
            if (!(ls >> raw.num_nodes >> raw.n) || raw.num_nodes < 1)
                throw input_error("decomposition file: bad header: " + line);
            raw.bags.assign(static_cast<size_t>(raw.num_nodes) + 1, {});
            header = true;
        } else if (tok == "b") {
            if (!header) throw input_error("decomposition file: bag before header");
            int node;
            ls >> node;
            if (node < 1 || node > raw.num_nodes)
                throw input_error("decomposition file: bag for unknown node");
            std::vector<Vertex> vs;
            Vertex v;
            while (ls >> v) vs.push_back(v);
            raw.bags[static_cast<size_t>(node)] = make_set(std::move(vs));
        } else if (tok == "t") {
            int a, b;
            if (!(ls >> a >> b)) throw input_error("decomposition file: bad tree edge");
            raw.edges.emplace_back(a, b);
        } else if (tok == "l") {
            std::vector<Vertex> vs;
            Vertex v;
            while (ls >> v) vs.push_back(v);
            raw.base = make_set(std::move(vs));
        } else if (tok == "f") {
            std::string fam;
            ls >> fam;
            if (fam == "EDGELESS") raw.family = FamilyPredicate::edgeless();
            else if (fam == "FORESTS") raw.family = FamilyPredicate::forests();
            else if (fam == "TW") {
                int w;
                if (!(ls >> w)) throw input_error("decomposition file: TW needs a bound");
                raw.family = FamilyPredicate::treewidth_at_most(w);
            } else throw input_error("decomposition file: unknown family " + fam);
            raw.family_given = true;
        } else {
            throw input_error("decomposition file: unknown line: " + line);
        }
    }
    if (!header) throw input_error("decomposition file: missing htd header");
    return raw;
}

}  // namespace detail

inline HTreeDecomposition read_htd(std::istream& in) {
    auto raw = detail::read_raw_decomposition(in);
    HTreeDecomposition d;
    d.bags = std::move(raw.bags);
    d.tree_edges = std::move(raw.edges);
    d.base = std::move(raw.base);
    d.family = raw.family;
    return d;
}

inline HElimDecomposition read_helim(std::istream& in) {
    auto raw = detail::read_raw_decomposition(in);
    HElimDecomposition d;
    d.bags = std::move(raw.bags);
    d.forest_edges = std::move(raw.edges);
    d.base = std::move(raw.base);
    d.family = raw.family;
    return d;
}

inline TreeDecomposition read_td(std::istream& in) {
    auto raw = detail::read_raw_decomposition(in);
    if (!raw.base.empty())
        throw input_error("expected a standard tree decomposition (empty l line)");
    TreeDecomposition td;
    td.bags = std::move(raw.bags);
    td.tree_edges = std::move(raw.edges);
    return td;
}

inline void write_htd(std::ostream& out, const HTreeDecomposition& d, int n) {
    out << "htd " << d.num_nodes() << ' ' << n << '\n';
    for (int t = 1; t <= d.num_nodes(); ++t) {
        out << "b " << t;
        for (Vertex v : d.bag(t)) out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : d.tree_edges) out << "t " << a << ' ' << b << '\n';
    out << 'l';
    for (Vertex v : d.base) out << ' ' << v;
    out << '\n';
    switch (d.family.kind()) {
        case FamilyPredicate::Kind::Edgeless: out << "f EDGELESS\n"; break;
        case FamilyPredicate::Kind::Forests: out << "f FORESTS\n"; break;
        case FamilyPredicate::Kind::TreewidthAtMost:
            out << "f TW " << d.family.width_bound() << '\n';
            break;
    }
}

inline void write_helim(std::ostream& out, const HElimDecomposition& d, int n) {
    HTreeDecomposition shim;
    shim.bags = d.bags;
    shim.tree_edges = d.forest_edges;
    shim.base = d.base;
    shim.family = d.family;
    write_htd(out, shim, n);
}

inline HTreeDecomposition read_htd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open decomposition file: " + path);
    return read_htd(in);
}

inline HElimDecomposition read_helim_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open decomposition file: " + path);
    return read_helim(in);
}

inline TreeDecomposition read_td_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open decomposition file: " + path);
    return read_td(in);
}

inline void write_htd_file(const std::string& path, const HTreeDecomposition& d, int n) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open for writing: " + path);
    write_htd(out, d, n);
}

inline void write_helim_file(const std::string& path, const HElimDecomposition& d, int n) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open for writing: " + path);
    write_helim(out, d, n);
}

}  // namespace hybridparam

#endif
