#ifndef HYBRIDPARAM_TD_DP_HPP
#define HYBRIDPARAM_TD_DP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "hybridparam/brute.hpp"
#include "hybridparam/problem.hpp"
#include "hybridparam/treewidth.hpp"

namespace hybridparam {

namespace dp {

struct NiceNode {
    enum Kind { Leaf, Introduce, Forget, Join } kind = Leaf;
    Vertex v = 0;          // introduced/forgotten vertex
    VertexSet bag;
    int child1 = 0, child2 = 0;
};

struct NiceTD {
    std::vector<NiceNode> nodes;  // index 0 unused
    int root = 0;

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

// Expand an arbitrary rooted tree decomposition into leaf / introduce /
// forget / join nodes; the final root has an empty bag.
inline NiceTD make_nice(const TreeDecomposition& td) {
    NiceTD out;
    out.nodes.emplace_back();  // dummy slot 0

    auto adj = td.node_adjacency();
    std::vector<int> par(td.bags.size(), 0), order;
    std::vector<bool> seen(td.bags.size(), false);
    std::vector<int> stack = {1};
    seen[1] = true;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int s : adj[static_cast<size_t>(t)])
            if (!seen[static_cast<size_t>(s)]) {
                seen[static_cast<size_t>(s)] = true;
                par[static_cast<size_t>(s)] = t;
                stack.push_back(s);
            }
    }
    std::vector<std::vector<int>> kids(td.bags.size());
    for (int t : order)
        if (t != 1) kids[static_cast<size_t>(par[static_cast<size_t>(t)])].push_back(t);

    // chain of introduces from the empty bag up to `target`
    auto build_up_from_empty = [&](const VertexSet& target) {
        int cur = out.add({NiceNode::Leaf, 0, {}, 0, 0});
        VertexSet have;
        for (Vertex v : target) {
            have = set_union(have, {v});
            cur = out.add({NiceNode::Introduce, v, have, cur, 0});
        }
        return cur;
    };
    // adapt a subtree rooted with bag `from` to bag `to`
    auto morph = [&](int node, const VertexSet& from, const VertexSet& to) {
        int cur = node;
        VertexSet have = from;
        for (Vertex v : set_minus(from, to)) {
            have = set_minus(have, {v});
            cur = out.add({NiceNode::Forget, v, have, cur, 0});
        }
        for (Vertex v : set_minus(to, from)) {
            have = set_union(have, {v});
            cur = out.add({NiceNode::Introduce, v, have, cur, 0});
        }
        return cur;
    };

    std::vector<int> built(td.bags.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        const VertexSet& bag = td.bag(t);
        int acc = 0;
        for (int c : kids[static_cast<size_t>(t)]) {
            int adapted = morph(built[static_cast<size_t>(c)], td.bag(c), bag);
            if (acc == 0)
                acc = adapted;
            else
                acc = out.add({NiceNode::Join, 0, bag, acc, adapted});
        }
        if (acc == 0) acc = build_up_from_empty(bag);
        built[static_cast<size_t>(t)] = acc;
    }
    out.root = morph(built[1], td.bag(1), {});
    return out;
}

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

inline size_t pow_int(size_t b, size_t e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

inline int digit(size_t code, size_t i, size_t radix) {
    while (i--) code /= radix;
    return static_cast<int>(code % radix);
}

}  // namespace dp

// ---------------------------------------------------------------------------
// Two-state engine (vertex in / out of the solution): Vertex Cover and
// Independent Set.
// ---------------------------------------------------------------------------

namespace dp {

struct Tables {
    std::vector<std::vector<long long>> at;  // node -> state code -> value
};

inline long long solve2(const Graph& g, const NiceTD& nt, bool cover, bool maximize,
                        Tables& tables) {
    tables.at.assign(nt.nodes.size(), {});
    long long worst = maximize ? -kInf : kInf;
    for (size_t id = 1; id < nt.nodes.size(); ++id) {
        const NiceNode& nd = nt.nodes[id];
        size_t states = pow_int(2, nd.bag.size());
        auto& table = tables.at[id];
        table.assign(states, worst);
        auto index_of = [&](const VertexSet& bag, Vertex v) {
            return static_cast<size_t>(
                std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
        };
        switch (nd.kind) {
            case NiceNode::Leaf:
                table[0] = 0;
                break;
            case NiceNode::Introduce: {
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                size_t vi = index_of(nd.bag, nd.v);
                // bag-neighbors of v
                std::vector<size_t> nb;
                for (size_t i = 0; i < nd.bag.size(); ++i)
                    if (g.has_edge(nd.bag[i], nd.v)) nb.push_back(i);
                for (size_t cs = 0; cs < child.size(); ++cs) {
                    if (child[cs] == worst || child[cs] == kInf || child[cs] == -kInf) continue;
                    // expand child code to full code with v's digit spliced in
                    size_t lowmask = pow_int(2, vi);
                    size_t low = cs % lowmask, high = cs / lowmask;
                    size_t base = low + high * lowmask * 2;
                    // v out: a cover must already hold every bag-edge at v
                    bool ok_out = true;
                    if (cover)
                        for (size_t i : nb)
                            if (digit(base, i, 2) == 0) {
                                ok_out = false;
                                break;
                            }
                    if (ok_out) {
                        table[base] = maximize ? std::max(table[base], child[cs])
                                               : std::min(table[base], child[cs]);
                    }
                    // v in: an independent set must avoid chosen neighbors
                    bool ok_in = true;
                    if (!cover)
                        for (size_t i : nb)
                            if (digit(base + lowmask, i, 2) == 1) {
                                ok_in = false;
                                break;
                            }
                    if (ok_in) {
                        size_t code = base + lowmask;
                        long long val = child[cs] + 1;
                        table[code] =
                            maximize ? std::max(table[code], val) : std::min(table[code], val);
                    }
                }
                break;
            }
            case NiceNode::Forget: {
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                const VertexSet& cbag = nt.nodes[static_cast<size_t>(nd.child1)].bag;
                size_t vi = index_of(cbag, nd.v);
                size_t lowmask = pow_int(2, vi);
                for (size_t cs = 0; cs < child.size(); ++cs) {
                    size_t low = cs % lowmask, high = cs / (lowmask * 2);
                    size_t code = low + high * lowmask;
                    table[code] = maximize ? std::max(table[code], child[cs])
                                           : std::min(table[code], child[cs]);
                }
                break;
            }
            case NiceNode::Join: {
                const auto& a = tables.at[static_cast<size_t>(nd.child1)];
                const auto& b = tables.at[static_cast<size_t>(nd.child2)];
                for (size_t s = 0; s < table.size(); ++s) {
                    if (a[s] >= kInf || b[s] >= kInf || a[s] <= -kInf || b[s] <= -kInf) continue;
                    long long overlap = static_cast<long long>(__builtin_popcountll(s));
                    table[s] = a[s] + b[s] - overlap;
                }
                break;
            }
        }
    }
    return tables.at[static_cast<size_t>(nt.root)][0];
}

inline void witness2(const NiceTD& nt, const Tables& tables, VertexSet& out) {
    // walk down from the root, recording the chosen digit at each forget
    struct Item {
        int node;
        size_t state;
    };
    std::vector<Item> stack = {{nt.root, 0}};
    while (!stack.empty()) {
        auto [id, s] = stack.back();
        stack.pop_back();
        const NiceNode& nd = nt.nodes[static_cast<size_t>(id)];
        long long val = tables.at[static_cast<size_t>(id)][s];
        switch (nd.kind) {
            case NiceNode::Leaf:
                break;
            case NiceNode::Introduce: {
                const VertexSet& bag = nd.bag;
                size_t vi = static_cast<size_t>(
                    std::lower_bound(bag.begin(), bag.end(), nd.v) - bag.begin());
                size_t lowmask = pow_int(2, vi);
                size_t low = s % lowmask, high = s / (lowmask * 2);
                size_t cs = low + high * lowmask;
                stack.push_back({nd.child1, cs});
                break;
            }
            case NiceNode::Forget: {
                const VertexSet& cbag = nt.nodes[static_cast<size_t>(nd.child1)].bag;
                size_t vi = static_cast<size_t>(
                    std::lower_bound(cbag.begin(), cbag.end(), nd.v) - cbag.begin());
                size_t lowmask = pow_int(2, vi);
                size_t low = s % lowmask, high = s / lowmask;
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                size_t cs_out = low + high * lowmask * 2;
                size_t cs_in = cs_out + lowmask;
                if (child[cs_out] == val) {
                    stack.push_back({nd.child1, cs_out});
                } else if (child[cs_in] == val) {
                    out.push_back(nd.v);
                    stack.push_back({nd.child1, cs_in});
                } else {
                    throw oracle_fault("dp backtrack lost the optimum at forget");
                }
                break;
            }
            case NiceNode::Join: {
                const auto& a = tables.at[static_cast<size_t>(nd.child1)];
                const auto& b = tables.at[static_cast<size_t>(nd.child2)];
                long long overlap = static_cast<long long>(__builtin_popcountll(s));
                if (a[s] + b[s] - overlap != val) throw oracle_fault("dp join backtrack mismatch");
                stack.push_back({nd.child1, s});
                stack.push_back({nd.child2, s});
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Three-state engine for Dominating Set with a pre-dominated set D (vertices
// that never require domination) and a forced set B (vertices that must join
// the solution). States: 0 = in solution, 1 = dominated, 2 = not dominated.
// ---------------------------------------------------------------------------

inline long long solve3(const Graph& g, const NiceTD& nt, const VertexSet& exempt,
                        const VertexSet& forced, Tables& tables) {
    tables.at.assign(nt.nodes.size(), {});
    for (size_t id = 1; id < nt.nodes.size(); ++id) {
        const NiceNode& nd = nt.nodes[id];
        size_t states = pow_int(3, nd.bag.size());
        auto& table = tables.at[id];
        table.assign(states, kInf);
        auto index_of = [&](const VertexSet& bag, Vertex v) {
            return static_cast<size_t>(
                std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
        };
        switch (nd.kind) {
            case NiceNode::Leaf:
                table[0] = 0;
                break;
            case NiceNode::Introduce: {
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                size_t vi = index_of(nd.bag, nd.v);
                std::vector<size_t> nb;  // positions in nd.bag adjacent to v
                for (size_t i = 0; i < nd.bag.size(); ++i)
                    if (g.has_edge(nd.bag[i], nd.v)) nb.push_back(i);
                bool v_forced = set_contains(forced, nd.v);
                size_t lowmask = pow_int(3, vi);
                for (size_t cs = 0; cs < child.size(); ++cs) {
                    if (child[cs] >= kInf) continue;
                    size_t low = cs % lowmask, high = cs / lowmask;
                    size_t base = low + high * lowmask * 3;
                    // option 1: v joins the solution; grey bag-neighbors wake up
                    {
                        size_t patched = base + lowmask * 0;
                        for (size_t i : nb) {
                            if (i == vi) continue;
                            if (digit(patched, i, 3) == 2) {
                                size_t p = pow_int(3, i);
                                patched = patched - 2 * p + 1 * p;
                            }
                        }
                        long long val = child[cs] + 1;
                        table[patched] = std::min(table[patched], val);
                    }
                    // option 2: v stays out; dominated now iff a black

                    // bag-neighbor exists
                    if (!v_forced) {
                        bool black_nb = false;
                        for (size_t i : nb) {
                            if (i == vi) continue;
                            if (digit(base, i, 3) == 0) {
                                black_nb = true;
                                break;
                            }
                        }
                        size_t code = base + lowmask * (black_nb ? 1 : 2);
                        table[code] = std::min(table[code], child[cs]);
                    }
                }
                break;
            }
            case NiceNode::Forget: {
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                const VertexSet& cbag = nt.nodes[static_cast<size_t>(nd.child1)].bag;
                size_t vi = index_of(cbag, nd.v);
                size_t lowmask = pow_int(3, vi);
                bool may_stay_grey = set_contains(exempt, nd.v);
                for (size_t cs = 0; cs < child.size(); ++cs) {
                    if (child[cs] >= kInf) continue;
                    int d = digit(cs, vi, 3);
                    if (d == 2 && !may_stay_grey) continue;
                    size_t low = cs % lowmask, high = cs / (lowmask * 3);
                    size_t code = low + high * lowmask;
                    table[code] = std::min(table[code], child[cs]);
                }
                break;
            }
            case NiceNode::Join: {
                const auto& a = tables.at[static_cast<size_t>(nd.child1)];
                const auto& b = tables.at[static_cast<size_t>(nd.child2)];
                size_t b_size = nd.bag.size();
                // iterate pairs (s1, s2) agreeing on black digits; the result
                // is white where either side is white
                for (size_t s1 = 0; s1 < a.size(); ++s1) {
                    if (a[s1] >= kInf) continue;
                    // enumerate s2 matching s1's black positions
                    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t s2) {
                        if (i == b_size) {
                            if (b[s2] >= kInf) return;
                            long long blacks = 0;
                            size_t merged = 0;
                            for (size_t j = 0; j < b_size; ++j) {
                                int d1 = digit(s1, j, 3), d2 = digit(s2, j, 3);
                                int dm;
                                if (d1 == 0) {
                                    dm = 0;
                                    ++blacks;
                                } else {
                                    dm = (d1 == 1 || d2 == 1) ? 1 : 2;
                                }
                                merged += static_cast<size_t>(dm) * pow_int(3, j);
                            }
                            long long val = a[s1] + b[s2] - blacks;
                            table[merged] = std::min(table[merged], val);
                            return;
                        }
                        int d1 = digit(s1, i, 3);
                        if (d1 == 0) {
                            rec(i + 1, s2 + 0 * pow_int(3, i));
                        } else {
                            rec(i + 1, s2 + 1 * pow_int(3, i));
                            rec(i + 1, s2 + 2 * pow_int(3, i));
                        }
                    };
                    rec(0, 0);
                }
                break;
            }
        }
    }
    return tables.at[static_cast<size_t>(nt.root)][0];
}

inline void witness3(const Graph& g, const NiceTD& nt, const Tables& tables,
                     const VertexSet& exempt, const VertexSet& forced, VertexSet& out) {
    struct Item {
        int node;
        size_t state;
    };
    std::vector<Item> stack = {{nt.root, 0}};
    while (!stack.empty()) {
        auto [id, s] = stack.back();
        stack.pop_back();
        const NiceNode& nd = nt.nodes[static_cast<size_t>(id)];
        long long val = tables.at[static_cast<size_t>(id)][s];
        switch (nd.kind) {
            case NiceNode::Leaf:
                break;
            case NiceNode::Introduce: {
                size_t vi = static_cast<size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.v) - nd.bag.begin());
                size_t lowmask = pow_int(3, vi);
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                int dv = digit(s, vi, 3);
                size_t low = s % lowmask, high = s / (lowmask * 3);
                size_t base_child = low + high * lowmask;
                bool found = false;
                if (dv == 0) {
                    // v black: child states whose grey neighbors we woke up;
                    // any child digit that is white in s and adjacent may have
                    // been grey or white before
                    std::vector<size_t> nb;
                    for (size_t i = 0; i < nd.bag.size(); ++i)
                        if (i != vi && g.has_edge(nd.bag[i], nd.v) && digit(s, i, 3) == 1)
                            nb.push_back(i > vi ? i - 1 : i);  // position in child bag
                    std::function<bool(size_t, size_t)> rec = [&](size_t k, size_t cs) -> bool {
                        if (k == nb.size()) {
                            if (cs < child.size() && child[cs] + 1 == val) {
                                out.push_back(nd.v);
                                stack.push_back({nd.child1, cs});
                                return true;
                            }
                            return false;
                        }
                        size_t p = pow_int(3, nb[k]);
                        int d = digit(cs, nb[k], 3);
                        if (d != 1) return rec(k + 1, cs);
                        if (rec(k + 1, cs)) return true;            // was white already
                        return rec(k + 1, cs - p + 2 * p);          // was grey, woken by v
                    };
                    found = rec(0, base_child);
                } else {
                    if (child[base_child] == val) {
                        stack.push_back({nd.child1, base_child});
                        found = true;
                    }
                }
                if (!found) throw oracle_fault("ds dp backtrack lost the optimum at introduce");
                break;
            }
            case NiceNode::Forget: {
                const VertexSet& cbag = nt.nodes[static_cast<size_t>(nd.child1)].bag;
                size_t vi = static_cast<size_t>(
                    std::lower_bound(cbag.begin(), cbag.end(), nd.v) - cbag.begin());
                size_t lowmask = pow_int(3, vi);
                size_t low = s % lowmask, high = s / lowmask;
                const auto& child = tables.at[static_cast<size_t>(nd.child1)];
                bool found = false;
                for (int d = 0; d <= 2 && !found; ++d) {
                    if (d == 2 && !set_contains(exempt, nd.v)) continue;
                    size_t cs = low + high * lowmask * 3 + static_cast<size_t>(d) * lowmask;
                    if (child[cs] == val) {
                        stack.push_back({nd.child1, cs});
                        found = true;
                    }
                }
                if (!found) throw oracle_fault("ds dp backtrack lost the optimum at forget");
                break;
            }
            case NiceNode::Join: {
                const auto& a = tables.at[static_cast<size_t>(nd.child1)];
                const auto& b = tables.at[static_cast<size_t>(nd.child2)];
                size_t bsz = nd.bag.size();
                bool found = false;
                std::function<bool(size_t, size_t, size_t)> rec =
                    [&](size_t i, size_t s1, size_t s2) -> bool {
                    if (i == bsz) {
                        if (s1 < a.size() && s2 < b.size() && a[s1] < kInf && b[s2] < kInf) {
                            long long blacks = 0;
                            for (size_t j = 0; j < bsz; ++j)
                                if (digit(s1, j, 3) == 0) ++blacks;
                            if (a[s1] + b[s2] - blacks == val) {
                                stack.push_back({nd.child1, s1});
                                stack.push_back({nd.child2, s2});
                                return true;
                            }
                        }
                        return false;
                    }
                    size_t p = pow_int(3, i);
                    int d = digit(s, i, 3);
                    if (d == 0) return rec(i + 1, s1, s2);
                    if (d == 2) return rec(i + 1, s1 + 2 * p, s2 + 2 * p);
                    // white: (1,1), (1,2), (2,1)
                    if (rec(i + 1, s1 + p, s2 + p)) return true;
                    if (rec(i + 1, s1 + p, s2 + 2 * p)) return true;
                    return rec(i + 1, s1 + 2 * p, s2 + p);
                };
                found = rec(0, 0, 0);
                if (!found) throw oracle_fault("ds dp backtrack lost the optimum at join");
                break;
            }
        }
        (void)forced;
    }
}

}  // namespace dp

// Exact optimization over a tree decomposition. Supports Vertex Cover,
// Independent Set, and the annotated/forced Dominating Set family (plain DS,
// annotated DS, blue-white DS are the special cases).
inline OptResult td_dp_opt(const ProblemInstance& inst, const Graph& g,
                           const TreeDecomposition& td) {
    Validation val = validate_td(g, td);
    if (!val.ok) throw input_error("td_dp_opt: invalid tree decomposition: " + val.detail);
    dp::NiceTD nt = dp::make_nice(td);
    dp::Tables tables;
    switch (inst.kind) {
        case ProblemKind::VertexCover: {
            long long v = dp::solve2(g, nt, true, false, tables);
            VertexSet w;
            dp::witness2(nt, tables, w);
            w = make_set(std::move(w));
            return {true, v, Solution::of(std::move(w))};
        }
        case ProblemKind::IndependentSet: {
            long long v = dp::solve2(g, nt, false, true, tables);
            VertexSet w;
            dp::witness2(nt, tables, w);
            w = make_set(std::move(w));
            return {true, v, Solution::of(std::move(w))};
        }
        case ProblemKind::DominatingSet:
        case ProblemKind::BlueWhiteDominatingSet: {
            VertexSet exempt =
                inst.kind == ProblemKind::DominatingSet ? inst.dominated : VertexSet{};
            VertexSet forced = inst.kind == ProblemKind::DominatingSet ? inst.forced : inst.blue;
            long long v = dp::solve3(g, nt, exempt, forced, tables);
            VertexSet w;
            dp::witness3(g, nt, tables, exempt, forced, w);
            w = make_set(std::move(w));
            return {true, v, Solution::of(std::move(w))};
        }
        default:
            throw input_error("td_dp_opt: unsupported problem kind " + kind_name(inst.kind));
    }
}

inline OptResult td_dp_opt(const ProblemInstance& inst, const TreeDecomposition& td) {
    return td_dp_opt(inst, inst.graph, td);
}

}  // namespace hybridparam

#endif
