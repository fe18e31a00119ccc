#ifndef HYBRIDPARAM_BRUTE_HPP
#define HYBRIDPARAM_BRUTE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hybridparam/problem.hpp"

namespace hybridparam {

struct OptResult {
    bool feasible = true;
    long long value = 0;
    Solution solution;
};

namespace detail {

inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.num_vertices()) + 1, 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << (v - 1);
        adj[static_cast<size_t>(v)] |= 1u << (u - 1);
    }
    return adj;
}

inline uint32_t mask_of(const VertexSet& s) {
    uint32_t m = 0;
    for (Vertex v : s) m |= 1u << (v - 1);
    return m;
}

inline VertexSet unmask(uint32_t m, int n) {
    VertexSet s;
    for (Vertex v = 1; v <= n; ++v)
        if (m & (1u << (v - 1))) s.push_back(v);
    return s;
}

inline bool mask_acyclic(const Graph& g, uint32_t keep) {
    // union-find over kept vertices
    std::vector<int> up(static_cast<size_t>(g.num_vertices()) + 1);
    for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (up[static_cast<size_t>(x)] != x) {
            up[static_cast<size_t>(x)] = up[static_cast<size_t>(up[static_cast<size_t>(x)])];
            x = up[static_cast<size_t>(x)];
        }
        return x;
    };
    for (auto [u, v] : g.edges()) {
        if (!(keep & (1u << (u - 1))) || !(keep & (1u << (v - 1)))) continue;
        int a = find(u), b = find(v);
        if (a == b) return false;
        up[static_cast<size_t>(a)] = b;
    }
    return true;
}

inline bool mask_connected(const Graph& g, uint32_t s) {
    if (s == 0) return true;
    auto adj = adjacency_masks(g);
    uint32_t start = s & (~s + 1);
    uint32_t seen = start;
    uint32_t frontier = start;
    while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
            int v = __builtin_ctz(f) + 1;
            f &= f - 1;
            next |= adj[static_cast<size_t>(v)] & s & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

// Enumerate size-k subsets of `pool` (sorted labels) in lexicographic order;
// stop at the first subset accepted by `feasible`.
inline std::optional<VertexSet> first_feasible_of_size(
    const std::vector<Vertex>& pool, int k, const std::function<bool(uint32_t)>& feasible,
    const std::function<uint32_t(const std::vector<int>&)>& to_mask) {
    int p = static_cast<int>(pool.size());
    if (k > p) return std::nullopt;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        uint32_t m = to_mask(idx);
        if (feasible(m)) {
            VertexSet out;
            for (int i : idx) out.push_back(pool[static_cast<size_t>(i)]);
            return out;
        }
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == p - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

struct VertexSearchSpec {
    std::vector<Vertex> pool;       // optional vertices, sorted
    VertexSet always;               // forced into every candidate
    std::function<bool(uint32_t)> feasible;  // on the full candidate mask
};

inline OptResult search_min(const Graph& g, const VertexSearchSpec& spec) {
    uint32_t base = mask_of(spec.always);
    std::vector<uint32_t> bit(spec.pool.size());
    for (size_t i = 0; i < spec.pool.size(); ++i) bit[i] = 1u << (spec.pool[i] - 1);
    auto to_mask = [&](const std::vector<int>& idx) {
        uint32_t m = base;
        for (int i : idx) m |= bit[static_cast<size_t>(i)];
        return m;
    };
    for (int k = 0; k <= static_cast<int>(spec.pool.size()); ++k) {
        auto hit = first_feasible_of_size(spec.pool, k, spec.feasible, to_mask);
        if (hit) {
            VertexSet s = set_union(spec.always, *hit);
            return {true, static_cast<long long>(s.size()), Solution::of(std::move(s))};
        }
    }
    (void)g;
    return {false, 0, {}};
}

inline OptResult search_max(const Graph& g, const VertexSearchSpec& spec) {
    uint32_t base = mask_of(spec.always);
    std::vector<uint32_t> bit(spec.pool.size());
    for (size_t i = 0; i < spec.pool.size(); ++i) bit[i] = 1u << (spec.pool[i] - 1);
    auto to_mask = [&](const std::vector<int>& idx) {
        uint32_t m = base;
        for (int i : idx) m |= bit[static_cast<size_t>(i)];
        return m;
    };
    for (int k = static_cast<int>(spec.pool.size()); k >= 0; --k) {
        auto hit = first_feasible_of_size(spec.pool, k, spec.feasible, to_mask);
        if (hit) {
            VertexSet s = set_union(spec.always, *hit);
            return {true, static_cast<long long>(s.size()), Solution::of(std::move(s))};
        }
    }
    (void)g;
    return {false, 0, {}};
}

// --- packing by subset dynamic programming ---------------------------------

struct PackingTables {
    std::vector<int8_t> minimal_host;       // mask -> 1 if minimal host of some pattern
    std::vector<int8_t> pattern_of;         // pattern index for minimal hosts
};

inline bool mask_hosts_pattern(const Graph& g, uint32_t mask,
                               const std::vector<Graph>& patterns, bool subgraph, int& which) {
    VertexSet vs = unmask(mask, g.num_vertices());
    Graph sub = induced_subgraph(g, vs).graph;
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (subgraph) {
            if (patterns[i].num_vertices() == sub.num_vertices() &&
                find_spanning_iso(sub, patterns[i])) {
                which = static_cast<int>(i);
                return true;
            }
        } else {
            if (find_minor_model(sub, patterns[i])) {
                which = static_cast<int>(i);
                return true;
            }
        }
    }
    return false;
}

inline PackingTables packing_tables(const Graph& g, const std::vector<Graph>& patterns,
                                    bool subgraph) {
    int n = g.num_vertices();
    size_t total = static_cast<size_t>(1) << n;
    PackingTables t;
    t.minimal_host.assign(total, 0);
    t.pattern_of.assign(total, -1);
    std::vector<int8_t> hosts(total, 0);
    auto adj = adjacency_masks(g);
    int max_pat = 0;
    for (const auto& p : patterns) max_pat = std::max(max_pat, p.num_vertices());
    for (uint32_t mask = 1; mask < total; ++mask) {
        if (subgraph && __builtin_popcount(mask) > max_pat) continue;
        if (!mask_connected(g, mask)) continue;
        // a strict superset of a host is a host; only minimal ones matter
        bool sub_host = false;
        uint32_t mm = mask;
        while (mm) {
            int v = __builtin_ctz(mm) + 1;
            mm &= mm - 1;
            if (hosts[mask & ~(1u << (v - 1))]) {
                sub_host = true;
                break;
            }
        }
        if (sub_host) {
            hosts[mask] = 1;
            continue;
        }
        int which = -1;
        if (mask_hosts_pattern(g, mask, patterns, subgraph, which)) {
            hosts[mask] = 1;
            t.minimal_host[mask] = 1;
            t.pattern_of[mask] = static_cast<int8_t>(which);
        }
    }
    return t;
}

inline PackingTuple make_tuple(const Graph& g, uint32_t mask, const Graph& pattern,
                               bool subgraph) {
    PackingTuple tup;
    tup.host_vertices = unmask(mask, g.num_vertices());
    auto sub = induced_subgraph(g, tup.host_vertices);
    for (auto [u, v] : sub.graph.edges())
        tup.host_edges.emplace_back(sub.old_label(u), sub.old_label(v));
    tup.pattern = pattern;
    if (subgraph) {
        auto iso = find_spanning_iso(sub.graph, pattern);
        if (!iso) throw oracle_fault("packing tuple lost its isomorphism");
        for (Vertex pv = 1; pv <= pattern.num_vertices(); ++pv)
            tup.phi[pv] = {sub.old_label((*iso)[static_cast<size_t>(pv)])};
    } else {
        auto model = find_minor_model(sub.graph, pattern);
        if (!model) throw oracle_fault("packing tuple lost its minor model");
        for (auto& [pv, branch] : model->phi) tup.phi[pv] = sub.lift(branch);
    }
    return tup;
}

inline OptResult packing_opt(const ProblemInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.num_vertices();
    if (n > 14) throw unsupported_error("brute_opt: packing limited to n <= 14");
    bool subgraph = inst.kind == ProblemKind::SubgraphPacking;
    for (const auto& p : inst.patterns) {
        if (p.num_vertices() == 0 || !is_connected(p))
            throw input_error("packing patterns must be nonempty connected graphs");
    }
    auto tables = packing_tables(g, inst.patterns, subgraph);
    size_t total = static_cast<size_t>(1) << n;
    std::vector<int> best(total, 0);
    std::vector<uint32_t> choice(total, 0);  // 0 = drop lowest vertex
    for (uint32_t mask = 1; mask < total; ++mask) {
        uint32_t low = mask & (~mask + 1);
        best[mask] = best[mask & ~low];
        choice[mask] = 0;
        // submasks containing the lowest vertex, ascending
        uint32_t rest = mask & ~low;
        uint32_t sub = 0;
        for (;;) {
            uint32_t cand = sub | low;
            if (tables.minimal_host[cand] &&
                1 + best[mask & ~cand] > best[mask]) {
                best[mask] = 1 + best[mask & ~cand];
                choice[mask] = cand;
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
    }
    PackingSolution sol;
    uint32_t mask = static_cast<uint32_t>(total - 1);
    while (mask) {
        uint32_t pick = choice[mask];
        if (pick == 0) {
            mask &= mask - 1;  // drop lowest vertex
        } else {
            sol.tuples.push_back(make_tuple(
                g, pick, inst.patterns[static_cast<size_t>(tables.pattern_of[pick])], subgraph));
            mask &= ~pick;
        }
    }
    long long value = best[total - 1];
    return {true, value, Solution::of(std::move(sol))};
}

}  // namespace detail

// Ground-truth oracle: exhaustive search, lexicographically smallest witness
// among optima. Vertex problems up to n = 22, packing problems up to n = 14.
inline OptResult brute_opt(const ProblemInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.num_vertices();
    if (is_packing(inst.kind)) return detail::packing_opt(inst);
    if (n > 22) throw unsupported_error("brute_opt: vertex problems limited to n <= 22");

    auto adj = detail::adjacency_masks(g);
    uint32_t all = n == 0 ? 0u : ((1u << n) - 1);
    detail::VertexSearchSpec spec;
    spec.pool = g.vertices();

    switch (inst.kind) {
        case ProblemKind::VertexCover: {
            spec.feasible = [&, all](uint32_t s) {
                uint32_t out = all & ~s;
                while (out) {
                    int v = __builtin_ctz(out) + 1;
                    out &= out - 1;
                    if (adj[static_cast<size_t>(v)] & ~s) return false;
                }
                return true;
            };
            return detail::search_min(g, spec);
        }
        case ProblemKind::FeedbackVertexSet: {
            spec.feasible = [&, all](uint32_t s) { return detail::mask_acyclic(g, all & ~s); };
            return detail::search_min(g, spec);
        }
        case ProblemKind::IndependentSet: {
            spec.feasible = [&](uint32_t s) {
                uint32_t t = s;
                while (t) {
                    int v = __builtin_ctz(t) + 1;
                    t &= t - 1;
                    if (adj[static_cast<size_t>(v)] & s) return false;
                }
                return true;
            };
            return detail::search_max(g, spec);
        }
        case ProblemKind::DominatingSet:
        case ProblemKind::BlueWhiteDominatingSet: {
            VertexSet forced =
                inst.kind == ProblemKind::DominatingSet ? inst.forced : inst.blue;
            uint32_t exempt = inst.kind == ProblemKind::DominatingSet
                                  ? detail::mask_of(inst.dominated)
                                  : 0;
            spec.always = forced;
            spec.pool = set_minus(g.vertices(), forced);
            spec.feasible = [&, all, exempt](uint32_t s) {
                uint32_t need = all & ~s & ~exempt;
                while (need) {
                    int v = __builtin_ctz(need) + 1;
                    need &= need - 1;
                    if (!(adj[static_cast<size_t>(v)] & s)) return false;
                }
                return true;
            };
            return detail::search_min(g, spec);
        }
        case ProblemKind::SetIntersectingVertexCover: {
            // feasible at all iff every nontrivial component meets X
            for (const auto& comp : connected_components(g))
                if (comp.size() >= 2 && set_intersect(comp, inst.must_intersect).empty())
                    return {false, 0, {}};
            uint32_t x = detail::mask_of(inst.must_intersect);
            spec.feasible = [&, all, x](uint32_t s) {
                uint32_t out = all & ~s;
                while (out) {
                    int v = __builtin_ctz(out) + 1;
                    out &= out - 1;
                    if (adj[static_cast<size_t>(v)] & ~s) return false;
                }
                // every component of G[s] must meet X
                uint32_t left = s;
                while (left) {
                    uint32_t start = left & (~left + 1);
                    uint32_t seen = start, frontier = start;
                    while (frontier) {
                        uint32_t next = 0, f = frontier;
                        while (f) {
                            int v = __builtin_ctz(f) + 1;
                            f &= f - 1;
                            next |= adj[static_cast<size_t>(v)] & s & ~seen;
                        }
                        seen |= next;
                        frontier = next;
                    }
                    if (!(seen & x)) return false;
                    left &= ~seen;
                }
                return true;
            };
            return detail::search_min(g, spec);
        }
        case ProblemKind::ConnectedVertexCover: {
            int nontrivial = 0;
            for (const auto& comp : connected_components(g))
                if (comp.size() >= 2) ++nontrivial;
            if (nontrivial >= 2) return {false, 0, {}};
            spec.feasible = [&, all](uint32_t s) {
                uint32_t out = all & ~s;
                while (out) {
                    int v = __builtin_ctz(out) + 1;
                    out &= out - 1;
                    if (adj[static_cast<size_t>(v)] & ~s) return false;
                }
                return detail::mask_connected(g, s);
            };
            return detail::search_min(g, spec);
        }
        default:
            throw input_error("brute_opt: unhandled problem kind");
    }
}

// Decision threshold wrapper around the oracle: <= k for minimization,
// >= k for maximization.
inline bool brute_decide(const ProblemInstance& inst, long long k) {
    OptResult r = brute_opt(inst);
    if (!r.feasible) return false;
    return is_maximization(inst.kind) ? r.value >= k : r.value <= k;
}

}  // namespace hybridparam

#endif
