#ifndef HYBRIDPARAM_MINOR_HPP
#define HYBRIDPARAM_MINOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hybridparam/graph.hpp"

namespace hybridparam {

// Branch-set representation of a pattern as a minor of a host graph:
// phi maps every pattern vertex to a nonempty host vertex set.
struct MinorModel {
    Graph host;
    Graph pattern;
    std::map<Vertex, VertexSet> phi;
};

struct MinorModelCheck {
    bool ok;
    std::string why;
};

inline MinorModelCheck check_minor_model(const MinorModel& m) {
    // keys must be exactly V(pattern)
    if (static_cast<int>(m.phi.size()) != m.pattern.num_vertices())
        return {false, "phi does not assign every pattern vertex"};
    std::vector<int> owner(static_cast<size_t>(m.host.num_vertices()) + 1, 0);
    for (const auto& [pv, branch] : m.phi) {
        if (!m.pattern.valid_vertex(pv)) return {false, "phi key is not a pattern vertex"};
        if (branch.empty())
            return {false, "empty branch set for pattern vertex " + std::to_string(pv)};
        for (Vertex hv : branch) {
            if (!m.host.valid_vertex(hv)) return {false, "branch set vertex outside host"};
            if (owner[static_cast<size_t>(hv)] != 0)
                return {false, "branch sets are not disjoint at host vertex " + std::to_string(hv)};
            owner[static_cast<size_t>(hv)] = pv;
        }
    }
    for (const auto& [pv, branch] : m.phi) {
        if (!induces_connected(m.host, branch))
            return {false, "branch set of pattern vertex " + std::to_string(pv) +
                               " is not connected in host"};
    }
    for (auto [pu, pv] : m.pattern.edges()) {
        bool covered = false;
        for (Vertex hu : m.phi.at(pu)) {
            for (Vertex hv : m.host.neighbors(hu)) {
                if (owner[static_cast<size_t>(hv)] == pv) {
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        if (!covered)
            return {false, "pattern edge " + std::to_string(pu) + "-" + std::to_string(pv) +
                               " not realized between branch sets"};
    }
    return {true, ""};
}

inline bool verify_minor_model(const MinorModel& m) { return check_minor_model(m).ok; }

namespace detail {

// Backtracking search for a minor model: grow one branch set per pattern
// vertex; each step either claims a fresh host vertex for the current branch
// set (keeping it connected) or closes the set and moves on. Desk-scale hosts
// only.
struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> owner;              // host vertex -> pattern vertex or 0
    std::vector<VertexSet> branches;     // per pattern vertex, 1-indexed

    MinorSearch(const Graph& h, const Graph& p)
        : host(h), pattern(p), owner(static_cast<size_t>(h.num_vertices()) + 1, 0),
          branches(static_cast<size_t>(p.num_vertices()) + 1) {}

    bool edges_ok_up_to(int placed) {
        for (auto [pu, pv] : pattern.edges()) {
            if (pu > placed || pv > placed) continue;
            bool covered = false;
            for (Vertex hu : branches[static_cast<size_t>(pu)]) {
                for (Vertex hv : host.neighbors(hu))
                    if (owner[static_cast<size_t>(hv)] == pv) {
                        covered = true;
                        break;
                    }
                if (covered) break;
            }
            if (!covered) return false;
        }
        return true;
    }

    bool place(int pv) {
        if (pv > pattern.num_vertices()) return true;
        // candidate seeds: any unclaimed host vertex
        for (Vertex seed = 1; seed <= host.num_vertices(); ++seed) {
            if (owner[static_cast<size_t>(seed)] != 0) continue;
            owner[static_cast<size_t>(seed)] = pv;
            branches[static_cast<size_t>(pv)] = {seed};
            if (grow(pv)) return true;
            owner[static_cast<size_t>(seed)] = 0;
            branches[static_cast<size_t>(pv)].clear();
        }
        return false;
    }

    bool grow(int pv) {
        // try to finish this branch set as-is
        if (edges_ok_up_to(pv) && place(pv + 1)) return true;
        // or extend it by an adjacent unclaimed vertex
        auto& br = branches[static_cast<size_t>(pv)];
        VertexSet frontier = neighborhood(host, br);
        for (Vertex w : frontier) {
            if (owner[static_cast<size_t>(w)] != 0) continue;
            owner[static_cast<size_t>(w)] = pv;
            br = set_union(br, {w});
            if (grow(pv)) return true;
            br = set_minus(br, {w});
            owner[static_cast<size_t>(w)] = 0;
        }
        return false;
    }
};

}  // namespace detail

// Search for a minor model of `pattern` in `host`. Exponential in the worst
// case; intended for the small hosts the exact solvers handle.
inline std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern) {
    if (pattern.num_vertices() == 0) return MinorModel{host, pattern, {}};
    if (pattern.num_vertices() > host.num_vertices()) return std::nullopt;
    detail::MinorSearch s(host, pattern);
    if (!s.place(1)) return std::nullopt;
    MinorModel m{host, pattern, {}};
    for (Vertex pv = 1; pv <= pattern.num_vertices(); ++pv)
        m.phi[pv] = s.branches[static_cast<size_t>(pv)];
    return m;
}

inline bool has_minor(const Graph& host, const Graph& pattern) {
    return find_minor_model(host, pattern).has_value();
}

// Spanning-subgraph isomorphism: a bijection V(pattern) -> V(host) mapping
// pattern edges onto host edges (host may have extra edges when
// induced = false). Used by subgraph packing.
inline std::optional<std::vector<Vertex>> find_spanning_iso(const Graph& host,
                                                            const Graph& pattern) {
    int n = pattern.num_vertices();
    if (host.num_vertices() != n) return std::nullopt;
    if (host.num_edges() < pattern.num_edges()) return std::nullopt;
    std::vector<Vertex> map(static_cast<size_t>(n) + 1, 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    auto rec = [&](auto&& self, Vertex pv) -> bool {
        if (pv > n) return true;
        for (Vertex hv = 1; hv <= n; ++hv) {
            if (used[static_cast<size_t>(hv)]) continue;
            bool ok = true;
            for (Vertex pu = 1; pu < pv && ok; ++pu)
                if (pattern.has_edge(pu, pv) &&
                    !host.has_edge(map[static_cast<size_t>(pu)], hv))
                    ok = false;
            if (!ok) continue;
            map[static_cast<size_t>(pv)] = hv;
            used[static_cast<size_t>(hv)] = true;
            if (self(self, pv + 1)) return true;
            used[static_cast<size_t>(hv)] = false;
        }
        return false;
    };
    if (!rec(rec, 1)) return std::nullopt;
    return map;
}

}  // namespace hybridparam

#endif
