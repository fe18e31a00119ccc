#ifndef HYBRIDPARAM_SELFREDUCE_HPP
#define HYBRIDPARAM_SELFREDUCE_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hybridparam/graph.hpp"
#include "hybridparam/minor.hpp"
#include "hybridparam/problem.hpp"

namespace hybridparam {

// Decision procedure handle with a call counter, so extraction loops can
// account for their oracle usage.
struct Decider {
    std::function<bool(const Graph&, int)> decide;
    mutable long long calls = 0;

    bool operator()(const Graph& g, int k) const {
        ++calls;
        return decide(g, k);
    }
};

struct ExtractionResult {
    bool yes = false;
    VertexSet witness;
    long long oracle_calls = 0;  // excluding the initial feasibility call
};

// Witness extraction for hereditary vertex-deletion problems from a decision
// oracle: scan the vertices once, keep every vertex whose removal stays a
// yes-instance at the reduced budget. A rejected vertex never needs a second
// look. One closing call at budget 0 audits oracle consistency.
inline ExtractionResult extract_vertex_deletion(const Decider& decider, const Graph& g, int k) {
    if (k < 0) throw input_error("extract_vertex_deletion: negative budget");
    long long before = decider.calls;
    if (!decider(g, k)) return {false, {}, 0};
    long long start = decider.calls;

    Graph cur = g;
    std::vector<Vertex> to_original(static_cast<size_t>(g.num_vertices()) + 1);
    for (Vertex v = 1; v <= g.num_vertices(); ++v) to_original[static_cast<size_t>(v)] = v;
    VertexSet solution;
    int budget = k;

    for (Vertex orig = 1; orig <= g.num_vertices() && budget > 0; ++orig) {
        // current label of orig, if still present
        Vertex cv = 0;
        for (Vertex w = 1; w <= cur.num_vertices(); ++w)
            if (to_original[static_cast<size_t>(w)] == orig) {
                cv = w;
                break;
            }
        if (cv == 0) continue;
        auto smaller = delete_vertices(cur, {cv});
        if (decider(smaller.graph, budget - 1)) {
            solution.push_back(orig);
            std::vector<Vertex> next(static_cast<size_t>(smaller.graph.num_vertices()) + 1);
            for (Vertex w = 1; w <= smaller.graph.num_vertices(); ++w)
                next[static_cast<size_t>(w)] = to_original[static_cast<size_t>(smaller.old_label(w))];
            to_original = std::move(next);
            cur = smaller.graph;
            --budget;
        }
    }

    if (budget > 0 && cur.num_vertices() > 0) {
        // nothing else may be deleted, so the residue itself must be a
        // yes-instance at budget zero
        if (!decider(cur, 0))
            throw oracle_fault("extract_vertex_deletion: oracle accepted the parent instance "
                               "but rejected every completion");
    }
    (void)before;
    return {true, make_set(std::move(solution)), decider.calls - start};
}

struct PackingExtractionResult {
    bool yes = false;
    PackingSolution witness;
    long long oracle_calls = 0;        // excluding the initial feasibility call
    long long contraction_calls = 0;   // successful + failed contraction tests
    long long contractions = 0;        // successful ones
    int components_after_deletion = 0;
};

namespace detail {

// Current graph during packing extraction; each vertex carries the set of
// original vertices contracted into it.
struct ShrinkState {
    Graph graph;
    std::vector<VertexSet> branch;  // 1-indexed by current label

    void delete_vertex(Vertex v) {
        auto sub = delete_vertices(graph, {v});
        std::vector<VertexSet> nb(static_cast<size_t>(sub.graph.num_vertices()) + 1);
        for (Vertex w = 1; w <= sub.graph.num_vertices(); ++w)
            nb[static_cast<size_t>(w)] = branch[static_cast<size_t>(sub.old_label(w))];
        graph = sub.graph;
        branch = std::move(nb);
    }

    void delete_one_edge(Vertex u, Vertex v) { graph = delete_edge(graph, u, v); }

    void contract(Vertex u, Vertex v) {
        auto c = contract_edge(graph, u, v);
        std::vector<VertexSet> nb(static_cast<size_t>(c.graph.num_vertices()) + 1);
        for (Vertex w = 1; w <= graph.num_vertices(); ++w) {
            Vertex nw = c.contraction_map[static_cast<size_t>(w)];
            nb[static_cast<size_t>(nw)] =
                set_union(nb[static_cast<size_t>(nw)], branch[static_cast<size_t>(w)]);
        }
        graph = c.graph;
        branch = std::move(nb);
    }
};

inline std::optional<size_t> matching_pattern(const Graph& g, const std::vector<Graph>& patterns) {
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (patterns[i].num_vertices() != g.num_vertices()) continue;
        if (patterns[i].num_vertices() <= 8 && is_isomorphic(g, patterns[i])) return i;
    }
    return std::nullopt;
}

}  // namespace detail

// Packing self-reduction: delete every removable vertex, then every removable
// edge; the survivors split into exactly k components, one per packed tuple.
// For minor packing each component is then contracted down to its pattern.
// The decision oracle always receives the whole current graph and the
// original budget k.
inline PackingExtractionResult extract_packing(const Decider& decider, const Graph& g, int k,
                                               const std::vector<Graph>& patterns,
                                               bool subgraph_packing) {
    if (k < 0) throw input_error("extract_packing: negative budget");
    for (const auto& p : patterns)
        if (p.num_vertices() == 0 || !is_connected(p))
            throw input_error("extract_packing: patterns must be nonempty connected graphs");
    PackingExtractionResult res;
    if (k == 0) {
        res.yes = true;
        return res;
    }
    if (!decider(g, k)) return res;
    long long start = decider.calls;

    detail::ShrinkState st;
    st.graph = g;
    st.branch.assign(static_cast<size_t>(g.num_vertices()) + 1, {});
    for (Vertex v = 1; v <= g.num_vertices(); ++v) st.branch[static_cast<size_t>(v)] = {v};

    // vertex phase: each original vertex tested at most once
    for (Vertex orig = 1; orig <= g.num_vertices(); ++orig) {
        Vertex cv = 0;
        for (Vertex w = 1; w <= st.graph.num_vertices(); ++w)
            if (st.branch[static_cast<size_t>(w)] == VertexSet{orig}) {
                cv = w;
                break;
            }
        if (cv == 0) continue;
        auto smaller = delete_vertices(st.graph, {cv});
        if (decider(smaller.graph, k)) st.delete_vertex(cv);
    }

    // edge phase, by original endpoint labels
    {
        std::vector<std::pair<Vertex, Vertex>> candidates;
        for (auto [u, v] : st.graph.edges())
            candidates.emplace_back(st.branch[static_cast<size_t>(u)][0],
                                    st.branch[static_cast<size_t>(v)][0]);
        for (auto [ou, ov] : candidates) {
            Vertex cu = 0, cv = 0;
            for (Vertex w = 1; w <= st.graph.num_vertices(); ++w) {
                if (st.branch[static_cast<size_t>(w)][0] == ou) cu = w;
                if (st.branch[static_cast<size_t>(w)][0] == ov) cv = w;
            }
            if (cu == 0 || cv == 0 || !st.graph.has_edge(cu, cv)) continue;
            Graph probe = delete_edge(st.graph, cu, cv);
            if (decider(probe, k)) st.delete_one_edge(cu, cv);
        }
    }

    // the residue must split into exactly k components
    Graph residue = st.graph;  // hosts live here, pre-contraction
    std::vector<VertexSet> residue_branch = st.branch;
    auto comps = connected_components(st.graph);
    res.components_after_deletion = static_cast<int>(comps.size());
    if (static_cast<int>(comps.size()) != k)
        throw oracle_fault("extract_packing: deletion phase left " +
                           std::to_string(comps.size()) + " components, expected " +
                           std::to_string(k));

    // contraction phase per component (minor packing only); markers are
    // captured before any contraction since labels shift afterwards
    std::vector<VertexSet> markers;
    for (const auto& comp0 : comps)
        markers.push_back(st.branch[static_cast<size_t>(comp0[0])]);
    for (const VertexSet& marker : markers) {
        auto component_of = [&](void) {
            // component of the current graph containing the marker
            for (const auto& c : connected_components(st.graph))
                for (Vertex w : c)
                    if (set_subset(marker, st.branch[static_cast<size_t>(w)])) return c;
            throw oracle_fault("extract_packing: lost a component marker");
        };
        for (;;) {
            VertexSet comp = component_of();
            Graph local = induced_subgraph(st.graph, comp).graph;
            if (subgraph_packing) break;
            if (detail::matching_pattern(local, patterns)) break;
            bool contracted = false;
            InducedSubgraph sub = induced_subgraph(st.graph, comp);
            for (auto [lu, lv] : sub.graph.edges()) {
                Vertex cu = sub.old_label(lu), cv = sub.old_label(lv);
                auto probe = contract_edge(st.graph, cu, cv);
                ++res.contraction_calls;
                if (decider(probe.graph, k)) {
                    st.contract(cu, cv);
                    ++res.contractions;
                    contracted = true;
                    break;
                }
            }
            if (!contracted) {
                // no further contraction allowed and still no pattern match
                throw oracle_fault("extract_packing: component frozen before matching a pattern");
            }
        }
    }

    // assemble tuples: host = component of the post-deletion residue
    auto final_comps = connected_components(st.graph);
    for (const auto& comp : final_comps) {
        InducedSubgraph finalsub = induced_subgraph(st.graph, comp);
        auto pat = detail::matching_pattern(finalsub.graph, patterns);
        if (!pat)
            throw oracle_fault("extract_packing: a final component matches no pattern");
        const Graph& pattern = patterns[*pat];

        // original vertices of this component
        VertexSet original;
        for (Vertex w : comp)
            original = set_union(original, st.branch[static_cast<size_t>(w)]);

        PackingTuple tup;
        tup.pattern = pattern;
        tup.host_vertices = original;
        // host edges: edges of the residue between these original vertices
        for (Vertex w = 1; w <= residue.num_vertices(); ++w) {
            for (Vertex x : residue.neighbors(w)) {
                if (x <= w) continue;
                Vertex ow = residue_branch[static_cast<size_t>(w)][0];
                Vertex ox = residue_branch[static_cast<size_t>(x)][0];
                if (set_contains(original, ow) && set_contains(original, ox))
                    tup.host_edges.emplace_back(std::min(ow, ox), std::max(ow, ox));
            }
        }
        if (subgraph_packing) {
            auto iso = find_spanning_iso(finalsub.graph, pattern);
            if (!iso) throw oracle_fault("extract_packing: lost subgraph isomorphism");
            for (Vertex pv = 1; pv <= pattern.num_vertices(); ++pv) {
                Vertex hv = finalsub.old_label((*iso)[static_cast<size_t>(pv)]);
                tup.phi[pv] = st.branch[static_cast<size_t>(hv)];
            }
        } else {
            // the contracted component is isomorphic to the pattern; branch
            // sets are the preimages of its vertices
            std::vector<Vertex> perm(static_cast<size_t>(pattern.num_vertices()));
            for (int i = 0; i < pattern.num_vertices(); ++i) perm[static_cast<size_t>(i)] = i + 1;
            bool found = false;
            do {
                bool ok = true;
                for (auto [pu, pv] : pattern.edges())
                    if (!finalsub.graph.has_edge(perm[static_cast<size_t>(pu - 1)],
                                                 perm[static_cast<size_t>(pv - 1)])) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (auto [lu, lv] : finalsub.graph.edges()) {
                        // inverse direction: contracted edges must exist in pattern
                        Vertex pu = 0, pv = 0;
                        for (int i = 1; i <= pattern.num_vertices(); ++i) {
                            if (perm[static_cast<size_t>(i - 1)] == lu) pu = i;
                            if (perm[static_cast<size_t>(i - 1)] == lv) pv = i;
                        }
                        if (!pattern.has_edge(pu, pv)) {
                            ok = false;
                            break;
                        }
                    }
                if (ok) {
                    for (Vertex pv = 1; pv <= pattern.num_vertices(); ++pv) {
                        Vertex local = perm[static_cast<size_t>(pv - 1)];
                        Vertex cur_label = finalsub.old_label(local);
                        tup.phi[pv] = st.branch[static_cast<size_t>(cur_label)];
                    }
                    found = true;
                }
            } while (!found && std::next_permutation(perm.begin(), perm.end()));
            if (!found) throw oracle_fault("extract_packing: isomorphism reconstruction failed");
        }
        res.witness.tuples.push_back(std::move(tup));
    }

    res.yes = true;
    res.oracle_calls = decider.calls - start;
    return res;
}

// Deciders backed by the exact solvers; the schemes use these at desk scale.
inline Decider decider_from_opt(std::function<long long(const Graph&)> opt_value,
                                bool maximization) {
    Decider d;
    d.decide = [opt_value = std::move(opt_value), maximization](const Graph& g, int k) {
        long long v = opt_value(g);
        return maximization ? v >= k : v <= k;
    };
    return d;
}

}  // namespace hybridparam

#endif
