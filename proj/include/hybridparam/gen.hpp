#ifndef HYBRIDPARAM_GEN_HPP
#define HYBRIDPARAM_GEN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hybridparam/decomposition.hpp"
#include "hybridparam/rng.hpp"

namespace hybridparam {

// Random w-tree on n vertices (clique seed plus vertices attached to random
// w-cliques), then every edge kept with probability keep. Treewidth <= w by
// construction.
inline Graph random_partial_ktree(int n, int w, double keep, uint64_t seed) {
    if (w < 0 || n < w + 1) throw input_error("random_partial_ktree: need n >= w + 1, w >= 0");
    if (keep < 0.0 || keep > 1.0) throw input_error("random_partial_ktree: keep in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<VertexSet> cliques;  // w-cliques available for attachment
    VertexSet seed_clique;
    for (Vertex v = 1; v <= std::min(n, w + 1); ++v) seed_clique.push_back(v);
    for (size_t i = 0; i < seed_clique.size(); ++i)
        for (size_t j = i + 1; j < seed_clique.size(); ++j)
            edges.emplace_back(seed_clique[i], seed_clique[j]);
    if (w >= 1) {
        // all w-subsets of the seed clique
        std::vector<int> idx(static_cast<size_t>(w));
        for (int i = 0; i < w; ++i) idx[static_cast<size_t>(i)] = i;
        for (;;) {
            VertexSet c;
            for (int i : idx) c.push_back(seed_clique[static_cast<size_t>(i)]);
            cliques.push_back(c);
            int i = w - 1;
            int p = static_cast<int>(seed_clique.size());
            while (i >= 0 && idx[static_cast<size_t>(i)] == p - w + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < w; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    for (Vertex v = w + 2; v <= n; ++v) {
        if (w == 0) break;
        VertexSet c = cliques[rng.below(cliques.size())];  // copy: the list grows below
        for (Vertex u : c) edges.emplace_back(u, v);
        for (size_t drop = 0; drop < c.size(); ++drop) {
            VertexSet next;
            for (size_t i = 0; i < c.size(); ++i)
                if (i != drop) next.push_back(c[i]);
            next = set_union(next, {v});
            cliques.push_back(next);
        }
    }
    Graph g(n);
    for (auto [u, v] : edges)
        if (rng.chance(keep)) g.add_edge_internal(u, v);
    g.finalize();
    return g;
}

// A family member of roughly `size` vertices, certain to pass the predicate.
inline Graph random_family_member(const FamilyPredicate& family, int size, double keep,
                                  uint64_t seed) {
    if (size <= 0) return Graph(0);
    for (uint64_t attempt = 0; attempt < 8; ++attempt) {
        Graph g;
        switch (family.kind()) {
            case FamilyPredicate::Kind::Edgeless:
                g = Graph(size);
                break;
            case FamilyPredicate::Kind::Forests:
                g = random_partial_ktree(std::max(size, 2), 1, keep, seed + attempt);
                break;
            case FamilyPredicate::Kind::TreewidthAtMost: {
                int w = family.width_bound();
                g = random_partial_ktree(std::max(size, w + 1), w, keep, seed + attempt);
                break;
            }
        }
        if (family.contains_certain(g)) return g;
    }
    throw oracle_fault("random_family_member: could not certify a sampled member");
}

// ---------------------------------------------------------------------------
// Planted modulator instances
// ---------------------------------------------------------------------------

struct ModulatorSpec {
    FamilyPredicate family = FamilyPredicate::treewidth_at_most(2);
    int components = 1;
    int comp_lo = 4, comp_hi = 8;
    double base_keep = 0.8;
    int p = 1;                    // modulator size
    double attach_density = 0.5;  // M x base edges
    double inside_density = 0.3;  // M x M edges
};

struct PlantedModulator {
    Graph graph;
    VertexSet modulator;
    FamilyPredicate family = FamilyPredicate::treewidth_at_most(2);
};

inline PlantedModulator plant_modulator_instance(const ModulatorSpec& spec, uint64_t seed) {
    if (spec.p < 0) throw input_error("plant_modulator_instance: p >= 0");
    Rng rng(seed);
    Graph base(0);
    for (int c = 0; c < spec.components; ++c) {
        int size = rng.range(spec.comp_lo, spec.comp_hi);
        base = disjoint_union(
            base, random_family_member(spec.family, size, spec.base_keep, rng.split(100 + c).next()));
    }
    int nb = base.num_vertices();
    Graph g(nb + spec.p);
    for (auto [u, v] : base.edges()) g.add_edge_internal(u, v);
    VertexSet m;
    for (int i = 0; i < spec.p; ++i) m.push_back(nb + 1 + i);
    for (Vertex mv : m) {
        bool attached = false;
        for (Vertex u = 1; u <= nb; ++u)
            if (rng.chance(spec.attach_density)) {
                g.add_edge_internal(mv, u);
                attached = true;
            }
        if (!attached && nb > 0) g.add_edge_internal(mv, 1 + static_cast<Vertex>(rng.below(static_cast<uint64_t>(nb))));
    }
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (rng.chance(spec.inside_density)) g.add_edge_internal(m[i], m[j]);
    g.finalize();
    return {std::move(g), std::move(m), spec.family};
}

// ---------------------------------------------------------------------------
// Planted H-tree decomposition instances
// ---------------------------------------------------------------------------

struct HtdSpec {
    int num_leaves = 3;
    int ell = 2;  // target width; the non-base pool sweep peaks at ell + 1
    FamilyPredicate family = FamilyPredicate::treewidth_at_most(2);
    int internal_nodes = 2;  // path of internal nodes
    int base_lo = 3, base_hi = 6;
    double base_keep = 0.8;
    double cross_density = 0.5;     // base vertex x R_t edges
    double internal_density = 0.5;  // pool pairs sharing a bag
    double rt_empty_prob = 0.0;     // chance a leaf gets R_t = {}
    int big_leaves = 0;             // leaves drawn from the big range instead
    int big_lo = 0, big_hi = 0;
};

struct GroundTruth {
    int planted_width = 0;
    std::vector<int> leaf_sizes;
    uint64_t seed = 0;
};

struct PlantedHtd {
    Graph graph;
    HTreeDecomposition htd;
    GroundTruth truth;
};

inline PlantedHtd plant_htd_instance(const HtdSpec& spec, uint64_t seed) {
    if (spec.num_leaves < 1 || spec.ell < 0 || spec.internal_nodes < 1)
        throw input_error("plant_htd_instance: bad spec");
    Rng rng(seed);

    // sweep a pool of non-base vertices along the internal path; interval
    // per vertex => occurrence sets are connected
    int q = spec.ell + 1;
    std::vector<VertexSet> internal_bags(static_cast<size_t>(spec.internal_nodes));
    Vertex next_label = 1;
    VertexSet active;
    for (int i = 0; i < q; ++i) active.push_back(next_label++);
    internal_bags[0] = active;
    for (int i = 1; i < spec.internal_nodes; ++i) {
        int drop = static_cast<int>(rng.below(active.size() + 1));
        for (int dcount = 0; dcount < drop && active.size() > 1; ++dcount)
            active.erase(active.begin() + static_cast<long>(rng.below(active.size())));
        int room = q - static_cast<int>(active.size());
        int add = room > 0 ? static_cast<int>(rng.below(static_cast<uint64_t>(room) + 1)) : 0;
        for (int a = 0; a < add; ++a) active = set_union(active, {next_label++});
        internal_bags[static_cast<size_t>(i)] = active;
    }
    int pool_size = next_label - 1;

    struct LeafPlan {
        int attach;     // internal node index
        VertexSet rt;
        Graph base;
        VertexSet base_labels;
    };
    std::vector<LeafPlan> leaves;
    for (int j = 0; j < spec.num_leaves; ++j) {
        LeafPlan plan;
        plan.attach = static_cast<int>(rng.below(static_cast<uint64_t>(spec.internal_nodes)));
        const VertexSet& bag = internal_bags[static_cast<size_t>(plan.attach)];
        if (!rng.chance(spec.rt_empty_prob)) {
            for (Vertex v : bag)
                if (rng.chance(0.6)) plan.rt.push_back(v);
            if (plan.rt.empty() && !bag.empty()) plan.rt.push_back(bag[rng.below(bag.size())]);
        }
        bool big = j < spec.big_leaves && spec.big_hi >= spec.big_lo && spec.big_hi > 0;
        int size = big ? rng.range(spec.big_lo, spec.big_hi) : rng.range(spec.base_lo, spec.base_hi);
        plan.base = random_family_member(spec.family, size, spec.base_keep,
                                         rng.split(200 + static_cast<uint64_t>(j)).next());
        leaves.push_back(std::move(plan));
    }

    // assign base labels after the pool
    for (auto& plan : leaves) {
        for (int i = 0; i < plan.base.num_vertices(); ++i) plan.base_labels.push_back(next_label++);
    }
    int n = next_label - 1;

    Graph g(n);
    // pool edges between co-bagged pairs
    {
        std::vector<std::pair<Vertex, Vertex>> candidates;
        for (const auto& bag : internal_bags)
            for (size_t i = 0; i < bag.size(); ++i)
                for (size_t j = i + 1; j < bag.size(); ++j) candidates.emplace_back(bag[i], bag[j]);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (auto [u, v] : candidates)
            if (rng.chance(spec.internal_density)) g.add_edge_internal(u, v);
    }
    // leaf content: base component edges plus crossings into R_t
    for (const auto& plan : leaves) {
        for (auto [u, v] : plan.base.edges())
            g.add_edge_internal(plan.base_labels[static_cast<size_t>(u - 1)],
                                plan.base_labels[static_cast<size_t>(v - 1)]);
        for (Vertex c : plan.base_labels)
            for (Vertex r : plan.rt)
                if (rng.chance(spec.cross_density)) g.add_edge_internal(c, r);
        // R_t pairs may also see an edge; the leaf bag covers them
        for (size_t i = 0; i < plan.rt.size(); ++i)
            for (size_t j = i + 1; j < plan.rt.size(); ++j)
                if (rng.chance(spec.internal_density)) g.add_edge_internal(plan.rt[i], plan.rt[j]);
    }
    g.finalize();

    HTreeDecomposition d;
    d.family = spec.family;
    int num_nodes = spec.internal_nodes + spec.num_leaves;
    d.bags.assign(static_cast<size_t>(num_nodes) + 1, {});
    for (int i = 0; i < spec.internal_nodes; ++i)
        d.bags[static_cast<size_t>(i + 1)] = internal_bags[static_cast<size_t>(i)];
    for (int i = 1; i < spec.internal_nodes; ++i) d.tree_edges.emplace_back(i, i + 1);
    VertexSet all_base;
    for (size_t j = 0; j < leaves.size(); ++j) {
        int node = spec.internal_nodes + static_cast<int>(j) + 1;
        d.bags[static_cast<size_t>(node)] = set_union(leaves[j].rt, leaves[j].base_labels);
        d.tree_edges.emplace_back(leaves[j].attach + 1, node);
        all_base = set_union(all_base, leaves[j].base_labels);
    }
    d.base = all_base;

    // pool vertices kept out of every leaf must still be fine: they are, the
    // sweep guarantees occurrence intervals; sanity-check the whole plant
    Validation val = validate_htd(g, d);
    if (!val.ok) throw oracle_fault("plant_htd_instance: planted decomposition invalid: " + val.detail);

    PlantedHtd out;
    out.truth.planted_width = width(d);
    for (const auto& plan : leaves) out.truth.leaf_sizes.push_back(plan.base.num_vertices());
    out.truth.seed = seed;
    out.graph = std::move(g);
    out.htd = std::move(d);
    (void)pool_size;
    return out;
}

// ---------------------------------------------------------------------------
// Planted H-elimination decomposition instances
// ---------------------------------------------------------------------------

struct HelimSpec {
    int depth = 2;  // internal chain length
    int num_leaves = 2;
    FamilyPredicate family = FamilyPredicate::treewidth_at_most(1);
    int base_lo = 2, base_hi = 5;
    double base_keep = 0.8;
    double up_density = 0.5;  // edges toward ancestors
};

struct PlantedHelim {
    Graph graph;
    HElimDecomposition helim;
};

inline PlantedHelim plant_helim_instance(const HelimSpec& spec, uint64_t seed) {
    if (spec.depth < 1 || spec.num_leaves < 1) throw input_error("plant_helim_instance: bad spec");
    Rng rng(seed);
    // chain of depth singleton internal nodes; leaves hang under the bottom
    std::vector<Vertex> chain;
    Vertex next_label = 1;
    for (int i = 0; i < spec.depth; ++i) chain.push_back(next_label++);

    std::vector<std::pair<Graph, VertexSet>> leaves;
    for (int j = 0; j < spec.num_leaves; ++j) {
        int size = rng.range(spec.base_lo, spec.base_hi);
        Graph base = random_family_member(spec.family, size, spec.base_keep,
                                          rng.split(300 + static_cast<uint64_t>(j)).next());
        VertexSet labels;
        for (int i = 0; i < base.num_vertices(); ++i) labels.push_back(next_label++);
        leaves.emplace_back(std::move(base), std::move(labels));
    }
    int n = next_label - 1;
    Graph g(n);
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i + 1; j < chain.size(); ++j)
            if (rng.chance(spec.up_density)) g.add_edge_internal(chain[i], chain[j]);
    for (auto& [base, labels] : leaves) {
        for (auto [u, v] : base.edges())
            g.add_edge_internal(labels[static_cast<size_t>(u - 1)],
                                labels[static_cast<size_t>(v - 1)]);
        for (Vertex bv : labels)
            for (Vertex cv : chain)
                if (rng.chance(spec.up_density)) g.add_edge_internal(bv, cv);
    }
    g.finalize();

    HElimDecomposition d;
    d.family = spec.family;
    int num_nodes = spec.depth + spec.num_leaves;
    d.bags.assign(static_cast<size_t>(num_nodes) + 1, {});
    for (int i = 0; i < spec.depth; ++i) d.bags[static_cast<size_t>(i + 1)] = {chain[static_cast<size_t>(i)]};
    for (int i = 1; i < spec.depth; ++i) d.forest_edges.emplace_back(i, i + 1);
    VertexSet all_base;
    for (size_t j = 0; j < leaves.size(); ++j) {
        int node = spec.depth + static_cast<int>(j) + 1;
        d.bags[static_cast<size_t>(node)] = leaves[j].second;
        d.forest_edges.emplace_back(spec.depth, node);
        all_base = set_union(all_base, leaves[j].second);
    }
    d.base = all_base;
    Validation val = validate_helim(g, d);
    if (!val.ok)
        throw oracle_fault("plant_helim_instance: planted decomposition invalid: " + val.detail);
    return {std::move(g), std::move(d)};
}

}  // namespace hybridparam

#endif
