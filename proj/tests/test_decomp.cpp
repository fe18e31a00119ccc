#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "hybridparam/decomposition.hpp"
#include "hybridparam/gen.hpp"
#include "hybridparam/rng.hpp"

using namespace hybridparam;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.chance(p)) g.add_edge_internal(i, j);
    g.finalize();
    return g;
}

// Independent treewidth oracle: try every elimination order, build the
// decomposition it induces, validate it, take the best width.
int treewidth_all_orders(const Graph& g) {
    int n = g.num_vertices();
    std::vector<Vertex> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i + 1;
    int best = n;
    do {
        TreeDecomposition td = td_from_elimination_order(g, order);
        REQUIRE(validate_td(g, td).ok);
        best = std::min(best, td.width());
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace

TEST_CASE("validate_htd accepts and rejects") {
    Graph c4 = cycle_graph(4);
    HTreeDecomposition d;
    d.family = FamilyPredicate::treewidth_at_most(2);
    d.bags.assign(2, {});
    d.bags[1] = c4.vertices();
    d.base = c4.vertices();
    CHECK(validate_htd(c4, d).ok);
    CHECK(width(d) == 0);

    // a base vertex sitting in several bags, two of them leaves, violates
    // condition 3
    HTreeDecomposition bad;
    bad.family = FamilyPredicate::treewidth_at_most(2);
    bad.bags.assign(4, {});
    bad.bags[1] = {1, 2, 3};
    bad.bags[2] = {1, 2, 3};
    bad.bags[3] = {1, 2, 3, 4};
    bad.tree_edges = {{1, 2}, {1, 3}};
    bad.base = {2, 4};
    auto val = validate_htd(c4, bad);
    CHECK_FALSE(val.ok);
    CHECK(val.condition == 3);

    // unsorted bags are rejected up front
    HTreeDecomposition unsorted = bad;
    unsorted.bags[3] = {1, 3, 2, 4};
    CHECK(validate_htd(c4, unsorted).condition == 0);
}

TEST_CASE("width uses the max-with-zero formula") {
    Graph g = path_graph(5);
    HTreeDecomposition d;
    d.family = FamilyPredicate::forests();
    d.bags.assign(2, {});
    d.bags[1] = g.vertices();
    d.base = g.vertices();
    CHECK(width(d) == 0);  // all-base

    HTreeDecomposition e;
    e.family = FamilyPredicate::forests();
    e.bags.assign(2, {});
    e.bags[1] = {1, 2, 3, 4};
    e.base = {};
    CHECK(width(e) == 3);  // |chi \ L| = 4
}

TEST_CASE("htd_from_modulator") {
    Graph c4 = cycle_graph(4);
    auto d0 = htd_from_modulator(c4, {}, FamilyPredicate::treewidth_at_most(2));
    CHECK(validate_htd(c4, d0).ok);
    CHECK(d0.num_nodes() == 1);
    CHECK(width(d0) == 0);

    Graph w4(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    auto d1 = htd_from_modulator(w4, {5}, FamilyPredicate::treewidth_at_most(2));
    CHECK(validate_htd(w4, d1).ok);
    CHECK(d1.num_nodes() == 2);
    CHECK(width(d1) == 0);

    Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    Graph glued(7);
    for (auto [u, v] : two.edges()) glued.add_edge_internal(u, v);
    glued.add_edge_internal(7, 1);
    glued.add_edge_internal(7, 4);
    glued.finalize();
    auto d2 = htd_from_modulator(glued, {7}, FamilyPredicate::treewidth_at_most(2));
    CHECK(validate_htd(glued, d2).ok);
    CHECK(d2.leaves().size() == 2);

    for (int p = 1; p <= 4; ++p) {
        Graph g(p + 2, {{p + 1, p + 2}});
        VertexSet m;
        for (int i = 1; i <= p; ++i) m.push_back(i);
        auto d = htd_from_modulator(g, m, FamilyPredicate::forests());
        CHECK(validate_htd(g, d).ok);
        CHECK(width(d) == p - 1);
    }

    CHECK_THROWS_AS(htd_from_modulator(c4, {}, FamilyPredicate::edgeless()), input_error);
}

TEST_CASE("htd_from_helim") {
    // depth 0: two base leaves only
    Graph g = disjoint_union(path_graph(2), path_graph(3));
    HElimDecomposition e;
    e.family = FamilyPredicate::forests();
    e.bags.assign(3, {});
    e.bags[1] = {1, 2};
    e.bags[2] = {3, 4, 5};
    e.base = {1, 2, 3, 4, 5};
    REQUIRE(validate_helim(g, e).ok);
    CHECK(e.depth() == 0);
    auto d = htd_from_helim(g, e);
    CHECK(validate_htd(g, d).ok);
    CHECK(width(d) == 0);

    // chain of d internal singletons over one leaf: the ancestor union puts
    // all d pool vertices into the leaf bag, so the width comes out d - 1
    for (int depth = 1; depth <= 3; ++depth) {
        int base_n = 3;
        Graph h(depth + base_n);
        for (int i = 1; i < depth; ++i) h.add_edge_internal(i, i + 1);
        for (int b = depth + 1; b < depth + base_n; ++b) h.add_edge_internal(b, b + 1);
        for (int i = 1; i <= depth; ++i) h.add_edge_internal(i, depth + 1);
        h.finalize();
        HElimDecomposition chain;
        chain.family = FamilyPredicate::forests();
        chain.bags.assign(static_cast<size_t>(depth) + 2, {});
        for (int i = 1; i <= depth; ++i) chain.bags[static_cast<size_t>(i)] = {i};
        VertexSet base;
        for (int b = depth + 1; b <= depth + base_n; ++b) base.push_back(b);
        chain.bags[static_cast<size_t>(depth + 1)] = base;
        for (int i = 1; i <= depth; ++i) chain.forest_edges.emplace_back(i, i + 1);
        chain.base = base;
        REQUIRE(validate_helim(h, chain).ok);
        CHECK(chain.depth() == depth);
        auto conv = htd_from_helim(h, chain);
        CHECK(validate_htd(h, conv).ok);
        CHECK(width(conv) <= chain.depth());
        CHECK(width(conv) == depth - 1);
    }

    for (uint64_t s = 1; s <= 15; ++s) {
        HelimSpec spec;
        spec.depth = 2 + static_cast<int>(s % 2);
        auto ph = plant_helim_instance(spec, s);
        auto conv = htd_from_helim(ph.graph, ph.helim);
        CHECK(validate_htd(ph.graph, conv).ok);
        CHECK(width(conv) <= ph.helim.depth());
    }
}

TEST_CASE("project_htd") {
    for (uint64_t s = 1; s <= 10; ++s) {
        HtdSpec spec;
        spec.num_leaves = 2;
        spec.ell = 1;
        auto ph = plant_htd_instance(spec, s);
        auto same = project_htd(ph.htd, ph.graph.vertices());
        CHECK(same == ph.htd);

        auto empty = project_htd(ph.htd, {});
        CHECK(width(empty) == 0);

        Rng rng(s);
        VertexSet keep;
        for (Vertex v = 1; v <= ph.graph.num_vertices(); ++v)
            if (rng.chance(0.6)) keep.push_back(v);
        auto proj = project_htd(ph.htd, keep);
        auto sub = induced_subgraph(ph.graph, keep);
        HTreeDecomposition local = proj;
        for (size_t i = 1; i < local.bags.size(); ++i) local.bags[i] = sub.restrict(local.bags[i]);
        local.base = sub.restrict(local.base);
        CHECK(validate_htd(sub.graph, local).ok);
        CHECK(width(proj) <= width(ph.htd));
    }
}

TEST_CASE("htd_to_td") {
    // no base vertices anywhere: widths agree
    Graph k3 = complete_graph(3);
    HTreeDecomposition d;
    d.family = FamilyPredicate::edgeless();
    d.bags.assign(2, {});
    d.bags[1] = {1, 2, 3};
    d.base = {};
    REQUIRE(validate_htd(k3, d).ok);
    auto td = htd_to_td(k3, d, {});
    CHECK(validate_td(k3, td).ok);
    CHECK(td.width() == width(d));

    // one leaf, |R_t| = 3, base component a path: output width <= 4
    Graph g(7);
    for (int i = 4; i < 7; ++i) g.add_edge_internal(i, i + 1);  // path 4-5-6-7
    g.add_edge_internal(1, 2);
    g.add_edge_internal(1, 4);
    g.add_edge_internal(2, 5);
    g.add_edge_internal(3, 7);
    g.finalize();
    HTreeDecomposition one;
    one.family = FamilyPredicate::forests();
    one.bags.assign(2, {});
    one.bags[1] = {1, 2, 3, 4, 5, 6, 7};
    one.base = {4, 5, 6, 7};
    REQUIRE(validate_htd(g, one).ok);
    auto sub = induced_subgraph(g, one.base);
    TreeDecomposition leaf_td = treewidth_exact(sub.graph).second;
    for (auto& bag : leaf_td.bags) bag = sub.lift(bag);
    auto td1 = htd_to_td(g, one, {{1, leaf_td}});
    CHECK(validate_td(g, td1).ok);
    CHECK(td1.width() <= 4);

    // planted TW(2) instances of width ell: flattened width <= ell + 3
    for (uint64_t s = 1; s <= 10; ++s) {
        HtdSpec spec;
        spec.num_leaves = 3;
        spec.ell = 2;
        auto ph = plant_htd_instance(spec, s);
        std::map<int, TreeDecomposition> per_leaf;
        for (int t : ph.htd.leaves()) {
            VertexSet bp = ph.htd.base_part(t);
            if (bp.empty()) continue;
            auto lsub = induced_subgraph(ph.graph, bp);
            TreeDecomposition local = lsub.graph.num_vertices() <= 14
                                          ? treewidth_exact(lsub.graph).second
                                          : treewidth_greedy(lsub.graph);
            for (auto& bag : local.bags) bag = lsub.lift(bag);
            per_leaf[t] = std::move(local);
        }
        auto flat = htd_to_td(ph.graph, ph.htd, per_leaf);
        CHECK(validate_td(ph.graph, flat).ok);
        CHECK(flat.width() <= width(ph.htd) + 1 + 2);
    }

    // missing leaf decomposition is an input error
    CHECK_THROWS_AS(htd_to_td(g, one, {}), input_error);
}

TEST_CASE("treewidth_exact") {
    CHECK(treewidth_exact(path_graph(7)).first == 1);
    CHECK(treewidth_exact(star_graph(5)).first == 1);
    CHECK(treewidth_exact(complete_graph(4)).first == 3);
    CHECK(treewidth_exact(cycle_graph(4)).first == 2);
    CHECK(treewidth_exact(cycle_graph(6)).first == 2);
    CHECK_THROWS_AS(treewidth_exact(path_graph(15)), unsupported_error);

    Rng rng(99);
    for (int it = 0; it < 20; ++it) {
        int n = 4 + static_cast<int>(rng.below(3));  // 4..6
        Graph g = random_graph(n, 0.45, rng);
        auto [w, td] = treewidth_exact(g);
        CHECK(validate_td(g, td).ok);
        CHECK(td.width() == w);
        CHECK(w == treewidth_all_orders(g));
    }
}

TEST_CASE("treewidth_greedy upper bounds and membership") {
    Rng rng(5);
    for (int it = 0; it < 15; ++it) {
        Graph g = random_graph(8, 0.3, rng);
        TreeDecomposition td = treewidth_greedy(g);
        CHECK(validate_td(g, td).ok);
        CHECK(td.width() >= treewidth_exact(g).first);
    }
    CHECK(treewidth_at_most(path_graph(30), 1) == Membership::Yes);
    CHECK(treewidth_at_most(complete_graph(6), 3) == Membership::No);
    CHECK(FamilyPredicate::treewidth_at_most(1).contains_certain(path_graph(40)));
}

TEST_CASE("family predicates are hereditary and closed under union") {
    Rng rng(3);
    std::vector<FamilyPredicate> fams = {FamilyPredicate::edgeless(), FamilyPredicate::forests(),
                                         FamilyPredicate::treewidth_at_most(2)};
    for (const auto& fam : fams) {
        for (uint64_t s = 1; s <= 6; ++s) {
            Graph member = random_family_member(fam, 6, 0.8, s);
            REQUIRE(fam.contains_certain(member));
            VertexSet keep;
            for (Vertex v = 1; v <= member.num_vertices(); ++v)
                if (rng.chance(0.5)) keep.push_back(v);
            CHECK(fam.contains_certain(induced_subgraph(member, keep).graph));
            Graph other = random_family_member(fam, 5, 0.8, s + 50);
            CHECK(fam.contains_certain(disjoint_union(member, other)));
        }
    }
}

TEST_CASE("decomposition file round trip") {
    HtdSpec spec;
    spec.num_leaves = 2;
    spec.ell = 2;
    auto ph = plant_htd_instance(spec, 77);
    std::ostringstream os;
    write_htd(os, ph.htd, ph.graph.num_vertices());
    std::istringstream is(os.str());
    HTreeDecomposition back = read_htd(is);
    CHECK(back == ph.htd);

    std::istringstream bad("htd 1 2\nb 1 1 2\nl\nf TW 0\nx\n");
    CHECK_THROWS_AS(read_htd(bad), input_error);
}
