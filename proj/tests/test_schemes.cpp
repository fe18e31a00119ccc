#include <catch2/catch_amalgamated.hpp>

#include "hybridparam/bench.hpp"
#include "hybridparam/gen.hpp"
#include "hybridparam/mod_schemes.hpp"
#include "hybridparam/twh_schemes.hpp"

using namespace hybridparam;

namespace {

// G - M = 100 disjoint edges, M = 10 vertices wired into the first few.
struct BigFixture {
    Graph graph;
    VertexSet modulator;
};

BigFixture ocean_fixture() {
    int pairs = 100, p = 10;
    Graph g(2 * pairs + p);
    for (int i = 0; i < pairs; ++i) g.add_edge_internal(2 * i + 1, 2 * i + 2);
    VertexSet m;
    for (int j = 0; j < p; ++j) {
        Vertex mv = 2 * pairs + 1 + j;
        m.push_back(mv);
        g.add_edge_internal(mv, 2 * j + 1);
    }
    g.finalize();
    return {std::move(g), std::move(m)};
}

}  // namespace

TEST_CASE("ocean threshold fires exactly at p <= eps/3 |S|") {
    BigFixture fx = ocean_fixture();
    BaseSolver base = exact_base_solver(false);  // |S| = 100 on the 100 edges
    Decider dec = default_decider(ProblemKind::VertexCover);
    auto res = mod_fptas_vertex_deletion(ProblemKind::VertexCover, fx.graph, fx.modulator, 0.3,
                                         FamilyPredicate::forests(), base, dec);
    CHECK(res.case_taken == CaseTaken::Ocean);  // 10 <= (0.3/3) * 100
    CHECK(verify_solution(ProblemInstance::vertex_cover(fx.graph), res.solution));
    CHECK(res.value() == 110);
}

TEST_CASE("empty modulator reduces to the base solver") {
    Graph g = random_partial_ktree(10, 2, 0.8, 5);
    BaseSolver base = exact_base_solver(false);
    Decider dec = default_decider(ProblemKind::VertexCover);
    auto res = mod_fptas_vertex_deletion(ProblemKind::VertexCover, g, {}, 0.4,
                                         FamilyPredicate::treewidth_at_most(2), base, dec);
    CHECK(res.case_taken == CaseTaken::Ocean);
    CHECK(res.value() == brute_opt(ProblemInstance::vertex_cover(g)).value);
}

TEST_CASE("bucket branch is exact on the wheel") {
    Graph w4(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    BaseSolver base = exact_base_solver(false);
    Decider dec = default_decider(ProblemKind::VertexCover);
    auto res = mod_fptas_vertex_deletion(ProblemKind::VertexCover, w4, {5}, 0.5,
                                         FamilyPredicate::treewidth_at_most(2), base, dec);
    CHECK(res.case_taken == CaseTaken::Bucket);
    CHECK(res.value() == brute_opt(ProblemInstance::vertex_cover(w4)).value);
}

TEST_CASE("epsilon range is enforced") {
    Graph g = path_graph(4);
    BaseSolver base = exact_base_solver(false);
    Decider dec = default_decider(ProblemKind::VertexCover);
    CHECK_THROWS_AS(mod_fptas_vertex_deletion(ProblemKind::VertexCover, g, {}, 0.0,
                                              FamilyPredicate::forests(), base, dec),
                    input_error);
    CHECK_THROWS_AS(mod_fptas_vertex_deletion(ProblemKind::VertexCover, g, {}, 1.5,
                                              FamilyPredicate::forests(), base, dec),
                    input_error);
    // a non-modulator is rejected up front
    CHECK_THROWS_AS(mod_fptas_vertex_deletion(ProblemKind::VertexCover, cycle_graph(4), {},
                                              0.5, FamilyPredicate::edgeless(), base, dec),
                    input_error);
}

TEST_CASE("vc_mod_guess") {
    Graph edge = path_graph(2);
    Solution s = vc_mod_guess(edge, {1}, 0.5, FamilyPredicate::edgeless(),
                              exact_base_solver(false));
    CHECK(s.value() == 1);

    Graph g = random_partial_ktree(9, 2, 0.8, 3);
    Solution pure = vc_mod_guess(g, {}, 0.5, FamilyPredicate::treewidth_at_most(2),
                                 exact_base_solver(false));
    CHECK(pure.value() == brute_opt(ProblemInstance::vertex_cover(g)).value);

    for (uint64_t seed = 1; seed <= 20; ++seed) {
        ModulatorSpec spec;
        spec.p = 2;
        spec.comp_lo = 3;
        spec.comp_hi = 6;
        auto pm = plant_modulator_instance(spec, seed);
        Solution guessed = vc_mod_guess(pm.graph, pm.modulator, 0.5, pm.family,
                                        exact_base_solver(false));
        CHECK(guessed.value() == brute_opt(ProblemInstance::vertex_cover(pm.graph)).value);
        CHECK(verify_solution(ProblemInstance::vertex_cover(pm.graph), guessed));
    }
}

TEST_CASE("mod_alpha") {
    // alpha = 1 via an exact base keeps the scheme within 1 + eps
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        ModulatorSpec spec;
        spec.p = 1 + static_cast<int>(seed % 3);
        spec.comp_lo = 4;
        spec.comp_hi = 6;
        auto pm = plant_modulator_instance(spec, seed);
        Decider dec = default_decider(ProblemKind::VertexCover);
        auto res = mod_alpha(ProblemKind::VertexCover, pm.graph, pm.modulator, 0.5, pm.family,
                             exact_base_solver(false), dec);
        long long opt = brute_opt(ProblemInstance::vertex_cover(pm.graph)).value;
        CHECK(verify_solution(ProblemInstance::vertex_cover(pm.graph), res.solution));
        CHECK(static_cast<double>(res.value()) <= 1.5 * static_cast<double>(opt) + 1e-9);
        if (res.case_taken == CaseTaken::Bucket) CHECK(res.value() == opt);
    }
    // alpha = 2 greedy matching base stays within 2 + eps
    for (uint64_t seed = 21; seed <= 40; ++seed) {
        ModulatorSpec spec;
        spec.p = static_cast<int>(seed % 4);
        spec.comp_lo = 4;
        spec.comp_hi = 7;
        auto pm = plant_modulator_instance(spec, seed);
        Decider dec = default_decider(ProblemKind::VertexCover);
        auto res = mod_alpha(ProblemKind::VertexCover, pm.graph, pm.modulator, 0.5, pm.family,
                             matching_vc_base_solver(), dec);
        long long opt = brute_opt(ProblemInstance::vertex_cover(pm.graph)).value;
        CHECK(verify_solution(ProblemInstance::vertex_cover(pm.graph), res.solution));
        CHECK(static_cast<double>(res.value()) <= 2.5 * static_cast<double>(opt) + 1e-9);
    }
}

TEST_CASE("is_mod_guess") {
    CHECK(is_mod_guess(path_graph(2), {1}, 0.5, FamilyPredicate::edgeless(),
                       exact_base_solver(true))
              .value() == 1);
    CHECK(is_mod_guess(complete_graph(3), {1}, 0.5, FamilyPredicate::treewidth_at_most(2),
                       exact_base_solver(true))
              .value() == 1);
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        ModulatorSpec spec;
        spec.p = static_cast<int>(seed % 3);
        spec.comp_lo = 4;
        spec.comp_hi = 6;
        auto pm = plant_modulator_instance(spec, seed);
        Solution s = is_mod_guess(pm.graph, pm.modulator, 0.4, pm.family, exact_base_solver(true));
        long long opt = brute_opt(ProblemInstance::independent_set(pm.graph)).value;
        CHECK(verify_solution(ProblemInstance::independent_set(pm.graph), s));
        CHECK(static_cast<double>(s.value()) >= 0.6 * static_cast<double>(opt) - 1e-9);
    }
}

TEST_CASE("cycle packing scheme") {
    Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    auto exact_pack = [](const Graph& h) { return brute_opt(ProblemInstance::cycle_packing(h)); };
    auto res = cycpack_mod_fptas(two, {}, 0.5, FamilyPredicate::treewidth_at_most(2),
                                 exact_base_solver(true), exact_pack);
    CHECK(res.value() == 2);
    CHECK(verify_solution(ProblemInstance::cycle_packing(two), res.solution));

    // |M| = 1, |S| = 10, eps = 0.4: ocean since 1 <= 2. The base is a stub
    // handing back the packing of ten planted triangles.
    Graph big(31);
    for (int i = 0; i < 10; ++i) {
        int a = 3 * i + 1;
        big.add_edge_internal(a, a + 1);
        big.add_edge_internal(a + 1, a + 2);
        big.add_edge_internal(a, a + 2);
    }
    big.add_edge_internal(31, 1);
    big.finalize();
    BaseSolver stub;
    stub.guarantee = BaseSolver::Guarantee::EpsMax;
    stub.solve = [](const ProblemInstance& inst, double) {
        PackingSolution p;
        for (int i = 0; i < inst.graph.num_vertices() / 3; ++i) {
            PackingTuple t;
            int a = 3 * i + 1;
            t.host_vertices = {a, a + 1, a + 2};
            t.host_edges = {{a, a + 1}, {a + 1, a + 2}, {a, a + 2}};
            t.pattern = cycle_graph(3);
            t.phi = {{1, {a}}, {2, {a + 1}}, {3, {a + 2}}};
            p.tuples.push_back(std::move(t));
        }
        return Solution::of(std::move(p));
    };
    auto ocean = cycpack_mod_fptas(big, {31}, 0.4, FamilyPredicate::treewidth_at_most(2), stub,
                                   exact_pack);
    CHECK(ocean.case_taken == CaseTaken::Ocean);
    CHECK(ocean.value() == 10);
    CHECK(verify_solution(ProblemInstance::cycle_packing(big), ocean.solution));

    // bucket assertion holds on random suite instances
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        SuiteInstance si = suites::make("cycpack-mod-small", seed);
        auto r = cycpack_mod_fptas(si.graph, si.modulator, 0.4, si.family, exact_base_solver(true),
                                   exact_pack);
        long long opt = brute_opt(ProblemInstance::cycle_packing(si.graph)).value;
        CHECK(static_cast<double>(r.value()) >= 0.6 * static_cast<double>(opt) - 1e-9);
        if (r.case_taken == CaseTaken::Bucket)
            CHECK(static_cast<double>(opt) <=
                  (1.0 + 4.0 / 0.4) * static_cast<double>(si.modulator.size()));
    }
}

TEST_CASE("dominating set scheme") {
    Graph star = star_graph(6);
    auto res = ds_mod_fptas(star, {1}, 0.5, FamilyPredicate::treewidth_at_most(2),
                            exact_base_solver(false));
    CHECK(res.case_taken == CaseTaken::Bucket);
    CHECK(res.value() == 1);

    Graph g = random_partial_ktree(10, 2, 0.8, 9);
    auto pure = ds_mod_fptas(g, {}, 0.5, FamilyPredicate::treewidth_at_most(2),
                             exact_base_solver(false));
    CHECK(pure.value() == brute_opt(ProblemInstance::dominating_set(g)).value);

    for (uint64_t seed = 1; seed <= 20; ++seed) {
        SuiteInstance si = suites::make("ds-mod-small", seed);
        auto r = ds_mod_fptas(si.graph, si.modulator, 0.5, si.family, exact_base_solver(false));
        long long opt = brute_opt(ProblemInstance::dominating_set(si.graph)).value;
        CHECK(verify_solution(ProblemInstance::dominating_set(si.graph), r.solution));
        CHECK(static_cast<double>(r.value()) <= 1.5 * static_cast<double>(opt) + 1e-9);
    }
}

TEST_CASE("connectivity repair") {
    Graph p5 = path_graph(5);
    CHECK(connectivity_repair(p5, {2, 4}, {3}) == VertexSet{2, 3, 4});

    // two cover components bridged by exactly one outside vertex
    Graph bridge(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    VertexSet s = {2, 5, 6};
    VertexSet m = {1};
    // G[{1,2,5,6}] has components {1,2} and {5,6}; vertex 3 or 4 connects
    CHECK_FALSE(detail::is_vertex_cover(bridge, s));  // edge 3-4 uncovered
    s = {2, 3, 5, 6};
    VertexSet repaired = connectivity_repair(bridge, s, m);
    CHECK(induces_connected(bridge, repaired));
    CHECK(repaired.size() == s.size() + m.size() + 1);  // one connector

    CHECK_THROWS_AS(connectivity_repair(p5, {2}, {}), input_error);
}

TEST_CASE("connected vertex cover scheme") {
    // eps = 1 means eps' = 0.2 internally: with |M| = 1 and |S'| = 4 the
    // bucket fires (1 > 0.8); a larger eps' would have gone ocean
    Graph spokes(9, {{2, 3}, {4, 5}, {6, 7}, {8, 9}, {1, 2}, {1, 4}, {1, 6}, {1, 8}});
    auto exact_cvc = [](const Graph& h) {
        return brute_opt(ProblemInstance::connected_vertex_cover(h));
    };
    auto res = cvc_mod_fptas(spokes, {1}, 1.0, FamilyPredicate::forests(),
                             exact_base_solver(false), exact_cvc);
    CHECK(res.case_taken == CaseTaken::Bucket);
    long long opt = brute_opt(ProblemInstance::connected_vertex_cover(spokes)).value;
    CHECK(res.value() == opt);

    // two nontrivial components: infeasible
    Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    auto inf = cvc_mod_fptas(two, {}, 0.5, FamilyPredicate::treewidth_at_most(2),
                             exact_base_solver(false), exact_cvc);
    CHECK_FALSE(inf.feasible);

    for (uint64_t seed = 1; seed <= 15; ++seed) {
        SuiteInstance si = suites::make("cvc-mod-small", seed);
        auto r = cvc_mod_fptas(si.graph, si.modulator, 0.5, si.family, exact_base_solver(false),
                               exact_cvc);
        REQUIRE(r.feasible);
        auto o = brute_opt(ProblemInstance::connected_vertex_cover(si.graph));
        REQUIRE(o.feasible);
        CHECK(verify_solution(ProblemInstance::connected_vertex_cover(si.graph), r.solution));
        CHECK(static_cast<double>(r.value()) <= 1.5 * static_cast<double>(o.value) + 1e-9);
    }
}

TEST_CASE("leaf classification thresholds") {
    // width-1 pool {a, b}; leaf 2 holds 40 disjoint edges, leaf 3 holds 10
    int big = 40, small = 10;
    Graph g(2 + 2 * big + 2 * small);
    Vertex next = 3;
    VertexSet base_big, base_small;
    for (int i = 0; i < big; ++i) {
        g.add_edge_internal(next, next + 1);
        base_big.push_back(next);
        base_big.push_back(next + 1);
        next += 2;
    }
    for (int i = 0; i < small; ++i) {
        g.add_edge_internal(next, next + 1);
        base_small.push_back(next);
        base_small.push_back(next + 1);
        next += 2;
    }
    g.add_edge_internal(1, base_big[0]);
    g.add_edge_internal(2, base_big[2]);
    g.add_edge_internal(1, base_small[0]);
    g.add_edge_internal(2, base_small[2]);
    g.finalize();
    HTreeDecomposition d;
    d.family = FamilyPredicate::forests();
    d.bags.assign(4, {});
    d.bags[1] = {1, 2};
    d.bags[2] = set_union({1, 2}, base_big);
    d.bags[3] = set_union({1, 2}, base_small);
    d.tree_edges = {{1, 2}, {1, 3}};
    d.base = set_union(base_big, base_small);
    REQUIRE(validate_htd(g, d).ok);
    REQUIRE(width(d) == 1);

    auto cls = classify_leaves(g, d, 0.2, ProblemKind::VertexCover, exact_base_solver(false));
    CHECK(cls.ell == 2);
    REQUIRE(cls.per_leaf.count(2) == 1);
    REQUIRE(cls.per_leaf.count(3) == 1);
    CHECK(cls.per_leaf.at(2).local_size == 40);
    CHECK(cls.per_leaf.at(2).good);  // 2 <= (0.2/3)*40 = 2.67
    CHECK_FALSE(cls.per_leaf.at(3).good);
    CHECK(cls.per_leaf.at(3).bad_certificate == Catch::Approx(30.0));  // 3*2/0.2
    CHECK(brute_opt(ProblemInstance::vertex_cover(induced_subgraph(g, base_small).graph)).value <=
          30);

    // empty base parts are always bad
    HTreeDecomposition e;
    e.family = FamilyPredicate::forests();
    e.bags.assign(3, {});
    e.bags[1] = {1, 2};
    e.bags[2] = {1};
    e.tree_edges = {{1, 2}};
    e.base = {};
    Graph tiny(2, {{1, 2}});
    REQUIRE(validate_htd(tiny, e).ok);
    auto cls2 = classify_leaves(tiny, e, 0.5, ProblemKind::VertexCover, exact_base_solver(false));
    CHECK(cls2.good_leaves.empty());
}

TEST_CASE("eta modulated equivalence") {
    // all leaves bad reduces to the exact solve
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        HtdSpec spec;
        spec.num_leaves = 2;
        spec.ell = 1;
        spec.base_lo = 3;
        spec.base_hi = 4;
        auto ph = plant_htd_instance(spec, seed);
        if (ph.graph.num_vertices() > 20) continue;
        auto res = eta_modulated_fptas(ProblemKind::VertexCover, ph.graph, ph.htd, 0.1,
                                       0, exact_base_solver(false));
        long long opt = brute_opt(ProblemInstance::vertex_cover(ph.graph)).value;
        CHECK(verify_solution(ProblemInstance::vertex_cover(ph.graph), res.solution));
        CHECK(static_cast<double>(res.value()) <= 1.1 * static_cast<double>(opt) + 1e-9);
        if (res.stats.good_leaves == 0) CHECK(res.value() == opt);
    }

    // width bound value: planted width 2 gives ell = 3, eps = 0.3, eta = 1
    HtdSpec spec;
    spec.num_leaves = 2;
    spec.ell = 2;
    spec.family = FamilyPredicate::treewidth_at_most(2);
    auto ph = plant_htd_instance(spec, 5);
    auto res = eta_modulated_fptas(ProblemKind::FeedbackVertexSet, ph.graph, ph.htd, 0.3, 1,
                                   exact_base_solver(false));
    int ell = width(ph.htd) + 1;
    CHECK(res.stats.width_bound ==
          Catch::Approx(static_cast<double>(ell) * (1.0 + 3.0 / 0.3) + 1.0));
    CHECK(res.stats.assembled_width <= res.stats.width_bound);
}

TEST_CASE("parameter chain consistency") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        ModulatorSpec spec;
        spec.p = 1 + static_cast<int>(seed % 2);
        spec.comp_lo = 4;
        spec.comp_hi = 6;
        auto pm = plant_modulator_instance(spec, seed);
        double eps = 0.5;
        Decider dec = default_decider(ProblemKind::VertexCover);
        auto via_mod = mod_fptas_vertex_deletion(ProblemKind::VertexCover, pm.graph, pm.modulator,
                                                 eps, pm.family, exact_base_solver(false), dec);
        auto htd = htd_from_modulator(pm.graph, pm.modulator, pm.family);
        auto via_twh = eta_modulated_fptas(ProblemKind::VertexCover, pm.graph, htd, eps, 0,
                                           exact_base_solver(false));
        long long opt = brute_opt(ProblemInstance::vertex_cover(pm.graph)).value;
        CHECK(static_cast<double>(via_mod.value()) <= 1.5 * static_cast<double>(opt) + 1e-9);
        CHECK(static_cast<double>(via_twh.value()) <= 1.5 * static_cast<double>(opt) + 1e-9);
    }
}

TEST_CASE("twh variants reduce to the exact solver when everything is bad") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        HtdSpec spec;
        spec.num_leaves = 2;
        spec.ell = 1;
        spec.base_lo = 3;
        spec.base_hi = 4;
        auto ph = plant_htd_instance(spec, seed);
        if (ph.graph.num_vertices() > 14) continue;

        auto is_res = twh_fptas_is(ph.graph, ph.htd, 0.1, exact_base_solver(true));
        long long is_opt = brute_opt(ProblemInstance::independent_set(ph.graph)).value;
        CHECK(verify_solution(ProblemInstance::independent_set(ph.graph), is_res.solution));
        CHECK(static_cast<double>(is_res.value()) >= 0.9 * static_cast<double>(is_opt) - 1e-9);

        std::vector<Graph> f = {cycle_graph(3)};
        auto pk = twh_fptas_packing(ProblemKind::MinorPacking, ph.graph, ph.htd, 0.2,
                                    exact_base_solver(true), f);
        long long pk_opt = brute_opt(ProblemInstance::minor_packing(ph.graph, f)).value;
        CHECK(verify_solution(ProblemInstance::minor_packing(ph.graph, f), pk.solution));
        CHECK(static_cast<double>(pk.value()) >= 0.8 * static_cast<double>(pk_opt) - 1e-9);

        auto al = twh_alpha(ProblemKind::VertexCover, ph.graph, ph.htd, 0.2,
                            matching_vc_base_solver());
        long long vc_opt = brute_opt(ProblemInstance::vertex_cover(ph.graph)).value;
        CHECK(verify_solution(ProblemInstance::vertex_cover(ph.graph), al.solution));
        CHECK(static_cast<double>(al.value()) <= 2.2 * static_cast<double>(vc_opt) + 1e-9);
    }
}

TEST_CASE("lossy base solvers stay within their guarantee") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_partial_ktree(9, 2, 0.8, seed);
        BaseSolver lossy = lossy_base_solver(1.0, false);
        Solution s = lossy.run(ProblemInstance::vertex_cover(g), 0.5);
        long long opt = brute_opt(ProblemInstance::vertex_cover(g)).value;
        CHECK(verify_solution(ProblemInstance::vertex_cover(g), s));
        CHECK(static_cast<double>(s.value()) <= 1.5 * static_cast<double>(opt) + 1e-9);

        BaseSolver lossy_max = lossy_base_solver(1.0, true);
        Solution t = lossy_max.run(ProblemInstance::independent_set(g), 0.5);
        long long is_opt = brute_opt(ProblemInstance::independent_set(g)).value;
        CHECK(verify_solution(ProblemInstance::independent_set(g), t));
        CHECK(static_cast<double>(t.value()) >= 0.5 * static_cast<double>(is_opt) - 1e-9);
    }
}
