#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>

#include "hybridparam/graph.hpp"
#include "hybridparam/minor.hpp"
#include "hybridparam/problem.hpp"
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

std::string graph_key(const Graph& g) {
    std::ostringstream os;
    os << g.num_vertices() << ':';
    for (auto [u, v] : g.edges()) os << u << ',' << v << ';';
    return os.str();
}

// Test oracle: P is a minor of G iff some sequence of vertex deletions, edge
// deletions and edge contractions reaches a graph isomorphic to P. Memoized
// recursion over explicit graphs; only meant for hosts with <= 7 vertices.
bool minor_via_operations(const Graph& g, const Graph& p,
                          std::map<std::string, bool>& memo) {
    if (g.num_vertices() < p.num_vertices()) return false;
    if (g.num_edges() < p.num_edges()) return false;
    std::string key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool hit = g.num_vertices() == p.num_vertices() && is_isomorphic(g, p);
    if (!hit)
        for (Vertex v = 1; v <= g.num_vertices() && !hit; ++v)
            hit = minor_via_operations(delete_vertices(g, {v}).graph, p, memo);
    if (!hit)
        for (auto [u, v] : g.edges()) {
            if (minor_via_operations(delete_edge(g, u, v), p, memo) ||
                minor_via_operations(contract_edge(g, u, v).graph, p, memo)) {
                hit = true;
                break;
            }
        }
    memo[key] = hit;
    return hit;
}

}  // namespace

TEST_CASE("induced subgraph basics") {
    Graph c4 = cycle_graph(4);
    auto sub = induced_subgraph(c4, {1, 2});
    CHECK(sub.graph.num_vertices() == 2);
    CHECK(sub.graph.num_edges() == 1);
    CHECK(sub.old_label(1) == 1);
    CHECK(sub.old_label(2) == 2);

    auto empty = induced_subgraph(c4, {});
    CHECK(empty.graph.num_vertices() == 0);
    CHECK(empty.graph.num_edges() == 0);

    auto full = induced_subgraph(c4, c4.vertices());
    CHECK(full.graph.num_vertices() == 4);
    CHECK(full.graph.num_edges() == 4);
    for (Vertex v = 1; v <= 4; ++v) CHECK(full.old_label(v) == v);

    CHECK_THROWS_AS(induced_subgraph(c4, {9}), input_error);
}

TEST_CASE("induced subgraph composes") {
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(8, 0.4, rng);
        VertexSet s, s2;
        for (Vertex v = 1; v <= 8; ++v)
            if (rng.chance(0.7)) s.push_back(v);
        for (Vertex v : s)
            if (rng.chance(0.6)) s2.push_back(v);
        auto one = induced_subgraph(g, s2);
        auto outer = induced_subgraph(g, s);
        auto two = induced_subgraph(outer.graph, outer.restrict(s2));
        CHECK(one.graph.num_vertices() == two.graph.num_vertices());
        CHECK(one.graph.num_edges() == two.graph.num_edges());
        if (one.graph.num_vertices() <= 8) CHECK(is_isomorphic(one.graph, two.graph));
    }
}

TEST_CASE("edge contraction") {
    auto c = contract_edge(cycle_graph(4), 1, 2);
    CHECK(is_isomorphic(c.graph, cycle_graph(3)));
    auto k2 = contract_edge(complete_graph(2), 1, 2);
    CHECK(k2.graph.num_vertices() == 1);
    CHECK(k2.graph.num_edges() == 0);
    auto k4 = contract_edge(complete_graph(4), 2, 3);
    CHECK(is_isomorphic(k4.graph, complete_graph(3)));
    CHECK_THROWS_AS(contract_edge(cycle_graph(4), 1, 3), input_error);
}

TEST_CASE("disjoint union") {
    Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(two_k3.num_vertices() == 6);
    CHECK(two_k3.num_edges() == 6);
    CHECK(connected_components(two_k3).size() == 2);

    Graph same = disjoint_union(cycle_graph(5), empty_graph(0));
    CHECK(same.num_vertices() == 5);
    CHECK(same.num_edges() == 5);

    Graph p2p3 = disjoint_union(path_graph(2), path_graph(3));
    CHECK(p2p3.num_vertices() == 5);
    CHECK(p2p3.num_edges() == 3);
}

TEST_CASE("disjoint union associative up to isomorphism") {
    Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        Graph a = random_graph(2, 0.5, rng);
        Graph b = random_graph(2, 0.5, rng);
        Graph c = random_graph(2, 0.5, rng);
        CHECK(is_isomorphic(disjoint_union(disjoint_union(a, b), c),
                            disjoint_union(a, disjoint_union(b, c))));
    }
}

TEST_CASE("verify_solution basics") {
    CHECK(verify_solution(ProblemInstance::vertex_cover(cycle_graph(4)),
                          Solution::of(VertexSet{1, 3})));
    CHECK_FALSE(verify_solution(ProblemInstance::independent_set(complete_graph(3)),
                                Solution::of(VertexSet{1, 2})));
    CHECK(verify_solution(ProblemInstance::dominating_set(star_graph(4)),
                          Solution::of(VertexSet{1})));
    CHECK_THROWS_AS(verify_solution(ProblemInstance::vertex_cover(cycle_graph(4)),
                                    Solution::of(VertexSet{1, 7})),
                    input_error);
}

TEST_CASE("verify_minor_model examples") {
    MinorModel m;
    m.host = cycle_graph(4);
    m.pattern = cycle_graph(3);
    m.phi = {{1, {1, 2}}, {2, {3}}, {3, {4}}};
    CHECK(verify_minor_model(m));

    CHECK_FALSE(has_minor(path_graph(3), cycle_graph(3)));
    MinorModel bad;
    bad.host = path_graph(3);
    bad.pattern = cycle_graph(3);
    bad.phi = {{1, {1}}, {2, {2}}, {3, {3}}};
    CHECK_FALSE(verify_minor_model(bad));

    // overlapping branch sets are rejected with a diagnostic
    MinorModel overlap;
    overlap.host = cycle_graph(4);
    overlap.pattern = path_graph(2);
    overlap.phi = {{1, {1, 2}}, {2, {2, 3}}};
    auto chk = check_minor_model(overlap);
    CHECK_FALSE(chk.ok);
    CHECK(chk.why.find("disjoint") != std::string::npos);
}

TEST_CASE("minor model search agrees with an operation-sequence oracle") {
    Rng rng(23);
    std::vector<Graph> patterns = {cycle_graph(3), path_graph(3), complete_graph(4),
                                   cycle_graph(4)};
    for (int it = 0; it < 16; ++it) {
        int n = 5 + static_cast<int>(rng.below(3));  // hosts on 5..7 vertices
        Graph g = random_graph(n, 0.35, rng);
        for (const Graph& p : patterns) {
            std::map<std::string, bool> memo;
            bool via_ops = minor_via_operations(g, p, memo);
            auto model = find_minor_model(g, p);
            CHECK(via_ops == model.has_value());
            if (model) CHECK(verify_minor_model(*model));
        }
    }
}

TEST_CASE("components, forests, neighborhoods") {
    CHECK_FALSE(is_forest(cycle_graph(3)));
    CHECK(is_forest(path_graph(6)));
    CHECK(connected_components(disjoint_union(complete_graph(3), complete_graph(3))).size() == 2);
    Graph star = star_graph(5);
    CHECK(neighborhood(star, {1}) == VertexSet{2, 3, 4, 5, 6});
    CHECK(neighborhood(star, star.vertices()).empty());
}

TEST_CASE("isomorphism is capped at eight vertices") {
    CHECK_THROWS_AS(is_isomorphic(path_graph(9), path_graph(9)), unsupported_error);
    CHECK(is_isomorphic(path_graph(8), path_graph(8)));
    CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
}
