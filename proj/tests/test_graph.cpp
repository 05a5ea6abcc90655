#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "cdws/graph.hpp"

using cdws::SimpleGraph;

namespace {

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle(int n) {
    SimpleGraph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("basic accessors") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    g.toggle_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    g.remove_edge(1, 2);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.add_edge(0, 4), cdws::Error);
    CHECK_THROWS_AS(g.add_edge(2, 2), cdws::Error);
}

TEST_CASE("text and json round-trips") {
    SimpleGraph g = path(4);
    CHECK(g.to_string() == "4; 0-1,1-2,2-3");
    CHECK(SimpleGraph::parse(g.to_string()) == g);
    CHECK(SimpleGraph::parse("3;") == SimpleGraph(3));
    CHECK(SimpleGraph::from_json(g.to_json()) == g);
    CHECK_THROWS_AS(SimpleGraph::parse("3; 0-3"), cdws::Error);
    CHECK_THROWS_AS(SimpleGraph::parse("x"), cdws::Error);
}

TEST_CASE("canonical code classifies isomorphism") {
    std::mt19937 rng(7);
    for (const SimpleGraph& g : {path(5), cycle(5), complete(5), SimpleGraph(5)}) {
        std::string code = canonical_code(g);
        for (int t = 0; t < 10; ++t)
            CHECK(canonical_code(apply_permutation(g, random_perm(5, rng))) == code);
    }
    CHECK(canonical_code(path(4)) != canonical_code(cycle(4)));
    // same degree sequence, non-isomorphic: C6 vs two triangles
    SimpleGraph two_triangles = disjoint_union(cycle(3), cycle(3));
    CHECK(canonical_code(cycle(6)) != canonical_code(two_triangles));
    // canonical_label realizes its own code
    SimpleGraph c = canonical_label(cycle(5));
    CHECK(canonical_code(c) == canonical_code(cycle(5)));
}

TEST_CASE("colored canonical code separates colorings") {
    SimpleGraph g = path(3);
    std::string end_marked = canonical_code(g, {1, 0, 0});
    std::string mid_marked = canonical_code(g, {0, 1, 0});
    CHECK(end_marked != mid_marked);
    CHECK(canonical_code(g, {0, 0, 1}) == end_marked);
}

TEST_CASE("gf2 nondegeneracy") {
    CHECK(adjacency_nondegenerate_gf2(SimpleGraph(0)));
    CHECK_FALSE(adjacency_nondegenerate_gf2(SimpleGraph(1)));
    CHECK(adjacency_nondegenerate_gf2(complete(2)));
    CHECK_FALSE(adjacency_nondegenerate_gf2(complete(3))); // odd n
    // K4 adjacency is J - I, an involution mod 2, hence invertible
    CHECK(adjacency_nondegenerate_gf2(complete(4)));
    CHECK(adjacency_nondegenerate_gf2(path(4)));
    CHECK(adjacency_nondegenerate_gf2(cycle(4)) == false); // C4 rank 2
}

TEST_CASE("two and four term partners") {
    SimpleGraph g = path(3); // 0-1-2
    // A=0, B=1 adjacent; w=2 is B's other neighbor, not adjacent to A
    SimpleGraph t = two_term_partner(g, 0, 1);
    CHECK(t.has_edge(0, 2));
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 2)); // 1-2 untouched
    CHECK_THROWS_AS(two_term_partner(g, 0, 2), cdws::Error);

    cdws::FourTermElement ft = four_term_element(g, 0, 1);
    CHECK(ft.g == g);
    CHECK_FALSE(ft.g_prime.has_edge(0, 1));
    CHECK(ft.g_tilde == t);
    CHECK_FALSE(ft.g_tilde_prime.has_edge(0, 1));
    CHECK(ft.g_tilde_prime.has_edge(0, 2));
}

TEST_CASE("connectivity helpers") {
    CHECK(is_connected(path(5)));
    CHECK_FALSE(is_connected(disjoint_union(path(2), path(3))));
    auto comps = connected_components(disjoint_union(path(2), path(3)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() + comps[1].size() == 5);
    CHECK(is_connected(SimpleGraph(0)));
    CHECK(is_connected(SimpleGraph(1)));
}

TEST_CASE("induced subgraphs and gluing") {
    SimpleGraph g = cycle(4);
    SimpleGraph sub = induced_subgraph(g, {0, 1, 2});
    CHECK(sub.to_string() == "3; 0-1,1-2");

    SimpleGraph glued = one_vertex_gluing(path(2), 1, path(2), 0);
    CHECK(canonical_code(glued) == canonical_code(path(3)));
}

TEST_CASE("whitney twist on graphs") {
    // path 0-1-2-3-4; cut {1,3}: components {0},{2},{4}
    SimpleGraph g = path(5);
    SimpleGraph t = whitney_twist_graph(g, 1, 3, {2});
    // vertex 2 swaps its adjacency to 1 and 3: still adjacent to both
    CHECK(t == g);
    SimpleGraph t0 = whitney_twist_graph(g, 1, 3, {0});
    CHECK(t0.has_edge(0, 3));
    CHECK_FALSE(t0.has_edge(0, 1));
    CHECK(t0.to_string() == "5; 0-3,1-2,2-3,3-4");
    CHECK(t0.edge_count() == g.edge_count());
}

TEST_CASE("graph enumeration counts") {
    CHECK(cdws::all_graphs(0).size() == 1);
    CHECK(cdws::all_graphs(1).size() == 1);
    CHECK(cdws::all_graphs(2).size() == 2);
    CHECK(cdws::all_graphs(3).size() == 4);
    CHECK(cdws::all_graphs(4).size() == 11);
    CHECK(cdws::all_graphs(5).size() == 34);
    CHECK(cdws::all_graphs(6).size() == 156);
    CHECK(cdws::all_connected_graphs(4).size() == 6);
    CHECK(cdws::all_connected_graphs(5).size() == 21);
    CHECK(cdws::all_connected_graphs(6).size() == 112);
    CHECK(cdws::all_connected_graphs(7).size() == 853);
}
