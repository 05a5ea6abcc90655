#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cdws/gl11.hpp"

using cdws::ChordDiagram;
using cdws::MultiPoly;
using cdws::SimpleGraph;

namespace {

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("conway graph invariant") {
    CHECK(cdws::conway_graph_invariant(SimpleGraph(0)) == MultiPoly::constant(1));
    CHECK(cdws::conway_graph_invariant(SimpleGraph(1)).is_zero());
    CHECK(cdws::conway_graph_invariant(complete(2)).to_string() == "-y");
    CHECK(cdws::conway_graph_invariant(complete(3)).is_zero());
    CHECK(cdws::conway_graph_invariant(complete(4)).to_string() == "y^2");
    // multiplicative over disjoint union
    for (const SimpleGraph& g1 : cdws::all_graphs(3))
        for (const SimpleGraph& g2 : cdws::all_graphs(3))
            CHECK(cdws::conway_graph_invariant(disjoint_union(g1, g2)) ==
                  cdws::conway_graph_invariant(g1) * cdws::conway_graph_invariant(g2));
}

TEST_CASE("framed conway basic values") {
    CHECK(cdws::framed_conway(SimpleGraph(0)) == MultiPoly::constant(1));
    CHECK(cdws::framed_conway(SimpleGraph(1)).to_string() == "c");
    CHECK(cdws::framed_conway(complete(2)).to_string() == "c^2 - y");
    CHECK(cdws::framed_conway(complete(3)).to_string() == "c^3 - 3*c*y");
}

TEST_CASE("framed conway structure on all graphs up to 5 vertices") {
    for (int n = 0; n <= 5; ++n)
        for (const SimpleGraph& g : cdws::all_graphs(n)) {
            MultiPoly f = cdws::framed_conway(g);
            CHECK(f.is_quasihomogeneous(static_cast<unsigned>(n)));
            CHECK(f.coefficient(static_cast<unsigned>(n), 0) == 1);
            CHECK(cdws::deframe(g) == cdws::conway_graph_invariant(g));
        }
}

TEST_CASE("framed conway multiplicativity") {
    for (int n1 = 1; n1 <= 2; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (const SimpleGraph& g1 : cdws::all_graphs(n1))
                for (const SimpleGraph& g2 : cdws::all_graphs(n2))
                    CHECK(cdws::framed_conway(disjoint_union(g1, g2)) ==
                          cdws::framed_conway(g1) * cdws::framed_conway(g2));
}

TEST_CASE("two term relation for the unframed invariant") {
    for (int n = 2; n <= 5; ++n)
        for (const SimpleGraph& g : cdws::all_graphs(n))
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b || !g.has_edge(a, b))
                        continue;
                    CHECK(cdws::conway_graph_invariant(cdws::two_term_partner(g, a, b)) ==
                          cdws::conway_graph_invariant(g));
                }
}

TEST_CASE("four term relation for the framed invariant") {
    for (int n = 2; n <= 5; ++n)
        for (const SimpleGraph& g : cdws::all_graphs(n))
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (a == b || !g.has_edge(a, b))
                        continue;
                    auto ft = cdws::four_term_element(g, a, b);
                    MultiPoly combo = cdws::framed_conway(ft.g) - cdws::framed_conway(ft.g_prime) -
                                      cdws::framed_conway(ft.g_tilde) +
                                      cdws::framed_conway(ft.g_tilde_prime);
                    CHECK(combo.is_zero());
                }
}

TEST_CASE("pullback to chord diagrams") {
    CHECK(cdws::gl11_on_diagram(ChordDiagram::parse("aa")).to_string() == "c");
    CHECK(cdws::gl11_on_diagram(ChordDiagram::parse("abab")).to_string() == "c^2 - y");
    CHECK(cdws::gl11_on_diagram(ChordDiagram::parse("aabb")).to_string() == "c^2");
}

TEST_CASE("mutation invariance of the pullback") {
    for (const ChordDiagram& d : cdws::enumerate_diagrams(4)) {
        MultiPoly ref = cdws::gl11_on_diagram(d);
        for (const ChordDiagram& m : cdws::mutation_orbit(d))
            CHECK(cdws::gl11_on_diagram(m) == ref);
    }
}
