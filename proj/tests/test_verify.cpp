#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cdws/verify.hpp"

using cdws::ChordDiagram;
using cdws::SimpleGraph;
using cdws::Word;

namespace {

// Broken mutation table: every symmetry acts as the identity, so
// orbits degenerate to single diagrams.
ChordDiagram broken_mutate(const ChordDiagram& d, const cdws::Share&, cdws::MutationSymmetry) {
    return d;
}

// Fake weight system sensitive to the word, not the graph.
cdws::MultiPoly word_hash(const ChordDiagram& d) {
    long h = 1;
    for (int x : d.word())
        h = h * 31 + x + 7;
    return cdws::MultiPoly::constant(cdws::rational(h % 1009));
}

// Broken 1-product: plain product, forgetting to fuse the chords.
ChordDiagram broken_one_product(const ChordDiagram& d1, int, const ChordDiagram& d2, int) {
    return cdws::product(d1, d2);
}

// Broken decomposition: split once and never merge, so complete or
// star inputs end as forbidden dashed neighbors.
cdws::DecompositionTree broken_decompose(const SimpleGraph& g) {
    cdws::DecompositionTree tree = cdws::canonical_decomposition(g);
    if (tree.components.size() != 1)
        return tree;
    auto splits = cdws::find_splits(g);
    if (splits.empty())
        return tree;
    // rebuild a two-component tree from the first split, skipping the
    // merge phase entirely
    const auto& s = splits.front();
    auto build = [&](const std::vector<int>& part, const std::vector<int>& att) {
        cdws::TreeComponent tc;
        tc.graph = SimpleGraph(static_cast<int>(part.size()) + 1);
        for (size_t i = 0; i < part.size(); ++i)
            for (size_t j = i + 1; j < part.size(); ++j)
                if (g.has_edge(part[i], part[j]))
                    tc.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        for (int a : att) {
            auto it = std::find(part.begin(), part.end(), a);
            tc.graph.add_edge(static_cast<int>(it - part.begin()),
                              static_cast<int>(part.size()));
        }
        tc.orig.assign(part.begin(), part.end());
        tc.orig.push_back(-1);
        tc.markers = {static_cast<int>(part.size())};
        tc.kind = cdws::classify_component(tc.graph);
        return tc;
    };
    cdws::DecompositionTree out;
    out.components.push_back(build(s.v1, s.w1));
    out.components.push_back(build(s.v2, s.w2));
    out.dashed.push_back({0, out.components[0].markers[0], 1, out.components[1].markers[0]});
    return out;
}

} // namespace

TEST_CASE("mutation connectivity passes and its report is sane") {
    auto report = cdws::check_mutation_connectivity(3);
    CHECK(report.pass());
    CHECK(report.classes_checked > 0);
    CHECK(report.violations.empty());
    auto j = report.to_json();
    CHECK(j["status"] == "PASS");
    CHECK(j["check"] == "mutation-connectivity");
}

TEST_CASE("mutation connectivity fails under the broken mutation table") {
    auto report = cdws::check_mutation_connectivity(3, broken_mutate);
    CHECK_FALSE(report.pass());
    CHECK(!report.violations.empty());
}

TEST_CASE("graph dependence passes for both weight systems") {
    CHECK(cdws::check_graph_dependence("sl2", 4).pass());
    CHECK(cdws::check_graph_dependence("gl11", 4).pass());
    CHECK_THROWS_AS(cdws::check_graph_dependence("su9", 3), cdws::Error);
}

TEST_CASE("graph dependence fails for a word-sensitive fake invariant") {
    auto report = cdws::check_graph_dependence("sl2", 4, word_hash);
    CHECK_FALSE(report.pass());
}

TEST_CASE("matroid moves pass") {
    auto report = cdws::check_matroid_moves(4);
    CHECK(report.pass());
    CHECK(report.classes_checked > 0);
    CHECK(!report.notes.empty());
}

TEST_CASE("matroid moves fail with a broken one-product") {
    auto report = cdws::check_matroid_moves(4, broken_one_product);
    CHECK_FALSE(report.pass());
}

TEST_CASE("decomposition checker passes") {
    auto report = cdws::check_decomposition(5);
    CHECK(report.pass());
    CHECK(report.classes_checked > 0);
}

TEST_CASE("decomposition checker fails without the merge phase") {
    auto report = cdws::check_decomposition(5, broken_decompose);
    CHECK_FALSE(report.pass());
    bool condition_violation = false;
    for (const auto& v : report.violations)
        if (v.find("condition") != std::string::npos)
            condition_violation = true;
    CHECK(condition_violation);
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(cdws::check_mutation_connectivity(9), cdws::Error);
    CHECK_THROWS_AS(cdws::check_graph_dependence("sl2", 9), cdws::Error);
    CHECK_THROWS_AS(cdws::check_matroid_moves(9), cdws::Error);
    CHECK_THROWS_AS(cdws::check_decomposition(9), cdws::Error);
}
