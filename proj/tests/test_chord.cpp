#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "cdws/chord.hpp"

using cdws::ChordDiagram;
using cdws::SimpleGraph;
using cdws::Word;

namespace {

// Independent count of diagrams up to rotation/reflection: Burnside
// over the dihedral group acting on perfect matchings of 2n points.
long long burnside_diagram_count(int n) {
    const int len = 2 * n;
    std::vector<std::vector<int>> matchings;
    std::function<void(std::vector<int>&)> gen = [&](std::vector<int>& partner) {
        int open = -1;
        for (int i = 0; i < len; ++i)
            if (partner[static_cast<size_t>(i)] < 0) {
                open = i;
                break;
            }
        if (open < 0) {
            matchings.push_back(partner);
            return;
        }
        for (int j = open + 1; j < len; ++j) {
            if (partner[static_cast<size_t>(j)] >= 0)
                continue;
            partner[static_cast<size_t>(open)] = j;
            partner[static_cast<size_t>(j)] = open;
            gen(partner);
            partner[static_cast<size_t>(open)] = -1;
            partner[static_cast<size_t>(j)] = -1;
        }
    };
    std::vector<int> empty(static_cast<size_t>(len), -1);
    gen(empty);

    long long fixed_total = 0;
    auto count_fixed = [&](auto&& image) {
        long long fixed = 0;
        for (const auto& m : matchings) {
            bool ok = true;
            for (int i = 0; i < len && ok; ++i)
                if (m[static_cast<size_t>(image(i))] != image(m[static_cast<size_t>(i)]))
                    ok = false;
            fixed += ok;
        }
        return fixed;
    };
    for (int r = 0; r < len; ++r)
        fixed_total += count_fixed([&](int i) { return (i + r) % len; });
    for (int r = 0; r < len; ++r)
        fixed_total += count_fixed([&](int i) { return ((r - i) % len + len) % len; });
    return fixed_total / (2 * len);
}

} // namespace

TEST_CASE("construction and normalization") {
    ChordDiagram d(Word{7, 3, 7, 3});
    CHECK(d.word() == Word{0, 1, 0, 1});
    CHECK(d.to_string() == "abab");
    CHECK(d.chord_count() == 2);
    CHECK_THROWS_AS(ChordDiagram(Word{0, 0, 1}), cdws::Error);
    CHECK_THROWS_AS(ChordDiagram(Word{0, 1, 1, 1}), cdws::Error);
    CHECK(ChordDiagram().chord_count() == 0);
}

TEST_CASE("parsing letters and integers") {
    CHECK(ChordDiagram::parse("abab") == ChordDiagram(Word{0, 1, 0, 1}));
    CHECK(ChordDiagram::parse("a b a b") == ChordDiagram::parse("abab"));
    CHECK(ChordDiagram::parse("0 1 0 1") == ChordDiagram::parse("abab"));
    CHECK(ChordDiagram::parse("5 9 5 9") == ChordDiagram::parse("abab"));
    CHECK_THROWS_AS(ChordDiagram::parse("ab!ab"), cdws::Error);
    CHECK(ChordDiagram::from_json(ChordDiagram::parse("abcabc").to_json()) ==
          ChordDiagram::parse("abcabc"));
}

TEST_CASE("canonical form collapses rotations and reflections") {
    ChordDiagram base = ChordDiagram::parse("abcabc").canonical_form();
    CHECK(ChordDiagram::parse("bcabca").canonical_form() == base);
    CHECK(ChordDiagram::parse("cbacba").canonical_form() == base);
    // a reflected asymmetric word
    ChordDiagram d = ChordDiagram::parse("abacdbcd");
    Word w = d.word();
    Word rev(w.rbegin(), w.rend());
    CHECK(ChordDiagram(rev).canonical_form() == d.canonical_form());
}

TEST_CASE("intersection graphs") {
    CHECK(intersection_graph(ChordDiagram::parse("abab")).to_string() == "2; 0-1");
    CHECK(intersection_graph(ChordDiagram::parse("aabb")).edge_count() == 0);
    CHECK(intersection_graph(ChordDiagram::parse("abcabc")).edge_count() == 3);
    // abacbc: a-b cross, b-c cross, a-c do not
    SimpleGraph p3 = intersection_graph(ChordDiagram::parse("abacbc"));
    CHECK(canonical_code(p3) == canonical_code(SimpleGraph::parse("3; 0-1,1-2")));
}

TEST_CASE("enumeration counts match the dihedral Burnside oracle") {
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(cdws::enumerate_diagrams(n).size()) ==
              burnside_diagram_count(n));
    CHECK(cdws::enumerate_diagrams(1).size() == 1);
    CHECK(cdws::enumerate_diagrams(2).size() == 2);
    CHECK(cdws::enumerate_diagrams(3).size() == 5);
    CHECK(cdws::enumerate_diagrams(4).size() == 17);
    CHECK(cdws::enumerate_diagrams(5).size() == 79);
    CHECK_THROWS_AS(cdws::enumerate_diagrams(8), cdws::Error);
}

TEST_CASE("shares of the square diagram") {
    ChordDiagram d = ChordDiagram::parse("abab");
    auto shares = cdws::find_shares(d);
    CHECK(!shares.empty());
    // every reported share passes its own validity check via mutate
    for (const auto& s : shares)
        CHECK_NOTHROW(cdws::mutate(d, s, cdws::MutationSymmetry::Identity));
    // a non-share is rejected: single positions of two crossing chords
    cdws::Share bad{0, 1, 1, 1, {0, 1}};
    CHECK_THROWS_AS(cdws::mutate(d, bad, cdws::MutationSymmetry::SwapArcs), cdws::Error);
}

TEST_CASE("mutations preserve the intersection graph") {
    for (int n = 3; n <= 5; ++n)
        for (const ChordDiagram& d : cdws::enumerate_diagrams(n)) {
            std::string code = canonical_code(intersection_graph(d));
            for (const auto& s : cdws::find_shares(d))
                for (auto m : {cdws::MutationSymmetry::Identity, cdws::MutationSymmetry::SwapArcs,
                               cdws::MutationSymmetry::ReverseArcs,
                               cdws::MutationSymmetry::RotateHalfTurn}) {
                    ChordDiagram md = cdws::mutate(d, s, m);
                    CHECK(canonical_code(intersection_graph(md)) == code);
                }
        }
}

TEST_CASE("identity mutation returns the diagram") {
    ChordDiagram d = ChordDiagram::parse("abcabc");
    for (const auto& s : cdws::find_shares(d))
        CHECK(cdws::mutate(d, s, cdws::MutationSymmetry::Identity).canonical_form() ==
              d.canonical_form());
}

TEST_CASE("mutation orbits partition graph classes") {
    // the n=4 class of the cube-free pair: diagrams with a path graph
    std::map<std::string, std::set<ChordDiagram>> classes;
    for (const ChordDiagram& d : cdws::enumerate_diagrams(4))
        classes[canonical_code(intersection_graph(d))].insert(d);
    for (const auto& [code, cls] : classes) {
        auto orbit = cdws::mutation_orbit(*cls.begin());
        CHECK(std::set<ChordDiagram>(orbit.begin(), orbit.end()) == cls);
    }
}

TEST_CASE("products") {
    ChordDiagram p = cdws::product(ChordDiagram::parse("abab"), ChordDiagram::parse("aa"));
    CHECK(p.to_string() == "ababcc");
    CHECK(intersection_graph(p).edge_count() == 1);

    SUBCASE("one-product fuses the distinguished chords") {
        ChordDiagram q =
            cdws::one_product(ChordDiagram::parse("abab"), 0, ChordDiagram::parse("cdcd"), 1);
        CHECK(q.chord_count() == 3);
        // graph: middle chord adjacent to both others
        CHECK(canonical_code(intersection_graph(q)) ==
              canonical_code(SimpleGraph::parse("3; 0-1,1-2")));
        CHECK_THROWS_AS(cdws::one_product(ChordDiagram::parse("abab"), 5,
                                          ChordDiagram::parse("abab"), 0),
                        cdws::Error);
        CHECK_THROWS_AS(cdws::one_product(ChordDiagram(), 0, ChordDiagram::parse("aa"), 0),
                        cdws::Error);
    }
}

TEST_CASE("whitney twist on words acts as the graph twist") {
    // For every valid twist instance the interlacement graph of the
    // twisted word must be a Whitney twist of the original graph at
    // the same two vertices.
    int instances = 0;
    for (int n = 3; n <= 5; ++n)
        for (const ChordDiagram& d : cdws::enumerate_diagrams(n)) {
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = 0; c2 < n; ++c2) {
                    if (c1 == c2)
                        continue;
                    Word tw;
                    try {
                        tw = cdws::whitney_twist_word(d.word(), c1, c2);
                    } catch (const cdws::Error& e) {
                        CHECK(e.code() == "PreconditionViolated");
                        continue;
                    }
                    ++instances;
                    SimpleGraph got = cdws::interlacement_graph(tw);
                    SimpleGraph orig = intersection_graph(d);
                    // find a side realizing the twist
                    std::vector<int> rest;
                    for (int v = 0; v < n; ++v)
                        if (v != c1 && v != c2)
                            rest.push_back(v);
                    bool matched = false;
                    for (std::uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
                        std::vector<int> side;
                        for (size_t i = 0; i < rest.size(); ++i)
                            if ((mask >> i) & 1)
                                side.push_back(rest[i]);
                        if (whitney_twist_graph(orig, c1, c2, side) == got) {
                            matched = true;
                            break;
                        }
                    }
                    CHECK(matched);
                }
        }
    CHECK(instances > 0);
}

TEST_CASE("realizability brute force") {
    SimpleGraph p3 = SimpleGraph::parse("3; 0-1,1-2");
    auto d = cdws::realize_graph(p3);
    REQUIRE(d.has_value());
    CHECK(canonical_code(intersection_graph(*d)) == canonical_code(p3));
    CHECK(d->canonical_form() == ChordDiagram::parse("abacbc").canonical_form());

    auto all = cdws::diagrams_with_graph(p3);
    CHECK(!all.empty());
    for (const auto& x : all)
        CHECK(canonical_code(intersection_graph(x)) == canonical_code(p3));

    // W5, the wheel on 5 spokes, is a known non-circle graph
    SimpleGraph w5 = SimpleGraph::parse("6; 0-1,1-2,2-3,3-4,4-0,5-0,5-1,5-2,5-3,5-4");
    CHECK_FALSE(cdws::realize_graph(w5).has_value());
}
