#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "cdws/sl2.hpp"

using cdws::ChordDiagram;
using cdws::MultiPoly;
using cdws::Word;

TEST_CASE("oracle on tiny diagrams") {
    CHECK(cdws::sl2_oracle(ChordDiagram()) == MultiPoly::constant(1));
    CHECK(cdws::sl2_oracle(ChordDiagram::parse("aa")).to_string() == "c");
    CHECK(cdws::sl2_oracle(ChordDiagram::parse("aabb")).to_string() == "c^2");
    CHECK(cdws::sl2_oracle(ChordDiagram::parse("abab")).to_string() == "c^2 - 1/2*c");
    CHECK(cdws::sl2_oracle(ChordDiagram::parse("abcabc")) ==
          MultiPoly::parse("c^3 - 3/2*c^2 + 1/2*c"));
}

TEST_CASE("cutting point independence") {
    ChordDiagram d = ChordDiagram::parse("abcadbdc");
    const Word& w = d.word();
    for (int m = 1; m <= 4; ++m) {
        cdws::Rational ref = cdws::sl2_irrep_value(w, m);
        for (size_t r = 1; r < w.size(); ++r) {
            Word rot;
            for (size_t i = 0; i < w.size(); ++i)
                rot.push_back(w[(i + r) % w.size()]);
            CHECK(cdws::sl2_irrep_value(rot, m) == ref);
        }
    }
}

TEST_CASE("monic of degree n") {
    for (int n = 1; n <= 4; ++n)
        for (const ChordDiagram& d : cdws::enumerate_diagrams(n)) {
            MultiPoly p = cdws::sl2_oracle(d);
            CHECK(p.degree_c() == static_cast<unsigned>(n));
            CHECK(p.coefficient(static_cast<unsigned>(n), 0) == 1);
        }
}

TEST_CASE("multiplicativity") {
    for (int n1 = 1; n1 <= 2; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (const ChordDiagram& d1 : cdws::enumerate_diagrams(n1))
                for (const ChordDiagram& d2 : cdws::enumerate_diagrams(n2))
                    CHECK(cdws::sl2_oracle(cdws::product(d1, d2)) ==
                          cdws::sl2_oracle(d1) * cdws::sl2_oracle(d2));
}

TEST_CASE("recurrence equals oracle exhaustively through n=5") {
    for (int n = 0; n <= 5; ++n)
        for (const ChordDiagram& d : cdws::enumerate_diagrams(n))
            CHECK(cdws::sl2_recurrence(d) == cdws::sl2_oracle(d));
}

TEST_CASE("recurrence equals oracle on sampled n=6 diagrams") {
    auto all = cdws::enumerate_diagrams(6);
    std::mt19937 rng(12345);
    std::shuffle(all.begin(), all.end(), rng);
    size_t count = std::min<size_t>(all.size(), 120);
    std::vector<ChordDiagram> sample(all.begin(), all.begin() + static_cast<long>(count));
    auto values = cdws::sl2_memo_evaluate(sample);
    for (const ChordDiagram& d : sample)
        CHECK(values.at(d.canonical_form()) == cdws::sl2_oracle(d));
}

TEST_CASE("leaf rule") {
    // abab has a leaf; value is (c - 1/2) * value("aa")
    CHECK(cdws::sl2_recurrence(ChordDiagram::parse("abab")) ==
          MultiPoly::parse("c - 1/2") * MultiPoly::parse("c"));
}

TEST_CASE("memo evaluation is consistent and keyed canonically") {
    ChordDiagram d = ChordDiagram::parse("abcabc");
    ChordDiagram rotated = ChordDiagram::parse("bcabca");
    auto values = cdws::sl2_memo_evaluate({d, rotated});
    CHECK(values.size() == 1);
    CHECK(values.begin()->second == cdws::sl2_oracle(d));
    CHECK(cdws::sl2_memo_evaluate({}).empty());
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(cdws::sl2_oracle(ChordDiagram::parse("abab"), 1), cdws::Error);
    CHECK_THROWS_AS(cdws::sl2_recurrence(ChordDiagram::parse("abab"), 1), cdws::Error);
}
