#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <nlohmann/json.hpp>

#include "cdws/gl11.hpp"
#include "cdws/sl2.hpp"

#ifndef FIXTURES_DIR
#define FIXTURES_DIR "fixtures"
#endif

using cdws::ChordDiagram;

TEST_CASE("precomputed corpus matches the library") {
    for (int n = 1; n <= 5; ++n) {
        std::ifstream in(std::string(FIXTURES_DIR) + "/diagrams_n" + std::to_string(n) +
                         ".json");
        REQUIRE_MESSAGE(in.good(), "fixture file for n=" << n
                                                         << " missing; run the fixtures target");
        nlohmann::json records = nlohmann::json::parse(in);
        auto expected = cdws::enumerate_diagrams(n);
        REQUIRE(records.size() == expected.size());
        size_t i = 0;
        for (const auto& rec : records) {
            ChordDiagram d = ChordDiagram::parse(rec.at("diagram").get<std::string>());
            CHECK(d == expected[i]);
            CHECK(canonical_label(intersection_graph(d)).to_string() ==
                  rec.at("graph").get<std::string>());
            CHECK(cdws::sl2_oracle(d).to_string() == rec.at("sl2").get<std::string>());
            CHECK(cdws::gl11_on_diagram(d).to_string() == rec.at("gl11").get<std::string>());
            ++i;
        }
    }
}
