#include <doctest.h>

#include "germlink/report.hpp"

using namespace germlink;
using nlohmann::ordered_json;

TEST_SUITE("report") {

TEST_CASE("rational serialization uses strings, never floats") {
    ordered_json j = rational_json(Rational(-3, 10));
    CHECK(j["num"] == "-3");
    CHECK(j["den"] == "10");
    CHECK(j["decimal"] == "-0.300000000000");
    CHECK(j["num"].is_string());
    CHECK(j["den"].is_string());
    CHECK(j["decimal"].is_string());
}

TEST_CASE("analysis json schema") {
    ordered_json j = analyze_json(2, 5, 3);
    CHECK(j["schema_version"] == 1);
    CHECK(j["params"]["p"] == 2);
    CHECK(j["params"]["delta"] == 3);
    CHECK(j["seifert"]["genus"] == 1);
    CHECK(j["seifert"]["e0"]["num"] == "-3");
    CHECK(j["seifert"]["e0"]["den"] == "10");
    CHECK(j["seifert"]["orbits"].size() == 2);
    CHECK(j["seifert"]["dropped"] == ordered_json::array({3}));
    CHECK(j["graph"]["central"] == 0);
    CHECK(j["graph"]["vertices"].size() == 3);
    CHECK(j["canonical"].contains("k"));
    CHECK(j["verdicts"]["isolated"] == true);
    CHECK(j["verdicts"]["negative_definite"] == true);
}

TEST_CASE("chi convention switches the obstruction fields") {
    ordered_json lit = analyze_json(2, 9, 2, ChiMode::Literal);
    CHECK(lit["obstruction"].contains("chi_F_literal"));
    CHECK_FALSE(lit["obstruction"].contains("chi_F_join"));

    ordered_json join = analyze_json(2, 9, 2, ChiMode::Join);
    CHECK_FALSE(join["obstruction"].contains("chi_F_literal"));
    CHECK(join["obstruction"]["chi_F_join"] == 9);

    ordered_json both = analyze_json(2, 9, 2, ChiMode::Both);
    CHECK(both["obstruction"]["chi_F_literal"] == -7);
    CHECK(both["obstruction"]["chi_F_join"] == 9);
    CHECK(both["obstruction"]["chi_plus_k2"] == 7);
    CHECK(both["obstruction"]["obstructed"] == true);
}

TEST_CASE("verdicts for a non-Gorenstein case") {
    ordered_json j = analyze_json(2, 3, 7);
    CHECK(j["verdicts"]["numerically_gorenstein"] == false);
    CHECK(j["verdicts"]["link_realizable_as_complex_link"] == false);
    CHECK(j["verdicts"]["smoothing_obstructed"] == false);
    CHECK(j["obstruction"]["gorenstein_possible"] == false);
    CHECK_FALSE(j["obstruction"].contains("chi_plus_k2"));
}

TEST_CASE("analysis is deterministic") {
    CHECK(analyze_json(3, 5, 4, ChiMode::Both).dump() == analyze_json(3, 5, 4, ChiMode::Both).dump());
    CHECK(analyze_markdown(3, 5, 4) == analyze_markdown(3, 5, 4));
}

TEST_CASE("markdown embeds the dot source") {
    std::string md = analyze_markdown(2, 9, 2, ChiMode::Both);
    std::string dot = analyze_dot(2, 9, 2);
    CHECK(md.find("```dot\n" + dot + "```") != std::string::npos);
    CHECK(md.find("chi + K^2 = 7") != std::string::npos);
    CHECK(md.find("smoothing obstructed: yes") != std::string::npos);
}

TEST_CASE("errors propagate for the CLI to map") {
    CHECK_THROWS_AS((void)analyze_json(4, 6, 3), NotCoprime);
    CHECK_THROWS_AS((void)analyze_json(2, 2, 3), NonIsolated);
    CHECK_THROWS_AS((void)analyze_json(1, 2, 3), ParameterTooSmall);
}

}
