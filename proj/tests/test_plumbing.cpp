#include <doctest.h>

#include "germlink/plumbing.hpp"

using namespace germlink;

namespace {

PlumbingGraph graph_of(long long p, long long q, long long r) {
    return star_plumbing(seifert_invariants(validate(p, q, r)));
}

std::vector<long long> weights_of(const PlumbingGraph& g) {
    std::vector<long long> w;
    for (const PlumbingVertex& v : g.vertices) w.push_back(v.weight.convert_to<long long>());
    return w;
}

std::vector<long long> arm_weights(const PlumbingGraph& g, size_t arm) {
    std::vector<long long> w;
    for (int id : g.arms[arm]) w.push_back(g.vertices[static_cast<size_t>(id)].weight.convert_to<long long>());
    return w;
}

} // namespace

TEST_SUITE("plumbing") {

TEST_CASE("star graph for (2,5,3): higher-genus centre") {
    PlumbingGraph g = graph_of(2, 5, 3);
    REQUIRE(g.vertices.size() == 3);
    CHECK(g.vertices[0].weight == -1);
    CHECK(g.vertices[0].genus == 1);
    CHECK(arm_weights(g, 0) == std::vector<long long>{-5});
    CHECK(arm_weights(g, 1) == std::vector<long long>{-2});
}

TEST_CASE("star graph for (2,3,7)") {
    PlumbingGraph g = graph_of(2, 3, 7);
    CHECK(g.vertices[0].weight == -1);
    CHECK(g.vertices[0].genus == 0);
    CHECK(arm_weights(g, 0) == std::vector<long long>{-21});
    CHECK(arm_weights(g, 1) == std::vector<long long>{-14});
    CHECK(arm_weights(g, 2) == std::vector<long long>{-2, -2, -2, -2, -2, -2});
}

TEST_CASE("star graph for (2,9,2)") {
    PlumbingGraph g = graph_of(2, 9, 2);
    CHECK(g.vertices[0].weight == -2);
    CHECK(arm_weights(g, 0) == std::vector<long long>{-2, -2, -3, -3});
    CHECK(arm_weights(g, 1) == std::vector<long long>{-2, -2, -2});
    CHECK(arm_weights(g, 2) == std::vector<long long>{-2});
}

TEST_CASE("star graph for (2,7,2)") {
    PlumbingGraph g = graph_of(2, 7, 2);
    CHECK(g.vertices[0].weight == -1);
    CHECK(arm_weights(g, 0) == std::vector<long long>{-5, -3});
    CHECK(arm_weights(g, 1) == std::vector<long long>{-4});
    CHECK(arm_weights(g, 2) == std::vector<long long>{-2});
}

TEST_CASE("intersection matrix of (2,5,3)") {
    PlumbingGraph g = graph_of(2, 5, 3);
    IntersectionMatrix m = intersection_matrix(g);
    REQUIRE(m.n == 3);
    CHECK(m.at(0, 0) == -1);
    CHECK(m.at(1, 1) == -5);
    CHECK(m.at(2, 2) == -2);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 1);
    CHECK(m.at(1, 2) == 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == m.at(j, i));
}

TEST_CASE("negative definiteness: dense and tree verdicts agree") {
    for (long long p = 2; p <= 7; ++p) {
        for (long long q = p + 1; q <= 9; ++q) {
            if (gcd(p, q) != 1) continue;
            for (long long r = 2; r <= 9; ++r) {
                PlumbingGraph g = graph_of(p, q, r);
                const bool dense = is_negative_definite(intersection_matrix(g));
                const bool tree = is_negative_definite(g);
                CHECK(dense == tree);
                CHECK(dense);
            }
        }
    }
}

TEST_CASE("definiteness rejects non-definite matrices") {
    IntersectionMatrix zero;
    zero.n = 2;
    zero.entries = {Int(0), Int(0), Int(0), Int(0)};
    CHECK_FALSE(is_negative_definite(zero));

    // affine A_1: [-2 2; 2 -2] is only semi-definite
    IntersectionMatrix semi;
    semi.n = 2;
    semi.entries = {Int(-2), Int(2), Int(2), Int(-2)};
    CHECK_FALSE(is_negative_definite(semi));

    IntersectionMatrix pos;
    pos.n = 1;
    pos.entries = {Int(3)};
    CHECK_FALSE(is_negative_definite(pos));
}

TEST_CASE("e0 reconstruction round trip") {
    for (long long r = 2; r <= 12; ++r) {
        GermParams params = validate(2, 3, r);
        SeifertData data = seifert_invariants(params);
        PlumbingGraph g = star_plumbing(data);
        CHECK(e0_from_graph(g, data) == data.e0);
    }
    // worked identity: -1 + 1/5 + 1/2 = -3/10
    SeifertData data = seifert_invariants(validate(2, 5, 3));
    PlumbingGraph g = star_plumbing(data);
    CHECK(e0_from_graph(g, data) == Rational(-3, 10));
}

TEST_CASE("e0 reconstruction detects tampering") {
    SeifertData data = seifert_invariants(validate(2, 3, 5));
    PlumbingGraph g = star_plumbing(data);
    g.vertices[1].weight -= 1;
    CHECK_THROWS_AS((void)e0_from_graph(g, data), ReconstructionMismatch);
}

TEST_CASE("non-integral central weight is rejected") {
    SeifertData bad;
    bad.genus = 0;
    bad.e0 = Rational(-1, 3);
    bad.orbits = {{2, 1}};
    CHECK_THROWS_AS((void)star_plumbing(bad), NonIntegralCentralWeight);
}

TEST_CASE("dot output is deterministic and centre-first") {
    std::string dot = to_dot(graph_of(2, 5, 3));
    CHECK(dot ==
          "graph plumbing {\n"
          "  node [shape=circle];\n"
          "  v0 [label=\"-1 [g=1]\"];\n"
          "  v1 [label=\"-5\"];\n"
          "  v2 [label=\"-2\"];\n"
          "  v0 -- v1;\n"
          "  v0 -- v2;\n"
          "}\n");
    CHECK(to_dot(graph_of(2, 5, 3)) == dot);
}

TEST_CASE("json shape") {
    nlohmann::ordered_json j = to_json(graph_of(2, 5, 3));
    CHECK(j["central"] == 0);
    REQUIRE(j["vertices"].size() == 3);
    CHECK(j["vertices"][0]["weight"] == -1);
    CHECK(j["vertices"][0]["genus"] == 1);
    CHECK(j["edges"] == nlohmann::ordered_json::array({{0, 1}, {0, 2}}));
}

}
