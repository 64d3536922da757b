#include <doctest.h>

#include <random>

#include "germlink/canonical.hpp"

using namespace germlink;

namespace {

PlumbingGraph graph_of(long long p, long long q, long long r) {
    return star_plumbing(seifert_invariants(validate(p, q, r)));
}

// Random tree with strictly diagonally dominant weights: nonsingular and
// negative definite by construction.
PlumbingGraph random_tree(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> size(3, 9);
    std::uniform_int_distribution<long long> extra(1, 4);
    std::uniform_int_distribution<long long> genus(0, 2);
    const int n = size(gen);
    PlumbingGraph g;
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) g.vertices.push_back({i, 0, genus(gen)});
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        const int pa = parent(gen);
        g.edges.emplace_back(pa, i);
        degree[static_cast<size_t>(pa)] += 1;
        degree[static_cast<size_t>(i)] += 1;
    }
    for (int i = 0; i < n; ++i) {
        g.vertices[static_cast<size_t>(i)].weight = -(degree[static_cast<size_t>(i)] + extra(gen));
    }
    return g;
}

// Blow up the point where edge `e` crosses: new (-1) vertex in the middle,
// both endpoints' self-intersections drop by one.
PlumbingGraph blow_up_edge(const PlumbingGraph& g, size_t e) {
    PlumbingGraph out = g;
    const auto [a, b] = out.edges[e];
    const int id = static_cast<int>(out.vertices.size());
    out.vertices.push_back({id, -1, 0});
    out.vertices[static_cast<size_t>(a)].weight -= 1;
    out.vertices[static_cast<size_t>(b)].weight -= 1;
    out.edges[e] = {a, id};
    out.edges.emplace_back(id, b);
    return out;
}

// Blow up a generic point of the curve at vertex `v`.
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, int v) {
    PlumbingGraph out = g;
    const int id = static_cast<int>(out.vertices.size());
    out.vertices.push_back({id, -1, 0});
    out.vertices[static_cast<size_t>(v)].weight -= 1;
    out.edges.emplace_back(v, id);
    return out;
}

} // namespace

TEST_SUITE("canonical") {

TEST_CASE("(2,3,7) coefficients and chi + K^2") {
    CanonicalClassReport rep = canonical_report(graph_of(2, 3, 7));
    CHECK(rep.coefficients[0] == -32);             // centre: 10 - 6r
    CHECK(rep.coefficients[1] == Rational(-17, 7)); // 4/r - 3
    CHECK(rep.coefficients[2] == Rational(-22, 7)); // 6/r - 4
    CHECK_FALSE(rep.is_integral);
    CHECK(rep.chi_resolution == 10);
    CHECK(rep.k_squared == Rational(-363, 7));
    CHECK(rep.chi_plus_k2 == Rational(-293, 7));
}

TEST_CASE("(2,3,r) closed forms, never numerically Gorenstein") {
    for (long long r = 3; r <= 20; ++r) {
        PlumbingGraph g = graph_of(2, 3, r);
        CanonicalClassReport rep = canonical_report(g);
        CHECK(rep.coefficients[0] == 10 - 6 * r);
        CHECK(rep.coefficients[1] == Rational(4 - 3 * r, r));
        CHECK(rep.coefficients[2] == Rational(6 - 4 * r, r));
        // third arm is the chain: (10-6r)(r-j)/r at position j
        for (long long j = 1; j < r; ++j) {
            CHECK(rep.coefficients[static_cast<size_t>(2 + j)] ==
                  Rational((10 - 6 * r) * (r - j), r));
        }
        CHECK_FALSE(rep.is_integral);
        CHECK_FALSE(is_numerically_gorenstein(rep.coefficients));
    }
}

TEST_CASE("(2,9,2): integral coefficients, chi + K^2 = 7") {
    CanonicalClassReport rep = canonical_report(graph_of(2, 9, 2));
    std::vector<Rational> expected = {-8, -6, -4, -2, -1, -6, -4, -2, -4};
    CHECK(rep.coefficients == expected);
    CHECK(rep.is_integral);
    CHECK(rep.chi_resolution == 10);
    CHECK(rep.k_squared == -3);
    CHECK(rep.chi_plus_k2 == 7);
}

TEST_CASE("(2,7,2): integral coefficients, chi + K^2 = 1") {
    CanonicalClassReport rep = canonical_report(graph_of(2, 7, 2));
    std::vector<Rational> expected = {-6, -2, -1, -2, -3};
    CHECK(rep.coefficients == expected);
    CHECK(rep.is_integral);
    CHECK(rep.chi_resolution == 6);
    CHECK(rep.k_squared == -5);
    CHECK(rep.chi_plus_k2 == 1);
}

TEST_CASE("chi of the resolution counts components minus edges") {
    CHECK(chi_resolution(graph_of(2, 3, 7)) == 10); // 9 rational curves, 8 edges
    CHECK(chi_resolution(graph_of(2, 5, 3)) == 2);  // genus-1 centre: 0 + 2 + 2 - 2
}

TEST_CASE("adjunction holds coefficient-wise") {
    PlumbingGraph g = graph_of(3, 5, 4);
    IntersectionMatrix m = intersection_matrix(g);
    std::vector<Rational> k = canonical_class(g);
    for (const PlumbingVertex& v : g.vertices) {
        Rational lhs = 0;
        for (int j = 0; j < m.n; ++j) lhs += Rational(m.at(v.id, j)) * k[static_cast<size_t>(j)];
        CHECK(lhs == Rational(2 * v.genus - 2 - v.weight));
    }
}

TEST_CASE("blow-up stability: chi + K^2 invariant, chi drops by one") {
    std::mt19937_64 gen(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        PlumbingGraph g = random_tree(gen);
        CanonicalClassReport before = canonical_report(g);

        std::uniform_int_distribution<size_t> pick_edge(0, g.edges.size() - 1);
        CanonicalClassReport at_edge = canonical_report(blow_up_edge(g, pick_edge(gen)));
        CHECK(at_edge.chi_plus_k2 == before.chi_plus_k2);
        CHECK(at_edge.chi_resolution == before.chi_resolution + 1);
        CHECK(at_edge.k_squared == before.k_squared - 1);

        std::uniform_int_distribution<int> pick_vertex(0, static_cast<int>(g.vertices.size()) - 1);
        CanonicalClassReport at_vertex = canonical_report(blow_up_vertex(g, pick_vertex(gen)));
        CHECK(at_vertex.chi_plus_k2 == before.chi_plus_k2);
        CHECK(at_vertex.chi_resolution == before.chi_resolution + 1);
        CHECK(at_vertex.k_squared == before.k_squared - 1);
    }
}

}
