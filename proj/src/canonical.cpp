#include "germlink/canonical.hpp"

#include "germlink/linalg.hpp"

namespace germlink {

namespace {

std::vector<Rational> adjunction_rhs(const PlumbingGraph& graph) {
    std::vector<Rational> d(graph.vertices.size());
    for (const PlumbingVertex& v : graph.vertices) {
        d[static_cast<size_t>(v.id)] = Rational(2 * v.genus - 2 - v.weight);
    }
    return d;
}

} // namespace

std::vector<Rational> canonical_class(const PlumbingGraph& graph) {
    // solve_exact verifies the solution by back-substitution
    return solve_exact(intersection_matrix(graph), adjunction_rhs(graph));
}

bool is_numerically_gorenstein(const std::vector<Rational>& coefficients) {
    for (const Rational& k : coefficients) {
        if (den(k) != 1) return false;
    }
    return true;
}

Int chi_resolution(const PlumbingGraph& graph) {
    Int chi = 0;
    for (const PlumbingVertex& v : graph.vertices) {
        chi += 2 - 2 * v.genus;
    }
    return chi - static_cast<long long>(graph.edges.size());
}

Rational k_squared(const std::vector<Rational>& coefficients, const IntersectionMatrix& matrix) {
    const int n = matrix.n;
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
        Rational row = 0;
        for (int j = 0; j < n; ++j) {
            if (matrix.at(i, j) != 0) row += Rational(matrix.at(i, j)) * coefficients[static_cast<size_t>(j)];
        }
        acc += coefficients[static_cast<size_t>(i)] * row;
    }
    return acc;
}

Rational chi_plus_k2(const PlumbingGraph& graph) {
    return canonical_report(graph).chi_plus_k2;
}

CanonicalClassReport canonical_report(const PlumbingGraph& graph) {
    CanonicalClassReport report;
    report.coefficients = canonical_class(graph);
    report.is_integral = is_numerically_gorenstein(report.coefficients);
    report.chi_resolution = chi_resolution(graph);
    const IntersectionMatrix matrix = intersection_matrix(graph);
    report.k_squared = k_squared(report.coefficients, matrix);

    // quadratic/linear agreement: k^T A k must equal k^T d
    Rational linear = 0;
    const std::vector<Rational> d = adjunction_rhs(graph);
    for (size_t i = 0; i < d.size(); ++i) linear += report.coefficients[i] * d[i];
    if (linear != report.k_squared) {
        throw SingularMatrix("canonical_report: k^T A k != k^T d");
    }
    report.chi_plus_k2 = Rational(report.chi_resolution) + report.k_squared;
    return report;
}

} // namespace germlink
