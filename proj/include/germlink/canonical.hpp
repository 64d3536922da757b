#pragma once

#include "germlink/plumbing.hpp"

namespace germlink {

struct CanonicalClassReport {
    std::vector<Rational> coefficients; // k_i per vertex id
    bool is_integral = false;
    Int chi_resolution;
    Rational k_squared;
    Rational chi_plus_k2;
};

// Unique exact solution k of A k = d, d_i = 2 g_i - 2 - w_i (adjunction).
// Verified by back-substitution; throws SingularMatrix (defensive, cannot
// occur for a definite graph).
std::vector<Rational> canonical_class(const PlumbingGraph& graph);

// True iff every coefficient has denominator 1.
bool is_numerically_gorenstein(const std::vector<Rational>& coefficients);

// chi of the resolution: sum (2 - 2 g_i) - #edges.
Int chi_resolution(const PlumbingGraph& graph);

// k^T A k.
Rational k_squared(const std::vector<Rational>& coefficients, const IntersectionMatrix& matrix);

Rational chi_plus_k2(const PlumbingGraph& graph);

// Full report; also asserts k^T A k == k^T d.
CanonicalClassReport canonical_report(const PlumbingGraph& graph);

} // namespace germlink
