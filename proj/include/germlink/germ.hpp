#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "germlink/exact.hpp"

namespace germlink {

// Validated parameter triple of F(x,y,z) = conj(xy)(x^p + y^q) + z^r,
// with delta = gcd(r, pq-p-q) and the reduced polar weight w = (pq-p-q)/delta.
struct GermParams {
    Int p, q, r;
    Int delta;
    Int w;
};

// One mixed monomial c * z^mu * conj(z)^nu in the variables (x, y, z).
struct Monomial {
    Int coefficient;
    std::array<Int, 3> mu;
    std::array<Int, 3> nu;
};

// Weight system of the R+ x S1 action; both triples are normalized to gcd 1.
struct PolarWeightSystem {
    std::array<Int, 3> radial_weights;
    std::array<Int, 3> polar_weights;
    Int radial_degree; // a
    Int polar_degree;  // c
};

struct ScanReport {
    long long sample_count = 0;
    // min over all sampled points of the max residual of the three minor
    // equations; infinity when the scan is empty.
    double min_residual = 0.0;
    // same, restricted to points with |x|,|y| >= radius/2
    double min_residual_away = 0.0;
    std::complex<double> argmin_x{0.0, 0.0};
    std::complex<double> argmin_y{0.0, 0.0};
};

// Throws ParameterTooSmall, NotCoprime or NonIsolated ((p,q) = (2,2)).
GermParams validate(const Int& p, const Int& q, const Int& r);

// The three monomials x^p conj(xy), y^q conj(xy), z^r.
std::vector<Monomial> monomials_of_F(const GermParams& params);

// Radial weights proportional to (qr, pr, p+q+pq), polar weights proportional
// to (rq/delta, rp/delta, (pq-p-q)/delta), each normalized to gcd 1 with the
// degrees scaled to match.
PolarWeightSystem polar_weights(const GermParams& params);

// Common (radial degree a, polar degree c) of all monomials under `weights`;
// throws NotPolarHomogeneous naming the offending monomial.
std::pair<Int, Int> verify_polar_homogeneity(const std::vector<Monomial>& monomials,
                                             const PolarWeightSystem& weights);

// Max residual of the minor equations of the critical-point system at (x, y).
// Floating point: this is a diagnostic, never load-bearing.
double critical_residual(const GermParams& params,
                         std::complex<double> x,
                         std::complex<double> y);

// Seeded deterministic scan over pseudo-random points with |x|,|y| <= radius,
// x != 0 != y. Reports the minimal max-residual found.
ScanReport critical_point_scan(const GermParams& params,
                               long long sample_count,
                               const Rational& radius,
                               std::uint64_t seed);

} // namespace germlink
