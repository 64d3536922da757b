#pragma once

#include <array>
#include <vector>

#include "germlink/germ.hpp"

namespace germlink {

// Normalized exceptional orbit: 0 < beta < alpha, gcd(alpha, beta) = 1.
struct Orbit {
    Int alpha;
    Int beta;
};

// Normalized Seifert invariants (g; e0; (a1,b1),...,(as,bs)) of the link.
// Orbits whose alpha collapses to 1 are not exceptional; they are removed
// from `orbits` and their 1-based indices recorded in `dropped`.
struct SeifertData {
    Int genus;
    Rational e0;
    std::vector<Orbit> orbits;
    std::vector<int> dropped;
};

struct IsotropyReport {
    std::array<Int, 3> orders; // (qr/delta, pr/delta, r/delta)
    std::vector<int> dropped;  // 1-based indices with order 1
};

// genus (delta-1)/2, e0 = -delta^2/(pqr), beta_i from the three congruences
//   w b1 = -1 (mod qr/delta), w b2 = -1 (mod pr/delta), w b3 = +1 (mod r/delta).
SeifertData seifert_invariants(const GermParams& params);

IsotropyReport isotropy_orders(const GermParams& params);

// Recomputes e0 from the covering degrees (deg R = delta, deg of the
// projection restricted to a regular fibre = r/delta, e0(S3 -> S2) = -1/pq)
// and compares with data.e0.
bool functoriality_check(const SeifertData& data, const GermParams& params);

// (delta-1)/2, checked against the Riemann-Hurwitz equation with three branch
// points: 2g - 2 = delta*(-2) + 3*(delta-1). Throws EvenDelta.
Int genus_riemann_hurwitz(const Int& delta);

} // namespace germlink
