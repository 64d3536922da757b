#pragma once

#include "germlink/canonical.hpp"

namespace germlink {

enum class Branch { XAxis, YAxis, Cusp };

enum class ChiConvention { Literal, Join };

// Embedded-resolution dual graph of the plane curve xy(x^p + y^q): a chain of
// exceptional curves (ids in chain order) with three arrowhead branches, the
// cusp arrow sitting on the rupture vertex. Multiplicities are filled by
// solve_multiplicities: mult_h for the cusp factor x^p + y^q, mult_g for the
// axes factor xy, net = mult_h - mult_g.
struct DecoratedCurveGraph {
    std::vector<std::pair<int, Int>> vertices; // (id, weight)
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<Branch>> arrows; // per vertex id
    std::vector<Int> mult_h;
    std::vector<Int> mult_g;
    std::vector<Int> net;
    int rupture = -1;
};

// Minimal embedded resolution, shape derived from the continued-fraction
// (Euclidean) subdivision for (p, q). Requires gcd(p,q) = 1, p,q >= 2,
// (p,q) != (2,2); throws InvalidParams otherwise. The result is certified:
// rupture multiplicities must come out as pq and p+q.
DecoratedCurveGraph curve_resolution_graph(const Int& p, const Int& q);

// Unique solution m of A m = -(arrow counts of `branches` per vertex);
// throws NonPositiveMultiplicity / NonIntegralMultiplicity on a wrong shape.
std::vector<Int> solve_multiplicities(const DecoratedCurveGraph& shape,
                                      const std::vector<Branch>& branches);

// A'Campo-type weighted sum: sum net_i * (2 - valence_i), arrowheads counted
// in the valence.
Int chi_fibre_plane(const DecoratedCurveGraph& graph);

// chi(A * B) = chi_a + chi_b - chi_a*chi_b for a join of finite complexes.
Int join_chi(const Int& chi_a, const Int& chi_b);

// Euler characteristic of the Milnor fibre of F. `Literal` follows the
// paper's printed values chi(F) = chi(F_f); `Join` applies the Join Theorem
// with the fibre of z^r (r points).
Int chi_milnor_F(const GermParams& params, ChiConvention convention);

struct ObstructionReport {
    Int chi_fibre_f;    // chi of the plane-curve fibre
    Int chi_F_literal;
    Int chi_F_join;
    Int chi_plus_k2;    // meaningful only when gorenstein_possible
    int residue_literal = 0; // mod 12, in 0..11
    int residue_join = 0;
    bool obstructed = false;
    bool gorenstein_possible = false;
};

// Laufer-Steenbrink test mod 12. When the canonical class is non-integral the
// question is moot: gorenstein_possible = false and obstructed stays false.
// Otherwise obstructed = true iff neither chi convention's residue matches
// chi + K^2 mod 12.
ObstructionReport smoothing_obstruction(const GermParams& params);

} // namespace germlink
