#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "germlink/seifert.hpp"

namespace germlink {

struct PlumbingVertex {
    int id;
    Int weight; // self-intersection, negative
    Int genus;
};

// Star-shaped plumbing graph: one central vertex (id 0) and one arm per
// exceptional orbit. Ids are dense, centre first, then arms in orbit order,
// each arm listed from the centre outwards.
struct PlumbingGraph {
    std::vector<PlumbingVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    int central = 0;
    std::vector<std::vector<int>> arms;
};

// Symmetric matrix with vertex weights on the diagonal and 1 for each edge.
struct IntersectionMatrix {
    int n = 0;
    std::vector<Int> entries; // row-major, n*n

    Int& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

// Central weight c = e0 + sum beta_i/alpha_i - s (s = orbit count); arm i
// carries the negated terms of ncf_expand(alpha_i, alpha_i - beta_i).
// Throws NonIntegralCentralWeight if c fails to be an integer.
PlumbingGraph star_plumbing(const SeifertData& data);

IntersectionMatrix intersection_matrix(const PlumbingGraph& graph);

// Exact verdict: all leading pivots of the symmetric elimination negative
// (equivalently, all leading principal minors of -A positive).
bool is_negative_definite(const IntersectionMatrix& matrix);

// Same verdict via leaf-to-centre elimination along the tree; O(n), used by
// large consistency sweeps.
bool is_negative_definite(const PlumbingGraph& graph);

// c + sum (alpha_i - beta_i)/alpha_i with each fraction recovered from the
// arm weights via ncf_evaluate; throws ReconstructionMismatch if the result
// differs from data.e0.
Rational e0_from_graph(const PlumbingGraph& graph, const SeifertData& data);

// Deterministic Graphviz rendering, centre first, arms in orbit order.
std::string to_dot(const PlumbingGraph& graph);

// {"vertices":[{"id","weight","genus"}],"edges":[[i,j]],"central":id}
nlohmann::ordered_json to_json(const PlumbingGraph& graph);

} // namespace germlink
