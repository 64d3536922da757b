#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "germlink/fibre.hpp"

namespace germlink {

enum class ChiMode { Literal, Join, Both };

// {"num": "...", "den": "...", "decimal": "..."}; numerator/denominator as
// decimal strings so arbitrary precision survives JSON, never floats.
nlohmann::ordered_json rational_json(const Rational& r);

// Full pipeline for one triple. Throws the underlying module error on
// invalid parameters; internal invariant violations propagate too.
nlohmann::ordered_json analyze_json(const Int& p, const Int& q, const Int& r,
                                    ChiMode mode = ChiMode::Literal);

std::string analyze_markdown(const Int& p, const Int& q, const Int& r,
                             ChiMode mode = ChiMode::Literal);

// DOT source of the plumbing graph for the triple.
std::string analyze_dot(const Int& p, const Int& q, const Int& r);

} // namespace germlink
