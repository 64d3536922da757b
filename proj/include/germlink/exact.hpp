#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "germlink/errors.hpp"

namespace germlink {

// All load-bearing arithmetic is exact. Int/Rational are arbitrary precision;
// Rational is kept in lowest terms with positive denominator by construction.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// gcd(0,0) = 0; result is never negative.
Int gcd(Int a, Int b);

// Unique u in [1, m-1] with w*u = 1 (mod m).
// Throws DegenerateModulus if m < 2, NotInvertible if gcd(w, m) != 1.
Int mod_inverse(const Int& w, const Int& m);

// Negative (Hirzebruch-Jung) continued fraction
//   [b_1,...,b_k] = b_1 - 1/(b_2 - 1/(... - 1/b_k)),  all b_i >= 2.
struct NCFExpansion {
    std::vector<Int> terms;
};

// Expansion of n/d with n > d >= 1, gcd(n,d) = 1. Repeated ceiling division;
// every emitted term is >= 2. Throws InvalidFraction on bad input.
NCFExpansion ncf_expand(const Int& n, const Int& d);

// Exact value of the continued fraction. Terms must be >= 2 (no zero
// denominators can then occur).
Rational ncf_evaluate(const NCFExpansion& expansion);

// Decimal rendering of a rational, round-to-nearest at `digits` fractional
// digits. Used for display only; never parsed back.
std::string decimal_string(const Rational& r, unsigned digits = 12);

} // namespace germlink
