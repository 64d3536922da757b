#include "germlink/exact.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace germlink {

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

Int mod_inverse(const Int& w, const Int& m) {
    if (m < 2) {
        throw DegenerateModulus("mod_inverse: modulus must be >= 2, got " + m.str());
    }
    // extended Euclid on (w mod m, m)
    Int a = w % m;
    if (a < 0) a += m;
    Int r0 = a, r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) {
        throw NotInvertible("mod_inverse: gcd(" + w.str() + ", " + m.str() + ") = " + r0.str());
    }
    Int u = s0 % m;
    if (u < 0) u += m;
    return u;
}

namespace {

// int64 cutoff chosen so that q*d - n cannot overflow: q <= n and d < n,
// hence q*d < n^2 only when d > 1 steps shrink fast; the actual bound used is
// q*d < n + d <= 2n, safe below 2^62.
constexpr std::int64_t kFastLimit = std::int64_t{1} << 62;

} // namespace

NCFExpansion ncf_expand(const Int& n, const Int& d) {
    if (d < 1 || n <= d || gcd(n, d) != 1) {
        throw InvalidFraction("ncf_expand: need n > d >= 1 coprime, got " + n.str() + "/" + d.str());
    }
    NCFExpansion out;
    out.terms.reserve(32);
    if (n < kFastLimit) {
        std::int64_t a = n.convert_to<std::int64_t>();
        std::int64_t b = d.convert_to<std::int64_t>();
        while (b != 0) {
            std::int64_t q = (a + b - 1) / b;
            out.terms.emplace_back(q);
            std::int64_t next = q * b - a;
            a = b;
            b = next;
        }
        return out;
    }
    Int a = n, b = d;
    while (b != 0) {
        Int q = (a + b - 1) / b;
        out.terms.push_back(q);
        Int next = q * b - a;
        a = b;
        b = next;
    }
    return out;
}

Rational ncf_evaluate(const NCFExpansion& expansion) {
    if (expansion.terms.empty()) {
        throw InvalidFraction("ncf_evaluate: empty expansion");
    }
    for (const Int& t : expansion.terms) {
        if (t < 2) {
            throw InvalidFraction("ncf_evaluate: term " + t.str() + " < 2");
        }
    }
    // Back-to-front: tails of a valid expansion are exactly the (n,d) pairs of
    // the expansion loop, so intermediates stay below the original numerator.
    const auto& ts = expansion.terms;
    bool fast = true;
    for (const Int& t : ts) {
        if (t >= kFastLimit) { fast = false; break; }
    }
    if (fast) {
        using i128 = __int128;
        i128 num128 = ts.back().convert_to<std::int64_t>();
        i128 den128 = 1;
        for (auto it = ts.rbegin() + 1; it != ts.rend(); ++it) {
            i128 next = i128(it->convert_to<std::int64_t>()) * num128 - den128;
            den128 = num128;
            num128 = next;
            if (num128 >= i128(kFastLimit) * 2) { fast = false; break; }
        }
        if (fast) {
            return Rational(Int(std::int64_t(num128)), Int(std::int64_t(den128)));
        }
    }
    Int numer = ts.back();
    Int denom = 1;
    for (auto it = ts.rbegin() + 1; it != ts.rend(); ++it) {
        Int next = (*it) * numer - denom;
        denom = numer;
        numer = next;
    }
    return Rational(numer, denom);
}

std::string decimal_string(const Rational& r, unsigned digits) {
    Int n = num(r);
    Int d = den(r);
    bool negative = n < 0;
    if (negative) n = -n;
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Int scaled = (n * scale * 2 + d) / (d * 2);
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::ostringstream os;
    if (negative && (whole != 0 || frac != 0)) os << '-';
    os << whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        os << '.' << std::string(digits - f.size(), '0') << f;
    }
    return os.str();
}

} // namespace germlink
