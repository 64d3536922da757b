#include "germlink/germ.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace germlink {

GermParams validate(const Int& p, const Int& q, const Int& r) {
    if (p < 2 || q < 2 || r < 2) {
        throw ParameterTooSmall("validate: need p,q,r >= 2, got (" + p.str() + "," + q.str() + "," + r.str() + ")");
    }
    if (p == 2 && q == 2) {
        throw NonIsolated("validate: (p,q) = (2,2) gives a non-isolated singularity");
    }
    if (gcd(p, q) != 1) {
        throw NotCoprime("validate: gcd(p,q) = " + gcd(p, q).str() + " != 1 for (" + p.str() + "," + q.str() + ")");
    }
    GermParams params;
    params.p = p;
    params.q = q;
    params.r = r;
    Int pw = p * q - p - q;
    params.delta = gcd(r, pw);
    params.w = pw / params.delta;
    return params;
}

std::vector<Monomial> monomials_of_F(const GermParams& params) {
    std::vector<Monomial> out;
    out.push_back({1, {params.p, 0, 0}, {1, 1, 0}}); // x^p conj(xy)
    out.push_back({1, {0, params.q, 0}, {1, 1, 0}}); // y^q conj(xy)
    out.push_back({1, {0, 0, params.r}, {0, 0, 0}}); // z^r
    return out;
}

PolarWeightSystem polar_weights(const GermParams& params) {
    const Int& p = params.p;
    const Int& q = params.q;
    const Int& r = params.r;
    std::array<Int, 3> radial = {q * r, p * r, p + q + p * q};
    Int a = r * (p + q + p * q);
    std::array<Int, 3> polar = {r * q / params.delta, r * p / params.delta, params.w};
    Int c = r * params.w;

    Int gr = gcd(gcd(radial[0], radial[1]), radial[2]);
    for (auto& v : radial) v /= gr;
    a /= gr;
    Int gp = gcd(gcd(polar[0], polar[1]), polar[2]);
    for (auto& v : polar) v /= gp;
    c /= gp;

    PolarWeightSystem ws{radial, polar, a, c};
    verify_polar_homogeneity(monomials_of_F(params), ws);
    return ws;
}

std::pair<Int, Int> verify_polar_homogeneity(const std::vector<Monomial>& monomials,
                                             const PolarWeightSystem& weights) {
    if (monomials.empty()) {
        throw NotPolarHomogeneous("verify_polar_homogeneity: empty monomial list");
    }
    Int a, c;
    bool first = true;
    for (const Monomial& m : monomials) {
        Int ma = 0, mc = 0;
        for (int i = 0; i < 3; ++i) {
            ma += (m.mu[i] + m.nu[i]) * weights.radial_weights[i];
            mc += (m.mu[i] - m.nu[i]) * weights.polar_weights[i];
        }
        if (first) {
            a = ma;
            c = mc;
            first = false;
        } else if (ma != a || mc != c) {
            throw NotPolarHomogeneous(
                "monomial with mu=(" + m.mu[0].str() + "," + m.mu[1].str() + "," + m.mu[2].str() +
                "), nu=(" + m.nu[0].str() + "," + m.nu[1].str() + "," + m.nu[2].str() +
                ") has degrees (" + ma.str() + "," + mc.str() + "), expected (" + a.str() + "," + c.str() + ")");
        }
    }
    return {a, c};
}

namespace {

std::complex<double> ipow(std::complex<double> base, long long e) {
    std::complex<double> acc{1.0, 0.0};
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

double critical_residual(const GermParams& params,
                         std::complex<double> x,
                         std::complex<double> y) {
    const long long p = params.p.convert_to<long long>();
    const long long q = params.q.convert_to<long long>();
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    const double axy2 = ax * ax * ay * ay;
    const std::complex<double> cusp = ipow(x, p) + ipow(y, q);
    const double cusp2 = std::norm(cusp);

    const double lhs1 = double(p) * double(p) * axy2 * std::pow(ax, 2.0 * double(p - 1));
    const double rhs1 = ay * ay * cusp2;
    const double lhs2 = double(q) * double(q) * axy2 * std::pow(ay, 2.0 * double(q - 1));
    const double rhs2 = ax * ax * cusp2;
    const std::complex<double> lhs3 = x * std::conj(y) * cusp2;
    const std::complex<double> rhs3 =
        double(p) * double(q) * axy2 * ipow(std::conj(x), p - 1) * ipow(y, q - 1);

    double res = std::abs(lhs1 - rhs1);
    res = std::max(res, std::abs(lhs2 - rhs2));
    res = std::max(res, std::abs(lhs3 - rhs3));
    return res;
}

ScanReport critical_point_scan(const GermParams& params,
                               long long sample_count,
                               const Rational& radius,
                               std::uint64_t seed) {
    ScanReport report;
    report.min_residual = std::numeric_limits<double>::infinity();
    report.min_residual_away = std::numeric_limits<double>::infinity();
    if (sample_count <= 0) return report;
    const double rad = num(radius).convert_to<double>() / den(radius).convert_to<double>();

    for (long long i = 0; i < sample_count; ++i) {
        // per-index seeding keeps the scan reproducible under any partition
        std::mt19937_64 gen(splitmix64(seed ^ static_cast<std::uint64_t>(i)));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double mx = rad * (1.0 - unit(gen));
        const double tx = 2.0 * M_PI * unit(gen);
        const double my = rad * (1.0 - unit(gen));
        const double ty = 2.0 * M_PI * unit(gen);
        if (mx == 0.0 || my == 0.0) continue;
        const std::complex<double> x = std::polar(mx, tx);
        const std::complex<double> y = std::polar(my, ty);
        const double res = critical_residual(params, x, y);
        if (res < report.min_residual) {
            report.min_residual = res;
            report.argmin_x = x;
            report.argmin_y = y;
        }
        if (mx >= rad / 2.0 && my >= rad / 2.0) {
            report.min_residual_away = std::min(report.min_residual_away, res);
        }
        ++report.sample_count;
    }
    return report;
}

} // namespace germlink
