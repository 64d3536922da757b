#include "germlink/seifert.hpp"

namespace germlink {

SeifertData seifert_invariants(const GermParams& params) {
    const Int& p = params.p;
    const Int& q = params.q;
    const Int& r = params.r;
    const Int& d = params.delta;
    const Int& w = params.w;

    SeifertData data;
    data.genus = genus_riemann_hurwitz(d);
    data.e0 = Rational(-d * d, p * q * r);

    const std::array<Int, 3> alphas = {q * r / d, p * r / d, r / d};
    for (int i = 0; i < 3; ++i) {
        const Int& alpha = alphas[i];
        if (alpha == 1) {
            data.dropped.push_back(i + 1);
            continue;
        }
        Int inv = mod_inverse(w, alpha);
        // first two orbits solve w*beta = -1, the third solves w*beta = +1
        Int beta = (i < 2) ? alpha - inv : inv;
        data.orbits.push_back({alpha, beta});
    }
    return data;
}

IsotropyReport isotropy_orders(const GermParams& params) {
    IsotropyReport report;
    report.orders = {params.q * params.r / params.delta,
                     params.p * params.r / params.delta,
                     params.r / params.delta};
    for (int i = 0; i < 3; ++i) {
        if (report.orders[i] == 1) report.dropped.push_back(i + 1);
    }
    return report;
}

bool functoriality_check(const SeifertData& data, const GermParams& params) {
    // e0(L_F -> B) = (deg R / deg P|fibre) * e0(S3 -> S2)
    Rational hopf(-1, params.p * params.q);
    Rational ratio(params.delta, params.r / params.delta);
    return data.e0 == ratio * hopf;
}

Int genus_riemann_hurwitz(const Int& delta) {
    if (delta < 1 || delta % 2 == 0) {
        throw EvenDelta("genus_riemann_hurwitz: delta = " + delta.str() + " is not odd positive");
    }
    Int g = (delta - 1) / 2;
    // 2g - 2 = delta*(2g(S2) - 2) + 3*(delta - 1), three branch points
    if (2 * g - 2 != delta * (-2) + 3 * (delta - 1)) {
        throw EvenDelta("genus_riemann_hurwitz: Riemann-Hurwitz identity failed for delta = " + delta.str());
    }
    return g;
}

} // namespace germlink
