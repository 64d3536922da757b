#include "germlink/report.hpp"

#include <sstream>

namespace germlink {

namespace {

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

struct Analysis {
    GermParams params;
    PolarWeightSystem weights;
    SeifertData seifert;
    PlumbingGraph graph;
    bool negative_definite = false;
    CanonicalClassReport canonical;
    ObstructionReport obstruction;
};

Analysis run_pipeline(const Int& p, const Int& q, const Int& r) {
    Analysis a;
    a.params = validate(p, q, r);
    a.weights = polar_weights(a.params);
    a.seifert = seifert_invariants(a.params);
    a.graph = star_plumbing(a.seifert);
    e0_from_graph(a.graph, a.seifert); // throws on mismatch
    a.negative_definite = is_negative_definite(a.graph);
    a.canonical = canonical_report(a.graph);
    a.obstruction = smoothing_obstruction(a.params);
    return a;
}

} // namespace

nlohmann::ordered_json rational_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = num(r).str();
    j["den"] = den(r).str();
    j["decimal"] = decimal_string(r);
    return j;
}

nlohmann::ordered_json analyze_json(const Int& p, const Int& q, const Int& r, ChiMode mode) {
    const Analysis a = run_pipeline(p, q, r);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["params"] = {{"p", to_ll(a.params.p)},
                   {"q", to_ll(a.params.q)},
                   {"r", to_ll(a.params.r)},
                   {"delta", to_ll(a.params.delta)},
                   {"w", to_ll(a.params.w)}};

    nlohmann::ordered_json weights;
    weights["radial"] = {to_ll(a.weights.radial_weights[0]), to_ll(a.weights.radial_weights[1]),
                         to_ll(a.weights.radial_weights[2])};
    weights["polar"] = {to_ll(a.weights.polar_weights[0]), to_ll(a.weights.polar_weights[1]),
                        to_ll(a.weights.polar_weights[2])};
    weights["radial_degree"] = to_ll(a.weights.radial_degree);
    weights["polar_degree"] = to_ll(a.weights.polar_degree);
    j["weights"] = weights;

    nlohmann::ordered_json seifert;
    seifert["genus"] = to_ll(a.seifert.genus);
    seifert["e0"] = rational_json(a.seifert.e0);
    seifert["orbits"] = nlohmann::ordered_json::array();
    for (const Orbit& o : a.seifert.orbits) {
        seifert["orbits"].push_back({{"alpha", to_ll(o.alpha)}, {"beta", to_ll(o.beta)}});
    }
    seifert["dropped"] = a.seifert.dropped;
    j["seifert"] = seifert;

    j["graph"] = to_json(a.graph);

    nlohmann::ordered_json canonical;
    canonical["k"] = nlohmann::ordered_json::array();
    for (const Rational& k : a.canonical.coefficients) canonical["k"].push_back(rational_json(k));
    canonical["is_integral"] = a.canonical.is_integral;
    canonical["chi_resolution"] = to_ll(a.canonical.chi_resolution);
    canonical["k_squared"] = rational_json(a.canonical.k_squared);
    canonical["chi_plus_k2"] = rational_json(a.canonical.chi_plus_k2);
    j["canonical"] = canonical;

    nlohmann::ordered_json obstruction;
    obstruction["chi_fibre_f"] = to_ll(a.obstruction.chi_fibre_f);
    if (mode == ChiMode::Literal || mode == ChiMode::Both) {
        obstruction["chi_F_literal"] = to_ll(a.obstruction.chi_F_literal);
        obstruction["residue_literal"] = a.obstruction.residue_literal;
    }
    if (mode == ChiMode::Join || mode == ChiMode::Both) {
        obstruction["chi_F_join"] = to_ll(a.obstruction.chi_F_join);
        obstruction["residue_join"] = a.obstruction.residue_join;
    }
    obstruction["gorenstein_possible"] = a.obstruction.gorenstein_possible;
    if (a.obstruction.gorenstein_possible) {
        obstruction["chi_plus_k2"] = to_ll(a.obstruction.chi_plus_k2);
    }
    obstruction["obstructed"] = a.obstruction.obstructed;
    j["obstruction"] = obstruction;

    j["verdicts"] = {{"isolated", true},
                     {"negative_definite", a.negative_definite},
                     {"numerically_gorenstein", a.canonical.is_integral},
                     // non-integral K rules out the link of a hypersurface in C^3
                     {"link_realizable_as_complex_link", a.canonical.is_integral},
                     {"smoothing_obstructed", a.obstruction.obstructed}};
    return j;
}

std::string analyze_dot(const Int& p, const Int& q, const Int& r) {
    const GermParams params = validate(p, q, r);
    return to_dot(star_plumbing(seifert_invariants(params)));
}

std::string analyze_markdown(const Int& p, const Int& q, const Int& r, ChiMode mode) {
    const Analysis a = run_pipeline(p, q, r);
    std::ostringstream os;
    os << "# Link analysis of F(x,y,z) = conj(xy)(x^" << a.params.p.str() << " + y^" << a.params.q.str()
       << ") + z^" << a.params.r.str() << "\n\n";
    os << "- delta = " << a.params.delta.str() << ", reduced polar weight w = " << a.params.w.str() << "\n";
    os << "- radial weights (" << a.weights.radial_weights[0].str() << ", " << a.weights.radial_weights[1].str()
       << ", " << a.weights.radial_weights[2].str() << "), degree " << a.weights.radial_degree.str() << "\n";
    os << "- polar weights (" << a.weights.polar_weights[0].str() << ", " << a.weights.polar_weights[1].str()
       << ", " << a.weights.polar_weights[2].str() << "), degree " << a.weights.polar_degree.str() << "\n\n";

    os << "## Seifert invariants\n\n(" << a.seifert.genus.str() << "; " << num(a.seifert.e0).str() << "/"
       << den(a.seifert.e0).str();
    for (const Orbit& o : a.seifert.orbits) {
        os << "; (" << o.alpha.str() << ", " << o.beta.str() << ")";
    }
    os << ")\n";
    if (!a.seifert.dropped.empty()) {
        os << "\nOrbits dropped (alpha = 1):";
        for (int i : a.seifert.dropped) os << " O_" << i;
        os << "\n";
    }

    os << "\n## Plumbing graph\n\n```dot\n" << to_dot(a.graph) << "```\n";
    os << "\nIntersection matrix negative definite: " << (a.negative_definite ? "yes" : "no") << "\n";

    os << "\n## Canonical class\n\n";
    os << "K coefficients (vertex order):";
    for (const Rational& k : a.canonical.coefficients) {
        os << " " << num(k).str();
        if (den(k) != 1) os << "/" << den(k).str();
    }
    os << "\n\n- numerically Gorenstein: " << (a.canonical.is_integral ? "yes" : "no") << "\n";
    if (!a.canonical.is_integral) {
        for (const Rational& k : a.canonical.coefficients) {
            if (den(k) != 1) {
                os << "- non-integral witness: " << num(k).str() << "/" << den(k).str() << "\n";
                break;
            }
        }
    }
    os << "- chi(resolution) = " << a.canonical.chi_resolution.str() << "\n";
    os << "- K^2 = " << num(a.canonical.k_squared).str();
    if (den(a.canonical.k_squared) != 1) os << "/" << den(a.canonical.k_squared).str();
    os << "\n- chi + K^2 = " << num(a.canonical.chi_plus_k2).str();
    if (den(a.canonical.chi_plus_k2) != 1) os << "/" << den(a.canonical.chi_plus_k2).str();
    os << "\n";

    os << "\n## Milnor fibre and smoothing obstruction\n\n";
    os << "- chi of the plane-curve fibre: " << a.obstruction.chi_fibre_f.str() << "\n";
    if (mode == ChiMode::Literal || mode == ChiMode::Both) {
        os << "- chi(F) literal = " << a.obstruction.chi_F_literal.str() << " (residue mod 12: "
           << a.obstruction.residue_literal << ")\n";
    }
    if (mode == ChiMode::Join || mode == ChiMode::Both) {
        os << "- chi(F) join = " << a.obstruction.chi_F_join.str() << " (residue mod 12: "
           << a.obstruction.residue_join << ")\n";
    }
    if (a.obstruction.gorenstein_possible) {
        os << "- target chi + K^2 = " << a.obstruction.chi_plus_k2.str() << " (mod 12: "
           << Int(((a.obstruction.chi_plus_k2 % 12) + 12) % 12).str() << ")\n";
        os << "- smoothing obstructed: " << (a.obstruction.obstructed ? "yes" : "no") << "\n";
    } else {
        os << "- canonical class non-integral: not numerically Gorenstein, smoothing question moot\n";
    }
    return os.str();
}

} // namespace germlink
