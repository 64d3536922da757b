#include "germlink/fibre.hpp"

#include "germlink/linalg.hpp"
#include "germlink/seifert.hpp"

namespace germlink {

namespace {

struct Ray {
    Int x, y;
};

Int det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

// (s, t) with a*s + b*t = gcd(a, b)
std::pair<Int, Int> extended_gcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b; b = r;
        Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    return {s0, t0};
}

// Interior rays of the minimal smooth subdivision of cone(v, w), ordered from
// the v side. Each new ray u is the hull vertex adjacent to v: det(v,u) = 1
// and det(u,w) minimal positive.
std::vector<Ray> subdivide(Ray v, const Ray& w) {
    std::vector<Ray> rays;
    while (det(v, w) > 1) {
        const Int d = det(v, w);
        auto [s, t] = extended_gcd(v.x, v.y);
        // det(v, u0) = 1 for u0 = (-t, s)
        Ray u0{-t, s};
        Int c = det(u0, w) % d;
        if (c < 0) c += d;
        Int k = (c - det(u0, w)) / d;
        Ray u{u0.x + k * v.x, u0.y + k * v.y};
        rays.push_back(u);
        v = u;
    }
    return rays;
}

IntersectionMatrix curve_matrix(const DecoratedCurveGraph& graph) {
    IntersectionMatrix m;
    m.n = static_cast<int>(graph.vertices.size());
    m.entries.assign(static_cast<size_t>(m.n) * m.n, 0);
    for (const auto& [id, weight] : graph.vertices) {
        m.at(id, id) = weight;
    }
    for (const auto& [a, b] : graph.edges) {
        m.at(a, b) = 1;
        m.at(b, a) = 1;
    }
    return m;
}

} // namespace

DecoratedCurveGraph curve_resolution_graph(const Int& p, const Int& q) {
    if (p < 2 || q < 2 || (p == 2 && q == 2) || gcd(p, q) != 1) {
        throw InvalidParams("curve_resolution_graph: need coprime p,q >= 2, (p,q) != (2,2), got (" +
                            p.str() + "," + q.str() + ")");
    }

    // Toric picture: subdivide the first quadrant through the ray (q, p); the
    // strict transform of the cusp meets that ray's divisor transversally,
    // the axes stay on the boundary rays.
    const Ray e1{1, 0}, e2{0, 1};
    const Ray cusp{q, p};
    std::vector<Ray> chain;
    chain.push_back(e1);
    for (const Ray& u : subdivide(e1, cusp)) chain.push_back(u);
    const int cusp_index = static_cast<int>(chain.size()) - 1; // index among interior rays
    chain.push_back(cusp);
    for (const Ray& u : subdivide(cusp, e2)) chain.push_back(u);
    chain.push_back(e2);

    DecoratedCurveGraph graph;
    const int n = static_cast<int>(chain.size()) - 2;
    graph.arrows.assign(static_cast<size_t>(n), {});
    for (int i = 1; i <= n; ++i) {
        const Ray& prev = chain[static_cast<size_t>(i - 1)];
        const Ray& cur = chain[static_cast<size_t>(i)];
        const Ray& next = chain[static_cast<size_t>(i + 1)];
        // prev + next = c * cur fixes the self-intersection -c
        Int c;
        if (cur.x != 0) {
            c = (prev.x + next.x) / cur.x;
        } else {
            c = (prev.y + next.y) / cur.y;
        }
        if (prev.x + next.x != c * cur.x || prev.y + next.y != c * cur.y) {
            throw UnsupportedParams("curve_resolution_graph: subdivision is not smooth at ray " +
                                    cur.x.str() + "," + cur.y.str());
        }
        graph.vertices.emplace_back(i - 1, -c);
        if (i > 1) graph.edges.emplace_back(i - 2, i - 1);
    }
    graph.rupture = cusp_index;
    graph.arrows[0].push_back(Branch::YAxis);                        // strict transform of {x = 0}
    graph.arrows[static_cast<size_t>(n - 1)].push_back(Branch::XAxis); // strict transform of {y = 0}
    graph.arrows[static_cast<size_t>(cusp_index)].push_back(Branch::Cusp);

    graph.mult_h = solve_multiplicities(graph, {Branch::Cusp});
    graph.mult_g = solve_multiplicities(graph, {Branch::XAxis, Branch::YAxis});
    graph.net.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        graph.net[static_cast<size_t>(i)] = graph.mult_h[static_cast<size_t>(i)] - graph.mult_g[static_cast<size_t>(i)];
    }

    // certification: the rupture component must carry pq and p+q
    if (graph.mult_h[static_cast<size_t>(cusp_index)] != p * q ||
        graph.mult_g[static_cast<size_t>(cusp_index)] != p + q) {
        throw UnsupportedParams("curve_resolution_graph: rupture multiplicities are not (pq, p+q) for (" +
                                p.str() + "," + q.str() + ")");
    }
    return graph;
}

std::vector<Int> solve_multiplicities(const DecoratedCurveGraph& shape,
                                      const std::vector<Branch>& branches) {
    const IntersectionMatrix matrix = curve_matrix(shape);
    std::vector<Rational> rhs(static_cast<size_t>(matrix.n), Rational(0));
    for (size_t v = 0; v < shape.arrows.size(); ++v) {
        for (Branch b : shape.arrows[v]) {
            for (Branch wanted : branches) {
                if (b == wanted) rhs[v] -= 1;
            }
        }
    }
    std::vector<Rational> solution = solve_exact(matrix, rhs);
    std::vector<Int> m;
    m.reserve(solution.size());
    for (const Rational& s : solution) {
        if (den(s) != 1) {
            throw NonIntegralMultiplicity("solve_multiplicities: non-integral multiplicity " +
                                          num(s).str() + "/" + den(s).str());
        }
        if (num(s) <= 0) {
            throw NonPositiveMultiplicity("solve_multiplicities: non-positive multiplicity " + num(s).str());
        }
        m.push_back(num(s));
    }
    return m;
}

Int chi_fibre_plane(const DecoratedCurveGraph& graph) {
    std::vector<Int> valence(graph.vertices.size(), 0);
    for (const auto& [a, b] : graph.edges) {
        valence[static_cast<size_t>(a)] += 1;
        valence[static_cast<size_t>(b)] += 1;
    }
    for (size_t v = 0; v < graph.arrows.size(); ++v) {
        valence[v] += static_cast<long long>(graph.arrows[v].size());
    }
    Int chi = 0;
    for (const auto& [id, weight] : graph.vertices) {
        chi += graph.net[static_cast<size_t>(id)] * (2 - valence[static_cast<size_t>(id)]);
    }
    return chi;
}

Int join_chi(const Int& chi_a, const Int& chi_b) {
    return chi_a + chi_b - chi_a * chi_b;
}

Int chi_milnor_F(const GermParams& params, ChiConvention convention) {
    const DecoratedCurveGraph graph = curve_resolution_graph(params.p, params.q);
    const Int chi_f = chi_fibre_plane(graph);
    if (convention == ChiConvention::Literal) {
        return chi_f;
    }
    return join_chi(chi_f, params.r);
}

ObstructionReport smoothing_obstruction(const GermParams& params) {
    ObstructionReport report;
    const DecoratedCurveGraph curve = curve_resolution_graph(params.p, params.q);
    report.chi_fibre_f = chi_fibre_plane(curve);
    report.chi_F_literal = report.chi_fibre_f;
    report.chi_F_join = join_chi(report.chi_fibre_f, params.r);
    auto mod12 = [](const Int& v) {
        Int m = v % 12;
        if (m < 0) m += 12;
        return m.convert_to<int>();
    };
    report.residue_literal = mod12(report.chi_F_literal);
    report.residue_join = mod12(report.chi_F_join);

    const SeifertData seifert = seifert_invariants(params);
    const PlumbingGraph plumbing = star_plumbing(seifert);
    const CanonicalClassReport canonical = canonical_report(plumbing);
    report.gorenstein_possible = canonical.is_integral;
    if (!report.gorenstein_possible) {
        // non-integral K already rules out a Gorenstein model; the mod-12
        // question is moot
        report.chi_plus_k2 = 0;
        report.obstructed = false;
        return report;
    }
    report.chi_plus_k2 = num(canonical.chi_plus_k2);
    const int target = mod12(report.chi_plus_k2);
    report.obstructed = (report.residue_literal != target) && (report.residue_join != target);
    return report;
}

} // namespace germlink
