#include "germlink/plumbing.hpp"

#include <sstream>

namespace germlink {

PlumbingGraph star_plumbing(const SeifertData& data) {
    const auto s = static_cast<long long>(data.orbits.size());
    Rational c = data.e0 - s;
    for (const Orbit& orbit : data.orbits) {
        c += Rational(orbit.beta, orbit.alpha);
    }
    if (den(c) != 1) {
        throw NonIntegralCentralWeight("star_plumbing: central weight " + num(c).str() + "/" + den(c).str() +
                                       " is not an integer; inconsistent Seifert data");
    }

    PlumbingGraph graph;
    graph.central = 0;
    graph.vertices.push_back({0, num(c), data.genus});
    for (const Orbit& orbit : data.orbits) {
        NCFExpansion arm = ncf_expand(orbit.alpha, orbit.alpha - orbit.beta);
        std::vector<int> ids;
        int prev = graph.central;
        for (const Int& term : arm.terms) {
            int id = static_cast<int>(graph.vertices.size());
            graph.vertices.push_back({id, -term, 0});
            graph.edges.emplace_back(prev, id);
            ids.push_back(id);
            prev = id;
        }
        graph.arms.push_back(std::move(ids));
    }
    return graph;
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& graph) {
    IntersectionMatrix m;
    m.n = static_cast<int>(graph.vertices.size());
    m.entries.assign(static_cast<size_t>(m.n) * m.n, 0);
    for (const PlumbingVertex& v : graph.vertices) {
        m.at(v.id, v.id) = v.weight;
    }
    for (const auto& [a, b] : graph.edges) {
        m.at(a, b) = 1;
        m.at(b, a) = 1;
    }
    return m;
}

bool is_negative_definite(const IntersectionMatrix& matrix) {
    const int n = matrix.n;
    std::vector<Rational> a(matrix.entries.begin(), matrix.entries.end());
    auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * n + j]; };
    for (int k = 0; k < n; ++k) {
        if (at(k, k) >= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            Rational f = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) {
                at(i, j) -= f * at(k, j);
            }
        }
    }
    return true;
}

bool is_negative_definite(const PlumbingGraph& graph) {
    // Eliminate each arm from the tip towards the centre; the star shape
    // leaves no fill-in, so each pivot only touches its inward neighbour.
    Rational centre = graph.vertices[static_cast<size_t>(graph.central)].weight;
    for (const auto& arm : graph.arms) {
        Rational carry = 0; // contribution subtracted from the next pivot
        for (auto it = arm.rbegin(); it != arm.rend(); ++it) {
            Rational pivot = Rational(graph.vertices[static_cast<size_t>(*it)].weight) - carry;
            if (pivot >= 0) return false;
            carry = Rational(1) / -pivot;
        }
        centre -= carry;
    }
    return centre < 0;
}

Rational e0_from_graph(const PlumbingGraph& graph, const SeifertData& data) {
    Rational e0 = graph.vertices[static_cast<size_t>(graph.central)].weight;
    if (graph.arms.size() != data.orbits.size()) {
        throw ReconstructionMismatch("e0_from_graph: arm count " + std::to_string(graph.arms.size()) +
                                     " != orbit count " + std::to_string(data.orbits.size()));
    }
    for (const auto& arm : graph.arms) {
        NCFExpansion expansion;
        for (int id : arm) {
            expansion.terms.push_back(-graph.vertices[static_cast<size_t>(id)].weight);
        }
        // arm evaluates to alpha/(alpha - beta); its reciprocal is the defect
        Rational value = ncf_evaluate(expansion);
        e0 += Rational(den(value), num(value));
    }
    if (e0 != data.e0) {
        throw ReconstructionMismatch("e0_from_graph: reconstructed " + num(e0).str() + "/" + den(e0).str() +
                                     " but Seifert data has " + num(data.e0).str() + "/" + den(data.e0).str());
    }
    return e0;
}

std::string to_dot(const PlumbingGraph& graph) {
    std::ostringstream os;
    os << "graph plumbing {\n";
    os << "  node [shape=circle];\n";
    for (const PlumbingVertex& v : graph.vertices) {
        os << "  v" << v.id << " [label=\"" << v.weight.str();
        if (v.genus > 0) os << " [g=" << v.genus.str() << "]";
        os << "\"];\n";
    }
    for (const auto& [a, b] : graph.edges) {
        os << "  v" << a << " -- v" << b << ";\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json to_json(const PlumbingGraph& graph) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const PlumbingVertex& v : graph.vertices) {
        nlohmann::ordered_json vj;
        vj["id"] = v.id;
        vj["weight"] = v.weight.convert_to<long long>();
        vj["genus"] = v.genus.convert_to<long long>();
        j["vertices"].push_back(vj);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : graph.edges) {
        j["edges"].push_back({a, b});
    }
    j["central"] = graph.central;
    return j;
}

} // namespace germlink
