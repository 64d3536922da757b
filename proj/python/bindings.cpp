#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germlink/report.hpp"

namespace py = pybind11;
using namespace germlink;

namespace {

ChiMode chi_mode(const std::string& name) {
    if (name == "literal") return ChiMode::Literal;
    if (name == "join") return ChiMode::Join;
    if (name == "both") return ChiMode::Both;
    throw py::value_error("chi convention must be 'literal', 'join' or 'both'");
}

} // namespace

PYBIND11_MODULE(_germlink, m) {
    m.doc() = "Exact invariants of the real germs conj(xy)(x^p + y^q) + z^r";

    py::register_exception<Error>(m, "GermlinkError");

    m.def(
        "analyze",
        [](long long p, long long q, long long r, const std::string& chi) {
            return analyze_json(Int(p), Int(q), Int(r), chi_mode(chi)).dump();
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("chi_convention") = "literal",
        "Full analysis of one triple as a JSON string.");

    m.def(
        "analyze_markdown",
        [](long long p, long long q, long long r, const std::string& chi) {
            return analyze_markdown(Int(p), Int(q), Int(r), chi_mode(chi));
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("chi_convention") = "literal");

    m.def(
        "plumbing_dot",
        [](long long p, long long q, long long r) { return analyze_dot(Int(p), Int(q), Int(r)); },
        py::arg("p"), py::arg("q"), py::arg("r"), "DOT source of the plumbing graph.");

    m.def(
        "seifert_invariants",
        [](long long p, long long q, long long r) {
            const SeifertData data = seifert_invariants(validate(Int(p), Int(q), Int(r)));
            py::dict d;
            d["genus"] = data.genus.convert_to<long long>();
            d["e0"] = py::make_tuple(num(data.e0).convert_to<long long>(),
                                     den(data.e0).convert_to<long long>());
            py::list orbits;
            for (const Orbit& o : data.orbits) {
                orbits.append(py::make_tuple(o.alpha.convert_to<long long>(),
                                             o.beta.convert_to<long long>()));
            }
            d["orbits"] = orbits;
            d["dropped"] = data.dropped;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "ncf",
        [](long long n, long long d) {
            std::vector<long long> terms;
            for (const Int& t : ncf_expand(Int(n), Int(d)).terms) {
                terms.push_back(t.convert_to<long long>());
            }
            return terms;
        },
        py::arg("n"), py::arg("d"), "Negative continued fraction terms of n/d.");

    m.def(
        "chi_milnor",
        [](long long p, long long q, long long r, const std::string& convention) {
            const GermParams params = validate(Int(p), Int(q), Int(r));
            const ChiConvention c =
                convention == "join" ? ChiConvention::Join : ChiConvention::Literal;
            return chi_milnor_F(params, c).convert_to<long long>();
        },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("convention") = "literal");
}
