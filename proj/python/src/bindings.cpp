#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibcones/blowver.hpp"
#include "fibcones/cli.hpp"
#include "fibcones/effcones.hpp"

namespace py = pybind11;
using namespace fibcones;

namespace {

std::vector<std::string> strings(const Vector& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

std::vector<std::vector<std::string>> strings(const Matrix& m) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strings(m.row(r)));
    return out;
}

std::vector<std::vector<std::string>> strings_of(const std::vector<Vector>& vs) {
    std::vector<std::vector<std::string>> out;
    for (const auto& v : vs) out.push_back(strings(v));
    return out;
}

std::vector<std::string> classes(const ProductSpace& s, const std::vector<CycleClass>& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(s.format(c));
    return out;
}

py::list report(const IdentityReport& r) {
    py::list out;
    for (const auto& c : r.checks) out.append(py::make_tuple(c.name, c.lhs, c.rhs, c.passed));
    return out;
}

py::dict eff_dict(const EffConeResult& r) {
    py::dict d;
    d["codim"] = r.codim;
    d["provenance"] = std::string(provenance_name(r.provenance));
    d["generators"] = classes(*r.space, r.generators);
    std::vector<std::vector<std::string>> coords;
    for (const auto& g : r.generators) coords.push_back(strings(basis_coordinates(*r.space, g, r.codim)));
    d["coordinates"] = coords;
    py::list subs;
    for (const auto& s : r.sub_results) subs.append(eff_dict(s));
    d["sub_results"] = subs;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fibcones, m) {
    m.doc() = "Numerical rings and cones of cycles of P(E1) x_C P(E2).";

    py::register_exception<Error>(m, "FibconesError", PyExc_ValueError);

    py::class_<HNQuotient>(m, "HNQuotient")
        .def(py::init<int, int>(), py::arg("rank"), py::arg("degree"))
        .def_readonly("rank", &HNQuotient::rank)
        .def_readonly("degree", &HNQuotient::degree);

    py::class_<BundleData>(m, "Bundle")
        .def(py::init([](int rank, int degree, const std::vector<std::pair<int, int>>& hn) {
                 BundleData e{rank, degree, {}};
                 for (auto [n, d] : hn) e.hn.push_back({n, d});
                 return e;
             }),
             py::arg("rank"), py::arg("degree"), py::arg("hn") = std::vector<std::pair<int, int>>{})
        .def_readonly("rank", &BundleData::rank)
        .def_readonly("degree", &BundleData::degree)
        .def_property_readonly("semistable", &BundleData::semistable)
        .def("__repr__", [](const BundleData& e) {
            std::ostringstream s;
            s << "Bundle(rank=" << e.rank << ", degree=" << e.degree << ", hn=[";
            for (std::size_t i = 0; i < e.hn.size(); ++i)
                s << (i ? ", " : "") << "(" << e.hn[i].rank << ", " << e.hn[i].degree << ")";
            s << "])";
            return s.str();
        });

    py::class_<ProductSpace>(m, "Space")
        .def(py::init(&build_space), py::arg("e1"), py::arg("e2"))
        .def_property_readonly("dimension", &ProductSpace::dimension)
        .def_property_readonly("swapped", &ProductSpace::swapped)
        .def_property_readonly("semistable", &ProductSpace::semistable)
        .def_property_readonly("unstable", &ProductSpace::unstable)
        .def("relations", [](const ProductSpace& s) { return report(verify_relations(s)); })
        .def("basis", [](const ProductSpace& s, int k) { return classes(s, nk_basis(s, k)); }, py::arg("codim"))
        .def("separating_classes", [](const ProductSpace& s, int k) { return classes(s, separating_classes(s, k)); },
             py::arg("codim"))
        .def("pairing",
             [](const ProductSpace& s, int k) {
                 return strings(pairing_matrix(s, nk_basis(s, k), nk_basis(s, s.dimension() - k)));
             },
             py::arg("codim"))
        .def("eff", [](const ProductSpace& s, int k) { return eff_dict(eff_cone(s, k)); }, py::arg("codim"))
        .def("nef",
             [](const ProductSpace& s, int k) {
                 const Cone c = nef_cone(s, k);
                 py::dict d;
                 d["generators"] = strings_of(c.generators());
                 d["inequalities"] = strings_of(c.facets().inequalities);
                 d["equalities"] = strings_of(c.facets().equalities);
                 return d;
             },
             py::arg("codim"))
        .def("verify_blowup",
             [](const ProductSpace& s, int factor) {
                 return report(verify_exceptional_vanishing(
                     build_blowup_model(s, factor == 2 ? Factor::Second : Factor::First)));
             },
             py::arg("factor") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::ostringstream out, err;
            std::istringstream in(stdin_text);
            const int code = run_cli(args, out, err, in);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "");
}
