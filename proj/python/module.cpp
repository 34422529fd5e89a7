// Python bindings: geometry primitives directly, and the heavier
// construct/verify/witness/profile operations bridged as JSON strings so
// the Python wrapper can hand back plain dicts.

#include <complex>

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "hypflute/dynamics.hpp"
#include "hypflute/selection.hpp"
#include "hypflute/spec_io.hpp"
#include "hypflute/svg.hpp"

namespace py = pybind11;
using namespace hypflute;

namespace {

ExtendedPoint pt(std::complex<double> z) { return ExtendedPoint::interior(z); }

ExtendedPoint boundary_pt(double x) {
    if (std::isinf(x)) return ExtendedPoint::infinity();
    return ExtendedPoint::boundary(x);
}

GroupSpec parse_spec(const std::string& text) {
    return spec_from_json(ordered_json::parse(text));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "upper half-plane geometry, generator selection and certificates";

    m.def("constant_C", &constant_C, "half the width of the slope-1 hypercycle corridor");

    m.def(
        "dist", [](std::complex<double> a, std::complex<double> b) { return dist(pt(a), pt(b)); },
        py::arg("a"), py::arg("b"), "hyperbolic distance between interior points");

    m.def(
        "busemann",
        [](double xi, std::complex<double> z, std::complex<double> w) {
            return busemann(boundary_pt(xi), pt(z), pt(w));
        },
        py::arg("xi"), py::arg("z"), py::arg("w"),
        "Busemann cocycle B_xi(z, w); xi = float('inf') for the point at infinity");

    py::class_<Isometry>(m, "Isometry")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"),
             py::arg("d"))
        .def_readonly("a", &Isometry::a)
        .def_readonly("b", &Isometry::b)
        .def_readonly("c", &Isometry::c)
        .def_readonly("d", &Isometry::d)
        .def("trace", &Isometry::trace)
        .def("inverse", &Isometry::inverse)
        .def("__mul__", [](const Isometry& x, const Isometry& y) { return x * y; })
        .def("apply",
             [](const Isometry& m_, std::complex<double> z) {
                 ExtendedPoint w = apply(m_, pt(z));
                 return std::complex<double>(w.x, w.y);
             })
        .def("displacement",
             [](const Isometry& m_, std::complex<double> z) { return displacement(m_, pt(z)); })
        .def("translation_length",
             [](const Isometry& m_) {
                 IsometryClass cls = classify(m_);
                 return cls.translation_length ? *cls.translation_length : 0.0;
             })
        .def("type",
             [](const Isometry& m_) {
                 switch (classify(m_).type) {
                 case IsometryType::Identity: return "identity";
                 case IsometryType::Hyperbolic: return "hyperbolic";
                 case IsometryType::Parabolic: return "parabolic";
                 default: return "elliptic";
                 }
             })
        .def("__repr__", [](const Isometry& m_) { return to_string(m_); });

    m.def(
        "family_matrix",
        [](const std::string& q, int n) {
            return make_family_element(Rational::parse(q), n).matrix;
        },
        py::arg("q"), py::arg("n"), "the family element f_{q,n}");

    m.def(
        "bisector",
        [](const std::string& q, int n, bool inverse) {
            BisectorData bd = bisector_data(make_family_element(Rational::parse(q), n), inverse);
            py::dict d;
            d["center"] = bd.center;
            d["radius"] = bd.radius;
            d["extremities"] = py::make_tuple(bd.extremities[0], bd.extremities[1]);
            return d;
        },
        py::arg("q"), py::arg("n"), py::arg("inverse"),
        "perpendicular bisector of [i, f^(+/-1) i] as center/radius/extremities");

    m.def(
        "below_hypercycle",
        [](const std::string& q, int n, bool inverse) {
            return below_hypercycle_check(make_family_element(Rational::parse(q), n), inverse);
        },
        py::arg("q"), py::arg("n"), py::arg("inverse"));

    m.def(
        "construct_json",
        [](int count, int n_max) {
            return save_spec(select_generators(count, Enumeration::standard(), n_max));
        },
        py::arg("count"), py::arg("n_max") = kMaxFamilyIndex,
        "select generators and return the spec as JSON text");

    m.def(
        "verify_pingpong_json",
        [](const std::string& spec_text) {
            return report_json(verify_pingpong(parse_spec(spec_text))).dump();
        },
        py::arg("spec_json"));

    m.def(
        "injectivity_json",
        [](const std::string& spec_text, int word_len, int samples) {
            return report_json(injectivity_lower_bound_check(parse_spec(spec_text), word_len,
                                                             samples))
                .dump();
        },
        py::arg("spec_json"), py::arg("word_len") = 4, py::arg("samples") = 200);

    m.def(
        "witness_json",
        [](const std::string& spec_text, const std::string& q, int count, double tol) {
            return report_json(
                       orbit_closure_witness(parse_spec(spec_text), Rational::parse(q), count, tol))
                .dump();
        },
        py::arg("spec_json"), py::arg("q"), py::arg("count") = 3, py::arg("tol") = 1e-8);

    m.def(
        "inj_estimate",
        [](const std::string& spec_text, double t_min, double t_max, int points, int word_len,
           double window) {
            InjProfile prof = inj_profile(parse_spec(spec_text), t_min, t_max, points, word_len);
            return iinj_estimate(prof, window);
        },
        py::arg("spec_json"), py::arg("t_min") = 1.0, py::arg("t_max") = 1e5,
        py::arg("points") = 1000, py::arg("word_len") = 3, py::arg("window") = 2.0,
        "late-window lower estimate of liminf Inj along the vertical ray");

    m.def(
        "dirichlet_contains",
        [](const std::string& spec_text, std::complex<double> z) {
            return dirichlet_membership(parse_spec(spec_text), pt(z));
        },
        py::arg("spec_json"), py::arg("z"));

    m.def(
        "render_svg",
        [](const std::string& spec_text, const std::string& what, bool log_y) {
            return render_svg(scene_for_spec(parse_spec(spec_text), what, log_y));
        },
        py::arg("spec_json"), py::arg("what") = "all", py::arg("log_y") = false);
}
