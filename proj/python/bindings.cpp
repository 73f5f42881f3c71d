#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cusp/classes.hpp"
#include "cusp/domain.hpp"
#include "cusp/inclusion.hpp"
#include "cusp/radii.hpp"
#include "cusp/series.hpp"
#include "cusp/verification.hpp"

namespace py = pybind11;
using namespace cusp;
using cls::ComparatorClass;
using geom::EpicycloidDomain;

namespace {

const char* verdict_str(geom::Verdict v) {
    switch (v) {
        case geom::Verdict::Inside: return "inside";
        case geom::Verdict::Outside: return "outside";
        default: return "boundary";
    }
}

ComparatorClass make_class(const std::string& name, py::kwargs kw) {
    auto arg = [&](const char* key) { return kw[key].cast<double>(); };
    if (name == "m-beta") return ComparatorClass::m_beta(arg("beta"));
    if (name == "bs-alpha") return ComparatorClass::bs(arg("alpha"));
    if (name == "w") return ComparatorClass::w();
    if (name == "f1") return ComparatorClass::f1();
    if (name == "f2") return ComparatorClass::f2();
    if (name == "sl-alpha") return ComparatorClass::sl_alpha(arg("alpha"));
    if (name == "cassinian") return ComparatorClass::cassinian(arg("c"));
    if (name == "alpha-exp") return ComparatorClass::alpha_exp(arg("alpha"));
    if (name == "el") return ComparatorClass::el(arg("alpha"));
    if (name == "cardioid") return ComparatorClass::cardioid();
    if (name == "lune") return ComparatorClass::lune();
    if (name == "rational-r") return ComparatorClass::rational_r();
    if (name == "rl") return ComparatorClass::rl();
    if (name == "lim") return ComparatorClass::lim();
    if (name == "z-exp") return ComparatorClass::z_exp();
    if (name == "car") return ComparatorClass::car();
    if (name == "sin") return ComparatorClass::sine();
    if (name == "nephroid") return ComparatorClass::nephroid();
    if (name == "janowski") return ComparatorClass::janowski(arg("A"), arg("B"));
    if (name == "order-alpha") return ComparatorClass::order_alpha(arg("alpha"));
    if (name == "sg") return ComparatorClass::sg();
    if (name == "cos") return ComparatorClass::cosine();
    if (name == "cosh") return ComparatorClass::hyp_cosine();
    if (name == "arc-sinh") return ComparatorClass::arc_sinh();
    if (name == "snl") return ComparatorClass::snl(kw["n"].cast<int>());
    throw py::value_error("unknown comparator class: " + name);
}

py::dict radius_dict(const radii::RadiusResult& r) {
    py::dict d;
    d["direction"] = r.direction == radii::Direction::Forward ? "forward" : "backward";
    d["class"] = r.class_name;
    d["n"] = r.n;
    d["closed_form"] = r.closed_form;
    if (r.closed_form_complex) d["closed_form_complex"] = *r.closed_form_complex;
    if (r.oracle) d["oracle"] = *r.oracle;
    if (r.agree) d["agree"] = *r.agree;
    if (!r.errata_note.empty()) d["errata_note"] = r.errata_note;
    return d;
}

radii::RadiusOptions make_opts(bool with_oracle, int curve_samples, int boundary_samples,
                               double tol, double agree_tol) {
    radii::RadiusOptions o;
    o.with_oracle = with_oracle;
    o.oracle.curve_samples = curve_samples;
    o.oracle.boundary_samples = boundary_samples;
    o.oracle.tol = tol;
    o.agree_tol = agree_tol;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "radius calculus for the n-cusp epicycloid starlike class";

    py::class_<geom::BoundaryPoint>(m, "BoundaryPoint")
        .def_readonly("t", &geom::BoundaryPoint::t)
        .def_readonly("x", &geom::BoundaryPoint::x)
        .def_readonly("y", &geom::BoundaryPoint::y);

    py::class_<EpicycloidDomain>(m, "EpicycloidDomain")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &EpicycloidDomain::n)
        .def("phi", &EpicycloidDomain::phi, py::arg("z"))
        .def("boundary", &EpicycloidDomain::boundary, py::arg("t"))
        .def("cusp_angles",
             [](const EpicycloidDomain& d) { return d.cusps().angles; })
        .def_property_readonly("primary_cusp",
             [](const EpicycloidDomain& d) { return d.cusps().primary_cusp; })
        .def("sigma",
             [](const EpicycloidDomain& d, double a, double t) {
                 return d.sigma({a, d.n()}, t);
             }, py::arg("a"), py::arg("t"))
        .def("inscribed_radius",
             [](const EpicycloidDomain& d, double a) { return d.inscribed_radius({a, d.n()}); },
             py::arg("a"))
        .def("a3_threshold", &EpicycloidDomain::a3_threshold)
        .def("min_real_part", &EpicycloidDomain::min_real_part)
        .def("max_argument", &EpicycloidDomain::max_argument)
        .def("contains",
             [](const EpicycloidDomain& d, std::complex<double> w, int samples) {
                 return verdict_str(d.contains_point(w, samples));
             }, py::arg("w"), py::arg("samples") = 8192)
        .def("hausdorff_gap_to_unit_circle", &EpicycloidDomain::hausdorff_gap_to_unit_circle,
             py::arg("samples") = 100000);

    py::class_<ComparatorClass>(m, "ComparatorClass")
        .def_property_readonly("name", &ComparatorClass::name)
        .def_property_readonly("display_name", &ComparatorClass::display_name)
        .def_property_readonly("has_phi", &ComparatorClass::has_phi)
        .def("phi", &ComparatorClass::phi_of, py::arg("z"))
        .def("membership",
             [](const ComparatorClass& c, std::complex<double> w) {
                 return verdict_str(c.membership(w));
             }, py::arg("w"))
        .def("membership_margin", &ComparatorClass::membership_margin, py::arg("w"))
        .def("disk_threshold", [](const ComparatorClass& c) {
            const auto t = c.disk_threshold();
            return py::make_tuple(
                t.kind == ComparatorClass::DiskThreshold::Kind::Symmetric ? "symmetric"
                                                                          : "left-gap",
                t.value);
        });

    m.def("comparator", &make_class, py::arg("name"),
          "Build a comparator class by its identifier (parameters as keywords).");

    m.def("forward_radius",
          [](const ComparatorClass& c, int n, bool with_oracle, int curve_samples,
             int boundary_samples, double tol, double agree_tol) {
              EpicycloidDomain d(n);
              return radius_dict(radii::forward_radius(
                  c, d, make_opts(with_oracle, curve_samples, boundary_samples, tol, agree_tol)));
          },
          py::arg("cls"), py::arg("n"), py::arg("with_oracle") = false,
          py::arg("curve_samples") = 2048, py::arg("boundary_samples") = 8192,
          py::arg("tol") = 1e-5, py::arg("agree_tol") = 1e-4);

    m.def("backward_radius",
          [](const ComparatorClass& c, int n, bool with_oracle, int curve_samples,
             int boundary_samples, double tol, double agree_tol) {
              EpicycloidDomain d(n);
              return radius_dict(radii::backward_radius(
                  c, d, make_opts(with_oracle, curve_samples, boundary_samples, tol, agree_tol)));
          },
          py::arg("cls"), py::arg("n"), py::arg("with_oracle") = false,
          py::arg("curve_samples") = 2048, py::arg("boundary_samples") = 8192,
          py::arg("tol") = 1e-5, py::arg("agree_tol") = 1e-4);

    m.def("forward_oracle",
          [](const ComparatorClass& c, int n, int curve_samples, int boundary_samples, double tol) {
              EpicycloidDomain d(n);
              radii::OracleOptions o{curve_samples, boundary_samples, tol};
              return radii::forward_oracle(c, d, o);
          },
          py::arg("cls"), py::arg("n"), py::arg("curve_samples") = 2048,
          py::arg("boundary_samples") = 8192, py::arg("tol") = 1e-5);

    m.def("backward_oracle",
          [](const ComparatorClass& c, int n, int curve_samples, double tol) {
              EpicycloidDomain d(n);
              radii::OracleOptions o;
              o.curve_samples = curve_samples;
              o.tol = tol;
              return radii::backward_oracle(c, d, o);
          },
          py::arg("cls"), py::arg("n"), py::arg("curve_samples") = 2048, py::arg("tol") = 1e-5);

    m.def("strohhacker_bound",
          [](int n) { return radii::strohhacker_bound(EpicycloidDomain(n)); }, py::arg("n"));

    m.def("limit_radius", &radii::limit_radius, py::arg("cls"));

    m.def("inclusion_constants", [](int n) {
        const auto r = inclusion::inclusion_constants(EpicycloidDomain(n));
        py::dict d;
        d["n"] = r.n;
        d["alpha0"] = r.alpha0;
        d["beta0"] = r.beta0;
        d["sl_alpha_min"] = r.sl_alpha_min;
        d["cassinian_c_max"] = r.cassinian_c_max;
        d["janowski_uniform_alpha_min"] = r.janowski_uniform_alpha_min;
        d["alpha_alpha_max"] = r.alpha_alpha_max;
        d["m_beta_min"] = r.m_beta_min;
        return d;
    }, py::arg("n"));

    m.def("janowski_inclusion",
          [](int n, double A, double B) {
              return inclusion::janowski_inclusion(EpicycloidDomain(n), A, B);
          },
          py::arg("n"), py::arg("A"), py::arg("B"));

    m.def("coefficient_bounds", [](int n) {
        const auto r = series::coefficient_bounds(n);
        py::dict d;
        d["n"] = r.n;
        d["bounds"] = r.bounds;
        d["bounds_exact"] = r.bounds_exact;
        d["extremal_values"] = r.extremal_values;
        d["extremal_exact"] = r.extremal_exact;
        d["agreement"] = r.agreement;
        d["errata"] = r.errata;
        return d;
    }, py::arg("n"));

    m.def("extremal_coefficients", [](int n, int i, int K) {
        const auto f = series::extremal_series<double>(n, i, K);
        return f.coeffs;
    }, py::arg("n"), py::arg("i"), py::arg("K") = 12);

    m.def("lambert_w0", [](double x) { return num::lambert_w0(x); }, py::arg("x"));
    m.def("lambert_w0_complex",
          [](std::complex<double> x) { return num::lambert_w0(x); }, py::arg("x"));

    m.def("table2_value", &verify::table2_value, py::arg("row"), py::arg("n"),
          "Published backward radius for row 0..7 and n in {4, 6, 8}.");
}
