#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bryant/certify.hpp"
#include "bryant/error_bounds.hpp"
#include "bryant/integrator.hpp"
#include "bryant/mesh.hpp"
#include "bryant/period.hpp"

namespace py = pybind11;

namespace {

using namespace bryant;

py::tuple periods(double a, double c, int n) {
    // floating integration, periods read off the endpoint matrices just as
    // the certification does
    const SurfaceParams par(a, c);
    const Matrix2c F1 = integrate_path_fp(path_alpha1(a), par, n);
    const Matrix2c F2 = integrate_path_fp(path_alpha2(a), par, n);
    return py::make_tuple(period_f1(F1), period_f2(F2));
}

py::tuple period_enclosures(double a, double c, int n) {
    // Rigorous enclosure of the discrete RK4 periods at one c (the
    // discretization error against the exact flow is budgeted separately).
    const SurfaceParams par(a, c);
    const MatrixEnclosure F1 = integrate_path(path_alpha1(a), par, n);
    const MatrixEnclosure F2 = integrate_path(path_alpha2(a), par, n);
    const PeriodValue f1 = period_f1(F1);
    const PeriodValue f2 = period_f2(F2);
    return py::make_tuple(py::make_tuple(f1.value.lo(), f1.value.hi()),
                          py::make_tuple(f2.value.lo(), f2.value.hi()));
}

std::string certify_json(double a, double c1, double c2, int n, int subintervals) {
    CertifyRequest req;
    req.a = a;
    req.c1 = c1;
    req.c2 = c2;
    req.n = n;
    req.subintervals = subintervals;
    return to_json(certify_existence(req));
}

double rk4_bound(double c, int n, double M, double M1, double M2, double M3) {
    return global_rk4_bound(c, n, CoefficientBounds{M, M1, M2, M3});
}

py::tuple sample_mesh(const std::string& preset_name, double lam, double a,
                      double c, int nu, int nv, double domain_scale) {
    WeierstrassPreset preset = preset_from_name(preset_name, lam, a, c);
    preset.domain_scale = domain_scale;
    const SurfaceMesh mesh = sample_surface(preset, GridSpec{nu, nv});
    return py::make_tuple(mesh.positions, mesh.quads);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rigorous periods and meshes for catenoid cousins";

    py::register_exception<bryant::Error>(m, "BryantError");

    m.def("periods", &periods, py::arg("a"), py::arg("c"), py::arg("n") = 1000,
          "floating-point period pair (f1, f2) at one c");
    m.def("period_enclosures", &period_enclosures, py::arg("a"), py::arg("c"),
          py::arg("n") = 1000,
          "interval period pair ((f1_lo, f1_hi), (f2_lo, f2_hi)) at one c");
    m.def("certify_json", &certify_json, py::arg("a") = 1.78,
          py::arg("c1") = 0.0495, py::arg("c2") = 0.0505, py::arg("n") = 4000,
          py::arg("subintervals") = 50,
          "run the full certification; returns the certificate as JSON text");
    m.def("zeta", &bryant::zeta, py::arg("c"), py::arg("n"), py::arg("M"),
          py::arg("M1"), py::arg("M2"), py::arg("M3"),
          "zeta polynomial, upward rounded");
    m.def("global_rk4_bound", &rk4_bound, py::arg("c"), py::arg("n"),
          py::arg("M"), py::arg("M1"), py::arg("M2"), py::arg("M3"),
          "entrywise RK4-vs-exact bound for one path");
    m.def("c_derivative_bound",
          static_cast<double (*)(double, double)>(&bryant::c_derivative_bound),
          py::arg("M"), py::arg("c"));
    m.def("solve_gauge_beta", &bryant::solve_gauge_beta, py::arg("f"));
    m.def("sample_mesh", &sample_mesh, py::arg("preset"), py::arg("lam") = 1.0,
          py::arg("a") = 1.78, py::arg("c") = 0.0, py::arg("nu") = 48,
          py::arg("nv") = 16, py::arg("domain_scale") = 1.0,
          "sample a preset surface; returns (positions, quads)");
    m.def("preset_names", &bryant::preset_names);
}
