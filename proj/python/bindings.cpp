#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pagegeom/connection.hpp"
#include "pagegeom/functionals.hpp"
#include "pagegeom/geometry.hpp"
#include "pagegeom/moduli.hpp"
#include "pagegeom/profiles.hpp"
#include "pagegeom/report.hpp"
#include "pagegeom/submanifolds.hpp"

namespace py = pybind11;
using namespace pagegeom;

namespace {

template <std::size_t N>
std::vector<std::vector<double>> to_nested(const Mat<double, N>& m) {
  std::vector<std::vector<double>> out(N, std::vector<double>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i][j] = m[i][j];
  return out;
}

ChartPoint point(const std::array<double, 4>& x) { return {x[0], x[1], x[2], x[3]}; }

}  // namespace

PYBIND11_MODULE(_pagegeom, mod) {
  mod.doc() = "Geometry of the Page metric";
  mod.attr("__version__") = std::string(kVersion);

  mod.def("page_quartic", &page_quartic, py::arg("x"));
  mod.def("solve_page_constant", &solve_page_constant);

  py::enum_<FiberNormalization>(mod, "FiberNormalization")
      .value("einstein", FiberNormalization::einstein)
      .value("printed", FiberNormalization::printed);

  py::class_<ProfileSet>(mod, "ProfileSet")
      .def(py::init<double>(), py::arg("a"))
      .def_static("page", &ProfileSet::page)
      .def_property_readonly("a", &ProfileSet::a)
      .def_property_readonly("C", &ProfileSet::C)
      .def("V", [](const ProfileSet& ps, double r) { return ps.V(r); }, py::arg("r"))
      .def("f", [](const ProfileSet& ps, double r) { return ps.f(r); }, py::arg("r"))
      .def("V_dot", &ProfileSet::V_dot)
      .def("V_ddot", &ProfileSet::V_ddot)
      .def("f_dot", &ProfileSet::f_dot)
      .def("f_ddot", &ProfileSet::f_ddot);

  py::class_<PageMetric>(mod, "PageMetric")
      .def(py::init<ProfileSet, FiberNormalization>(), py::arg("profiles"),
           py::arg("normalization") = FiberNormalization::einstein)
      .def_static("page", &PageMetric::page, py::arg("normalization") = FiberNormalization::einstein)
      .def_property_readonly("profiles", &PageMetric::profiles)
      .def_property_readonly("fiber_constant", &PageMetric::fiber_constant)
      .def("metric", [](const PageMetric& m, const Vec<double, 4>& x) { return to_nested(m.metric(x)); }, py::arg("x"))
      .def("coframe", [](const PageMetric& m, const Vec<double, 4>& x) { return to_nested(m.coframe(x)); }, py::arg("x"));

  py::class_<CurvatureAtPoint>(mod, "CurvatureAtPoint")
      .def_readonly("scalar", &CurvatureAtPoint::scalar)
      .def_property_readonly("ricci", [](const CurvatureAtPoint& k) { return to_nested(k.ricci); })
      .def_property_readonly("riemann", [](const CurvatureAtPoint& k) { return k.riemann; })
      .def("sectional", &CurvatureAtPoint::sectional)
      .def("einstein_residual", &CurvatureAtPoint::einstein_residual);
  mod.def("curvature", [](const PageMetric& m, const std::array<double, 4>& x) { return curvature(m, point(x)); },
          py::arg("metric"), py::arg("x"));
  mod.def("connection", [](const PageMetric& m, const std::array<double, 4>& x) {
    return solve_connection(commutation_coefficients(m, point(x))).gamma;
  }, py::arg("metric"), py::arg("x"));

  py::enum_<FamilyId> fam(mod, "FamilyId");
  for (FamilyId id : kAllFamilies) fam.value(std::string(to_string(id)).c_str(), id);

  py::class_<FixedDefaults>(mod, "FixedDefaults")
      .def(py::init([](double r0, double phi0, double psi0, double theta0) {
             return FixedDefaults{r0, phi0, psi0, theta0};
           }),
           py::arg("r0") = FixedDefaults{}.r0, py::arg("phi0") = 0.0, py::arg("psi0") = 0.0,
           py::arg("theta0") = FixedDefaults{}.theta0)
      .def_readwrite("r0", &FixedDefaults::r0)
      .def_readwrite("phi0", &FixedDefaults::phi0)
      .def_readwrite("psi0", &FixedDefaults::psi0)
      .def_readwrite("theta0", &FixedDefaults::theta0);

  py::class_<SubmanifoldSpec>(mod, "SubmanifoldSpec")
      .def_property_readonly("name", &SubmanifoldSpec::name)
      .def_property_readonly("dim", &SubmanifoldSpec::dim)
      .def_readonly("fixed", &SubmanifoldSpec::fixed)
      .def_readonly("free", &SubmanifoldSpec::free)
      .def_readonly("tangent_frame", &SubmanifoldSpec::tangent_frame)
      .def_readonly("topology", &SubmanifoldSpec::topology);
  mod.def("family", [](const std::string& id, const FixedDefaults& d) { return family(parse_family(id), d); },
          py::arg("id"), py::arg("fixed") = FixedDefaults{});

  py::class_<TotallyGeodesicResult>(mod, "TotallyGeodesicResult")
      .def_readonly("passed", &TotallyGeodesicResult::pass)
      .def_readonly("max_ii", &TotallyGeodesicResult::max_ii)
      .def_readonly("samples", &TotallyGeodesicResult::samples)
      .def_readonly("worst_point", &TotallyGeodesicResult::worst_point);
  mod.def("is_totally_geodesic_at", &is_totally_geodesic_at, py::arg("metric"), py::arg("spec"),
          py::arg("grid_size") = 12, py::arg("tol") = 1e-8);
  mod.def("second_fundamental_form_max", [](const PageMetric& m, const SubmanifoldSpec& s, const std::vector<double>& q) {
    return second_fundamental_form(m, s, q).max_abs();
  }, py::arg("metric"), py::arg("spec"), py::arg("q"));

  py::class_<InducedCurvature>(mod, "InducedCurvature")
      .def_readonly("dim", &InducedCurvature::dim)
      .def_readonly("labels", &InducedCurvature::labels)
      .def_readonly("scalar", &InducedCurvature::scalar)
      .def("R", &InducedCurvature::R)
      .def("gaussian", &InducedCurvature::gaussian);
  mod.def("induced_curvature", &induced_curvature, py::arg("metric"), py::arg("spec"), py::arg("q"));

  py::class_<GaussBonnetResult>(mod, "GaussBonnetResult")
      .def_readonly("integral", &GaussBonnetResult::integral)
      .def_readonly("error_estimate", &GaussBonnetResult::error_estimate)
      .def_readonly("area", &GaussBonnetResult::area)
      .def_readonly("method", &GaussBonnetResult::method);
  mod.def("gauss_bonnet", &gauss_bonnet, py::arg("metric"), py::arg("spec"), py::arg("tol") = 1e-10);

  py::class_<TorusLattice>(mod, "TorusLattice")
      .def_readonly("L_psi", &TorusLattice::L_psi)
      .def_readonly("L_phi", &TorusLattice::L_phi)
      .def_readonly("L_theta", &TorusLattice::L_theta)
      .def_readonly("cos_angle", &TorusLattice::cos_angle)
      .def_readonly("cos_angle_printed", &TorusLattice::cos_angle_printed)
      .def_readonly("R_paper", &TorusLattice::R_paper)
      .def_readonly("conformal_coefficient", &TorusLattice::conformal_coefficient)
      .def_readonly("tau", &TorusLattice::tau);
  mod.def("torus_invariants_S1", &torus_invariants_S1, py::arg("metric"), py::arg("r0"), py::arg("theta0"));
  mod.def("torus_invariants_S3", &torus_invariants_S3, py::arg("metric"), py::arg("r0"));
  mod.def("reduce_to_fundamental_domain",
          [](std::complex<double> z) { return reduce_to_fundamental_domain(z).tau; }, py::arg("tau"));

  mod.def("page_volume", [](const ProfileSet& ps, const std::string& method) {
    if (method == "closed") return page_volume(ps, VolumeMethod::closed);
    if (method == "quadrature") return page_volume(ps, VolumeMethod::quadrature);
    throw py::value_error("method must be 'closed' or 'quadrature'");
  }, py::arg("profiles"), py::arg("method") = "closed");
  mod.def("einstein_hilbert_page", [](const ProfileSet& ps) { return einstein_hilbert_page(ps).from_volume; },
          py::arg("profiles"));
  mod.def("reference_bounds", [] {
    const auto b = reference_bounds();
    return std::make_pair(b.aubin, b.conjectured);
  });
  mod.def("otoba_action", &otoba_action, py::arg("R"));

  mod.def("run_suite_json", [](const std::string& suite, const PageMetric& m, std::size_t samples) {
    SuiteOptions opt;
    opt.samples = samples;
    return to_json(run_suite(suite, m, opt), m).dump();
  }, py::arg("suite"), py::arg("metric"), py::arg("samples") = 500);
}
