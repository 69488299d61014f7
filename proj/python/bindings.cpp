#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracgrowth/calibration.hpp"
#include "fracgrowth/caputo.hpp"
#include "fracgrowth/growth_model.hpp"
#include "fracgrowth/invariant_surface.hpp"
#include "fracgrowth/io.hpp"
#include "fracgrowth/mittag_leffler.hpp"

namespace py = pybind11;
using namespace fracgrowth;

PYBIND11_MODULE(fracgrowth, m) {
  m.doc() = "Fractional growth dynamics and generalized Cobb-Douglas surfaces";

  py::class_<FracOrder>(m, "FracOrder")
      .def(py::init<double>(), py::arg("value"))
      .def_property_readonly("value", &FracOrder::value)
      .def("__repr__", [](const FracOrder& a) {
        return "FracOrder(" + format_double(a.value()) + ")";
      });
  py::implicitly_convertible<py::float_, FracOrder>();
  py::implicitly_convertible<py::int_, FracOrder>();

  py::enum_<MLBranch>(m, "MLBranch")
      .value("series", MLBranch::series)
      .value("asymptotic", MLBranch::asymptotic)
      .value("exact_exp", MLBranch::exact_exp);

  py::class_<MLEvalReport>(m, "MLEvalReport")
      .def_readonly("value", &MLEvalReport::value)
      .def_readonly("terms_used", &MLEvalReport::terms_used)
      .def_readonly("branch", &MLEvalReport::branch)
      .def_readonly("est_abs_error", &MLEvalReport::est_abs_error);

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<double, double, std::size_t>(), py::arg("t0"),
           py::arg("t_end"), py::arg("n_steps"))
      .def_static("from_points", &TimeGrid::from_points, py::arg("points"))
      .def_property_readonly("t0", &TimeGrid::t0)
      .def_property_readonly("t_end", &TimeGrid::t_end)
      .def_property_readonly("n_steps", &TimeGrid::n_steps)
      .def_property_readonly("points", &TimeGrid::points)
      .def_property_readonly("uniform", &TimeGrid::uniform)
      .def_property_readonly("step", &TimeGrid::step);

  py::class_<Trajectory>(m, "Trajectory")
      .def(py::init<TimeGrid, std::vector<double>>(), py::arg("grid"),
           py::arg("values"))
      .def_readonly("grid", &Trajectory::grid)
      .def_readonly("values", &Trajectory::values);

  py::class_<GrowthFactor>(m, "GrowthFactor")
      .def(py::init<double, double, FracOrder>(), py::arg("x0"), py::arg("b"),
           py::arg("alpha"))
      .def_readonly("x0", &GrowthFactor::x0)
      .def_readonly("b", &GrowthFactor::b)
      .def_readonly("alpha", &GrowthFactor::alpha);

  py::class_<EconomySpec>(m, "EconomySpec")
      .def(py::init<GrowthFactor, GrowthFactor, GrowthFactor, double>(),
           py::arg("labor"), py::arg("capital"), py::arg("output"),
           py::arg("theta"))
      .def_readonly("labor", &EconomySpec::labor)
      .def_readonly("capital", &EconomySpec::capital)
      .def_readonly("output", &EconomySpec::output)
      .def_readonly("theta", &EconomySpec::theta);

  py::class_<SurfacePoint>(m, "SurfacePoint")
      .def_readonly("L", &SurfacePoint::L)
      .def_readonly("K", &SurfacePoint::K)
      .def_readonly("Y", &SurfacePoint::Y);

  py::class_<ClassicalParams>(m, "ClassicalParams")
      .def_readonly("A", &ClassicalParams::A)
      .def_readonly("beta_l", &ClassicalParams::beta_l)
      .def_readonly("beta_k", &ClassicalParams::beta_k);

  py::class_<CrsTheta>(m, "CrsTheta")
      .def_readonly("value", &CrsTheta::value)
      .def_readonly("in_unit_interval", &CrsTheta::in_unit_interval);

  py::class_<Bounds>(m, "Bounds")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &Bounds::lo)
      .def_readonly("hi", &Bounds::hi);

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("factor", &FitResult::factor)
      .def_readonly("sse", &FitResult::sse)
      .def_readonly("n_evals", &FitResult::n_evals)
      .def_readonly("converged", &FitResult::converged);

  py::class_<EconomyFit>(m, "EconomyFit")
      .def_readonly("spec", &EconomyFit::spec)
      .def_readonly("labor", &EconomyFit::labor)
      .def_readonly("capital", &EconomyFit::capital)
      .def_readonly("output", &EconomyFit::output)
      .def_readonly("theta_defaulted", &EconomyFit::theta_defaulted);

  m.def("ml_eval", &ml_eval, py::arg("alpha"), py::arg("x"));
  m.def("ml_eval_report", &ml_eval_report, py::arg("alpha"), py::arg("x"));
  m.def("ml_eval2", &ml_eval2, py::arg("alpha"), py::arg("beta"),
        py::arg("x"));
  m.def("ml_derivative", &ml_derivative, py::arg("alpha"), py::arg("x"));
  m.def("ml_inverse", &ml_inverse, py::arg("alpha"), py::arg("y"));

  m.def("caputo_l1", &caputo_l1, py::arg("trajectory"), py::arg("alpha"),
        py::arg("index"));
  m.def("solve_fode_abm", &solve_fode_abm, py::arg("b"), py::arg("alpha"),
        py::arg("x0"), py::arg("grid"));
  m.def("verify_eigenproperty", &verify_eigenproperty, py::arg("b"),
        py::arg("alpha"), py::arg("grid"));

  m.def("level_at", &level_at, py::arg("factor"), py::arg("t"));
  m.def("sample_trajectory", &sample_trajectory, py::arg("factor"),
        py::arg("grid"));
  m.def("time_from_level", &time_from_level, py::arg("factor"), py::arg("x"));
  m.def("semigroup_defect", &semigroup_defect, py::arg("alpha"), py::arg("b"),
        py::arg("t"), py::arg("s"));

  m.def("y_from_labor", &y_from_labor, py::arg("econ"), py::arg("L"));
  m.def("y_from_capital", &y_from_capital, py::arg("econ"), py::arg("K"));
  m.def("y_composite", &y_composite, py::arg("econ"), py::arg("L"),
        py::arg("K"));
  m.def("invariant_residuals", &invariant_residuals, py::arg("econ"),
        py::arg("t"));
  m.def("classical_cd", &classical_cd, py::arg("A"), py::arg("beta_l"),
        py::arg("beta_k"), py::arg("L"), py::arg("K"));
  m.def("classical_limit_params", &classical_limit_params, py::arg("econ"));
  m.def("crs_theta", &crs_theta, py::arg("b1"), py::arg("b2"), py::arg("b3"));
  m.def("limit_convergence_probe", &limit_convergence_probe, py::arg("econ"),
        py::arg("L"), py::arg("K"), py::arg("eps_list"));
  m.def("surface_sample", &surface_sample, py::arg("econ"), py::arg("grid"));

  m.def("fit_factor", &fit_factor, py::arg("series"), py::arg("alpha_bounds"),
        py::arg("b_bounds"));
  m.def("fit_economy", &fit_economy, py::arg("labor"), py::arg("capital"),
        py::arg("output"), py::arg("alpha_bounds"), py::arg("b_bounds"));

  m.def("format_double", &format_double, py::arg("value"));
}
