#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "isoriemann/errors.hpp"
#include "isoriemann/exact_riemann.hpp"
#include "isoriemann/fv_solver.hpp"
#include "isoriemann/gas_model.hpp"
#include "isoriemann/pressureless.hpp"
#include "isoriemann/vanishing_pressure.hpp"
#include "isoriemann/wave_curves.hpp"

namespace py = pybind11;
using namespace isoriemann;

namespace {

// States cross the boundary as (rho, v) tuples.
GasState state(std::pair<double, double> s) { return {s.first, s.second}; }
std::pair<double, double> tuple(const GasState& s) { return {s.rho, s.v}; }
RiemannProblem problem(std::pair<double, double> left, std::pair<double, double> right) {
  return {state(left), state(right)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Isentropic Euler Riemann solver core";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
  py::register_exception<RegimeError>(m, "RegimeError", base.ptr());
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<StepError>(m, "StepError", numerical.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::class_<PolytropicEos>(m, "PolytropicEos")
      .def(py::init<double, double>(), py::arg("kappa"), py::arg("gamma"))
      .def_property_readonly("kappa", &PolytropicEos::kappa)
      .def_property_readonly("gamma", &PolytropicEos::gamma);

  m.def("pressure", &pressure, py::arg("eos"), py::arg("rho"));
  m.def("sound_speed", &sound_speed, py::arg("eos"), py::arg("rho"));
  m.def("left_curve_v",
        [](const PolytropicEos& eos, std::pair<double, double> left, double rho) {
          return left_curve_v(eos, state(left), rho);
        },
        py::arg("eos"), py::arg("left"), py::arg("rho_star"));
  m.def("right_curve_v",
        [](const PolytropicEos& eos, std::pair<double, double> right, double rho) {
          return right_curve_v(eos, state(right), rho);
        },
        py::arg("eos"), py::arg("right"), py::arg("rho_star"));

  py::class_<Wave>(m, "Wave")
      .def_readonly("family", &Wave::family)
      .def_property_readonly(
          "kind", [](const Wave& w) { return w.kind == WaveKind::Shock ? "Shock" : "Rarefaction"; })
      .def_readonly("speed_lo", &Wave::speed_lo)
      .def_readonly("speed_hi", &Wave::speed_hi);

  py::class_<ExactSolution>(m, "ExactSolution")
      .def_property_readonly("pattern",
                             [](const ExactSolution& s) { return std::string(to_string(s.pattern())); })
      .def_property_readonly("star",
                             [](const ExactSolution& s) -> std::optional<std::pair<double, double>> {
                               if (!s.star()) return std::nullopt;
                               return tuple(*s.star());
                             })
      .def_property_readonly("waves", &ExactSolution::waves)
      .def_property_readonly("kappa", [](const ExactSolution& s) { return s.eos().kappa(); })
      .def_property_readonly("gamma", [](const ExactSolution& s) { return s.eos().gamma(); });

  m.def("vacuum_check",
        [](const PolytropicEos& eos, std::pair<double, double> l, std::pair<double, double> r) {
          return vacuum_check(eos, problem(l, r));
        },
        py::arg("eos"), py::arg("left"), py::arg("right"));
  m.def("classify",
        [](const PolytropicEos& eos, std::pair<double, double> l, std::pair<double, double> r) {
          return std::string(to_string(classify(eos, problem(l, r))));
        },
        py::arg("eos"), py::arg("left"), py::arg("right"));
  m.def("solve",
        [](const PolytropicEos& eos, std::pair<double, double> l, std::pair<double, double> r) {
          return solve(eos, problem(l, r));
        },
        py::arg("eos"), py::arg("left"), py::arg("right"));
  m.def("sample", [](const ExactSolution& s, double xi) { return tuple(sample(s, xi)); },
        py::arg("solution"), py::arg("xi"));

  m.def("kappa_sr",
        [](std::pair<double, double> l, std::pair<double, double> r, double gamma) {
          return kappa_sr(problem(l, r), gamma);
        },
        py::arg("left"), py::arg("right"), py::arg("gamma"));
  m.def("kappa_rs",
        [](std::pair<double, double> l, std::pair<double, double> r, double gamma) {
          return kappa_rs(problem(l, r), gamma);
        },
        py::arg("left"), py::arg("right"), py::arg("gamma"));

  py::class_<CriticalKappa>(m, "CriticalKappa")
      .def_readonly("value", &CriticalKappa::value)
      .def_property_readonly(
          "kind", [](const CriticalKappa& c) { return c.kind == CriticalKind::SR ? "SR" : "RS"; });
  m.def("critical_kappa",
        [](std::pair<double, double> l, std::pair<double, double> r, double gamma) {
          return critical_kappa(problem(l, r), gamma);
        },
        py::arg("left"), py::arg("right"), py::arg("gamma"));
  m.def("regime",
        [](std::pair<double, double> l, std::pair<double, double> r, double gamma, double kappa) {
          return std::string(to_string(regime(problem(l, r), gamma, kappa)));
        },
        py::arg("left"), py::arg("right"), py::arg("gamma"), py::arg("kappa"));

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("kappa", &SweepRecord::kappa)
      .def_property_readonly("pattern",
                             [](const SweepRecord& r) { return std::string(to_string(r.pattern)); })
      .def_readonly("rho_star", &SweepRecord::rho_star)
      .def_readonly("v_star", &SweepRecord::v_star)
      .def_readonly("vacuum", &SweepRecord::vacuum)
      .def_readonly("error", &SweepRecord::error);
  m.def("sweep",
        [](std::pair<double, double> l, std::pair<double, double> r, double gamma,
           const std::vector<double>& schedule) { return sweep(problem(l, r), gamma, schedule); },
        py::arg("left"), py::arg("right"), py::arg("gamma"), py::arg("kappa_schedule"));
  m.def("geometric_schedule", &geometric_schedule, py::arg("kappa0"), py::arg("ratio") = 0.5,
        py::arg("kappa_min") = 1e-4);

  py::class_<DeltaShock>(m, "DeltaShock")
      .def_readonly("sigma", &DeltaShock::sigma)
      .def_readonly("weight_rate", &DeltaShock::weight_rate)
      .def_readonly("u_delta", &DeltaShock::u_delta);
  py::class_<PressurelessSolution>(m, "PressurelessSolution")
      .def_property_readonly(
          "pattern", [](const PressurelessSolution& s) { return std::string(to_string(s.tag)); })
      .def_readonly("delta", &PressurelessSolution::delta)
      .def_readonly("contact_speeds", &PressurelessSolution::contact_speeds);
  m.def("solve_pressureless",
        [](std::pair<double, double> l, std::pair<double, double> r) {
          return solve_pressureless(problem(l, r));
        },
        py::arg("left"), py::arg("right"));
  m.def("sample_pressureless",
        [](const PressurelessSolution& s, double xi) { return tuple(sample_pressureless(s, xi)); },
        py::arg("solution"), py::arg("xi"));

  py::class_<Grid1D>(m, "Grid1D")
      .def(py::init<double, double, int>(), py::arg("x_min"), py::arg("x_max"), py::arg("nx"))
      .def_property_readonly("x_min", &Grid1D::x_min)
      .def_property_readonly("x_max", &Grid1D::x_max)
      .def_property_readonly("nx", &Grid1D::nx)
      .def_property_readonly("dx", &Grid1D::dx)
      .def("centers", &Grid1D::centers);

  py::class_<SchemeConfig>(m, "SchemeConfig")
      .def_static("courant", &SchemeConfig::courant, py::arg("cfl"), py::arg("theta") = 1.0)
      .def_static("fixed_dt", &SchemeConfig::fixed_dt, py::arg("dt"), py::arg("theta") = 1.0)
      .def_readonly("dt", &SchemeConfig::dt)
      .def_readonly("cfl", &SchemeConfig::cfl)
      .def_readonly("theta", &SchemeConfig::theta);

  py::class_<FieldState>(m, "FieldState")
      .def_readonly("time", &FieldState::time)
      .def_readonly("rho", &FieldState::rho)
      .def_readonly("momentum", &FieldState::momentum)
      .def_property_readonly("steps", [](const FieldState& f) { return f.audit.steps; })
      .def("velocity", &FieldState::velocity, py::arg("vacuum_floor") = kDefaultVacuumFloor)
      .def("total_mass", &FieldState::total_mass, py::arg("grid"))
      .def("total_momentum", &FieldState::total_momentum, py::arg("grid"))
      .def("conservation_defect", [](const FieldState& f, const Grid1D& g) {
        const auto d = conservation_defect(f, g);
        return std::make_pair(d.mass, d.momentum);
      }, py::arg("grid"));

  m.def("run",
        [](const Grid1D& grid, std::pair<double, double> l, std::pair<double, double> r,
           const PolytropicEos& eos, const SchemeConfig& scheme, double t_final) {
          py::gil_scoped_release release;
          return run(grid, problem(l, r), eos, scheme, t_final);
        },
        py::arg("grid"), py::arg("left"), py::arg("right"), py::arg("eos"), py::arg("scheme"),
        py::arg("t_final"));
  m.def("sample_field", &sample_field, py::arg("grid"), py::arg("solution"), py::arg("t"));
  m.def("l1_error", &l1_error, py::arg("field"), py::arg("grid"), py::arg("solution"),
        py::arg("t"));
  m.def("delta_diagnostic", &delta_diagnostic, py::arg("field"), py::arg("grid"),
        py::arg("half_width"), py::arg("center"));
}
