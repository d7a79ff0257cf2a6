// pybind11 surface of dirosc_core. Long-double representation matrices are
// narrowed to double on the way out; every residual was computed at the
// wider precision before the cast.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirosc/coherent.hpp"
#include "dirosc/defect.hpp"
#include "dirosc/radial.hpp"
#include "dirosc/su11.hpp"
#include "dirosc/verify.hpp"

namespace py = pybind11;
using namespace dirosc;

namespace {

Eigen::MatrixXd narrow(const MatrixXld& m) { return m.cast<double>(); }

}  // namespace

PYBIND11_MODULE(_dirosc, m) {
  m.doc() = "Dirac oscillator on line defects: spectra, su(1,1) algebra, "
            "radial modes, Perelomov coherent states";

  // ---- defect parameters and spectrum ----

  py::enum_<DefectKind>(m, "DefectKind")
      .value("CosmicString", DefectKind::CosmicString)
      .value("MagneticCosmicString", DefectKind::MagneticCosmicString)
      .value("CosmicDislocation", DefectKind::CosmicDislocation);

  py::enum_<Component>(m, "Component")
      .value("Upper", Component::Upper)
      .value("Lower", Component::Lower);

  py::enum_<ParamSign>(m, "ParamSign")
      .value("Minus", ParamSign::Minus)
      .value("Plus", ParamSign::Plus);

  py::class_<DefectConfig>(m, "DefectConfig")
      .def(py::init<DefectKind, double, double, double, double, double,
                    double>(),
           py::arg("kind"), py::arg("alpha"), py::arg("mass"),
           py::arg("omega"), py::arg("flux_ratio") = 0.0,
           py::arg("torsion") = 0.0, py::arg("hbar") = 1.0)
      .def_readonly("kind", &DefectConfig::kind)
      .def_readonly("alpha", &DefectConfig::alpha)
      .def_readonly("mass", &DefectConfig::mass)
      .def_readonly("omega", &DefectConfig::omega)
      .def_readonly("flux_ratio", &DefectConfig::flux_ratio)
      .def_readonly("torsion", &DefectConfig::torsion)
      .def_readonly("hbar", &DefectConfig::hbar)
      .def("m_omega", &DefectConfig::m_omega);

  py::class_<QuantumNumbers>(m, "QuantumNumbers")
      .def(py::init<int, int, double, Component>(), py::arg("n_r"),
           py::arg("l"), py::arg("k_z") = 0.0,
           py::arg("component") = Component::Upper)
      .def_readonly("n_r", &QuantumNumbers::n_r)
      .def_readonly("l", &QuantumNumbers::l)
      .def_readonly("k_z", &QuantumNumbers::k_z)
      .def_readonly("component", &QuantumNumbers::component);

  m.def("angular_parameter", &angular_parameter, py::arg("cfg"),
        py::arg("qn"), py::arg("sign"));
  m.def("centrifugal_parameter", &centrifugal_parameter, py::arg("cfg"),
        py::arg("qn"));
  m.def("bargmann_index", &bargmann_index, py::arg("lambda_"));
  m.def("energy_squared", &energy_squared, py::arg("cfg"), py::arg("qn"));
  m.def(
      "energy_branches",
      [](double e_squared) -> py::object {
        const auto branches = energy_branches(e_squared);
        if (!branches) return py::none();
        return py::make_tuple(branches->particle, branches->antiparticle);
      },
      py::arg("e_squared"),
      "(E_plus, E_minus), or None when e_squared < 0");
  m.def("gamma_constant", &gamma_constant, py::arg("cfg"), py::arg("qn"),
        py::arg("e_squared"));
  m.def(
      "factorization_constants",
      [](double m_omega, double gamma_plus, double lambda_minus) {
        const FactorizationConstants f =
            factorization_constants(m_omega, gamma_plus, lambda_minus);
        return py::make_tuple(f.mu, f.delta, f.epsilon, f.lambda, f.sigma);
      },
      py::arg("m_omega"), py::arg("gamma_plus"), py::arg("lambda_minus"),
      "(mu, delta, epsilon, lambda, sigma)");

  // ---- su(1,1) matrix algebra ----

  py::class_<Su11Rep>(m, "Su11Rep")
      .def_readonly("k", &Su11Rep::k)
      .def_readonly("dim", &Su11Rep::dim)
      .def_property_readonly(
          "k0", [](const Su11Rep& rep) { return narrow(rep.k0); })
      .def_property_readonly(
          "kp", [](const Su11Rep& rep) { return narrow(rep.kp); })
      .def_property_readonly(
          "km", [](const Su11Rep& rep) { return narrow(rep.km); });

  m.def("build_rep", &build_rep, py::arg("k"), py::arg("dim"));
  m.def(
      "commutator_residuals",
      [](const Su11Rep& rep) {
        const CommutatorResiduals r = commutator_residuals(rep);
        return py::make_tuple(r.k0_ladder, r.ladder_pair);
      },
      py::arg("rep"));
  m.def("casimir_eigenvalue_check", &casimir_eigenvalue_check, py::arg("rep"));
  m.def("reliable_columns", &reliable_columns, py::arg("xi"), py::arg("k"),
        py::arg("dim"));

  py::class_<CoherentParam>(m, "CoherentParam")
      .def(py::init<std::complex<double>>(), py::arg("xi"))
      .def_readonly("xi", &CoherentParam::xi)
      .def("zeta", &CoherentParam::zeta)
      .def("eta", &CoherentParam::eta);

  py::class_<Displacement>(m, "Displacement")
      .def_readonly("matrix", &Displacement::matrix)
      .def_readonly("reliable_cols", &Displacement::reliable_cols)
      .def_readonly("column_norm_error", &Displacement::column_norm_error)
      .def_readonly("truncation_ok", &Displacement::truncation_ok);

  m.def("displacement_direct", &displacement_direct, py::arg("rep"),
        py::arg("param"));
  m.def("displacement_bch", &displacement_bch, py::arg("rep"),
        py::arg("param"));
  m.def("perelomov_coefficients", &perelomov_coefficients, py::arg("k"),
        py::arg("xi"), py::arg("n_max"));

  // ---- radial modes ----

  py::enum_<RadialForm>(m, "RadialForm")
      .value("F", RadialForm::F)
      .value("Chi", RadialForm::Chi);

  py::class_<SturmianMode>(m, "SturmianMode")
      .def(py::init<int, double, double, RadialForm>(), py::arg("n"),
           py::arg("k"), py::arg("m_omega"), py::arg("form") = RadialForm::F)
      .def_readonly("n", &SturmianMode::n)
      .def_readonly("k", &SturmianMode::k)
      .def_readonly("m_omega", &SturmianMode::m_omega)
      .def_readonly("form", &SturmianMode::form);

  m.def("mode_from", &mode_from, py::arg("cfg"), py::arg("qn"),
        py::arg("form") = RadialForm::F);
  m.def("sturmian_eval", &sturmian_eval, py::arg("mode"), py::arg("rho"));
  m.def(
      "overlap",
      [](const SturmianMode& a, const SturmianMode& b) {
        return overlap(a, b);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "ode_residual",
      [](const DefectConfig& cfg, const QuantumNumbers& qn,
         const std::vector<double>& grid) {
        return ode_residual(cfg, qn, grid);
      },
      py::arg("cfg"), py::arg("qn"), py::arg("rho_grid"));
  m.def(
      "d3_eigenvalue_check",
      [](const SturmianMode& mode, const std::vector<double>& grid) {
        return d3_eigenvalue_check(mode, grid);
      },
      py::arg("mode"), py::arg("rho_grid"));
  m.def(
      "ladder_action_check",
      [](const SturmianMode& mode) {
        const LadderCoefficients c = ladder_action_check(mode);
        return py::make_tuple(c.up, c.down);
      },
      py::arg("mode"), "(coeff_up, coeff_down)");
  m.def("default_rho_grid", &default_rho_grid, py::arg("m_omega"),
        py::arg("points") = 160);

  // ---- coherent states ----

  m.def("coherent_closed", &coherent_closed, py::arg("xi"), py::arg("k"),
        py::arg("m_omega"), py::arg("rho"));
  m.def(
      "coherent_series",
      [](std::complex<double> xi, double k, double m_omega, double rho,
         double tail_tol, int max_terms) {
        const CoherentSeriesResult r =
            coherent_series(xi, k, m_omega, rho, tail_tol, max_terms);
        return py::make_tuple(r.value, r.terms, r.converged);
      },
      py::arg("xi"), py::arg("k"), py::arg("m_omega"), py::arg("rho"),
      py::arg("tail_tol") = 1e-16, py::arg("max_terms") = 100000,
      "(value, terms, converged)");
  m.def(
      "coherent_evolved",
      [](std::complex<double> xi, double k, double m_omega, double rho,
         double tau, double hbar) {
        const EvolvedCoherentState ev =
            coherent_evolved(xi, k, m_omega, rho, tau, hbar);
        return py::make_tuple(ev.value, ev.xi_tau, ev.global_phase);
      },
      py::arg("xi"), py::arg("k"), py::arg("m_omega"), py::arg("rho"),
      py::arg("tau"), py::arg("hbar") = 1.0,
      "(value, xi_tau, global_phase)");
  m.def("coherent_overlap", &coherent_overlap, py::arg("xi1"), py::arg("xi2"),
        py::arg("k"));
  m.def("coherent_norm", &coherent_norm, py::arg("xi"), py::arg("k"),
        py::arg("m_omega"));
  m.def("coherent_period", &coherent_period, py::arg("m_omega"),
        py::arg("hbar") = 1.0);

  // ---- verification ----

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("residual", &CheckResult::residual)
      .def_readonly("threshold", &CheckResult::threshold)
      .def_readonly("require_above", &CheckResult::require_above)
      .def_readonly("pass_", &CheckResult::pass);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("checks", &VerificationReport::checks)
      .def("all_pass", &VerificationReport::all_pass);

  m.def(
      "run_verification",
      [](unsigned long seed, double casimir_injection) {
        VerifyOptions options;
        options.seed = seed;
        options.casimir_injection = casimir_injection;
        return run_verification(options);
      },
      py::arg("seed") = 12345, py::arg("casimir_injection") = 0.0);
  m.def("render_report_csv", &render_report_csv, py::arg("report"));
  m.def("render_report_json", &render_report_json, py::arg("report"));
}
