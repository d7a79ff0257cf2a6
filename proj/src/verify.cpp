#include "dirosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <vector>

#include "dirosc/coherent.hpp"
#include "dirosc/defect.hpp"
#include "dirosc/radial.hpp"
#include "dirosc/special.hpp"
#include "dirosc/su11.hpp"
#include "dirosc/textio.hpp"

namespace dirosc {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

// Pinned verification matrix. Values are fixed so that reports are
// reproducible byte for byte; the sampled identity check is the only
// seed-dependent block.
constexpr double kBargmannGrid[] = {0.5, 1.0, 1.375, 2.25};
constexpr int kDimGrid[] = {8, 32, 128};
constexpr double kXiRadii[] = {0.3, 0.6, 0.9};
constexpr double kXiPhases[] = {0.0, 2.0943951023931953, -1.7};
constexpr double kMOmegaGrid[] = {0.5, 1.0, 2.0};

std::vector<DefectConfig> pinned_configs() {
  return {
      DefectConfig(DefectKind::CosmicString, 1.0, 1.0, 1.0),
      DefectConfig(DefectKind::CosmicString, 0.8, 1.0, 1.0),
      DefectConfig(DefectKind::MagneticCosmicString, 0.5, 1.0, 1.0, 0.5),
      DefectConfig(DefectKind::CosmicDislocation, 0.9, 1.3, 0.9, 0.25, 0.7),
  };
}

void add(VerificationReport& report, const std::string& name, double residual,
         double threshold, bool require_above = false) {
  CheckResult c{name, residual, threshold, require_above, false};
  c.pass = require_above ? residual > threshold : residual < threshold;
  report.checks.push_back(std::move(c));
}

void check_special_functions(VerificationReport& report, std::mt19937_64& rng) {
  // ln Gamma(x+1) = ln Gamma(x) + ln x across the shift boundary
  double worst = 0.0;
  for (double x = 0.25; x < 50.0; x += 0.9173)
    worst = std::max(worst,
                     std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)));
  add(report, "log_gamma_recursion", worst, thresholds::log_gamma_recursion);

  // weighted Laguerre orthogonality, relative to the diagonal value
  worst = 0.0;
  for (double a : {0.0, 0.75, 1.75}) {
    QuadratureSpec spec;
    spec.decay = TailDecay::Exponential;
    spec.decay_scale = 1.0;
    for (int m = 0; m <= 6; ++m) {
      for (int n = m; n <= 6; ++n) {
        const double value = integrate_halfline(
            [&](double x) {
              return std::exp(-x) * std::pow(x, a) * laguerre(m, a, x) *
                     laguerre(n, a, x);
            },
            spec);
        const double diagonal =
            std::exp(log_gamma(n + a + 1.0) - log_gamma(n + 1.0));
        const double expected = m == n ? diagonal : 0.0;
        worst = std::max(worst, std::abs(value - expected) / diagonal);
      }
    }
  }
  add(report, "laguerre_orthogonality", worst, thresholds::orthonormality);

  // generating function: closed form against a long partial sum
  worst = 0.0;
  for (double a : {0.0, 1.0, 2.75}) {
    for (double radius : {0.2, 0.5, 0.8}) {
      const std::complex<double> y = std::polar(radius, 0.9);
      for (double x : {0.0, 0.7, 3.1}) {
        std::complex<double> sum = 0.0;
        std::complex<double> yn = 1.0;
        for (int n = 0; n < 600; ++n) {
          sum += laguerre(n, a, x) * yn;
          yn *= y;
        }
        worst = std::max(
            worst, std::abs(laguerre_generating_closed(a, y, x) - sum));
      }
    }
  }
  add(report, "laguerre_generating_closed", worst,
      thresholds::generating_series);

  // exp(A) exp(-A) = 1 for a seeded dense complex matrix scaled to norm 20
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  worst = 0.0;
  for (int dim : {6, 24}) {
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        a(i, j) = std::complex<double>(unit(rng), unit(rng));
    a *= 20.0 / a.cwiseAbs().colwise().sum().maxCoeff();
    const Eigen::MatrixXcd round_trip = matrix_exp(a) * matrix_exp(-a);
    worst = std::max(
        worst, (round_trip - Eigen::MatrixXcd::Identity(dim, dim))
                   .cwiseAbs()
                   .maxCoeff());
  }
  add(report, "matrix_exp_roundtrip", worst, thresholds::matrix_exp_roundtrip);
}

void check_su11(VerificationReport& report, double casimir_injection) {
  double worst_r1 = 0.0, worst_r2 = 0.0, worst_casimir = 0.0;
  for (double k : kBargmannGrid) {
    for (int dim : kDimGrid) {
      const Su11Rep rep = build_rep(k, dim);
      const CommutatorResiduals res = commutator_residuals(rep);
      worst_r1 = std::max(worst_r1, res.k0_ladder);
      worst_r2 = std::max(worst_r2, res.ladder_pair);
      // Casimir deviation against k(k-1) plus the injected offset (test
      // hook; zero in normal operation).
      const MatrixXld casimir =
          -rep.kp * rep.km +
          rep.k0 * (rep.k0 - MatrixXld::Identity(dim, dim));
      const RealX expected =
          static_cast<RealX>(k) * (static_cast<RealX>(k) - 1.0L) +
          static_cast<RealX>(casimir_injection);
      for (int n = 0; n + 1 < dim; ++n)
        worst_casimir = std::max(
            worst_casimir,
            static_cast<double>(std::abs(casimir(n, n) - expected)));
    }
  }
  add(report, "su11_closure_k0_ladder", worst_r1, thresholds::algebra_closure);
  add(report, "su11_closure_ladder_pair", worst_r2,
      thresholds::algebra_closure);
  add(report, "su11_casimir", worst_casimir, thresholds::casimir);

  // k(k-1) = (lambda^2 - 1)/4 for the defect-derived indices
  double worst_link = 0.0;
  for (const DefectConfig& cfg : pinned_configs()) {
    for (int l = -2; l <= 2; ++l) {
      for (Component comp : {Component::Upper, Component::Lower}) {
        const QuantumNumbers qn(0, l, 0.3, comp);
        const double lambda = centrifugal_parameter(cfg, qn);
        const double k = bargmann_index(lambda);
        worst_link = std::max(
            worst_link,
            std::abs(k * (k - 1.0) - (lambda * lambda - 1.0) / 4.0));
      }
    }
  }
  add(report, "su11_casimir_defect_link", worst_link, thresholds::casimir);

  // direct vs BCH displacement, full columns of the buffered subspace,
  // dim = 64
  double worst_bch = 0.0, worst_unitarity = 0.0;
  for (double k : {0.5, 1.0, 1.375}) {
    const Su11Rep rep = build_rep(k, 64);
    for (double radius : kXiRadii) {
      for (double phase : kXiPhases) {
        const CoherentParam p(std::polar(radius, phase));
        const Displacement direct = displacement_direct(rep, p);
        const Displacement bch = displacement_bch(rep, p);
        const int cols = std::min(direct.reliable_cols, bch.reliable_cols);
        if (cols < 1) {
          worst_bch = worst_unitarity = 1.0;  // buffer left nothing checkable
          continue;
        }
        worst_bch = std::max(worst_bch, (direct.matrix - bch.matrix)
                                            .leftCols(cols)
                                            .cwiseAbs()
                                            .maxCoeff());
        worst_unitarity =
            std::max({worst_unitarity, direct.column_norm_error,
                      bch.column_norm_error});
      }
    }
  }
  add(report, "su11_bch_agreement", worst_bch, thresholds::bch_agreement);
  add(report, "su11_displacement_unitarity", worst_unitarity,
      thresholds::bch_agreement);
}

void check_radial(VerificationReport& report) {
  double worst_ode = 0.0, worst_d3 = 0.0, worst_ladder = 0.0;
  for (const DefectConfig& cfg : pinned_configs()) {
    const std::vector<double> grid = default_rho_grid(cfg.m_omega());
    for (Component comp : {Component::Upper, Component::Lower}) {
      for (int l = -3; l <= 3; ++l) {
        for (int n_r = 0; n_r <= 5; ++n_r) {
          const QuantumNumbers qn(n_r, l, 0.3, comp);
          worst_ode = std::max(worst_ode, ode_residual(cfg, qn, grid));
        }
        // operator checks once per mode family (n sweep inside)
        for (int n_r = 0; n_r <= 5; ++n_r) {
          const QuantumNumbers qn(n_r, l, 0.3, comp);
          const SturmianMode mode = mode_from(cfg, qn);
          worst_d3 = std::max(worst_d3, d3_eigenvalue_check(mode, grid));
          const LadderCoefficients ladder = ladder_action_check(mode);
          const double up_expected =
              std::sqrt((mode.n + 1.0) * (2.0 * mode.k + mode.n));
          const double down_expected =
              mode.n >= 1 ? std::sqrt(mode.n * (2.0 * mode.k + mode.n - 1.0))
                          : 0.0;
          worst_ladder = std::max({worst_ladder,
                                   std::abs(ladder.up - up_expected),
                                   std::abs(ladder.down - down_expected)});
        }
      }
    }
  }
  add(report, "radial_ode_residual", worst_ode, thresholds::ode_residual);
  add(report, "radial_d3_eigenvalue", worst_d3, thresholds::d3_eigenvalue);
  add(report, "radial_ladder_coefficients", worst_ladder,
      thresholds::ladder_coefficients);

  // negative control: one oscillator level added to Gamma must be detected
  const DefectConfig flat(DefectKind::CosmicString, 1.0, 1.0, 1.0);
  const QuantumNumbers qn(2, 1);
  const double gamma = gamma_constant(flat, qn, energy_squared(flat, qn));
  const double wrong = radial_equation_residual(
      mode_from(flat, qn), gamma + 4.0 * flat.m_omega(),
      default_rho_grid(flat.m_omega()));
  add(report, "radial_ode_negative_control", wrong,
      thresholds::ode_negative_control, /*require_above=*/true);

  // orthonormality of the Sturmian basis
  double worst_orth = 0.0;
  for (double k : {0.5, 1.0, 1.375}) {
    for (double m_omega : kMOmegaGrid) {
      for (int m = 0; m <= 8; ++m) {
        for (int n = m; n <= 8; ++n) {
          const SturmianMode a(m, k, m_omega);
          const SturmianMode b(n, k, m_omega);
          const double expected = m == n ? 1.0 : 0.0;
          worst_orth =
              std::max(worst_orth, std::abs(overlap(a, b) - expected));
        }
      }
    }
  }
  add(report, "sturmian_orthonormality", worst_orth,
      thresholds::orthonormality);
}

void check_coherent(VerificationReport& report) {
  double worst_series = 0.0, worst_norm = 0.0, worst_overlap = 0.0;
  double worst_tau0 = 0.0, worst_period = 0.0, worst_evolved_norm = 0.0;
  const double m_omega = 1.0;
  const std::vector<double> rho_points = {0.1, 0.35, 0.8, 1.3, 2.0, 3.2, 4.5, 6.0};

  std::vector<std::complex<double>> xis;
  for (double radius : kXiRadii)
    for (double phase : kXiPhases) xis.push_back(std::polar(radius, phase));

  for (double k : {0.5, 1.0, 1.375}) {
    for (const std::complex<double> xi : xis) {
      // Abscissas scaled to the state's Gaussian width: |chi|^2 decays with
      // rate m w g, g = (1-|xi|^2)/|1-xi|^2 (g spans ~0.07..19 over the xi
      // grid). Points far outside the support underflow the closed form and
      // sit below the noise floor of any fixed-precision summation, so a
      // relative comparison is only meaningful across the support itself.
      const double g = (1.0 - std::norm(xi)) / std::norm(1.0 - xi);
      const double scale = 1.0 / std::sqrt(m_omega * g);
      for (double u : {0.15, 0.4, 0.7, 1.0, 1.4, 2.0, 2.6}) {
        const double rho = u * scale;
        const std::complex<double> closed =
            coherent_closed(xi, k, m_omega, rho);
        const CoherentSeriesResult series =
            coherent_series(xi, k, m_omega, rho);
        worst_series = std::max(
            worst_series, std::abs(series.value - closed) / std::abs(closed));
      }
      worst_norm =
          std::max(worst_norm, std::abs(coherent_norm(xi, k, m_omega) - 1.0));
    }

    // overlap modulus against the closed disk-geometry expression
    for (size_t i = 0; i < xis.size(); ++i) {
      for (size_t j = i; j < xis.size(); ++j) {
        const std::complex<double> ov = coherent_overlap(xis[i], xis[j], k);
        const double expected = std::pow(
            (1.0 - std::norm(xis[i])) * (1.0 - std::norm(xis[j])) /
                std::norm(1.0 - std::conj(xis[i]) * xis[j]),
            2.0 * k);
        worst_overlap =
            std::max(worst_overlap, std::abs(std::norm(ov) - expected));
      }
    }

    // evolution: tau = 0 reduction, |chi| periodicity, norm preservation
    const std::complex<double> xi = std::polar(0.6, 0.8);
    const double period = coherent_period(m_omega);
    for (double rho : rho_points) {
      const std::complex<double> closed = coherent_closed(xi, k, m_omega, rho);
      worst_tau0 = std::max(
          worst_tau0,
          std::abs(coherent_evolved(xi, k, m_omega, rho, 0.0).value - closed));
      for (double tau : {0.3, 0.8}) {
        const double now =
            std::abs(coherent_evolved(xi, k, m_omega, rho, tau).value);
        const double later = std::abs(
            coherent_evolved(xi, k, m_omega, rho, tau + period).value);
        worst_period = std::max(worst_period, std::abs(later - now));
      }
    }
    for (double tau : {0.0, period / 4.0, period / 2.0}) {
      const EvolvedCoherentState state =
          coherent_evolved(xi, k, m_omega, 1.0, tau);
      worst_evolved_norm = std::max(
          worst_evolved_norm,
          std::abs(coherent_norm(state.xi_tau, k, m_omega) - 1.0));
    }
  }
  add(report, "coherent_series_vs_closed", worst_series,
      thresholds::series_vs_closed);
  add(report, "coherent_normalization", worst_norm, thresholds::coherent_norm);
  add(report, "coherent_overlap_formula", worst_overlap,
      thresholds::overlap_formula);
  add(report, "coherent_evolution_tau0", worst_tau0,
      thresholds::evolution_tau0);
  add(report, "coherent_evolution_periodicity", worst_period,
      thresholds::evolution_period);
  add(report, "coherent_evolution_norm", worst_evolved_norm,
      thresholds::coherent_norm);
}

void check_spectrum(VerificationReport& report, std::mt19937_64& rng) {
  // flat limit: E^2 = m^2 + 4 m w n_r + k_z^2, independent of l
  double worst_flat = 0.0;
  for (double k_z : {0.0, 0.7}) {
    const DefectConfig flat(DefectKind::CosmicString, 1.0, 1.0, 1.0);
    for (int l = 0; l <= 5; ++l) {
      for (int n_r = 0; n_r <= 4; ++n_r) {
        const QuantumNumbers qn(n_r, l, k_z);
        const double expected =
            flat.mass * flat.mass + 4.0 * flat.m_omega() * n_r + k_z * k_z;
        worst_flat = std::max(
            worst_flat, std::abs(energy_squared(flat, qn) - expected));
      }
    }
  }
  add(report, "spectrum_flat_reduction", worst_flat,
      thresholds::spectrum_identities);

  // sampled configurations: level spacing and the Gamma/(4 m w) = n_r + k
  // closure across kinds, components and quantum numbers
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<int> kind_pick(0, 2);
  std::uniform_int_distribution<int> l_pick(-6, 6);
  std::uniform_int_distribution<int> n_pick(0, 8);
  double worst_gamma = 0.0, worst_step = 0.0;
  for (int sample = 0; sample < 20; ++sample) {
    const DefectKind kind = static_cast<DefectKind>(kind_pick(rng));
    const double alpha = 0.1 + 0.9 * uniform(rng);
    const double mass = 0.3 + 1.7 * uniform(rng);
    const double omega = 0.2 + 2.8 * uniform(rng);
    const double flux =
        kind == DefectKind::CosmicString ? 0.0 : 3.0 * uniform(rng) - 1.5;
    const double torsion =
        kind == DefectKind::CosmicDislocation ? 2.0 * uniform(rng) - 1.0 : 0.0;
    const DefectConfig cfg(kind, alpha, mass, omega, flux, torsion);
    const Component comp =
        uniform(rng) < 0.5 ? Component::Upper : Component::Lower;
    const QuantumNumbers qn(n_pick(rng), l_pick(rng), 4.0 * uniform(rng) - 2.0,
                            comp);
    const double e2 = energy_squared(cfg, qn);
    const double gamma = gamma_constant(cfg, qn, e2);
    const double k = bargmann_index(centrifugal_parameter(cfg, qn));
    worst_gamma = std::max(
        worst_gamma,
        std::abs(gamma / (4.0 * cfg.m_omega()) - (qn.n_r + k)));
    const QuantumNumbers next(qn.n_r + 1, qn.l, qn.k_z, comp);
    worst_step = std::max(
        worst_step, std::abs(energy_squared(cfg, next) - e2 -
                             4.0 * cfg.m_omega()));
  }
  add(report, "spectrum_gamma_identity_sampled", worst_gamma,
      thresholds::spectrum_identities);
  add(report, "spectrum_step_4mw_sampled", worst_step,
      thresholds::spectrum_identities);
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  VerificationReport report;
  std::mt19937_64 rng(options.seed);
  check_special_functions(report, rng);
  check_su11(report, options.casimir_injection);
  check_radial(report);
  check_coherent(report);
  check_spectrum(report, rng);
  return report;
}

namespace {

const char* requirement_text(const CheckResult& c) {
  return c.require_above ? "above" : "below";
}

}  // namespace

std::string render_report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "# verification report\n";
  out << "# threshold table:\n";
  out << "#   algebra_closure=" << float17(thresholds::algebra_closure)
      << " casimir=" << float17(thresholds::casimir)
      << " bch_agreement=" << float17(thresholds::bch_agreement)
      << " ode_residual=" << float17(thresholds::ode_residual) << "\n";
  out << "#   ode_negative_control=" << float17(thresholds::ode_negative_control)
      << " d3_eigenvalue=" << float17(thresholds::d3_eigenvalue)
      << " ladder_coefficients=" << float17(thresholds::ladder_coefficients)
      << " orthonormality=" << float17(thresholds::orthonormality) << "\n";
  out << "#   series_vs_closed=" << float17(thresholds::series_vs_closed)
      << " coherent_norm=" << float17(thresholds::coherent_norm)
      << " overlap_formula=" << float17(thresholds::overlap_formula)
      << " evolution_tau0=" << float17(thresholds::evolution_tau0) << "\n";
  out << "#   evolution_period=" << float17(thresholds::evolution_period)
      << " spectrum_identities=" << float17(thresholds::spectrum_identities)
      << " log_gamma_recursion=" << float17(thresholds::log_gamma_recursion)
      << " matrix_exp_roundtrip=" << float17(thresholds::matrix_exp_roundtrip)
      << " generating_series=" << float17(thresholds::generating_series)
      << "\n";
  out << "check,residual,threshold,requirement,pass\n";
  for (const CheckResult& c : report.checks) {
    out << c.name << ',' << float17(c.residual) << ',' << float17(c.threshold)
        << ',' << requirement_text(c) << ',' << (c.pass ? "true" : "false")
        << "\n";
  }
  out << "# overall: " << (report.all_pass() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_report_json(const VerificationReport& report) {
  std::ostringstream out;
  out << "{\n  \"thresholds\": {\n";
  const std::pair<const char*, double> table[] = {
      {"algebra_closure", thresholds::algebra_closure},
      {"casimir", thresholds::casimir},
      {"bch_agreement", thresholds::bch_agreement},
      {"ode_residual", thresholds::ode_residual},
      {"ode_negative_control", thresholds::ode_negative_control},
      {"d3_eigenvalue", thresholds::d3_eigenvalue},
      {"ladder_coefficients", thresholds::ladder_coefficients},
      {"orthonormality", thresholds::orthonormality},
      {"series_vs_closed", thresholds::series_vs_closed},
      {"coherent_norm", thresholds::coherent_norm},
      {"overlap_formula", thresholds::overlap_formula},
      {"evolution_tau0", thresholds::evolution_tau0},
      {"evolution_period", thresholds::evolution_period},
      {"spectrum_identities", thresholds::spectrum_identities},
      {"log_gamma_recursion", thresholds::log_gamma_recursion},
      {"matrix_exp_roundtrip", thresholds::matrix_exp_roundtrip},
      {"generating_series", thresholds::generating_series},
  };
  for (size_t i = 0; i < std::size(table); ++i) {
    out << "    \"" << table[i].first << "\": " << float17(table[i].second)
        << (i + 1 < std::size(table) ? ",\n" : "\n");
  }
  out << "  },\n  \"checks\": [\n";
  for (size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    out << "    {\"name\": \"" << c.name
        << "\", \"residual\": " << float17(c.residual)
        << ", \"threshold\": " << float17(c.threshold)
        << ", \"requirement\": \"" << requirement_text(c) << "\", \"pass\": "
        << (c.pass ? "true" : "false") << '}'
        << (i + 1 < report.checks.size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"all_pass\": " << (report.all_pass() ? "true" : "false")
      << "\n}\n";
  return out.str();
}

}  // namespace dirosc
