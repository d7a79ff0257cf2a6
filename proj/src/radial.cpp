#include "dirosc/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dirosc {

SturmianMode::SturmianMode(int n, double k, double m_omega, RadialForm form)
    : n(n), k(k), m_omega(m_omega), form(form) {
  if (n < 0) throw std::invalid_argument("SturmianMode: n must be >= 0");
  if (!(k >= 0.5)) throw std::invalid_argument("SturmianMode: k must be >= 1/2");
  if (!(m_omega > 0.0))
    throw std::invalid_argument("SturmianMode: m_omega must be > 0");
}

SturmianMode mode_from(const DefectConfig& cfg, const QuantumNumbers& qn,
                       RadialForm form) {
  return SturmianMode(qn.n_r, bargmann_index(centrifugal_parameter(cfg, qn)),
                      cfg.m_omega(), form);
}

double sturmian_norm_constant(const SturmianMode& mode) {
  // int F^2 d(rho) = N^2 Gamma(n+2k) / (2 n! (m w)^{2k}) = 1
  return std::exp(0.5 * (std::log(2.0) + log_gamma(mode.n + 1.0) +
                         2.0 * mode.k * std::log(mode.m_omega) -
                         log_gamma(mode.n + 2.0 * mode.k)));
}

namespace {

double rho_power(const SturmianMode& mode) {
  return mode.form == RadialForm::F ? 2.0 * mode.k - 0.5 : 2.0 * mode.k - 1.0;
}

}  // namespace

double sturmian_eval(const SturmianMode& mode, double rho) {
  if (rho < 0.0) throw std::domain_error("sturmian_eval: requires rho >= 0");
  const double x = mode.m_omega * rho * rho;
  return sturmian_norm_constant(mode) * std::exp(-0.5 * x) *
         std::pow(rho, rho_power(mode)) *
         laguerre(mode.n, 2.0 * mode.k - 1.0, x);
}

SturmianDerivatives sturmian_derivatives(const SturmianMode& mode,
                                         double rho) {
  if (!(rho > 0.0))
    throw std::domain_error("sturmian_derivatives: requires rho > 0");
  const double s = mode.m_omega;
  const double p = rho_power(mode);
  const double alpha = 2.0 * mode.k - 1.0;
  const double x = s * rho * rho;

  const double gauss = std::exp(-0.5 * x);
  const double gauss1 = -s * rho * gauss;
  const double gauss2 = (s * s * rho * rho - s) * gauss;

  const double power = std::pow(rho, p);
  const double power1 = p * std::pow(rho, p - 1.0);
  const double power2 = p * (p - 1.0) * std::pow(rho, p - 2.0);

  const double lag = laguerre(mode.n, alpha, x);
  const double lag_x = mode.n >= 1 ? -laguerre(mode.n - 1, alpha + 1.0, x) : 0.0;
  const double lag_xx = mode.n >= 2 ? laguerre(mode.n - 2, alpha + 2.0, x) : 0.0;
  const double lag1 = lag_x * 2.0 * s * rho;                        // d/drho
  const double lag2 = lag_xx * 4.0 * s * s * rho * rho + lag_x * 2.0 * s;

  const double norm = sturmian_norm_constant(mode);
  SturmianDerivatives d{};
  d.value = norm * gauss * power * lag;
  d.d1 = norm * (gauss1 * power * lag + gauss * power1 * lag +
                 gauss * power * lag1);
  d.d2 = norm * (gauss2 * power * lag + gauss * power2 * lag +
                 gauss * power * lag2 + 2.0 * gauss1 * power1 * lag +
                 2.0 * gauss1 * power * lag1 + 2.0 * gauss * power1 * lag1);
  return d;
}

double overlap(const SturmianMode& a, const SturmianMode& b,
               const QuadratureSpec& spec) {
  if (a.k != b.k || a.m_omega != b.m_omega || a.form != b.form)
    throw std::invalid_argument(
        "overlap: modes must share k, m_omega and form");
  QuadratureSpec q = spec;
  q.decay = TailDecay::Gaussian;
  q.decay_scale = a.m_omega;  // the product of the two Gaussian factors
  const bool radial_measure = a.form == RadialForm::Chi;
  return integrate_halfline(
      [&](double rho) {
        const double w = radial_measure ? rho : 1.0;
        return sturmian_eval(a, rho) * sturmian_eval(b, rho) * w;
      },
      q);
}

double radial_equation_residual(const SturmianMode& mode, double gamma,
                                const std::vector<double>& rho_grid) {
  if (mode.form != RadialForm::F)
    throw std::invalid_argument("radial_equation_residual: F form required");
  if (rho_grid.empty())
    throw std::invalid_argument("radial_equation_residual: empty grid");
  const double s = mode.m_omega;
  const double lambda = 2.0 * mode.k - 1.0;  // |lambda|, sign irrelevant
  const double lambda2 = lambda * lambda;

  std::vector<SturmianDerivatives> vals;
  vals.reserve(rho_grid.size());
  double peak = 0.0;
  for (double rho : rho_grid) {
    vals.push_back(sturmian_derivatives(mode, rho));
    peak = std::max(peak, std::abs(vals.back().value));
  }
  const double floor = 1e-3 * peak;
  double worst = 0.0;
  for (size_t i = 0; i < rho_grid.size(); ++i) {
    const double rho = rho_grid[i];
    const double rho2 = rho * rho;
    const double f = vals[i].value;
    const double residual = -rho2 * vals[i].d2 + s * s * rho2 * rho2 * f -
                            gamma * rho2 * f - (0.25 - lambda2) * f;
    worst = std::max(worst, std::abs(residual) / std::max(std::abs(f), floor));
  }
  return worst;
}

double ode_residual(const DefectConfig& cfg, const QuantumNumbers& qn,
                    const std::vector<double>& rho_grid) {
  const double gamma =
      gamma_constant(cfg, qn, energy_squared(cfg, qn));
  return radial_equation_residual(mode_from(cfg, qn, RadialForm::F), gamma,
                                  rho_grid);
}

namespace {

// D3 F = (1/4 m w) [ -F'' + (lambda^2 - 1/4)/rho^2 F + (m w)^2 rho^2 F ]
double d3_apply(const SturmianMode& mode, const SturmianDerivatives& d,
                double rho) {
  const double s = mode.m_omega;
  const double lambda = 2.0 * mode.k - 1.0;
  return (-d.d2 + (lambda * lambda - 0.25) / (rho * rho) * d.value +
          s * s * rho * rho * d.value) /
         (4.0 * s);
}

}  // namespace

double d3_eigenvalue_check(const SturmianMode& mode,
                           const std::vector<double>& rho_grid) {
  if (mode.form != RadialForm::F)
    throw std::invalid_argument("d3_eigenvalue_check: F form required");
  if (rho_grid.empty())
    throw std::invalid_argument("d3_eigenvalue_check: empty grid");
  std::vector<SturmianDerivatives> vals;
  vals.reserve(rho_grid.size());
  double peak = 0.0;
  for (double rho : rho_grid) {
    vals.push_back(sturmian_derivatives(mode, rho));
    peak = std::max(peak, std::abs(vals.back().value));
  }
  const double expected = mode.n + mode.k;
  double worst = 0.0;
  for (size_t i = 0; i < rho_grid.size(); ++i) {
    if (std::abs(vals[i].value) <= 1e-6 * peak) continue;  // Laguerre zeros
    const double ratio =
        d3_apply(mode, vals[i], rho_grid[i]) / vals[i].value;
    worst = std::max(worst, std::abs(ratio - expected));
  }
  return worst;
}

LadderCoefficients ladder_action_check(const SturmianMode& mode,
                                       const QuadratureSpec& spec) {
  if (mode.form != RadialForm::F)
    throw std::invalid_argument("ladder_action_check: F form required");
  const double s = mode.m_omega;
  QuadratureSpec q = spec;
  q.decay = TailDecay::Gaussian;
  q.decay_scale = s;

  // D+- F = 1/2 [ -+ rho F' + m w rho^2 F -+ F/2 ] - D3 F
  const auto raise_apply = [&](double rho) {
    const SturmianDerivatives d = sturmian_derivatives(mode, rho);
    return 0.5 * (-rho * d.d1 + s * rho * rho * d.value - 0.5 * d.value) -
           d3_apply(mode, d, rho);
  };
  const auto lower_apply = [&](double rho) {
    const SturmianDerivatives d = sturmian_derivatives(mode, rho);
    return 0.5 * (rho * d.d1 + s * rho * rho * d.value + 0.5 * d.value) -
           d3_apply(mode, d, rho);
  };

  // The positive-at-origin convention flips both projections globally; the
  // leading -1 below restores the algebraic normalization.
  LadderCoefficients out{};
  const SturmianMode up_target(mode.n + 1, mode.k, s, RadialForm::F);
  out.up = -integrate_halfline(
      [&](double rho) { return sturmian_eval(up_target, rho) * raise_apply(rho); },
      q);
  if (mode.n >= 1) {
    const SturmianMode down_target(mode.n - 1, mode.k, s, RadialForm::F);
    out.down = -integrate_halfline(
        [&](double rho) {
          return sturmian_eval(down_target, rho) * lower_apply(rho);
        },
        q);
  } else {
    // no target below the ground mode; report the norm of the annihilated
    // state, which the algebra sends to zero
    out.down = std::sqrt(integrate_halfline(
        [&](double rho) {
          const double g = lower_apply(rho);
          return g * g;
        },
        q));
  }
  return out;
}

std::vector<double> default_rho_grid(double m_omega, int points) {
  if (points < 2)
    throw std::invalid_argument("default_rho_grid: need at least 2 points");
  QuadratureSpec spec;
  spec.decay_scale = m_omega;
  const double lo = 0.05;
  const double hi = spec.upper_limit();
  std::vector<double> grid(points);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i)
    grid[i] = lo * std::exp(ratio * i / (points - 1.0));
  return grid;
}

}  // namespace dirosc
