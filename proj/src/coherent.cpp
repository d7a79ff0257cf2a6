#include "dirosc/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "dirosc/su11.hpp"

namespace dirosc {

namespace {

void validate_disk(std::complex<double> xi, double k, double m_omega) {
  if (!(std::abs(xi) < 1.0))
    throw std::invalid_argument("coherent state: requires |xi| < 1");
  if (!(k >= 0.5))
    throw std::invalid_argument("coherent state: requires k >= 1/2");
  if (!(m_omega > 0.0))
    throw std::invalid_argument("coherent state: requires m_omega > 0");
}

}  // namespace

std::complex<double> coherent_closed(std::complex<double> xi, double k,
                                     double m_omega, double rho) {
  validate_disk(xi, k, m_omega);
  if (rho < 0.0) throw std::domain_error("coherent_closed: requires rho >= 0");
  const double r2 = std::norm(xi);
  // sqrt(2 (1-|xi|^2)^{2k} / Gamma(2k)) (m w)^k, assembled in log space
  const double log_amp = 0.5 * std::log(2.0) + k * std::log1p(-r2) -
                         0.5 * log_gamma(2.0 * k) + k * std::log(m_omega);
  const std::complex<double> one_minus_xi = 1.0 - xi;
  const std::complex<double> exponent =
      log_amp - 2.0 * k * std::log(one_minus_xi) +
      0.5 * m_omega * rho * rho * (xi + 1.0) / (xi - 1.0);
  return std::pow(rho, 2.0 * k - 1.0) * std::exp(exponent);
}

CoherentSeriesResult coherent_series(std::complex<double> xi, double k,
                                     double m_omega, double rho,
                                     double tail_tol, int max_terms) {
  validate_disk(xi, k, m_omega);
  if (rho < 0.0) throw std::domain_error("coherent_series: requires rho >= 0");
  const double alpha = 2.0 * k - 1.0;
  const double x = m_omega * rho * rho;
  const double envelope = std::exp(-0.5 * x) * std::pow(rho, alpha);

  int cap = 256;
  std::vector<std::complex<double>> c = perelomov_coefficients(k, xi, cap);

  CoherentSeriesResult out{};
  std::complex<double> sum = 0.0;
  double lag_prev = 0.0;  // L_{n-1}
  double lag = 1.0;       // L_n, starting at L_0
  int consecutive_small = 0;
  for (int n = 0; n < max_terms; ++n) {
    if (n > cap) {
      cap *= 2;
      c = perelomov_coefficients(k, xi, cap);
    }
    if (n >= 1) {
      const double next =
          ((2.0 * (n - 1) + 1.0 + alpha - x) * lag - (n - 1 + alpha) * lag_prev) /
          static_cast<double>(n);
      lag_prev = lag;
      lag = next;
    }
    const SturmianMode mode(n, k, m_omega, RadialForm::Chi);
    const double chi_n = sturmian_norm_constant(mode) * envelope * lag;
    const std::complex<double> term = c[n] * chi_n;
    sum += term;
    out.terms = n + 1;
    if (std::abs(term) <= tail_tol * std::abs(sum)) {
      if (++consecutive_small >= 5) {
        out.converged = true;
        break;
      }
    } else {
      consecutive_small = 0;
    }
  }
  out.value = sum;
  return out;
}

EvolvedCoherentState coherent_evolved(std::complex<double> xi, double k,
                                      double m_omega, double rho, double tau,
                                      double hbar) {
  if (!(hbar > 0.0))
    throw std::invalid_argument("coherent_evolved: requires hbar > 0");
  const double angle = 4.0 * m_omega * tau / hbar;
  EvolvedCoherentState out{};
  out.xi_tau = xi * std::polar(1.0, -angle);
  out.global_phase = std::polar(1.0, -k * angle);
  out.value = out.global_phase * coherent_closed(out.xi_tau, k, m_omega, rho);
  return out;
}

std::complex<double> coherent_overlap(std::complex<double> xi1,
                                      std::complex<double> xi2, double k) {
  if (!(std::abs(xi1) < 1.0) || !(std::abs(xi2) < 1.0))
    throw std::invalid_argument("coherent_overlap: requires |xi| < 1");
  if (!(k >= 0.5))
    throw std::invalid_argument("coherent_overlap: requires k >= 1/2");
  int cap = 256;
  const int max_terms = 100000;
  std::vector<std::complex<double>> c1 = perelomov_coefficients(k, xi1, cap);
  std::vector<std::complex<double>> c2 = perelomov_coefficients(k, xi2, cap);
  std::complex<double> sum = 0.0;
  int consecutive_small = 0;
  for (int n = 0; n < max_terms; ++n) {
    if (n > cap) {
      cap *= 2;
      c1 = perelomov_coefficients(k, xi1, cap);
      c2 = perelomov_coefficients(k, xi2, cap);
    }
    const std::complex<double> term = std::conj(c1[n]) * c2[n];
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++consecutive_small >= 5) break;
    } else {
      consecutive_small = 0;
    }
  }
  return sum;
}

double coherent_norm(std::complex<double> xi, double k, double m_omega) {
  validate_disk(xi, k, m_omega);
  QuadratureSpec spec;
  spec.decay = TailDecay::Gaussian;
  // |chi|^2 decays like exp(-m w (1-|xi|^2)/|1-xi|^2 rho^2)
  spec.decay_scale = m_omega * (1.0 - std::norm(xi)) / std::norm(1.0 - xi);
  return integrate_halfline(
      [&](double rho) {
        return std::norm(coherent_closed(xi, k, m_omega, rho)) * rho;
      },
      spec);
}

double coherent_period(double m_omega, double hbar) {
  return M_PI * hbar / (2.0 * m_omega);
}

}  // namespace dirosc
