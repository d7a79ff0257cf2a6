#include "dirosc/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dirosc {

double laguerre(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre: n must be >= 0");
  if (a <= -1.0) throw std::domain_error("laguerre: requires a > -1");
  if (n == 0) return 1.0;
  double lkm1 = 1.0;          // L_0
  double lk = 1.0 + a - x;    // L_1
  for (int k = 1; k < n; ++k) {
    double lkp1 = ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double laguerre_derivative(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre_derivative: n must be >= 0");
  if (a <= -1.0) throw std::domain_error("laguerre_derivative: requires a > -1");
  if (n == 0) return 0.0;
  return -laguerre(n - 1, a + 1.0, x);
}

std::complex<double> laguerre_generating_closed(double nu,
                                                std::complex<double> y,
                                                double x) {
  if (std::abs(y) >= 1.0)
    throw std::domain_error("laguerre_generating_closed: requires |y| < 1");
  const std::complex<double> one_minus_y = 1.0 - y;
  // principal branch; Re(1-y) > 0 on the unit disk, so log is continuous
  return std::exp(-x * y / one_minus_y - (nu + 1.0) * std::log(one_minus_y));
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  // Stirling series ln G(x) ~ (x-1/2) ln x - x + ln(2 pi)/2 + sum B_2j /
  // (2j(2j-1) x^{2j-1}); below x = 10 shift up with ln G(x) = ln G(x+1) - ln x.
  static constexpr std::array<double, 6> bern = {
      1.0 / 12.0,  -1.0 / 360.0,     1.0 / 1260.0,
      -1.0 / 1680.0, 1.0 / 1188.0,  -691.0 / 360360.0};
  double shift = 0.0;
  while (x < 10.0) {
    shift += std::log(x);
    x += 1.0;
  }
  const double half_log_two_pi = 0.91893853320467274178;
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : bern) {
    series += c * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift;
}

double QuadratureSpec::upper_limit() const {
  if (!(decay_scale > 0.0))
    throw std::invalid_argument("QuadratureSpec: decay_scale must be > 0");
  if (!(abs_tol > 0.0))
    throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
  // exp(-s R^2) (resp. exp(-s R)) below abs_tol with 60 nats of headroom for
  // polynomial prefactors
  const double nats = -std::log(abs_tol) + 60.0;
  return decay == TailDecay::Gaussian ? std::sqrt(nats / decay_scale)
                                      : nats / decay_scale;
}

namespace {

constexpr int kGaussOrder = 15;

struct GaussRule {
  std::array<double, kGaussOrder> node;
  std::array<double, kGaussOrder> weight;
};

// Nodes of P_15 by Newton iteration; computed per integration call so the
// kernels stay free of shared mutable state.
GaussRule make_gauss_rule() {
  GaussRule rule;
  const int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < n; ++j) {
        double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.node[i] = x;
    rule.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b,
             const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i)
    sum += rule.weight[i] * f(mid + half * rule.node[i]);
  return half * sum;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, const GaussRule& rule, long& budget) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid, rule);
  const double right = panel(f, mid, b, rule);
  const double split = left + right;
  if (std::abs(split - whole) <= tol || (b - a) < 1e-14 * (1.0 + std::abs(a)))
    return split;
  if (--budget < 0)
    throw std::runtime_error("integrate: subdivision budget exhausted");
  return adapt(f, a, mid, left, 0.5 * tol, rule, budget) +
         adapt(f, mid, b, right, 0.5 * tol, rule, budget);
}

}  // namespace

double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSpec& spec) {
  if (!(b > a)) throw std::invalid_argument("integrate: requires b > a");
  const GaussRule rule = make_gauss_rule();
  const double whole = panel(f, a, b, rule);
  // rough magnitude for the relative part of the tolerance
  const double rough =
      std::abs(panel(f, a, 0.5 * (a + b), rule)) +
      std::abs(panel(f, 0.5 * (a + b), b, rule));
  const double tol = std::max(spec.abs_tol, spec.rel_tol * rough);
  long budget = spec.max_subdivisions;
  return adapt(f, a, b, whole, tol, rule, budget);
}

double integrate_halfline(const std::function<double(double)>& f,
                          const QuadratureSpec& spec) {
  return integrate_interval(f, 0.0, spec.upper_limit(), spec);
}

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("matrix_exp: matrix must be square");
  if (a.rows() > 256)
    throw std::invalid_argument("matrix_exp: dimension capped at 256");
  const auto n = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  // scale so the Taylor core runs at ||B||_1 <= 1/4
  int squarings = 0;
  if (norm1 > 0.25)
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.25)));
  const Eigen::MatrixXcd b = a / std::pow(2.0, squarings);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int j = 1; j <= 64; ++j) {
    term = (term * b) / static_cast<double>(j);
    result += term;
    if (j >= 4 &&
        term.cwiseAbs().maxCoeff() <
            1e-18 * std::max(1.0, result.cwiseAbs().maxCoeff()))
      break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace dirosc
