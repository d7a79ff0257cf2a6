#pragma once

// Numerical kernels: generalized Laguerre polynomials, log-gamma, adaptive
// quadrature on the half line, and a dense complex matrix exponential.

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace dirosc {

// L_n^a(x) by the three-term recurrence
//   (k+1) L_{k+1}^a = (2k+1+a-x) L_k^a - (k+a) L_{k-1}^a.
// Requires a > -1.
double laguerre(int n, double a, double x);

// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x); zero for n = 0.
double laguerre_derivative(int n, double a, double x);

// Closed form of the generating function sum_n L_n^nu(x) y^n
//   = exp(-x y / (1-y)) / (1-y)^{nu+1},   |y| < 1,
// with the principal branch of the complex power.
std::complex<double> laguerre_generating_closed(double nu,
                                                std::complex<double> y,
                                                double x);

// ln Gamma(x) for x > 0, Stirling series with Bernoulli correction terms and
// an upward shift for small arguments. Self-contained so concurrent calls
// stay safe (glibc lgamma writes the global signgam).
double log_gamma(double x);

// Tail model used to truncate integrals over [0, inf): the integrand is
// assumed to decay like exp(-scale * rho^2) (Gaussian) or exp(-scale * x)
// (Exponential) times a polynomial.
enum class TailDecay { Gaussian, Exponential };

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  long max_subdivisions = 1L << 20;
  TailDecay decay = TailDecay::Gaussian;
  double decay_scale = 1.0;  // the "scale" above; > 0

  // Cutoff R such that the modeled tail beyond R is far below abs_tol.
  double upper_limit() const;
};

// Adaptive Gauss-Legendre integration of f over [0, R] with R from the tail
// rule. A panel is accepted when the bisected estimate agrees with the whole
// panel within the local tolerance. Throws std::runtime_error if
// max_subdivisions is exhausted before convergence.
double integrate_halfline(const std::function<double(double)>& f,
                          const QuadratureSpec& spec);

// Same scheme on a caller-supplied interval [a, b].
double integrate_interval(const std::function<double(double)>& f, double a,
                          double b, const QuadratureSpec& spec);

// exp(A) for dense complex A via scaling and squaring with a Taylor core.
// Dimension is capped at 256; larger inputs throw std::invalid_argument.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& a);

}  // namespace dirosc
