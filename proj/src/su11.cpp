#include "dirosc/su11.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirosc/special.hpp"

namespace dirosc {

Su11Rep build_rep(double k, int dim) {
  if (!(k >= 0.5))
    throw std::invalid_argument("build_rep: Bargmann index must be >= 1/2");
  if (dim < 2) throw std::invalid_argument("build_rep: dim must be >= 2");
  Su11Rep rep;
  rep.k = k;
  rep.dim = dim;
  rep.k0 = MatrixXld::Zero(dim, dim);
  rep.kp = MatrixXld::Zero(dim, dim);
  const RealX kx = static_cast<RealX>(k);
  for (int n = 0; n < dim; ++n) rep.k0(n, n) = kx + static_cast<RealX>(n);
  for (int n = 0; n + 1 < dim; ++n)
    rep.kp(n + 1, n) =
        std::sqrt(static_cast<RealX>(n + 1) * (2 * kx + static_cast<RealX>(n)));
  rep.km = rep.kp.transpose();
  return rep;
}

CommutatorResiduals commutator_residuals(const Su11Rep& rep) {
  const int m = rep.dim - 1;  // interior block, truncation edge excluded
  const MatrixXld r1 = rep.k0 * rep.kp - rep.kp * rep.k0 - rep.kp;
  const MatrixXld r2 = rep.km * rep.kp - rep.kp * rep.km - 2.0L * rep.k0;
  CommutatorResiduals out{};
  out.k0_ladder =
      static_cast<double>(r1.topLeftCorner(m, m).cwiseAbs().maxCoeff());
  out.ladder_pair =
      static_cast<double>(r2.topLeftCorner(m, m).cwiseAbs().maxCoeff());
  return out;
}

double casimir_eigenvalue_check(const Su11Rep& rep) {
  const MatrixXld casimir =
      -rep.kp * rep.km +
      rep.k0 * (rep.k0 - MatrixXld::Identity(rep.dim, rep.dim));
  const RealX expected = static_cast<RealX>(rep.k) * (static_cast<RealX>(rep.k) - 1.0L);
  RealX worst = 0.0L;
  for (int n = 0; n + 1 < rep.dim; ++n) {
    const RealX dev = casimir(n, n) - expected;
    worst = std::max(worst, dev < 0 ? -dev : dev);
  }
  return static_cast<double>(worst);
}

CoherentParam::CoherentParam(std::complex<double> xi) : xi(xi) {
  if (!(std::abs(xi) < 1.0))
    throw std::invalid_argument("CoherentParam: requires |xi| < 1");
}

std::complex<double> CoherentParam::zeta() const {
  const double r = std::abs(xi);
  if (r == 0.0) return {0.0, 0.0};
  return std::tanh(r) * xi / r;
}

double CoherentParam::eta() const {
  const double z = std::abs(zeta());
  return std::log1p(-z * z);  // equals -2 ln cosh|xi|
}

int reliable_columns(std::complex<double> xi, double k, int dim) {
  const double c = std::cosh(2.0 * std::abs(xi));
  const double s = std::sinh(2.0 * std::abs(xi));
  const double j_max = std::floor((dim - 16.0 - c * k - 6.0 * s * (k + 1.0)) /
                                  (c + 6.0 * s));
  return std::clamp(static_cast<int>(j_max) + 1, 0, dim);
}

namespace {

Displacement with_diagnostics(Eigen::MatrixXcd matrix, std::complex<double> xi,
                              double k) {
  const int dim = static_cast<int>(matrix.rows());
  Displacement d{std::move(matrix), reliable_columns(xi, k, dim), 0.0, false};
  for (int j = 0; j < d.reliable_cols; ++j)
    d.column_norm_error =
        std::max(d.column_norm_error, std::abs(d.matrix.col(j).norm() - 1.0));
  d.truncation_ok = d.reliable_cols >= 1 && d.column_norm_error < 1e-8;
  return d;
}

}  // namespace

Displacement displacement_direct(const Su11Rep& rep, const CoherentParam& p) {
  const Eigen::MatrixXcd generator =
      p.xi * rep.kp_c() - std::conj(p.xi) * rep.km_c();
  return with_diagnostics(matrix_exp(generator), p.xi, rep.k);
}

Displacement displacement_bch(const Su11Rep& rep, const CoherentParam& p) {
  const std::complex<double> zeta = p.zeta();
  const Eigen::MatrixXcd raise = matrix_exp(zeta * rep.kp_c());
  const Eigen::MatrixXcd scale = matrix_exp(p.eta() * rep.k0_c());
  const Eigen::MatrixXcd lower = matrix_exp(-std::conj(zeta) * rep.km_c());
  return with_diagnostics(raise * scale * lower, p.xi, rep.k);
}

std::vector<std::complex<double>> perelomov_coefficients(
    double k, std::complex<double> xi, int n_max) {
  if (!(k >= 0.5))
    throw std::invalid_argument("perelomov_coefficients: requires k >= 1/2");
  if (!(std::abs(xi) < 1.0))
    throw std::invalid_argument("perelomov_coefficients: requires |xi| < 1");
  if (n_max < 0)
    throw std::invalid_argument("perelomov_coefficients: requires n_max >= 0");
  const double r = std::abs(xi);
  const double theta = std::arg(xi);
  const double log_norm = k * std::log1p(-r * r);
  const double lg2k = log_gamma(2.0 * k);
  std::vector<std::complex<double>> c(n_max + 1);
  c[0] = std::polar(std::exp(log_norm), 0.0);
  const double log_r = std::log(r);  // -inf at xi = 0 kills every n >= 1 term
  for (int n = 1; n <= n_max; ++n) {
    const double magnitude =
        std::exp(log_norm + n * log_r +
                 0.5 * (log_gamma(n + 2.0 * k) - log_gamma(n + 1.0) - lg2k));
    c[n] = std::polar(magnitude, n * theta);
  }
  return c;
}

}  // namespace dirosc
