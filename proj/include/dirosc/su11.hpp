#pragma once

// Truncated matrix representation of the su(1,1) discrete series D^+_k and
// the Perelomov displacement operator in direct and BCH-disentangled form.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace dirosc {

// Matrices are built and algebra residuals evaluated in 80-bit extended
// precision: the closure deviation of double entries is dominated by
// fl(sqrt(v))^2 - v ~ 2u*v, which at dim = 128 already exceeds 1e-12.
using RealX = long double;
using MatrixXld = Eigen::Matrix<RealX, Eigen::Dynamic, Eigen::Dynamic>;

// Basis |k,n>, n = 0..dim-1:
//   K0 |k,n> = (k+n) |k,n>
//   K+ |k,n> = sqrt((n+1)(2k+n)) |k,n+1>
//   K- |k,n> = sqrt(n(2k+n-1))  |k,n-1>
struct Su11Rep {
  double k = 0.5;  // Bargmann index, >= 1/2
  int dim = 2;
  MatrixXld k0, kp, km;

  Eigen::MatrixXcd k0_c() const { return k0.cast<std::complex<double>>(); }
  Eigen::MatrixXcd kp_c() const { return kp.cast<std::complex<double>>(); }
  Eigen::MatrixXcd km_c() const { return km.cast<std::complex<double>>(); }
};

Su11Rep build_rep(double k, int dim);

// Max-norm residuals of [K0,K+] - K+ and [K-,K+] - 2K0 on the leading
// (dim-1) x (dim-1) block; the last row/column carries the truncation edge.
struct CommutatorResiduals {
  double k0_ladder;   // [K0,K+] - K+
  double ladder_pair; // [K-,K+] - 2K0
};
CommutatorResiduals commutator_residuals(const Su11Rep& rep);

// Max deviation of diag(-K+K- + K0(K0-1)) from k(k-1) over the leading
// dim-1 entries. The Casimir is diagonal in this basis and its eigenvalue
// equals (lambda^2 - 1)/4 for k = (|lambda|+1)/2.
double casimir_eigenvalue_check(const Su11Rep& rep);

// Group parameter xi of D(xi) = exp(xi K+ - conj(xi) K-) plus the derived
// disk parameter zeta = tanh|xi| * xi/|xi| and eta = ln(1 - |zeta|^2)
// = -2 ln cosh|xi| of the BCH normal form. Requires |xi| < 1.
struct CoherentParam {
  std::complex<double> xi;

  explicit CoherentParam(std::complex<double> xi);
  std::complex<double> zeta() const;
  double eta() const;
};

// Columns of a dim-truncated displacement that are free of truncation
// artifacts. D(xi)|k,j> is centered at K0 ~ (k+j) cosh(2|xi|) with spread
// ~ sinh(2|xi|) (j+k+1); column j is reliable when
//   (k+j) cosh(2|xi|) + 6 sinh(2|xi|) (j+k+1) + 16 <= dim,
// which keeps the cut tail mass under ~1e-17 and the boundary-reflection
// error of the truncated-generator exponential under ~5e-9 (calibrated
// against dim-256 references). Can be 0: no column is trustworthy.
int reliable_columns(std::complex<double> xi, double k, int dim);

// D(xi) on the truncated basis plus a unitarity diagnostic on the leading
// reliable columns. truncation_ok false means the caller should raise dim.
struct Displacement {
  Eigen::MatrixXcd matrix;
  int reliable_cols;        // see reliable_columns()
  double column_norm_error; // max | ||col|| - 1 | over the reliable columns
  bool truncation_ok;       // reliable_cols >= 1 and column_norm_error < 1e-8
};

// Single exponential of the anti-Hermitian generator.
Displacement displacement_direct(const Su11Rep& rep, const CoherentParam& p);

// Normal form exp(zeta K+) exp(eta K0) exp(-conj(zeta) K-); equals the
// infinite-dimensional matrix exactly on the truncated block because the
// factors are triangular.
Displacement displacement_bch(const Su11Rep& rep, const CoherentParam& p);

// Expansion coefficients of the Perelomov state in the disk variable xi
// (|xi| < 1):
//   c_n = (1 - |xi|^2)^k sqrt(Gamma(n+2k) / (n! Gamma(2k))) xi^n,
// n = 0..n_max. For the state D(g)|k,0> pass the disk image zeta(g).
std::vector<std::complex<double>> perelomov_coefficients(
    double k, std::complex<double> xi, int n_max);

}  // namespace dirosc
