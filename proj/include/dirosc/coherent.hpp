#pragma once

// Radial SU(1,1) Perelomov coherent states: closed form, series form,
// overlaps, and harmonic time evolution.

#include <complex>

#include "dirosc/radial.hpp"

namespace dirosc {

// Closed form of chi(rho, xi) = sum_n c_n(xi) chi_n(rho), resummed with the
// Laguerre generating function (xi is the disk parameter, |xi| < 1):
//   chi = sqrt(2 (1-|xi|^2)^{2k} / Gamma(2k)) (m w)^k / (1-xi)^{2k}
//         * rho^{2k-1} exp[ (m w rho^2 / 2) (xi+1)/(xi-1) ],
// principal branch of (1-xi)^{2k}. Normalized: int |chi|^2 rho d(rho) = 1.
std::complex<double> coherent_closed(std::complex<double> xi, double k,
                                     double m_omega, double rho);

// Direct summation of c_n(xi) chi_n(rho). Truncates once |term| stays below
// tail_tol * |partial sum| for five consecutive terms; gives up (converged
// = false) after max_terms.
struct CoherentSeriesResult {
  std::complex<double> value;
  int terms = 0;
  bool converged = false;
};
CoherentSeriesResult coherent_series(std::complex<double> xi, double k,
                                     double m_omega, double rho,
                                     double tail_tol = 1e-16,
                                     int max_terms = 100000);

// Evolution under the radial Hamiltonian 4 m w D3: the disk parameter
// rotates and the Bargmann index contributes a global phase,
//   chi(rho, tau) = exp(-4 i m w k tau / hbar) chi(rho, xi_tau),
//   xi_tau = xi exp(-4 i m w tau / hbar).
// |chi| is periodic with T = pi hbar / (2 m w).
struct EvolvedCoherentState {
  std::complex<double> xi_tau;
  std::complex<double> global_phase;
  std::complex<double> value;
};
EvolvedCoherentState coherent_evolved(std::complex<double> xi, double k,
                                      double m_omega, double rho, double tau,
                                      double hbar = 1.0);

// <zeta_1|zeta_2> = sum_n conj(c_n(xi_1)) c_n(xi_2), summed adaptively.
// Modulus squared equals [(1-|xi_1|^2)(1-|xi_2|^2) / |1 - conj(xi_1) xi_2|^2]^{2k}.
std::complex<double> coherent_overlap(std::complex<double> xi1,
                                      std::complex<double> xi2, double k);

// Quadrature norm int |chi(rho, xi)|^2 rho d(rho); 1 for every |xi| < 1.
double coherent_norm(std::complex<double> xi, double k, double m_omega);

// Revival period of |chi(rho, tau)|.
double coherent_period(double m_omega, double hbar = 1.0);

}  // namespace dirosc
