#pragma once

// Sturmian radial eigenfunctions of the factorized oscillator equation and
// numerical checks of the differential su(1,1) realization acting on them.

#include <vector>

#include "dirosc/defect.hpp"
#include "dirosc/special.hpp"

namespace dirosc {

// F carries the flat measure d(rho), chi = F / sqrt(rho) the radial measure
// rho d(rho); both share the same normalization constant.
enum class RadialForm { F, Chi };

struct SturmianMode {
  int n = 0;          // radial excitation, >= 0
  double k = 0.5;     // Bargmann index, >= 1/2 (|lambda| = 2k - 1)
  double m_omega = 1; // oscillator scale m*w, > 0
  RadialForm form = RadialForm::F;

  SturmianMode() = default;
  SturmianMode(int n, double k, double m_omega, RadialForm form = RadialForm::F);
};

// Mode attached to a defect configuration: k from the component's
// centrifugal parameter, n = n_r.
SturmianMode mode_from(const DefectConfig& cfg, const QuantumNumbers& qn,
                       RadialForm form = RadialForm::F);

// Normalization forced by the F-form inner product int F^2 d(rho) = 1:
//   N = sqrt(2 n! (m w)^{2k} / Gamma(n + 2k)).
double sturmian_norm_constant(const SturmianMode& mode);

//   F_n(rho)   = N exp(-m w rho^2/2) rho^{2k-1/2} L_n^{2k-1}(m w rho^2)
//   chi_n(rho) = N exp(-m w rho^2/2) rho^{2k-1}   L_n^{2k-1}(m w rho^2)
// Sign fixed positive as rho -> 0+ (leading Laguerre coefficient positive).
double sturmian_eval(const SturmianMode& mode, double rho);

// F and its first two rho-derivatives (F form), assembled from the analytic
// derivative relations of the Laguerre factor.
struct SturmianDerivatives {
  double value;
  double d1;
  double d2;
};
SturmianDerivatives sturmian_derivatives(const SturmianMode& mode, double rho);

// Quadrature inner product of two modes sharing (k, m_omega, form); the
// measure follows the form. Orthonormality: overlap = delta_{mn}.
double overlap(const SturmianMode& a, const SturmianMode& b,
               const QuadratureSpec& spec = {});

// Pointwise residual of the factorized second-order equation
//   -rho^2 F'' + (m w)^2 rho^4 F - Gamma rho^2 F - (1/4 - lambda^2) F = 0
// evaluated with analytic derivatives; lambda^2 = (2k-1)^2.
// Returns max_i |residual_i| / max(|F_i|, 1e-3 * max|F|).
double radial_equation_residual(const SturmianMode& mode, double gamma,
                                const std::vector<double>& rho_grid);

// Same, with Gamma and lambda taken from the defect configuration via
// energy_squared / gamma_constant.
double ode_residual(const DefectConfig& cfg, const QuantumNumbers& qn,
                    const std::vector<double>& rho_grid);

// Compact operator of the radial equation,
//   D3 = (1/4 m w) [ -d^2/drho^2 + (lambda^2 - 1/4)/rho^2 + (m w)^2 rho^2 ],
// applied to F_n; returns max |(D3 F)/F - (n + k)| over grid points with
// |F| > 1e-6 max|F|.
double d3_eigenvalue_check(const SturmianMode& mode,
                           const std::vector<double>& rho_grid);

// Ladder operators D+- = 1/2 [ -+ rho d/drho + m w rho^2 -+ 1/2 ] - D3
// applied analytically to F_n and projected on F_{n+-1}:
//   up   = <F_{n+1} | D+ F_n> -> sqrt((n+1)(2k+n))
//   down = <F_{n-1} | D- F_n> -> sqrt(n(2k+n-1)), or ||D- F_0|| for n = 0.
// The positive-at-origin convention makes both projections globally
// negative; the returned values absorb that fixed sign.
struct LadderCoefficients {
  double up;
  double down;
};
LadderCoefficients ladder_action_check(const SturmianMode& mode,
                                       const QuadratureSpec& spec = {});

// Geometric grid rho in [0.05, R], R from the Gaussian tail rule at scale
// m_omega. Used by the verification suites.
std::vector<double> default_rho_grid(double m_omega, int points = 160);

}  // namespace dirosc
