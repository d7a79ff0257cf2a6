#pragma once

// Defect geometry, quantum numbers, and the closed-form spectrum of the
// 2+1 Dirac oscillator on cosmic-string, magnetic-flux-carrying cosmic-string
// and cosmic-dislocation backgrounds.

#include <optional>

namespace dirosc {

enum class DefectKind { CosmicString, MagneticCosmicString, CosmicDislocation };

// Spinor component: Upper is the chi equation (centrifugal parameter
// Lambda_-, eigenvalue constant Gamma_+), Lower is the phi equation
// (Lambda_+ centrifugal, Gamma_-).
enum class Component { Upper, Lower };

// Selects the -/+ branch of the angular parameter pair.
enum class ParamSign { Minus, Plus };

// Background + oscillator parameters. alpha = 1 - 4 mu_linear is the conical
// deficit, in (0, 1]; flux_ratio = e Phi_B / 2 pi (magnetic string and
// dislocation only); torsion = J^z of the dislocation. Fields irrelevant to
// the chosen kind must be exactly zero; the constructor enforces that.
struct DefectConfig {
  DefectKind kind = DefectKind::CosmicString;
  double alpha = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double flux_ratio = 0.0;
  double torsion = 0.0;
  double hbar = 1.0;

  DefectConfig() = default;
  DefectConfig(DefectKind kind, double alpha, double mass, double omega,
               double flux_ratio = 0.0, double torsion = 0.0,
               double hbar = 1.0);

  double m_omega() const { return mass * omega; }
};

struct QuantumNumbers {
  int n_r = 0;     // radial quantum number, >= 0
  int l = 0;       // orbital index, any integer
  double k_z = 0;  // axial wave number
  Component component = Component::Upper;

  QuantumNumbers() = default;
  QuantumNumbers(int n_r, int l, double k_z = 0.0,
                 Component component = Component::Upper);
};

// The angular parameter pair of the configuration:
//   cosmic string        (l + 1/2) / alpha                       -/+ 1/2
//   magnetic string      (l + 1/2 + flux) / alpha                -/+ 1/2
//   dislocation          (l + 1/2 + flux - k_z torsion) / alpha  -/+ 1/2
// Plus and Minus branches always differ by exactly 1.
double angular_parameter(const DefectConfig& cfg, const QuantumNumbers& qn,
                         ParamSign sign);

// The centrifugal parameter of the component's own radial equation
// (Minus branch for Upper, Plus branch for Lower).
double centrifugal_parameter(const DefectConfig& cfg, const QuantumNumbers& qn);

// Bargmann index of the discrete-series representation attached to an
// angular parameter: k = (|lambda| + 1) / 2 >= 1/2.
double bargmann_index(double lambda);

// E^2 for the component's branch:
//   Upper: m^2 + 4 m w [n_r + |L_-|/2 - L_+/2 + 1/2] + k_z^2
//   Lower: m^2 + 4 m w [n_r + |L_+|/2 - L_-/2 + 1/2] + k_z^2.
// The bracket is >= 0 for every valid input, so E^2 >= m^2.
double energy_squared(const DefectConfig& cfg, const QuantumNumbers& qn);

// Particle/antiparticle branches E = +-sqrt(E^2); empty when e_squared < 0.
struct EnergyBranches {
  double particle;
  double antiparticle;
};
std::optional<EnergyBranches> energy_branches(double e_squared);

// Gamma_+- = E^2 - m^2 + 2 m w Lambda_+- - k_z^2, taking the branch opposite
// to the component's centrifugal parameter (Upper -> Gamma_+ with Lambda_+,
// Lower -> Gamma_- with Lambda_-). Satisfies Gamma/(4 m w) = n_r + k with k
// the component's Bargmann index.
double gamma_constant(const DefectConfig& cfg, const QuantumNumbers& qn,
                      double e_squared);

// Constants of the second-order factorization of the upper radial equation,
// in terms of m w, Gamma_+ and Lambda_-:
//   mu = epsilon = m w,
//   lambda = -Gamma_+/(2 m w) - 1/2,   delta = lambda - 1,
//   sigma = (Gamma_+/(2 m w) + 1)^2 - Lambda_-^2.
struct FactorizationConstants {
  double mu;
  double delta;
  double epsilon;
  double lambda;
  double sigma;
};
FactorizationConstants factorization_constants(double m_omega,
                                               double gamma_plus,
                                               double lambda_minus);

}  // namespace dirosc
