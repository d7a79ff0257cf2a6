#include "dirosc/defect.hpp"

#include <cmath>
#include <stdexcept>

namespace dirosc {

DefectConfig::DefectConfig(DefectKind kind, double alpha, double mass,
                           double omega, double flux_ratio, double torsion,
                           double hbar)
    : kind(kind),
      alpha(alpha),
      mass(mass),
      omega(omega),
      flux_ratio(flux_ratio),
      torsion(torsion),
      hbar(hbar) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("DefectConfig: alpha must lie in (0, 1]");
  if (!(mass > 0.0)) throw std::invalid_argument("DefectConfig: mass must be > 0");
  if (!(omega > 0.0))
    throw std::invalid_argument("DefectConfig: omega must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("DefectConfig: hbar must be > 0");
  if (kind == DefectKind::CosmicString && flux_ratio != 0.0)
    throw std::invalid_argument(
        "DefectConfig: cosmic string carries no flux (flux_ratio must be 0)");
  if (kind != DefectKind::CosmicDislocation && torsion != 0.0)
    throw std::invalid_argument(
        "DefectConfig: torsion applies to the dislocation only");
}

QuantumNumbers::QuantumNumbers(int n_r, int l, double k_z, Component component)
    : n_r(n_r), l(l), k_z(k_z), component(component) {
  if (n_r < 0) throw std::invalid_argument("QuantumNumbers: n_r must be >= 0");
}

double angular_parameter(const DefectConfig& cfg, const QuantumNumbers& qn,
                         ParamSign sign) {
  double numerator = qn.l + 0.5;
  switch (cfg.kind) {
    case DefectKind::CosmicString:
      break;
    case DefectKind::MagneticCosmicString:
      numerator += cfg.flux_ratio;
      break;
    case DefectKind::CosmicDislocation:
      numerator += cfg.flux_ratio - qn.k_z * cfg.torsion;
      break;
  }
  const double half = sign == ParamSign::Minus ? -0.5 : 0.5;
  return numerator / cfg.alpha + half;
}

double centrifugal_parameter(const DefectConfig& cfg,
                             const QuantumNumbers& qn) {
  return angular_parameter(
      cfg, qn,
      qn.component == Component::Upper ? ParamSign::Minus : ParamSign::Plus);
}

double bargmann_index(double lambda) { return 0.5 * std::abs(lambda) + 0.5; }

double energy_squared(const DefectConfig& cfg, const QuantumNumbers& qn) {
  const double own = centrifugal_parameter(cfg, qn);
  const double other = angular_parameter(
      cfg, qn,
      qn.component == Component::Upper ? ParamSign::Plus : ParamSign::Minus);
  const double bracket = qn.n_r + 0.5 * std::abs(own) - 0.5 * other + 0.5;
  const double m = cfg.mass;
  return m * m + 4.0 * m * cfg.omega * bracket + qn.k_z * qn.k_z;
}

std::optional<EnergyBranches> energy_branches(double e_squared) {
  if (e_squared < 0.0) return std::nullopt;
  const double e = std::sqrt(e_squared);
  return EnergyBranches{e, -e};
}

double gamma_constant(const DefectConfig& cfg, const QuantumNumbers& qn,
                      double e_squared) {
  const double other = angular_parameter(
      cfg, qn,
      qn.component == Component::Upper ? ParamSign::Plus : ParamSign::Minus);
  const double m = cfg.mass;
  return e_squared - m * m + 2.0 * m * cfg.omega * other - qn.k_z * qn.k_z;
}

FactorizationConstants factorization_constants(double m_omega,
                                               double gamma_plus,
                                               double lambda_minus) {
  if (!(m_omega > 0.0))
    throw std::invalid_argument("factorization_constants: requires m_omega > 0");
  const double ratio = gamma_plus / (2.0 * m_omega);
  FactorizationConstants c{};
  c.mu = m_omega;
  c.epsilon = m_omega;
  c.lambda = -ratio - 0.5;
  c.delta = c.lambda - 1.0;
  c.sigma = (ratio + 1.0) * (ratio + 1.0) - lambda_minus * lambda_minus;
  return c;
}

}  // namespace dirosc
