#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dirosc/defect.hpp"

using namespace dirosc;

namespace {

DefectConfig flat() {
  return DefectConfig(DefectKind::CosmicString, 1.0, 1.0, 1.0);
}

}  // namespace

TEST_CASE("angular_parameter: hand-evaluated values per defect kind") {
  // flat string limit: (0 + 1/2)/1 - 1/2
  CHECK(angular_parameter(flat(), QuantumNumbers(0, 0), ParamSign::Minus) ==
        0.0);

  const DefectConfig str08(DefectKind::CosmicString, 0.8, 1.0, 1.0);
  CHECK(angular_parameter(str08, QuantumNumbers(0, 1), ParamSign::Minus) ==
        doctest::Approx(1.375).epsilon(1e-15));  // 1.5/0.8 - 0.5

  const DefectConfig mag(DefectKind::MagneticCosmicString, 0.5, 1.0, 1.0, 0.5);
  CHECK(angular_parameter(mag, QuantumNumbers(0, 0), ParamSign::Minus) ==
        doctest::Approx(1.5).epsilon(1e-15));  // (0.5+0.5)/0.5 - 0.5

  const DefectConfig dis(DefectKind::CosmicDislocation, 1.0, 1.0, 1.0, 0.0,
                         1.0);
  CHECK(angular_parameter(dis, QuantumNumbers(0, 0, 0.5), ParamSign::Minus) ==
        doctest::Approx(-0.5).epsilon(1e-15));  // (0.5 - 0.5)/1 - 0.5
}

TEST_CASE("angular_parameter: Plus and Minus branches differ by exactly 1") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ua(0.05, 1.0), uf(-2.0, 2.0);
  std::uniform_int_distribution<int> ul(-6, 6);
  for (int i = 0; i < 200; ++i) {
    const double alpha = ua(rng);
    DefectConfig cfg;
    switch (i % 3) {
      case 0:
        cfg = DefectConfig(DefectKind::CosmicString, alpha, 1.0, 1.0);
        break;
      case 1:
        cfg = DefectConfig(DefectKind::MagneticCosmicString, alpha, 1.0, 1.0,
                           uf(rng));
        break;
      default:
        cfg = DefectConfig(DefectKind::CosmicDislocation, alpha, 1.0, 1.0,
                           uf(rng), uf(rng));
        break;
    }
    const QuantumNumbers qn(0, ul(rng), uf(rng));
    const double minus = angular_parameter(cfg, qn, ParamSign::Minus);
    const double plus = angular_parameter(cfg, qn, ParamSign::Plus);
    // each branch is one correctly-rounded operation away from the shared
    // quotient, so the difference can miss 1 by at most a unit in the last
    // place of the larger branch
    const double ulp_bound = 2.0 * std::numeric_limits<double>::epsilon() *
                             std::max({1.0, std::abs(minus), std::abs(plus)});
    CHECK(std::abs(plus - minus - 1.0) <= ulp_bound);
  }
  // at half-integer parameters the difference is exact
  const DefectConfig flat(DefectKind::CosmicString, 1.0, 1.0, 1.0);
  for (int l = -4; l <= 4; ++l) {
    const QuantumNumbers qn(0, l);
    CHECK(angular_parameter(flat, qn, ParamSign::Plus) -
              angular_parameter(flat, qn, ParamSign::Minus) ==
          1.0);
  }
}

TEST_CASE("angular_parameter: zero flux and torsion reduce to the plain "
          "string bitwise") {
  const DefectConfig str(DefectKind::CosmicString, 0.37, 1.0, 1.0);
  const DefectConfig mag(DefectKind::MagneticCosmicString, 0.37, 1.0, 1.0,
                         0.0);
  const DefectConfig dis(DefectKind::CosmicDislocation, 0.37, 1.0, 1.0, 0.0,
                         0.0);
  for (int l = -4; l <= 4; ++l) {
    const QuantumNumbers qn(0, l, 0.9);
    for (ParamSign s : {ParamSign::Minus, ParamSign::Plus}) {
      const double ref = angular_parameter(str, qn, s);
      CHECK(angular_parameter(mag, qn, s) == ref);
      CHECK(angular_parameter(dis, qn, s) == ref);
    }
  }
}

TEST_CASE("centrifugal_parameter: Upper takes Minus, Lower takes Plus") {
  const DefectConfig cfg(DefectKind::CosmicString, 0.8, 1.0, 1.0);
  const QuantumNumbers up(0, 1, 0.0, Component::Upper);
  const QuantumNumbers lo(0, 1, 0.0, Component::Lower);
  CHECK(centrifugal_parameter(cfg, up) ==
        angular_parameter(cfg, up, ParamSign::Minus));
  CHECK(centrifugal_parameter(cfg, lo) ==
        angular_parameter(cfg, lo, ParamSign::Plus));
}

TEST_CASE("bargmann_index: pinned values") {
  CHECK(bargmann_index(0.0) == 0.5);
  CHECK(bargmann_index(1.0) == 1.0);
  CHECK(bargmann_index(-2.0) == 1.5);
}

TEST_CASE("energy_squared: flat-space ground and first excited level") {
  CHECK(energy_squared(flat(), QuantumNumbers(0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(energy_squared(flat(), QuantumNumbers(1, 0)) ==
        doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("energy_squared: l-independent for Upper when Lambda_- >= 0") {
  const DefectConfig cfg(DefectKind::CosmicString, 0.6, 1.2, 0.8);
  for (int n_r : {0, 1, 3}) {
    const double ref = energy_squared(cfg, QuantumNumbers(n_r, 0));
    for (int l = 0; l <= 5; ++l) {
      const QuantumNumbers qn(n_r, l);
      REQUIRE(angular_parameter(cfg, qn, ParamSign::Minus) >= 0.0);
      CHECK(energy_squared(cfg, qn) == doctest::Approx(ref).epsilon(1e-14));
    }
  }
}

TEST_CASE("energy_squared: strictly increasing in n_r with step 4 m omega") {
  const DefectConfig cfg(DefectKind::MagneticCosmicString, 0.5, 1.3, 0.9,
                         0.25);
  for (Component comp : {Component::Upper, Component::Lower}) {
    for (int l : {-2, 0, 3}) {
      for (int n_r = 0; n_r < 6; ++n_r) {
        const double lo = energy_squared(cfg, QuantumNumbers(n_r, l, 0.4, comp));
        const double hi =
            energy_squared(cfg, QuantumNumbers(n_r + 1, l, 0.4, comp));
        CHECK(hi - lo ==
              doctest::Approx(4.0 * cfg.m_omega()).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("energy_branches: both signs, empty below zero") {
  CHECK_FALSE(energy_branches(-1.0).has_value());
  const auto b = energy_branches(4.0);
  REQUIRE(b.has_value());
  CHECK(b->particle == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(b->antiparticle == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("gamma_constant: hand-evaluated flat-space values") {
  CHECK(gamma_constant(flat(), QuantumNumbers(0, 0), 1.0) ==
        doctest::Approx(2.0).epsilon(1e-15));  // 0 + 2*1*1*Lambda_+ = 2
  CHECK(gamma_constant(flat(), QuantumNumbers(0, 0, 2.0), 5.0) ==
        doctest::Approx(2.0).epsilon(1e-15));  // 5 - 1 + 2 - 4
}

TEST_CASE("gamma_constant: Gamma/(4 m omega) = n_r + k over random configs") {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> ua(0.1, 1.0), um(0.3, 2.5),
      uf(-1.5, 1.5), ukz(-1.0, 1.0);
  std::uniform_int_distribution<int> ul(-5, 5), un(0, 7), ukind(0, 2);
  for (int i = 0; i < 20; ++i) {
    const auto kind = static_cast<DefectKind>(ukind(rng));
    const double flux = kind == DefectKind::CosmicString ? 0.0 : uf(rng);
    const double tor = kind == DefectKind::CosmicDislocation ? uf(rng) : 0.0;
    const DefectConfig cfg(kind, ua(rng), um(rng), um(rng), flux, tor);
    for (Component comp : {Component::Upper, Component::Lower}) {
      const QuantumNumbers qn(un(rng), ul(rng), ukz(rng), comp);
      const double e2 = energy_squared(cfg, qn);
      const double gamma = gamma_constant(cfg, qn, e2);
      const double k = bargmann_index(centrifugal_parameter(cfg, qn));
      CHECK(gamma / (4.0 * cfg.m_omega()) ==
            doctest::Approx(qn.n_r + k).epsilon(1e-12));
    }
  }
}

TEST_CASE("factorization_constants: hand-evaluated quintuples") {
  const auto f = factorization_constants(1.0, 2.0, 0.0);
  CHECK(f.mu == 1.0);
  CHECK(f.epsilon == 1.0);
  CHECK(f.lambda == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(f.delta == doctest::Approx(-2.5).epsilon(1e-15));
  CHECK(f.sigma == doctest::Approx(4.0).epsilon(1e-15));

  const auto g = factorization_constants(1.0, 0.0, 1.0);
  CHECK(g.lambda == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(g.delta == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(g.sigma == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("factorization_constants: lambda - delta = 1 always") {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> um(0.1, 3.0), ug(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const auto f = factorization_constants(um(rng), ug(rng), ug(rng));
    // delta = lambda - 1 can round once at a binade edge
    const double ulp_bound = 2.0 * std::numeric_limits<double>::epsilon() *
                             std::max({1.0, std::abs(f.lambda), std::abs(f.delta)});
    CHECK(std::abs(f.lambda - f.delta - 1.0) <= ulp_bound);
    CHECK(f.mu == f.epsilon);
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(DefectConfig(DefectKind::CosmicString, 0.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(DefectConfig(DefectKind::CosmicString, 1.2, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(DefectConfig(DefectKind::CosmicString, -0.3, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(DefectConfig(DefectKind::CosmicString, 0.5, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(DefectConfig(DefectKind::CosmicString, 0.5, 1.0, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      DefectConfig(DefectKind::CosmicString, 0.5, 1.0, 1.0, 0.0, 0.0, 0.0),
      std::invalid_argument);
  // fields irrelevant to the kind must be exactly zero
  CHECK_THROWS_AS(DefectConfig(DefectKind::CosmicString, 0.5, 1.0, 1.0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      DefectConfig(DefectKind::CosmicString, 0.5, 1.0, 1.0, 0.0, 0.1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      DefectConfig(DefectKind::MagneticCosmicString, 0.5, 1.0, 1.0, 0.3, 0.1),
      std::invalid_argument);
  CHECK_NOTHROW(
      DefectConfig(DefectKind::CosmicDislocation, 0.5, 1.0, 1.0, 0.3, 0.1));
  CHECK_THROWS_AS(QuantumNumbers(-1, 0), std::invalid_argument);
}
