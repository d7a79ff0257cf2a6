"""Smoke test of the python bindings: one call through every module layer.
Plain asserts so it runs under ctest without extra dependencies."""

import cmath
import math

import dirosc


def check_spectrum():
    cfg = dirosc.DefectConfig(dirosc.DefectKind.CosmicString, 1.0, 1.0, 1.0)
    ground = dirosc.QuantumNumbers(0, 0)
    assert dirosc.energy_squared(cfg, ground) == 1.0
    assert dirosc.energy_branches(4.0) == (2.0, -2.0)
    assert dirosc.energy_branches(-1.0) is None

    lam = dirosc.centrifugal_parameter(cfg, ground)
    assert dirosc.bargmann_index(lam) == 0.5

    excited = dirosc.QuantumNumbers(1, 0)
    e2 = dirosc.energy_squared(cfg, excited)
    gamma = dirosc.gamma_constant(cfg, excited, e2)
    assert abs(gamma / 4.0 - (1 + 0.5)) < 1e-12

    mu, delta, epsilon, lam_c, sigma = dirosc.factorization_constants(1.0, 2.0, 0.0)
    assert mu == epsilon == 1.0
    assert lam_c - delta == 1.0
    assert sigma == 4.0

    try:
        dirosc.DefectConfig(dirosc.DefectKind.CosmicString, 2.0, 1.0, 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("alpha > 1 must be rejected")


def check_su11():
    rep = dirosc.build_rep(1.0, 16)
    assert rep.k0[0, 0] == 1.0
    assert abs(rep.kp[1, 0] - math.sqrt(2.0)) < 1e-15
    r1, r2 = dirosc.commutator_residuals(rep)
    assert r1 < 1e-12 and r2 < 1e-12
    assert dirosc.casimir_eigenvalue_check(rep) < 1e-12

    param = dirosc.CoherentParam(0.3 + 0.0j)
    assert abs(param.zeta() - cmath.tanh(0.3)) < 1e-15
    disp = dirosc.displacement_direct(dirosc.build_rep(0.5, 64), param)
    assert disp.truncation_ok
    assert disp.reliable_cols >= 1

    coeff = dirosc.perelomov_coefficients(1.0, 0.5 + 0.0j, 200)
    assert abs(sum(abs(c) ** 2 for c in coeff) - 1.0) < 1e-12


def check_radial():
    mode = dirosc.SturmianMode(0, 0.5, 1.0, dirosc.RadialForm.F)
    expect = math.sqrt(2.0) * math.exp(-0.5) * 1.0
    assert abs(dirosc.sturmian_eval(mode, 1.0) - expect) < 1e-14
    assert abs(dirosc.overlap(mode, mode) - 1.0) < 1e-8

    cfg = dirosc.DefectConfig(
        dirosc.DefectKind.CosmicDislocation, 0.9, 1.3, 0.9, 0.25, 0.7
    )
    qn = dirosc.QuantumNumbers(2, -1, 0.3, dirosc.Component.Lower)
    grid = dirosc.default_rho_grid(cfg.m_omega())
    assert dirosc.ode_residual(cfg, qn, grid) < 1e-9

    up, down = dirosc.ladder_action_check(dirosc.SturmianMode(0, 1.0, 1.0, dirosc.RadialForm.F))
    assert abs(up - math.sqrt(2.0)) < 1e-6
    assert abs(down) < 1e-6


def check_coherent():
    xi = 0.4 + 0.2j
    closed = dirosc.coherent_closed(xi, 1.0, 1.0, 1.2)
    value, terms, converged = dirosc.coherent_series(xi, 1.0, 1.0, 1.2)
    assert converged and terms > 1
    assert abs(value - closed) < 1e-10 * abs(closed)
    assert abs(dirosc.coherent_norm(xi, 1.0, 1.0) - 1.0) < 1e-6

    period = dirosc.coherent_period(1.0)
    now, xi_tau, phase = dirosc.coherent_evolved(xi, 1.0, 1.0, 1.2, 0.3)
    later, _, _ = dirosc.coherent_evolved(xi, 1.0, 1.0, 1.2, 0.3 + period)
    assert abs(abs(later) - abs(now)) < 1e-10
    assert abs(abs(xi_tau) - abs(xi)) < 1e-14
    assert abs(abs(phase) - 1.0) < 1e-14

    assert abs(dirosc.coherent_overlap(xi, xi, 1.0) - 1.0) < 1e-12


def check_verification():
    report = dirosc.run_verification(seed=12345)
    assert report.all_pass()
    names = [c.name for c in report.checks]
    assert "su11_casimir" in names
    assert all(c.pass_ for c in report.checks)

    injected = dirosc.run_verification(seed=12345, casimir_injection=1e-9)
    assert not injected.all_pass()
    failing = [c.name for c in injected.checks if not c.pass_]
    assert failing == ["su11_casimir"]

    text = dirosc.render_report_csv(report)
    assert text.splitlines()[-1] == "# overall: pass"
    assert '"all_pass": true' in dirosc.render_report_json(report)


def main():
    check_spectrum()
    check_su11()
    check_radial()
    check_coherent()
    check_verification()
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
