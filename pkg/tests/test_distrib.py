"""Delta approximants, regularized Beta, and the Mellin pair."""

import math

import numpy as np
import pytest

from weaklim.complexfn import DomainError
from weaklim.distrib import (
    PROBES,
    EpsilonLadder,
    _fit_sweep,
    beta,
    beta_reg,
    beta_semi_infinite,
    delta_claim_sweep,
    delta_target,
    mellin_forward_sweep,
    mellin_inverse_check,
    mellin_inverse_sweep,
    mellin_reg_forward,
    _mellin_forward_grid,
    omega_eps,
)
from weaklim.quad import QuadratureSpec, integrate_pairing

TWO_PI = 2.0 * math.pi


# ------------------------------------------------------------------- kernel

def test_omega_peak_value():
    assert abs(omega_eps(0.0, 0.01) - 100.0 / math.pi) <= 1e-10


def test_omega_unit_scale():
    assert abs(omega_eps(1.0, 1.0) - 1.0 / TWO_PI) <= 1e-15


def test_omega_rejects_nonpositive_eps():
    with pytest.raises(DomainError):
        omega_eps(0.0, 0.0)


def test_omega_normalization_by_quadrature():
    eps = 0.1
    X = 1e8
    spec = QuadratureSpec(abs_tol=1e-10, rel_tol=1e-10, max_subdivisions=4000)
    res = integrate_pairing(lambda x: np.ones_like(x),
                            lambda x: omega_eps(x, eps),
                            -X, X, spec, origin_scale=eps / 4.0)
    tail = 2.0 * math.atan2(eps, X) / math.pi
    assert abs(res.value + tail - 1.0) <= 1e-8


def test_omega_scaling_law():
    xs = np.linspace(-3.0, 3.0, 41)
    for eps in (0.5, 0.03, 1e-4):
        lhs = omega_eps(xs, eps)
        rhs = omega_eps(xs / eps, 1.0) / eps
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * np.max(np.abs(lhs))


# ------------------------------------------------------------------- probes

def test_probe_catalog_values_at_zero():
    assert PROBES["gaussian"].value_at_zero == 1.0
    assert PROBES["cauchy"].value_at_zero == 1.0
    assert abs(PROBES["bump"].value_at_zero - math.exp(-1.0)) <= 1e-15
    assert PROBES["const"].value_at_zero == 1.0
    for p in PROBES.values():
        assert abs(p(0.0) - p.value_at_zero) <= 1e-12


def test_probe_continuity_spot_check():
    for p in PROBES.values():
        assert p.max_jump(1e-4) <= p.bound


def test_probe_boundedness():
    grid = np.linspace(-8.0, 8.0, 20001)
    for p in PROBES.values():
        assert np.max(np.abs(p(grid))) <= p.bound + 1e-12


# ------------------------------------------------------------------- ladder

def test_default_ladder_shape():
    lad = EpsilonLadder.default()
    assert len(lad.values) == 9
    assert abs(lad.values[0] - 0.1) <= 1e-15
    assert abs(lad.values[-1] - 1e-5) <= 1e-18
    for a, b in zip(lad.values[:-1], lad.values[1:]):
        assert abs(b / a - 10.0 ** -0.5) <= 1e-12


def test_ladder_validation():
    with pytest.raises(DomainError):
        EpsilonLadder((0.1, 0.2))
    with pytest.raises(DomainError):
        EpsilonLadder((0.1, -0.2))


def test_fit_sweep_recovers_synthetic_power_law():
    eps = [10.0 ** (-1.0 - 0.5 * k) for k in range(9)]
    L, C, q = TWO_PI, 3.0, 1.5
    vals = [L + C * e ** q for e in eps]
    errs = [1e-14] * len(eps)
    limit, order = _fit_sweep(eps, vals, errs)
    assert abs(limit - L) <= 1e-9
    assert abs(order - q) <= 1e-3


# -------------------------------------------------------------- beta family

def test_beta_trivial_values():
    assert abs(beta(2.0, 3.0) - 1.0 / 12.0) <= 1e-13
    assert abs(beta(0.5, 0.5) - math.pi) <= 1e-12


def test_beta_semi_infinite_examples():
    assert abs(beta_semi_infinite(1.0, 1.0) - 1.0) <= 1e-11
    assert abs(beta_semi_infinite(2.0, 3.0) - 1.0 / 12.0) <= 1e-11
    a = 0.5 + 0.5j
    b = 0.5 - 0.5j
    want = beta(a, b)
    assert abs(beta_semi_infinite(a, b) - want) <= 1e-9 * abs(want)


def test_beta_semi_infinite_is_cosh_reciprocal():
    # The half-line integrand u^(a-1)/(1+u) with a = 1/2 + i/2 has the
    # reflection-formula value |Gamma(1/2 + i/2)|^2 = pi / cosh(pi/2).
    got = beta_semi_infinite(0.5 + 0.5j, 0.5 - 0.5j)
    oracle = math.pi / math.cosh(math.pi / 2.0)
    assert abs(got - oracle) <= 1e-10


def test_beta_semi_infinite_rejects_bad_domain():
    with pytest.raises(DomainError):
        beta_semi_infinite(-0.5, 1.0)


def test_beta_reg_values():
    assert abs(beta_reg(0.0, 1.0) - 1.0) <= 1e-13
    oracle = math.pi / math.cosh(math.pi)  # |Gamma(1/2 + i)|^2
    assert abs(beta_reg(1.0, 0.5) - oracle) <= 1e-12 * oracle


def test_beta_reg_conjugate_symmetry():
    for tau in (0.3, 1.7, 4.2):
        for eps in (1e-3, 0.05, 0.4):
            assert abs(beta_reg(-tau, eps) - beta_reg(tau, eps).conjugate()) \
                <= 1e-13 * abs(beta_reg(tau, eps))


def test_beta_reg_vs_quadrature_grid():
    # Euler-formula route against the direct quadrature of the regularized
    # Beta integral (log-split form), moderate eps.
    for eps in (1e-3, 1e-2, 0.1):
        for tau in (0.0, 0.5, 2.0, 5.0):
            closed = beta_reg(tau, eps)
            quad = mellin_reg_forward(tau, eps)
            assert abs(quad - closed) <= 1e-7 * max(1.0, abs(closed))
    # Spot point at full tightness.
    assert abs(mellin_reg_forward(0.5, 0.01) - beta_reg(0.5, 0.01)) <= 1e-8


# ----------------------------------------------------------- delta pairings

@pytest.fixture(scope="module")
def gaussian_interior_sweep():
    return delta_claim_sweep(PROBES["gaussian"], (-1.0, 1.0))


def test_delta_sweep_interior(gaussian_interior_sweep):
    sweep = gaussian_interior_sweep
    assert abs(sweep.extrapolated_limit - TWO_PI) <= 0.01 * TWO_PI
    assert sweep.fitted_order > 0.0


def test_delta_sweep_endpoint():
    sweep = delta_claim_sweep(PROBES["gaussian"], (0.0, 1.0))
    assert abs(sweep.extrapolated_limit - math.pi) <= 0.01 * math.pi


def test_delta_sweep_origin_excluded():
    sweep = delta_claim_sweep(PROBES["gaussian"], (1.0, 2.0))
    assert abs(sweep.extrapolated_limit) <= 0.01


def test_delta_targets():
    g = PROBES["gaussian"]
    assert delta_target(g, -1.0, 1.0) == TWO_PI
    assert delta_target(g, 0.0, 1.0) == math.pi
    assert delta_target(g, 1.0, 2.0) == 0.0
    b = PROBES["bump"]
    assert abs(delta_target(b, -1.0, 1.0) - TWO_PI * math.exp(-1.0)) <= 1e-12


def test_delta_sweep_deviations_decrease_for_all_probes():
    for name, probe in PROBES.items():
        sweep = delta_claim_sweep(probe, (-1.0, 1.0))
        target = delta_target(probe, -1.0, 1.0)
        devs = [abs(v - target) for v in sweep.values]
        tail = devs[-3:]
        assert tail[0] > tail[1] > tail[2], f"{name}: {devs}"
        assert sweep.fitted_order > 0.0, name


# ------------------------------------------------------- regularized Mellin

def test_mellin_forward_matches_closed_form():
    for tau, eps in ((0.5, 0.05), (2.0, 0.1)):
        got = mellin_reg_forward(tau, eps)
        want = beta_reg(tau, eps)
        assert abs(got - want) <= 1e-7 * max(1.0, abs(want))


def test_mellin_forward_domain():
    with pytest.raises(DomainError):
        mellin_reg_forward(0.5, 0.7)
    with pytest.raises(DomainError):
        mellin_reg_forward(0.5, 0.0)


def test_mellin_grid_matches_scalar():
    taus = np.array([0.0, 0.3, -0.9, 2.5])
    for eps in (0.2, 1e-2, 1e-4):
        grid = _mellin_forward_grid(taus, eps)
        for t, g in zip(taus, grid):
            want = mellin_reg_forward(float(t), eps)
            assert abs(g - want) <= 1e-9 * max(1.0, abs(want))


def test_mellin_forward_sweep_reaches_two_pi():
    sweep = mellin_forward_sweep(PROBES["gaussian"], (-1.0, 1.0))
    assert abs(sweep.extrapolated_limit - TWO_PI) <= 0.01 * TWO_PI


# --------------------------------------------------------- mollified inverse

def test_mellin_inverse_at_t_one():
    for eps in (0.5, 1e-2, 1e-4):
        assert abs(mellin_inverse_check(1.0, eps) - 1.0) <= 1e-9


def test_mellin_inverse_characteristic_value():
    got = mellin_inverse_check(math.e, 0.1)
    assert abs(got - math.exp(-0.1)) <= 1e-8


def test_mellin_inverse_matches_closed_form_along_ladder():
    for eps in EpsilonLadder.default().values:
        got = mellin_inverse_check(math.e, eps)
        assert abs(got - math.exp(-eps)) <= 1e-8, eps


def test_mellin_inverse_sweep_limit_is_one():
    sweep = mellin_inverse_sweep(math.e)
    assert abs(sweep.extrapolated_limit - 1.0) <= 1e-4
    assert abs(mellin_inverse_check(math.e, 1e-4) - 1.0) <= 1e-4


def test_mellin_inverse_domain():
    with pytest.raises(DomainError):
        mellin_inverse_check(-1.0, 0.1)
    with pytest.raises(DomainError):
        mellin_inverse_check(2.0, 0.0)
