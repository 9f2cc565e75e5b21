"""Hypergeometric series, unit-argument closed forms, and weak-limit sweeps."""

import cmath
import math

import mpmath
import pytest

from weaklim.complexfn import DomainError, PoleError, gamma, log_gamma
from weaklim.distrib import PROBES, omega_eps
from weaklim.hyper import (
    f_derivatives,
    f_factor,
    family_closed_form,
    family_duplication_form,
    family_weak_limit_sweep,
    gauss_sum,
    hyp2f1,
    oscillatory_limit_sweep,
)

mpmath.mp.dps = 30
SQRT_PI = math.sqrt(math.pi)


# ------------------------------------------------------------------- series

def test_series_at_zero():
    assert hyp2f1(0.3 + 1j, -2.5, 4.0, 0.0) == 1.0


def test_series_binomial_case():
    # b = c collapses the series to (1 - z)^(-a).
    got = hyp2f1(0.5, 1.5, 1.5, 0.25)
    assert abs(got - 0.75 ** -0.5) <= 1e-12


def test_series_log_case():
    # 2F1(1, 1; 2; z) = -ln(1 - z)/z.
    got = hyp2f1(1.0, 1.0, 2.0, 0.5)
    assert abs(got - 2.0 * math.log(2.0)) <= 1e-12


def test_series_symmetry_in_a_b():
    a, b, c, z = 0.3 + 0.9j, -1.2 + 0.4j, 2.5, 0.6 - 0.2j
    assert hyp2f1(a, b, c, z) == hyp2f1(b, a, c, z)


def test_series_matches_mpmath():
    for (a, b, c, z) in [
        (0.5, 0.25, 2.0, 0.9),
        (2j, 0.1 + 0.7j, 0.2 + 1.4j, 0.5),
        (-1.5, 2.0, 3.3, -0.8),
    ]:
        want = complex(mpmath.hyp2f1(a, b, c, z))
        assert abs(hyp2f1(a, b, c, z) - want) <= 1e-10 * max(1.0, abs(want))


def test_series_polynomial_termination():
    # a a negative integer terminates the series exactly.
    got = hyp2f1(-2.0, 1.0, 1.0, 0.7)
    assert abs(got - (1 - 0.7) ** 2) <= 1e-14


def test_series_rejects_c_pole():
    with pytest.raises(PoleError):
        hyp2f1(1.0, 1.0, -3.0, 0.5)


def test_series_rejects_near_unit_argument():
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, 3.0, 0.99999)


def test_series_budget_exhaustion_flagged():
    from weaklim.hyper import SeriesError
    with pytest.raises(SeriesError) as exc:
        hyp2f1(0.5, 0.25, 2.0, 0.995, max_terms=10)
    assert exc.value.terms == 10
    assert abs(exc.value.partial) > 0.0


# ------------------------------------------------------------ gauss summation

def test_gauss_sum_values():
    assert abs(gauss_sum(1.0, 1.0, 3.0) - 2.0) <= 1e-13
    assert gauss_sum(0.0, 0.5, 2.0) == 1.0 or \
        abs(gauss_sum(0.0, 0.5, 2.0) - 1.0) <= 1e-13
    want = gamma(2.0) * gamma(1.25) / (gamma(1.5) * gamma(1.75))
    assert abs(gauss_sum(0.5, 0.25, 2.0) - want) <= 1e-13 * abs(want)


def test_gauss_sum_named_precondition_failures():
    with pytest.raises(DomainError) as exc:
        gauss_sum(1.0, 3.0, 2.0)
    assert "Re(c) > Re(b)" in exc.value.condition
    with pytest.raises(DomainError) as exc:
        gauss_sum(1.0, -1.0, 2.0)
    assert "Re(b) > 0" in exc.value.condition
    with pytest.raises(DomainError) as exc:
        gauss_sum(2.0, 1.0, 2.5)
    assert "Re(c - a - b) > 0" in exc.value.condition


def test_gauss_sum_vs_series_five_sets():
    sets = [(1, 1, 3), (0.5, 0.25, 2), (2, 1, 4.5), (0.5, 1, 3),
            (1.5, 0.5, 3.25)]
    for (a, b, c) in sets:
        cf = gauss_sum(a, b, c)
        near = hyp2f1(a, b, c, 1 - 1e-3)
        nearer = hyp2f1(a, b, c, 1 - 1e-4)
        assert abs(near - cf) <= 1e-2 * abs(cf), (a, b, c)
        assert abs(nearer - cf) < abs(near - cf), (a, b, c)


# ----------------------------------------------------------------- family

def test_family_collapses_at_tau_zero():
    for eps in (1e-3, 0.05, 0.7):
        assert family_closed_form(0.0, eps) == 1.0 + 0j


def test_family_dual_route():
    # Gamma-product route against the duplication route, point by point.
    val = family_closed_form(1.0, 0.5)
    want = (gamma(1 + 2j) * gamma(0.5 - 1j)) / (gamma(1.0) * gamma(0.5 + 1j))
    assert abs(val - want) <= 1e-12 * abs(want)
    assert abs(val - family_duplication_form(1.0, 0.5)) <= 1e-12 * abs(val)


def test_family_duplication_grid():
    for eps in (1e-3, 1e-2, 0.1, 0.5):
        for tau in (0.1, 0.5, 1.0, 2.0):
            a = family_closed_form(tau, eps)
            b = family_duplication_form(tau, eps)
            assert abs(a - b) <= 1e-10 * abs(a)


def test_family_factorization_grid():
    for eps in (1e-3, 1e-2, 0.1, 0.5):
        for tau in (0.1, 0.5, 1.0, 2.0):
            lhs = family_closed_form(tau, eps)
            rhs = f_factor(eps, tau) * complex(eps, tau) * omega_eps(tau, eps)
            assert abs(lhs - rhs) <= 1e-10 * abs(lhs)


def test_family_vs_series_connection_oracle():
    # Near the unit argument the series splits into the closed-form value
    # plus a slowly vanishing (1-z)^(eps - i tau) correction; check the series
    # against the full two-term combination, then check that the correction
    # term really is the measured gap (the family converges only weakly, so
    # the gap at z = 0.999 is order |B| |1-z|^eps, not small).
    eps, tau = 0.1, 0.7
    a, b, c = 2j * tau, complex(eps, tau), complex(2 * eps, 2 * tau)
    z = 0.999
    A = family_closed_form(tau, eps)
    B = cmath.exp(log_gamma(c) + log_gamma(a + b - c)
                  - log_gamma(a) - log_gamma(b))
    series = hyp2f1(a, b, c, z)
    f1 = hyp2f1(a, b, a + b - c + 1, 1 - z)
    f2 = hyp2f1(c - a, c - b, c - a - b + 1, 1 - z)
    conn = A * f1 + B * (1 - z) ** (c - a - b) * f2
    assert abs(series - conn) <= 1e-8 * abs(series)
    gap = abs(series - A)
    envelope = abs(B * (1 - z) ** (c - a - b) * f2)
    assert 0.5 * envelope <= gap <= 1.5 * envelope + 1e-3


# ------------------------------------------------------------- f and Taylor

def test_f_factor_normalization():
    # Factorization-consistent normalization: f(eps, 0) = pi identically.
    assert abs(f_factor(0.0, 0.0) - math.pi) <= 1e-13
    assert abs(f_factor(0.37, 0.0) - math.pi) <= 1e-12


def test_f_factor_at_eps_zero_formula():
    for tau in (0.3, 1.0, 2.0):
        want = SQRT_PI * 4.0 ** (1j * tau) * gamma(0.5 + 1j * tau) \
            * gamma(1.0 - 1j * tau)
        assert abs(f_factor(0.0, tau) - want) <= 1e-12 * abs(want)


def test_f_derivative_zero_at_origin():
    fp, _ = f_derivatives(0.0, 0.0)
    assert abs(fp) <= 1e-12


def test_f_derivatives_vs_finite_differences():
    h = 1e-5
    fp, _ = f_derivatives(0.0, 1.0)
    fd = (f_factor(h, 1.0) - f_factor(-h, 1.0)) / (2 * h)
    assert abs(fp - fd) <= 1e-5 * abs(fp)

    h = 1e-4
    _, fpp = f_derivatives(0.2, 0.7)
    fd2 = (f_factor(0.2 + h, 0.7) - 2 * f_factor(0.2, 0.7)
           + f_factor(0.2 - h, 0.7)) / (h * h)
    assert abs(fpp - fd2) <= 1e-4 * abs(fpp)


def test_taylor_remainder_bound():
    # |f(eps, tau) - f(0, tau) - f'(0, tau) eps| <= (M/2) eps^2 with M a
    # sampled maximum of |f''| over (0, eps] plus 10% headroom.
    for tau in (-2.0, -0.5, 0.0, 0.7, 2.0):
        f0 = f_factor(0.0, tau)
        fp0, _ = f_derivatives(0.0, tau)
        for eps in (0.01, 0.05, 0.1):
            xs = [eps * k / 8.0 for k in range(1, 9)]
            m = 1.1 * max(abs(f_derivatives(x, tau)[1]) for x in xs)
            lhs = abs(f_factor(eps, tau) - f0 - fp0 * eps)
            floor = 1e-12 * abs(f0)  # machine noise when f is flat in eps
            assert lhs <= 0.5 * m * eps * eps + floor, (tau, eps)


# ------------------------------------------------------------------- sweeps

def test_family_weak_limit_gaussian():
    sweep = family_weak_limit_sweep(PROBES["gaussian"], (-1.0, 1.0))
    mags = sweep.magnitudes()
    assert abs(sweep.extrapolated_limit) <= 1e-3
    assert mags[-3] > mags[-2] > mags[-1]
    assert mags[6] <= 1e-2  # the eps = 1e-4 ladder entry


def test_family_weak_limit_origin_excluded():
    sweep = family_weak_limit_sweep(PROBES["const"], (1.0, 2.0))
    assert abs(sweep.extrapolated_limit) <= 1e-3
    assert sweep.magnitudes()[-1] < sweep.magnitudes()[0]


def test_family_pairing_decreases_for_catalog():
    for name, probe in PROBES.items():
        sweep = family_weak_limit_sweep(probe, (-1.0, 1.0))
        mags = sweep.magnitudes()
        assert mags[-3] > mags[-2] > mags[-1], name


def test_oscillatory_cos_gaussian_fourier():
    ladder = tuple(math.exp(-k) for k in (5.0, 10.0, 20.0))
    sweep = oscillatory_limit_sweep(PROBES["gaussian"], "cos", ladder,
                                    interval=(-5.0, 5.0))
    for (d, v, _), k in zip(sweep.points, (5.0, 10.0, 20.0)):
        oracle = SQRT_PI * math.exp(-k * k / 4.0)
        assert abs(v - oracle) <= 1e-6, k
    mags = sweep.magnitudes()
    assert mags[0] > mags[1] > mags[2]


def test_oscillatory_power_modulus_identity():
    ladder = tuple(math.exp(-k) for k in (5.0, 8.0))
    cos_s = oscillatory_limit_sweep(PROBES["gaussian"], "cos", ladder,
                                    interval=(-5.0, 5.0))
    sin_s = oscillatory_limit_sweep(PROBES["gaussian"], "sin", ladder,
                                    interval=(-5.0, 5.0))
    pow_s = oscillatory_limit_sweep(PROBES["gaussian"], "power", ladder,
                                    interval=(-5.0, 5.0))
    for (pc, ps, pp) in zip(cos_s.values, sin_s.values, pow_s.values):
        assert abs(abs(pp) - math.hypot(abs(pc), abs(ps))) <= 1e-9


def test_oscillatory_constant_probe_antiderivative():
    k = 20.0
    sweep = oscillatory_limit_sweep(PROBES["const"], "cos",
                                    (math.exp(-k),), interval=(-1.0, 1.0))
    val = sweep.values[0]
    oracle = 2.0 * math.sin(k) / k
    assert abs(val - oracle) <= 1e-9
    assert abs(val) <= 0.1


def test_oscillatory_rejects_bad_ladder():
    with pytest.raises(DomainError):
        oscillatory_limit_sweep(PROBES["gaussian"], "cos", (0.1, 0.2))
    with pytest.raises(DomainError):
        oscillatory_limit_sweep(PROBES["gaussian"], "tan", (0.1,))
