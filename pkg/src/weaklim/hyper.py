"""Gauss hypergeometric series and its imaginary-parameter family.

Evaluates 2F1 by the power series inside the unit disk, the classical
closed form at unit argument, and the one-parameter family

    a = 2 i tau,  b = eps + i tau,  c = 2 eps + 2 i tau

whose unit-argument value has the gamma closed form

    Gamma(2 eps + 2 i tau) Gamma(eps - i tau)
    -----------------------------------------
      Gamma(2 eps)         Gamma(eps + i tau)

and factors as f(eps, tau) * (eps + i tau) * omega_eps(tau) through the
duplication formula.  The weak-limit sweeps pair the family (or its
oscillatory unit-circle relatives) against probe functions along a
decreasing regularization ladder; every limit here is a weak one, so the
pairings are the objects of interest, never pointwise values.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .complexfn import (
    DomainError,
    PoleError,
    _pole_index,
    digamma,
    log_gamma,
    trigamma,
)
from .distrib import (
    EpsilonLadder,
    PairingSweepResult,
    Probe,
    _sweep_result,
)
from .quad import QuadratureSpec, integrate_pairing

__all__ = [
    "hyp2f1",
    "gauss_sum",
    "family_closed_form",
    "family_duplication_form",
    "f_factor",
    "f_derivatives",
    "family_weak_limit_sweep",
    "oscillatory_limit_sweep",
]

_LN2 = math.log(2.0)
_LN4 = math.log(4.0)
_SQRT_PI = math.sqrt(math.pi)
_MAX_ABS_Z = 1.0 - 1e-4
_CONSECUTIVE_SMALL = 50


class SeriesError(RuntimeError):
    """Series did not settle within the term budget; carries the partial sum."""

    def __init__(self, message: str, partial: complex, terms: int):
        self.partial = partial
        self.terms = terms
        super().__init__(f"{message} (partial sum {partial!r} after {terms} terms)")


def hyp2f1(a, b, c, z, *, rel_tol: float = 1e-13,
           max_terms: int = 2_000_000) -> complex:
    """2F1(a, b; c; z) by the power series, symmetric in a and b.

    Valid for |z| < 1; the series is summed until 50 consecutive terms fall
    below rel_tol times the partial sum.  Arguments with |z| above
    1 - 1e-4 are rejected: convergence there is too slow for the budget and
    the unit-argument closed forms take over.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    z = complex(z)
    if _pole_index(c) is not None:
        raise PoleError(c, _pole_index(c))
    if abs(z) > _MAX_ABS_Z:
        raise DomainError("|z| <= 1 - 1e-4",
                          f"|z| = {abs(z):.6f} is too close to the unit circle")
    if z == 0:
        return 1.0 + 0j
    total = 1.0 + 0j
    term = 1.0 + 0j
    small = 0
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if abs(term) <= rel_tol * abs(total):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                return total
        else:
            small = 0
    raise SeriesError("hypergeometric series did not converge", total, max_terms)


def gauss_sum(a, b, c) -> complex:
    """Unit-argument closed form Gamma(c)Gamma(c-a-b) / Gamma(c-a)Gamma(c-b).

    Preconditions Re(c) > Re(b) > 0 and Re(c - a - b) > 0 are enforced and
    the failed condition is named in the error.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    if not c.real > b.real:
        raise DomainError("Re(c) > Re(b)")
    if not b.real > 0.0:
        raise DomainError("Re(b) > 0")
    if not (c - a - b).real > 0.0:
        raise DomainError("Re(c - a - b) > 0")
    return cmath.exp(log_gamma(c) + log_gamma(c - a - b)
                     - log_gamma(c - a) - log_gamma(c - b))


# ------------------------------------------------------ the imaginary family

def family_closed_form(tau: float, eps: float) -> complex:
    """Unit-argument value of the family; equals 1 identically at tau = 0."""
    if not eps > 0.0:
        raise DomainError("eps > 0")
    t = float(tau)
    if t == 0.0:
        return 1.0 + 0j  # the four gamma factors cancel pairwise
    return cmath.exp(
        log_gamma(complex(2 * eps, 2 * t)) + log_gamma(complex(eps, -t))
        - log_gamma(complex(2 * eps)) - log_gamma(complex(eps, t))
    )


def family_duplication_form(tau: float, eps: float) -> complex:
    """The same value routed through the duplication formula."""
    if not eps > 0.0:
        raise DomainError("eps > 0")
    zp = complex(eps, float(tau))
    return cmath.exp(
        (2.0 * zp - 1.0) * _LN2 - 0.5 * math.log(math.pi)
        + log_gamma(zp + 0.5) + log_gamma(zp.conjugate())
        - log_gamma(complex(2.0 * eps))
    )


def f_factor(eps: float, tau: float) -> complex:
    """Analytic prefactor of the family factorization.

        f(eps, tau) = sqrt(pi) 4^(eps + i tau)
                      Gamma(eps + i tau + 1/2) Gamma(eps - i tau + 1)
                      / Gamma(2 eps + 1)

    Smooth at eps = 0 (small negative eps is admitted so finite differences
    can straddle the origin); f(eps, 0) = pi for every eps.
    """
    zp = complex(eps, float(tau))
    return cmath.exp(
        0.5 * math.log(math.pi) + 2.0 * zp * _LN2
        + log_gamma(zp + 0.5) + log_gamma(zp.conjugate() + 1.0)
        - log_gamma(complex(2.0 * eps + 1.0))
    )


def f_derivatives(eps: float, tau: float) -> tuple[complex, complex]:
    """First and second eps-derivatives of f from digamma/trigamma data.

    With g = psi(eps + i tau + 1/2) + psi(eps - i tau + 1) - 2 psi(2 eps + 1)
    + ln 4, the derivatives are f' = f g and f'' = f (g^2 + g'), where
    g' = psi'(eps + i tau + 1/2) + psi'(eps - i tau + 1) - 4 psi'(2 eps + 1).
    """
    zp = complex(eps, float(tau))
    f = f_factor(eps, tau)
    g = (digamma(zp + 0.5) + digamma(zp.conjugate() + 1.0)
         - 2.0 * digamma(complex(2.0 * eps + 1.0)) + _LN4)
    gp = (trigamma(zp + 0.5) + trigamma(zp.conjugate() + 1.0)
          - 4.0 * trigamma(complex(2.0 * eps + 1.0)))
    return f * g, f * (g * g + gp)


def family_weak_limit_sweep(probe: Probe, interval: tuple[float, float],
                            ladder: EpsilonLadder | None = None,
                            spec: QuadratureSpec | None = None) -> PairingSweepResult:
    """Pair the family against a probe along the ladder; the limit is 0."""
    ladder = ladder or EpsilonLadder.default()
    spec = spec or QuadratureSpec(abs_tol=1e-11, rel_tol=1e-9)
    a, b = interval
    params, values, errs = [], [], []
    for eps in ladder.values:
        kern = lambda ts, e=eps: np.array(
            [family_closed_form(float(t), e) for t in ts])
        res = integrate_pairing(probe, kern, a, b, spec, origin_scale=eps / 4.0)
        params.append(eps)
        values.append(res.value)
        errs.append(res.error_estimate)
    return _sweep_result(params, values, errs)


def oscillatory_limit_sweep(probe: Probe, kind: str,
                            z_ladder: tuple[float, ...],
                            interval: tuple[float, float] | None = None,
                            spec: QuadratureSpec | None = None) -> PairingSweepResult:
    """Pairings of cos/sin/power oscillations as |1 - z| shrinks.

    For each ladder value d = |1 - z| the pairing integrates
    phi(tau) * cos(tau ln d) (resp. sin, resp. d^(-i tau)) over the interval;
    the magnitudes fall to 0 at Riemann-Lebesgue speed in ln d.
    """
    if kind not in ("cos", "sin", "power"):
        raise DomainError("kind in {cos, sin, power}")
    vals = tuple(float(d) for d in z_ladder)
    if any(not d > 0.0 for d in vals) or \
            any(vals[i + 1] >= vals[i] for i in range(len(vals) - 1)):
        raise DomainError("z ladder strictly decreasing toward 0 in |1 - z|")
    spec = spec or QuadratureSpec(abs_tol=1e-11, rel_tol=1e-9)
    a, b = interval if interval else probe.support_hint
    params, values, errs = [], [], []
    for d in vals:
        L = math.log(d)
        if kind == "cos":
            kern = lambda ts, L=L: np.cos(L * ts)
        elif kind == "sin":
            kern = lambda ts, L=L: np.sin(L * ts)
        else:
            kern = lambda ts, L=L: np.exp(-1j * L * ts)
        res = integrate_pairing(probe, kern, a, b, spec,
                                osc_period=2.0 * math.pi / max(abs(L), 1e-12))
        params.append(d)
        values.append(res.value)
        errs.append(res.error_estimate)
    return _sweep_result(params, values, errs)
