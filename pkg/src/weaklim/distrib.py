"""Delta approximants, weak pairings, and the regularized Beta/Mellin pair.

The delta approximant is the scaled Cauchy kernel

    omega_eps(x) = (1/pi) * eps / (eps^2 + x^2),

which integrates to 1 for every eps > 0 and converges weakly to the Dirac
delta.  The singular Beta value B(i tau, -i tau) is realized as the limit of
B(eps + i tau, eps - i tau) along a decreasing epsilon ladder, paired against
continuous bounded test functions; the extrapolated pairing limit targets
2 pi phi(0), pi phi(0), or 0 depending on where the origin sits in the
pairing interval.

The regularized Mellin transform of f(t) = 1 on the imaginary axis equals
the same Beta value; here it is evaluated by honest quadrature (after the
exact change of variables u = -ln t, split at t = 1/2, with an analytic
geometric-series tail) and cross-checked against the Euler closed form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .complexfn import DomainError, log_gamma
from .quad import (
    DEFAULT_SPEC,
    IntegralResult,
    QuadratureSpec,
    integrate_pairing,
    integrate_semi_infinite,
)

__all__ = [
    "Probe",
    "PROBES",
    "omega_eps",
    "EpsilonLadder",
    "PairingSweepResult",
    "beta",
    "beta_semi_infinite",
    "beta_reg",
    "delta_target",
    "delta_claim_sweep",
    "mellin_reg_forward",
    "mellin_forward_sweep",
    "mellin_inverse_check",
    "mellin_inverse_sweep",
]

TWO_PI = 2.0 * math.pi


# ------------------------------------------------------------------- probes

@dataclass(frozen=True)
class Probe:
    """Named continuous bounded test function for weak pairings."""

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    value_at_zero: float
    support_hint: tuple[float, float]
    bound: float = 1.0

    def __call__(self, tau):
        return self.fn(np.asarray(tau, dtype=float))

    def max_jump(self, step: float = 1e-4) -> float:
        """Largest jump over dense sampling of the support (continuity check)."""
        lo, hi = self.support_hint
        n = min(int((hi - lo) / step) + 2, 2_000_001)
        grid = np.linspace(lo, hi, n)
        vals = self.fn(grid)
        return float(np.max(np.abs(np.diff(vals))))


def _gaussian(t):
    return np.exp(-t * t)


def _cauchy(t):
    return 1.0 / (1.0 + t * t)


def _bump(t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0 - 1e-12
    with np.errstate(divide="ignore", over="ignore"):
        out[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    return out


def _const(t):
    return np.ones_like(np.asarray(t, dtype=float))


PROBES = {
    "gaussian": Probe("gaussian", _gaussian, 1.0, (-8.0, 8.0)),
    "cauchy": Probe("cauchy", _cauchy, 1.0, (-8.0, 8.0)),
    "bump": Probe("bump", _bump, math.exp(-1.0), (-1.0, 1.0)),
    "const": Probe("const", _const, 1.0, (-8.0, 8.0)),
}


# ------------------------------------------------------------ delta kernel

def omega_eps(x, eps: float):
    """Scaled Cauchy kernel (1/pi) eps / (eps^2 + x^2); unit mass for eps > 0."""
    if not eps > 0.0:
        raise DomainError("eps > 0")
    x = np.asarray(x, dtype=float)
    out = (eps / math.pi) / (eps * eps + x * x)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class EpsilonLadder:
    """Strictly decreasing positive regularization parameters."""

    values: tuple[float, ...]

    def __post_init__(self):
        v = self.values
        if len(v) == 0 or any(not x > 0.0 for x in v):
            raise DomainError("ladder values positive")
        if any(v[i + 1] >= v[i] for i in range(len(v) - 1)):
            raise DomainError("ladder strictly decreasing")

    @classmethod
    def default(cls) -> "EpsilonLadder":
        # Geometric from 1e-1 down to 1e-5 with ratio 10^(1/2).
        return cls(tuple(10.0 ** (-1.0 - 0.5 * k) for k in range(9)))


@dataclass(frozen=True)
class PairingSweepResult:
    """Pairing values along a ladder plus the extrapolated limit."""

    points: tuple[tuple[float, complex, float], ...]
    extrapolated_limit: complex
    fitted_order: float

    @property
    def params(self):
        return [p for p, _, _ in self.points]

    @property
    def values(self):
        return [v for _, v, _ in self.points]

    def magnitudes(self):
        return [abs(v) for _, v, _ in self.points]


def _lsq_slope(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    den = sum((x - mx) ** 2 for x in xs)
    if den == 0.0:
        return 0.0, my
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den
    return slope, my - slope * mx


def _fit_sweep(params, values, errs) -> tuple[complex, float]:
    """Fit value = L + C * eps^q on the trailing points; return (L, order)."""
    n = len(values)
    use = min(4, n)
    e = params[-use:]
    v = values[-use:]
    scale = max(abs(x) for x in v) or 1.0
    floor = max(2.0 * max(errs[-use:], default=0.0), 1e-13 * scale, 1e-300)
    diffs = [v[i] - v[-1] for i in range(use - 1)]
    usable = [i for i in range(use - 1) if abs(diffs[i]) > floor]
    if len(usable) < 2:
        return v[-1], float("nan")

    q = 1.0
    for _ in range(12):
        xs, ys = [], []
        for i in usable:
            damp = 1.0 - (e[-1] / e[i]) ** q
            if damp <= 0.0:
                damp = 1e-30
            xs.append(math.log(e[i]))
            ys.append(math.log(abs(diffs[i])) - math.log(damp))
        q_new, _ = _lsq_slope(xs, ys)
        q_new = min(max(q_new, 1e-3), 30.0)
        if abs(q_new - q) < 1e-10:
            q = q_new
            break
        q = q_new

    c_est = [diffs[i] / (e[i] ** q - e[-1] ** q) for i in usable]
    c = sum(c_est) / len(c_est)
    limit = v[-1] - c * e[-1] ** q

    xs, ys = [], []
    for i in range(use):
        dev = abs(v[i] - limit)
        if dev > 0.3 * floor:
            xs.append(math.log(e[i]))
            ys.append(math.log(dev))
    order = _lsq_slope(xs, ys)[0] if len(xs) >= 2 else q
    return limit, order


def _sweep_result(params, values, errs) -> PairingSweepResult:
    limit, order = _fit_sweep(list(params), list(values), list(errs))
    pts = tuple((float(p), complex(v), float(er))
                for p, v, er in zip(params, values, errs))
    return PairingSweepResult(pts, limit, order)


# ---------------------------------------------------------------- beta family

def beta(alpha, beta_arg) -> complex:
    """Euler formula B = Gamma(a) Gamma(b) / Gamma(a+b); poles propagate."""
    a = complex(alpha)
    b = complex(beta_arg)
    return cmath.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))


def beta_semi_infinite(alpha, beta_arg, spec: QuadratureSpec | None = None) -> complex:
    """B(a, b) through the half-line representation of the Beta integral.

    The integral over u in [0, inf) of u^(a-1) (1+u)^(-a-b) is split at u = 1
    and each half is mapped by u = exp(+-v) onto an exponentially decaying
    integrand, so both pieces satisfy the semi-infinite quadrature contract.
    """
    a = complex(alpha)
    b = complex(beta_arg)
    if not a.real > 0.0:
        raise DomainError("Re(alpha) > 0")
    if not b.real > 0.0:
        raise DomainError("Re(beta) > 0")
    spec = spec or DEFAULT_SPEC
    s = a + b

    def lower(v):  # u = e^{-v}, u in (0, 1]
        ev = np.exp(-v)
        return np.exp(-a * v) * (1.0 + ev) ** (-s)

    def upper(v):  # u = e^{+v}, u in [1, inf)
        ev = np.exp(-v)
        return np.exp(-b * v) * (1.0 + ev) ** (-s)

    per = lambda im: (TWO_PI / abs(im)) if abs(im) > 1e-12 else None
    r0 = integrate_semi_infinite(lower, a.real, spec, osc_period=per(a.imag))
    r1 = integrate_semi_infinite(upper, b.real, spec, osc_period=per(b.imag))
    return r0.value + r1.value


def beta_reg(tau: float, eps: float) -> complex:
    """B(eps + i tau, eps - i tau) through the Euler closed form."""
    if not eps > 0.0:
        raise DomainError("eps > 0")
    zp = complex(eps, tau)
    zm = complex(eps, -tau)
    return cmath.exp(log_gamma(zp) + log_gamma(zm) - log_gamma(complex(2.0 * eps)))


# ----------------------------------------------------------- delta pairings

def delta_target(probe: Probe, a: float, b: float) -> float:
    """Expected pairing limit: 2 pi phi(0), pi phi(0), or 0 by origin position."""
    if a < 0.0 < b:
        return TWO_PI * probe.value_at_zero
    if a == 0.0 or b == 0.0:
        return math.pi * probe.value_at_zero
    return 0.0


def delta_claim_sweep(probe: Probe, interval: tuple[float, float],
                      ladder: EpsilonLadder | None = None,
                      spec: QuadratureSpec | None = None) -> PairingSweepResult:
    """Pair the regularized Beta kernel against a probe along the ladder."""
    ladder = ladder or EpsilonLadder.default()
    spec = spec or QuadratureSpec(abs_tol=1e-11, rel_tol=1e-9)
    a, b = interval
    params, values, errs = [], [], []
    for eps in ladder.values:
        kern = lambda ts, e=eps: np.array([beta_reg(float(t), e) for t in ts])
        res = integrate_pairing(probe, kern, a, b, spec, origin_scale=eps / 4.0)
        params.append(eps)
        values.append(res.value)
        errs.append(res.error_estimate)
    return _sweep_result(params, values, errs)


# ------------------------------------------------------- regularized Mellin

_MELLIN_CUT = math.log(2.0)
_MELLIN_FAR = 36.0


def _mellin_tail(a: complex, s: complex, u0: float, kmax: int = 40) -> complex:
    """Exact tail of the half integral beyond u0 via the binomial series.

    integral over [u0, inf) of exp(-a u) (1 - e^(-u))^(s-1) du with
    (1-x)^(s-1) = sum b_k x^k; converges term by term since e^(-u0) < 1.
    """
    acc = 0j
    bk = 1.0 + 0j
    for k in range(kmax):
        term = bk * cmath.exp(-(a + k) * u0) / (a + k)
        acc += term
        if abs(term) <= 1e-18 * max(abs(acc), 1e-30):
            break
        bk = bk * (k + 1 - s) / (k + 1)
    return acc


def _mellin_half(sigma: float, eps: float, spec: QuadratureSpec) -> IntegralResult:
    """Half of the Beta integral in log variables: u in [ln 2, inf)."""
    a = complex(eps, sigma)
    s = complex(eps, -sigma)

    def f(u):
        return np.exp(-a * u) * (1.0 - np.exp(-u)) ** (s - 1.0)

    per = (TWO_PI / abs(sigma)) if abs(sigma) > 1e-12 else None
    # Shift to [0, far) so the semi-infinite machinery applies unchanged; the
    # integrand decays only like e^(-eps u), so the far cutoff is fixed and
    # the remaining tail is added analytically below.
    g = lambda v: f(v + _MELLIN_CUT)
    res = integrate_semi_infinite(
        g, max(eps, 1e-12), spec, osc_period=per,
        force_truncation=_MELLIN_FAR - _MELLIN_CUT, scale_abs_tol=False,
    )
    tail = _mellin_tail(a, s, _MELLIN_FAR)
    return IntegralResult(res.value + tail, res.error_estimate,
                          res.evaluations, _MELLIN_FAR)


def mellin_reg_forward(tau: float, eps: float,
                       spec: QuadratureSpec | None = None) -> complex:
    """Regularized Mellin value of f(t) = 1 at height tau, by quadrature.

    Evaluates the Beta integral form obtained from the half-line transform by
    the substitution u = t/(1-t): the two halves around t = 1/2 are mapped to
    log variables and integrated; the far tail is summed in closed form.
    Agrees with beta_reg(tau, eps) to combined tolerances.
    """
    if not 0.0 < eps < 0.5:
        raise DomainError("eps in (0, 1/2)")
    spec = spec or QuadratureSpec(abs_tol=1e-12, rel_tol=1e-11)
    h1 = _mellin_half(float(tau), eps, spec)
    h2 = _mellin_half(-float(tau), eps, spec)
    return h1.value + h2.value


def _mellin_forward_grid(taus: np.ndarray, eps: float) -> np.ndarray:
    """Vectorized forward Mellin values on a fixed composite panel rule.

    Used by the pairing sweep, where the kernel is evaluated at whole arrays
    of tau nodes; validated against the adaptive scalar route in the tests.
    """
    taus = np.asarray(taus, dtype=float)
    freq = float(np.max(np.abs(taus))) if taus.size else 1.0
    width = min(0.7, TWO_PI / (4.0 * (freq + 0.5)))
    n_panels = int(math.ceil((_MELLIN_FAR - _MELLIN_CUT) / width))
    edges = np.linspace(_MELLIN_CUT, _MELLIN_FAR, n_panels + 1)
    from .quad import _X_HI, _W_HI  # composite rule shares the panel nodes

    mids = 0.5 * (edges[1:] + edges[:-1])
    halves = 0.5 * (edges[1:] - edges[:-1])
    u = (mids[:, None] + halves[:, None] * _X_HI[None, :]).ravel()
    w = (halves[:, None] * _W_HI[None, :]).ravel()
    base = -np.expm1(-u)  # 1 - e^-u, accurate near u ~ ln 2

    out = np.empty(taus.shape, dtype=complex)
    for i, t in enumerate(taus):
        total = 0j
        for sigma in (t, -t):
            A = complex(eps, sigma)
            S = complex(eps, -sigma)
            vals = np.exp(-A * u) * base ** (S - 1.0)
            total += complex(vals @ w) + _mellin_tail(A, S, _MELLIN_FAR)
        out[i] = total
    return out


def mellin_forward_sweep(probe: Probe, interval: tuple[float, float],
                         ladder: EpsilonLadder | None = None,
                         spec: QuadratureSpec | None = None) -> PairingSweepResult:
    """Pair the quadrature-computed Mellin values against a probe."""
    ladder = ladder or EpsilonLadder.default()
    spec = spec or QuadratureSpec(abs_tol=1e-9, rel_tol=1e-8)
    a, b = interval
    params, values, errs = [], [], []
    for eps in ladder.values:
        kern = lambda ts, e=eps: _mellin_forward_grid(ts, e)
        res = integrate_pairing(probe, kern, a, b, spec, origin_scale=eps / 4.0)
        params.append(eps)
        values.append(res.value)
        errs.append(res.error_estimate)
    return _sweep_result(params, values, errs)


# --------------------------------------------------------- mollified inverse

def _cauchy_kernel_derivs(x: float, eps: float):
    c = eps / math.pi
    d = eps * eps + x * x
    g = c / d
    gp = -2.0 * c * x / d ** 2
    gpp = 2.0 * c * (3.0 * x * x - eps * eps) / d ** 3
    return g, gp, gpp


def mellin_inverse_check(t: float, eps: float,
                         spec: QuadratureSpec | None = None) -> complex:
    """Mollified inverse-transform value: integral of t^(-ix) omega_eps(x).

    Quadrature over a finite window plus an oscillatory tail correction from
    two integrations by parts; the closed form is exp(-eps |ln t|), and the
    returned value matches it to ~1e-9, tending to 1 as eps -> 0+.
    """
    if not t > 0.0:
        raise DomainError("t > 0")
    if not eps > 0.0:
        raise DomainError("eps > 0")
    spec = spec or QuadratureSpec(abs_tol=1e-10, rel_tol=1e-10,
                                  max_subdivisions=4000)
    L = abs(math.log(t))
    kernel = lambda x: (eps / math.pi) / (eps * eps + x * x)

    if L < 1e-300:
        # Integrand reduces to the kernel itself; exact arctan tail.
        X = max(50.0 * eps, 1.0)
        res = integrate_pairing(lambda x: np.ones_like(x), kernel, 0.0, X,
                                spec, origin_scale=eps / 4.0)
        tail = math.atan2(eps, X) / math.pi
        return complex(2.0 * (res.value.real + tail), 0.0)

    budget = 2.5e-10
    X = max(
        20.0 * eps,
        (6.0 * eps / (math.pi * L ** 3 * budget)) ** 0.25,
        6.0 * TWO_PI / L,
    )
    f = lambda x: np.cos(L * x) * (eps / math.pi) / (eps * eps + x * x)
    res = integrate_pairing(lambda x: np.ones_like(x), f, 0.0, X, spec,
                            origin_scale=eps / 4.0, osc_period=TWO_PI / L)
    g, gp, gpp = _cauchy_kernel_derivs(X, eps)
    sin_lx = math.sin(L * X)
    cos_lx = math.cos(L * X)
    tail = -g * sin_lx / L - gp * cos_lx / L ** 2 + gpp * sin_lx / L ** 3
    return complex(2.0 * (res.value.real + tail), 0.0)


def mellin_inverse_sweep(t: float, ladder: EpsilonLadder | None = None,
                         spec: QuadratureSpec | None = None) -> PairingSweepResult:
    """Mollified inverse values along the ladder; the limit targets 1."""
    ladder = ladder or EpsilonLadder.default()
    params, values, errs = [], [], []
    for eps in ladder.values:
        v = mellin_inverse_check(t, eps, spec)
        params.append(eps)
        values.append(v)
        errs.append(1e-9)
    return _sweep_result(params, values, errs)
