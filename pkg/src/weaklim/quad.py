"""Adaptive complex-valued quadrature on embedded Gauss-Legendre panels.

Three entry points cover the integral shapes used by the rest of the
library:

    integrate_finite         finite interval, algebraic endpoint behavior
    integrate_semi_infinite  [0, inf) with exponential decay and an explicit,
                             recorded truncation point
    integrate_pairing        test function against a kernel family, with
                             forced panel refinement around the origin peak

Each panel is evaluated with a 21-point Gauss-Legendre rule; the error
estimate is the difference against the embedded 10-point rule.  The panel
with the worst estimate is bisected until the total estimate meets
max(abs_tol, rel_tol * |value|) or the subdivision budget is exhausted.

Integrands receive a numpy array of abscissae and must return an array of
values (real or complex).  Everything here is pure and deterministic;
independent integrations may run concurrently.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .complexfn import DomainError

__all__ = [
    "QuadratureSpec",
    "IntegralResult",
    "EndpointExponents",
    "ConvergenceError",
    "integrate_finite",
    "integrate_semi_infinite",
    "integrate_pairing",
]

_X_LO, _W_LO = np.polynomial.legendre.leggauss(10)
_X_HI, _W_HI = np.polynomial.legendre.leggauss(21)
_NODES = np.concatenate([_X_HI, _X_LO])


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance budget for one integration."""

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    truncation_tail_tol: float = 1e-12

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise DomainError("abs_tol > 0")
        if not self.rel_tol > 0.0:
            raise DomainError("rel_tol > 0")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions >= 1")
        if not self.truncation_tail_tol > 0.0:
            raise DomainError("truncation_tail_tol > 0")


DEFAULT_SPEC = QuadratureSpec()


@dataclass
class IntegralResult:
    """Value plus diagnostics of one integration."""

    value: complex
    error_estimate: float
    evaluations: int
    truncation_point: float | None = None


@dataclass(frozen=True)
class EndpointExponents:
    """Algebraic endpoint behavior f ~ t^(left_p - 1), (b - t)^(right_p - 1)."""

    left_p: complex = 1.0 + 0j
    right_p: complex = 1.0 + 0j

    def __post_init__(self):
        if not complex(self.left_p).real > 0.0:
            raise DomainError("Re(left_p) > 0")
        if not complex(self.right_p).real > 0.0:
            raise DomainError("Re(right_p) > 0")


class ConvergenceError(RuntimeError):
    """Subdivision budget exhausted; carries the best estimate so far."""

    def __init__(self, message: str, best: IntegralResult):
        self.best = best
        super().__init__(f"{message} (best estimate {best.value!r}, "
                         f"error estimate {best.error_estimate:.3e})")


def _panel(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    ys = np.asarray(f(mid + half * _NODES), dtype=complex)
    hi = half * (_W_HI @ ys[:21])
    lo = half * (_W_LO @ ys[21:])
    return complex(hi), abs(hi - lo)


def _adaptive(f, breakpoints, spec: QuadratureSpec, *, scale_abs_tol=False):
    """Worst-panel bisection over the given initial partition."""
    heap = []
    seq = 0
    evals = 0
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        if not b > a:
            continue
        val, err = _panel(f, a, b)
        evals += 31
        heapq.heappush(heap, (-err, seq, a, b, val, err))
        seq += 1
    if not heap:
        raise DomainError("non-empty interval")

    abs_tol = spec.abs_tol
    if scale_abs_tol:
        # Tie the absolute floor to the integrand's own scale so strongly
        # decaying kernels still meet the relative contract.
        scale = sum(abs(item[4]) for item in heap)
        abs_tol = min(abs_tol, max(scale * spec.rel_tol, 1e-300))

    total = sum(item[4] for item in heap)
    err_total = sum(item[5] for item in heap)
    splits = 0
    while err_total > max(abs_tol, spec.rel_tol * abs(total)):
        if splits >= spec.max_subdivisions:
            raise ConvergenceError(
                "quadrature did not converge within max_subdivisions",
                IntegralResult(total, err_total, evals),
            )
        _, _, a, b, val, err = heapq.heappop(heap)
        m = 0.5 * (a + b)
        v1, e1 = _panel(f, a, m)
        v2, e2 = _panel(f, m, b)
        evals += 62
        heapq.heappush(heap, (-e1, seq, a, m, v1, e1))
        seq += 1
        heapq.heappush(heap, (-e2, seq, m, b, v2, e2))
        seq += 1
        total += v1 + v2 - val
        err_total += e1 + e2 - err
        splits += 1
        if splits % 256 == 0:
            # Kill accumulation drift in the running sums.
            total = sum(item[4] for item in heap)
            err_total = sum(item[5] for item in heap)
    total = sum(item[4] for item in heap)
    err_total = sum(item[5] for item in heap)
    return IntegralResult(total, err_total, evals)


def _geometric_points(outer: float, inner: float, ratio: float = 4.0):
    """Decreasing scales outer, outer/ratio, ... down to inner."""
    pts = []
    s = outer
    while s > inner:
        pts.append(s)
        s /= ratio
    return pts


def _substituted_left(f, a: float, width: float, p: complex):
    """Integrand over s in [0, width^r] realizing t = a + s^(1/r), r = Re p.

    Absorbs the t^(p-1) endpoint factor: the transformed integrand behaves
    like s^(p/r - 1), whose real exponent part is 1.
    """
    r = p.real
    inv = 1.0 / r

    def g(s):
        t = a + s ** inv
        return f(t) * inv * s ** (inv - 1.0)

    return g, width ** r


def integrate_finite(f, a: float, b: float, exps: EndpointExponents | None = None,
                     spec: QuadratureSpec | None = None, *,
                     left_edge=None, right_edge=None) -> IntegralResult:
    """Integrate f over [a, b], absorbing algebraic endpoint singularities.

    ``exps`` declares the endpoint exponents; an end with Re p < 1 is removed
    by the variable change t = a + s^(1/Re p) (mirrored on the right) before
    the adaptive pass.  Ends with Re p >= 1 but a nonzero imaginary exponent
    only get geometric panel clustering, since the integrand is bounded there
    and merely oscillates in log scale.

    A strongly singular end pushes evaluations to distances far below the
    floating-point spacing of the endpoint itself, where ``f(b - u)`` would
    see ``b`` exactly and cancel catastrophically.  ``left_edge`` and
    ``right_edge``, when given, are distance-parameterized integrands
    ``g(u) = f(endpoint -+ u)`` evaluated stably by the caller; they are used
    instead of ``f`` on the substituted end pieces.
    """
    spec = spec or DEFAULT_SPEC
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError("a < b finite")

    pieces = []
    mid = 0.5 * (a + b)
    left_p = complex(exps.left_p) if exps else 1.0 + 0j
    right_p = complex(exps.right_p) if exps else 1.0 + 0j
    src_left = left_edge if left_edge is not None else (lambda u: f(a + u))
    src_right = right_edge if right_edge is not None else (lambda u: f(b - u))

    def seed(lo, hi, cluster_at_lo):
        # Geometric clustering toward a delicate end helps the adaptive pass
        # resolve log-scale oscillation early.
        if not cluster_at_lo:
            return [lo, hi]
        width = hi - lo
        pts = [min(lo + s, hi) for s in reversed(_geometric_points(width, width * 1e-8))]
        return sorted({lo, hi, *pts})

    # Left end, in distance coordinates u = t - a.
    if left_p.real < 1.0 - 1e-12:
        g, s_hi = _substituted_left(src_left, 0.0, mid - a, left_p)
        pieces.append((g, seed(0.0, s_hi, True)))
    elif abs(left_p.imag) > 1e-12:
        pieces.append((src_left, seed(0.0, mid - a, True)))
    else:
        pieces.append((f, [a, mid]))

    # Right end, mirrored onto distances u = b - t.
    if right_p.real < 1.0 - 1e-12:
        g, s_hi = _substituted_left(src_right, 0.0, b - mid, right_p)
        pieces.append((g, seed(0.0, s_hi, True)))
    elif abs(right_p.imag) > 1e-12:
        pieces.append((src_right, seed(0.0, b - mid, True)))
    else:
        pieces.append((f, [mid, b]))

    sub_spec = QuadratureSpec(
        abs_tol=0.5 * spec.abs_tol,
        rel_tol=0.5 * spec.rel_tol,
        max_subdivisions=spec.max_subdivisions,
        truncation_tail_tol=spec.truncation_tail_tol,
    )
    value = 0j
    err = 0.0
    evals = 0
    for g, pts in pieces:
        res = _adaptive(g, pts, sub_spec)
        value += res.value
        err += res.error_estimate
        evals += res.evaluations
    return IntegralResult(value, err, evals)


def _truncation_point(f, decay_rate: float, tail_tol: float) -> float:
    """Truncation T with C exp(-decay_rate T) / decay_rate <= tail_tol.

    The envelope constant C is estimated from samples of log|f| + rate*t, so
    plateaus before the asymptotic decay sets in are accounted for.  All
    bookkeeping is done in log space to survive strongly decaying kernels.
    """
    samples = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 24.0, 32.0]
    samples += [k / decay_rate for k in (1.0, 2.0, 4.0, 8.0)]
    samples = sorted({min(s, 1e4) for s in samples})
    log_c = -math.inf
    t_last_seen = 0.0
    for t in samples:
        v = complex(np.asarray(f(np.array([t])), dtype=complex)[0])
        m = abs(v)
        if m > 0.0:
            log_c = max(log_c, math.log(m) + decay_rate * t)
            t_last_seen = t
    if not math.isfinite(log_c):
        return 1.0  # integrand identically ~0 on samples; any T works
    t_tail = (log_c - math.log(decay_rate * tail_tol)) / decay_rate
    return max(t_tail, t_last_seen + 2.0 / decay_rate)


def integrate_semi_infinite(f, decay_rate: float, spec: QuadratureSpec | None = None,
                            *, osc_period: float | None = None,
                            scale_abs_tol: bool = True,
                            force_truncation: float | None = None) -> IntegralResult:
    """Integrate f over [0, inf) for |f(t)| <= C exp(-decay_rate t).

    The domain is truncated at T such that the envelope tail bound drops
    below ``spec.truncation_tail_tol``; T is recorded on the result.  When
    ``osc_period`` is given, initial panels are no wider than half a period.
    """
    spec = spec or DEFAULT_SPEC
    if not decay_rate > 0.0:
        raise DomainError("decay_rate > 0")
    T = force_truncation if force_truncation is not None else \
        _truncation_point(f, decay_rate, spec.truncation_tail_tol)

    pts = [0.0] + sorted(set(_geometric_points(T, min(0.25 / decay_rate, T / 4.0)))) + [T]
    pts = sorted(set(pts))
    if osc_period is not None and osc_period > 0.0:
        width = 0.5 * osc_period
        need = int(T / width) + 1
        if need > spec.max_subdivisions // 2:
            raise ConvergenceError(
                "oscillation too fast for the subdivision budget",
                IntegralResult(0j, math.inf, 0),
            )
        pts = sorted(set(pts) | {i * width for i in range(1, need)})
    res = _adaptive(f, pts, spec, scale_abs_tol=scale_abs_tol)
    res.truncation_point = T
    return res


def integrate_pairing(phi, kernel, a: float, b: float,
                      spec: QuadratureSpec | None = None, *,
                      origin_scale: float | None = None,
                      osc_period: float | None = None) -> IntegralResult:
    """Integrate phi(tau) * kernel(tau) over the finite interval [a, b].

    ``phi`` may be a Probe (its ``fn`` is used) or any vectorized callable.
    When the origin lies in [a, b], panels are forcibly clustered around it
    down to ``origin_scale`` so that a delta-approximant peak of that width
    cannot slip between coarse nodes.
    """
    spec = spec or DEFAULT_SPEC
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError("finite interval [a, b]")
    phi_fn = getattr(phi, "fn", phi)

    def g(ts):
        return np.asarray(phi_fn(ts), dtype=complex) * np.asarray(kernel(ts), dtype=complex)

    pts = {a, b}
    if a <= 0.0 <= b:
        inner = origin_scale if origin_scale else 1e-6 * (b - a)
        for s in _geometric_points(b - a, inner):
            if a < s < b:
                pts.add(s)
            if a < -s < b:
                pts.add(-s)
        if a < 0.0 < b:
            pts.add(0.0)
    if osc_period is not None and osc_period > 0.0:
        width = 0.5 * osc_period
        n = int((b - a) / width) + 1
        if n <= spec.max_subdivisions // 2:
            pts |= {a + i * width for i in range(1, n)}
    return _adaptive(g, sorted(pts), spec)
