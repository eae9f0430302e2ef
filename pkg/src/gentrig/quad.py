"""Double-exponential quadrature and the integrals F_{p,q}, G_{p,q}.

    F_{p,q}(y) = int_0^y (1 - t^q)^(-1/p) dt,   0 <= y < 1
    G_{p,q}(y) = int_0^y (1 + t^q)^(-1/p) dt,   y >= 0

Both are evaluated with a tanh-sinh rule.  Every integral is arranged so the
(possible) endpoint singularity sits at the left end ``a = 0``, where the
abscissae ``a + d`` are exact in floating point.  Near the far end of the
principal branch the integrals are written as "half-period minus tail":

* F, p > 1:      F(y) = pi_{p,q}/2 - int_0^{1-y} (1-(1-u)^q)^(-1/p) du
* F, p <= 1:     F(y) = F(1/2) + int_{ln(1-y)}^{ln 1/2} e^s (1-(1-e^s)^q)^(-1/p) ds
* G, r > 1:      G(y) = pi_{r,q}/2 - int_0^{1/y} s^(q/p-2) (1+s^q)^(-1/p) ds
* G, r <= 1:     G(y) = G(1) + int_0^{ln y} e^s (1+e^{qs})^(-1/p) ds

In both tail integrals the leading endpoint power is split off and integrated
exactly; only the milder remainder goes through the quadrature rule.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .errors import ConvergenceError, DomainError
from .params import ParamPair, half_period, log_beta, validate

__all__ = [
    "QuadResult",
    "integrate_singular",
    "integral_F",
    "integral_G",
    "default_tol",
    "DEFAULT_TOL",
]

DEFAULT_TOL = 1e-13
MAX_LEVEL = 12
_MIN_LEVEL = 3
# abscissa range in the t-domain; beyond it 1-|x| underflows
_T_MAX = 6.2
_HALF_PI = 0.5 * math.pi
_EPS = 2.220446049250313e-16
# 12 terms leave a truncation below 1e-24 for u < 1e-2
_SERIES_TERMS = 12


class QuadResult(NamedTuple):
    value: float
    err_est: float


def default_tol() -> float:
    """Quadrature tolerance, overridable through ``GENTRIG_TOL``."""
    env = os.environ.get("GENTRIG_TOL")
    if env:
        try:
            tol = float(env)
        except ValueError:
            raise DomainError(f"GENTRIG_TOL is not a number: {env!r}") from None
        if not (tol > 0 and math.isfinite(tol)):
            raise DomainError(f"GENTRIG_TOL must be positive, got {env!r}")
        return tol
    return DEFAULT_TOL


@lru_cache(maxsize=None)
def _level_nodes(level: int):
    """Nodes new at ``level``: (x, 1-|x|, weight) for t >= 0, step 2^-level.

    Level 0 holds t = 0, 1, 2, ...; level k >= 1 holds the odd multiples of
    2^-k.  Weights exclude the step factor h.
    """
    h = 2.0 ** -level
    if level == 0:
        t = np.arange(0.0, _T_MAX + h / 2, h)
    else:
        t = np.arange(h, _T_MAX + h / 2, 2 * h)
    v = _HALF_PI * np.sinh(t)
    e = np.exp(-2.0 * v)
    comp = 2.0 * e / (1.0 + e)  # 1 - tanh(v) without cancellation
    x = 1.0 - comp
    w = _HALF_PI * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2  # (pi/2) cosh t / cosh^2 v
    keep = (comp > 0) & (w > 0)
    return t[keep], x[keep], comp[keep], w[keep]


def _level_sum(f, a, b, level, with_distance):
    half = 0.5 * (b - a)
    t, x, comp, w = _level_nodes(level)
    # left branch (x < 0): distance to a is half*comp
    da_l = half * comp
    db_l = half * (2.0 - comp)
    # right branch (x > 0): distance to b is half*comp
    da_r = db_l
    db_r = da_l
    if level == 0:
        # t = 0 is its own mirror image
        da_l, db_l, w_l = da_l[1:], db_l[1:], w[1:]
    else:
        w_l = w
    pts_l = a + da_l
    pts_r = b - db_r
    if with_distance:
        vals_l = f(pts_l, da_l, db_l)
        vals_r = f(pts_r, da_r, db_r)
    else:
        # abscissae that rounded onto an endpoint carry no usable information
        vals_l = np.where(pts_l > a, f(np.where(pts_l > a, pts_l, a + half)), 0.0)
        vals_r = np.where(pts_r < b, f(np.where(pts_r < b, pts_r, a + half)), 0.0)
    total = np.dot(w_l, vals_l) + np.dot(w, vals_r)
    return total * half


def integrate_singular(
    f: Callable,
    a: float,
    b: float,
    tol: float | None = None,
    *,
    with_distance: bool = False,
    max_level: int = MAX_LEVEL,
) -> QuadResult:
    """Tanh-sinh quadrature of ``f`` over ``(a, b)``.

    ``f`` is called with numpy arrays of abscissae.  With
    ``with_distance=True`` it is called as ``f(t, t - a, b - t)`` where the
    two distances are computed without cancellation; integrands singular at
    an endpoint other than 0 should use them, since ``b - t`` below one ulp
    of ``b`` is not representable.  Without distances, abscissae that round
    onto an endpoint are skipped.

    The step is halved until two consecutive levels agree to
    ``tol * max(1, |I|)``; that difference is reported as ``err_est``.
    """
    if tol is None:
        tol = default_tol()
    if not (tol > 0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not (math.isfinite(a) and math.isfinite(b)) or not (a < b):
        raise DomainError(f"need finite a < b, got a={a!r}, b={b!r}")

    h = 1.0
    raw = _level_sum(f, a, b, 0, with_distance)
    estimate = h * raw
    prev = estimate
    for level in range(1, max_level + 1):
        h *= 0.5
        raw += _level_sum(f, a, b, level, with_distance)
        estimate = h * raw
        diff = abs(estimate - prev)
        if not math.isfinite(estimate):
            raise ConvergenceError("integrand produced a non-finite value")
        if level >= _MIN_LEVEL and diff <= tol * max(1.0, abs(estimate)):
            return QuadResult(float(estimate), float(diff))
        prev = estimate
    raise ConvergenceError(
        f"tanh-sinh did not reach tol={tol:g} by level {max_level} (last change {diff:.3g})"
    )


# -- integrands --------------------------------------------------------------
# All written in log form so that huge or tiny intermediate powers never
# overflow and 1 - t^q keeps its relative accuracy.


def _signed_exp(log_mag, factor):
    # exp(log_mag) * factor without forming a huge exp(log_mag)
    with np.errstate(divide="ignore"):
        return np.sign(factor) * np.exp(log_mag + np.log(np.abs(factor)))


def _f_head(p, q):
    # (1 - t^q)^(-1/p) on [0, 1/2]
    return lambda t: np.exp(-np.log1p(-t ** q) / p)


def _log_ratio(q, u):
    # ln(q u / (1 - (1-u)^q)), which is ~ (q-1) u / 2 for small u
    lam = q * np.log1p(-u)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.log(q * u) - np.log(-np.expm1(lam))
    # with L = q ln(1-u): q u / (1 - e^L) = [u / -ln(1-u)] [L / (e^L - 1)]
    a = np.zeros_like(u)  # -ln(1-u)/u - 1
    b = np.zeros_like(lam)  # (e^L-1)/L - 1
    for k in range(_SERIES_TERMS, 0, -1):
        a = u * (1.0 / (k + 1) + a)
        b = lam / (k + 1) * (1.0 + b)
    small = -np.log1p(a) - np.log1p(b)
    return np.where(u < 1e-2, small, direct)


def _f_tail(p, q):
    # (1 - (1-u)^q)^(-1/p) - (q u)^(-1/p): the singular part is integrated
    # in closed form, since for p near 1 most of its mass sits below the
    # smallest abscissa
    def g(u):
        lg = np.log(q) + np.log(u)
        hm1 = np.expm1(_log_ratio(q, u) / p)
        return _signed_exp(-lg / p, hm1)

    return g


def _f_logtail(p, q):
    # e^s (1 - (1 - e^s)^q)^(-1/p)
    def h(s):
        u = np.exp(s)
        return np.exp(s - np.log(-np.expm1(q * np.log1p(-u))) / p)

    return h


def _g_head(p, q):
    return lambda t: np.exp(-np.log1p(t ** q) / p)


def _g_tail(p, q):
    # s^(q/p - 2) ((1 + s^q)^(-1/p) - 1) on [0, 1/y]; the bare power is
    # integrated in closed form as for F
    e = q / p - 2.0

    def k(s):
        hm1 = np.expm1(-np.log1p(s ** q) / p)
        return _signed_exp(e * np.log(s), hm1)

    return k


def _g_logtail(p, q):
    # e^s (1 + e^{qs})^(-1/p)
    def h(s):
        return np.exp(s - np.logaddexp(0.0, q * s) / p)

    return h


# -- building blocks reused by the inversion layer ------------------------


def _pair(pair) -> ParamPair:
    if isinstance(pair, ParamPair):
        return pair
    return validate(*pair)


def f_head(pair: ParamPair, y: float, tol=None) -> QuadResult:
    if y == 0:
        return QuadResult(0.0, 0.0)
    return integrate_singular(_f_head(pair.p, pair.q), 0.0, y, tol)


def f_tail(pair: ParamPair, w: float, tol=None) -> QuadResult:
    """int_{1-w}^1 (1-t^q)^(-1/p) dt for p > 1."""
    if w == 0:
        return QuadResult(0.0, 0.0)
    p, q = pair.p, pair.q
    a = (p - 1.0) / p  # exact difference near p = 1
    bare = math.exp(a * math.log(w) - math.log(q) / p) / a
    rest = integrate_singular(_f_tail(p, q), 0.0, w, tol)
    return QuadResult(bare + rest.value, rest.err_est + 2 * _EPS * bare)


def f_logtail(pair: ParamPair, log_w: float, tol=None) -> QuadResult:
    """int_{1/2}^{1-w} (1-t^q)^(-1/p) dt with w = exp(log_w) <= 1/2."""
    top = -math.log(2.0)
    if log_w >= top:
        return QuadResult(0.0, 0.0)
    return integrate_singular(_f_logtail(pair.p, pair.q), log_w, top, tol)


def g_head(pair: ParamPair, y: float, tol=None) -> QuadResult:
    if y == 0:
        return QuadResult(0.0, 0.0)
    return integrate_singular(_g_head(pair.p, pair.q), 0.0, y, tol)


def g_tail(pair: ParamPair, z: float, tol=None) -> QuadResult:
    """int_{1/z}^inf (1+t^q)^(-1/p) dt for p < q."""
    if z == 0:
        return QuadResult(0.0, 0.0)
    a = (pair.q - pair.p) / pair.p  # exact difference near p = q
    bare = math.exp(a * math.log(z)) / a
    rest = integrate_singular(_g_tail(pair.p, pair.q), 0.0, z, tol)
    return QuadResult(bare + rest.value, rest.err_est + 2 * _EPS * bare)


def g_logtail(pair: ParamPair, log_y: float, tol=None) -> QuadResult:
    """int_1^y (1+t^q)^(-1/p) dt with y = exp(log_y) >= 1."""
    if log_y <= 0:
        return QuadResult(0.0, 0.0)
    return integrate_singular(_g_logtail(pair.p, pair.q), 0.0, log_y, tol)


@lru_cache(maxsize=4096)
def f_half(pair: ParamPair) -> QuadResult:
    """F_{p,q}(1/2), the switch point between head and tail forms."""
    return f_head(pair, 0.5)


@lru_cache(maxsize=4096)
def g_one(pair: ParamPair) -> QuadResult:
    """G_{p,q}(1)."""
    return g_head(pair, 1.0)


@lru_cache(maxsize=4096)
def _half(pair: ParamPair) -> float:
    return half_period(pair).value


@lru_cache(maxsize=4096)
@lru_cache(maxsize=4096)
def _dual_half(pair: ParamPair) -> float:
    """pi_{r,q}/2 for the dual index r of ``pair``.

    1 - 1/r equals (q - p)/(pq); forming it from the rounded r instead loses
    about eps/(r - 1) relative accuracy when r is close to 1.
    """
    p, q = pair.p, pair.q
    if p >= q:
        return math.inf
    return math.exp(log_beta((q - p) / (p * q), 1.0 / q)) / q


# -- public integrals ------------------------------------------------------


def integral_F(pair, y: float, tol: float | None = None) -> QuadResult:
    """F_{p,q}(y) for 0 <= y < 1.

    Absolute error is at most ``max(tol, tol*F)`` (tol defaults to 1e-13)
    up to the accuracy of the Lanczos half-period used on the tail branch.
    """
    pair = _pair(pair)
    if not (0.0 <= y < 1.0):
        raise DomainError(f"F_{{p,q}}(y) needs 0 <= y < 1, got y={y!r}")
    if y <= 0.5:
        return f_head(pair, y, tol)
    w = 1.0 - y  # exact for y >= 1/2
    if pair.p > 1.0:
        tail = f_tail(pair, w, tol)
        return QuadResult(_half(pair) - tail.value, tail.err_est + 4e-16 * _half(pair))
    head = f_half(pair)
    body = f_logtail(pair, math.log(w), tol)
    return QuadResult(head.value + body.value, head.err_est + body.err_est)


def integral_G(pair, y: float, tol: float | None = None) -> QuadResult:
    """G_{p,q}(y) for finite y >= 0.

    When the dual index r exceeds 1 the value stays below pi_{r,q}/2.
    """
    pair = _pair(pair)
    if not (0.0 <= y < math.inf):
        raise DomainError(f"G_{{p,q}}(y) needs finite y >= 0, got y={y!r}")
    if y <= 1.0:
        return g_head(pair, y, tol)
    if pair.p < pair.q:
        hr = _dual_half(pair)
        tail = g_tail(pair, 1.0 / y, tol)
        return QuadResult(hr - tail.value, tail.err_est + 4e-16 * hr)
    head = g_one(pair)
    body = g_logtail(pair, math.log(y), tol)
    return QuadResult(head.value + body.value, head.err_est + body.err_est)
