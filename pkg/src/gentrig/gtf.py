"""Generalized trigonometric functions on the principal branch.

``sin_{p,q}`` is the inverse of ``F_{p,q}``, found by Newton's method with a
bisection safeguard.  Three working variables are used:

* ``y`` itself while ``x <= F(1/2)``;
* ``ln(1-y)`` with the residual ``ln T(1-y) - ln(pi_{p,q}/2 - x)`` for p > 1,
  T being the tail integral over ``[y, 1]``;
* ``ln(1-y)`` with ``ln(x - F(1/2)) - ln J(1-y)`` for p <= 1, J being the
  integral over ``[1/2, y]``.

Working with ``1-y`` keeps the relative accuracy of ``cos_{p,q}`` (and of
everything divided by it) where ``sin_{p,q}`` rounds to 1.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import NamedTuple

from . import quad
from ._roots import newton_bisect
from .errors import DomainError, OverflowSignal
from .params import ParamPair, validate

__all__ = ["FnValue", "sin_pq", "cos_pq", "tam_pq", "tan_pq", "asin_pq"]

_EPS = 2.220446049250313e-16
_LOG_HALF = -math.log(2.0)
# keeps 1-y a normal float; below it sin_{p,q} is reported as exactly 1
_LOG_TINY = -700.0


class FnValue(NamedTuple):
    value: float
    err_est: float


class _State(NamedTuple):
    y: float
    log_cpow: float  # ln(cos^p) = ln(1 - y^q)
    err: float  # absolute, of y
    err_x: float  # of the solve, measured in x


def as_pair(pair) -> ParamPair:
    if isinstance(pair, ParamPair):
        return pair
    return validate(*pair)


def _check_x(pair, x, end, what):
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"{what} needs a finite argument, got x={x!r}")
    if x < 0:
        raise DomainError(f"{what} is defined on [0, {end!r}) only, got x={x!r}")
    if x >= end:
        raise DomainError(
            f"x={x!r} is outside the principal branch [0, {end!r}) of {what} "
            f"for (p, q) = ({pair.p!r}, {pair.q!r})"
        )


def _log_cpow_from_comp(q, w):
    # ln(1 - (1-w)^q)
    return math.log(-math.expm1(q * math.log1p(-w)))


def _solve_head(pair, x):
    p, q = pair.p, pair.q

    def fun(y):
        r = quad.f_head(pair, y)
        return r.value - x, math.exp(-math.log1p(-y ** q) / p), r.err_est

    y0 = x - x ** (q + 1) / (p * (q + 1))
    y, res, qerr = newton_bisect(fun, 0.0, 0.5, y0)
    log_cpow = math.log1p(-y ** q)
    return y, log_cpow, abs(res) + qerr


def _solve_tail(pair, x):
    """p > 1: solve T(w) = pi_{p,q}/2 - x for w = 1 - y on a log scale."""
    p, q = pair.p, pair.q
    half = quad._half(pair)
    d = half - x

    def fun(lam):
        w = math.exp(lam)
        t = quad.f_tail(pair, w)
        log_t = math.log(t.value)
        slope = math.exp(lam - _log_cpow_from_comp(q, w) / p - log_t)
        return log_t - math.log(d), slope, (t, w)

    # T(w) ~ q^(-1/p) w^(1-1/p) / (1-1/p) as w -> 0
    lam0 = (p / (p - 1.0)) * (math.log(d) + math.log1p(-1.0 / p) + math.log(q) / p)
    if lam0 < _LOG_TINY + 100.0 and fun(_LOG_TINY)[0] >= 0:
        return 1.0, -math.inf, 0.0
    lam, res, (t, w) = newton_bisect(fun, _LOG_TINY, _LOG_HALF, lam0, atol=4 * _EPS)
    err_x = abs(t.value - d) + t.err_est + 4 * _EPS * half
    return 1.0 - w, _log_cpow_from_comp(q, w), err_x


def _solve_body(pair, x):
    """p <= 1: solve J(w) = x - F(1/2) for w = 1 - y on a log scale."""
    p, q = pair.p, pair.q
    head = quad.f_half(pair)
    e = x - head.value

    def fun(lam):
        w = math.exp(lam)
        j = quad.f_logtail(pair, lam)
        log_j = math.log(j.value)
        slope = math.exp(lam - _log_cpow_from_comp(q, w) / p - log_j)
        return math.log(e) - log_j, slope, (j, w)

    if p == 1.0:
        lam_lo = _LOG_TINY
        lam0 = _LOG_HALF - q * e
    else:
        a = (1.0 - p) / p
        # J grows like w^(1-1/p); stop before it overflows
        lam_lo = max(_LOG_TINY, -600.0 / a)
        lam0 = math.log(e * a * q ** (1.0 / p) + 2.0 ** a) / (-a)
    lam0 = min(max(lam0, lam_lo), _LOG_HALF - 1e-3)
    if lam0 < lam_lo + 100.0 and fun(lam_lo)[0] >= 0:
        return 1.0, -math.inf, 0.0
    lam, res, (j, w) = newton_bisect(fun, lam_lo, _LOG_HALF, lam0, atol=4 * _EPS)
    err_x = abs(j.value - e) + j.err_est + head.err_est
    return 1.0 - w, _log_cpow_from_comp(q, w), err_x


@lru_cache(maxsize=65536)
def _sin_state(pair: ParamPair, x: float) -> _State:
    end = quad._half(pair)
    _check_x(pair, x, end, "sin_{p,q}")
    if x == 0:
        return _State(0.0, 0.0, 0.0, 0.0)
    if x <= quad.f_half(pair).value:
        y, log_cpow, err_x = _solve_head(pair, x)
    elif pair.p > 1.0:
        y, log_cpow, err_x = _solve_tail(pair, x)
    else:
        y, log_cpow, err_x = _solve_body(pair, x)
    cos = math.exp(log_cpow / pair.p)
    return _State(y, log_cpow, err_x * cos + _EPS * y, err_x)


def sin_state(pair, x) -> _State:
    """``(sin, ln cos^p, err)`` at ``x``; shared by the other evaluators."""
    return _sin_state(as_pair(pair), float(x))


def sin_pq(pair, x: float) -> FnValue:
    """sin_{p,q}(x) = F_{p,q}^{-1}(x) for 0 <= x < pi_{p,q}/2."""
    s = sin_state(pair, x)
    return FnValue(s.y, s.err)


def cos_rel_err(pair, s) -> float:
    """Relative error of cos_{p,q} as formed from ``s.log_cpow``.

    cos comes from ln(1 - y^q), not from the rounded y, so only the solve
    error in x matters: d ln cos / dx = -(q/p) y^(q-1) cos^(1-p).
    """
    p, q = pair.p, pair.q
    base = 2 * _EPS * (1.0 + abs(s.log_cpow) / p)
    if s.y == 0 or s.err_x == 0:
        return base
    log_slope = (q - 1.0) * math.log(s.y) + (1.0 - p) / p * s.log_cpow
    return q / p * math.exp(min(log_slope, 700.0)) * s.err_x + base


def _cos_err(pair, s, cos):
    return cos * cos_rel_err(pair, s)


def cos_pq(pair, x: float) -> FnValue:
    """cos_{p,q}(x) = (1 - sin_{p,q}^q x)^(1/p), the derivative of sin_{p,q}."""
    pair = as_pair(pair)
    s = sin_state(pair, x)
    if s.log_cpow == -math.inf:
        # 1 - y was cut off below e^_LOG_TINY, and 1 - y^q <= max(1, q) (1 - y)
        return FnValue(0.0, math.exp((_LOG_TINY + math.log(max(1.0, pair.q))) / pair.p))
    cos = math.exp(s.log_cpow / pair.p)
    return FnValue(cos, _cos_err(pair, s, cos))


def _ratio(pair, s, expo, name):
    # sin / cos^expo with cos^expo = exp(expo/p * ln cos^p)
    if s.y == 0:
        return FnValue(0.0, 0.0)
    if s.log_cpow == -math.inf:
        raise OverflowSignal(f"{name}: cos_{{p,q}} underflows to 0")
    log_val = math.log(s.y) - expo / pair.p * s.log_cpow
    if log_val > 709.0:
        raise OverflowSignal(f"{name} overflows (log value {log_val:.1f})")
    val = math.exp(log_val)
    rel = s.err / s.y + expo * cos_rel_err(pair, s)
    return FnValue(val, val * (rel + 2 * _EPS))


def tam_pq(pair, x: float) -> FnValue:
    """tam_{p,q}(x) = sin_{p,q}(x) / cos_{p,q}^(p/q)(x)."""
    pair = as_pair(pair)
    return _ratio(pair, sin_state(pair, x), pair.p / pair.q, "tam_{p,q}")


def tan_pq(pair, x: float) -> FnValue:
    """tan_{p,q}(x) = sin_{p,q}(x) / cos_{p,q}(x)."""
    pair = as_pair(pair)
    return _ratio(pair, sin_state(pair, x), 1.0, "tan_{p,q}")


def asin_pq(pair, y: float) -> FnValue:
    """Inverse of sin_{p,q}: F_{p,q}(y) for 0 <= y < 1."""
    r = quad.integral_F(as_pair(pair), y)
    return FnValue(r.value, r.err_est)
