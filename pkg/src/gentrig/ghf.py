"""Generalized hyperbolic functions on ``[0, pi_{r,q}/2)``.

``sinh_{p,q}`` inverts ``G_{p,q}``.  For ``x <= G(1)`` the unknown is ``y``
itself.  Past that point the unknown moves to a log scale: ``ln(1/y)`` when
the branch is bounded (r > 1, i.e. p < q), x is past the middle of it and
the tail integral beyond ``y`` must match ``pi_{r,q}/2 - x``; ``ln y`` with
an expanding bracket otherwise.

The duality formulas give a second route to the same values; it lives in
:mod:`gentrig.duality` and is deliberately not used here.
"""

from __future__ import annotations

import math
import sys
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import quad
from ._roots import newton_bisect
from .errors import OverflowSignal
from .gtf import FnValue, _check_x, as_pair
from .params import ParamPair

__all__ = ["sinh_pq", "cosh_pq", "tamh_pq", "tanh_pq", "asinh_pq"]

_EPS = 2.220446049250313e-16
_LOG_HUGE = 700.0
_LOG_MAX = math.log(sys.float_info.max)


class _HState(NamedTuple):
    y: float
    log_y: float
    log_cpow: float  # ln(cosh^p) = ln(1 + y^q)
    err: float


def _solve_head(pair, x):
    p, q = pair.p, pair.q

    def fun(y):
        r = quad.g_head(pair, y)
        return r.value - x, math.exp(-math.log1p(y ** q) / p), r.err_est

    y0 = x + x ** (q + 1) / (p * (q + 1))
    y, res, qerr = newton_bisect(fun, 0.0, 1.0, y0)
    return y, math.log(y), abs(res) + qerr


def _solve_bounded(pair, x):
    """p < q: solve int_y^inf = pi_{r,q}/2 - x for lam = ln(1/y)."""
    p, q = pair.p, pair.q
    hr = quad._dual_half(pair)
    d = hr - x
    b = (q - p) / p

    def fun(lam):
        k = quad.g_tail(pair, math.exp(lam))
        log_k = math.log(k.value)
        slope = math.exp(b * lam - math.log1p(math.exp(q * lam)) / p - log_k)
        return log_k - math.log(d), slope, k

    # tail ~ z^b / b for z = 1/y -> 0
    lam0 = min((math.log(d) + math.log(b)) / b, -1e-3)
    if lam0 < -_LOG_HUGE + 100.0 and fun(-_LOG_HUGE)[0] >= 0:
        raise OverflowSignal(f"sinh_{{p,q}}({x!r}) exceeds exp({_LOG_HUGE:g})")
    lam0 = max(lam0, -_LOG_HUGE)
    lam, res, k = newton_bisect(fun, -_LOG_HUGE, 0.0, lam0, atol=4 * _EPS)
    err_x = abs(k.value - d) + k.err_est + 4 * _EPS * hr
    return math.exp(-lam), -lam, err_x


def _solve_unbounded(pair, x):
    """Solve G(1) + int_0^{ln y} = x for tau = ln y."""
    p, q = pair.p, pair.q
    head = quad.g_one(pair)
    e = x - head.value

    def fun(tau):
        body = quad.g_logtail(pair, tau)
        slope = math.exp(tau - np.logaddexp(0.0, q * tau) / p)
        return body.value - e, slope, body

    beta = (p - q) / p
    if beta > 1e-3:
        tau0 = math.log1p(e * beta) / beta
    else:
        tau0 = e * 2.0 ** (1.0 / p)
    tau0 = min(tau0, _LOG_MAX)
    hi = max(2.0 * tau0, 1.0)
    while fun(hi)[0] < 0:
        if hi >= _LOG_MAX:
            raise OverflowSignal(f"sinh_{{p,q}}({x!r}) overflows")
        hi = min(2.0 * hi, 2.0 * _LOG_MAX)
    tau, res, body = newton_bisect(fun, 0.0, hi, tau0, atol=4 * _EPS)
    if tau >= _LOG_MAX:
        raise OverflowSignal(f"sinh_{{p,q}}({x!r}) overflows")
    err_x = abs(res) + body.err_est + head.err_est
    return math.exp(tau), tau, err_x


@lru_cache(maxsize=65536)
def _sinh_state(pair: ParamPair, x: float) -> _HState:
    end = quad._dual_half(pair)
    _check_x(pair, x, end, "sinh_{p,q}")
    if x == 0:
        return _HState(0.0, -math.inf, 0.0, 0.0)
    if x <= quad.g_one(pair).value:
        y, log_y, err_x = _solve_head(pair, x)
    elif pair.p < pair.q and 2.0 * x > end:
        # the tail form only pays off near the end: it resolves x to about
        # one ulp of the end, which is useless when the end is huge
        y, log_y, err_x = _solve_bounded(pair, x)
    else:
        y, log_y, err_x = _solve_unbounded(pair, x)
    log_cpow = float(np.logaddexp(0.0, pair.q * log_y))
    cosh_log = log_cpow / pair.p
    return _HState(y, log_y, log_cpow, err_x * math.exp(min(cosh_log, 709.0)) + _EPS * y)


def sinh_state(pair, x) -> _HState:
    """``(sinh, ln sinh, ln cosh^p, err)`` at ``x``."""
    return _sinh_state(as_pair(pair), float(x))


def sinh_pq(pair, x: float) -> FnValue:
    """sinh_{p,q}(x) = G_{p,q}^{-1}(x) for 0 <= x < pi_{r,q}/2."""
    s = sinh_state(pair, x)
    return FnValue(s.y, s.err)


def _rel_err(s):
    return s.err / s.y if s.y > 0 else 0.0


def cosh_pq(pair, x: float) -> FnValue:
    """cosh_{p,q}(x) = (1 + sinh_{p,q}^q x)^(1/p), the derivative of sinh_{p,q}."""
    pair = as_pair(pair)
    s = sinh_state(pair, x)
    log_c = s.log_cpow / pair.p
    if log_c > 709.0:
        raise OverflowSignal(f"cosh_{{p,q}}({x!r}) overflows")
    c = math.exp(log_c)
    # d ln cosh = (q/p) y^q/(1+y^q) d ln y
    frac = math.exp(pair.q * s.log_y - s.log_cpow) if s.y > 0 else 0.0
    return FnValue(c, c * (pair.q / pair.p * frac * _rel_err(s) + _EPS))


def _ratio(pair, s, expo, name):
    # sinh / cosh^expo = exp(ln y - expo/p * ln(1 + y^q))
    if s.y == 0:
        return FnValue(0.0, 0.0)
    if expo == pair.p / pair.q:
        # tamh^q = y^q / (1 + y^q) = 1 / (1 + y^-q), which keeps tamh <= 1
        log_val = -float(np.logaddexp(0.0, -pair.q * s.log_y)) / pair.q
    else:
        log_val = s.log_y - expo / pair.p * s.log_cpow
    if log_val > 709.0:
        raise OverflowSignal(f"{name} overflows")
    val = math.exp(log_val)
    frac = math.exp(pair.q * s.log_y - s.log_cpow)
    rel = abs(1.0 - expo * pair.q / pair.p * frac) * _rel_err(s)
    return FnValue(val, val * (rel + 2 * _EPS))


def tamh_pq(pair, x: float) -> FnValue:
    """tamh_{p,q}(x) = sinh_{p,q}(x) / cosh_{p,q}^(p/q)(x), with values in [0, 1)."""
    pair = as_pair(pair)
    return _ratio(pair, sinh_state(pair, x), pair.p / pair.q, "tamh_{p,q}")


def tanh_pq(pair, x: float) -> FnValue:
    """tanh_{p,q}(x) = sinh_{p,q}(x) / cosh_{p,q}(x)."""
    pair = as_pair(pair)
    return _ratio(pair, sinh_state(pair, x), 1.0, "tanh_{p,q}")


def asinh_pq(pair, y: float) -> FnValue:
    """Inverse of sinh_{p,q}: G_{p,q}(y) for finite y >= 0."""
    r = quad.integral_G(as_pair(pair), y)
    return FnValue(r.value, r.err_est)
