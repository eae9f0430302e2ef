"""Exact small-argument expansions of the inequality margins.

Every margin in :mod:`gentrig.identities` vanishes to second order as
``x -> 0``, so for small ``x`` it is the difference of two numbers that
agree to many digits.  Written in ``S = sin^q`` (``sinh^q`` for the
hyperbolic family) the pieces have closed expansions:

    x / sin = Phi(S) = sum_k (1/p)_k / (k! (qk + 1)) S^k
    cos^p   = 1 - S

(alternating signs in Phi and ``1 + S`` for the hyperbolic family), and the
margins are products and rational powers of these.  Coefficients are built
with :class:`fractions.Fraction` from the exact binary values of ``p`` and
``q``, so the cancelling low orders come out exactly zero and only the
genuine leading term survives.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = ["N_TERMS", "S_MAX", "margin_series", "evaluate", "SUITES"]

N_TERMS = 16
# radius of convergence in S is 1; at S <= S_MAX the terms beyond N_TERMS
# are below 1e-20 of the leading one
S_MAX = 0.05

SUITES = ("ma_lower", "ma_upper", "wilker", "huygens", "cusa")


def _mul(a, b):
    n = len(a)
    return [sum(a[k] * b[m - k] for k in range(m + 1)) for m in range(n)]


def _pow(a, alpha):
    # a[0] == 1; J. C. P. Miller's recurrence for a^alpha
    n = len(a)
    g = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        acc = Fraction(0)
        for k in range(1, m + 1):
            if a[k]:
                acc += ((alpha + 1) * k - m) * a[k] * g[m - k]
        g[m] = acc / m
    return g


def _lin(*terms):
    # sum of c * series
    n = len(terms[0][1])
    return [sum(c * s[m] for c, s in terms) for m in range(n)]


def _const(c, n):
    return [Fraction(c)] + [Fraction(0)] * (n - 1)


def _phi(p, q, sign, n):
    out = []
    rising = Fraction(1)
    fact = 1
    inv_p = 1 / p
    for k in range(n):
        if k:
            rising *= inv_p + k - 1
            fact *= k
        out.append(sign ** k * rising / (fact * (q * k + 1)))
    return out


@lru_cache(maxsize=512)
def margin_series(p: float, q: float, suite: str, hyperbolic: bool, n: int = N_TERMS):
    """Float coefficients of ``suite``'s margin as a power series in S.

    ``p`` and ``q`` are taken at their exact binary values, and ``r`` is the
    exact dual index of those.  Orders that cancel identically come out as
    exact zeros.
    """
    P, Q = Fraction(p), Fraction(q)
    R = P * Q / (P * Q + P - Q)
    sign = -1 if hyperbolic else 1
    phi = _phi(P, Q, sign, n)
    rho = _pow(phi, Fraction(-1))
    c = _const(1, n)
    c[1] = Fraction(-sign)  # cos^p = 1 - S, cosh^p = 1 + S
    one = _const(1, n)
    if suite == "ma_lower":
        out = _lin((1, rho), (-1, _pow(c, 1 / (P * (Q + 1)))))
    elif suite == "ma_upper":
        top = one if not hyperbolic else _pow(c, 1 / Q)
        out = _lin((1, top), (-1, rho))
    elif suite == "wilker":
        tam = _mul(_pow(phi, -R), _pow(c, -R / Q))
        out = _lin((1, _pow(phi, -P)), (1, tam), (-2, one))
    elif suite == "huygens":
        tam = _mul(rho, _pow(c, -1 / Q))
        out = _lin((P, rho), (R, tam), (-(P + R), one))
    elif suite == "cusa":
        inner = _const(1, n)
        inner[1] = -sign * R / (P + R)
        out = _lin((1, _pow(inner, 1 / Q)), (-1, rho))
    else:
        raise ValueError(f"unknown margin {suite!r}")
    return tuple(float(v) for v in out)


def evaluate(coeffs, s_pow: float, s_pow_err: float = 0.0) -> tuple[float, float]:
    """Sum the series at ``S``; returns ``(value, err_est)``.

    The error estimate covers rounding in the sum, the omitted tail (twice
    the last term) and the first-order effect of ``s_pow_err``.
    """
    value = 0.0
    deriv = 0.0
    absum = 0.0
    for c in reversed(coeffs):
        deriv = deriv * s_pow + value
        value = value * s_pow + c
    term = s_pow ** (len(coeffs) - 1)
    for k, c in enumerate(coeffs):
        absum += abs(c) * s_pow ** k
    tail = 2.0 * abs(coeffs[-1]) * term
    err = 4.0 * 2.220446049250313e-16 * absum + tail + abs(deriv) * s_pow_err
    return value, err
