"""Newton iteration with a bisection safeguard for monotone residuals."""

from __future__ import annotations

import math

from .errors import ConvergenceError

MAX_ITER = 200
_EPS = 2.220446049250313e-16


def newton_bisect(fun, lo, hi, z0, *, rtol=4 * _EPS, atol=0.0, max_iter=MAX_ITER):
    """Root of an increasing ``fun`` on ``[lo, hi]``.

    ``fun(z)`` returns ``(residual, slope, extra)``; the root is assumed to be
    bracketed.  Any Newton step leaving the current bracket is replaced by a
    bisection step.  Iteration stops once a step (or the bracket) is below
    ``rtol*|z| + atol``.  Returns ``(z, residual, extra)`` evaluated at the
    final iterate.
    """
    z = min(max(z0, lo), hi)
    for _ in range(max_iter):
        res, slope, extra = fun(z)
        if res == 0.0:
            return z, res, extra
        if res > 0:
            hi = z
        else:
            lo = z
        step = res / slope if slope > 0 and math.isfinite(slope) else math.inf
        z_new = z - step
        if not (lo < z_new < hi):
            z_new = 0.5 * (lo + hi)
        small = rtol * abs(z_new) + atol
        if abs(z_new - z) <= small or hi - lo <= small:
            res, slope, extra = fun(z_new)
            return z_new, res, extra
        z = z_new
    raise ConvergenceError(f"root finder did not converge in {max_iter} iterations")
