"""An ODE route to sin_{p,q} and sinh_{p,q}.

u = sin_{p,q} solves

    (|u'|^(p-2) u')' + ((p-1) q / p) |u|^(q-2) u = 0,   u(0) = 0, u'(0) = 1,

and sinh_{p,q} solves the same with the sign of the second term flipped.
With the flux v = |u'|^(p-2) u' this is the first-order system

    u' = |v|^(1/(p-1)) sign(v),   v' = -+ ((p-1) q / p) |u|^(q-2) u,

integrated here with a Dormand-Prince 5(4) pair.  The start is moved to
x0 = 1e-3 with two-term series data, which keeps |u|^(q-2) u away from 0.
Only p > 1, q >= 1 is supported: elsewhere the right-hand side is not
Lipschitz on the path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ghf, gtf, quad
from .errors import ConvergenceError, DomainError
from .gtf import as_pair

__all__ = ["Trajectory", "integrate_ivp", "compare", "invariant_residual", "X0"]

X0 = 1e-3
DEFAULT_TOL = 1e-10
UNBOUNDED_END = 2.0
MAX_STEPS = 200_000

# Dormand-Prince 5(4)
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)


@dataclass(frozen=True)
class Trajectory:
    xs: np.ndarray
    us: np.ndarray
    vs: np.ndarray  # flux |u'|^(p-2) u'

    def derivative(self, p: float) -> np.ndarray:
        """u' recovered from the flux."""
        return np.sign(self.vs) * np.abs(self.vs) ** (1.0 / (p - 1.0))


def _check(pair):
    pair = as_pair(pair)
    if not (pair.p > 1.0 and pair.q >= 1.0):
        raise DomainError(f"the ODE route needs p > 1 and q >= 1, got (p, q) = ({pair.p!r}, {pair.q!r})")
    return pair


def _end(pair, hyperbolic):
    end = quad._dual_half(pair) if hyperbolic else quad._half(pair)
    return end


def default_end(pair, hyperbolic: bool = False) -> float:
    """0.9 of the domain end, or UNBOUNDED_END when the domain is unbounded."""
    end = _end(_check(pair), hyperbolic)
    return 0.9 * end if math.isfinite(end) else UNBOUNDED_END


def _initial(p, q, sign):
    # u = x - sign*a x^(q+1) + c x^(2q+1) inverts F (sign=+1) or G (sign=-1)
    a = 1.0 / (p * (q + 1.0))
    b = (1.0 / p) * (1.0 / p + 1.0) / (2.0 * (2.0 * q + 1.0))
    c = (q + 1.0) * a * a - b
    x0 = X0
    u0 = x0 - sign * a * x0 ** (q + 1.0) + c * x0 ** (2.0 * q + 1.0)
    du0 = (1.0 - sign * u0 ** q) ** (1.0 / p)
    return u0, du0 ** (p - 1.0)


def _rhs(p, q, sign):
    e = 1.0 / (p - 1.0)
    k = (p - 1.0) * q / p

    def f(u, v):
        du = math.copysign(abs(v) ** e, v)
        dv = -sign * k * math.copysign(abs(u) ** (q - 1.0), u)
        return du, dv

    return f


def _step(f, x, y, h):
    ks = []
    for i in range(7):
        u, v = y
        for j, a in enumerate(_A[i]):
            u += h * a * ks[j][0]
            v += h * a * ks[j][1]
        ks.append(f(u, v))
    y5 = [y[m] + h * sum(b * k[m] for b, k in zip(_B5, ks)) for m in (0, 1)]
    y4 = [y[m] + h * sum(b * k[m] for b, k in zip(_B4, ks)) for m in (0, 1)]
    return y5, (y5[0] - y4[0], y5[1] - y4[1])


def _integrate(pair, stops, tol, hyperbolic):
    p, q = pair.p, pair.q
    sign = -1.0 if hyperbolic else 1.0
    f = _rhs(p, q, sign)
    x = X0
    y = list(_initial(p, q, sign))
    xs, us, vs = [x], [y[0]], [y[1]]
    h = 1e-3
    steps = 0
    for stop in stops:
        while x < stop:
            if steps >= MAX_STEPS:
                raise ConvergenceError(f"step control stalled after {MAX_STEPS} steps at x={x!r}")
            steps += 1
            last = x + h >= stop
            hh = stop - x if last else h
            y_new, e = _step(f, x, y, hh)
            scale = [tol * (1.0 + abs(y[m])) for m in (0, 1)]
            err = max(abs(e[0]) / scale[0], abs(e[1]) / scale[1])
            if not math.isfinite(err):
                err = 1e6
            if err <= 1.0:
                x = stop if last else x + hh
                y = y_new
                xs.append(x)
                us.append(y[0])
                vs.append(y[1])
            fac = 5.0 if err == 0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
            h = hh * fac
            if h < 1e-14 * max(1.0, abs(x)):
                raise ConvergenceError(f"step size underflow at x={x!r}")
    return Trajectory(np.array(xs), np.array(us), np.array(vs))


def integrate_ivp(pair, x_end: float | None = None, tol: float = DEFAULT_TOL, *, hyperbolic: bool = False) -> Trajectory:
    """Adaptive Dormand-Prince solution from X0 up to ``x_end``.

    The local error of each step is kept below ``tol * (1 + |y|)`` per
    component.  ``x_end`` defaults to 0.9 of the domain end and must stay
    below the end itself.
    """
    pair = _check(pair)
    if x_end is None:
        x_end = default_end(pair, hyperbolic)
    end = _end(pair, hyperbolic)
    if not (X0 < x_end < end):
        raise DomainError(f"x_end must lie in ({X0!r}, {end!r}), got {x_end!r}")
    if not (tol > 0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    return _integrate(pair, [float(x_end)], tol, hyperbolic)


def invariant_residual(traj: Trajectory, pair, *, hyperbolic: bool = False) -> float:
    """max |u'|^p +- |u|^q - 1 along the trajectory (scaled by the first term for hyp)."""
    pair = as_pair(pair)
    du = np.abs(traj.derivative(pair.p)) ** pair.p
    uq = np.abs(traj.us) ** pair.q
    if hyperbolic:
        return float(np.max(np.abs(du - uq - 1.0) / du))
    return float(np.max(np.abs(du + uq - 1.0)))


def compare_detail(pair, n_samples: int = 16, *, hyperbolic: bool = False, tol: float = DEFAULT_TOL, x_end=None):
    """``(max error, abscissa of the max)`` against the inversion route."""
    pair = _check(pair)
    if n_samples < 1:
        raise DomainError(f"n_samples must be >= 1, got {n_samples!r}")
    if x_end is None:
        x_end = default_end(pair, hyperbolic)
    stops = [x_end * k / n_samples for k in range(1, n_samples + 1)]
    stops = [s for s in stops if s > X0]
    traj = _integrate(pair, stops, tol, hyperbolic)
    ref = ghf.sinh_pq if hyperbolic else gtf.sin_pq
    worst, at = 0.0, stops[0]
    pos = {x: i for i, x in enumerate(traj.xs)}
    for s in stops:
        u = traj.us[pos[s]]
        d = float(abs(u - ref(pair, s).value))
        if d > worst:
            worst, at = d, s
    return worst, at


def compare(pair, n_samples: int = 16, *, hyperbolic: bool = False, tol: float = DEFAULT_TOL) -> float:
    """max |u(x) - sin_{p,q}(x)| (sinh for ``hyperbolic``) over ``n_samples`` equally spaced points."""
    return compare_detail(pair, n_samples, hyperbolic=hyperbolic, tol=tol)[0]
