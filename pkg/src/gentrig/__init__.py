"""Generalized trigonometric and hyperbolic functions sin_{p,q}, sinh_{p,q}.

The functions are inverses of

    F_{p,q}(y) = int_0^y (1 - t^q)^(-1/p) dt,  G_{p,q}(y) = int_0^y (1 + t^q)^(-1/p) dt

on their principal branches, for q > 0 and p > q/(q+1).  Values carry an
error estimate (:class:`FnValue`).  :mod:`gentrig.duality` evaluates each
family through the other, and :mod:`gentrig.identities` checks the
inequalities and angle formulas that link them.
"""

from .duality import DualPairing, pairing
from .errors import ConvergenceError, DomainError, OverflowSignal
from .ghf import asinh_pq, cosh_pq, sinh_pq, tamh_pq, tanh_pq
from .gtf import FnValue, asin_pq, cos_pq, sin_pq, tam_pq, tan_pq
from .identities import GridSpec, MarginReport, sweep
from .params import HalfPeriod, ParamPair, dual_index, half_period, log_beta, validate
from .quad import QuadResult, integral_F, integral_G, integrate_singular

__version__ = "0.1.0"

__all__ = [
    "ParamPair",
    "HalfPeriod",
    "validate",
    "dual_index",
    "half_period",
    "log_beta",
    "QuadResult",
    "integrate_singular",
    "integral_F",
    "integral_G",
    "FnValue",
    "sin_pq",
    "cos_pq",
    "tam_pq",
    "tan_pq",
    "asin_pq",
    "sinh_pq",
    "cosh_pq",
    "tamh_pq",
    "tanh_pq",
    "asinh_pq",
    "DualPairing",
    "pairing",
    "GridSpec",
    "MarginReport",
    "sweep",
    "DomainError",
    "ConvergenceError",
    "OverflowSignal",
]
