"""Evaluating one family through the other.

With ``r`` the dual index of ``p`` (same ``q``):

    sin_{p,q}  = tamh_{r,q}          sinh_{p,q} = tam_{r,q}
    cos_{p,q}  = cosh_{r,q}^(-r/p)   cosh_{p,q} = cos_{r,q}^(-r/p)
    tam_{p,q}  = sinh_{r,q}          tamh_{p,q} = sin_{r,q}

The trigonometric side here only ever calls :mod:`gentrig.ghf` and the
hyperbolic side only :mod:`gentrig.gtf`, so every value is an independent
second route to the native evaluators.  Powers are taken on the logs kept
by the inversion layer; ``cosh^(-r/p)`` never forms ``cosh`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ghf, gtf, quad
from .errors import OverflowSignal
from .gtf import FnValue, _check_x, as_pair
from .params import ParamPair, dual_index

__all__ = [
    "DualPairing",
    "pairing",
    "sin_via_dual",
    "cos_via_dual",
    "tam_via_dual",
    "sinh_via_dual",
    "cosh_via_dual",
    "tamh_via_dual",
    "double_dual_residuals",
    "transported_pythagorean",
]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class DualPairing:
    primal: ParamPair
    dual: ParamPair

    def __post_init__(self):
        if self.primal.q != self.dual.q:
            raise ValueError("a dual pairing keeps q fixed")
        r = dual_index(self.primal)
        if abs(self.dual.p - r) > 1e-14 * r:
            raise ValueError(f"dual p={self.dual.p!r} does not match r={r!r}")

    def swapped(self) -> "DualPairing":
        """The pairing seen from the dual side: (r, q) -> (r_q(r), q)."""
        return pairing(self.dual)

    @property
    def r(self) -> float:
        return self.dual.p


def pairing(pair, q: float | None = None) -> DualPairing:
    """DualPairing for ``pair`` (a ParamPair, a ``(p, q)`` tuple or ``p, q``)."""
    if q is not None:
        pair = (pair, q)
    primal = as_pair(pair)
    return DualPairing(primal, ParamPair(dual_index(primal), primal.q))


def _as_pairing(obj) -> DualPairing:
    return obj if isinstance(obj, DualPairing) else pairing(obj)


def _trig_domain(pg, x):
    _check_x(pg.primal, x, quad._half(pg.primal), "sin_{p,q}")


def _hyp_domain(pg, x):
    _check_x(pg.primal, x, quad._dual_half(pg.primal), "sinh_{p,q}")


def _log_cos(pg, s):
    # cosh_{r,q}^r = 1 + sinh^q, so cosh^(-r/p) = exp(-ln(1 + sinh^q) / p)
    return -s.log_cpow / pg.primal.p


def _log_cosh(pg, s, x):
    # cos_{r,q}^r = 1 - sin^q
    if s.log_cpow == -math.inf:
        raise OverflowSignal(f"cosh_{{p,q}}({x!r}): cos_{{r,q}} underflows to 0")
    return -s.log_cpow / pg.primal.p


# -- trigonometric side through ghf ---------------------------------


def sin_via_dual(pg, x: float) -> FnValue:
    """sin_{p,q}(x) as tamh_{r,q}(x)."""
    pg = _as_pairing(pg)
    _trig_domain(pg, x)
    return ghf.tamh_pq(pg.dual, x)


def cos_via_dual(pg, x: float) -> FnValue:
    """cos_{p,q}(x) as cosh_{r,q}(x)^(-r/p)."""
    pg = _as_pairing(pg)
    _trig_domain(pg, x)
    s = ghf.sinh_state(pg.dual, x)
    val = math.exp(_log_cos(pg, s))
    if s.y == 0:
        return FnValue(val, _EPS * val)
    frac = math.exp(pg.primal.q * s.log_y - s.log_cpow)
    rel = pg.primal.q / pg.primal.p * frac * s.err / s.y
    return FnValue(val, val * (rel + 2 * _EPS))


def tam_via_dual(pg, x: float) -> FnValue:
    """tam_{p,q}(x) as sinh_{r,q}(x)."""
    pg = _as_pairing(pg)
    _trig_domain(pg, x)
    return ghf.sinh_pq(pg.dual, x)


# -- hyperbolic side through gtf ------------------------------------


def sinh_via_dual(pg, x: float) -> FnValue:
    """sinh_{p,q}(x) as tam_{r,q}(x)."""
    pg = _as_pairing(pg)
    _hyp_domain(pg, x)
    return gtf.tam_pq(pg.dual, x)


def cosh_via_dual(pg, x: float) -> FnValue:
    """cosh_{p,q}(x) as cos_{r,q}(x)^(-r/p)."""
    pg = _as_pairing(pg)
    _hyp_domain(pg, x)
    s = gtf.sin_state(pg.dual, x)
    log_val = _log_cosh(pg, s, x)
    if log_val > 709.0:
        raise OverflowSignal(f"cosh_{{p,q}}({x!r}) overflows")
    val = math.exp(log_val)
    if s.y == 0:
        return FnValue(val, _EPS * val)
    # cosh_{p,q} = cos_{r,q}^(-r/p)
    rel = pg.r / pg.primal.p * gtf.cos_rel_err(pg.dual, s)
    return FnValue(val, val * (rel + 2 * _EPS))


def tamh_via_dual(pg, x: float) -> FnValue:
    """tamh_{p,q}(x) as sin_{r,q}(x)."""
    pg = _as_pairing(pg)
    _hyp_domain(pg, x)
    return gtf.sin_pq(pg.dual, x)


# -- consistency helpers -----------------------------------------------------


def _exp(v, x):
    if v > 709.0:
        raise OverflowSignal(f"cosh_{{p,q}}({x!r}) overflows")
    return math.exp(v)


def double_dual_residuals(pg, x: float, kind: str = "trig") -> dict:
    """Native values against the round trip p -> r -> r_q(r).

    Transforming the primal functions to ``(r, q)`` and back lands on the
    same family at ``(r_q(r), q)``, which must reproduce the native values.
    ``kind`` picks sin/cos/tam ("trig") or sinh/cosh/tamh ("hyp").  Returns
    differences scaled by ``max(1, |value|)``.
    """
    pg = _as_pairing(pg)
    back = pg.swapped()
    expo = -pg.r / pg.primal.p
    # the middle cos (cosh) may leave the double range while the end value
    # does not, so that leg stays in logs
    if kind == "trig":
        _hyp_domain(back, x)
        log_mid = _log_cosh(back, gtf.sin_state(back.dual, x), x)
        pairs = {
            "sin": (gtf.sin_pq(pg.primal, x), tamh_via_dual(back, x).value),
            "cos": (gtf.cos_pq(pg.primal, x), math.exp(expo * log_mid)),
            "tam": (gtf.tam_pq(pg.primal, x), sinh_via_dual(back, x).value),
        }
    elif kind == "hyp":
        _trig_domain(back, x)
        log_mid = _log_cos(back, ghf.sinh_state(back.dual, x))
        pairs = {
            "sinh": (ghf.sinh_pq(pg.primal, x), tam_via_dual(back, x).value),
            "cosh": (ghf.cosh_pq(pg.primal, x), _exp(expo * log_mid, x)),
            "tamh": (ghf.tamh_pq(pg.primal, x), sin_via_dual(back, x).value),
        }
    else:
        raise ValueError(f"kind must be 'trig' or 'hyp', got {kind!r}")
    return {k: abs(a.value - b) / max(1.0, abs(a.value)) for k, (a, b) in pairs.items()}


def transported_pythagorean(pg, x: float) -> tuple[float, float]:
    """The trig and hyp Pythagorean relations, each evaluated across the transform.

    The first entry is ``cos^p + sin^q - 1`` for ``(p, q)`` with both values
    taken from ghf at ``(r, q)``.  The second is ``(1 + sinh^q - cosh^r)/cosh^r``
    for ``(r, q)`` with ``sinh`` from ghf and ``cosh`` from gtf through the
    swapped pairing.  Both vanish exactly when the transforms are right.
    """
    pg = _as_pairing(pg)
    p, q, r = pg.primal.p, pg.primal.q, pg.r
    trig = cos_via_dual(pg, x).value ** p + sin_via_dual(pg, x).value ** q - 1.0
    sh = ghf.sinh_pq(pg.dual, x).value
    ch_r = cosh_via_dual(pg.swapped(), x).value ** r
    hyp = (1.0 + sh ** q - ch_r) / ch_r
    return trig, hyp
