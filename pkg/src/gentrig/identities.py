"""Margins of the inequalities and residuals of the angle formulas.

Strict inequalities are reported as a margin (the side that should be larger
minus the other) together with an error estimate; a point counts as verified
only when ``margin - err_est > 0``.  The estimate is heuristic: rounding in
the final arithmetic plus the first-order effect of the evaluators' own
error estimates, not a rigorous enclosure.

For small arguments the margins are summed from exact expansions
(:mod:`gentrig.series`); elsewhere they are formed directly from ``s/x`` and
``ln cos^p`` (``ln cosh^p``) as kept by the inversion layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import duality, ghf, gtf, quad, series
from .errors import DomainError, OverflowSignal
from .gtf import _check_x, as_pair
from .params import ParamPair, dual_index, validate

__all__ = [
    "Margin",
    "MarginReport",
    "GridSpec",
    "SUITES",
    "margin",
    "ma_margin",
    "wilker_margin",
    "huygens_margin",
    "cusa_margin",
    "multiple_angle_residuals",
    "double_angle_653_residual",
    "double_angle_6532_residual",
    "intermediate_residual",
    "theta",
    "phi",
    "psi",
    "sweep",
]

_EPS = 2.220446049250313e-16

SUITES = (
    "pythagorean",
    "duality",
    "ma",
    "wilker",
    "huygens",
    "cusa",
    "multiangle",
    "doubleangle",
    "ode",
)

KINDS = ("trig", "hyp")


class Margin(NamedTuple):
    value: float
    err_est: float


# -- margins -----------------------------------------------------------------


def _ingredients(pair, x, kind):
    """``(S, ln rho, ln C, rel_s, err of ln C)`` with S = s^q, rho = s/x, C = cos^p or cosh^p."""
    if kind == "trig":
        end = quad._half(pair)
        _check_x(pair, x, end, "sin_{p,q}")
        if x == 0:
            raise DomainError("margins are taken on the open interval; x=0 is excluded")
        st = gtf.sin_state(pair, x)
        log_y = math.log(st.y)
        err = st.err
        # ln cos^p carries its own error, smaller than y's near the end
        d_log_c = pair.p * gtf.cos_rel_err(pair, st)
    elif kind == "hyp":
        end = quad._dual_half(pair)
        _check_x(pair, x, end, "sinh_{p,q}")
        if x == 0:
            raise DomainError("margins are taken on the open interval; x=0 is excluded")
        st = ghf.sinh_state(pair, x)
        log_y = st.log_y
        err = st.err
        d_log_c = None
    else:
        raise ValueError(f"kind must be 'trig' or 'hyp', got {kind!r}")
    rel = err / st.y
    if d_log_c is None:
        # d ln(1 + y^q) = q y^q/(1 + y^q) d ln y
        d_log_c = pair.q * math.exp(pair.q * log_y - st.log_cpow) * rel
    return math.exp(pair.q * log_y), log_y - math.log(x), st.log_cpow, rel, d_log_c


def _direct(suite, p, q, r, log_rho, log_c, kind):
    # returns the margin and the magnitudes of the summed terms
    rho = math.exp(log_rho)
    if suite == "ma_lower":
        a, b = rho, math.exp(log_c / (p * (q + 1.0)))
        return a - b, (a, b)
    if suite == "ma_upper":
        a = 1.0 if kind == "trig" else math.exp(log_c / q)
        return a - rho, (a, rho)
    if suite == "wilker":
        a = math.exp(p * log_rho)
        b = math.exp(r * (log_rho - log_c / q))
        return a + b - 2.0, (a, b, 2.0)
    if suite == "huygens":
        a = p * rho
        b = r * math.exp(log_rho - log_c / q)
        return a + b - (p + r), (a, b, p + r)
    if suite == "cusa":
        a = math.exp(math.log((p + r * math.exp(log_c)) / (p + r)) / q)
        return a - rho, (a, rho)
    raise ValueError(f"unknown margin {suite!r}")


def margin(suite: str, pair, x: float, kind: str = "trig") -> Margin:
    """One margin with its error estimate.

    ``suite`` is one of ``ma_lower``, ``ma_upper``, ``wilker``, ``huygens``,
    ``cusa``; ``kind`` selects the trigonometric or hyperbolic statement.
    """
    pair = as_pair(pair)
    p, q = pair.p, pair.q
    r = dual_index(pair)
    s_pow, log_rho, log_c, rel, d_log_c = _ingredients(pair, x, kind)
    if s_pow <= series.S_MAX:
        coeffs = series.margin_series(p, q, suite, kind == "hyp")
        return Margin(*series.evaluate(coeffs, s_pow, q * s_pow * rel))
    if kind == "trig" and log_c == -math.inf:
        raise OverflowSignal(f"cos_{{p,q}}({x!r}) underflows; margin not representable")
    val, terms = _direct(suite, p, q, r, log_rho, log_c, kind)
    # first-order sensitivity to the evaluator error, by perturbing s
    if kind == "trig":
        d_log_c = -d_log_c
    spread = 0.0
    for sgn in (-1.0, 1.0):
        moved, _ = _direct(suite, p, q, r, log_rho + sgn * rel, log_c + sgn * d_log_c, kind)
        spread = max(spread, abs(moved - val))
    err = spread + 4 * _EPS * sum(abs(t) for t in terms)
    if not (math.isfinite(val) and math.isfinite(err)):
        raise OverflowSignal(f"{suite} margin at x={x!r} is not representable")
    return Margin(val, err)


def ma_margin(pair, x: float, kind: str = "trig") -> tuple[float, float]:
    """(lower, upper) margins of the Mitrinovic-Adamovic type bounds.

    trig: sin/x - cos^(1/(q+1)) and 1 - sin/x;
    hyp:  sinh/x - cosh^(1/(q+1)) and cosh^(p/q) - sinh/x.
    """
    return (margin("ma_lower", pair, x, kind).value, margin("ma_upper", pair, x, kind).value)


def wilker_margin(pair, x: float, kind: str = "trig") -> float:
    """(sin/x)^p + (tam/x)^r - 2, or the same with sinh and tamh."""
    return margin("wilker", pair, x, kind).value


def huygens_margin(pair, x: float, kind: str = "trig") -> float:
    """p sin/x + r tam/x - (p + r), or the same with sinh and tamh."""
    return margin("huygens", pair, x, kind).value


def cusa_margin(pair, x: float, kind: str = "trig") -> float:
    """((p + r cos^p)/(p + r))^(1/q) - sin/x, or the same with cosh and sinh."""
    return margin("cusa", pair, x, kind).value


# -- multiple and double angle -----------------------------------------------


def _mult_pairs(q):
    if not (isinstance(q, (int, float)) and math.isfinite(q) and q > 0):
        raise DomainError(f"q must be a positive finite number, got {q!r}")
    big_p = 2.0 * q / (2.0 + q)
    return validate(big_p, q), validate(big_p, q / 2.0), validate(2.0, q)


def multiple_angle_end(q: float) -> float:
    """Right end of the interval where the multiple-angle formulas hold."""
    return quad._half(_mult_pairs(q)[0])


def multiple_angle_residuals(q: float, x: float) -> dict:
    """Residuals of the four multiple-angle formulas at ``x``.

    The left sides are evaluated at ``(2q/(2+q), q/2)`` and ``2^(2/q) x``;
    the right sides use ``sin_{2q/(2+q),q}`` and ``sinh_{2,q}, cosh_{2,q}``
    at ``x``.  sin and cos residuals are absolute; sinh and cosh residuals
    are divided by ``max(1, |rhs|)``.
    """
    full, half, two = _mult_pairs(q)
    _check_x(full, x, quad._half(full), "the multiple-angle formulas")
    k = 2.0 ** (2.0 / q)
    kx = k * x

    st = gtf.sin_state(full, x)
    s = st.y
    big_s = s ** (q / 2.0)
    rhs_sin = k * s / (1.0 + big_s) ** (2.0 / q)
    # 1 - S = (1 - s^q) / (1 + S), with 1 - s^q = cos^p kept in log form
    log_ratio = st.log_cpow - 2.0 * math.log1p(big_s)
    rhs_cos = math.exp((1.0 / q + 0.5) * log_ratio)

    hs = ghf.sinh_state(two, x)
    sh = hs.y
    ch = math.exp(hs.log_cpow / 2.0)
    base = ch + sh ** (q / 2.0)
    rhs_sinh = k * sh * base ** (2.0 / q)
    rhs_cosh = base ** (2.0 / q + 1.0)

    out = {
        "sin": abs(gtf.sin_pq(half, kx).value - rhs_sin),
        "cos": abs(gtf.cos_pq(half, kx).value - rhs_cos),
        "sinh": abs(ghf.sinh_pq(half, kx).value - rhs_sinh) / max(1.0, rhs_sinh),
        "cosh": abs(ghf.cosh_pq(half, kx).value - rhs_cosh) / max(1.0, rhs_cosh),
    }
    return out


_P653 = validate(1.2, 3.0)
_P6532 = validate(1.2, 1.5)


def _one_minus_pow(log_c, a):
    # 1 - c^a from ln c
    return -math.expm1(a * log_c)


def double_angle_653_rhs(x: float) -> float:
    """Right side of the (6/5, 3) double-angle formula, from cos_{6/5,3}(x)."""
    st = gtf.sin_state(_P653, x)
    log_c = st.log_cpow / _P653.p
    cc = math.exp(0.6 * log_c)  # cos^(3/5)
    one_m = _one_minus_pow(log_c, 0.6)
    lin = 3.0 * cc + 1.0
    num = 4.0 * math.exp(0.2 * log_c) * lin * one_m ** (1.0 / 3.0)
    den = (16.0 * cc + lin ** 3 * one_m) ** (2.0 / 3.0)
    return num / den


def double_angle_653_residual(x: float) -> float:
    """|sin_{6/5,3}(2x) - formula(cos_{6/5,3} x)| on [0, pi_{6/5,3}/4)."""
    end = 0.5 * quad._half(_P653)
    _check_x(_P653, x, end, "the (6/5, 3) double-angle formula")
    return abs(gtf.sin_pq(_P653, 2.0 * x).value - double_angle_653_rhs(x))


def theta(x: float) -> float:
    return (2.0 * x / (1.0 + x)) ** (2.0 / 3.0)


def phi(x: float, one_minus_x: float | None = None) -> float:
    """8 sqrt(x (3x+1)^3 (1-x)) / (16x + (3x+1)^3 (1-x)).

    ``one_minus_x`` may be passed when ``1 - x`` is known more accurately
    than the subtraction would give.
    """
    w = 1.0 - x if one_minus_x is None else one_minus_x
    cube = (3.0 * x + 1.0) ** 3
    return 8.0 * math.sqrt(x * cube * w) / (16.0 * x + cube * w)


def psi(x: float) -> float:
    return 2.0 * x ** 0.6 / (1.0 + x ** 1.2)


def double_angle_6532_rhs(x: float) -> float:
    """Theta(Phi(Psi(cos_{6/5,3/2} x))), with 1 - Psi carried separately."""
    st = gtf.sin_state(_P6532, x)
    log_c = st.log_cpow / _P6532.p
    c06 = math.exp(0.6 * log_c)
    ps = 2.0 * c06 / (1.0 + c06 * c06)
    # 1 - Psi(c) = (1 - c^(3/5))^2 / (1 + c^(6/5))
    one_m = _one_minus_pow(log_c, 0.6) ** 2 / (1.0 + c06 * c06)
    return theta(phi(ps, one_m))


def double_angle_6532_residual(x: float) -> float:
    """|sin_{6/5,3/2}(2x) - Theta(Phi(Psi(cos_{6/5,3/2} x)))| on [0, pi_{6/5,3/2}/4)."""
    end = 0.5 * quad._half(_P6532)
    _check_x(_P6532, x, end, "the (6/5, 3/2) double-angle formula")
    return abs(gtf.sin_pq(_P6532, 2.0 * x).value - double_angle_6532_rhs(x))


def intermediate_residual(q: float, y: float) -> float:
    """|asinh_{2,q}(y) - 2^(-2/q) asin_{2q/(2+q),q/2}(2^(2/q) y / (y^(q/2) + sqrt(y^q+1))^(2/q))|.

    Both sides are integrals; no inversion is involved.
    """
    _, half, two = _mult_pairs(q)
    if not (isinstance(y, (int, float)) and math.isfinite(y) and y >= 0):
        raise DomainError(f"y must be finite and >= 0, got {y!r}")
    k = 2.0 ** (2.0 / q)
    yq2 = y ** (q / 2.0)
    arg = k * y / (yq2 + math.sqrt(y ** q + 1.0)) ** (2.0 / q)
    lhs = quad.integral_G(two, y).value
    rhs = quad.integral_F(half, arg).value / k
    return abs(lhs - rhs)


# -- sweeps ------------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Parameter and abscissa grid for :func:`sweep`.

    Each q is combined with every entry of ``p_values`` and with
    ``q/(q+1) + o`` for each ``o`` in ``p_offsets``; inadmissible
    combinations are dropped.  Abscissae are ``n_x`` Chebyshev-Lobatto
    points on ``[clip*E, (1-clip)*E]`` where E is the domain end, or
    ``extent`` when the domain is unbounded.
    """

    p_values: tuple = (1.0, 1.2, 1.5, 2.0, 3.0, 5.0)
    q_values: tuple = (0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0)
    n_x: int = 33
    domain_clip: float = 0.02
    p_offsets: tuple = (0.05,)
    extent: float = 6.0

    def __post_init__(self):
        if int(self.n_x) != self.n_x or self.n_x < 2:
            raise DomainError(f"n_x must be an integer >= 2, got {self.n_x!r}")
        if not (0.0 < self.domain_clip < 0.5):
            raise DomainError(f"domain_clip must lie in (0, 0.5), got {self.domain_clip!r}")
        if not (self.extent > 0 and math.isfinite(self.extent)):
            raise DomainError(f"extent must be positive and finite, got {self.extent!r}")
        for q in self.q_values:
            if not (math.isfinite(q) and q > 0):
                raise DomainError(f"q must be positive and finite, got {q!r}")
        object.__setattr__(self, "p_values", tuple(float(v) for v in self.p_values))
        object.__setattr__(self, "q_values", tuple(float(v) for v in self.q_values))
        object.__setattr__(self, "p_offsets", tuple(float(v) for v in self.p_offsets))

    def pairs(self) -> list[ParamPair]:
        out = []
        for q in self.q_values:
            ps = [q / (q + 1.0) + o for o in self.p_offsets] + list(self.p_values)
            for p in ps:
                try:
                    pair = validate(p, q)
                except DomainError:
                    continue
                if pair not in out:
                    out.append(pair)
        return out

    def xs(self, end: float) -> np.ndarray:
        e = end if math.isfinite(end) else self.extent
        k = np.arange(self.n_x)
        u = 0.5 * (1.0 - np.cos(np.pi * k / (self.n_x - 1)))
        d = self.domain_clip
        return e * (d + (1.0 - 2.0 * d) * u)


DEFAULT_GRID = GridSpec()


@dataclass
class MarginReport:
    """Outcome of one suite on one parameter pair.

    ``samples`` holds ``(x, margin, err_est)``.  Strict suites
    (``threshold is None``) pass when every ``margin - err_est > 0``;
    identity suites pass when every ``|margin| <= threshold``.  Points whose
    evaluation raised are listed in ``errors`` and fail the report.
    """

    suite: str
    pair: ParamPair
    kind: str
    samples: list = field(default_factory=list)
    threshold: float | None = None
    errors: list = field(default_factory=list)

    @property
    def strict(self) -> bool:
        return self.threshold is None

    @property
    def min_margin(self) -> float:
        if not self.samples:
            return math.nan
        if self.strict:
            return min(m for _, m, _ in self.samples)
        return max(abs(m) for _, m, _ in self.samples)

    def slack(self, sample) -> float:
        """Certified room at one sample: positive means it passes."""
        _, m, e = sample
        if self.strict:
            return m - e
        return self.threshold - abs(m)

    @property
    def passed(self) -> bool:
        if self.errors or not self.samples:
            return False
        if self.strict:
            return all(self.slack(s) > 0 for s in self.samples)
        return all(self.slack(s) >= 0 for s in self.samples)


def _run_points(report, xs, fn):
    for x in xs:
        x = float(x)
        try:
            m, e = fn(x)
        except (ArithmeticError, ValueError) as exc:
            report.errors.append((x, f"{type(exc).__name__}: {exc}"))
            continue
        report.samples.append((x, float(m), float(e)))
    return report


def _pythagorean(pair, xs, kind):
    # the native value pairs are consistent by construction; the cos (cosh)
    # from the other family is the independent half of the check
    pg = duality.pairing(pair)

    def trig(x):
        s = gtf.sin_pq(pair, x).value
        native = gtf.cos_pq(pair, x).value ** pair.p + s ** pair.q - 1.0
        mixed = duality.cos_via_dual(pg, x).value ** pair.p + s ** pair.q - 1.0
        return max(abs(native), abs(mixed)), 0.0

    def hyp(x):
        s = ghf.sinh_pq(pair, x).value
        out = 0.0
        for c in (ghf.cosh_pq(pair, x).value, duality.cosh_via_dual(pg, x).value):
            cp = c ** pair.p
            out = max(out, abs(cp - s ** pair.q - 1.0) / cp)
        return out, 0.0

    report = MarginReport("pythagorean", pair, kind, threshold=1e-10)
    return _run_points(report, xs, trig if kind == "trig" else hyp)


def _duality(pair, xs, kind):
    pg = duality.pairing(pair)
    if kind == "trig":
        routes = [
            (gtf.sin_pq, duality.sin_via_dual),
            (gtf.cos_pq, duality.cos_via_dual),
            (gtf.tam_pq, duality.tam_via_dual),
        ]
    else:
        routes = [
            (ghf.sinh_pq, duality.sinh_via_dual),
            (ghf.cosh_pq, duality.cosh_via_dual),
            (ghf.tamh_pq, duality.tamh_via_dual),
        ]

    def fn(x):
        worst = 0.0
        for native, dual in routes:
            a = native(pair, x).value
            worst = max(worst, abs(a - dual(pg, x).value) / max(1.0, abs(a)))
        return worst, 0.0

    report = MarginReport("duality", pair, kind, threshold=1e-10)
    return _run_points(report, xs, fn)


def _double_dual(pair, xs, kind):
    def fn(x):
        return max(duality.double_dual_residuals(pair, x, kind).values()), 0.0

    report = MarginReport("duality", pair, kind + "-double", threshold=2e-10)
    return _run_points(report, xs, fn)


def _strict(suite, pair, xs, kind):
    if suite == "ma":

        def fn(x):
            lo = margin("ma_lower", pair, x, kind)
            hi = margin("ma_upper", pair, x, kind)
            return min(lo, hi, key=lambda m: m.value - m.err_est)

    else:

        def fn(x):
            return margin(suite, pair, x, kind)

    return _run_points(MarginReport(suite, pair, kind), xs, fn)


def _family_end(pair, kind):
    return quad._half(pair) if kind == "trig" else quad._dual_half(pair)


def _per_pair(suite, grid):
    reports = []
    for pair in grid.pairs():
        for kind in KINDS:
            xs = grid.xs(_family_end(pair, kind))
            if suite == "pythagorean":
                reports.append(_pythagorean(pair, xs, kind))
            elif suite == "duality":
                reports.append(_duality(pair, xs, kind))
                reports.append(_double_dual(pair, xs, kind))
            else:
                reports.append(_strict(suite, pair, xs, kind))
    return reports


def _multiangle(grid):
    reports = []
    for q in grid.q_values:
        full = _mult_pairs(q)[0]
        end = quad._half(full)
        e = end if math.isfinite(end) else grid.extent
        # equally spaced from 0, stopping short of the end by the clip
        xs = np.linspace(0.0, (1.0 - grid.domain_clip) * e, grid.n_x)

        def fn(x, q=q):
            return max(multiple_angle_residuals(q, x).values()), 0.0

        reports.append(_run_points(MarginReport("multiangle", full, "identity", threshold=1e-9), xs, fn))
    return reports


DOUBLE_ANGLE_FRACTION = 0.95
INTERMEDIATE_Y_MAX = 5.0


def _doubleangle(grid):
    n = grid.n_x
    f = DOUBLE_ANGLE_FRACTION
    out = []
    xs = np.linspace(0.0, f * 0.5 * quad._half(_P653), n)
    rep = MarginReport("doubleangle", _P653, "double", threshold=1e-8)
    out.append(_run_points(rep, xs, lambda x: (double_angle_653_residual(x), 0.0)))
    xs = np.linspace(0.0, f * 0.5 * quad._half(_P6532), n)
    rep = MarginReport("doubleangle", _P6532, "double", threshold=1e-8)
    out.append(_run_points(rep, xs, lambda x: (double_angle_6532_residual(x), 0.0)))
    for q in (2.0, 3.0):
        ys = np.linspace(0.0, INTERMEDIATE_Y_MAX, n)
        rep = MarginReport("doubleangle", validate(2.0, q), "intermediate", threshold=1e-10)
        out.append(_run_points(rep, ys, lambda y, q=q: (intermediate_residual(q, y), 0.0)))
    return out


ODE_PAIRS = tuple(validate(p, q) for p in (2.0, 3.0, 4.0) for q in (2.0, 3.0, 4.0))


def _ode(grid):
    from . import ode_oracle

    out = []
    for pair in ODE_PAIRS:
        for kind in KINDS:
            rep = MarginReport("ode", pair, kind, threshold=1e-6)
            try:
                err, x_at = ode_oracle.compare_detail(pair, 16, hyperbolic=(kind == "hyp"))
                rep.samples.append((float(x_at), float(err), 0.0))
            except (ArithmeticError, ValueError) as exc:
                rep.errors.append((math.nan, f"{type(exc).__name__}: {exc}"))
            out.append(rep)
    return out


def sweep(suite: str, grid: GridSpec | None = None) -> list[MarginReport]:
    """Run ``suite`` over ``grid`` and return one report per (pair, kind).

    ``pythagorean``, ``duality`` and the four inequality suites range over
    the grid pairs.  ``multiangle`` uses the grid's q values.
    ``doubleangle`` and ``ode`` have fixed parameters and take only
    ``n_x`` from the grid.  A grid with no admissible pairs (or no q values)
    gives an empty list.  Evaluation errors are recorded per point.
    """
    if grid is None:
        grid = DEFAULT_GRID
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite == "multiangle":
        return _multiangle(grid)
    if suite in ("doubleangle", "ode"):
        if not grid.q_values:
            return []
        return _doubleangle(grid) if suite == "doubleangle" else _ode(grid)
    return _per_pair(suite, grid)
