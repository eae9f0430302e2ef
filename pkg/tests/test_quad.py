import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import pairs
from gentrig import DomainError, dual_index, half_period, integral_F, integral_G, integrate_singular, validate
from gentrig.identities import DEFAULT_GRID
from gentrig.params import log_beta
from gentrig.quad import DEFAULT_TOL, default_tol
from oracle_tables import SIN, SINH

TOL = DEFAULT_TOL


def test_integrate_singular_examples():
    assert integrate_singular(lambda t: np.ones_like(t), 0, 1, 1e-12).value == pytest.approx(1.0, abs=1e-12)
    res = integrate_singular(lambda t, lo, hi: 1 / np.sqrt(hi * (1 + t)), 0, 1, 1e-12, with_distance=True)
    assert res.value == pytest.approx(math.pi / 2, abs=1e-12)
    ref = math.exp(log_beta(1 / 3, 1 / 2)) / 3
    f = lambda t, lo, hi: (hi * (1 + t + t * t)) ** -0.5
    assert integrate_singular(f, 0, 1, 1e-12, with_distance=True).value == pytest.approx(ref, abs=1e-12)
    # the same integral with the singularity moved to 0, where abscissae are exact
    g = lambda u: (u * (3 - 3 * u + u * u)) ** -0.5  # 1 - (1-u)^3, expanded
    assert integrate_singular(g, 0, 1, 1e-12).value == pytest.approx(ref, abs=1e-12)


def test_integrate_singular_rejects_bad_interval():
    f = lambda t: t
    with pytest.raises(DomainError):
        integrate_singular(f, 1, 0)
    with pytest.raises(DomainError):
        integrate_singular(f, 0, math.inf)
    with pytest.raises(DomainError):
        integrate_singular(f, 0, 1, tol=0)


def test_classical_integrals():
    assert integral_F(validate(2, 2), 0.5).value == pytest.approx(math.asin(0.5), abs=1e-15)
    assert integral_F(validate(1, 2), 0.5).value == pytest.approx(math.atanh(0.5), abs=1e-14)
    assert integral_G(validate(1, 2), 1.0).value == pytest.approx(math.pi / 4, abs=1e-15)
    assert integral_G(validate(2, 2), 1.0).value == pytest.approx(math.asinh(1.0), abs=1e-15)
    for pair in [validate(2, 3), validate(0.8, 2), validate(1.2, 0.5)]:
        assert integral_F(pair, 0.0).value == 0.0
        assert integral_G(pair, 0.0).value == 0.0


def test_classical_tails():
    for y in [0.6, 0.9, 0.999, 1 - 1e-9]:
        assert integral_F(validate(2, 2), y).value == pytest.approx(math.asin(y), rel=1e-14)
        assert integral_F(validate(1, 2), y).value == pytest.approx(math.atanh(y), rel=1e-14)
    for y in [2.0, 50.0, 1e6, 1e200]:
        assert integral_G(validate(2, 2), y).value == pytest.approx(math.asinh(y), rel=1e-14)
        assert integral_G(validate(1, 2), y).value == pytest.approx(math.atan(y), rel=1e-14)


@pytest.mark.parametrize("p,q,x,y,c", SIN)
def test_F_at_reference_points(p, q, x, y, c):
    # F(sin x) = x; y is the rounded reference, so allow for dF/dy * ulp(y)
    pair = validate(p, q)
    slope = 1 / c
    got = integral_F(pair, y).value
    assert abs(got - x) <= 4e-13 * (1 + x) + slope * 1.2e-16


@pytest.mark.parametrize("p,q,x,y", SINH)
def test_G_at_reference_points(p, q, x, y):
    pair = validate(p, q)
    slope = (1 + y ** q) ** (-1 / p)
    got = integral_G(pair, y).value
    assert abs(got - x) <= 4e-13 * (1 + x) + slope * y * 1.2e-16


def test_domain_errors():
    pair = validate(2, 2)
    for y in [-0.1, 1.0, 1.5, math.nan]:
        with pytest.raises(DomainError):
            integral_F(pair, y)
    for y in [-1.0, math.inf, math.nan]:
        with pytest.raises(DomainError):
            integral_G(pair, y)


@given(pairs(), st.floats(0.0, 0.999), st.floats(0.0, 0.999))
def test_F_additivity(pair, a, b):
    y1, y2 = sorted((a, b))
    if y2 - y1 < 1e-6:
        return
    p, q = pair
    # 1 - t^q through expm1 so steep integrands near t = 1 keep their digits
    seg = integrate_singular(lambda t: (-np.expm1(q * np.log(t))) ** (-1 / p), y1, y2, TOL).value
    diff = integral_F(pair, y2).value - integral_F(pair, y1).value
    assert abs(diff - seg) <= 2 * TOL * max(1.0, integral_F(pair, y2).value) + 1e-15


def _strictly_above(hi, lo, step):
    # hi >= lo always; strictly once the true step clears the error estimates
    assert hi.value >= lo.value
    if step > 4e-16 * abs(hi.value) + 2 * (hi.err_est + lo.err_est):
        assert hi.value > lo.value


@given(pairs(), st.floats(0.0, 0.9999), st.floats(1e-6, 0.01))
def test_F_increasing(pair, y, dy):
    y2 = min(y + dy, 1 - 1e-12)
    # the integrand is at least 1
    _strictly_above(integral_F(pair, y2), integral_F(pair, y), y2 - y)


@given(pairs(), st.floats(0.0, 1e6), st.floats(1e-6, 1.0))
def test_G_increasing(pair, y, rel):
    y2 = y * (1 + rel) + rel
    step = (y2 - y) * (1 + y2 ** pair.q) ** (-1 / pair.p)
    _strictly_above(integral_G(pair, y2), integral_G(pair, y), step)


def _f_gap(p, q, w):
    # leading term of int_{1-w}^1 (1 - t^q)^(-1/p) dt
    return q ** (-1 / p) * w ** (1 - 1 / p) / (1 - 1 / p)


def test_F_limit_matches_half_period():
    y = 1 - 1e-12
    w = 1 - y  # exact, and not quite 1e-12
    for pair in DEFAULT_GRID.pairs():
        if pair.p <= 1:
            continue
        hp = half_period(pair).value
        gap = hp - integral_F(pair, y).value
        lead = _f_gap(pair.p, pair.q, w)
        if lead < 1e-7:
            assert abs(gap) <= 1e-6
        # the next term is smaller by O(w)
        assert gap == pytest.approx(lead, rel=1e-6, abs=4e-15 * hp)


def test_G_limit_matches_dual_half_period():
    big_y = 1e8
    for pair in DEFAULT_GRID.pairs():
        r = dual_index(pair)
        if r <= 1:
            continue
        hr = half_period(validate(r, pair.q)).value
        gap = hr - integral_G(pair, big_y).value
        e = pair.q / pair.p - 1
        lead = big_y ** (-e) / e
        if lead < 1e-7:
            assert abs(gap) <= 1e-6
        assert gap == pytest.approx(lead, rel=1e-4, abs=4e-15 * hr)


def test_env_override(monkeypatch):
    monkeypatch.setenv("GENTRIG_TOL", "1e-8")
    assert default_tol() == 1e-8
    monkeypatch.setenv("GENTRIG_TOL", "nope")
    with pytest.raises(DomainError):
        default_tol()
    monkeypatch.delenv("GENTRIG_TOL")
    assert default_tol() == DEFAULT_TOL
