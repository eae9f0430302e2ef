import math

import pytest
from hypothesis import given, strategies as st

from conftest import interior, pairs
from gentrig import DomainError, OverflowSignal, ParamPair, cos_pq, cosh_pq, ghf, gtf, half_period, validate
from gentrig.duality import (
    DualPairing,
    cos_via_dual,
    cosh_via_dual,
    double_dual_residuals,
    pairing,
    sin_via_dual,
    sinh_via_dual,
    tam_via_dual,
    tamh_via_dual,
    transported_pythagorean,
)

TRIG = [(sin_via_dual, gtf.sin_pq), (cos_via_dual, gtf.cos_pq), (tam_via_dual, gtf.tam_pq)]
HYP = [(sinh_via_dual, ghf.sinh_pq), (cosh_via_dual, ghf.cosh_pq), (tamh_via_dual, ghf.tamh_pq)]


def _agree(a, b, tol=1e-10):
    return abs(a - b) <= tol * max(1.0, abs(a))


def test_pairing_structure():
    pg = pairing(2, 3)
    assert pg.primal == validate(2, 3)
    assert pg.dual.q == 3.0 and pg.r == pytest.approx(1.2, rel=1e-15)
    back = pg.swapped()
    assert back.primal == pg.dual
    assert back.r == pytest.approx(2.0, rel=1e-14)
    assert pairing((2, 3)) == pairing(validate(2, 3))
    with pytest.raises(ValueError):
        DualPairing(validate(2, 3), validate(1.2, 2))
    with pytest.raises(ValueError):
        DualPairing(validate(2, 3), validate(1.5, 3))


def test_closed_forms():
    pg = pairing(2, 2)  # dual (1, 2): sinh = tan, cosh = sec^2
    assert sin_via_dual(pg, 0.6).value == pytest.approx(math.sin(0.6), abs=1e-15)
    assert cos_via_dual(pg, 0.6).value == pytest.approx(math.cos(0.6), abs=1e-15)
    assert tam_via_dual(pg, 1.0).value == pytest.approx(math.tan(1.0), rel=1e-14)
    assert sinh_via_dual(pairing(1, 2), 0.5).value == pytest.approx(math.tan(0.5), rel=1e-14)
    assert sinh_via_dual(pg, 0.9).value == pytest.approx(ghf.sinh_pq((2, 2), 0.9).value, abs=1e-10)
    assert cosh_via_dual(pg, 0.9).value == pytest.approx(math.cosh(0.9), rel=1e-14)


def test_values_at_zero():
    pg = pairing(2, 3)
    assert sin_via_dual(pg, 0).value == 0.0
    assert cos_via_dual(pg, 0).value == 1.0
    assert tam_via_dual(pg, 0).value == 0.0
    assert sinh_via_dual(pg, 0).value == 0.0
    assert cosh_via_dual(pg, 0).value == 1.0
    assert tamh_via_dual(pg, 0).value == 0.0


def test_path_agreement_examples():
    assert _agree(sin_via_dual(pairing(2, 3), 0.5).value, gtf.sin_pq((2, 3), 0.5).value)
    assert _agree(cos_via_dual(pairing(3, 2), 0.8).value, gtf.cos_pq((3, 2), 0.8).value)
    assert _agree(tam_via_dual(pairing(2, 3), 0.7).value, gtf.tam_pq((2, 3), 0.7).value)


def test_domains_follow_the_primal():
    pg = pairing(2, 3)
    end = half_period(pg.primal).value
    with pytest.raises(DomainError):
        sin_via_dual(pg, end)
    with pytest.raises(DomainError):
        sinh_via_dual(pg, -0.1)
    # sinh_{2,3} lives on [0, pi_{6/5,3}/2), beyond the trig branch
    x = 0.5 * (end + half_period(pg.dual).value)
    assert sinh_via_dual(pg, x).value > 0


def test_cosh_via_dual_signals_underflow():
    # cos_{1,1} = e^-x underflows; cosh_{1,1} itself is e^x
    with pytest.raises(OverflowSignal):
        cosh_via_dual(pairing(1, 1), 800.0)


def _evaluate(fns, pair, x):
    try:
        return [(via(pairing(pair), x).value, native(pair, x).value) for via, native in fns]
    except OverflowSignal:
        return []


@given(pairs(), st.floats(0.0, 0.98))
def test_trig_transforms(pair, frac):
    x = interior(pair, frac, half_period(pair).value)
    for a, b in _evaluate(TRIG, pair, x):
        assert _agree(b, a)


@given(pairs(), st.floats(0.0, 0.98))
def test_hyp_transforms(pair, frac):
    dual = ParamPair(pairing(pair).r, pair.q)
    x = interior(pair, frac, half_period(dual).value)
    for a, b in _evaluate(HYP, pair, x):
        assert _agree(b, a)


@given(pairs(), st.floats(0.0, 0.98), st.sampled_from(["trig", "hyp"]))
def test_double_dual(pair, frac, kind):
    pg = pairing(pair)
    end = half_period(pg.primal if kind == "trig" else pg.dual).value
    x = interior(pair, frac, end)
    try:
        res = double_dual_residuals(pg, x, kind)
    except OverflowSignal:
        return
    assert max(res.values()) <= 2e-10


@given(pairs(), st.floats(0.0, 0.98))
def test_transported_pythagorean(pair, frac):
    x = interior(pair, frac, half_period(pair).value)
    try:
        trig, hyp = transported_pythagorean(pairing(pair), x)
    except OverflowSignal:
        return
    assert abs(trig) <= 1e-10
    assert abs(hyp) <= 1e-10


def test_double_dual_rejects_kind():
    with pytest.raises(ValueError):
        double_dual_residuals(pairing(2, 2), 0.5, "both")


@given(pairs(), st.floats(0.0, 0.98))
def test_cos_exponent_relation(pair, frac):
    # cos_{p,q}^p = cosh_{r,q}^(-r): the Pythagorean relations map onto each other
    pg = pairing(pair)
    x = interior(pair, frac, half_period(pair).value)
    try:
        ch = cosh_pq(pg.dual, x).value
    except OverflowSignal:
        return
    lhs = cos_pq(pair, x).value ** pair.p
    assert lhs == pytest.approx(ch ** -pg.r, rel=1e-9, abs=1e-300)


def test_double_dual_with_underflowing_middle():
    # cos at the middle pair underflows although cosh_{p,q} itself is finite
    res = double_dual_residuals(pairing(5.6875, 5.75), 80.46088970600024, "hyp")
    assert max(res.values()) <= 2e-10
