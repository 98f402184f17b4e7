import json
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfhyp.confcalc import conf_diff_numeric
from cfhyp.errors import DomainError, InsufficientSamples
from cfhyp.hypercore import Params, eval_2f1
from cfhyp.relations import (
    CATALOG,
    RELATION_IDS,
    catalog_json,
    eval_relation_sides,
    prefactor_derivative,
    rel_residual,
    sample_point,
    verify_relation,
)

# -ln(1-x)/x at x = 0.3, mpmath at 40 digits
T1_VALUE = 1.1889164797957748


def test_catalog_ids():
    assert len(RELATION_IDS) == 36
    expected = (
        [f"G{i}" for i in range(1, 4)] + ["T1", "T2"] + [f"D{i}" for i in range(1, 10)]
        + [f"C{i}" for i in range(1, 9)] + [f"E{i}" for i in range(1, 7)]
        + [f"R{i}" for i in range(1, 6)] + ["I1", "I2", "L1"]
    )
    assert sorted(expected) == list(RELATION_IDS)


def test_catalog_json_shape():
    rows = catalog_json()
    json.dumps(rows)
    assert [r["id"] for r in rows] == list(RELATION_IDS)
    for r in rows:
        assert set(r) == {"id", "equation_label", "arity", "predicate_description"}
        assert "x" in r["arity"]


def test_c4_symmetric_point_vanishes():
    p = Params(1.5, 1.5, 2.0, 0.5)
    lhs, rhs = eval_relation_sides("C4", p, {"x": 0.3**2})
    assert lhs == 0.0
    assert rhs == pytest.approx(0.0, abs=1e-15)


def test_t1_example():
    lhs, rhs = eval_relation_sides("T1", Params(1, 1, 2, 1), {"x": 0.3})
    assert lhs == pytest.approx(T1_VALUE, rel=1e-12)
    assert rhs == pytest.approx(T1_VALUE, rel=1e-12)


def test_r1_empty_sum_exact():
    p = Params(0.4, -1.3, 2.2, 0.75)
    lhs, rhs = eval_relation_sides("R1", p, {"x": 0.5, "n": 0})
    assert lhs == rhs


def test_verify_examples():
    assert verify_relation("C4", trials=200, tol=1e-9).passed
    assert verify_relation("G1", trials=100, tol=1e-8).passed
    assert verify_relation("D1", trials=100, tol=1e-9).passed


def test_d1_matches_limit_definition():
    rng = np.random.default_rng(5)
    checked = 0
    while checked < 20:
        p, pt = sample_point("D1", rng)
        lhs, _ = eval_relation_sides("D1", p, pt)
        numeric = conf_diff_numeric(lambda t: eval_2f1(p, t).value, pt["x"], p.alpha)
        assert rel_residual(lhs, numeric) <= 1e-5
        checked += 1


@settings(max_examples=40, deadline=None)
@given(st.floats(-4, 4), st.floats(-4, 4), st.floats(0.6, 6), st.floats(0.05, 0.85),
       st.sampled_from([0.25, 0.5, 1.0]))
def test_d1_equals_d2_order_one(mu, nu, c, u, alpha):
    p = Params(mu, nu, c, alpha)
    x = u ** (1 / alpha)
    d1 = eval_relation_sides("D1", p, {"x": x})
    d2 = eval_relation_sides("D2", p, {"x": x, "n": 1})
    assert d1[1] == pytest.approx(d2[1], rel=1e-13, abs=1e-300)
    assert rel_residual(d1[0], d2[0]) <= 1e-13


@settings(max_examples=40, deadline=None)
@given(st.floats(-4, 4), st.floats(-4, 4), st.floats(0.6, 6), st.floats(0.05, 0.85))
def test_r3_r4_order_one_match_r1_r2(mu, nu, c, u):
    p = Params(mu, nu, c, 1.0)
    pt = {"x": u, "n": 1}
    assert rel_residual(eval_relation_sides("R3", p, pt)[1], eval_relation_sides("R1", p, pt)[1]) <= 1e-12
    assert rel_residual(eval_relation_sides("R4", p, pt)[1], eval_relation_sides("R2", p, pt)[1]) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.6, 5), st.floats(0.05, 0.8))
def test_contiguous_forms_against_mpmath(mu, nu, c, u):
    # an independent evaluation of C4 and E4 with mpmath's hypergeometric
    mp.mp.dps = 30
    F = lambda a, b, cc: mp.hyp2f1(a, b, cc, u)  # noqa: E731
    c4 = (mu - nu) * F(mu, nu, c), mu * F(mu + 1, nu, c) - nu * F(mu, nu + 1, c)
    e4 = (nu - mu) * (1 - u) * F(mu, nu, c), (c - mu) * F(mu - 1, nu, c) - (c - nu) * F(mu, nu - 1, c)
    p = Params(mu, nu, c, 1.0)
    for rid, ref in (("C4", c4), ("E4", e4)):
        lhs, rhs = eval_relation_sides(rid, p, {"x": u})
        scale = max(1.0, abs(float(ref[0])), abs(float(ref[1])))
        assert abs(lhs - float(ref[0])) <= 1e-11 * scale
        assert abs(rhs - float(ref[1])) <= 1e-11 * scale


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.05, 0.9), st.integers(0, 4))
def test_prefactor_derivative_against_mpmath(P, Q, u, m):
    ref = mp.diff(lambda v: v**P * (1 - v) ** Q, u, m)
    assert prefactor_derivative(P, Q, u, m) == pytest.approx(float(ref), rel=1e-9, abs=1e-9)


def test_g2_at_t_equals_x_point():
    p = Params(0.7, -1.2, 2.5, 0.5)
    lhs, rhs = eval_relation_sides("G2", p, {"x": 0.25, "t": 0.25})
    assert rel_residual(lhs, rhs) <= 1e-10


def test_invalid_points():
    p = Params(0.3, 0.7, 1.2, 0.5)
    with pytest.raises(DomainError):
        eval_relation_sides("Z9", p, {"x": 0.2})
    with pytest.raises(DomainError):
        eval_relation_sides("D2", p, {"x": 0.2})
    with pytest.raises(DomainError):
        eval_relation_sides("C4", p, {"x": 1.5})
    with pytest.raises(DomainError):
        eval_relation_sides("I1", Params(1, 0.7, 1.2, 0.5), {"x": 0.2})
    with pytest.raises(DomainError):
        verify_relation("Z9")


def test_insufficient_samples(monkeypatch):
    import cfhyp.relations as rel

    monkeypatch.setattr(rel, "_points_ok", lambda rid, p, pt: False)
    with pytest.raises(InsufficientSamples):
        verify_relation("C1", trials=10)


def test_report_reproducible():
    a = verify_relation("E2", trials=50, seed=3)
    b = verify_relation("E2", trials=50, seed=3)
    assert a == b
    assert json.dumps(a.as_dict(), sort_keys=True) == json.dumps(b.as_dict(), sort_keys=True)


def test_report_inf_serializes():
    from cfhyp.relations import RelationReport

    r = RelationReport("C1", 1, math.inf, {}, False, 0)
    assert r.as_dict()["max_rel_residual"] == "inf"


@pytest.mark.parametrize("rid", sorted(CATALOG))
def test_each_relation_small_run(rid):
    report = verify_relation(rid, trials=30, seed=42)
    assert report.passed, report.worst_case
