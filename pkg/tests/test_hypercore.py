import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cfhyp.errors import DomainError, NoConvergence, PoleError
from cfhyp.hypercore import (
    Params,
    Region,
    domain_check,
    eval_2f1,
    gauss_coeffs,
    hyp2f1_series,
    pochhammer,
)
from oracles import brute_gauss

alphas = st.sampled_from([0.25, 0.5, 0.75, 1.0]) | st.floats(0.05, 1.0)
reals = st.floats(-4, 4, allow_nan=False)


def test_pochhammer_examples():
    assert pochhammer(3, 0) == 1
    assert pochhammer(2, 3) == 24
    assert pochhammer(-3, 5) == 0


@given(st.floats(-10, 10), st.integers(0, 20))
def test_pochhammer_step(b, n):
    assert pochhammer(b, n + 1) == pochhammer(b, n) * (b + n)


def test_eval_examples():
    assert eval_2f1(Params(1, 1, 2, 0.5), 1e-300).value == pytest.approx(1.0, abs=1e-12)
    assert eval_2f1(Params(1, 2, 2, 1), 0.5).value == pytest.approx(2.0, rel=1e-13)
    r = eval_2f1(Params(-2, 1, 1, 0.5), 0.25)
    assert r.value == pytest.approx(0.25, abs=1e-15)
    assert r.terminated and r.terms_used == 3 and r.abs_err_est == 0


def test_terminating_accepts_any_x():
    # (1 - u)^2 at u = 3
    assert eval_2f1(Params(-2, 1, 1, 0.5), 9.0).value == pytest.approx(4.0)


def test_errors():
    with pytest.raises(DomainError):
        eval_2f1(Params(0.5, 0.5, 1.5, 1), 1.0)
    with pytest.raises(DomainError):
        eval_2f1(Params(0.5, 0.5, 1.5, 1), -0.1)
    with pytest.raises(PoleError):
        Params(1, 1, -2, 1)
    with pytest.raises(PoleError):
        Params(-3, 1, -2, 1)
    Params(-2, 1, -3, 1)  # terminates before the pole
    with pytest.raises(DomainError):
        Params(1, 1, 1, 1.5)
    with pytest.raises(DomainError):
        Params(math.nan, 1, 1, 1)
    with pytest.raises(NoConvergence):
        eval_2f1(Params(0.5, 0.5, 1.5, 1), 0.999, max_terms=50)


def test_domain_check():
    p = Params(1, 1, 2, 0.5)
    assert domain_check(p, 0.81, Region.ORIGIN)
    assert not domain_check(Params(1, 1, 2, 1), 1.0, "origin")
    assert domain_check(p, 4.0, "infinity")
    assert domain_check(p, 0.36, "unit")
    assert not domain_check(p, 0.0, "unit")
    assert not domain_check(p, -1.0, "origin")


@settings(max_examples=200, deadline=None)
@given(reals, reals, st.floats(0.6, 6), alphas, st.floats(0.0, 0.9))
def test_classical_reduction(mu, nu, c, alpha, u):
    u = max(u, 1e-6)
    x = u ** (1.0 / alpha)
    value = eval_2f1(Params(mu, nu, c, alpha), x).value
    expected = brute_gauss(mu, nu, c, x**alpha)
    assert value == pytest.approx(expected, rel=10 * 1e-13, abs=1e-300) or abs(value - expected) <= 1e-12 * max(
        1.0, abs(expected)
    )


@given(reals, reals, st.floats(0.6, 6), st.floats(0.01, 0.9))
def test_symmetry_bitwise(mu, nu, c, u):
    a = hyp2f1_series(mu, nu, c, u).value
    b = hyp2f1_series(nu, mu, c, u).value
    assert a == b


@given(st.integers(0, 30), reals, st.floats(0.6, 6), st.floats(0.01, 3.0))
def test_terminating_exact_count(m, nu, c, u):
    assume(not float(nu).is_integer())
    r = hyp2f1_series(-m, nu, c, u)
    assert r.terminated and r.terms_used == m + 1 and r.abs_err_est == 0


def test_gauss_coeffs():
    assert list(gauss_coeffs(-2, 1, 1, 5)) == [1, -2, 1, 0, 0]
    assert gauss_coeffs(1, 1, 1, 4) == pytest.approx([1, 1, 1, 1])
