import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cfhyp.cfghe import (
    SolutionBranch,
    cfghe_residual,
    frobenius_closed_form,
    frobenius_coeffs,
    indicial_roots,
    solutions_at_infinity,
    solutions_at_one,
    solutions_at_zero,
    theta_form_residual,
)
from cfhyp.confcalc import FracSeries
from cfhyp.errors import DegenerateRoot, DomainError
from cfhyp.hypercore import Params, gauss_coeffs
from oracles import mp_hyp2f1

P = Params(0.3, 0.7, 1.2, 0.5)


def test_indicial_roots():
    assert indicial_roots(Params(2, 3, 1.5, 1)) == (2, 3)
    assert indicial_roots(Params(0, 0, 1.5, 1)) == (0, 0)
    assert indicial_roots(Params(4, -1, 1.5, 1)) == (-1, 4)


@given(st.floats(-5, 5), st.floats(-5, 5))
def test_indicial_roots_solve_quadratic(mu, nu):
    for s in indicial_roots(Params(mu, nu, 1.5, 1)):
        assert s * s - s * (mu + nu) + mu * nu == pytest.approx(0, abs=1e-9)


def test_frobenius_examples():
    q = Params(1, 0.5, 1, 1)
    assert frobenius_coeffs(q, 1, 0).coeffs[0] == 1
    assert frobenius_coeffs(q, 1, 1).coeffs[1] == pytest.approx(2 / 3, rel=1e-15)
    assert np.allclose(frobenius_coeffs(q, 1, 20).coeffs, frobenius_closed_form(q, 1, 20), rtol=1e-13, atol=0)
    with pytest.raises(ValueError):
        frobenius_coeffs(q, 0.7, 3)


def test_frobenius_degenerate():
    with pytest.raises(DegenerateRoot):
        frobenius_coeffs(Params(1, 3, 1.5, 1), 1, 5)


def test_branch_limits():
    z, _ = solutions_at_zero(P)
    assert z.evaluate(1e-12) == pytest.approx(1.0, abs=1e-6)
    assert solutions_at_zero(Params(0, 0.7, 1.2, 0.5))[0].evaluate(0.3) == 1.0
    o, _ = solutions_at_one(P)
    assert o.evaluate(1 - 1e-12) == pytest.approx(1.0, abs=1e-9)
    assert solutions_at_one(Params(0, 0.7, 1.2, 0.5))[0].evaluate(0.3) == 1.0
    inf1, _ = solutions_at_infinity(P)
    x = 1e12
    assert inf1.evaluate(x) / x ** (-P.alpha * P.mu) == pytest.approx(1.0, abs=1e-5)


def test_branch_values_against_oracle():
    x = 0.25
    z1, z2 = solutions_at_zero(P)
    u = x**P.alpha
    assert z1.evaluate(x) == pytest.approx(mp_hyp2f1(0.3, 0.7, 1.2, u), rel=1e-12)
    assert z2.evaluate(x) == pytest.approx(u**-0.2 * mp_hyp2f1(0.1, 0.5, 0.8, u), rel=1e-12)


def test_infinity_swap():
    a1, a2 = solutions_at_infinity(P)
    b1, b2 = solutions_at_infinity(P.swapped())
    assert a1 == b2 and a2 == b1


def test_degenerate_pairs():
    with pytest.raises(DegenerateRoot):
        solutions_at_zero(Params(0.3, 0.7, 2, 1))
    with pytest.raises(DegenerateRoot):
        solutions_at_one(Params(0.3, 0.7, 2, 1))
    with pytest.raises(DegenerateRoot):
        solutions_at_infinity(Params(1, 2, 3, 1))


def test_residual_examples():
    for b in solutions_at_zero(P):
        assert cfghe_residual(b, P, 0.25, 80).relative <= 1e-9
    x = 0.6 ** (1 / P.alpha)
    for b in solutions_at_one(P):
        assert cfghe_residual(b, P, x).relative <= 1e-9
    for b in solutions_at_infinity(P):
        assert cfghe_residual(b, P, 16.0).relative <= 1e-9
    q = Params(1, 0.5, 1.3, 0.5)
    b = solutions_at_zero(q)[0]
    assert cfghe_residual(b, q, 0.4**2, 60).relative <= 1e-9


def test_residual_constant_solution():
    q = Params(0, 0.5, 1.3, 0.5)
    r = cfghe_residual(solutions_at_zero(q)[0], q, 0.3)
    assert abs(r.residual) <= 1e-14 * r.scale


def test_residual_detects_corruption():
    q = Params(1, 0.5, 1.3, 0.5)
    coeffs = gauss_coeffs(1, 0.5, 1.3, 60).copy()
    coeffs[1] *= 1 + 1e-3
    r = cfghe_residual(FracSeries(0.5, 0, coeffs), q, 0.16)
    assert r.relative >= 1e-5


def test_residual_outside_region():
    b = solutions_at_infinity(P)[0]
    with pytest.raises(DomainError):
        cfghe_residual(b, P, 0.5)


def test_branch_validation():
    z = solutions_at_zero(P)[0]
    with pytest.raises(ValueError):
        SolutionBranch(z.transform, "x_neg_alpha", 1.0, P, "origin")
    with pytest.raises(ValueError):
        SolutionBranch(z.transform, "none", 0.0, P, "unit")


def _draw(rng):
    while True:
        mu, nu = rng.uniform(-4, 4, 2)
        c = rng.uniform(0.6, 6)
        p = Params(mu, nu, c, float(rng.choice([0.25, 0.5, 0.75, 1.0])))
        try:
            return p, solutions_at_zero(p) + solutions_at_one(p) + solutions_at_infinity(p)
        except DegenerateRoot:
            continue


def test_six_branches_random():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p, branches = _draw(rng)
        for b in branches:
            for w in (0.1, 0.3, 0.5):
                u = {"origin": w, "unit": 1 - w, "infinity": 1 / w}[b.region.value]
                assert cfghe_residual(b, p, u ** (1 / p.alpha), 60).relative <= 1e-8


@settings(max_examples=50, deadline=None)
@given(st.floats(-4, 4), st.floats(-4, 4), st.floats(0.6, 6), st.floats(0.05, 0.8))
def test_theta_form_matches(mu, nu, c, u):
    p = Params(mu, nu, c, 0.5)
    s = FracSeries(0.5, 0, gauss_coeffs(mu, nu, c, 40))
    x = u**2
    direct = cfghe_residual(s, p, x)
    theta = theta_form_residual(s, p, x)
    # the theta form equals u / alpha^2 times the conformable form
    assume(max(direct.scale, theta.scale) > 1e-200)
    assert theta.residual == pytest.approx(u / p.alpha**2 * direct.residual, rel=1e-12, abs=1e-12 * theta.scale)
