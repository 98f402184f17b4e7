"""Catalog of CFGHF identities with two-sided evaluation and random verification.

Every identity is written in ``u = x**alpha``.  Conformable derivatives of
order ``alpha`` act on functions of ``u`` as ``alpha * d/du``.  The left
side of each differential form splits by the Leibniz rule into derivatives
of an elementary prefactor ``u^P (1-u)^Q`` and term-wise derivatives of a
truncated Gauss series; the right side is built from independently summed
Gauss series at shifted parameters.  Expanding ``(1-u)^Q`` into its binomial
series instead loses up to seven digits to cancellation for large ``Q``.

Identity groups:

* ``G*``  generating functions (outer sums truncated adaptively)
* ``T*``  Pfaff and Euler transformations
* ``D*``  differential formulas, derivative order ``n >= 1``
* ``C*``, ``E*``  contiguous relations and their eliminations
* ``R*``  finite recursions in an integer shift ``n >= 0``
* ``I*``  integral formulas (adaptive quadrature on the left)
* ``L1``  a fractional Laplace transform (numeric transform on the left)
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .confcalc import FracSeries, conf_integral_numeric, series_diff, theta_apply
from .errors import CfhypError, DomainError, InsufficientSamples, NoConvergence
from .hypercore import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    Params,
    gauss_coeffs,
    hyp2f1_series,
    pochhammer,
    real_power,
)

DEFAULT_TRIALS = 200
DEFAULT_VERIFY_TOL = 1e-8

#: Minimum distance of every lower parameter from the poles {0, -1, -2, ...}.
POLE_MARGIN = 1e-2

ALPHAS = (0.25, 0.5, 0.75, 1.0)


@dataclass(frozen=True)
class TruncPolicy:
    """Truncation controls for series and outer sums."""

    tol: float = DEFAULT_TOL
    max_terms: int = DEFAULT_MAX_TERMS
    outer_terms: int = 60
    outer_max_terms: int = 1200
    series_start: int = 64
    # left sides of the differential forms need the tail below this fraction
    series_tail: float = 1e-18


def _F(a: float, b: float, c: float, z: float, trunc: TruncPolicy) -> float:
    return hyp2f1_series(a, b, c, z, tol=trunc.tol, max_terms=trunc.max_terms).value


def gauss_series(
    alpha: float, inner: tuple[float, float, float], u: float, order: int, trunc: TruncPolicy
) -> FracSeries:
    """Truncated series of ``F(inner; u)`` accurate at ``u`` after ``order`` derivatives.

    The length doubles until the last terms, weighted by the growth that
    ``order`` derivatives add, are negligible at ``u``.
    """
    n = trunc.series_start
    while True:
        coeffs = gauss_coeffs(*inner, n)
        k = np.arange(n)
        weight = np.abs(coeffs) * u**k * (1.0 + k) ** order
        if weight[-8:].max() <= trunc.series_tail * max(weight.max(), 1e-300):
            return FracSeries(alpha, 0.0, coeffs)
        if n >= trunc.max_terms:
            raise NoConvergence(f"series needs more than {n} terms at u = {u}")
        n = min(2 * n, trunc.max_terms)


def _falling(v: float, k: int) -> float:
    return pochhammer(v - k + 1, k)


def prefactor_derivative(P: float, Q: float, u: float, m: int) -> float:
    """``d^m/du^m [u^P (1-u)^Q]`` by the Leibniz rule on the two powers."""
    return math.fsum(
        math.comb(m, i) * _falling(P, i) * (-1) ** (m - i) * _falling(Q, m - i)
        * real_power(u, P - i) * real_power(1.0 - u, Q - m + i)
        for i in range(m + 1)
    )


def _outer_sum(term: Callable[[int], float], trunc: TruncPolicy) -> float:
    """Sum ``term(m)`` for ``m = 0, 1, ...`` in blocks until three consecutive terms are negligible."""
    total, small, m = 0.0, 0, 0
    limit = trunc.outer_terms
    while True:
        while m < limit:
            value = term(m)
            total += value
            small = small + 1 if abs(value) <= trunc.tol * abs(total) else 0
            m += 1
        if small >= 3:
            return total
        if limit >= trunc.outer_max_terms:
            raise NoConvergence(f"outer sum not converged after {limit} terms")
        limit = min(limit + trunc.outer_terms, trunc.outer_max_terms)


# ---------------------------------------------------------------------------
# sides of each identity; all take (Params, u, point, trunc)


def _g1(p: Params, u: float, pt: dict, tr: TruncPolicy) -> tuple[float, float]:
    mu, nu, c = p.mu, p.nu, p.c
    t = pt["t_alpha"]

    def term(m: int) -> float:
        return pochhammer(mu, m) * _F(mu + m, nu, c, u, tr) * t**m / math.factorial(m)

    lhs = _outer_sum(term, tr)
    rhs = (1.0 - t) ** (-mu) * _F(mu, nu, c, u / (1.0 - t), tr)
    return lhs, rhs


def _g2(p: Params, u: float, pt: dict, tr: TruncPolicy) -> tuple[float, float]:
    mu, nu, c = p.mu, p.nu, p.c
    t = pt["t_alpha"]

    def term(m: int) -> float:
        return pochhammer(mu, m) * _F(-m, nu, c, u, tr) * t**m / math.factorial(m)

    lhs = _outer_sum(term, tr)
    rhs = (1.0 - t) ** (-mu) * _F(mu, nu, c, -u * t / (1.0 - t), tr)
    return lhs, rhs


def _g3(p: Params, u: float, pt: dict, tr: TruncPolicy) -> tuple[float, float]:
    mu, nu, c = p.mu, p.nu, p.c
    t = pt["t_alpha"]

    def term(m: int) -> float:
        coef = pochhammer(mu, m) * pochhammer(nu, m) / (pochhammer(c, m) * math.factorial(m))
        return coef * _F(mu + m, nu + m, c + m, u, tr) * t**m

    return _outer_sum(term, tr), _F(mu, nu, c, u + t, tr)


def _t1(p: Params, u: float, pt: dict, tr: TruncPolicy) -> tuple[float, float]:
    rhs = (1.0 - u) ** (-p.mu) * _F(p.mu, p.c - p.nu, p.c, -u / (1.0 - u), tr)
    return _F(p.mu, p.nu, p.c, u, tr), rhs


def _t2(p: Params, u: float, pt: dict, tr: TruncPolicy) -> tuple[float, float]:
    rhs = (1.0 - u) ** (p.c - p.mu - p.nu) * _F(p.c - p.mu, p.c - p.nu, p.c, u, tr)
    return _F(p.mu, p.nu, p.c, u, tr), rhs


def _diff_side(
    p: Params, u: float, order: int, offset: float, q: float,
    inner: tuple[float, float, float] | None, tr: TruncPolicy,
) -> float:
    """``D^order [u^offset (1-u)^q F(inner; u)]``.

    The Leibniz rule splits the derivatives between the elementary prefactor
    and the Gauss series; the series part is differentiated term-wise.
    """
    a = p.alpha
    if inner is None:
        return a**order * prefactor_derivative(offset, q, u, order)
    s = gauss_series(a, inner, u, order, tr)
    total = []
    for j in range(order + 1):
        g = s.evaluate_power(u) if j == 0 else series_diff(s, j).evaluate_power(u)
        h = prefactor_derivative(offset, q, u, order - j)
        total.append(math.comb(order, j) * a ** (order - j) * h * g)
    return math.fsum(total)


def _d1(p, u, pt, tr):
    lhs = _diff_side(p, u, 1, 0.0, 0.0, (p.mu, p.nu, p.c), tr)
    rhs = p.alpha * p.mu * p.nu / p.c * _F(p.mu + 1, p.nu + 1, p.c + 1, u, tr)
    return lhs, rhs


def _d2(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    lhs = _diff_side(p, u, n, 0.0, 0.0, (p.mu, p.nu, p.c), tr)
    coef = a**n * pochhammer(p.mu, n) * pochhammer(p.nu, n) / pochhammer(p.c, n)
    return lhs, coef * _F(p.mu + n, p.nu + n, p.c + n, u, tr)


def _d3(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    lhs = _diff_side(p, u, n, p.mu + n - 1, 0.0, (p.mu, p.nu, p.c), tr)
    rhs = a**n * pochhammer(p.mu, n) * real_power(u, p.mu - 1) * _F(p.mu + n, p.nu, p.c, u, tr)
    return lhs, rhs


def _d4(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    lhs = _diff_side(p, u, n, p.c - 1, 0.0, (p.mu, p.nu, p.c), tr)
    rhs = a**n * pochhammer(p.c - n, n) * real_power(u, p.c - n - 1) * _F(p.mu, p.nu, p.c - n, u, tr)
    return lhs, rhs


def _d5(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    q = p.mu + p.nu - p.c
    lhs = _diff_side(p, u, n, p.c - p.mu + n - 1, q, (p.mu, p.nu, p.c), tr)
    rhs = (
        a**n * pochhammer(p.c - p.mu, n) * real_power(u, p.c - p.mu - 1)
        * real_power(1.0 - u, q - n) * _F(p.mu - n, p.nu, p.c, u, tr)
    )
    return lhs, rhs


def _d6(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    q = p.mu + p.nu - p.c
    lhs = _diff_side(p, u, n, 0.0, q, (p.mu, p.nu, p.c), tr)
    coef = a**n * pochhammer(p.c - p.mu, n) * pochhammer(p.c - p.nu, n) / pochhammer(p.c, n)
    return lhs, coef * real_power(1.0 - u, q - n) * _F(p.mu, p.nu, p.c + n, u, tr)


def _d7(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    q = p.mu + p.nu - p.c
    lhs = _diff_side(p, u, n, p.c - 1, q, (p.mu, p.nu, p.c), tr)
    rhs = (
        a**n * pochhammer(p.c - n, n) * real_power(u, p.c - n - 1) * real_power(1.0 - u, q - n)
        * _F(p.mu - n, p.nu - n, p.c - n, u, tr)
    )
    return lhs, rhs


def _d8(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    q = p.mu + p.nu - p.c
    lhs = _diff_side(p, u, n, n + p.c - 1, n + q, (p.mu + n, p.nu + n, p.c + n), tr)
    rhs = a**n * pochhammer(p.c, n) * real_power(u, p.c - 1) * real_power(1.0 - u, q) * _F(p.mu, p.nu, p.c, u, tr)
    return lhs, rhs


def _d9(p, u, pt, tr):
    n, a = pt["n"], p.alpha
    lhs = _diff_side(p, u, n, n + p.c - 1, p.nu - p.c, None, tr)
    rhs = (
        a**n * pochhammer(p.c, n) * real_power(u, p.c - 1) * real_power(1.0 - u, p.nu - p.c - n)
        * _F(-n, p.nu, p.c, u, tr)
    )
    return lhs, rhs


def _theta_side(p: Params, u: float, shift: float, tr: TruncPolicy) -> float:
    """``(theta + shift) F`` from the truncated series of ``F``."""
    s = gauss_series(p.alpha, (p.mu, p.nu, p.c), u, 1, tr)
    return (theta_apply(s) + s.scale(shift)).evaluate_power(u)


def _c1(p, u, pt, tr):
    return _theta_side(p, u, p.mu, tr), p.mu * _F(p.mu + 1, p.nu, p.c, u, tr)


def _c2(p, u, pt, tr):
    return _theta_side(p, u, p.nu, tr), p.nu * _F(p.mu, p.nu + 1, p.c, u, tr)


def _c3(p, u, pt, tr):
    return _theta_side(p, u, p.c - 1, tr), (p.c - 1) * _F(p.mu, p.nu, p.c - 1, u, tr)


class _Contig:
    """Contiguous neighbours of ``F(mu, nu; c; u)`` evaluated on demand."""

    def __init__(self, p: Params, u: float, tr: TruncPolicy) -> None:
        self.p, self.u, self.tr = p, u, tr

    def __call__(self, dmu: float = 0, dnu: float = 0, dc: float = 0) -> float:
        p = self.p
        return _F(p.mu + dmu, p.nu + dnu, p.c + dc, self.u, self.tr)


def _c4(p, u, pt, tr):
    F = _Contig(p, u, tr)
    return (p.mu - p.nu) * F(), p.mu * F(dmu=1) - p.nu * F(dnu=1)


def _c5(p, u, pt, tr):
    F = _Contig(p, u, tr)
    return (p.mu - p.c + 1) * F(), p.mu * F(dmu=1) - (p.c - 1) * F(dc=-1)


def _c6(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (p.mu + (p.nu - p.c) * u) * F()
    rhs = p.mu * (1 - u) * F(dmu=1) - (p.c - p.mu) * (p.c - p.nu) / p.c * u * F(dc=1)
    return lhs, rhs


def _c7(p, u, pt, tr):
    F = _Contig(p, u, tr)
    return (1 - u) * F(), F(dmu=-1) - (p.c - p.nu) / p.c * u * F(dc=1)


def _c8(p, u, pt, tr):
    F = _Contig(p, u, tr)
    return (1 - u) * F(), F(dnu=-1) - (p.c - p.mu) / p.c * u * F(dc=1)


def _e1(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (2 * p.mu - p.c + (p.nu - p.mu) * u) * F()
    return lhs, p.mu * (1 - u) * F(dmu=1) - (p.c - p.mu) * F(dmu=-1)


def _e2(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (p.mu + p.nu - p.c) * F()
    return lhs, p.mu * (1 - u) * F(dmu=1) - (p.c - p.nu) * F(dnu=-1)


def _e3(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (p.c - p.mu - p.nu) * F()
    return lhs, (p.c - p.mu) * F(dmu=-1) - p.nu * (1 - u) * F(dnu=1)


def _e4(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (p.nu - p.mu) * (1 - u) * F()
    return lhs, (p.c - p.mu) * F(dmu=-1) - (p.c - p.nu) * F(dnu=-1)


def _e5(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (1 - p.mu + (p.c - p.nu - 1) * u) * F()
    return lhs, (p.c - p.mu) * F(dmu=-1) - (p.c - 1) * (1 - u) * F(dc=-1)


def _e6(p, u, pt, tr):
    F = _Contig(p, u, tr)
    lhs = (2 * p.nu - p.c + (p.mu - p.nu) * u) * F()
    return lhs, p.nu * (1 - u) * F(dnu=1) - (p.c - p.nu) * F(dnu=-1)


def _r1(p, u, pt, tr):
    n = pt["n"]
    F = _Contig(p, u, tr)
    tail = sum(F(dmu=n - k + 1, dnu=1, dc=1) for k in range(1, n + 1))
    return F(dmu=n), F() + p.nu * u / p.c * tail


def _r2(p, u, pt, tr):
    n = pt["n"]
    F = _Contig(p, u, tr)
    tail = sum(F(dmu=-k + 1, dnu=1, dc=1) for k in range(1, n + 1))
    return F(dmu=-n), F() - p.nu * u / p.c * tail


def _r3(p, u, pt, tr):
    n = pt["n"]
    F = _Contig(p, u, tr)
    rhs = math.fsum(
        math.comb(n, k) * pochhammer(p.nu, k) / pochhammer(p.c, k) * u**k * F(dmu=k, dnu=k, dc=k)
        for k in range(n + 1)
    )
    return F(dmu=n), rhs


def _r4(p, u, pt, tr):
    n = pt["n"]
    F = _Contig(p, u, tr)
    rhs = math.fsum(
        (-1) ** k * math.comb(n, k) * pochhammer(p.nu, k) / pochhammer(p.c, k) * u**k * F(dnu=k, dc=k)
        for k in range(n + 1)
    )
    return F(dmu=-n), rhs


def _r5(p, u, pt, tr):
    n = pt["n"]
    F = _Contig(p, u, tr)
    total = math.fsum(
        (-1) ** k * math.comb(n, k) * pochhammer(p.nu, k) / pochhammer(p.c, k) * F(dnu=k, dc=k)
        for k in range(n + 1)
    )
    return F(dc=n), pochhammer(p.c, n) / pochhammer(p.c - p.nu, n) * total


def _i1(p, u, pt, tr):
    x = pt["x"]
    lhs = conf_integral_numeric(
        lambda t: _F(p.mu, p.nu, p.c, real_power(t, p.alpha), tr), 0.0, x, p.alpha
    )
    coef = (p.c - 1) / (p.alpha * (p.mu - 1) * (p.nu - 1))
    return lhs, coef * (_F(p.mu - 1, p.nu - 1, p.c - 1, u, tr) - 1.0)


def _i2(p, u, pt, tr):
    x = pt["x"]
    integral = conf_integral_numeric(
        lambda t: _F(p.mu + 1, p.nu + 1, p.c + 1, real_power(t, p.alpha), tr), 0.0, x, p.alpha
    )
    return _F(p.mu, p.nu, p.c, u, tr), 1.0 + p.alpha * p.mu * p.nu / p.c * integral


def _l1(p, u, pt, tr):
    from .analytic import frac_laplace_numeric, laplace_shifted_2f1

    s, a = pt["s"], p.alpha

    def f(t: float) -> float:
        return _F(p.mu, p.nu, 1.0, u * -math.expm1(-real_power(t, a) / a), tr)

    return frac_laplace_numeric(f, a, s), laplace_shifted_2f1(p, pt["x"], s)


# ---------------------------------------------------------------------------
# predicates and sampling


def _pole_distance(v: float) -> float:
    """Distance from ``v`` to the nearest nonpositive integer."""
    if v > 0:
        return v
    return abs(v - round(v))


def _lower_params(rid: str, p: Params, pt: dict) -> list[float]:
    """Every lower (denominator) parameter the identity touches."""
    c, n = p.c, pt.get("n", 0)
    base = [c]
    if rid in ("D1",):
        return base + [c + 1]
    if rid in ("D2", "D6"):
        return base + [c + n]
    if rid in ("D4", "D7"):
        return base + [c - n]
    if rid == "D8":
        return base + [c + n]
    if rid in ("C3", "C5", "E5", "I1"):
        return base + [c - 1]
    if rid in ("C6", "C7", "C8", "I2"):
        return base + [c + 1]
    if rid in ("R1", "R2"):
        return base + [c + 1]
    if rid in ("R3", "R4"):
        return base + [c + k for k in range(n + 1)]
    if rid == "R5":
        # (c - nu)_n must stay away from zero as well
        return base + [c + n] + [c - p.nu + k for k in range(n)]
    return base


def _points_ok(rid: str, p: Params, pt: dict) -> bool:
    """The strict mathematical validity predicate."""
    u = real_power(pt["x"], p.alpha)
    if not 0.0 < u < 1.0:
        return False
    if rid in ("G1", "G2", "G3"):
        t = pt["t_alpha"]
        if not 0.0 <= t < 1.0:
            return False
        if rid == "G1" and not u / (1.0 - t) < 1.0:
            return False
        if rid == "G2" and not u * t / (1.0 - t) < 1.0:
            return False
        if rid == "G3" and not u + t < 1.0:
            return False
    if rid == "T1" and not u / (1.0 - u) < 1.0:
        return False
    if rid[0] == "D" and rid != "D1" and not (isinstance(pt.get("n"), int) and pt["n"] >= 1):
        return False
    if rid[0] == "R" and not (isinstance(pt.get("n"), int) and pt["n"] >= 0):
        return False
    if rid == "D1" and pt.get("n", 1) != 1:
        return False
    if rid == "I1" and (p.mu == 1 or p.nu == 1 or p.c == 1):
        return False
    if rid == "L1" and (p.c != 1.0 or not pt.get("s", 0) > 0):
        return False
    return all(_pole_distance(v) > 0 for v in _lower_params(rid, p, pt))


def _margin_ok(rid: str, p: Params, pt: dict) -> bool:
    """Sampling guard: keep away from poles and from slowly convergent corners."""
    if any(_pole_distance(v) < POLE_MARGIN for v in _lower_params(rid, p, pt)):
        return False
    if rid == "I1" and min(abs(p.mu - 1), abs(p.nu - 1), abs(p.c - 1)) < POLE_MARGIN:
        return False
    return True


@dataclass(frozen=True)
class Relation:
    id: str
    label: str
    arity: tuple[str, ...]
    predicate_description: str
    sides: Callable = field(repr=False)

    def as_dict(self) -> dict[str, object]:
        return {
            "id": self.id,
            "equation_label": self.label,
            "arity": list(self.arity),
            "predicate_description": self.predicate_description,
        }


_X = "0 < u < 1 with u = x^alpha"
_N_D = _X + "; derivative order n >= 1"
_N_R = _X + "; integer shift n >= 0"

CATALOG: dict[str, Relation] = {
    r.id: r
    for r in [
        Relation("G1", "sum_m (mu)_m F(mu+m,nu;c;u) t^m/m! = (1-t)^-mu F(mu,nu;c;u/(1-t))",
                 ("x", "t"), _X + "; 0 <= t^alpha < 1; u/(1-t^alpha) < 1", _g1),
        Relation("G2", "sum_m (mu)_m F(-m,nu;c;u) t^m/m! = (1-t)^-mu F(mu,nu;c;-u t/(1-t))",
                 ("x", "t"), _X + "; 0 <= t^alpha < 1; u t^alpha/(1-t^alpha) < 1", _g2),
        Relation("G3", "sum_m (mu)_m(nu)_m/((c)_m m!) F(mu+m,nu+m;c+m;u) t^m = F(mu,nu;c;u+t)",
                 ("x", "t"), _X + "; 0 <= t^alpha; u + t^alpha < 1", _g3),
        Relation("T1", "F(mu,nu;c;u) = (1-u)^-mu F(mu,c-nu;c;-u/(1-u))",
                 ("x",), _X + "; u/(1-u) < 1", _t1),
        Relation("T2", "F(mu,nu;c;u) = (1-u)^(c-mu-nu) F(c-mu,c-nu;c;u)", ("x",), _X, _t2),
        Relation("D1", "D F = (alpha mu nu/c) F(mu+1,nu+1;c+1)", ("x",), _X, _d1),
        Relation("D2", "D^n F = alpha^n (mu)_n(nu)_n/(c)_n F(mu+n,nu+n;c+n)", ("x", "n"), _N_D, _d2),
        Relation("D3", "D^n[u^(mu+n-1) F] = alpha^n (mu)_n u^(mu-1) F(mu+n,nu;c)", ("x", "n"), _N_D, _d3),
        Relation("D4", "D^n[u^(c-1) F] = alpha^n (c-n)_n u^(c-n-1) F(mu,nu;c-n)", ("x", "n"), _N_D, _d4),
        Relation("D5", "D^n[u^(c-mu+n-1)(1-u)^(mu+nu-c) F] = alpha^n (c-mu)_n u^(c-mu-1)"
                 "(1-u)^(mu+nu-c-n) F(mu-n,nu;c)", ("x", "n"), _N_D, _d5),
        Relation("D6", "D^n[(1-u)^(mu+nu-c) F] = alpha^n (c-mu)_n(c-nu)_n/(c)_n"
                 " (1-u)^(mu+nu-c-n) F(mu,nu;c+n)", ("x", "n"), _N_D, _d6),
        Relation("D7", "D^n[u^(c-1)(1-u)^(mu+nu-c) F] = alpha^n (c-n)_n u^(c-n-1)"
                 "(1-u)^(mu+nu-c-n) F(mu-n,nu-n;c-n)", ("x", "n"), _N_D, _d7),
        Relation("D8", "D^n[u^(n+c-1)(1-u)^(n+mu+nu-c) F(mu+n,nu+n;c+n)] = alpha^n (c)_n"
                 " u^(c-1)(1-u)^(mu+nu-c) F", ("x", "n"), _N_D, _d8),
        Relation("D9", "D^n[u^(n+c-1)(1-u)^(nu-c)] = alpha^n (c)_n u^(c-1)(1-u)^(nu-c-n) F(-n,nu;c)",
                 ("x", "n"), _N_D, _d9),
        Relation("C1", "(theta+mu) F = mu F(mu+1)", ("x",), _X, _c1),
        Relation("C2", "(theta+nu) F = nu F(nu+1)", ("x",), _X, _c2),
        Relation("C3", "(theta+c-1) F = (c-1) F(c-1)", ("x",), _X, _c3),
        Relation("C4", "(mu-nu) F = mu F(mu+1) - nu F(nu+1)", ("x",), _X, _c4),
        Relation("C5", "(mu-c+1) F = mu F(mu+1) - (c-1) F(c-1)", ("x",), _X, _c5),
        Relation("C6", "[mu+(nu-c)u] F = mu(1-u) F(mu+1) - (c-mu)(c-nu)/c u F(c+1)", ("x",), _X, _c6),
        Relation("C7", "(1-u) F = F(mu-1) - (c-nu)/c u F(c+1)", ("x",), _X, _c7),
        Relation("C8", "(1-u) F = F(nu-1) - (c-mu)/c u F(c+1)", ("x",), _X, _c8),
        Relation("E1", "[2mu-c+(nu-mu)u] F = mu(1-u) F(mu+1) - (c-mu) F(mu-1)", ("x",), _X, _e1),
        Relation("E2", "(mu+nu-c) F = mu(1-u) F(mu+1) - (c-nu) F(nu-1)", ("x",), _X, _e2),
        Relation("E3", "(c-mu-nu) F = (c-mu) F(mu-1) - nu(1-u) F(nu+1)", ("x",), _X, _e3),
        Relation("E4", "(nu-mu)(1-u) F = (c-mu) F(mu-1) - (c-nu) F(nu-1)", ("x",), _X, _e4),
        Relation("E5", "[1-mu+(c-nu-1)u] F = (c-mu) F(mu-1) - (c-1)(1-u) F(c-1)", ("x",), _X, _e5),
        Relation("E6", "[2nu-c+(mu-nu)u] F = nu(1-u) F(nu+1) - (c-nu) F(nu-1)", ("x",), _X, _e6),
        Relation("R1", "F(mu+n) = F + (nu u/c) sum_{k=1..n} F(mu+n-k+1,nu+1;c+1)", ("x", "n"), _N_R, _r1),
        Relation("R2", "F(mu-n) = F - (nu u/c) sum_{k=1..n} F(mu-k+1,nu+1;c+1)", ("x", "n"), _N_R, _r2),
        Relation("R3", "F(mu+n) = sum_k C(n,k) (nu)_k/(c)_k u^k F(mu+k,nu+k;c+k)", ("x", "n"), _N_R, _r3),
        Relation("R4", "F(mu-n) = sum_k (-1)^k C(n,k) (nu)_k/(c)_k u^k F(mu,nu+k;c+k)",
                 ("x", "n"), _N_R, _r4),
        Relation("R5", "F(mu,nu;c+n) = (c)_n/(c-nu)_n sum_k (-1)^k C(n,k) (nu)_k/(c)_k F(mu,nu+k;c+k)",
                 ("x", "n"), _N_R + "; (c-nu)_n != 0", _r5),
        Relation("I1", "int_0^x F(mu,nu;c;t^alpha) t^(alpha-1) dt = (c-1)/(alpha(mu-1)(nu-1))"
                 " [F(mu-1,nu-1;c-1;u) - 1]", ("x",), _X + "; mu, nu, c != 1", _i1),
        Relation("I2", "F = 1 + (alpha mu nu/c) int_0^x F(mu+1,nu+1;c+1;t^alpha) t^(alpha-1) dt",
                 ("x",), _X, _i2),
        Relation("L1", "L_alpha[F(mu,nu;1;u(1-exp(-t^alpha/alpha)))](s) = F(mu,nu;s+1;u)/s",
                 ("x", "s"), _X + "; c = 1; s > 0", _l1),
    ]
}

RELATION_IDS: tuple[str, ...] = tuple(sorted(CATALOG))


def catalog_json() -> list[dict[str, object]]:
    return [CATALOG[rid].as_dict() for rid in RELATION_IDS]


def _lookup(rid: str) -> Relation:
    try:
        return CATALOG[rid]
    except KeyError:
        raise DomainError(f"unknown relation id {rid!r}") from None


def eval_relation_sides(
    rid: str, p: Params, point: dict, trunc: TruncPolicy | None = None
) -> tuple[float, float]:
    """``(lhs, rhs)`` of identity ``rid`` at ``point`` (keys ``x`` and as needed ``t``, ``n``, ``s``).

    ``t`` enters generating functions through ``t^alpha``.
    """
    rel = _lookup(rid)
    trunc = trunc or TruncPolicy()
    pt = dict(point)
    if "x" not in pt:
        raise DomainError(f"{rid} needs a point x")
    if "t" in pt and "t_alpha" not in pt:
        pt["t_alpha"] = real_power(pt["t"], p.alpha) if pt["t"] > 0 else 0.0
    for key in rel.arity:
        if key == "t" and "t_alpha" in pt:
            continue
        if key not in pt:
            raise DomainError(f"{rid} needs a value for {key!r}")
    if "n" in pt:
        if isinstance(pt["n"], float) and pt["n"].is_integer():
            pt["n"] = int(pt["n"])
    if not _points_ok(rid, p, pt):
        raise DomainError(f"{rid}: point {point} violates: {rel.predicate_description}")
    u = real_power(pt["x"], p.alpha)
    return rel.sides(p, u, pt, trunc)


def rel_residual(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)


def sample_point(rid: str, rng: np.random.Generator) -> tuple[Params, dict]:
    """One draw from the sampling policy; may violate the predicate."""
    mu, nu = rng.uniform(-4.0, 4.0, size=2)
    c = rng.uniform(0.6, 6.0)
    alpha = float(ALPHAS[rng.integers(len(ALPHAS))])
    # the Pfaff argument -u/(1-u) must stay well inside the unit disk
    u = rng.uniform(0.05, 0.375) if rid == "T1" else rng.uniform(0.05, 0.85)
    t = rng.uniform(0.05, 0.4)
    n = int(rng.integers(1, 6)) if rid[0] == "D" else int(rng.integers(0, 6))
    s = rng.uniform(0.5, 4.0)
    if rid in ("G1", "G3"):
        # the outer sum converges geometrically with ratio t/(1-u)
        t *= min(1.0, (1.0 - u) / 0.8)
    if rid == "L1":
        c = 1.0
    point: dict = {"x": float(u ** (1.0 / alpha))}
    if "t" in CATALOG[rid].arity:
        point["t_alpha"] = float(t)
    if rid[0] in "DR" and rid != "D1":
        point["n"] = n
    if rid == "L1":
        point["s"] = float(s)
    return Params(float(mu), float(nu), float(c), alpha), point


@dataclass(frozen=True)
class RelationReport:
    id: str
    trials: int
    max_rel_residual: float
    worst_case: dict
    passed: bool
    seed: int
    skipped: int = 0

    def as_dict(self) -> dict[str, object]:
        resid = self.max_rel_residual
        return {
            "id": self.id,
            "trials": self.trials,
            "max_rel_residual": resid if math.isfinite(resid) else "inf",
            "worst_case": self.worst_case,
            "passed": self.passed,
            "seed": self.seed,
            "skipped": self.skipped,
        }


def verify_relation(
    rid: str,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    tol: float = DEFAULT_VERIFY_TOL,
    trunc: TruncPolicy | None = None,
) -> RelationReport:
    """Check identity ``rid`` on ``trials`` seeded draws.

    Draws that violate the validity predicate or the pole margins are
    skipped.  Evaluation failures count as an infinite residual.
    """
    _lookup(rid)
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    trunc = trunc or TruncPolicy()
    rng = np.random.default_rng(seed)
    worst, worst_case, used = -1.0, {}, 0
    for _ in range(trials):
        try:
            p, pt = sample_point(rid, rng)
        except CfhypError:
            continue
        if not (_points_ok(rid, p, pt) and _margin_ok(rid, p, pt)):
            continue
        used += 1
        try:
            lhs, rhs = eval_relation_sides(rid, p, pt, trunc)
            resid = rel_residual(lhs, rhs)
            case = {"params": p.as_dict(), "point": pt, "lhs": lhs, "rhs": rhs}
        except CfhypError as exc:
            resid = math.inf
            case = {"params": p.as_dict(), "point": pt, "error": f"{type(exc).__name__}: {exc}"}
        if not math.isfinite(resid):
            resid = math.inf
        if resid > worst:
            worst, worst_case = resid, case
    if used < trials / 2:
        raise InsufficientSamples(f"{rid}: only {used} of {trials} draws were valid")
    return RelationReport(rid, trials, worst, worst_case, worst <= tol, seed, trials - used)
