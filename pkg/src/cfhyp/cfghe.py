"""Frobenius solutions of the conformable Gauss hypergeometric equation.

The equation in ``u = x**alpha`` reads::

    u (1 - u) D D y + alpha [c - (mu + nu + 1) u] D y - alpha^2 mu nu y = 0

with ``D`` the conformable derivative of order ``alpha``.  It has regular
singular points at ``u = 0``, ``u = 1`` and ``u = inf``; each carries a pair
of power-series solutions in its local variable ``w``:

=========  ==================  ==========================================
point      local variable w    branches
=========  ==================  ==========================================
origin     x^alpha             F(mu, nu; c; w), w^(1-c) F(...; 2-c; w)
unit       1 - x^alpha         F(mu, nu; mu+nu+1-c; w), w^(c-mu-nu) F(...)
infinity   x^(-alpha)          w^mu F(mu, mu-c+1; mu-nu+1; w), mu <-> nu
=========  ==================  ==========================================

Residuals are computed from term-wise analytic derivatives in ``w`` and the
chain rules ``D_x = -D_w`` (unit) and ``D_x = -w^2 D_w`` (infinity, written
in terms of ``w = zeta^alpha``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .confcalc import FracSeries, series_diff, theta_apply
from .errors import DegenerateRoot, DomainError
from .hypercore import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    Params,
    Region,
    domain_check,
    gauss_coeffs,
    hyp2f1_series,
    pochhammer,
    real_power,
)

DEFAULT_RESIDUAL_TERMS = 60

#: Parameter differences closer than this to an integer count as degenerate.
_INTEGER_ATOL = 1e-9


class Transform(str, enum.Enum):
    U_EQ_X_ALPHA = "u_eq_x_alpha"
    U_EQ_ONE_MINUS_X_ALPHA = "u_eq_one_minus_x_alpha"
    U_EQ_X_NEG_ALPHA = "u_eq_x_neg_alpha"


class Prefactor(str, enum.Enum):
    NONE = "none"
    X_ALPHA = "x_alpha"
    ONE_MINUS_X_ALPHA = "one_minus_x_alpha"
    X_NEG_ALPHA = "x_neg_alpha"


_REGION_OF = {
    Transform.U_EQ_X_ALPHA: Region.ORIGIN,
    Transform.U_EQ_ONE_MINUS_X_ALPHA: Region.UNIT,
    Transform.U_EQ_X_NEG_ALPHA: Region.INFINITY,
}

# a prefactor is only representable as w^s when its base is the local variable
_PREFACTOR_OF = {
    Transform.U_EQ_X_ALPHA: Prefactor.X_ALPHA,
    Transform.U_EQ_ONE_MINUS_X_ALPHA: Prefactor.ONE_MINUS_X_ALPHA,
    Transform.U_EQ_X_NEG_ALPHA: Prefactor.X_NEG_ALPHA,
}


def local_variable(transform: Transform | str, x: float, alpha: float) -> float:
    """The branch variable ``w`` at ``x``."""
    u = real_power(x, alpha)
    transform = Transform(transform)
    if transform is Transform.U_EQ_X_ALPHA:
        return u
    if transform is Transform.U_EQ_ONE_MINUS_X_ALPHA:
        return 1.0 - u
    return 1.0 / u


@dataclass(frozen=True)
class SolutionBranch:
    """``prefactor(x)**prefactor_exp * 2F1(inner; w(x))``."""

    transform: Transform
    prefactor_base: Prefactor
    prefactor_exp: float
    inner: Params
    region: Region

    def __post_init__(self) -> None:
        transform = Transform(self.transform)
        base = Prefactor(self.prefactor_base)
        object.__setattr__(self, "transform", transform)
        object.__setattr__(self, "prefactor_base", base)
        object.__setattr__(self, "region", Region(self.region))
        object.__setattr__(self, "prefactor_exp", float(self.prefactor_exp))
        if self.region is not _REGION_OF[transform]:
            raise ValueError(f"region {self.region.value} does not match {transform.value}")
        if base not in (Prefactor.NONE, _PREFACTOR_OF[transform]):
            raise ValueError(f"prefactor {base.value} is not a power of the {transform.value} variable")
        if base is Prefactor.NONE and self.prefactor_exp != 0:
            raise ValueError("a missing prefactor must have exponent 0")

    @property
    def alpha(self) -> float:
        return self.inner.alpha

    def variable(self, x: float) -> float:
        return local_variable(self.transform, x, self.alpha)

    def evaluate(self, x: float, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> float:
        w = self.variable(x)
        q = self.inner
        inner = hyp2f1_series(q.mu, q.nu, q.c, w, tol=tol, max_terms=max_terms).value
        if self.prefactor_exp == 0:
            return inner
        return real_power(w, self.prefactor_exp) * inner

    def series(self, n_terms: int = DEFAULT_RESIDUAL_TERMS) -> FracSeries:
        """Truncated expansion in the local variable, offset = prefactor exponent."""
        q = self.inner
        return FracSeries(self.alpha, self.prefactor_exp, gauss_coeffs(q.mu, q.nu, q.c, n_terms))

    def as_dict(self) -> dict[str, object]:
        return {
            "transform": self.transform.value,
            "prefactor_base": self.prefactor_base.value,
            "prefactor_exp": self.prefactor_exp,
            "inner": self.inner.as_dict(),
            "region": self.region.value,
        }


@dataclass(frozen=True)
class OdeResidual:
    x: float
    residual: float
    scale: float

    @property
    def relative(self) -> float:
        return abs(self.residual) / self.scale


def _near_integer(v: float) -> bool:
    return abs(v - round(v)) <= _INTEGER_ATOL * max(1.0, abs(v))


def indicial_roots(p: Params) -> tuple[float, float]:
    """Roots of ``s^2 - s (mu + nu) + mu nu`` at infinity, sorted."""
    lo, hi = sorted((p.mu, p.nu))
    return lo, hi


def _indicial_value(p: Params, s: float) -> float:
    return s * s - s * (p.mu + p.nu) + p.mu * p.nu


def frobenius_coeffs(p: Params, s: float, n_max: int) -> FracSeries:
    """Coefficients ``a_0..a_n_max`` of the expansion at infinity with exponent ``s``.

    ``a_{n+1} = (s+n)(s+n+1-c) / ((s+n+1)(s+n+1-mu-nu) + mu nu) * a_n`` with
    ``a_0 = 1``; the series is in ``zeta = 1/x``, offset ``s``.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    scale = max(1.0, s * s, abs(p.mu * p.nu), abs(s * (p.mu + p.nu)))
    if abs(_indicial_value(p, s)) > 1e-12 * scale:
        raise ValueError(f"s = {s} is not an indicial root for mu = {p.mu}, nu = {p.nu}")
    a = np.empty(n_max + 1)
    a[0] = 1.0
    for n in range(n_max):
        k = s + n + 1
        den = k * (k - p.mu - p.nu) + p.mu * p.nu
        # den = (k - mu)(k - nu), zero exactly when mu - nu is an integer
        if abs(den) <= 1e-12 * max(1.0, k * k, abs(p.mu * p.nu)):
            raise DegenerateRoot(
                f"recurrence denominator vanishes at n = {n + 1}: mu - nu = {p.mu - p.nu} is an integer"
            )
        a[n + 1] = a[n] * (s + n) * (s + n + 1 - p.c) / den
    return FracSeries(p.alpha, s, a)


def frobenius_closed_form(p: Params, s: float, n_max: int) -> np.ndarray:
    """Closed-form coefficients for ``s = mu`` or ``s = nu`` from Pochhammer symbols."""
    if s == p.mu:
        first, other = p.mu, p.nu
    elif s == p.nu:
        first, other = p.nu, p.mu
    else:
        raise ValueError(f"s = {s} is neither mu nor nu")
    return np.array(
        [
            pochhammer(first, n) * pochhammer(first - p.c + 1, n)
            / (math.factorial(n) * pochhammer(first - other + 1, n))
            for n in range(n_max + 1)
        ]
    )


def solutions_at_zero(p: Params) -> tuple[SolutionBranch, SolutionBranch]:
    if _near_integer(p.c):
        raise DegenerateRoot(f"c = {p.c} is an integer; the second branch at the origin is logarithmic")
    t, r = Transform.U_EQ_X_ALPHA, Region.ORIGIN
    first = SolutionBranch(t, Prefactor.NONE, 0.0, p, r)
    second = SolutionBranch(
        t, Prefactor.X_ALPHA, 1.0 - p.c,
        Params(1.0 - p.c + p.mu, 1.0 - p.c + p.nu, 2.0 - p.c, p.alpha), r,
    )
    return first, second


def solutions_at_one(p: Params) -> tuple[SolutionBranch, SolutionBranch]:
    gap = p.c - p.mu - p.nu
    if _near_integer(gap):
        raise DegenerateRoot(f"c - mu - nu = {gap} is an integer; the second branch at one is logarithmic")
    t, r = Transform.U_EQ_ONE_MINUS_X_ALPHA, Region.UNIT
    first = SolutionBranch(t, Prefactor.NONE, 0.0, Params(p.mu, p.nu, 1.0 - gap, p.alpha), r)
    second = SolutionBranch(
        t, Prefactor.ONE_MINUS_X_ALPHA, gap, Params(p.c - p.nu, p.c - p.mu, gap + 1.0, p.alpha), r
    )
    return first, second


def solutions_at_infinity(p: Params) -> tuple[SolutionBranch, SolutionBranch]:
    if _near_integer(p.mu - p.nu):
        raise DegenerateRoot(f"mu - nu = {p.mu - p.nu} is an integer; the expansion at infinity is logarithmic")
    t, b, r = Transform.U_EQ_X_NEG_ALPHA, Prefactor.X_NEG_ALPHA, Region.INFINITY
    first = SolutionBranch(t, b, p.mu, Params(p.mu, p.mu - p.c + 1.0, p.mu - p.nu + 1.0, p.alpha), r)
    second = SolutionBranch(t, b, p.nu, Params(p.nu, p.nu - p.c + 1.0, p.nu - p.mu + 1.0, p.alpha), r)
    return first, second


def branch_derivatives(
    s: FracSeries, transform: Transform | str, w: float
) -> tuple[float, float, float]:
    """``(y, D_x y, D_x D_x y)`` for a series in the local variable ``w``."""
    transform = Transform(transform)
    y = s.evaluate_power(w)
    dy = series_diff(s, 1).evaluate_power(w)
    ddy = series_diff(s, 2).evaluate_power(w)
    if transform is Transform.U_EQ_X_ALPHA:
        return y, dy, ddy
    if transform is Transform.U_EQ_ONE_MINUS_X_ALPHA:
        return y, -dy, ddy
    # D_x y = -w^2 D_w y, and once more: 2 alpha w^3 D_w y + w^4 D_w D_w y
    return y, -w * w * dy, 2.0 * s.alpha * w**3 * dy + w**4 * ddy


def cfghe_residual(
    b: SolutionBranch | FracSeries,
    p: Params,
    x: float,
    n_terms: int = DEFAULT_RESIDUAL_TERMS,
) -> OdeResidual:
    """Signed ODE residual of a branch (or a raw series in ``x^alpha``) at ``x``."""
    if isinstance(b, SolutionBranch):
        if b.alpha != p.alpha:
            raise ValueError("branch and equation must share alpha")
        if not domain_check(p, x, b.region):
            raise DomainError(f"x = {x} is outside the {b.region.value} region")
        series, transform = b.series(n_terms), b.transform
    else:
        if not domain_check(p, x, Region.ORIGIN):
            raise DomainError(f"x = {x} is outside the origin region")
        series, transform = b, Transform.U_EQ_X_ALPHA
    u = real_power(x, p.alpha)
    w = local_variable(transform, x, p.alpha)
    y, dy, ddy = branch_derivatives(series, transform, w)
    terms = (
        u * (1.0 - u) * ddy,
        p.alpha * (p.c - (p.mu + p.nu + 1.0) * u) * dy,
        -p.alpha**2 * p.mu * p.nu * y,
    )
    scale = max(abs(t) for t in terms) or 1.0
    return OdeResidual(x, math.fsum(terms), scale)


def theta_form_residual(s: FracSeries, p: Params, x: float) -> OdeResidual:
    """Residual of ``[theta (theta + c - 1) - u (theta + mu)(theta + nu)] y``.

    Multiplying by ``alpha^2 / u`` gives the residual of the conformable form.
    """
    if not domain_check(p, x, Region.ORIGIN):
        raise DomainError(f"x = {x} is outside the origin region")
    th1 = theta_apply(s)
    th2 = theta_apply(th1)
    left = th2 + th1.scale(p.c - 1.0)
    right = th2 + th1.scale(p.mu + p.nu) + s.scale(p.mu * p.nu)
    u = real_power(x, p.alpha)
    a, b = left.evaluate(x), u * right.evaluate(x)
    return OdeResidual(x, a - b, max(abs(a), abs(b)) or 1.0)
