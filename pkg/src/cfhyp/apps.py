"""Named conformable ODEs that reduce to the hypergeometric equation.

Each family is ``A(u) DDy + B(u) Dy + C(u) y = 0`` in ``u = x**alpha``.  A
change of variable ``T = T(u)`` turns it into the hypergeometric equation
in ``T`` with parameters ``(mu, nu, c)``; the solutions are the origin
branches evaluated at ``T``.

=============  ===================  ==========================
family         T(u)                 (mu, nu, c)
=============  ===================  ==========================
legendre       (1 - u) / 2          (-n, n + 1, 1)
chebyshev      (1 - u) / 2          (-n, n, 1/2)
fibonacci      1 + u^2 / 4          ((1 - n)/2, (1 + n)/2, 3/2)
lucas          1 + u^2 / 4          (n/2, -n/2, 1/2)
exp_example    1 - exp(u)           (1, -1, -1/2)
=============  ===================  ==========================
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cfghe import OdeResidual, Prefactor, SolutionBranch, Transform, solutions_at_zero
from .confcalc import FracSeries
from .errors import DegenerateRoot, DomainError
from .hypercore import Params, Region, gauss_coeffs, hyp2f1_series, real_power


class Family(str, enum.Enum):
    LEGENDRE = "legendre"
    CHEBYSHEV = "chebyshev"
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    EXP_EXAMPLE = "exp_example"


POLYNOMIAL_FAMILIES = (Family.LEGENDRE, Family.CHEBYSHEV, Family.FIBONACCI, Family.LUCAS)


@dataclass(frozen=True)
class NamedEquation:
    name: Family
    alpha: float
    degree_n: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", Family(self.name))
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.name in POLYNOMIAL_FAMILIES:
            if not (isinstance(self.degree_n, int) and self.degree_n >= 0):
                raise DomainError(f"{self.name.value} needs an integer degree n >= 0")

    def coefficients(self, u: float) -> tuple[float, float, float]:
        """``(A, B, C)`` of ``A DDy + B Dy + C y`` at ``u``."""
        a, n = self.alpha, self.degree_n
        if self.name is Family.LEGENDRE:
            return 1.0 - u * u, -2.0 * a * u, a * a * n * (n + 1)
        if self.name is Family.CHEBYSHEV:
            return 1.0 - u * u, -a * u, a * a * n * n
        if self.name is Family.FIBONACCI:
            return u * u + 4.0, 3.0 * a * u, -a * a * (n * n - 1)
        if self.name is Family.LUCAS:
            return u * u + 4.0, a * u, -a * a * n * n
        e = math.exp(u)
        return 1.0 - e, 0.5 * a, a * a * e


def _substitution(name: Family) -> tuple[str, object]:
    """Text of ``T(u)`` and a callable giving ``(T, T', T'')`` in ``u``."""
    if name in (Family.LEGENDRE, Family.CHEBYSHEV):
        return "(1 - x^alpha)/2", lambda u: ((1.0 - u) / 2.0, -0.5, 0.0)
    if name in (Family.FIBONACCI, Family.LUCAS):
        return "1 + x^(2 alpha)/4", lambda u: (1.0 + u * u / 4.0, u / 2.0, 0.5)
    return "1 - exp(x^alpha)", lambda u: (-math.expm1(u), -math.exp(u), -math.exp(u))


def _exact_params(eq: NamedEquation) -> tuple[Fraction, Fraction, Fraction]:
    n = Fraction(eq.degree_n) if eq.degree_n is not None else None
    half = Fraction(1, 2)
    if eq.name is Family.LEGENDRE:
        return -n, n + 1, Fraction(1)
    if eq.name is Family.CHEBYSHEV:
        return -n, n, half
    if eq.name is Family.FIBONACCI:
        return (1 - n) / 2, (1 + n) / 2, Fraction(3, 2)
    if eq.name is Family.LUCAS:
        return n / 2, -n / 2, half
    return Fraction(1), Fraction(-1), -half


@dataclass(frozen=True)
class Reduction:
    equation: NamedEquation
    substitution: str
    exact_params: tuple[Fraction, Fraction, Fraction]
    target_params: Params
    solution_pair: tuple[SolutionBranch, ...]
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, object]:
        return {
            "family": self.equation.name.value,
            "alpha": self.equation.alpha,
            "degree_n": self.equation.degree_n,
            "substitution": "t^alpha = " + self.substitution,
            "params": {k: str(v) for k, v in zip(("mu", "nu", "c"), self.exact_params)},
            "solution_pair": [b.as_dict() for b in self.solution_pair],
            "notes": list(self.notes),
        }


def reduce_to_cfghe(eq: NamedEquation) -> Reduction:
    """Substitution, hypergeometric parameters and origin branches for a named family."""
    text, _ = _substitution(eq.name)
    exact = _exact_params(eq)
    params = Params(*(float(v) for v in exact), eq.alpha)
    try:
        pair: tuple[SolutionBranch, ...] = solutions_at_zero(params)
        notes: tuple[str, ...] = ()
    except DegenerateRoot as exc:
        pair = (_regular_origin_branch(params),)
        notes = (f"second branch omitted: {exc}",)
    return Reduction(eq, text, exact, params, pair, notes)


def _regular_origin_branch(p: Params) -> SolutionBranch:
    """The regular origin branch, which exists for every admissible ``c``."""
    return SolutionBranch(Transform.U_EQ_X_ALPHA, Prefactor.NONE, 0.0, p, Region.ORIGIN)


def _inner_derivatives(q: Params, T: float) -> tuple[float, float, float]:
    """``F, F', F''`` of ``F(q; T)`` in the classical variable ``T``."""
    values = []
    coef = 1.0
    for k in range(3):
        if k:
            coef *= (q.mu + k - 1) * (q.nu + k - 1) / (q.c + k - 1)
        # a vanishing coefficient kills the term; its series need not converge
        values.append(0.0 if coef == 0 else coef * hyp2f1_series(q.mu + k, q.nu + k, q.c + k, T).value)
    return values[0], values[1], values[2]


def branch_in_t(b: SolutionBranch, T: float) -> tuple[float, float, float]:
    """``Y, Y', Y''`` for ``Y(T) = |T|^r F(inner; T)`` in ``T``.

    The prefactor uses ``|T|`` so that a branch stays real when the
    substitution makes ``T`` negative.
    """
    P, P1, P2 = _inner_derivatives(b.inner, T)
    r = b.prefactor_exp
    if r == 0:
        return P, P1, P2
    w = real_power(abs(T), r)
    return (
        w * P,
        w * (r * P / T + P1),
        w * (r * (r - 1) * P / T**2 + 2 * r * P1 / T + P2),
    )


def named_residual(eq: NamedEquation, b: SolutionBranch, x: float) -> OdeResidual:
    """Residual of the named ODE for branch ``b`` mapped back through the substitution."""
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be positive, got {x}")
    a = eq.alpha
    u = real_power(x, a)
    _, sub = _substitution(eq.name)
    T, T1, T2 = sub(u)
    Y, Y1, Y2 = branch_in_t(b, T)
    dy = a * Y1 * T1
    ddy = a * a * (Y2 * T1 * T1 + Y1 * T2)
    A, B, C = eq.coefficients(u)
    terms = (A * ddy, B * dy, C * Y)
    return OdeResidual(x, math.fsum(terms), max(abs(t) for t in terms) or 1.0)


def conf_legendre(n: int, alpha: float, x: float) -> float:
    """``F(-n, n+1; 1; (1 - x^alpha)/2)``, summed exactly."""
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be positive, got {x}")
    T = (1.0 - real_power(x, alpha)) / 2.0
    return hyp2f1_series(-n, n + 1, 1, T).value


def legendre_series(n: int, alpha: float) -> FracSeries:
    """The conformable Legendre polynomial as a series in ``x^alpha``."""
    in_t = np.polynomial.Polynomial(gauss_coeffs(-n, n + 1, 1, n + 1))
    in_u = in_t(np.polynomial.Polynomial([0.5, -0.5]))
    return FracSeries(alpha, 0.0, in_u.coef)
