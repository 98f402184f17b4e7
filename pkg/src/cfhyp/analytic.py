"""Euler integral, closed-form fractional integral and fractional Laplace transforms.

The conformable Laplace transform of order ``alpha``::

    L_alpha[f](s) = int_0^inf exp(-s t^alpha / alpha) f(t) t^(alpha-1) dt

becomes a classical Laplace integral in ``v = t^alpha / alpha``.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import special

from .confcalc import adaptive_quad
from .errors import DomainError, NoConvergence, QuadFailure, TailTooFat
from .hypercore import (
    DEFAULT_TOL,
    EvalResult,
    Params,
    eval_2f1,
    hyp2f1_series,
    pochhammer,
    real_power,
    termination_degree,
)

GJ_START_NODES = 16
# scipy's Jacobi nodes lose accuracy beyond a few hundred points
GJ_MAX_NODES = 512
TS_MAX_LEVELS = 12
LAPLACE_SPAN = 40.0
LAPLACE_MAX_SPAN = 640.0
LAPLACE_TAIL_TOL = 1e-12
LAPLACE_ABS_TOL = 1e-12
LAPLACE_REL_TOL = 1e-11


class Method(str, enum.Enum):
    GAUSS_JACOBI = "gauss_jacobi"
    TANH_SINH = "tanh_sinh"


@dataclass(frozen=True)
class QuadratureSpec:
    method: Method = Method.GAUSS_JACOBI
    nodes: int = GJ_START_NODES
    abs_tol: float = 1e-11

    def __post_init__(self) -> None:
        object.__setattr__(self, "method", Method(self.method))
        if self.nodes < 4:
            raise ValueError(f"need at least 4 nodes, got {self.nodes}")
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")


class Target(str, enum.Enum):
    ONE = "one"
    POWER_P = "power_p"
    EXP_K = "exp_k"
    CFGHF = "cfghf"
    T_POW_N_SIN_A = "t_pow_n_sin_a"
    SHIFTED_EXP_ARG = "shifted_exp_arg"


@dataclass(frozen=True)
class LaplaceQuery:
    """A cataloged Laplace target with its parameters, validated on construction."""

    target: Target
    alpha: float
    s: float
    gamma: float | None = None
    extras: dict = field(default_factory=dict)
    params: Params | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", Target(self.target))
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        gamma = self.alpha if self.gamma is None else self.gamma
        if not 0.0 < gamma <= 1.0:
            raise DomainError(f"gamma must lie in (0, 1], got {gamma}")
        object.__setattr__(self, "gamma", float(gamma))
        if not (math.isfinite(self.s) and self.s > 0):
            raise DomainError(f"s must be positive, got {self.s}")
        ex = self.extras
        t = self.target
        if t is Target.POWER_P and not ex.get("p", -1) > -self.alpha:
            raise DomainError("power target needs p > -alpha")
        if t is Target.EXP_K and not self.s > ex.get("k", math.inf):
            raise DomainError(f"exp target needs s > k, got s = {self.s}, k = {ex.get('k')}")
        if t is Target.T_POW_N_SIN_A:
            n = ex.get("n", -1)
            if not (isinstance(n, int) and n >= 0):
                raise DomainError("sine target needs an integer n >= 0")
            if not (self.alpha * ex.get("a", math.inf) / self.s) ** 2 < 1.0:
                raise DomainError("sine target needs (alpha a / s)^2 < 1")
        if t in (Target.CFGHF, Target.SHIFTED_EXP_ARG):
            p = self.params
            if p is None:
                raise DomainError(f"{t.value} target needs Params")
            if p.alpha != self.alpha:
                raise DomainError("Params alpha must match the query alpha")
        if t is Target.CFGHF and self.gamma == self.alpha:
            p = self.params
            bound = self.alpha * max(1.0, abs(p.mu * p.nu / p.c))
            if not self.s > bound:
                raise DomainError(f"series target needs s > {bound}")
        if t is Target.SHIFTED_EXP_ARG:
            x = ex.get("x", -1.0)
            if self.params.c != 1.0:
                raise DomainError("shifted target is stated for c = 1")
            if not (x > 0 and real_power(x, self.alpha) < 1.0):
                raise DomainError("shifted target needs 0 < x^alpha < 1")


# ---------------------------------------------------------------------------
# Euler integral


def _euler_checks(p: Params, x: float) -> float:
    if not (p.c > p.nu > 0):
        raise DomainError(f"Euler integral needs c > nu > 0, got nu = {p.nu}, c = {p.c}")
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be positive, got {x}")
    u = real_power(x, p.alpha)
    if not u < 1.0:
        raise DomainError(f"Euler integral needs x^alpha < 1, got {u}")
    return u


@lru_cache(maxsize=64)
def _jacobi_rule(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = special.roots_jacobi(n, a, b)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _gauss_jacobi(p: Params, u: float, q: QuadratureSpec) -> EvalResult:
    # tau = (1 + z)/2 maps the Beta weight onto the Jacobi weight (1-z)^a (1+z)^b
    a, b = p.c - p.nu - 1.0, p.nu - 1.0
    log_norm = -special.betaln(p.nu, p.c - p.nu) + (1.0 - p.c) * math.log(2.0)
    prev, best = None, (math.inf, 0.0, 0)
    n = q.nodes
    while n <= GJ_MAX_NODES:
        z, w = _jacobi_rule(n, a, b)
        tau = 0.5 * (1.0 + z)
        value = math.exp(log_norm) * float(np.dot(w, (1.0 - u * tau) ** (-p.mu)))
        if prev is not None:
            diff = abs(value - prev) / max(1.0, abs(value))
            if diff <= q.abs_tol:
                return EvalResult(value, abs(value - prev), n, False)
            if diff > best[0]:
                # rounding in the nodes now dominates; keep the best settled value
                break
            best = (diff, value, n)
        prev = value
        n *= 2
    diff, value, n = best
    if diff <= 100.0 * q.abs_tol:
        return EvalResult(value, diff * max(1.0, abs(value)), n, False)
    raise QuadFailure(f"Gauss-Jacobi did not settle with {GJ_MAX_NODES} nodes")


def _tanh_sinh(p: Params, u: float, q: QuadratureSpec) -> EvalResult:
    # tau = expit(pi sinh t); the Beta factors and the Jacobian combine into
    # tau^nu (1-tau)^(c-nu) pi cosh t, evaluated through logs to avoid underflow
    small = min(p.nu, p.c - p.nu)
    half_width = max(3.0, math.log(200.0 / (math.pi * small)) + 1.0)
    log_norm = -special.betaln(p.nu, p.c - p.nu)

    def integrand(t: np.ndarray) -> np.ndarray:
        arg = math.pi * np.sinh(t)
        log_tau = -np.logaddexp(0.0, -arg)
        log_rest = -np.logaddexp(0.0, arg)
        tau = np.exp(log_tau)
        log_body = p.nu * log_tau + (p.c - p.nu) * log_rest + np.log(math.pi * np.cosh(t))
        return np.exp(log_body + log_norm) * (1.0 - u * tau) ** (-p.mu)

    h = 2.0 * half_width / q.nodes
    grid = np.arange(-q.nodes // 2, q.nodes // 2 + 1) * h
    total = float(np.sum(integrand(grid)))
    prev = total * h
    for _ in range(TS_MAX_LEVELS):
        # halving h only adds the midpoints
        mids = grid[:-1] + 0.5 * h
        total += float(np.sum(integrand(mids)))
        grid = np.sort(np.concatenate([grid, mids]))
        h *= 0.5
        value = total * h
        if abs(value - prev) <= q.abs_tol * max(1.0, abs(value)):
            return EvalResult(value, abs(value - prev), len(grid), False)
        prev = value
    raise QuadFailure("tanh-sinh did not settle")


def euler_integral_eval(p: Params, x: float, q: QuadratureSpec | None = None) -> EvalResult:
    """``F(mu, nu; c; x^alpha)`` from its Euler integral over (0, 1)."""
    q = q or QuadratureSpec()
    u = _euler_checks(p, x)
    if q.method is Method.GAUSS_JACOBI:
        return _gauss_jacobi(p, u, q)
    return _tanh_sinh(p, u, q)


def conf_integral_2f1_closed(p: Params, x: float) -> float:
    """Closed form of ``int_0^x F(mu, nu; c; t^alpha) t^(alpha-1) dt``."""
    if 1.0 in (p.mu, p.nu, p.c):
        raise DomainError("closed form needs mu, nu, c all different from 1")
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be positive, got {x}")
    u = real_power(x, p.alpha)
    if not u < 1.0:
        raise DomainError(f"closed form needs x^alpha < 1, got {u}")
    inner = hyp2f1_series(p.mu - 1, p.nu - 1, p.c - 1, u).value
    return (p.c - 1) / (p.alpha * (p.mu - 1) * (p.nu - 1)) * (inner - 1.0)


# ---------------------------------------------------------------------------
# Laplace transforms


def frac_laplace_numeric(
    f: Callable[[float], float],
    alpha: float,
    s: float,
    u_max: float | None = None,
    abs_tol: float = LAPLACE_ABS_TOL,
    rel_tol: float = LAPLACE_REL_TOL,
) -> float:
    """Numeric conformable Laplace transform, truncated at ``v = u_max``.

    The tail beyond ``u_max`` is bounded from the local exponential growth
    of ``f`` between ``u_max`` and ``2 u_max``.  Without an explicit
    ``u_max`` the span doubles until the bound is below tolerance;
    :class:`TailTooFat` is raised when it never gets there.
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be positive, got {s}")
    fixed = u_max is not None
    u_max = LAPLACE_SPAN / s if u_max is None else u_max
    inv = 1.0 / alpha

    def g(v: float) -> float:
        return float(f(real_power(alpha * v, inv)))

    while True:
        value = adaptive_quad(lambda v: math.exp(-s * v) * g(v), 0.0, u_max, abs_tol, rel_tol)
        tail = _tail_bound(g, s, u_max)
        if tail <= max(LAPLACE_TAIL_TOL, rel_tol * abs(value)):
            return value
        # a polynomially growing integrand only needs a longer span
        if fixed or 2.0 * u_max * s > LAPLACE_MAX_SPAN:
            raise TailTooFat(f"tail bound {tail:.3e} at u_max = {u_max} exceeds tolerance")
        u_max *= 2.0


def _tail_bound(g: Callable[[float], float], s: float, u_max: float) -> float:
    """Bound on the integral beyond ``u_max`` assuming growth no faster than between ``u_max`` and ``2 u_max``."""
    try:
        f1, f2 = abs(g(u_max)), abs(g(2.0 * u_max))
    except OverflowError:
        raise TailTooFat("integrand overflows in the tail") from None
    if f1 == 0.0 and f2 == 0.0:
        return 0.0
    if f1 == 0.0 or not math.isfinite(f2):
        raise TailTooFat("cannot bound the transform tail")
    rate = max(0.0, math.log(max(f2, 1e-300) / f1) / u_max)
    if not rate < s:
        raise TailTooFat(f"integrand grows at rate {rate:.3g} >= s = {s}")
    return f1 * math.exp(-s * u_max) / (s - rate)


def laplace_power(p: float, alpha: float, s: float) -> float:
    """``L_alpha[t^p](s) = alpha^(p/alpha) Gamma(1 + p/alpha) / s^(1 + p/alpha)``."""
    r = p / alpha
    return math.exp(r * math.log(alpha) + math.lgamma(1.0 + r) - (1.0 + r) * math.log(s))


def laplace_one(s: float) -> float:
    return 1.0 / s


def laplace_exp(k: float, s: float) -> float:
    if not s > k:
        raise DomainError(f"need s > k, got s = {s}, k = {k}")
    return 1.0 / (s - k)


def laplace_2f1_coeffs(p: Params, gamma: float, s: float, n_terms: int) -> np.ndarray:
    """Terms of the order-``gamma`` transform of ``F(mu, nu; c; t^alpha)``, term by term."""
    out = np.empty(n_terms)
    for n in range(n_terms):
        coef = pochhammer(p.mu, n) * pochhammer(p.nu, n) / (pochhammer(p.c, n) * math.factorial(n))
        out[n] = coef * laplace_power(n * p.alpha, gamma, s) if coef != 0 else 0.0
    return out


def frac_laplace_2f1_series(
    p: Params,
    gamma: float,
    s: float,
    n_max: int = 200,
    tol: float = DEFAULT_TOL,
) -> EvalResult:
    """Term-wise transform of order ``gamma`` of ``F(mu, nu; c; t^alpha)``.

    For a terminating series the finite sum is exact.  Otherwise the terms
    grow like a power of ``n!`` and the series has no sum; this raises
    :class:`NoConvergence`.
    """
    if not 0.0 < gamma <= 1.0:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma}")
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be positive, got {s}")
    m = termination_degree(p.mu, p.nu)
    if m is None:
        raise NoConvergence(
            "the term-wise transform of a non-terminating series diverges: "
            "its terms grow like Gamma(1 + n alpha/gamma) times a power of n"
        )
    if m + 1 > n_max:
        raise NoConvergence(f"polynomial of degree {m} exceeds n_max = {n_max}")
    terms = laplace_2f1_coeffs(p, gamma, s, m + 1)
    return EvalResult(math.fsum(terms), 0.0, m + 1, True)


def _hyp2f1_negative(a: float, b: float, c: float, z: float) -> float:
    """``F(a, b; c; z)`` for ``z <= 0`` through the Pfaff transformation."""
    if z == 0:
        return 1.0
    w = z / (z - 1.0)
    return (1.0 - z) ** (-a) * hyp2f1_series(a, c - b, c, w).value


def laplace_t_sin(n: int, a: float, alpha: float, s: float) -> float:
    """Closed form of ``L_alpha[t^(alpha n) sin(a t^alpha)](s)``."""
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    r2 = (alpha * a / s) ** 2
    if not r2 < 1.0:
        raise DomainError(f"need (alpha a / s)^2 < 1, got {r2}")
    if a == 0:
        return 0.0
    coef = a * alpha ** (n + 1) * math.factorial(n + 1) / s ** (n + 2)
    return coef * _hyp2f1_negative((n + 2) / 2, (n + 3) / 2, 1.5, -r2)


def laplace_shifted_2f1(p: Params, x: float, s: float) -> float:
    """``F(mu, nu; s + 1; x^alpha) / s``, the transform of ``F(mu, nu; 1; x^alpha (1 - e^(-t^alpha/alpha)))``."""
    if p.c != 1.0:
        raise DomainError(f"the shifted transform is stated for c = 1, got c = {p.c}")
    if not (math.isfinite(s) and s > 0):
        raise DomainError(f"s must be positive, got {s}")
    r = eval_2f1(Params(p.mu, p.nu, s + 1.0, p.alpha), x)
    return r.value / s


def laplace_numeric_target(q: LaplaceQuery) -> float:
    """Numeric transform of the query's target function."""
    a, ex = q.alpha, q.extras
    if q.target is Target.ONE:
        f = lambda t: 1.0  # noqa: E731
    elif q.target is Target.POWER_P:
        f = lambda t: real_power(t, ex["p"])  # noqa: E731
    elif q.target is Target.EXP_K:
        f = lambda t: math.exp(ex["k"] * real_power(t, a) / a)  # noqa: E731
    elif q.target is Target.T_POW_N_SIN_A:
        f = lambda t: real_power(t, a) ** ex["n"] * math.sin(ex["a"] * real_power(t, a))  # noqa: E731
    elif q.target is Target.CFGHF:
        p = q.params
        f = lambda t: hyp2f1_series(p.mu, p.nu, p.c, real_power(t, a)).value  # noqa: E731
        return frac_laplace_numeric(f, q.gamma, q.s)
    else:
        p, u = q.params, real_power(ex["x"], a)
        f = lambda t: hyp2f1_series(  # noqa: E731
            p.mu, p.nu, 1.0, u * -math.expm1(-real_power(t, a) / a)
        ).value
    return frac_laplace_numeric(f, a, q.s)


def laplace_closed_target(q: LaplaceQuery) -> float:
    """Closed-form value of the query's transform."""
    ex = q.extras
    if q.target is Target.ONE:
        return laplace_one(q.s)
    if q.target is Target.POWER_P:
        return laplace_power(ex["p"], q.alpha, q.s)
    if q.target is Target.EXP_K:
        return laplace_exp(ex["k"], q.s)
    if q.target is Target.T_POW_N_SIN_A:
        return laplace_t_sin(ex["n"], ex["a"], q.alpha, q.s)
    if q.target is Target.CFGHF:
        return frac_laplace_2f1_series(q.params, q.gamma, q.s).value
    return laplace_shifted_2f1(q.params, ex["x"], q.s)

