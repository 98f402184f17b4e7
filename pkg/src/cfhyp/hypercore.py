"""Pochhammer symbols and truncated Gauss series for the CFGHF.

The conformable fractional Gauss hypergeometric function is the classical
Gauss series evaluated at ``u = x**alpha``::

    2F1(mu, nu; c; x^alpha) = sum_n (mu)_n (nu)_n / ((c)_n n!) u**n

Everything here works on real floats in binary64.  The raw summation
routine :func:`hyp2f1_series` takes the classical argument directly so that
other modules can evaluate at negative or transformed arguments without
inventing an ``x``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, NoConvergence, PoleError

DEFAULT_TOL = 1e-13
DEFAULT_MAX_TERMS = 10_000

#: Number of consecutive negligible terms required before stopping.
_SMALL_RUN = 3


class Region(str, enum.Enum):
    ORIGIN = "origin"
    UNIT = "unit"
    INFINITY = "infinity"


def pochhammer(b: float, n: int) -> float:
    """Rising factorial ``b (b+1) ... (b+n-1)`` with ``(b)_0 = 1``.

    Overflow to +-inf is returned as is; callers check finiteness.
    """
    if n < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {n}")
    out = 1.0
    for k in range(n):
        out *= b + k
    return out


def nonpositive_integer(v: float) -> int | None:
    """Return ``m >= 0`` when ``v == -m`` exactly, else ``None``."""
    if v <= 0 and float(v).is_integer():
        return int(-v)
    return None


def termination_degree(mu: float, nu: float) -> int | None:
    """Degree of the polynomial when a numerator parameter is ``-m``."""
    degrees = [m for m in (nonpositive_integer(mu), nonpositive_integer(nu)) if m is not None]
    return min(degrees) if degrees else None


def real_power(base: float, exponent: float) -> float:
    """``base**exponent`` as ``exp(exponent * log(base))`` for ``base > 0``."""
    if not base > 0 or not math.isfinite(base):
        raise DomainError(f"real power needs a positive finite base, got {base!r}")
    if exponent == 0:
        return 1.0
    return math.exp(exponent * math.log(base))


@dataclass(frozen=True)
class Params:
    """Parameter triple ``(mu, nu, c)`` plus the fractional order ``alpha``."""

    mu: float
    nu: float
    c: float
    alpha: float

    def __post_init__(self) -> None:
        for name in ("mu", "nu", "c", "alpha"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise DomainError(f"{name} must be a finite real, got {value!r}")
            object.__setattr__(self, name, float(value))
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        pole = nonpositive_integer(self.c)
        if pole is not None:
            m = self.terminating_degree
            # the series must stop strictly before (c)_n hits zero
            if m is None or not m < pole:
                raise PoleError(
                    f"c = {self.c} is a nonpositive integer and the series does not "
                    "terminate before the pole"
                )

    @property
    def terminating_degree(self) -> int | None:
        return termination_degree(self.mu, self.nu)

    def swapped(self) -> Params:
        return replace(self, mu=self.nu, nu=self.mu)

    def shifted(self, dmu: float = 0, dnu: float = 0, dc: float = 0) -> Params:
        return replace(self, mu=self.mu + dmu, nu=self.nu + dnu, c=self.c + dc)

    def as_dict(self) -> dict[str, float]:
        return {"mu": self.mu, "nu": self.nu, "c": self.c, "alpha": self.alpha}


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_err_est: float
    terms_used: int
    terminated: bool

    def as_dict(self) -> dict[str, object]:
        return {
            "value": self.value,
            "abs_err_est": self.abs_err_est,
            "terms_used": self.terms_used,
            "terminated": self.terminated,
        }


def hyp2f1_series(
    mu: float,
    nu: float,
    c: float,
    z: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Sum the Gauss series at the classical argument ``z``.

    Non-terminating series need ``|z| < 1``.  Summation stops after three
    consecutive terms below ``tol * |partial sum|`` while the term ratio is
    below one; the error estimate is the geometric tail for that ratio.
    """
    if not math.isfinite(z):
        raise DomainError(f"argument must be finite, got {z!r}")
    m = termination_degree(mu, nu)
    if m is None and not abs(z) < 1.0:
        raise DomainError(f"non-terminating series needs |z| < 1, got z = {z}")
    if m is not None and m + 1 > max_terms:
        raise NoConvergence(f"polynomial of degree {m} exceeds max_terms = {max_terms}")

    total = 1.0
    term = 1.0
    if m == 0:
        return EvalResult(1.0, 0.0, 1, True)

    small = 0
    ratio = 0.0
    n = 0
    while n + 1 < max_terms:
        if c + n == 0:
            raise PoleError(f"(c)_n vanishes at n = {n + 1} for c = {c}")
        new = term * ((mu + n) * (nu + n)) / ((c + n) * (n + 1)) * z
        n += 1
        total += new
        if m is not None and n == m:
            return EvalResult(total, 0.0, n + 1, True)
        # a term that underflowed to zero stays zero
        ratio = abs(new / term) if term != 0 else 0.0
        term = new
        if abs(term) <= tol * abs(total):
            small += 1
        else:
            small = 0
        # polynomials are always summed to their last term
        if m is None and small >= _SMALL_RUN and ratio < 1.0:
            tail = abs(term) * ratio / (1.0 - ratio)
            return EvalResult(total, tail, n + 1, False)
    raise NoConvergence(
        f"2F1({mu}, {nu}; {c}; {z}) not converged after {max_terms} terms "
        f"(last term {term:.3e}, ratio {ratio:.3f})"
    )


def eval_2f1(
    p: Params,
    x: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Evaluate ``2F1(mu, nu; c; x^alpha)`` for ``x > 0``.

    Raises :class:`DomainError` when ``x^alpha >= 1`` and the series does
    not terminate.
    """
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be a positive finite real, got {x!r}")
    u = real_power(x, p.alpha)
    if p.terminating_degree is None and not u < 1.0:
        raise DomainError(f"x^alpha = {u} is outside |x^alpha| < 1")
    return hyp2f1_series(p.mu, p.nu, p.c, u, tol=tol, max_terms=max_terms)


def domain_check(p: Params, x: float, region: Region | str) -> bool:
    """Whether ``x`` is strictly inside the convergence region of a branch.

    ``origin``: ``0 < x^alpha < 1``; ``unit``: ``0 < 1 - x^alpha < 1`` (the
    prefactor ``(1 - x^alpha)^s`` must stay real); ``infinity``: ``x^alpha > 1``.
    """
    region = Region(region)
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        return False
    u = real_power(float(x), p.alpha)
    if region is Region.ORIGIN:
        return u < 1.0
    if region is Region.UNIT:
        return 0.0 < 1.0 - u < 1.0
    return u > 1.0


def gauss_coeffs(mu: float, nu: float, c: float, n_terms: int) -> np.ndarray:
    """First ``n_terms`` Gauss coefficients ``(mu)_k (nu)_k / ((c)_k k!)``.

    Coefficients past a terminating degree are exact zeros.
    """
    out = np.zeros(n_terms)
    if n_terms == 0:
        return out
    out[0] = 1.0
    term = 1.0
    for k in range(n_terms - 1):
        num = (mu + k) * (nu + k)
        if num == 0:
            break
        if c + k == 0:
            raise PoleError(f"(c)_k vanishes at k = {k + 1} for c = {c}")
        term = term * num / ((c + k) * (k + 1))
        out[k + 1] = term
    return out
