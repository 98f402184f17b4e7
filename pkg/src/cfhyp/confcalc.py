"""Conformable derivative and integral, analytic and numeric.

For ``alpha`` in (0, 1] the conformable derivative is

    D^alpha f(x) = lim_{h -> 0} (f(x + h x^(1-alpha)) - f(x)) / h,

which on fractional power series acts through the power rule
``D^alpha x^p = p x^(p - alpha)``.  A :class:`FracSeries` keeps exponents on
the index grid ``alpha * (offset + n)`` so repeated differentiation never
drifts.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .errors import DomainError, NonFinite, QuadFailure
from .hypercore import real_power

QUAD_ABS_TOL = 1e-10
QUAD_REL_TOL = 1e-12
QUAD_SUBINTERVALS = 200


@dataclass(frozen=True)
class FracSeries:
    """``x^(alpha*offset) * sum_n coeffs[n] * x^(alpha*n)``."""

    alpha: float
    offset: float
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        arr = np.array(self.coeffs, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def monomial(cls, alpha: float, index: float, coeff: float = 1.0) -> FracSeries:
        return cls(alpha, index, np.array([coeff]))

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __add__(self, other: FracSeries) -> FracSeries:
        if other.alpha != self.alpha or other.offset != self.offset:
            raise ValueError("can only add series sharing alpha and offset")
        n = max(len(self), len(other))
        out = np.zeros(n)
        out[: len(self)] += self.coeffs
        out[: len(other)] += other.coeffs
        return FracSeries(self.alpha, self.offset, out)

    def scale(self, factor: float) -> FracSeries:
        return FracSeries(self.alpha, self.offset, factor * self.coeffs)

    def evaluate_power(self, w: float) -> float:
        """Evaluate with ``w = x^alpha`` given directly (``w > 0``)."""
        if len(self) == 0:
            return 0.0
        inner = float(np.polynomial.polynomial.polyval(w, self.coeffs))
        if self.offset == 0:
            return inner
        return real_power(w, self.offset) * inner

    def evaluate(self, x: float) -> float:
        return self.evaluate_power(real_power(x, self.alpha))


def series_diff(s: FracSeries, order: int = 1) -> FracSeries:
    """Apply ``D^alpha`` term-wise ``order`` times.

    A term at exponent index 0 is a constant; its derivative is dropped and
    the offset stays at 0.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    offset, coeffs = s.offset, s.coeffs
    for _ in range(order):
        if len(coeffs) == 0:
            break
        idx = offset + np.arange(len(coeffs))
        new = s.alpha * idx * coeffs
        if offset == 0:
            coeffs = new[1:]
        else:
            coeffs, offset = new, offset - 1.0
    return FracSeries(s.alpha, offset, coeffs)


def theta_apply(s: FracSeries) -> FracSeries:
    """Euler-type operator ``(1/alpha) x^alpha D^alpha``: multiplies by the exponent index."""
    idx = s.offset + np.arange(len(s.coeffs))
    return FracSeries(s.alpha, s.offset, idx * s.coeffs)


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")


def conf_diff_numeric(
    f: Callable[[float], float],
    x: float,
    alpha: float,
    h0: float | None = None,
) -> float:
    """Limit-definition ``D^alpha f(x)`` by central differences in ``h``.

    ``g(h) = f(x + h x^(1-alpha))`` is differenced symmetrically at
    ``h0, h0/2, h0/4`` and combined with two Richardson levels, which
    cancels the ``h^2`` and ``h^4`` error terms.
    """
    _check_alpha(alpha)
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be positive, got {x!r}")
    if h0 is None:
        h0 = 1e-4 * max(1.0, x)
    stretch = real_power(x, 1.0 - alpha)
    # keep every probe inside (0, inf)
    h0 = min(h0, 0.5 * x / stretch)

    def probe(point: float) -> float:
        value = float(f(point))
        if not math.isfinite(value):
            raise NonFinite(f"f({point!r}) = {value!r}")
        return value

    def central(h: float) -> float:
        return (probe(x + h * stretch) - probe(x - h * stretch)) / (2.0 * h)

    d1, d2, d3 = central(h0), central(h0 / 2), central(h0 / 4)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    return (16.0 * r2 - r1) / 15.0


def conf_integral_numeric(
    f: Callable[[float], float],
    a: float,
    t: float,
    alpha: float,
    abs_tol: float = QUAD_ABS_TOL,
    rel_tol: float = QUAD_REL_TOL,
) -> float:
    """``int_a^t f(x) x^(alpha-1) dx`` via ``v = x^alpha / alpha``.

    The substitution turns the weighted integral into ``int f((alpha v)^(1/alpha)) dv``
    which is smooth at the origin.
    """
    _check_alpha(alpha)
    if a < 0 or not t > a:
        raise DomainError(f"need 0 <= a < t, got a={a}, t={t}")
    lo = 0.0 if a == 0 else real_power(a, alpha) / alpha
    hi = real_power(t, alpha) / alpha
    inv = 1.0 / alpha

    # Gauss-Kronrod nodes are interior, so v > 0 at every evaluation
    def integrand(v: float) -> float:
        return float(f(real_power(alpha * v, inv)))

    return adaptive_quad(integrand, lo, hi, abs_tol, rel_tol)


def adaptive_quad(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = QUAD_ABS_TOL,
    rel_tol: float = QUAD_REL_TOL,
) -> float:
    value, err, *_ = integrate.quad(
        g, lo, hi, epsabs=abs_tol, epsrel=rel_tol, limit=QUAD_SUBINTERVALS, full_output=1
    )
    if not math.isfinite(value) or err > max(abs_tol, rel_tol * abs(value)):
        raise QuadFailure(f"adaptive quadrature error {err:.3e} exceeds tolerance")
    return value
