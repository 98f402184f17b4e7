"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import mpmath as mp


def brute_gauss(mu: float, nu: float, c: float, u: float, dps: int = 40) -> float:
    """Classical Gauss series at ``u`` summed term by term in extended precision."""
    with mp.workdps(dps):
        mu, nu, c, u = (mp.mpf(v) for v in (mu, nu, c, u))
        total = term = mp.mpf(1)
        n = 0
        eps = mp.mpf(10) ** (-dps + 5)
        while True:
            term = term * (mu + n) * (nu + n) / ((c + n) * (n + 1)) * u
            n += 1
            total += term
            if term == 0 or (abs(term) < eps * abs(total) and n > 5):
                return float(total)
            if n > 200_000:
                raise RuntimeError("oracle series did not converge")


def mp_hyp2f1(mu: float, nu: float, c: float, z: float, dps: int = 30) -> float:
    with mp.workdps(dps):
        return float(mp.hyp2f1(mu, nu, c, z))


def mp_laplace(f, alpha: float, s: float, dps: int = 20) -> float:
    """``int_0^inf exp(-s t^alpha/alpha) f(t) t^(alpha-1) dt`` by mpmath quadrature in ``v = t^alpha/alpha``."""
    with mp.workdps(dps):
        g = lambda v: mp.exp(-s * v) * f((alpha * v) ** (1 / mp.mpf(alpha)))  # noqa: E731
        return float(mp.quad(g, [0, 1, 10, mp.inf]))
