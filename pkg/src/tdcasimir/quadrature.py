"""Reusable numerical integration.

Gauss-Legendre node/weight generation, a semi-infinite integral transform,
composite Simpson time quadrature for uniformly sampled records, and the
primed Matsubara summation driver shared by the reference and kernel code.
"""

import math
from dataclasses import dataclass

import numpy as np
import scipy.integrate


class QuadratureError(RuntimeError):
    """Raised when an integration budget is exhausted without convergence."""

    def __init__(self, message, value=None, achieved_tol=None):
        super().__init__(message)
        self.value = value
        self.achieved_tol = achieved_tol


@dataclass(frozen=True)
class GaussRule:
    """Gauss-Legendre rule on (-1, 1): sum(w) = 2, exact to degree 2N-1."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f, a=-1.0, b=1.0):
        """Apply the rule mapped onto [a, b]."""
        half = 0.5 * (b - a)
        x = a + half * (self.nodes + 1.0)
        return half * np.dot(self.weights, f(x))


def gauss_legendre(n):
    """Gauss-Legendre nodes and weights on (-1, 1) to ~1e-15 absolute.

    Newton iteration on the three-term Legendre recurrence, started from
    Chebyshev estimates of the roots.  Rules above N = 10^4 are refused
    (no use case, and the O(N^2) construction would be wasteful).
    """
    if n < 1:
        raise ValueError("Gauss-Legendre order must be >= 1")
    if n > 10_000:
        raise ValueError(f"Gauss-Legendre order {n} refused (limit 10000)")

    k = np.arange(n)
    x = np.cos(math.pi * (4 * k + 3) / (4 * n + 2))
    for _ in range(100):
        p_prev = np.zeros_like(x)
        p = np.ones_like(x)
        for j in range(n):
            p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
        dp = n * (x * p - p_prev) / (x * x - 1.0)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break

    # one final recurrence pass for the weights at the converged nodes
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for j in range(n):
        p_prev, p = p, ((2 * j + 1) * x * p - j * p_prev) / (j + 1)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    order = np.argsort(x)
    return GaussRule(order=n, nodes=x[order], weights=w[order])


def integrate_semi_infinite(f, scale=1.0, tol=1e-10, limit=200):
    """Integrate f over (0, inf) for a smooth, decaying integrand.

    The substitution x = scale*u/(1-u) maps the half line onto (0, 1), where
    an adaptive Gauss-Kronrod scheme (scipy's QUADPACK) does the work.

    Returns
    -------
    (value, error_estimate)

    Raises
    ------
    QuadratureError
        If the error estimate cannot be brought below ``tol`` relative
        (or ``tol`` absolute for near-zero integrals).
    """
    if scale <= 0:
        raise ValueError("scale must be positive")

    def g(u):
        x = scale * u / (1.0 - u)
        return f(x) * scale / (1.0 - u) ** 2

    value, err = scipy.integrate.quad(g, 0.0, 1.0, epsabs=1e-300, epsrel=tol, limit=limit)
    if err > tol * max(abs(value), 1.0e-300) and err > tol:
        raise QuadratureError(
            f"semi-infinite integral did not converge: value={value:g}, "
            f"error={err:g}, requested tol={tol:g}",
            value=value,
            achieved_tol=err / max(abs(value), 1.0e-300),
        )
    return value, err


def matsubara_sum(term, temp, tol=1e-12, max_terms=10_000_000, min_terms=8):
    """Primed Matsubara sum: term(0, 0)/2 + sum_{m>=1} term(m, xi_m).

    ``term(m, xi_m)`` must decay in m; the sum stops once ``min_terms``
    consecutive terms stay below ``tol`` times the running total.  T = 0 is
    rejected: callers must use the integral limit instead.
    """
    if temp.is_zero:
        raise ValueError("matsubara_sum requires T > 0; use the integral limit")
    omega_th = temp.omega_th
    total = 0.5 * term(0, 0.0)
    small = 0
    m = 1
    while m <= max_terms:
        t = term(m, m * omega_th)
        total += t
        if abs(t) <= tol * max(abs(total), 1e-300):
            small += 1
            if small >= min_terms:
                return total
        else:
            small = 0
        m += 1
    raise QuadratureError(f"Matsubara sum did not converge after {max_terms} terms", value=total)


def composite_time_quadrature(samples, dt, t_lo=None, t_hi=None, weight_fn=None):
    """Integrate uniformly sampled data with composite Simpson rules.

    ``samples`` covers [t_lo, t_hi] with spacing ``dt``; an odd sample count
    uses plain composite Simpson, an even count finishes with a 3/8 segment.
    O(dt^4) on smooth integrands.  ``weight_fn(t)`` optionally multiplies the
    samples before integration.
    """
    y = np.asarray(samples, dtype=float)
    if y.ndim != 1:
        raise ValueError("samples must be one-dimensional")
    n = y.size
    if n < 2:
        raise ValueError("need at least two samples")
    if dt <= 0:
        raise ValueError("dt must be positive")
    t_lo = 0.0 if t_lo is None else float(t_lo)
    if t_hi is not None:
        expected = t_lo + (n - 1) * dt
        if abs(t_hi - expected) > 1e-9 * max(abs(t_hi), dt):
            raise ValueError(
                f"samples do not cover [t_lo, t_hi]: expected t_hi={expected!r}, got {t_hi!r}"
            )
    if weight_fn is not None:
        y = y * weight_fn(t_lo + dt * np.arange(n))

    if n == 2:
        return 0.5 * dt * (y[0] + y[1])
    if n % 2 == 1:
        return _simpson_even_intervals(y, dt)
    if n == 4:
        return _simpson38(y, dt)
    # even count: composite Simpson on the first n-3 samples, 3/8 on the rest
    return _simpson_even_intervals(y[: n - 3], dt) + _simpson38(y[n - 4 :], dt)


def _simpson_even_intervals(y, dt):
    acc = y[0] + y[-1] + 4.0 * np.sum(y[1:-1:2]) + 2.0 * np.sum(y[2:-2:2])
    return dt * acc / 3.0


def _simpson38(y4, dt):
    return 3.0 * dt / 8.0 * (y4[0] + 3.0 * y4[1] + 3.0 * y4[2] + y4[3])
