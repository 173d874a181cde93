"""Explicit growth bounds and empirical growth-constant extraction.

The determinant magnitudes are expected to follow c1 * n^2 log n + c2 * n^2
(natural logs throughout); the explicit majorant whose logarithm is
log n! - a * sum_{i<=n} i log i gives the proved upper-bound direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from mpmath import mp, mpf


@dataclass(frozen=True)
class FitResult:
    c1: float
    c2: float
    rms_residual: float
    n_range: tuple[int, int]


def lgest_bound_log(a: int, n: int) -> float:
    """log( n! * prod_{i<=n} i^(-a i) ), the explicit majorant exponent."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a < 1:
        raise ValueError("a must be a positive integer")
    return math.lgamma(n + 1) - a * sum(i * math.log(i) for i in range(2, n + 1))


def lest_exponent(n: int) -> float:
    """log prod_{i<=n} i^(i-1) = sum_{i<=n} (i-1) log i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum((i - 1) * math.log(i) for i in range(2, n + 1))


def _integral_x_minus_2_log_x(n: float) -> float:
    # antiderivative of (x-2) log x: (x^2/2 - 2x) log x - x^2/4 + 2x
    def F(x):
        return (x * x / 2 - 2 * x) * math.log(x) - x * x / 4 + 2 * x
    return F(n) - F(2.0)


def integral_inequality_holds(n: int) -> bool:
    """sum_{i<=n} (i-1) log i > integral_2^n (x-2) log x dx, expected true for n >= 3."""
    if n < 3:
        raise ValueError("the comparison is stated for n >= 3")
    return lest_exponent(n) > _integral_x_minus_2_log_x(float(n))


def integral_inequality_all(n_min: int, n_max: int) -> bool:
    """The same comparison for every n in [n_min, n_max], in one O(n_max) pass."""
    if n_min < 3 or n_max < n_min:
        raise ValueError("need 3 <= n_min <= n_max")
    acc = sum((i - 1) * math.log(i) for i in range(2, n_min))
    for n in range(n_min, n_max + 1):
        acc += (n - 1) * math.log(n)
        if acc <= _integral_x_minus_2_log_x(float(n)):
            return False
    return True


def slope_sequence(points: Iterable[tuple[int, float]]) -> list[tuple[int, float]]:
    """(n, log_abs / (n^2 log n)) per point; tends to the leading growth constant."""
    out = []
    for n, log_abs in points:
        if n <= 1:
            raise ValueError(f"slope is undefined at n={n} (log n vanishes)")
        out.append((n, float(log_abs) / (n * n * math.log(n))))
    return out


def fit_growth(points: Sequence[tuple[int, float]], working_bits: int = 256) -> FitResult:
    """Least squares for log_abs ~ c1 n^2 log n + c2 n^2 by exact normal equations.

    The 2x2 solve runs at working_bits so that exact synthetic data is
    reproduced far below double rounding; the residual is computed from the
    unrounded solution.
    """
    pts = [(int(n), x) for n, x in points]
    if len(pts) < 3:
        raise ValueError("fit needs at least 3 points")
    if len({n for n, _ in pts}) != len(pts):
        raise ValueError("fit needs distinct n values")
    with mp.workprec(working_bits):
        phi1 = [mpf(n) * n * mp.log(n) for n, _ in pts]
        phi2 = [mpf(n) * n for n, _ in pts]
        y = [mpf(x) for _, x in pts]
        s11 = mp.fsum(p * p for p in phi1)
        s12 = mp.fsum(p * q for p, q in zip(phi1, phi2))
        s22 = mp.fsum(q * q for q in phi2)
        r1 = mp.fsum(p * v for p, v in zip(phi1, y))
        r2 = mp.fsum(q * v for q, v in zip(phi2, y))
        det = s11 * s22 - s12 * s12
        if det == 0 or abs(det) < mpf(2) ** (-(working_bits // 2)) * max(s11 * s22, mpf(1)):
            raise ValueError("degenerate design matrix (n values too clustered)")
        c1 = (r1 * s22 - r2 * s12) / det
        c2 = (s11 * r2 - s12 * r1) / det
        resid = [v - c1 * p - c2 * q for p, q, v in zip(phi1, phi2, y)]
        rms = mp.sqrt(mp.fsum(r * r for r in resid) / len(pts))
    ns = [n for n, _ in pts]
    return FitResult(c1=float(c1), c2=float(c2), rms_residual=float(rms),
                     n_range=(min(ns), max(ns)))
