"""Exact rational Bernoulli numbers with a process-wide monotone cache.

The even-index values are generated through the tangent-number triangle
(integer arithmetic only, no intermediate gcds), then converted one by one
via B_{2n} = (-1)^(n-1) * 2n * T_n / (4^n (4^n - 1)). The defining
convolution recurrence is used as an independent oracle in the test suite.
"""

from __future__ import annotations

import threading
from fractions import Fraction

_lock = threading.Lock()
# _cache[m] == B_m; extended only, never shrunk or rewritten.
_cache: list[Fraction] = [Fraction(1)]


def _tangent_numbers(m: int) -> list[int]:
    """T_1..T_m from the in-place tangent-number recurrence."""
    if m < 1:
        return []
    T = [0] * (m + 1)
    T[1] = 1
    for k in range(2, m + 1):
        T[k] = (k - 1) * T[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
    return T[1:]


def _extend_to(m: int) -> None:
    # Grow geometrically: the triangle is recomputed from scratch on each
    # extension, so amortize by never growing in small steps.
    target = max(m, 2 * (len(_cache) - 1), 16)
    half = (target + 1) // 2
    T = _tangent_numbers(half + 1)
    new = [Fraction(1), Fraction(-1, 2)]
    for n in range(1, half + 2):
        four_n = 4**n
        new.append(Fraction((-1) ** (n - 1) * 2 * n * T[n - 1], four_n * (four_n - 1)))
        new.append(Fraction(0))
    assert new[: len(_cache)] == _cache, "Bernoulli cache extension changed existing values"
    _cache[:] = new


def bernoulli(m: int) -> Fraction:
    """B_m as an exact rational (B_1 = -1/2 convention)."""
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if m >= len(_cache):
        with _lock:
            if m >= len(_cache):
                _extend_to(m)
    return _cache[m]


def bernoulli_numbers(count: int) -> list[Fraction]:
    """The list B_0, B_1, ..., B_{2*count}."""
    if count < 1:
        raise ValueError("count must be >= 1")
    bernoulli(2 * count)
    return _cache[: 2 * count + 1]


def cached_upto() -> int:
    """Largest index m such that B_m is currently cached."""
    return len(_cache) - 1
