"""Evaluation of zeta and general Dirichlet series values at integer s >= 2.

The workhorse is Euler-Maclaurin summation for the Hurwitz-type sums
sum_{k>=0} (k + alpha)^(-s) with rational alpha > 0:

    sum_{k=0}^{N-1} (k+a)^-s  +  x^(1-s)/(s-1)  +  x^-s/2
        + sum_{m=1}^{J} B_{2m}/(2m)! * s(s+1)...(s+2m-2) * x^(-s-2m+1),

with x = N + alpha. Because (x+a)^(-s) is completely monotone for s > 0,
the remainder after J correction pairs has the sign of, and is bounded by,
the first omitted term; that bound is evaluated exactly in working
precision after each run, so the certificate never rests on the double
precision parameter search alone.

Periodic-coefficient series are evaluated through the exact decomposition
f(s) = q^-s * sum_r a_r * hurwitz(s, r/q); a literal truncated sum with the
closed-form integral tail bound is kept for custom coefficient oracles and
as an independent cross-check route.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from mpmath import mp, mpf

from .errors import TailBoundError
from .precision import BigReal, PrecisionContext

# Hard ceiling on direct-summation term counts (custom series route).
DIRECT_SUM_CEILING = 10**7

_value_lock = threading.Lock()
_zeta_cache: dict[tuple[int, int], BigReal] = {}
_hurwitz_cache: dict[tuple[int, int, int, int], BigReal] = {}


def clear_caches() -> None:
    with _value_lock:
        _zeta_cache.clear()
        _hurwitz_cache.clear()


@dataclass(frozen=True)
class SeriesSpec:
    """A Dirichlet series f(s) = sum_k a_k k^(-s) with decay |a_k| <= A k^(1-delta)."""

    kind: str  # "zeta" | "periodic" | "custom"
    delta: Fraction = Fraction(1)
    coefficients: Optional[tuple[Fraction, ...]] = None
    coefficient_fn: Optional[Callable[[int], Fraction]] = field(default=None, compare=False)
    bound_constant: Fraction = Fraction(1)

    @staticmethod
    def zeta() -> "SeriesSpec":
        return SeriesSpec(kind="zeta")

    @staticmethod
    def periodic(coefficients) -> "SeriesSpec":
        coeffs = tuple(Fraction(c) for c in coefficients)
        if len(coeffs) < 1:
            raise ValueError("periodic series needs at least one coefficient")
        bound = max((abs(c) for c in coeffs), default=Fraction(0))
        return SeriesSpec(kind="periodic", coefficients=coeffs, bound_constant=bound)

    @staticmethod
    def custom(coefficient_fn, bound_constant, delta=Fraction(1)) -> "SeriesSpec":
        delta = Fraction(delta)
        if not 0 < delta <= 1:
            raise ValueError("delta must lie in (0, 1]")
        A = Fraction(bound_constant)
        if A < 0:
            raise ValueError("bound constant must be nonnegative")
        return SeriesSpec(kind="custom", delta=delta, coefficient_fn=coefficient_fn,
                          bound_constant=A)

    def __post_init__(self):
        if self.kind not in ("zeta", "periodic", "custom"):
            raise ValueError(f"unknown series kind {self.kind!r}")
        if self.kind == "periodic" and not self.coefficients:
            raise ValueError("periodic series requires coefficients")
        if self.kind == "custom" and self.coefficient_fn is None:
            raise ValueError("custom series requires a coefficient oracle")

    @property
    def period(self) -> int:
        return len(self.coefficients) if self.coefficients else 1

    def coefficient(self, k: int) -> Fraction:
        if k < 1:
            raise ValueError("coefficient index starts at 1")
        if self.kind == "zeta":
            return Fraction(1)
        if self.kind == "periodic":
            return self.coefficients[(k - 1) % len(self.coefficients)]
        return Fraction(self.coefficient_fn(k))

    def summary(self) -> str:
        if self.kind == "zeta":
            return "zeta"
        if self.kind == "periodic":
            return "periodic[" + ",".join(str(c) for c in self.coefficients) + "]"
        return f"custom(delta={self.delta},A={self.bound_constant})"


_LN2 = math.log(2)
_LN2PI = math.log(2 * math.pi)
_J_LADDER = (4, 8, 16, 32, 64, 128, 256, 512, 1024)


def _select_parameters(s: int, alpha: float, target_bits: int) -> tuple[int, int]:
    """Truncation N and correction order J minimizing a fixed cost model.

    The tail bound used is 4*(2pi)^(-2J-2) * (s)_{2J+1} * (N+alpha)^(-s-2J-1),
    which majorizes |B_{2J+2}|/(2J+2)! * (s)_{2J+1} * x^(-s-2J-1). The cost
    model is deterministic (independent of any cache state) so parameter
    choices, and therefore results, are reproducible.
    """
    best = None
    for J in _J_LADDER:
        two_m = 2 * J + 2
        log_num = math.log(4) - two_m * _LN2PI + math.lgamma(s + two_m - 1) - math.lgamma(s)
        ln_n = (log_num + (target_bits + 4) * _LN2) / (s + two_m - 1)
        if ln_n > 45:
            continue
        N = max(0, int(math.ceil(math.exp(ln_n) - alpha)) + 1, int(math.ceil(2 - alpha)))
        cost = N + 3 * J + 0.02 * J * J
        if best is None or cost < best[0]:
            best = (cost, N, J)
    if best is None:
        raise TailBoundError(
            f"Euler-Maclaurin parameters out of range for s={s}, target={target_bits} bits",
            required_terms=-1, ceiling=DIRECT_SUM_CEILING)
    return best[1], best[2]


def hurwitz_rational(s: int, num: int, den: int, target_bits: int) -> BigReal:
    """sum_{k>=0} (k + num/den)^(-s) with certified absolute error < 2^-target_bits.

    Requires integer s >= 2 and num/den > 0. Deterministic for fixed arguments.
    """
    from . import bernoulli as _bern

    if s < 2:
        raise ValueError(f"series arguments below 2 are unsupported (got s={s})")
    if num <= 0 or den <= 0:
        raise ValueError("offset must be a positive rational")
    g = math.gcd(num, den)
    num, den = num // g, den // g
    key = (s, num, den, target_bits)
    with _value_lock:
        hit = _hurwitz_cache.get(key)
    if hit is not None:
        return hit

    alpha = num / den
    N, J = _select_parameters(s, alpha, target_bits)
    for _attempt in range(8):
        value, tail_ok = _hurwitz_run(s, num, den, N, J, target_bits, _bern)
        if tail_ok:
            break
        N = max(2 * N, 16)
    else:
        raise TailBoundError(
            f"Euler-Maclaurin tail failed to certify for s={s}, alpha={num}/{den}",
            required_terms=N, ceiling=DIRECT_SUM_CEILING)

    with _value_lock:
        _hurwitz_cache[key] = value
    return value


def _hurwitz_run(s, num, den, N, J, target_bits, _bern):
    _bern.bernoulli(2 * J + 2)
    guard = 12 + int(math.ceil(math.log2(N + 4 * J + 16)))
    if num < den:  # leading term (den/num)^s dominates the magnitude
        guard += int(math.ceil(s * math.log2(den / num))) + 1
    w = target_bits + guard
    with mp.workprec(w):
        den_s = den**s
        acc = mp.zero
        for k in range(N):
            acc += mpf(den_s) / mpf((k * den + num) ** s)
        xnum = N * den + num  # x = N + alpha = xnum/den
        u = mpf(den) / mpf(xnum)
        x_pow_s = mpf(den_s) / mpf(xnum**s)
        acc += (mpf(den ** (s - 1)) / mpf(xnum ** (s - 1))) / (s - 1)
        acc += x_pow_s / 2
        pw = x_pow_s * u          # x^(-s-2m+1) for m = 1
        u2 = u * u
        rising = mpf(s)           # s(s+1)...(s+2m-2) for m = 1
        fact = 2                  # (2m)! for m = 1
        for m in range(1, J + 1):
            if m > 1:
                rising *= (s + 2 * m - 3) * (s + 2 * m - 2)
                fact *= (2 * m) * (2 * m - 1)
            b = _bern.bernoulli(2 * m)
            acc += (mpf(b.numerator) / mpf(b.denominator * fact)) * rising * pw
            pw *= u2
        # Exact first-omitted-term bound: the true remainder cannot exceed it.
        rising_next = rising * (s + 2 * J - 1) * (s + 2 * J)
        fact_next = fact * (2 * J + 2) * (2 * J + 1)
        b_next = _bern.bernoulli(2 * J + 2)
        omitted = abs(mpf(b_next.numerator) / mpf(b_next.denominator * fact_next)) * rising_next * pw
        tail_ok = omitted <= mpf(2) ** (-(target_bits + 3))
    return acc, tail_ok


def zeta_int(s: int, ctx: PrecisionContext) -> BigReal:
    """Riemann zeta at integer s >= 2, absolute error < 2^-ctx.bits."""
    if s < 2:
        raise ValueError(f"zeta_int requires s >= 2 (s=1 is the pole); got {s}")
    key = (s, ctx.bits)
    with _value_lock:
        hit = _zeta_cache.get(key)
    if hit is not None:
        return hit
    value = hurwitz_rational(s, 1, 1, ctx.bits + 2)
    with _value_lock:
        _zeta_cache[key] = value
    return value


def zeta_direct_sum(s: int, ctx: PrecisionContext, terms: int) -> tuple[BigReal, BigReal]:
    """Partial sum plus integral-tail midpoint; returns (value, certified absolute error).

    The tail sum_{k>K} k^-s is bracketed by the integrals from K+1 and from K;
    the midpoint of the bracket is added and half the bracket width is the
    certificate (plus a rounding allowance).
    """
    if s < 2:
        raise ValueError(f"direct summation requires s >= 2; got {s}")
    if terms < 1:
        raise ValueError("need at least one term")
    K = terms
    cert_bits = min(ctx.bits, int(s * math.log2(K)) + 16)
    w = cert_bits + int(math.ceil(math.log2(K + 2))) + 12
    with mp.workprec(w):
        acc = mp.zero
        for k in range(1, K + 1):
            acc += mpf(1) / mpf(k**s)
        hi = (mpf(1) / mpf(K ** (s - 1))) / (s - 1)
        lo = (mpf(1) / mpf((K + 1) ** (s - 1))) / (s - 1)
        value = acc + (hi + lo) / 2
        err = (hi - lo) / 2 + mpf(2) ** (-(cert_bits + 4))
    return value, err


def required_terms(spec: SeriesSpec, s: int, target_bits: int) -> int:
    """Smallest K with A * integral_K^inf x^(1-delta-s) dx <= 2^-(target_bits+2)."""
    A = spec.bound_constant
    if A == 0:
        return 1
    expo = s + spec.delta - 2  # tail bound: A * K^(-expo) / expo
    log2_K = (math.log2(float(A)) - math.log2(float(expo)) + target_bits + 2) / float(expo)
    if log2_K > 62:
        return 1 << 62
    return max(1, int(math.ceil(2 ** log2_K)) + 1)


def series_direct_sum(spec: SeriesSpec, s: int, ctx: PrecisionContext,
                      ceiling: int = DIRECT_SUM_CEILING) -> BigReal:
    """Literal truncated sum with the closed-form tail bound; exact coefficients.

    Raises TailBoundError, reporting the required K, when the bound cannot
    reach the target below the ceiling.
    """
    if s < 2:
        raise ValueError(f"series arguments below 2 are unsupported (got s={s})")
    K = required_terms(spec, s, ctx.bits)
    if K > ceiling:
        raise TailBoundError(
            f"tail bound needs K={K} terms for {ctx.bits} bits at s={s}, "
            f"above the ceiling {ceiling}",
            required_terms=K, ceiling=ceiling)
    A = spec.bound_constant
    w = ctx.bits + int(math.ceil(math.log2(K + 4))) + 12 + max(0, int(A).bit_length())
    with mp.workprec(w):
        acc = mp.zero
        for k in range(1, K + 1):
            a_k = spec.coefficient(k)
            if a_k == 0:
                continue
            acc += mpf(a_k.numerator) / mpf(a_k.denominator * k**s)
    return acc


def series_value(spec: SeriesSpec, s: int, ctx: PrecisionContext) -> BigReal:
    """f(s) with absolute error < 2^-ctx.bits."""
    if s < 2:
        raise ValueError(f"series arguments below 2 are unsupported (got s={s})")
    if spec.kind == "zeta":
        return zeta_int(s, ctx)
    if spec.kind == "periodic":
        return _periodic_value(spec, s, ctx)
    return series_direct_sum(spec, s, ctx)


def _periodic_value(spec: SeriesSpec, s: int, ctx: PrecisionContext) -> BigReal:
    # f(s) = q^-s sum_{r=1..q} a_r zeta(s, r/q), exactly; each Hurwitz value
    # is certified, so the combination is certified as well.
    q = spec.period
    coeff_scale = sum(abs(c) for c in spec.coefficients) + 1
    term_bits = ctx.bits + 2 * q.bit_length() + int(coeff_scale).bit_length() + 8
    parts = []
    for r in range(1, q + 1):
        a_r = spec.coefficients[r - 1]
        if a_r == 0:
            parts.append(None)
            continue
        parts.append(hurwitz_rational(s, r, q, term_bits))
    with mp.workprec(term_bits):
        acc = mp.zero
        for r in range(1, q + 1):
            if parts[r - 1] is None:
                continue
            a_r = spec.coefficients[r - 1]
            acc += (mpf(a_r.numerator) / mpf(a_r.denominator)) * parts[r - 1]
        acc /= mpf(q) ** s
    return acc


def truncated_zeta_sum(p: int, K: int, target_bits: int) -> BigReal:
    """S_p(K) = sum_{k<=K} k^-p, certified to 2^-target_bits.

    Small K is summed term by term; large K goes through the exact identity
    S_p(K) = zeta(p) - hurwitz(p, K+1), which is what makes astronomically
    large truncation points affordable.
    """
    if p < 2:
        raise ValueError("power sums need p >= 2")
    if K < 1:
        raise ValueError("K must be positive")
    if K <= 8192:
        w = target_bits + K.bit_length() + 10
        with mp.workprec(w):
            acc = mp.zero
            for k in range(1, K + 1):
                acc += mpf(1) / mpf(k**p)
        return acc
    full = hurwitz_rational(p, 1, 1, target_bits + 4)
    tail = hurwitz_rational(p, K + 1, 1, target_bits + 4)
    with mp.workprec(target_bits + 8):
        return full - tail
