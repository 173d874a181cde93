"""Hankel matrices of series values and their determinants by two routes.

Route one is pivoted Gaussian elimination in adaptive big-float precision,
verified by recomputing at a higher precision rung until sign and the
requested number of digits of log10|H_n| agree. Route two is the positive
Cauchy-Binet expansion

    H_n^(a,b)[zeta] = sum_{k_1<...<k_n} prod_i k_i^-(2a+b)
                      * prod_{i<j} (k_i^-a - k_j^-a)^2,

whose truncation at k_i <= K is evaluated either by literal enumeration of
subsets (small K) or, for the astronomically large K needed to converge,
through the exact finite-K identity with truncated power sums
S_p(K) = sum_{k<=K} k^-p via a Leibniz expansion. The two evaluations of
the same truncated sum agree to working precision, which is tested; neither
shares code with the elimination route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

from mpmath import mp, mpf

from .errors import CombinatorialBudgetError, PrecisionExhausted, UnverifiableError
from .precision import (BigReal, PrecisionContext, VERIFY_RUNG_BITS, agree_digits,
                        round_up_rung)
from .dirichlet import SeriesSpec, series_value, truncated_zeta_sum

SHIFT_CROSS = "cross"          # entry (i,j) = f(n_{i+j})
SHIFT_SEQUENCE = "sequence"    # entry (i,j) = f(n_{i+j-1})

# Subset / ordered-tuple budgets for the literal expansion routes.
ENUM_SUBSET_BUDGET = 200_000
MULTISUM_TUPLE_BUDGET = 3_000_000
LEIBNIZ_MAX_N = 8

_LN2 = math.log(2)
_LN10 = math.log(10)


@dataclass(frozen=True)
class IndexSequence:
    """The argument sequence n_m feeding the determinant entries."""

    kind: str  # "progression" | "quadratic" | "explicit"
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    values: Optional[tuple[int, ...]] = None

    @staticmethod
    def progression(a: int, b: int) -> "IndexSequence":
        if a < 1:
            raise ValueError("progression step a must be a positive integer")
        if b < 0:
            raise ValueError("progression offset b must be nonnegative")
        return IndexSequence(kind="progression", a=a, b=b)

    @staticmethod
    def quadratic(c: int, d: int) -> "IndexSequence":
        if c < 1:
            raise ValueError("quadratic coefficient c must be a positive integer")
        return IndexSequence(kind="quadratic", c=c, d=d)

    @staticmethod
    def explicit(values: Sequence[int]) -> "IndexSequence":
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("explicit sequence must be nonempty")
        if any(v < 2 for v in vals):
            raise ValueError("explicit sequence entries must be >= 2")
        if any(x >= y for x, y in zip(vals, vals[1:])):
            raise ValueError("explicit sequence must be strictly increasing")
        return IndexSequence(kind="explicit", values=vals)

    def argument(self, m: int) -> int:
        """n_m for m >= 1."""
        if m < 1:
            raise ValueError("sequence index starts at 1")
        if self.kind == "progression":
            return self.a * m + self.b
        if self.kind == "quadratic":
            return self.c * m * m + self.d
        if m > len(self.values):
            raise ValueError(f"explicit sequence has only {len(self.values)} entries")
        return self.values[m - 1]

    def summary(self) -> str:
        if self.kind == "progression":
            return f"progression(a={self.a},b={self.b})"
        if self.kind == "quadratic":
            return f"quadratic(c={self.c},d={self.d})"
        return "explicit[" + ",".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class HankelResult:
    """Verified sign and log-magnitude of one determinant."""

    n: int
    sign: int
    log10_abs: BigReal
    verified_digits: int
    precision_bits: int
    method: str
    series: str
    index: str
    shift_mode: str


def _matrix_argument(index: IndexSequence, shift_mode: str, i: int, j: int) -> tuple[int, int]:
    """(m, n_m) for the (i, j) entry, 1-based."""
    if shift_mode == SHIFT_CROSS:
        m = i + j
    elif shift_mode == SHIFT_SEQUENCE:
        m = i + j - 1
    else:
        raise ValueError(f"unknown shift mode {shift_mode!r}")
    return m, index.argument(m)


def build_matrix(spec: SeriesSpec, index: IndexSequence, shift_mode: str, n: int,
                 ctx: PrecisionContext) -> list[list[BigReal]]:
    """Symmetric n x n matrix of series values; each argument evaluated once."""
    if n < 1:
        raise ValueError("matrix dimension must be positive")
    lo = 2 if shift_mode == SHIFT_CROSS else 1
    values = {}
    for m in range(lo, lo + 2 * n - 1):
        arg = index.argument(m)
        if arg < 2:
            raise ValueError(
                f"determinant entry needs argument >= 2 but n_{m} = {arg} "
                f"(index {index.summary()}, shift {shift_mode})")
        values[m] = series_value(spec, arg, ctx)
    return [[values[(i + 1) + (j + 1) - (0 if shift_mode == SHIFT_CROSS else 1)]
             for j in range(n)] for i in range(n)]


def det_elimination(M: Sequence[Sequence[BigReal]], ctx: PrecisionContext) -> tuple[int, BigReal]:
    """Partial-pivot elimination at ctx.bits; returns (sign, ln|det|).

    Pivot choice is the largest absolute value, ties broken by the smallest
    row index, so runs are reproducible. A pivot that is exactly zero at
    working precision raises PrecisionExhausted.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    A = [list(row) for row in M]
    sign = 1
    with mp.workprec(ctx.bits):
        log_abs = mp.zero
        for col in range(n):
            pivot_row, pivot_val = col, abs(A[col][col])
            for r in range(col + 1, n):
                v = abs(A[r][col])
                if v > pivot_val:
                    pivot_row, pivot_val = r, v
            if pivot_val == 0:
                raise PrecisionExhausted(
                    f"zero pivot in column {col + 1} at {ctx.bits} bits")
            if pivot_row != col:
                A[col], A[pivot_row] = A[pivot_row], A[col]
                sign = -sign
            p = A[col][col]
            if p < 0:
                sign = -sign
            log_abs += mp.log(abs(p))
            for r in range(col + 1, n):
                f = A[r][col] / p
                if f == 0:
                    continue
                row_r, row_c = A[r], A[col]
                for cc in range(col + 1, n):
                    row_r[cc] -= f * row_c[cc]
    return sign, log_abs


def starting_bits(spec: SeriesSpec, index: IndexSequence, shift_mode: str, n: int,
                  target_digits: int) -> int:
    """Precision guess seeded from the expected -a n^2 log n decay."""
    digit_bits = int(math.ceil(target_digits * _LN10 / _LN2))
    if index.kind == "progression":
        a = index.a
        growth = (a * n * n * math.log(max(n, 1)) + 2 * a * n * n) / _LN2
        return int(growth) + digit_bits + 10 * n + 64
    # Fast-growing sequences: the top antidiagonal arguments set the scale of
    # the cancellation, since f(n_m) - 1 ~ 2^-n_m.
    lo = 1 if shift_mode == SHIFT_SEQUENCE else 2
    top = sum(index.argument(m) for m in range(max(lo, n), lo + 2 * n - 1))
    return top + digit_bits + 10 * n + 64


def hankel_log_det(spec: SeriesSpec, index: IndexSequence, shift_mode: str, n: int,
                   target_digits: int, max_retries: int = 6) -> HankelResult:
    """Verified determinant: two elimination runs one precision rung apart
    must agree on sign and target_digits digits of log10|H_n|, else the
    precision is doubled (bounded retries)."""
    if target_digits < 1:
        raise ValueError("target_digits must be positive")
    rung = round_up_rung(starting_bits(spec, index, shift_mode, n, target_digits))
    last_agreement = None
    for attempt in range(max_retries):
        bits_lo, bits_hi = rung, rung + VERIFY_RUNG_BITS
        try:
            runs = []
            for bits in (bits_lo, bits_hi):
                ctx = PrecisionContext(bits=bits, verify_margin_bits=VERIFY_RUNG_BITS)
                M = build_matrix(spec, index, shift_mode, n, ctx)
                runs.append(det_elimination(M, ctx))
        except PrecisionExhausted:
            rung *= 2
            continue
        (sign_lo, log_lo), (sign_hi, log_hi) = runs
        with mp.workprec(bits_hi):
            digits_cap = int(bits_lo * math.log10(2)) - 2
            agreement = min(agree_digits(log_lo / _LN10, log_hi / _LN10), digits_cap)
            log10_abs = log_hi / mp.log(10)
        last_agreement = agreement
        if sign_lo == sign_hi and agreement >= target_digits:
            return HankelResult(
                n=n, sign=sign_hi, log10_abs=log10_abs,
                verified_digits=agreement, precision_bits=bits_hi,
                method="elimination", series=spec.summary(),
                index=index.summary(), shift_mode=shift_mode)
        rung *= 2
    raise UnverifiableError(
        f"determinant n={n} unverifiable at configured ceiling "
        f"({max_retries} retries, last {rung} bits, last agreement {last_agreement})",
        n=n, attempts=max_retries, last_bits=rung, last_agreement=last_agreement)


def _check_progression(a: int, b: int, n: int, K: int) -> None:
    if n < 1 or K < n:
        raise ValueError("need 1 <= n <= K")
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")


def cauchy_binet_det(a: int, b: int, n: int, K: int, ctx: PrecisionContext,
                     enum_budget: int = ENUM_SUBSET_BUDGET) -> BigReal:
    """Truncated positive expansion of H_n^(a,b)[zeta] over subsets of [1, K].

    Nondecreasing in K and convergent to the determinant from below. Route
    selection is deterministic: literal enumeration within the subset budget,
    otherwise the exact partial-sum determinant identity.
    """
    _check_progression(a, b, n, K)
    n_subsets = math.comb(K, n)
    if n_subsets <= enum_budget:
        return _cb_enumerate(a, b, n, K, ctx)
    if n > LEIBNIZ_MAX_N:
        raise CombinatorialBudgetError(
            f"{n_subsets} {n}-subsets of [1,{K}] exceed the enumeration budget "
            f"{enum_budget} and n > {LEIBNIZ_MAX_N} rules out the closed-form route",
            size=n_subsets, budget=enum_budget)
    return _cb_closed_form(a, b, n, K, ctx)


def _cb_enumerate(a: int, b: int, n: int, K: int, ctx: PrecisionContext) -> BigReal:
    w = ctx.bits + 16
    with mp.workprec(w):
        weight = [mp.zero] * (K + 1)
        inv_a = [mp.zero] * (K + 1)
        for k in range(1, K + 1):
            weight[k] = mpf(1) / mpf(k ** (2 * a + b))
            inv_a[k] = mpf(1) / mpf(k**a)
        total = mp.zero
        for subset in combinations(range(1, K + 1), n):
            term = weight[subset[0]]
            for k in subset[1:]:
                term *= weight[k]
            for i in range(n):
                xi = inv_a[subset[i]]
                for j in range(i + 1, n):
                    d = xi - inv_a[subset[j]]
                    term *= d * d
            total += term
    return total


def _perm_sign(perm: tuple[int, ...]) -> int:
    p = list(perm)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _cb_closed_form(a: int, b: int, n: int, K: int, ctx: PrecisionContext) -> BigReal:
    # det over (i,j) of S_{a(i+j)+b}(K): equal to the truncated positive sum
    # by Cauchy-Binet at finite K. Expanded by the Leibniz rule, not by
    # elimination, to stay independent of the route being checked.
    cancel = int((a * n * n * math.log(max(n, 2)) + 2 * a * n * n) / _LN2) + 10 * n
    w = ctx.bits + cancel + 48
    sums = {m: truncated_zeta_sum(a * m + b, K, w) for m in range(2, 2 * n + 1)}
    with mp.workprec(w):
        total = mp.zero
        for perm in permutations(range(n)):
            term = sums[2 + perm[0]]
            for i in range(1, n):
                term *= sums[(i + 1) + perm[i] + 1]
            total += term if _perm_sign(perm) > 0 else -term
    return total


def cauchy_binet_tail_estimate(a: int, b: int, n: int, K: int,
                               ctx: PrecisionContext) -> BigReal:
    """Heuristic remaining-tail estimate: the gain of the last doubling step."""
    if K < 2 * n:
        raise ValueError("tail estimate needs K >= 2n")
    v_half = cauchy_binet_det(a, b, n, K // 2, ctx)
    v_full = cauchy_binet_det(a, b, n, K, ctx)
    with mp.workprec(ctx.bits + 16):
        return v_full - v_half


def cauchy_binet_converged(a: int, b: int, n: int, digits: int,
                           ctx: Optional[PrecisionContext] = None,
                           start_K: Optional[int] = None,
                           max_doublings: int = 160) -> tuple[BigReal, int, BigReal]:
    """Double K until two successive truncations agree to the requested digits.

    Returns (value at final K, final K, last doubling gain). The value is a
    cross-check oracle, not a certified evaluator: the agreement criterion is
    heuristic, though the monotone convergence from below makes it sturdy.
    """
    if ctx is None:
        bits = starting_bits(SeriesSpec.zeta(), IndexSequence.progression(a, b),
                             SHIFT_CROSS, n, digits) + 64
        ctx = PrecisionContext(bits=max(192, bits))
    K = max(2 * n, 16) if start_K is None else start_K
    prev = cauchy_binet_det(a, b, n, K, ctx)
    for _ in range(max_doublings):
        K *= 2
        cur = cauchy_binet_det(a, b, n, K, ctx)
        with mp.workprec(ctx.bits + 16):
            gain = cur - prev
            if agree_digits(mp.log(cur), mp.log(prev)) >= digits:
                return cur, K, gain
        prev = cur
    raise UnverifiableError(
        f"Cauchy-Binet ladder for (a={a}, b={b}, n={n}) did not reach "
        f"{digits} digits within {max_doublings} doublings",
        n=n, attempts=max_doublings, last_bits=ctx.bits, last_agreement=None)


def multisum_det(spec: SeriesSpec, n: int, K: int, ctx: PrecisionContext,
                 tuple_budget: int = MULTISUM_TUPLE_BUDGET) -> BigReal:
    """Unsymmetrized multi-sum form of det(f(i+j)) truncated at k_i <= K.

    Iterates ordered tuples (k_1, ..., k_n) in [1, K]^n with the literal term
    a_{k_1}...a_{k_n} / (k_1^2 k_2^3 ... k_n^(n+1)) * prod_{i<j} (1/k_i - 1/k_j);
    tuples with a repeated entry contribute zero and are skipped. Small-n
    cross-check only.
    """
    if n < 1 or K < n:
        raise ValueError("need 1 <= n <= K")
    tuples = math.comb(K, n) * math.factorial(n)
    if tuples > tuple_budget:
        raise CombinatorialBudgetError(
            f"{tuples} ordered tuples exceed the budget {tuple_budget}",
            size=tuples, budget=tuple_budget)
    cancel = int((n * n * math.log(max(n, 2)) + 2 * n * n) / _LN2)
    w = ctx.bits + cancel + tuples.bit_length() + 24
    with mp.workprec(w):
        inv = [mp.zero] * (K + 1)
        coeff = [mp.zero] * (K + 1)
        pows = [None] * (K + 1)  # pows[k][i] = k^-(i+2), i = 0..n-1
        for k in range(1, K + 1):
            inv[k] = mpf(1) / mpf(k)
            a_k = spec.coefficient(k)
            coeff[k] = mpf(a_k.numerator) / mpf(a_k.denominator)
            base = mpf(1) / mpf(k * k)
            row = []
            for _ in range(n):
                row.append(base)
                base *= inv[k]
            pows[k] = row
        total = mp.zero
        for subset in combinations(range(1, K + 1), n):
            if any(coeff[k] == 0 for k in subset):
                continue  # the coefficient product kills every ordering
            for tup in permutations(subset):
                term = coeff[tup[0]] * pows[tup[0]][0]
                for i in range(1, n):
                    term *= coeff[tup[i]] * pows[tup[i]][i]
                for i in range(n):
                    vi = inv[tup[i]]
                    for j in range(i + 1, n):
                        term *= vi - inv[tup[j]]
                total += term
    return total
