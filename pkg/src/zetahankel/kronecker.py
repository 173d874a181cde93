"""Exact-rational Hankel determinants and minimal linear-recurrence detection.

A sequence with a rational generating function satisfies a constant-coefficient
linear recurrence, and by Kronecker's criterion its Hankel determinants vanish
from some order onward. Everything here stays in exact rational arithmetic:
determinants by fraction-free Bareiss elimination after clearing denominators,
recurrences by exact solves of the shifted Hankel systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import SequenceParseError


@dataclass(frozen=True)
class RationalSequence:
    """Exact rational values c_1..c_M."""

    values: tuple[Fraction, ...]
    origin: str = ""

    @staticmethod
    def of(values: Iterable, origin: str = "") -> "RationalSequence":
        vals = tuple(Fraction(v) for v in values)
        if not vals:
            raise ValueError("sequence must be nonempty")
        return RationalSequence(values=vals, origin=origin)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RecurrenceReport:
    """Minimal recurrence r_0 c_m + ... + r_k c_{m+k} = 0 for m >= valid_from."""

    found: bool
    order: int
    coefficients: tuple[Fraction, ...]  # r_0..r_k with r_k = 1 when found
    valid_from: int
    scanned_max_order: int


def exact_hankel_det(seq: RationalSequence, n: int, offset: int = 0) -> Fraction:
    """det of (c_{offset+i+j-1})_{1<=i,j<=n}, exact; zero is meaningful."""
    if n < 1:
        raise ValueError("n must be positive")
    if offset < 0:
        raise ValueError("offset must be nonnegative")
    M = len(seq)
    if offset + 2 * n - 1 > M:
        raise ValueError(
            f"need {offset + 2 * n - 1} sequence values for n={n}, offset={offset}, "
            f"but only {M} are available")
    rows = [[seq.values[offset + i + j] for j in range(n)] for i in range(n)]
    return _bareiss_det(rows)


def _bareiss_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    # Clear denominators row by row; divide the integer determinant back out.
    denom = Fraction(1)
    A: list[list[int]] = []
    for row in rows:
        m = lcm(*(c.denominator for c in row))
        denom *= m
        A.append([int(c * m) for c in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pivot
    return Fraction(sign * A[n - 1][n - 1], 1) / denom


def _solve_monic_tail(values: Sequence[Fraction], k: int, m1: int) -> Optional[tuple[Fraction, ...]]:
    """Solve sum_{i<k} r_i c_{m+i} = -c_{m+k} for all m in [m1, M-k]; r_k = 1.

    Returns r_0..r_k, or None when the system is inconsistent. Free unknowns
    are set to zero.
    """
    M = len(values)
    n_rows = M - k - m1 + 1
    if k == 0:
        return (Fraction(1),) if all(values[m - 1] == 0 for m in range(m1, M + 1)) else None
    aug = [[values[m - 1 + i] for i in range(k)] + [-values[m - 1 + k]]
           for m in range(m1, m1 + n_rows)]
    cols = k
    pivot_of_col: dict[int, int] = {}
    row = 0
    for col in range(cols):
        pr = next((r for r in range(row, len(aug)) if aug[r][col] != 0), None)
        if pr is None:
            continue
        aug[row], aug[pr] = aug[pr], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(len(aug)):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivot_of_col[col] = row
        row += 1
    # Inconsistent iff a zero row has nonzero right-hand side.
    for r in range(row, len(aug)):
        if aug[r][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for col, r in pivot_of_col.items():
        sol[col] = aug[r][cols]
    return tuple(sol) + (Fraction(1),)


def _verify_recurrence(values: Sequence[Fraction], coeffs: Sequence[Fraction], m1: int) -> bool:
    k = len(coeffs) - 1
    M = len(values)
    return all(
        sum(coeffs[i] * values[m - 1 + i] for i in range(k + 1)) == 0
        for m in range(m1, M - k + 1))


def find_recurrence(seq: RationalSequence, max_order: int) -> RecurrenceReport:
    """Minimal order k <= max_order, smallest starting index, r_k = 1, r_0 != 0.

    A full-tail failure retries with an incremented starting index, so
    eventually-valid recurrences are found with their threshold reported.
    The starting index is capped so the solved system keeps at least k+1 rows.
    """
    if max_order < 1:
        raise ValueError("max_order must be positive")
    M = len(seq)
    if M < 2 * max_order + 1:
        raise ValueError(
            f"sequence of length {M} too short for max_order={max_order} "
            f"(need {2 * max_order + 1})")
    values = seq.values
    for k in range(0, max_order + 1):
        for m1 in range(1, M - 2 * k + 1):
            coeffs = _solve_monic_tail(values, k, m1)
            if coeffs is None or coeffs[0] == 0:
                continue
            if _verify_recurrence(values, coeffs, m1):
                return RecurrenceReport(found=True, order=k, coefficients=coeffs,
                                        valid_from=m1, scanned_max_order=max_order)
    return RecurrenceReport(found=False, order=0, coefficients=(),
                            valid_from=0, scanned_max_order=max_order)


def rationality_scan(seq: RationalSequence) -> list[tuple[int, bool]]:
    """Zero flags of the leading Hankel determinants, n = 1..floor((M+1)/2)."""
    M = len(seq)
    if M < 3:
        raise ValueError("scan needs at least 3 values")
    out = []
    for n in range(1, (M + 1) // 2 + 1):
        out.append((n, exact_hankel_det(seq, n) == 0))
    return out


def first_all_zero_index(flags: Sequence[tuple[int, bool]]) -> Optional[int]:
    """Smallest n0 with every computed flag zero from n0 on, None if the last is nonzero."""
    n0 = None
    for n, is_zero in flags:
        if is_zero:
            if n0 is None:
                n0 = n
        else:
            n0 = None
    return n0


def parse_rational_lines(lines: Iterable[str], origin: str = "") -> RationalSequence:
    """One rational per line, 'p/q' or integer; blank lines and '#' comments skipped."""
    values = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            values.append(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise SequenceParseError(
                f"line {lineno}: cannot parse rational value {text!r} ({exc})",
                line_number=lineno) from exc
    if not values:
        raise SequenceParseError("no values found", line_number=0)
    return RationalSequence(values=tuple(values), origin=origin)
