"""Denominator-growth witnesses from computed determinant magnitudes.

Under the hypothesis that every zeta value in the progression is rational
with common denominators q_m, integrality of the scaled determinant forces
q_{n+1}...q_{2n} * |H_n| >= 1. Each nonzero determinant therefore yields a
lower bound on the denominator product and refutes every uniform bound
q_m <= C^m with C below the witness base C_n = |H_n|^(-2/(n(3n+1))).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from mpmath import mp, mpf

from .hankel import HankelResult
from .precision import BigReal


@dataclass(frozen=True)
class WitnessRow:
    n: int
    log10_inv_H: BigReal          # -log10|H_n|
    product_bound_log10: BigReal  # log10 lower bound for q_{n+1}...q_{2n}
    C_n: BigReal                  # minimal refuted uniform exponential base
    trivial: bool                 # C_n <= 1 carries no constraint


def product_bound(res: HankelResult) -> BigReal:
    """log10 of the forced denominator product q_{n+1}...q_{2n}."""
    if res.sign == 0:
        raise ValueError("a vanishing determinant gives no product bound")
    return -res.log10_abs


def growth_witness(res: HankelResult) -> WitnessRow:
    """Witness row for one determinant; rows with C_n <= 1 are kept but flagged."""
    if res.sign == 0:
        raise ValueError("a vanishing determinant gives no witness")
    n = res.n
    with mp.workprec(res.precision_bits + 16):
        log10_inv = -mpf(res.log10_abs)
        log10_C = 2 * log10_inv / (n * (3 * n + 1))
        C_n = mp.power(10, log10_C)
    return WitnessRow(n=n, log10_inv_H=log10_inv, product_bound_log10=log10_inv,
                      C_n=C_n, trivial=bool(C_n <= 1))


def witness_table(results: Sequence[HankelResult]) -> list[WitnessRow]:
    """Rows sorted by n; all inputs must come from one series and progression."""
    if not results:
        return []
    keys = {(r.series, r.index, r.shift_mode) for r in results}
    if len(keys) > 1:
        raise ValueError(f"mixed series/progressions in witness table: {sorted(keys)}")
    if any(r.sign == 0 for r in results):
        raise ValueError("vanishing determinants cannot enter the witness table")
    return [growth_witness(r) for r in sorted(results, key=lambda r: r.n)]
