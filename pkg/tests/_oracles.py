"""Independent brute-force oracles used only by the tests.

These deliberately avoid the production code paths: Bernoulli numbers come
from the defining convolution recurrence, determinants from recursive
cofactor expansion, and high-precision reference sums from term-by-term
mpf summation.
"""

import math
from fractions import Fraction

from mpmath import mp, mpf


def convolution_bernoulli(m):
    """B_0..B_m via sum_{j=0}^{k-1} C(k+1, j) B_j = -(k+1) B_k."""
    B = [Fraction(1)]
    for k in range(1, m + 1):
        acc = Fraction(0)
        for j in range(k):
            acc += math.comb(k + 1, j) * B[j]
        B.append(-acc / (k + 1))
    return B


def cofactor_det_fractions(rows):
    """Exact determinant of a rational matrix by Laplace expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det_fractions(minor)
        total += term if j % 2 == 0 else -term
    return total


def cofactor_det_mpf(rows, bits):
    """Big-float determinant by Laplace expansion at the given precision."""
    with mp.workprec(bits):
        return _cof(rows)


def _cof(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = mp.zero
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _cof(minor)
        total += term if j % 2 == 0 else -term
    return total


def sum_i_log_i(n, dps=60):
    """sum_{i<=n} i log i at high precision, summed term by term."""
    with mp.workprec(int(dps * 3.33) + 16):
        return mp.fsum(mpf(i) * mp.log(i) for i in range(2, n + 1))


def sum_im1_log_i(n, dps=60):
    """sum_{i<=n} (i-1) log i at high precision."""
    with mp.workprec(int(dps * 3.33) + 16):
        return mp.fsum(mpf(i - 1) * mp.log(i) for i in range(2, n + 1))
