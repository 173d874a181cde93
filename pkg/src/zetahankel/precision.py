"""Working-precision policy for big-float computations.

All big-float values in this package are mpmath ``mpf`` instances produced
under an explicit working precision, with round-to-nearest everywhere.
Identical inputs and contexts yield bit-identical results; nothing here
depends on global mutable state other than mpmath's precision, which is
always set through ``mp.workprec`` scopes.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

# Arbitrary-precision float type carried at a stated PrecisionContext.
BigReal = mpf


@dataclass(frozen=True)
class PrecisionContext:
    """Mantissa precision in bits plus the extra bits recomputed to certify digits."""

    bits: int = 192
    verify_margin_bits: int = 64

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError(f"bits must be >= 64, got {self.bits}")
        if self.verify_margin_bits < 32:
            raise ValueError(
                f"verify_margin_bits must be >= 32, got {self.verify_margin_bits}"
            )


DEFAULT_CTX = PrecisionContext()

# Verification reruns are quantized to this step so the two runs always
# differ in precision by at least one full rung.
VERIFY_RUNG_BITS = 256


def round_up_rung(bits: int, rung: int = VERIFY_RUNG_BITS) -> int:
    return ((max(bits, 64) + rung - 1) // rung) * rung


def agree_digits(x, y, floor_scale=1, cap=10**6) -> int:
    """Decimal digits to which x and y agree, relative to max(|x|, |y|, floor_scale).

    Returns ``cap`` when the values are identical. Must be called inside a
    workprec scope wide enough to resolve the difference.
    """
    diff = abs(mpf(x) - mpf(y))
    if diff == 0:
        return cap
    scale = max(abs(mpf(x)), abs(mpf(y)), mpf(floor_scale))
    d = int(mp.floor(mp.log10(scale / diff)))
    return max(0, min(d, cap))
