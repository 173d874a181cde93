"""Hankel determinants of zeta and Dirichlet series values in verified
arbitrary precision, with recurrence detection and denominator-growth
witnesses."""

from .precision import BigReal, PrecisionContext, agree_digits
from .bernoulli import bernoulli_numbers
from .dirichlet import (SeriesSpec, series_value, zeta_direct_sum, zeta_int,
                        truncated_zeta_sum)
from .hankel import (HankelResult, IndexSequence, SHIFT_CROSS, SHIFT_SEQUENCE,
                     build_matrix, cauchy_binet_converged, cauchy_binet_det,
                     cauchy_binet_tail_estimate, det_elimination, hankel_log_det,
                     multisum_det)
from .asymptotics import (FitResult, fit_growth, integral_inequality_all,
                          integral_inequality_holds, lest_exponent,
                          lgest_bound_log, slope_sequence)
from .kronecker import (RationalSequence, RecurrenceReport, exact_hankel_det,
                        find_recurrence, first_all_zero_index,
                        parse_rational_lines, rationality_scan)
from .diophantine import WitnessRow, growth_witness, product_bound, witness_table
from .errors import (CombinatorialBudgetError, PrecisionExhausted,
                     SequenceParseError, TailBoundError, UnverifiableError)

__version__ = "0.1.0"

__all__ = [
    "BigReal", "PrecisionContext", "agree_digits",
    "bernoulli_numbers",
    "SeriesSpec", "series_value", "zeta_direct_sum", "zeta_int", "truncated_zeta_sum",
    "HankelResult", "IndexSequence", "SHIFT_CROSS", "SHIFT_SEQUENCE",
    "build_matrix", "cauchy_binet_converged", "cauchy_binet_det",
    "cauchy_binet_tail_estimate", "det_elimination", "hankel_log_det", "multisum_det",
    "FitResult", "fit_growth", "integral_inequality_all", "integral_inequality_holds",
    "lest_exponent", "lgest_bound_log", "slope_sequence",
    "RationalSequence", "RecurrenceReport", "exact_hankel_det", "find_recurrence",
    "first_all_zero_index", "parse_rational_lines", "rationality_scan",
    "WitnessRow", "growth_witness", "product_bound", "witness_table",
    "CombinatorialBudgetError", "PrecisionExhausted", "SequenceParseError",
    "TailBoundError", "UnverifiableError",
    "__version__",
]
