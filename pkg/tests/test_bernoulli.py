import threading
from fractions import Fraction

import pytest

from zetahankel import bernoulli_numbers
from zetahankel.bernoulli import bernoulli, cached_upto

from _oracles import convolution_bernoulli


def test_small_classical_values():
    got = bernoulli_numbers(1)
    assert got == [Fraction(1), Fraction(-1, 2), Fraction(1, 6)]


def test_b4_from_count_2():
    got = bernoulli_numbers(2)
    assert got[4] == Fraction(-1, 30)


def test_b10_against_convolution_recurrence():
    # brute-force oracle straight from the defining recurrence
    oracle = convolution_bernoulli(10)
    assert oracle[10] == Fraction(5, 66)
    assert bernoulli_numbers(5)[10] == Fraction(5, 66)


def test_agreement_with_convolution_up_to_60():
    assert bernoulli_numbers(30) == convolution_bernoulli(60)


def test_odd_indices_vanish_beyond_one():
    vals = bernoulli_numbers(10)
    assert all(vals[m] == 0 for m in range(3, 21, 2))


def test_count_must_be_positive():
    with pytest.raises(ValueError):
        bernoulli_numbers(0)


def test_cache_extends_monotonically():
    before = cached_upto()
    bernoulli_numbers(max(4, before // 2 + 2))
    mid = cached_upto()
    assert mid >= before
    bernoulli(mid + 10)
    assert cached_upto() >= mid + 10
    # earlier entries unchanged by the extension
    assert bernoulli_numbers(2) == [
        Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30)]


def test_concurrent_extension_is_consistent():
    errors = []

    def worker(count):
        try:
            vals = bernoulli_numbers(count)
            assert vals[2] == Fraction(1, 6)
            assert vals[2 * count] != 0
        except Exception as exc:  # noqa: BLE001
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(c,)) for c in (20, 35, 50, 65)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert bernoulli_numbers(35) == convolution_bernoulli(70)
