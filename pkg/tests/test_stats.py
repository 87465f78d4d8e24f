from fractions import Fraction

import pytest

from srdpoly.stats import (expectation, moments, second_factorial_ratio,
                           second_factorial_ratio_rec, variance, variance_direct, verify_stats)


def _moments_of(row):
    total = sum(row)
    mean = Fraction(sum(m * q for m, q in enumerate(row)), total)
    var = sum((m - mean) ** 2 * q for m, q in enumerate(row)) / total
    return mean, var


@pytest.mark.parametrize("n, row", [
    (1, [1, 1]), (2, [1, 4, 1]), (3, [3, 14, 14, 3]), (4, [11, 64, 112, 64, 11]),
])
def test_against_listed_rows(n, row):
    mean, var = _moments_of(row)
    assert expectation(n) == mean
    assert variance(n) == var


def test_spot_values():
    assert expectation(1) == Fraction(1, 2)
    assert expectation(2) == 1
    assert expectation(9) == Fraction(9, 2)
    assert variance(1) == Fraction(1, 4)
    assert variance(2) == Fraction(1, 3)


def test_seeds():
    assert second_factorial_ratio(1) == 0
    assert second_factorial_ratio(2) == Fraction(1, 3)
    # (3t^3 + 14t^2 + 14t + 3)'' at 1 is 18 + 28
    assert second_factorial_ratio(3) == Fraction(46, 34)
    # (11t^4 + 64t^3 + ...)'' at 1 is 12*11 + 6*64 + 2*112
    assert second_factorial_ratio(4) == Fraction(12 * 11 + 6 * 64 + 2 * 112, 262)


def test_recursion_matches_direct_up_to_30():
    for n in range(1, 31):
        assert second_factorial_ratio_rec(n) == second_factorial_ratio(n)
        assert variance(n) == variance_direct(n)


def test_moment_record():
    r = moments(5)
    assert r.E == Fraction(5, 2) and r.Var == r.F_n + Fraction(10 - 25, 4)


def test_invalid_n():
    with pytest.raises(ValueError):
        expectation(0)
    with pytest.raises(ValueError):
        variance(0)


def test_verify_stats():
    assert all(r.passed for r in verify_stats(30))
