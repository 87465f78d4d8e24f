"""Mean and variance of the bar count of a uniformly random signed relative
derangement, as exact rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .recur import IdentityReport, check, coeff_q, poly_Q_B


@dataclass(frozen=True)
class MomentRecord:
    n: int
    E: Fraction
    Var: Fraction
    F_n: Fraction


def _row(n: int) -> list[int]:
    return [coeff_q(n, m) for m in range(n + 1)]


def expectation_direct(n: int) -> Fraction:
    row = _row(n)
    return Fraction(sum(m * q for m, q in enumerate(row)), sum(row))


def expectation(n: int) -> Fraction:
    """``n/2``, confirmed against the coefficient table."""
    if n < 1:
        raise ValueError("expectation needs n >= 1")
    value = Fraction(n, 2)
    direct = expectation_direct(n)
    if direct != value:
        raise ArithmeticError(f"table mean {direct} differs from n/2 at n={n}")
    return value


def second_factorial_ratio(n: int) -> Fraction:
    """``Q''(1) / Q(1)`` straight from the polynomial."""
    q = poly_Q_B(n)
    return Fraction(q.derivative().derivative()(1), q(1))


_F: dict[int, Fraction] = {}


def second_factorial_ratio_rec(n: int) -> Fraction:
    """The same ratio by its three-term recursion over ``n-1, n-2, n-3``.

    Seeds ``n <= 3`` are taken from the polynomials; for ``n = 3`` the
    ``n-3`` term is void because ``Q_0 = 0``.
    """
    if n < 1:
        raise ValueError("needs n >= 1")
    if n <= 3:
        return second_factorial_ratio(n)
    if n not in _F:
        for k in range(4, n + 1):
            if k in _F:
                continue
            Q = lambda j: poly_Q_B(j)(1)  # noqa: E731
            F = second_factorial_ratio_rec
            _F[k] = (((k - 1) ** 2 + (2 * k - 2) * F(k - 1)) * Fraction(Q(k - 1), Q(k))
                     + ((3 * k - 2) * (k - 2) + (4 * k - 3) * F(k - 2)) * Fraction(Q(k - 2), Q(k))
                     + ((2 * k - 2) * (k - 3) + (2 * k - 2) * F(k - 3)) * Fraction(Q(k - 3), Q(k)))
    return _F[n]


def variance(n: int) -> Fraction:
    if n < 1:
        raise ValueError("variance needs n >= 1")
    return second_factorial_ratio_rec(n) + Fraction(2 * n - n * n, 4)


def variance_direct(n: int) -> Fraction:
    """Second central moment of the coefficient row."""
    row = _row(n)
    mean = Fraction(n, 2)
    return sum((m - mean) ** 2 * q for m, q in enumerate(row)) / sum(row)


def moments(n: int) -> MomentRecord:
    return MomentRecord(n, expectation(n), variance(n), second_factorial_ratio_rec(n))


def verify_stats(n_max: int = 30) -> list[IdentityReport]:
    ns = range(1, n_max + 1)

    def mean_probe(n):
        q = poly_Q_B(n)
        got = Fraction(q.derivative()(1), q(1))
        return None if got == Fraction(n, 2) == expectation_direct(n) else f"mean {got}"

    def var_probe(n):
        a, b = variance(n), variance_direct(n)
        return None if a == b else f"{a} != {b}"

    return [
        check("stats mean = n/2", ns, mean_probe),
        check("stats variance rec = direct", ns, var_probe),
        check("stats Var(1)=1/4, Var(2)=1/3", [1, 2],
              lambda n: None if variance(n) == {1: Fraction(1, 4), 2: Fraction(1, 3)}[n]
              else str(variance(n))),
    ]
