"""Recursive fast paths for the polynomials, coefficient tables and counting
sequences, and the identity suite that checks them against each other and
against the brute-force oracle."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable

from .core import IntPoly, QTable, T
from .enumeration import SeqClass, brute_f, brute_poly

_Q_ANCHORS = [IntPoly(), IntPoly([1, 1]), IntPoly([1, 4, 1])]
_Q_CACHE: list[IntPoly] = list(_Q_ANCHORS)


def poly_Q_B(n: int) -> IntPoly:
    """Bar-tracking polynomial of signed relative derangements on ``[n]``.

    Built from the five-term recursion in ``Q_{n-1}, Q_{n-2}, Q_{n-3}`` and
    the derivatives of the last two. ``Q_0`` is the zero polynomial.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    while len(_Q_CACHE) <= n:
        k = len(_Q_CACHE)
        q1, q2, q3 = _Q_CACHE[k - 1], _Q_CACHE[k - 2], _Q_CACHE[k - 3]
        nxt = (q1 * (k - 1) * IntPoly([1, 1])
               + q2 * IntPoly([k - 2, 3 * k - 5])
               + q2.derivative() * IntPoly([0, -1, 0, 1])
               + q3 * (2 * k - 6) * T
               + q3.derivative() * IntPoly([0, 0, -2, 2]))
        _Q_CACHE.append(nxt)
    return _Q_CACHE[n]


_ROWS: list[tuple[int, ...]] = [a.coeffs for a in _Q_ANCHORS]


def _q(n: int, m: int) -> int:
    if n < 0 or m < 0:
        return 0
    row = _ROWS[n]
    return row[m] if m < len(row) else 0


def _extend_rows(n: int) -> None:
    while len(_ROWS) <= n:
        k = len(_ROWS)
        row = []
        for m in range(k + 1):
            row.append((k - 1) * _q(k - 1, m - 1) + (k - 1) * _q(k - 1, m)
                       + (m - 2) * _q(k - 2, m - 2) + (3 * k - 5) * _q(k - 2, m - 1)
                       + (k - m - 2) * _q(k - 2, m)
                       + (2 * m - 4) * _q(k - 3, m - 2) + (2 * k - 2 * m - 4) * _q(k - 3, m - 1))
        _ROWS.append(tuple(row))


def coeff_q(n: int, m: int) -> int:
    """``q_{n,m}`` from the seven-term coefficient recursion; 0 outside ``0..n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _extend_rows(n)
    return _q(n, m) if m <= n else 0


def q_table(n_max: int) -> QTable:
    _extend_rows(n_max)
    return QTable(_ROWS[: n_max + 1])


def _linear(seeds: dict[int, int], step: Callable[[int, list[int]], int]) -> Callable[[int], int]:
    """Memoized sequence from seed values and ``step(n, values) -> value``."""
    lo = min(seeds)
    vals = [seeds[k] for k in sorted(seeds)]

    def seq(n: int) -> int:
        if n < lo:
            raise ValueError(f"n must be >= {lo}, got {n}")
        while len(vals) <= n - lo:
            vals.append(step(lo + len(vals), vals))
        return vals[n - lo]

    return seq


# values[-1] is the term at n - 1, values[-2] at n - 2, and so on
count_D = _linear({1: 0, 2: 1}, lambda n, v: (n - 1) * (v[-1] + v[-2]))
count_Q = _linear({1: 1, 2: 1}, lambda n, v: (n - 1) * v[-1] + (n - 2) * v[-2])
count_QB = _linear({1: 2, 2: 6}, lambda n, v: (2 * n - 1) * v[-1] + (2 * n - 4) * v[-2])
count_DB = _linear({1: 1, 2: 5}, lambda n, v: (2 * n - 1) * v[-1] + (2 * n - 2) * v[-2])
count_f = _linear({1: 1, 2: 4, 3: 25},
                  lambda n, v: (2 * n - 2) * v[-1] + (4 * n - 3) * v[-2] + (2 * n - 2) * v[-3])

count_D.__doc__ = "Derangements of [n]."
count_Q.__doc__ = "Relative derangements of [n]."
count_QB.__doc__ = "Signed relative derangements of [n]."
count_DB.__doc__ = "Signed derangements of [n]."
count_f.__doc__ = "Anchored gamma SRDs on {0..n} whose last entry is not an unbarred n."


def derangements_closed(n: int) -> int:
    """Inclusion-exclusion count of derangements (independent of the recursion)."""
    return sum((-1) ** k * comb(n, k) * factorial(n - k) for k in range(n + 1))


def signed_derangements_closed(n: int) -> int:
    """Inclusion-exclusion over unbarred fixed points of signed permutations."""
    return sum((-1) ** k * comb(n, k) * 2 ** (n - k) * factorial(n - k) for k in range(n + 1))


# qbar: SRDs whose first entry is not an unbarred 1. Rows 0..2 come from the oracle.
_QBAR_ROWS: list[tuple[int, ...]] = []


def _qb(n: int, m: int) -> int:
    if m < 0 or m > n or n < 0:
        return 0
    row = _QBAR_ROWS[n]
    return row[m] if m < len(row) else 0


def _extend_qbar(n: int) -> None:
    if not _QBAR_ROWS:
        for k in range(3):
            _QBAR_ROWS.append(brute_poly(k, SeqClass.SRD_CLASSICAL_FIRST_NOT_ONE).coeffs)
    while len(_QBAR_ROWS) <= n:
        k = len(_QBAR_ROWS)
        row = []
        for m in range(k + 1):
            row.append((k - 1) * _qb(k - 1, m) + (k - m - 1) * _qb(k - 2, m)
                       + (m - 1) * _qb(k - 2, m - 1) + k * _qb(k - 1, k - m)
                       + (m - 1) * _qb(k - 2, k - m) + (k - m - 1) * _qb(k - 2, k - m - 1))
        _QBAR_ROWS.append(tuple(row))


def qbar(n: int, m: int) -> int:
    """SRDs on ``[n]`` with ``m`` bars and first entry other than an unbarred 1.

    The empty sequence counts once, so ``qbar(0, 0) == 1``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _extend_qbar(n)
    return _qb(n, m)


def qbar_row(n: int) -> tuple[int, ...]:
    return tuple(qbar(n, m) for m in range(n + 1))


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n_range: tuple[int, int]
    passed: bool
    counterexample: str | None = None

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed report must carry a counterexample")

    def line(self) -> str:
        lo, hi = self.n_range
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f"  first counterexample: {self.counterexample}"
        return f"{status}  {self.identity:<28} n={lo}..{hi}{tail}"


def check(identity: str, ns: Iterable[int], probe: Callable[[int], str | None]) -> IdentityReport:
    """Run ``probe(n)`` over ``ns``; ``probe`` returns ``None`` or a mismatch note.

    Exceptions inside a probe are reported as failures, never raised.
    """
    ns = list(ns)
    if not ns:
        return IdentityReport(identity, (0, -1), True)
    for n in ns:
        try:
            note = probe(n)
        except Exception as exc:  # verification reports, it does not abort
            note = f"{type(exc).__name__}: {exc}"
        if note is not None:
            return IdentityReport(identity, (ns[0], ns[-1]), False, f"n={n}: {note}")
    return IdentityReport(identity, (ns[0], ns[-1]), True)


def _eq(lhs, rhs) -> str | None:
    return None if lhs == rhs else f"{lhs} != {rhs}"


def _count(n: int, c: SeqClass) -> int:
    return brute_poly(n, c)(1)


def verify_identities(n_max_rec: int = 30, n_max_oracle: int = 8,
                      n_max_f_oracle: int = 7) -> list[IdentityReport]:
    """Every counting identity, once through the recursions up to
    ``n_max_rec`` and once against brute-force counts up to ``n_max_oracle``."""
    if n_max_oracle > 8:
        raise ValueError("oracle sweeps stop at n = 8")
    R, O = n_max_rec, n_max_oracle
    F = min(n_max_f_oracle, O)
    rng = lambda lo, hi: range(lo, hi + 1)  # noqa: E731
    srd = SeqClass.SRD_CLASSICAL
    first = SeqClass.SRD_CLASSICAL_FIRST_NOT_ONE
    sder = SeqClass.SIGNED_DERANGEMENT

    def reduce_rec(n):
        for m in range(n + 1):
            if coeff_q(n, m) != qbar(n, m) + qbar(n - 1, m):
                return f"m={m}: {coeff_q(n, m)} != {qbar(n, m)} + {qbar(n - 1, m)}"
        return None

    def reduce_oracle(n):
        return _eq(brute_poly(n, srd), brute_poly(n, first) + brute_poly(n - 1, first))

    def f_pair_sum(n):
        return sum(brute_f(n))

    return [
        check("D recursion/rec", rng(3, R),
              lambda n: _eq(derangements_closed(n),
                            (n - 1) * (derangements_closed(n - 1) + derangements_closed(n - 2)))),
        check("D closed form/rec", rng(1, R), lambda n: _eq(count_D(n), derangements_closed(n))),
        check("D/oracle", rng(1, O), lambda n: _eq(count_D(n), _count(n, SeqClass.DERANGEMENT))),
        check("Q=D+D/rec", rng(2, R), lambda n: _eq(count_Q(n), count_D(n) + count_D(n - 1))),
        check("Q/oracle", rng(1, O),
              lambda n: _eq(count_Q(n), _count(n, SeqClass.RELATIVE_DERANGEMENT))),
        check("QB=DB+DB/rec", rng(2, R), lambda n: _eq(count_QB(n), count_DB(n) + count_DB(n - 1))),
        check("QB=DB+DB/oracle", rng(2, O),
              lambda n: _eq(_count(n, srd), _count(n, sder) + _count(n - 1, sder))),
        check("Q at t=0/rec", rng(1, R),
              lambda n: _eq((count_Q(n), count_Q(n)), (coeff_q(n, 0), poly_Q_B(n)(0)))),
        check("Q at t=0/oracle", rng(1, O), lambda n: _eq(brute_poly(n, srd)(0), count_Q(n))),
        check("QB at t=1/rec", rng(1, R), lambda n: _eq(count_QB(n), poly_Q_B(n)(1))),
        check("QB at t=1/oracle", rng(1, O), lambda n: _eq(_count(n, srd), count_QB(n))),
        check("q(n,m) recursion/rec", rng(0, R),
              lambda n: _eq(q_table(n).rows[n], poly_Q_B(n).coeffs)),
        check("q(n,m) recursion/oracle", rng(1, O),
              lambda n: _eq(q_table(n).rows[n], brute_poly(n, srd).coeffs)),
        check("QB via f/rec", rng(3, R),
              lambda n: _eq(count_QB(n), count_f(n) + 2 * count_f(n - 1) + count_f(n - 2))),
        check("QB via f/oracle", rng(3, F),
              lambda n: _eq(_count(n, srd), f_pair_sum(n) + f_pair_sum(n - 1))),
        check("f vs qbar sums/rec", rng(2, R),
              lambda n: _eq(count_f(n) + count_f(n - 1), sum(qbar_row(n)))),
        check("f recursion/oracle", rng(1, F), lambda n: _eq(count_f(n), brute_f(n)[0])),
        check("DB recursion/rec", rng(1, R),
              lambda n: _eq(count_DB(n), signed_derangements_closed(n))),
        check("DB/oracle", rng(1, O), lambda n: _eq(count_DB(n), _count(n, sder))),
        check("dual DB=f+f/rec", rng(2, R), lambda n: _eq(count_DB(n), count_f(n) + count_f(n - 1))),
        check("dual DB=f+f/oracle", rng(2, F),
              lambda n: _eq(_count(n, sder), brute_f(n)[0] + brute_f(n - 1)[0])),
        check("reduce q=qbar+qbar/rec", rng(1, R), reduce_rec),
        check("reduce q=qbar+qbar/oracle", rng(1, O), reduce_oracle),
        check("fhat=f(n-1)/oracle", rng(2, F), lambda n: _eq(brute_f(n)[1], brute_f(n - 1)[0])),
        check("Q polynomial/oracle", rng(1, O), lambda n: _eq(poly_Q_B(n), brute_poly(n, srd))),
        check("qbar recursion/oracle", rng(0, O),
              lambda n: _eq(qbar_row(n), brute_poly(n, first).coeffs)),
    ]
