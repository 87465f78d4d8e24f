"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

The lines appear in the pytest terminal summary, or run this file
directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time

import pytest

import srdpoly.recur as recur
from srdpoly.enumeration import SeqClass, _brute_counts, brute_poly
from srdpoly.lift import verify_lemmas
from srdpoly.series import verify_series
from srdpoly.stats import verify_stats
from srdpoly.unimodal import verify_injections, verify_unimodality

LINES: list[str] = []  # echoed in the pytest terminal summary

GOLDEN = {
    1: [1, 1],
    2: [1, 4, 1],
    3: [3, 14, 14, 3],
    4: [11, 64, 112, 64, 11],
    5: [53, 362, 866, 866, 362, 53],
    6: [309, 2428, 7252, 10300, 7252, 2428, 309],
    7: [2119, 18806, 66854, 121838, 121838, 66854, 18806, 2119],
    8: [16687, 165016, 677656, 1497880, 1937368, 1497880, 677656, 165016, 16687],
    9: [148329, 1616786, 7513658, 19444106, 30752450, 30752450, 19444106, 7513658, 1616786,
        148329],
}


def _report(number: int, title: str, ok: bool, elapsed: float, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s)"
    if detail:
        line += f"  {detail}"
    LINES.append(line)
    print(line)


def _failures(reports) -> str:
    return "; ".join(f"{r.identity}: {r.counterexample}" for r in reports if not r.passed)


def criterion_1() -> tuple[bool, float, str]:
    del recur._Q_CACHE[3:]  # cold start
    start = time.perf_counter()
    got = {n: list(recur.poly_Q_B(n).coeffs) for n in GOLDEN}
    elapsed = time.perf_counter() - start
    bad = [n for n in GOLDEN if got[n] != GOLDEN[n]]
    ok = not bad and elapsed < 1.0
    return ok, elapsed, f"mismatch at n={bad}" if bad else ""


def criterion_2() -> tuple[bool, float, str]:
    start = time.perf_counter()
    bad = [n for n in range(1, 8)
           if brute_poly(n, SeqClass.SRD_CLASSICAL) != recur.poly_Q_B(n)]
    # time n = 8 on its own, bypassing any cached result
    t8 = time.perf_counter()
    counts = _brute_counts.__wrapped__(8, SeqClass.SRD_CLASSICAL, True)
    t8 = time.perf_counter() - t8
    if counts != recur.poly_Q_B(8).coeffs:
        bad.append(8)
    elapsed = time.perf_counter() - start
    ok = not bad and t8 <= 120.0
    return ok, elapsed, f"n=8 pass {t8:.1f}s" + (f", mismatch at n={bad}" if bad else "")


def criterion_3() -> tuple[bool, float, str]:
    start = time.perf_counter()
    reports = recur.verify_identities(n_max_rec=30, n_max_oracle=8, n_max_f_oracle=7)
    return all(r.passed for r in reports), time.perf_counter() - start, _failures(reports)


def criterion_4() -> tuple[bool, float, str]:
    start = time.perf_counter()
    reports = verify_lemmas(8)
    return all(r.passed for r in reports), time.perf_counter() - start, _failures(reports)


def criterion_5() -> tuple[bool, float, str]:
    start = time.perf_counter()
    bad = [n for n in range(0, 9)
           if recur.qbar_row(n) != brute_poly(n, SeqClass.SRD_CLASSICAL_FIRST_NOT_ONE).coeffs]
    return not bad, time.perf_counter() - start, f"mismatch at n={bad}" if bad else ""


def criterion_6() -> tuple[bool, float, str]:
    start = time.perf_counter()
    reports = verify_stats(30)
    return all(r.passed for r in reports), time.perf_counter() - start, _failures(reports)


def criterion_7() -> tuple[bool, float, str]:
    start = time.perf_counter()
    reports = verify_unimodality(30) + verify_injections(8)
    return all(r.passed for r in reports), time.perf_counter() - start, _failures(reports)


def criterion_8() -> tuple[bool, float, str]:
    start = time.perf_counter()
    reports = verify_series(20)
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports) and elapsed < 5.0
    return ok, elapsed, _failures(reports)


CRITERIA = [
    (1, "golden polynomials n=1..9", criterion_1),
    (2, "oracle equals recursion n=1..8", criterion_2),
    (3, "identity suite (rec n<=30, oracle n<=8)", criterion_3),
    (4, "lemma suite", criterion_4),
    (5, "qbar recursion vs oracle n<=8", criterion_5),
    (6, "mean and variance n<=30", criterion_6),
    (7, "symmetry, unimodality, injections", criterion_7),
    (8, "functional equation and derivatives", criterion_8),
]


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn):
    ok, elapsed, detail = fn()
    _report(number, title, ok, elapsed, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, title, fn in CRITERIA:
        ok, elapsed, detail = fn()
        _report(number, title, ok, elapsed, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
