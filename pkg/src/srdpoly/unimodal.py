"""Unimodality of coefficient rows and the two bar-adding injections used to
show the first rises ``q_{n,0} <= q_{n,1} <= q_{n,2}``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Element, Mode, SignedSeq
from .enumeration import SeqClass, bar_count, classify, collect
from .recur import IdentityReport, check, coeff_q


@dataclass(frozen=True)
class UnimodalVerdict:
    unimodal: bool
    mode_index: int | None = None
    first_violation: tuple[int, int] | None = None


def is_unimodal(seq: Sequence[int]) -> UnimodalVerdict:
    """Weakly up to a peak, weakly down after it.

    On failure ``first_violation`` is the first rising pair ``(i, i+1)`` met
    after a strict descent. The mode is the first index holding the maximum.
    """
    seq = list(seq)
    if not seq:
        raise ValueError("unimodality of an empty sequence is undefined")
    descending = False
    for i in range(len(seq) - 1):
        if seq[i + 1] < seq[i]:
            descending = True
        elif seq[i + 1] > seq[i] and descending:
            return UnimodalVerdict(False, None, (i, i + 1))
    return UnimodalVerdict(True, seq.index(max(seq)), None)


def delta_P(n: int, m: int) -> int:
    """``q_{n,m} - q_{n,m-1}`` with the zero convention for negative ``m``."""
    return coeff_q(n, m) - coeff_q(n, m - 1)


def _barred(s: SignedSeq, *values: int, unbar: tuple[int, ...] = ()) -> SignedSeq:
    entries = []
    for e in s.entries:
        if e.value in values:
            e = Element(e.value, True)
        elif e.value in unbar:
            e = Element(e.value, False)
        entries.append(e)
    return SignedSeq(tuple(entries))


def _followed_by(s: SignedSeq, a: Element, b: Element) -> bool:
    return any(x == a and y == b for x, y in zip(s.entries, s.entries[1:]))


def inj_zero_to_one(s: SignedSeq) -> SignedSeq:
    """Bar the largest entry of an unsigned relative derangement."""
    if s.mode is not Mode.CLASSICAL or not classify(s, SeqClass.RELATIVE_DERANGEMENT):
        raise ValueError(f"expected an unsigned relative derangement, got {s}")
    return _barred(s, s.ground)


def one_to_two_case(s: SignedSeq) -> str:
    """Which branch of :func:`inj_one_to_two` applies: ``1``, ``2a``, ``2b``, ``3a`` or ``3b``."""
    n = s.ground
    if n < 4 or s.mode is not Mode.CLASSICAL or bar_count(s) != 1 \
            or not classify(s, SeqClass.SRD_CLASSICAL):
        raise ValueError(f"expected an SRD on [n], n >= 4, with exactly one bar, got {s}")
    # only one barred entry, so "largest" is just its value
    top = next(e.value for e in s.entries if e.barred)
    if top < n - 1:
        return "1"
    if top == n - 1:
        return "2b" if _followed_by(s, Element(n - 1, True), Element(n)) else "2a"
    return "3b" if _followed_by(s, Element(n - 1), Element(n, True)) else "3a"


def inj_one_to_two(s: SignedSeq) -> SignedSeq:
    """Add one bar to a one-bar SRD so that distinct inputs stay distinct.

    1.  bar below ``n-1``: bar ``n``.
    2.  ``n-1`` barred: bar ``n``, unless ``n-1`` (barred) is directly followed
        by ``n``, then bar ``1``.
    3.  ``n`` barred: if ``n-1`` is not directly followed by it, move the bar
        from ``n`` to ``n-1`` and also bar ``1``; otherwise just bar ``1``.
    """
    case = one_to_two_case(s)
    n = s.ground
    if case in ("1", "2a"):
        return _barred(s, n)
    if case in ("2b", "3b"):
        return _barred(s, 1)
    return _barred(s, n - 1, 1, unbar=(n,))


def check_inj_zero_to_one(n: int) -> str | None:
    """Exhaustive check on ``[n]``; ``None`` when injective and well-defined."""
    seen: dict[SignedSeq, SignedSeq] = {}
    for codes in collect(n, SeqClass.RELATIVE_DERANGEMENT):
        s = SignedSeq.from_codes(codes)
        out = inj_zero_to_one(s)
        if bar_count(out) != 1 or not classify(out, SeqClass.SRD_CLASSICAL):
            return f"{s} -> {out} is not a one-bar SRD"
        if out in seen:
            return f"{seen[out]} and {s} both map to {out}"
        seen[out] = s
    return None


def check_inj_one_to_two(n: int) -> str | None:
    by_case: dict[str, set[SignedSeq]] = {}
    seen: dict[SignedSeq, SignedSeq] = {}
    for codes in collect(n, SeqClass.SRD_CLASSICAL, bars=1):
        s = SignedSeq.from_codes(codes)
        out = inj_one_to_two(s)
        if bar_count(out) != 2 or not classify(out, SeqClass.SRD_CLASSICAL):
            return f"{s} -> {out} is not a two-bar SRD"
        if out in seen:
            return f"{seen[out]} and {s} both map to {out}"
        seen[out] = s
        by_case.setdefault(one_to_two_case(s), set()).add(out)
    cases = sorted(by_case)
    for i, a in enumerate(cases):
        for b in cases[i + 1:]:
            if by_case[a] & by_case[b]:
                return f"cases {a} and {b} share an image"
    return None


def verify_unimodality(n_max: int = 30) -> list[IdentityReport]:
    def row(n):
        return [coeff_q(n, m) for m in range(n + 1)]

    def symmetric(n):
        r = row(n)
        return None if r == r[::-1] else f"row {r} not palindromic"

    def unimodal(n):
        v = is_unimodal(row(n))
        if not v.unimodal:
            return f"violation at {v.first_violation}"
        return None if v.mode_index in (n // 2, (n + 1) // 2) else f"mode {v.mode_index}"

    def rises(n):
        bad = [m for m in range(n // 2 + 1) if delta_P(n, m) < 0]
        return f"delta_P < 0 at m={bad[0]}" if bad else None

    ns = range(1, n_max + 1)
    return [
        check("symmetry q(n,m)=q(n,n-m)", ns, symmetric),
        check("unimodal rows", ns, unimodal),
        check("delta_P >= 0 for m <= n/2", ns, rises),
    ]


def verify_injections(n_max_oracle: int = 8) -> list[IdentityReport]:
    return [
        check("injection 0->1 bars", range(1, n_max_oracle + 1), check_inj_zero_to_one),
        check("injection 1->2 bars", range(4, n_max_oracle + 1), check_inj_one_to_two),
    ]
