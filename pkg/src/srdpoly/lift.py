"""Structural maps on signed sequences: the lifting map, removal of the
maximum, barred successor and conjugate-reverse, plus exhaustive checks of
the lemmas built on them."""
from __future__ import annotations

from .core import Element, IntPoly, Mode, SignedSeq
from .enumeration import (SeqClass, bar_count, brute_poly, classical_violations,
                          classify, collect, iter_codes, walk)
from .recur import IdentityReport, check, poly_Q_B


def bar_add_one(e: Element) -> Element:
    """Successor that keeps the bar: ``i' + 1 = (i+1)'``."""
    return Element(e.value + 1, e.barred)


def _s_up_codes(codes: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    for i, c in enumerate(codes):
        v = c if c >= 0 else ~c
        # unbarred values above v go up by one, barred ones (code below ~v) down by one
        lifted = [d + 1 if d > v else d - 1 if d < ~v else d for d in codes]
        lifted[i:i + 1] = (c, c + 1 if c >= 0 else c - 1)
        out.append(tuple(lifted))
    return out


def _require_srd(s: SignedSeq) -> None:
    if s.mode is not Mode.CLASSICAL or not classify(s, SeqClass.SRD_CLASSICAL):
        raise ValueError(f"expected a classical signed relative derangement, got {s}")


def s_up_list(s: SignedSeq) -> list[SignedSeq]:
    """Lift at each position in turn: the ``i``-th image has entry ``i``
    replaced by the block ``x, x+1`` and every larger value shifted up."""
    _require_srd(s)
    return [SignedSeq.from_codes(c) for c in _s_up_codes(s.codes)]


def s_up(s: SignedSeq) -> frozenset[SignedSeq]:
    return frozenset(s_up_list(s))


def drop_max(s: SignedSeq) -> SignedSeq:
    """Remove the entry of largest value, barred or not."""
    if s.mode is not Mode.CLASSICAL or s.ground < 1:
        raise ValueError("drop_max needs a nonempty classical sequence")
    n = s.ground
    return SignedSeq(tuple(e for e in s.entries if e.value != n))


def _lemma_s_holds(codes: tuple[int, ...]) -> bool:
    hist = [0] * (len(codes) + 2)
    for img in _s_up_codes(codes):
        hist[sum(1 for c in img if c < 0)] += 1
    b, n = sum(1 for c in codes if c < 0), len(codes)
    return IntPoly(hist) == IntPoly.monomial(b + 1, b) + IntPoly.monomial(b, n - b)


def lemma_s_check(s: SignedSeq) -> bool:
    """Bar-generating function of the lifts of ``s`` against
    ``b t**(b+1) + (n - b) t**b``."""
    _require_srd(s)
    return _lemma_s_holds(s.codes)


def tilde_partition_check(n: int) -> bool:
    """Lifts of distinct SRDs on ``[n-1]`` are disjoint and together give
    exactly the one-violation sequences on ``[n]``."""
    if not 2 <= n <= 8:
        raise ValueError("tilde_partition_check supports 2 <= n <= 8")
    seen: set[tuple[int, ...]] = set()
    total = 0
    for codes in iter_codes(n - 1, Mode.CLASSICAL, SeqClass.SRD_CLASSICAL):
        images = _s_up_codes(codes)
        total += len(images)
        seen.update(images)
    if len(seen) != total:
        return False
    tilde = set(iter_codes(n, Mode.CLASSICAL, SeqClass.TILDE_ONE_VIOLATION))
    return seen == tilde


def drop_max_dichotomy(n: int) -> tuple[bool, SignedSeq | None]:
    """Removing the maximum from any SRD on ``[n]`` leaves either an SRD or a
    one-violation sequence on ``[n-1]``. Returns ``(ok, first counterexample)``."""
    bad: list[tuple[int, ...]] = []

    def visit(prefix, _bars):
        if bad:
            return
        rest = [c for c in prefix if c != n and c != ~n]
        if classical_violations(rest) > 1:
            bad.append(tuple(prefix))

    walk(n, Mode.CLASSICAL, SeqClass.SRD_CLASSICAL, visit)
    return (not bad, SignedSeq.from_codes(bad[0]) if bad else None)


def conj_reverse(s: SignedSeq) -> SignedSeq:
    """Read right to left and flip every bar (gamma sequences only)."""
    if s.mode is not Mode.GAMMA:
        raise ValueError("conjugate-reverse preserves SRDs only in gamma form")
    return SignedSeq(tuple(Element(e.value, not e.barred) for e in reversed(s.entries)),
                     Mode.GAMMA)



def conj_reverse_mismatch(n: int) -> str | None:
    """Closure, involution and bar complement of conjugate-reverse over every
    gamma SRD on ``{0..n}``."""
    for codes in collect(n, SeqClass.SRD_GAMMA, anchored=False):
        s = SignedSeq.from_codes(codes, Mode.GAMMA)
        r = conj_reverse(s)
        if not classify(r, SeqClass.SRD_GAMMA):
            return f"{s} -> {r} is not a gamma SRD"
        if conj_reverse(r) != s:
            return f"{s} is not fixed by applying the map twice"
        if bar_count(r) != n + 1 - bar_count(s):
            return f"{s} has {bar_count(s)} bars but its image has {bar_count(r)}"
    return None


def verify_lemmas(n_max_oracle: int = 8) -> list[IdentityReport]:
    """Exhaustive checks of the removal dichotomy, the lifting polynomial, the
    lifting partition, the gamma reading and conjugate-reverse."""
    O = n_max_oracle
    L = min(O, 7)

    def lemma_s(n):
        for codes in collect(n, SeqClass.SRD_CLASSICAL):
            if not _lemma_s_holds(codes):
                return f"fails for {SignedSeq.from_codes(codes)}"
        return None

    def partition(n):
        if not tilde_partition_check(n):
            return "lifts overlap or miss part of the one-violation class"
        size = brute_poly(n, SeqClass.TILDE_ONE_VIOLATION)(1)
        want = (n - 1) * poly_Q_B(n - 1)(1)
        return None if size == want else f"|tilde| = {size}, expected {want}"

    def dichotomy(n):
        ok, bad = drop_max_dichotomy(n)
        return None if ok else f"removing the maximum of {bad} leaves two violations"

    return [
        check("drop-max dichotomy", range(1, O + 1), dichotomy),
        check("lifting bar polynomial", range(1, L + 1), lemma_s),
        check("lifting partition", range(2, L + 1), partition),
        check("gamma reading = classical", range(1, O + 1),
              lambda n: (None if brute_poly(n - 1, SeqClass.SRD_GAMMA, anchored=False)
                         == brute_poly(n, SeqClass.SRD_CLASSICAL) else "polynomials differ")),
        check("anchored gamma = qbar class", range(0, min(O, 7) + 1),
              lambda n: (None if brute_poly(n, SeqClass.SRD_GAMMA)
                         == brute_poly(n, SeqClass.SRD_CLASSICAL_FIRST_NOT_ONE)
                         else "polynomials differ")),
        check("conj-reverse closure", range(0, min(O, 5) + 1), conj_reverse_mismatch),
    ]
