"""Listing signed relative derangements directly and comparing the counts
with the recursion."""
import time

from srdpoly import SeqClass, SignedSeq, brute_poly, classify, poly_Q_B
from srdpoly.enumeration import iter_codes

print("All SRDs on [3] with exactly one bar:")
for codes in iter_codes(3, cls=SeqClass.SRD_CLASSICAL):
    s = SignedSeq.from_codes(codes)
    if sum(e.barred for e in s.entries) == 1:
        print("   ", s)

s = SignedSeq.parse("1' 3 2' 4")
print(f"\n{s} is an SRD: {classify(s, SeqClass.SRD_CLASSICAL)}")
s = SignedSeq.parse("2' 1' 3")
print(f"{s} is an SRD: {classify(s, SeqClass.SRD_CLASSICAL)}  (1' 2' would be forbidden, 2' 1' is fine)")

for n in range(1, 8):
    start = time.perf_counter()
    brute = brute_poly(n, SeqClass.SRD_CLASSICAL)
    took = time.perf_counter() - start
    verdict = "agree" if brute == poly_Q_B(n) else "DISAGREE"
    print(f"n={n}: {brute(1):>8} sequences, oracle and recursion {verdict} ({took:.2f}s)")
