"""Growing SRDs by one: the lifting operator, dropping the maximum, and the
conjugate-reverse symmetry of the gamma form."""
from srdpoly import Mode, SignedSeq
from srdpoly.lift import conj_reverse, drop_max, lemma_s_check, s_up_list, tilde_partition_check

s = SignedSeq.parse("4' 1 3 2")
print(f"lifts of {s}:")
for image in s_up_list(s):
    print("   ", image)
print("bar generating function matches:", lemma_s_check(s))

for text in ("5' 1 3 4 2", "1' 3 2' 4"):
    s = SignedSeq.parse(text)
    print(f"drop max of {s} -> {drop_max(s)}")

for n in range(2, 6):
    print(f"one-violation class on [{n}] is covered exactly by the lifts: {tilde_partition_check(n)}")

g = SignedSeq.parse("2' 3' 1 0", Mode.GAMMA)
print(f"\nconjugate-reverse of {g} is {conj_reverse(g)}")
