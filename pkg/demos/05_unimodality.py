"""Rows rise to the middle and fall again; two small injections explain the
first steps of the rise."""
from srdpoly import SignedSeq
from srdpoly.recur import coeff_q
from srdpoly.unimodal import delta_P, inj_one_to_two, inj_zero_to_one, is_unimodal, one_to_two_case

for n in (4, 9, 20):
    row = [coeff_q(n, m) for m in range(n + 1)]
    v = is_unimodal(row)
    print(f"n={n}: unimodal={v.unimodal}, mode at m={v.mode_index}, "
          f"first differences {[delta_P(n, m) for m in range(3)]}")

print()
s = SignedSeq.parse("4 1 3 2")
print(f"no bars -> one bar:   {s}  ->  {inj_zero_to_one(s)}")
for text in ("2' 1 4 3", "1 3' 2 4", "1 3' 4 2", "4' 1 3 2", "1 3 4' 2"):
    s = SignedSeq.parse(text)
    print(f"one bar -> two bars:  {s}  ->  {inj_one_to_two(s)}   (case {one_to_two_case(s)})")
