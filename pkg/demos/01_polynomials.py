"""The bar polynomials Q_n(t) and their coefficient triangle.

Each row is palindromic, and the row sums grow roughly like (2n)!! .
"""
from srdpoly import poly_Q_B, q_table

for n in range(1, 8):
    p = poly_Q_B(n)
    print(f"Q_{n}(t) = {p}")
    print(f"    total {p(1)}, palindromic: {p.is_palindromic(n)}")

print()
table = q_table(10)
for n, row in enumerate(table.rows):
    print(f"{n:2d}: " + " ".join(map(str, row)))
print("symmetric:", table.is_symmetric())

# The recursion gets to large n easily.
big = poly_Q_B(60)
print(f"\nQ_60 has degree {big.degree} and middle coefficient {big[30]}")
