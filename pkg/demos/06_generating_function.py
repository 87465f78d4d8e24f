"""The truncated bivariate series F(x, t) and its differential equation."""
from fractions import Fraction

from srdpoly.series import build_series, functional_identity_residual, verify_series

F = build_series(8)
for n in range(1, 5):
    print(f"[x^{n}] F = {F[n]}")

residual = functional_identity_residual(20)
print("\nresidual through x^20 is zero:", all(r.degree < 0 for r in residual))
print("F(1/10, 1) truncated:", float(F.evaluate(Fraction(1, 10), 1)))
for report in verify_series(20):
    print(report.line())
