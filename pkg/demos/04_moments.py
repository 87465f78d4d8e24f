"""Mean and variance of the number of bars, exactly."""
from srdpoly.stats import moments, variance_direct

print(" n   mean    variance                      variance (float)")
for n in range(1, 16):
    r = moments(n)
    assert r.Var == variance_direct(n)
    print(f"{n:2d}  {str(r.E):>5}   {str(r.Var):>28}  {float(r.Var):.6f}")
