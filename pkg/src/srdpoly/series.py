"""Truncated generating function ``F(x, t) = sum_n Q_n(t) x**n`` and the
functional equation it satisfies, checked order by order.

The equation is used in its polynomial (cleared-denominator) form

    F = A(x, t) F_x + B(x, t) F_t + t x^2 F + (t + 1) x + 2 t x^2

with ``A = (t+1) x^2 + (3t+1) x^3 + 2t x^4`` and ``B = (t^3-t) x^2 + (2t^3-2t^2) x^3``.
Dividing through by ``B`` would introduce poles at ``t`` in ``{0, 1, -1}``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import IntPoly, TruncSeries
from .recur import IdentityReport, check, poly_Q_B

_A = [IntPoly(), IntPoly(), IntPoly([1, 1]), IntPoly([1, 3]), IntPoly([0, 2])]
_B = [IntPoly(), IntPoly(), IntPoly([0, -1, 0, 1]), IntPoly([0, 0, -2, 2])]
_C = [IntPoly(), IntPoly(), IntPoly([0, 1])]
_FORCING = [IntPoly(), IntPoly([1, 1]), IntPoly([0, 2])]


def build_series(N: int) -> TruncSeries:
    if N < 1:
        raise ValueError("series order must be at least 1")
    F = TruncSeries([poly_Q_B(n) for n in range(N + 1)])
    assert F[0] == IntPoly(), "F(0, t) must vanish"
    return F


def functional_rhs(F: TruncSeries) -> TruncSeries:
    """Right-hand side of the functional equation, to the order of ``F``."""
    N = F.order
    # F_x stops at x^(N-1); its missing top term only meets x^(N+2) and beyond
    Fx = TruncSeries(list(F.d_dx().coeff_of_x) + [IntPoly()])
    rhs = Fx.scale(_A) + F.d_dt().scale(_B) + F.scale(_C)
    forcing = TruncSeries([_FORCING[n] if n < len(_FORCING) else IntPoly() for n in range(N + 1)])
    return rhs + forcing


def functional_identity_residual(N: int, F: TruncSeries | None = None) -> list[IntPoly]:
    """Coefficients of ``x**1 .. x**N`` in ``F - RHS``; all zero when the
    series is right. Pass ``F`` to test a series other than the computed one."""
    F = build_series(N) if F is None else F
    diff = F - functional_rhs(F)
    return [diff[n] for n in range(1, N + 1)]


def forward_difference_derivative(values: Sequence[int | Fraction]) -> Fraction:
    """Derivative at the first node from values on ``x0, x0+1, ..., x0+d``.

    ``p'(x0) = sum_k (-1)**(k+1) Delta^k p(x0) / k`` is exact for any
    polynomial of degree at most ``d``.
    """
    diffs = list(values)
    total = Fraction(0)
    for k in range(1, len(diffs)):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        total += Fraction((-1) ** (k + 1) * diffs[0], k)
    return total


def t_derivative_mismatch(F: TruncSeries, t0: int) -> str | None:
    dF = F.d_dt()
    for n, p in enumerate(F.coeff_of_x):
        samples = [p(t0 + j) for j in range(max(p.degree, 0) + 1)]
        fd = forward_difference_derivative(samples)
        if fd != dF[n](t0):
            return f"x^{n} at t={t0}: finite difference {fd} vs {dF[n](t0)}"
    return None


def x_derivative_mismatch(F: TruncSeries, x0: int, t0: int) -> str | None:
    samples = [F.evaluate(x0 + j, t0) for j in range(F.order + 1)]
    fd = forward_difference_derivative(samples)
    exact = F.d_dx().evaluate(x0, t0)
    return None if fd == exact else f"at x={x0}, t={t0}: finite difference {fd} vs {exact}"


def verify_series(N: int = 20, F: TruncSeries | None = None) -> list[IdentityReport]:
    F = build_series(N) if F is None else F
    residual = functional_identity_residual(F.order, F)
    grid = [(x0, t0) for x0 in (0, 1, 2) for t0 in (0, 1, 2)]
    return [
        check("series functional equation", range(1, F.order + 1),
              lambda n: None if residual[n - 1] == IntPoly() else f"residual {residual[n - 1]}"),
        check("series d/dt vs finite diff", (0, 1, 2), lambda t0: t_derivative_mismatch(F, t0)),
        check("series d/dx vs finite diff (grid)", range(len(grid)),
              lambda i: x_derivative_mismatch(F, *grid[i])),
    ]
