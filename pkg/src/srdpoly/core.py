"""Shared data model: signed sequences, integer polynomials, coefficient tables
and truncated bivariate series.

Everything here is an immutable value. Arithmetic is exact (Python ints and
:class:`fractions.Fraction`), there is no floating point anywhere.

Signed entries have a compact integer *code* used by the fast enumeration
paths: an unbarred value ``v`` is coded as ``v`` and a barred value as ``~v``
(that is ``-v - 1``). The code of an entry coincides with the left entry of
its ordered pair in the Gamma encoding, which makes the Gamma adjacency rule
a one-liner (see :func:`srdpoly.enumeration.gamma_bad`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class Mode(str, enum.Enum):
    CLASSICAL = "classical"
    GAMMA = "gamma"


@dataclass(frozen=True, order=True)
class Element:
    value: int
    barred: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"negative element value {self.value}")

    @property
    def code(self) -> int:
        return ~self.value if self.barred else self.value

    @classmethod
    def from_code(cls, code: int) -> "Element":
        return cls(~code, True) if code < 0 else cls(code, False)

    def __str__(self):
        return f"{self.value}'" if self.barred else str(self.value)


@dataclass(frozen=True)
class SignedSeq:
    """An arrangement of ``1..n`` (classical) or ``0..n`` (gamma), each entry
    optionally barred.

    Text form writes a bar as a trailing apostrophe: ``SignedSeq.parse("1' 3 2' 4")``.
    """

    entries: tuple[Element, ...]
    mode: Mode = Mode.CLASSICAL

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "mode", Mode(self.mode))
        low = 1 if self.mode is Mode.CLASSICAL else 0
        values = sorted(e.value for e in self.entries)
        if values != list(range(low, low + len(values))):
            raise ValueError(
                f"{self.mode.value} sequence must use each of "
                f"{low}..{low + len(values) - 1} exactly once, got {values}")

    @property
    def ground(self) -> int:
        """The ``n`` of ``[n]`` (classical) or ``{0..n}`` (gamma)."""
        return len(self.entries) if self.mode is Mode.CLASSICAL else len(self.entries) - 1

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(e.code for e in self.entries)

    @classmethod
    def from_codes(cls, codes: Iterable[int], mode: Mode | str = Mode.CLASSICAL) -> "SignedSeq":
        return cls(tuple(Element.from_code(c) for c in codes), Mode(mode))

    @classmethod
    def parse(cls, text: str, mode: Mode | str = Mode.CLASSICAL) -> "SignedSeq":
        entries = []
        for tok in text.split():
            barred = tok.endswith("'")
            entries.append(Element(int(tok.rstrip("'")), barred))
        return cls(tuple(entries), Mode(mode))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return " ".join(map(str, self.entries))


class IntPoly:
    """Dense polynomial in ``t`` with integer coefficients, lowest degree first.

    The zero polynomial has no stored coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPoly":
        return cls([0] * k + [a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> int:
        """Coefficient of ``t**m``; zero outside the stored range."""
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, IntPoly) else -int(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``t**k``."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def derivative(self) -> "IntPoly":
        return IntPoly(m * a for m, a in enumerate(self.coeffs) if m)

    def __call__(self, t0):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t0 + a
        return acc

    def is_palindromic(self, n: int | None = None) -> bool:
        """True when the coefficient row ``0..n`` reads the same both ways."""
        n = self.degree if n is None else n
        return all(self[m] == self[n - m] for m in range(n + 1))

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for m in range(self.degree, -1, -1):
            a = self.coeffs[m]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if m == 0:
                body = str(mag)
            else:
                power = "t" if m == 1 else f"t^{m}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = IntPoly([0, 1])


def poly_derivative(p: IntPoly) -> IntPoly:
    return p.derivative()


def poly_eval_int(p: IntPoly, t0: int) -> int:
    return p(int(t0))


@dataclass(frozen=True)
class QTable:
    """Rows ``q[n][m]`` for ``n = 0..N``. Row 0 is empty because ``Q_0 = 0``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nm):
        n, m = nm
        row = self.rows[n]
        return row[m] if 0 <= m < len(row) else 0

    def row_sum(self, n: int) -> int:
        return sum(self.rows[n])

    def is_symmetric(self) -> bool:
        return all(self[n, m] == self[n, n - m]
                   for n in range(1, len(self.rows)) for m in range(n + 1))


class TruncSeries:
    """``sum_{n<=N} P_n(t) x**n`` with every coefficient an :class:`IntPoly`."""

    __slots__ = ("coeff_of_x",)

    def __init__(self, coeff_of_x: Sequence[IntPoly]):
        object.__setattr__(self, "coeff_of_x", tuple(
            c if isinstance(c, IntPoly) else IntPoly(c) for c in coeff_of_x))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeff_of_x) - 1

    def __getitem__(self, n: int) -> IntPoly:
        return self.coeff_of_x[n] if 0 <= n < len(self.coeff_of_x) else IntPoly()

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.coeff_of_x == other.coeff_of_x

    def __hash__(self):
        return hash(self.coeff_of_x)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self[k] + other[k] for k in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self[k] - other[k] for k in range(n + 1)])

    def scale(self, poly_in_x: Sequence[IntPoly | int]) -> "TruncSeries":
        """Multiply by the polynomial ``sum_k poly_in_x[k] x**k``, keeping the order."""
        factors = [c if isinstance(c, IntPoly) else IntPoly([c]) for c in poly_in_x]
        out = []
        for n in range(self.order + 1):
            acc = IntPoly()
            for k, c in enumerate(factors[: n + 1]):
                if c.coeffs:
                    acc = acc + c * self[n - k]
            out.append(acc)
        return TruncSeries(out)

    def d_dx(self) -> "TruncSeries":
        # the top coefficient of the derivative would need P_{N+1}; order drops by one
        return TruncSeries([self[n + 1] * (n + 1) for n in range(self.order)])

    def d_dt(self) -> "TruncSeries":
        return TruncSeries([c.derivative() for c in self.coeff_of_x])

    def evaluate(self, x0, t0):
        acc = 0
        for c in reversed(self.coeff_of_x):
            acc = acc * x0 + c(t0)
        return acc

    def __repr__(self):
        return f"TruncSeries({[list(c.coeffs) for c in self.coeff_of_x]})"
