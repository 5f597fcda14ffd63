"""Truncated power series in two variables with exact rational coefficients.

A :class:`Series2` of order ``D`` keeps the coefficients of ``x^i y^j`` for
``i + j <= D``; everything above is dropped after each operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping

from .intersection import complete_bipartite, tutte_2_neg1

ELEMENTARY = ("cosh_x", "sinh_x", "cosh_y", "sinh_y")


class Series2:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[tuple[int, int], Fraction | int] | None = None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = Fraction(c)
            if i + j <= order and c:
                self.coeffs[(i, j)] = c

    @classmethod
    def one(cls, order: int) -> "Series2":
        return cls(order, {(0, 0): 1})

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if i + j > self.order:
            raise KeyError(f"x^{i} y^{j} is beyond order {self.order}")
        return self.coeffs.get(ij, Fraction(0))

    def coeff(self, i: int, j: int) -> Fraction:
        return self[i, j]

    def _order_with(self, other: "Series2") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "Series2") -> "Series2":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return Series2(self._order_with(other), out)

    def __sub__(self, other: "Series2") -> "Series2":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return Series2(self._order_with(other), out)

    def __mul__(self, other: "Series2") -> "Series2":
        order = self._order_with(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.coeffs.items():
            for (p, q), b in other.coeffs.items():
                if i + j + p + q <= order:
                    key = (i + p, j + q)
                    out[key] = out.get(key, 0) + a * b
        return Series2(order, out)

    def reciprocal(self) -> "Series2":
        """Solve ``self * r = 1`` coefficient by coefficient, by total degree."""
        a00 = self.coeffs.get((0, 0), 0)
        if not a00:
            raise ZeroDivisionError("series has zero constant term")
        inv = 1 / Fraction(a00)
        r: dict[tuple[int, int], Fraction] = {(0, 0): inv}
        terms = [(k, c) for k, c in self.coeffs.items() if k != (0, 0)]
        for t in range(1, self.order + 1):
            for i in range(t + 1):
                j = t - i
                acc = Fraction(0)
                for (p, q), c in terms:
                    if p <= i and q <= j:
                        acc += c * r.get((i - p, j - q), 0)
                if acc:
                    r[(i, j)] = -inv * acc
        return Series2(self.order, r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Series2(order={self.order}, terms={len(self.coeffs)})"


def elementary(kind: str, order: int) -> Series2:
    """cosh or sinh of ``x`` or ``y``, truncated at total degree ``order``."""
    if kind not in ELEMENTARY:
        raise ValueError(f"kind must be one of {ELEMENTARY}")
    func, var = kind.split("_")
    start = 0 if func == "cosh" else 1
    coeffs = {}
    for d in range(start, order + 1, 2):
        key = (d, 0) if var == "x" else (0, d)
        coeffs[key] = Fraction(1, factorial(d))
    return Series2(order, coeffs)


def mul(a: Series2, b: Series2) -> Series2:
    return a * b


def sub(a: Series2, b: Series2) -> Series2:
    return a - b


def reciprocal(a: Series2) -> Series2:
    return a.reciprocal()


def gf_series(order: int) -> Series2:
    """1 / (cosh x cosh y - sinh x sinh y) to total degree ``order``."""
    cx, sx = elementary("cosh_x", order), elementary("sinh_x", order)
    cy, sy = elementary("cosh_y", order), elementary("sinh_y", order)
    return (cx * cy - sx * sy).reciprocal()


@dataclass(frozen=True)
class GfRow:
    m: int
    n: int
    gf_value: Fraction
    tutte_value: int

    @property
    def equal(self) -> bool:
        return self.gf_value == self.tutte_value

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "gf_value": str(self.gf_value),
            "tutte_value": self.tutte_value,
            "equal": self.equal,
        }


def gf_table(max_m: int, max_n: int) -> list[GfRow]:
    """Side-by-side ``m! n! [x^m y^n]`` of the series and T(K_{m,n}; 2, -1).

    Rows are reported whether or not the two columns agree.
    """
    if max_m < 0 or max_n < 0:
        raise ValueError("bounds must be nonnegative")
    series = gf_series(max_m + max_n)
    rows = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            gf = series[m, n] * factorial(m) * factorial(n)
            rows.append(GfRow(m, n, gf, tutte_2_neg1(complete_bipartite(m, n))))
    return rows


def gf_table_tsv(rows: list[GfRow]) -> str:
    lines = ["m\tn\tgf_value\ttutte_value\tequal"]
    for r in rows:
        lines.append(f"{r.m}\t{r.n}\t{r.gf_value}\t{r.tutte_value}\t{str(r.equal).lower()}")
    return "\n".join(lines) + "\n"
