"""Strict-shape 0-1 Young diagrams.

Boxes are addressed ``(row i, column j)``, both 1-based, with row ``i``
holding ``a_i`` boxes in columns ``1..a_i``. A filling is admissible for a
parity vector ``eps`` when every column holds at most one 1 and row ``i``
holds ``eps_i`` ones modulo 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, Mapping


def _parse_ints(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"expected comma separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"expected comma separated integers, got {text!r}") from None


@dataclass(frozen=True)
class Shape:
    """Strictly decreasing row lengths ``a_1 > a_2 > ... > a_m >= 1``."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a shape needs at least one row")
        if rows[-1] < 1:
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a <= b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"shape must be strictly decreasing: {rows}")

    @classmethod
    def parse(cls, text: str) -> "Shape":
        return cls(_parse_ints(text))

    @classmethod
    def staircase(cls, n: int) -> "Shape":
        return cls(tuple(range(n, 0, -1)))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    @property
    def width(self) -> int:
        return self.rows[0]

    def column_lengths(self) -> list[int]:
        return [sum(1 for a in self.rows if a >= j) for j in range(1, self.width + 1)]

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))


@dataclass(frozen=True)
class EpsVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        object.__setattr__(self, "bits", bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"parity entries must be 0 or 1: {bits}")

    @classmethod
    def parse(cls, text: str) -> "EpsVector":
        return cls(_parse_ints(text))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.bits))


def as_shape(s) -> Shape:
    return s if isinstance(s, Shape) else Shape(tuple(s))


def as_eps(e) -> EpsVector:
    return e if isinstance(e, EpsVector) else EpsVector(tuple(e))


def check_pair(s, e) -> tuple[Shape, EpsVector]:
    s, e = as_shape(s), as_eps(e)
    if len(s) != len(e):
        raise ValueError(f"shape has {len(s)} rows but parity vector has {len(e)} entries")
    return s, e


@dataclass(frozen=True)
class Filling:
    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = as_shape(self.shape)
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)
        if len(rows) != len(shape):
            raise ValueError("filling row count does not match shape")
        for a, r in zip(shape, rows):
            if len(r) != a:
                raise ValueError(f"row of length {len(r)} where shape needs {a}")
            if any(v not in (0, 1) for v in r):
                raise ValueError("filling values must be 0 or 1")

    @classmethod
    def zeros(cls, shape) -> "Filling":
        shape = as_shape(shape)
        return cls(shape, tuple((0,) * a for a in shape))

    def value(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - 1]

    def ones(self) -> int:
        return sum(map(sum, self.rows))

    def column(self, col: int) -> list[int]:
        return [r[col - 1] for r in self.rows if len(r) >= col]

    def satisfies(self, e) -> bool:
        """Column condition plus row parities given by ``e``."""
        e = as_eps(e)
        if len(e) != len(self.shape):
            raise ValueError("parity vector length does not match shape")
        if any(sum(self.column(j)) > 1 for j in range(1, self.shape.width + 1)):
            return False
        return all(sum(r) % 2 == b for r, b in zip(self.rows, e))

    def to_json(self) -> dict:
        return {"shape": list(self.shape.rows), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Filling":
        try:
            return cls(Shape(tuple(obj["shape"])), tuple(tuple(r) for r in obj["rows"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"filling JSON needs shape and rows: {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "Filling":
        return cls.from_json(json.loads(text))


def column_fillings(s) -> Iterator[Filling]:
    """Every filling with at most one 1 per column, whatever the row parities."""
    # Each column holds no 1 (choice 0) or a single 1 in one of its rows.
    s = as_shape(s)
    lengths = s.column_lengths()
    for choice in product(*(range(c + 1) for c in lengths)):
        rows = [[0] * a for a in s]
        for j, r in enumerate(choice):
            if r:
                rows[r - 1][j] = 1
        yield Filling(s, tuple(map(tuple, rows)))


def enumerate_fillings(s, e) -> list[Filling]:
    """All admissible fillings, by exhaustive search over column choices.

    Ordered by the column choice vector (column 1 varies slowest, "no 1"
    first), which is deterministic. Meant for small shapes only.
    """
    s, e = check_pair(s, e)
    return [f for f in column_fillings(s) if all(sum(r) % 2 == b for r, b in zip(f.rows, e))]


def g_distribution(s, e) -> list[int]:
    """``[g(s, e, k) for k in 0..a_1]`` by dynamic programming over columns.

    State: bitmask of row parities and the number of ones placed so far.
    Columns are processed right to left.
    """
    s, e = check_pair(s, e)
    states: dict[tuple[int, int], int] = {(0, 0): 1}
    for c in reversed(s.column_lengths()):
        nxt: dict[tuple[int, int], int] = {}
        for (mask, ones), cnt in states.items():
            nxt[(mask, ones)] = nxt.get((mask, ones), 0) + cnt
            for i in range(c):
                key = (mask ^ (1 << i), ones + 1)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    target = sum(b << i for i, b in enumerate(e))
    dist = [0] * (s.width + 1)
    for (mask, ones), cnt in states.items():
        if mask == target:
            dist[ones] += cnt
    return dist


def g_count(s, e, k: int) -> int:
    """Number of admissible fillings of shape ``s`` with exactly ``k`` ones."""
    dist = g_distribution(s, e)
    return dist[k] if 0 <= k < len(dist) else 0


def cor6_rhs(s) -> int:
    """prod_i (i+1)^(a_i - a_{i+1}) with a_{m+1} = 0."""
    rows = as_shape(s).rows + (0,)
    return prod((i + 2) ** (rows[i] - rows[i + 1]) for i in range(len(rows) - 1))


def strict_shapes(max_a1: int) -> Iterable[Shape]:
    """Every strict shape with ``a_1 <= max_a1``, smallest first."""
    for top in range(1, max_a1 + 1):
        below = list(range(top - 1, 0, -1))
        for mask in range(1 << len(below)):
            yield Shape((top,) + tuple(v for i, v in enumerate(below) if mask >> i & 1))


def eps_vectors(m: int) -> Iterable[EpsVector]:
    for bits in product((0, 1), repeat=m):
        yield EpsVector(bits)
