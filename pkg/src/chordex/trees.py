"""Even increasing trees and their staircase 0-1 Young diagrams.

A tree of order ``N`` lives on ``0..N-1`` with root 0 and ``parent[k] < k``;
it is *even* when every non-root vertex has even outdegree. Such trees of
order ``N`` match the admissible all-even fillings of the staircase
``(N-2, ..., 1)``: an edge ``i -> j`` with ``i >= 1`` puts a 1 in row ``i``,
column ``N - j``. Edges out of the root leave no trace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .young import EpsVector, Filling, Shape, enumerate_fillings


@dataclass(frozen=True)
class IncreasingTree:
    """``parent[k-1]`` is the parent of vertex ``k`` for ``k = 1..order-1``."""

    parent: tuple[int, ...]

    def __init__(self, parent: Sequence[int]):
        parent = tuple(int(p) for p in parent)
        for k, p in enumerate(parent, start=1):
            if not 0 <= p < k:
                raise ValueError(f"vertex {k} has parent {p}; need 0 <= parent < {k}")
        object.__setattr__(self, "parent", parent)

    @property
    def order(self) -> int:
        return len(self.parent) + 1

    def edges(self) -> list[tuple[int, int]]:
        return [(p, k) for k, p in enumerate(self.parent, start=1)]

    def outdegrees(self) -> list[int]:
        deg = [0] * self.order
        for p in self.parent:
            deg[p] += 1
        return deg

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.outdegrees()[1:])

    def to_json(self) -> dict:
        return {"order": self.order, "parent": [None, *self.parent]}


def enumerate_even_trees(order: int) -> list[IncreasingTree]:
    """All even increasing trees of the given order, lexicographic in the
    parent vector."""
    if order < 1:
        raise ValueError("order must be at least 1")
    found: list[IncreasingTree] = []
    deg = [0] * order

    def grow(k: int, parents: list[int]) -> None:
        if k == order:
            if all(d % 2 == 0 for d in deg[1:]):
                found.append(IncreasingTree(parents))
            return
        # Vertices below k that still need a child can only get one from k..order-1.
        odd = sum(1 for v in range(1, k) if deg[v] % 2)
        if odd > order - k:
            return
        for p in range(k):
            deg[p] += 1
            parents.append(p)
            grow(k + 1, parents)
            parents.pop()
            deg[p] -= 1

    grow(1, [])
    return found


def _staircase(order: int) -> Shape:
    if order < 3:
        raise ValueError("the staircase correspondence needs order >= 3")
    return Shape.staircase(order - 2)


def phi(t: IncreasingTree) -> Filling:
    shape = _staircase(t.order)
    rows = [[0] * a for a in shape]
    for i, j in t.edges():
        if i >= 1:
            rows[i - 1][t.order - j - 1] = 1
    return Filling(shape, tuple(map(tuple, rows)))


def phi_inv(f: Filling) -> IncreasingTree:
    n = len(f.shape)
    if f.shape != Shape.staircase(n):
        raise ValueError(f"expected a staircase shape, got {f.shape}")
    if not f.satisfies(EpsVector((0,) * n)):
        raise ValueError("filling violates the column or even-row condition")
    order = n + 2
    parent = [0] * (order - 1)
    for col in range(1, n + 1):
        j = order - col
        for i, v in enumerate(f.column(col), start=1):
            if v:
                parent[j - 1] = i
    return IncreasingTree(parent)


def staircase_fillings(n: int) -> list[Filling]:
    """Admissible fillings of ``(n, ..., 1)`` with every row even."""
    return enumerate_fillings(Shape.staircase(n), EpsVector((0,) * n))


def iter_map(order: int) -> Iterator[tuple[IncreasingTree, Filling]]:
    for t in enumerate_even_trees(order):
        yield t, phi(t)


def map_json(order: int) -> str:
    return json.dumps([{"tree": t.to_json(), "filling": f.to_json()} for t, f in iter_map(order)])
