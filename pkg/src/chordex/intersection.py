"""Intersection graphs and the Tutte polynomial at (2, -1).

Evaluation is plain deletion-contraction on multigraphs. Loops and bridges
are factored out eagerly, components are evaluated separately, and each
connected piece is memoized under a canonical form when one can be computed
cheaply. A piece without a canonical form is simply not memoized, so the
value never depends on the canonicalizer succeeding.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ._memo import Memo
from .chord import ChordDiagram, crossings

Edge = tuple[int, int]

CANON_MAX_VERTICES = 12
CANON_MAX_LEAVES = 720


@dataclass(frozen=True)
class Multigraph:
    """Vertices ``1..num_vertices``; ``edges`` is a sorted tuple of pairs,
    repeated for multiplicity, ``(v, v)`` for a loop."""

    num_vertices: int
    edges: tuple[Edge, ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        normed = []
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge must have two endpoints, got {e!r}")
            u, v = sorted((int(e[0]), int(e[1])))
            if u < 1 or v > num_vertices:
                raise ValueError(f"edge {(u, v)} outside 1..{num_vertices}")
            normed.append((u, v))
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", tuple(sorted(normed)))

    def to_json(self) -> dict:
        return {"num_vertices": self.num_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Multigraph":
        try:
            return cls(obj["num_vertices"], obj["edges"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"multigraph JSON needs num_vertices and edges: {exc}") from None

    @classmethod
    def loads(cls, text: str) -> "Multigraph":
        return cls.from_json(json.loads(text))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def intersection_graph(d: ChordDiagram) -> Multigraph:
    """One vertex per chord (in chord order), one edge per crossing."""
    index = {c: i + 1 for i, c in enumerate(d.chords)}
    return Multigraph(len(d.chords), [(index[a], index[b]) for a, b in crossings(d)])


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, n: int) -> Multigraph:
    return Multigraph(m + n, [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)])


# graph helpers on raw edge lists ------------------------------------------------


def _components(edges: Sequence[Edge]) -> list[list[Edge]]:
    parent: dict[int, int] = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e[0]), []).append(e)
    return list(groups.values())


def _bridges(edges: Sequence[Edge]) -> set[Edge]:
    """Bridges of a loopless multigraph (as edge values; a bridge has multiplicity 1)."""
    mult = Counter(edges)
    adj: dict[int, list[tuple[int, int]]] = {}
    for idx, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append((v, idx))
        adj.setdefault(v, []).append((u, idx))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: set[Edge] = set()
    timer = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, idx in it:
                if idx == via:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, idx, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        e = (min(parent, v), max(parent, v))
                        if mult[e] == 1:
                            found.add(e)
    return found


def _contract(edges: Sequence[Edge], e: Edge, drop_one: bool = True) -> list[Edge]:
    """Merge ``e[1]`` into ``e[0]``; one copy of ``e`` is removed first."""
    keep, gone = e
    out = list(edges)
    if drop_one:
        out.remove(e)
    merged = []
    for u, v in out:
        u = keep if u == gone else u
        v = keep if v == gone else v
        merged.append((u, v) if u <= v else (v, u))
    return merged


# canonical form -----------------------------------------------------------------


def _refine(vertices: list[int], mult: dict[int, Counter], colors: dict[int, int]) -> dict[int, int]:
    ncls = len(set(colors.values()))
    while True:
        sigs = {
            v: (colors[v], tuple(sorted((colors[u], k) for u, k in mult[v].items())))
            for v in vertices
        }
        table = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        colors = {v: table[sigs[v]] for v in vertices}
        if len(table) == ncls:
            return colors
        ncls = len(table)


def canonical_form(edges: Sequence[Edge]) -> tuple | None:
    """Relabeling-invariant encoding of a loopless multigraph without isolated
    vertices, or ``None`` when the search budget is exceeded.

    Colour refinement followed by individualization over the first
    non-singleton cell; the lexicographically least relabeled edge list over
    all search leaves is the form.
    """
    vertices = sorted({v for e in edges for v in e})
    if len(vertices) > CANON_MAX_VERTICES:
        return None
    mult: dict[int, Counter] = {v: Counter() for v in vertices}
    for u, v in edges:
        mult[u][v] += 1
        mult[v][u] += 1
    start = _refine(vertices, mult, {v: sum(mult[v].values()) for v in vertices})

    best = None
    leaves = 0

    def search(colors):
        nonlocal best, leaves
        cells: dict[int, list[int]] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            leaves += 1
            if leaves > CANON_MAX_LEAVES:
                raise _BudgetExceeded
            code = tuple(sorted(tuple(sorted((colors[u], colors[v]))) for u, v in edges))
            if best is None or code < best:
                best = code
            return
        for v in target:
            shifted = {u: 2 * c + (1 if u == v else 0) for u, c in colors.items()}
            search(_refine(vertices, mult, shifted))

    try:
        search(start)
    except _BudgetExceeded:
        return None
    return (len(vertices), best)


class _BudgetExceeded(Exception):
    pass


# Tutte evaluation ---------------------------------------------------------------


def _tutte(edges: list[Edge], x: int, y: int, cache: Memo) -> int:
    loops = sum(1 for u, v in edges if u == v)
    edges = [e for e in edges if e[0] != e[1]]
    value = y ** loops
    if not edges:
        return value
    for comp in _components(edges):
        value *= _tutte_connected(comp, x, y, cache)
        if value == 0:
            return 0
    return value


def _tutte_connected(edges: list[Edge], x: int, y: int, cache: Memo) -> int:
    key = canonical_form(edges)
    if key is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    bridges = _bridges(edges)
    if bridges:
        work = _contract_all(edges, bridges)
        value = x ** len(bridges) * (_tutte(work, x, y, cache) if work else 1)
    else:
        e = min(edges)
        deleted = list(edges)
        deleted.remove(e)
        value = _tutte(deleted, x, y, cache) + _tutte(_contract(edges, e), x, y, cache)
    if key is not None:
        cache.put(key, value, cost=64 + 24 * len(edges))
    return value


def _contract_all(edges: list[Edge], bridges: set[Edge]) -> list[Edge]:
    """Contract every bridge at once; no loops can arise."""
    parent: dict[int, int] = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            v = parent[v]
        return v

    for u, v in bridges:
        ru, rv = find(u), find(v)
        parent[max(ru, rv)] = min(ru, rv)
    out = []
    for u, v in edges:
        if (u, v) in bridges:
            continue
        u, v = find(u), find(v)
        out.append((u, v) if u <= v else (v, u))
    return out


def tutte_2_neg1(g: Multigraph) -> int:
    """T(g; 2, -1) by deletion-contraction."""
    return _tutte(list(g.edges), 2, -1, Memo())


def tutte_eval(g: Multigraph, x: int, y: int) -> int:
    """Integer evaluation of the Tutte polynomial at an arbitrary point.

    Internal helper for cross-checks; the supported entry point is
    :func:`tutte_2_neg1`.
    """
    return _tutte(list(g.edges), x, y, Memo())


def _rank(edges: Iterable[Edge]) -> int:
    parent: dict[int, int] = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    rank = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            rank += 1
    return rank


def tutte_subset_expansion(g: Multigraph, x: int = 2, y: int = -1) -> int:
    """Brute-force oracle: sum over all edge subsets of
    (x-1)^(r(E)-r(A)) * (y-1)^(|A|-r(A)). Exponential in the edge count."""
    edges = list(g.edges)
    full = _rank(edges)
    total = 0
    for mask in range(1 << len(edges)):
        sub = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        r = _rank(sub)
        total += (x - 1) ** (full - r) * (y - 1) ** (len(sub) - r)
    return total
