"""The chord diagrams E(a, eps) and their refined expansion counts.

For a strict shape ``a = (a_1, ..., a_m)`` with ``n = a_1`` the vertices
``x_1..x_m, z_1..z_n, y_n..y_1`` are placed anticlockwise and labeled
``1..m+2n``:

    x_i -> i,    z_j -> m + j,    y_j -> m + 2n + 1 - j.

Row ``i`` contributes the chord ``x_i y_{a_i}`` (eps_i = 0) or
``x_i z_{a_i}`` (eps_i = 1); every column ``j`` not among the ``a_i``
contributes ``y_j z_j``. The ``m`` vertices left unmatched stay in place.
"""

from __future__ import annotations

from functools import lru_cache

from .chord import ChordDiagram, ClassLabel, ncd
from .young import EpsVector, Shape, check_pair

SIDES = ("Y", "XZ")


def _layout(m: int, n: int) -> dict:
    return {
        "X": lambda i: i,
        "Z": lambda j: m + j,
        "Y": lambda j: m + 2 * n + 1 - j,
    }


def build_E(s, e) -> ChordDiagram:
    """The classified chord diagram E(s, e)."""
    s, e = check_pair(s, e)
    m, n = len(s), s.width
    pos = _layout(m, n)
    chords = []
    for i, (a, eps) in enumerate(zip(s, e), start=1):
        chords.append((pos["X"](i), pos["Z" if eps else "Y"](a)))
    rows = set(s)
    chords += [(pos["Y"](j), pos["Z"](j)) for j in range(1, n + 1) if j not in rows]
    classes = {pos["X"](i): ClassLabel("X", i) for i in range(1, m + 1)}
    classes.update({pos["Z"](j): ClassLabel("Z", j) for j in range(1, n + 1)})
    classes.update({pos["Y"](j): ClassLabel("Y", j) for j in range(1, n + 1)})
    return ChordDiagram(m + 2 * n, chords, classes)


def build_crossing(n: int) -> ChordDiagram:
    """n mutually crossing chords, realized as E((n, ..., 1), (0^n))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return build_E(Shape.staircase(n), EpsVector((0,) * n))


def build_bipartite_crossing(m: int, n: int) -> ChordDiagram:
    """m parallel chords each crossing n parallel chords: E((n+m, ..., n+1), (1^m))."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return build_E(Shape(tuple(range(n + m, n, -1))), EpsVector((1,) * m))


def build_Enk(n: int, k: int) -> ChordDiagram:
    """An n-crossing plus one chord crossing exactly k of its chords."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    return build_E(Shape.staircase(n + 1), EpsVector((0,) * (n - k) + (1,) + (0,) * k))


def join_pair(m: int, n: int) -> tuple[ChordDiagram, ChordDiagram]:
    """Two realizations whose intersection graph is the join of K_m with n
    independent vertices."""
    first = build_E(Shape(tuple(range(n + m, n, -1))), EpsVector((0,) * m))
    second = build_E(Shape.staircase(n + m), EpsVector((1,) * n + (0,) * m))
    return first, second


def enk_alternative(n: int, k: int) -> ChordDiagram:
    """E_{n,k} realized as E((n+1, ..., n-k+2, n-k, ..., 1), (0^n))."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    rows = tuple(v for v in range(n + 1, 0, -1) if v != n - k + 1)
    return build_E(Shape(rows), EpsVector((0,) * n))


def e_count(d: ChordDiagram, side: str) -> int:
    """Chords with both ends in Y (``side="Y"``) or both in X u Z (``"XZ"``)."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    classes = d.classes
    if classes is None:
        raise ValueError("e_count needs a diagram with class labels")
    wanted = {"Y"} if side == "Y" else {"X", "Z"}
    total = 0
    for a, b in d.chords:
        la, lb = classes[a].kind, classes[b].kind
        if la in wanted and lb in wanted:
            total += 1
    return total


def f_distribution(s, e) -> list[int]:
    """``[f(s, e, k) for k in 0..a_1]`` read off the expansion multiset."""
    s, e = check_pair(s, e)
    dist = [0] * (s.width + 1)
    for leaf, mult in ncd(build_E(s, e)).items():
        k = e_count(leaf, "Y") + e_count(leaf, "XZ")
        dist[k] += mult
    return dist


def f_count(s, e, k: int) -> int:
    """Leaves F of NCD(E(s, e)), with multiplicity, having e_F(Y) + e_F(X u Z) = k.

    ``k`` outside ``0..a_1`` gives 0.
    """
    dist = f_distribution(s, e)
    return dist[k] if 0 <= k < len(dist) else 0


@lru_cache(maxsize=None)
def _f_rec(a: tuple[int, ...], e: tuple[int, ...], k: int) -> int:
    if k < 0:
        return 0
    if a == (1,):
        return int(k == e[0])
    if a[-1] == 1:
        if e[-1] == 0:
            # x_m y_1 can be swapped for y_1 z_1: same diagram for one row less.
            return _f_rec(a[:-1], e[:-1], k)
        # x_m z_1 is isolated and lies in X u Z.
        return _f_rec(tuple(v - 1 for v in a[:-1]), e[:-1], k - 1)
    shrunk = a[:-1] + (a[-1] - 1,)
    lowered = tuple(v - 1 for v in a)
    flipped = e[:-1] + (1 - e[-1],)
    return _f_rec(shrunk, e, k) + _f_rec(lowered, flipped, k - 1)


def f_fast(s, e, k: int) -> int:
    """f(s, e, k) from the case recurrence on the last row, without expanding."""
    s, e = check_pair(s, e)
    if k < 0 or k > s.width:
        return 0
    return _f_rec(s.rows, e.bits, k)
