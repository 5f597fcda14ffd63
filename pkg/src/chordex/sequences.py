"""Euler and Entringer numbers.

A permutation ``p`` is *down-up* when ``p_1 > p_2 < p_3 > p_4 < ...``. The
brute-force counter over permutations is the definition of record; the
triangle constructions below are only faster routes to the same numbers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations


def is_down_up(p) -> bool:
    return all((p[i] > p[i + 1]) == (i % 2 == 0) for i in range(len(p) - 1))


def downup_count(n: int, first_term: int | None = None) -> int:
    """Count down-up permutations of ``[n]``, optionally with ``p_1 = first_term``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if first_term is None:
        return sum(1 for p in permutations(range(1, n + 1)) if is_down_up(p))
    if not 1 <= first_term <= n:
        raise ValueError(f"first_term must lie in 1..{n}, got {first_term}")
    rest = [v for v in range(1, n + 1) if v != first_term]
    return sum(1 for tail in permutations(rest) if is_down_up((first_term,) + tail))


def seidel_triangle(rows: int) -> list[list[int]]:
    """Boustrophedon (Seidel-Entringer) triangle with ``rows`` rows.

    Row ``n`` has ``n + 1`` entries and entry ``k`` is the Entringer number
    E(n, k); the last entry of row ``n`` is Eul_n.
    """
    tri = [[1]]
    for n in range(1, rows):
        prev = tri[-1]
        row = [0]
        for k in range(1, n + 1):
            row.append(row[k - 1] + prev[n - k])
        tri.append(row)
    return tri[:rows]


@lru_cache(maxsize=None)
def _triangle(rows: int) -> tuple[tuple[int, ...], ...]:
    return tuple(map(tuple, seidel_triangle(rows)))


def euler(n: int) -> int:
    """Eul_n: 1, 1, 1, 2, 5, 16, 61, 272, ..."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _triangle(n + 1)[n][n]


def euler_list(count: int) -> list[int]:
    return [euler(n) for n in range(count)]


def entringer(n: int, k: int) -> int:
    """Down-up permutations of ``[n+1]`` whose first term is ``k + 1``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    return _triangle(n + 1)[n][k]
