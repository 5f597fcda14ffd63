"""Exhaustive and seeded-random verification suites.

Each suite returns a :class:`VerifyReport`; a report with no failures is a
pass. The ``gf`` suite only produces its table and never fails.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .chord import RandomPolicy, ex, ncd, random_diagram
from .families import (
    build_E,
    build_Enk,
    build_crossing,
    enk_alternative,
    f_distribution,
    f_fast,
    join_pair,
)
from .intersection import intersection_graph, tutte_2_neg1
from .sequences import downup_count, entringer, euler
from .series import gf_table
from .trees import enumerate_even_trees, phi, phi_inv, staircase_fillings
from .young import cor6_rhs, eps_vectors, g_distribution, strict_shapes

BRUTE_FORCE_MAX_N = 10


@dataclass
class Failure:
    input: Any
    expected: Any
    actual: Any

    def to_json(self) -> dict:
        return {"input": _jsonable(self.input), "expected": _jsonable(self.expected), "actual": _jsonable(self.actual)}


@dataclass
class VerifyReport:
    suite: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0
    table: list[dict] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, inp, expected, actual) -> bool:
        self.checked += 1
        if expected != actual:
            self.failures.append(Failure(inp, expected, actual))
            return False
        return True

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "checked": self.checked,
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
            "wall_time": round(self.wall_time, 6),
        }
        if self.table is not None:
            out["table"] = self.table
        return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


def _timed(name: str, body: Callable[[VerifyReport], None]) -> VerifyReport:
    report = VerifyReport(name)
    start = time.perf_counter()
    body(report)
    report.wall_time = time.perf_counter() - start
    return report


def verify_thm1(max_a1: int = 5) -> VerifyReport:
    """Expansion counts f, filling counts g and the recurrence agree for every k."""

    def body(r):
        for s in strict_shapes(max_a1):
            for e in eps_vectors(len(s)):
                f = f_distribution(s, e)
                g = g_distribution(s, e)
                fast = [f_fast(s, e, k) for k in range(s.width + 1)]
                for k in range(s.width + 1):
                    tag = {"shape": s.rows, "eps": e.bits, "k": k}
                    r.check({**tag, "check": "f=g"}, g[k], f[k])
                    r.check({**tag, "check": "f_fast=f"}, f[k], fast[k])

    return _timed("thm1", body)


def verify_cor6(max_a1: int = 5) -> VerifyReport:
    def body(r):
        for s in strict_shapes(max_a1):
            total = sum(ex(build_E(s, e)) for e in eps_vectors(len(s)))
            r.check({"shape": s.rows}, cor6_rhs(s), total)

    return _timed("cor6", body)


def verify_euler(max_n: int = 6) -> VerifyReport:
    def body(r):
        for n in range(1, max_n + 1):
            r.check({"n": n, "check": "ex(C_n)=Eul_{n+1}"}, euler(n + 1), ex(build_crossing(n)))
        for n in range(1, min(max_n + 1, BRUTE_FORCE_MAX_N) + 1):
            r.check({"n": n, "check": "Eul_n=downup"}, downup_count(n), euler(n))

    return _timed("euler", body)


def verify_entringer(max_n: int = 4) -> VerifyReport:
    """ex(E_{n,k}) against brute-force down-up counts of [n+3] starting at k+2."""

    def body(r):
        for n in range(1, max_n + 1):
            for k in range(n + 1):
                oracle = downup_count(n + 3, k + 2)
                r.check({"n": n, "k": k, "check": "ex(E_nk)=Ent"}, oracle, ex(build_Enk(n, k)))
                r.check({"n": n, "k": k, "check": "triangle=oracle"}, oracle, entringer(n + 2, k + 1))

    return _timed("entringer", body)


def verify_tutte(chords: int = 6, samples: int = 200, seed: int = 0, family_chords: int = 7) -> VerifyReport:
    """ex(d) = T(Int(d); 2, -1) on seeded-random diagrams and on every
    E(a, eps) with at most ``family_chords`` chords."""

    def body(r):
        rng = random.Random(seed)
        for i in range(samples):
            d = random_diagram(rng, rng.randint(1, chords), rng.randint(0, 2))
            r.check({"sample": i, "chords": d.chords}, ex(d), tutte_2_neg1(intersection_graph(d)))
        for s in strict_shapes(family_chords):
            for e in eps_vectors(len(s)):
                d = build_E(s, e)
                r.check({"shape": s.rows, "eps": e.bits}, ex(d), tutte_2_neg1(intersection_graph(d)))

    return _timed("tutte", body)


def verify_confluence(chords: int = 5, samples: int = 100, seed: int = 0) -> VerifyReport:
    """Lexicographic memoized expansion against unmemoized random-order expansion."""

    def body(r):
        rng = random.Random(seed)
        for i in range(samples):
            d = random_diagram(rng, rng.randint(1, chords), rng.randint(0, 2))
            reference = ncd(d)
            shuffled = ncd(d, policy=RandomPolicy(rng.randrange(2**32)), memo=False)
            r.check({"sample": i, "chords": d.chords}, reference.counts(), shuffled.counts())

    return _timed("confluence", body)


def verify_repr(max_mn: int = 6, max_n: int = 4) -> VerifyReport:
    """Alternative (a, eps) realizations of the same intersection graph give equal ex."""

    def body(r):
        for total in range(2, max_mn + 1):
            for m in range(1, total):
                first, second = join_pair(m, total - m)
                r.check({"join": (m, total - m)}, ex(first), ex(second))
        for n in range(1, max_n + 1):
            for k in range(n + 1):
                r.check({"enk": (n, k)}, ex(build_Enk(n, k)), ex(enk_alternative(n, k)))

    return _timed("repr", body)


def verify_trees(max_order: int = 8) -> VerifyReport:
    def body(r):
        for order in range(3, max_order + 1):
            trees = enumerate_even_trees(order)
            fillings = staircase_fillings(order - 2)
            images = [phi(t) for t in trees]
            r.check({"order": order, "check": "trees=Eul"}, euler(order - 1), len(trees))
            r.check({"order": order, "check": "fillings=Eul"}, euler(order - 1), len(fillings))
            r.check({"order": order, "check": "image=fillings"}, set(fillings), set(images))
            r.check({"order": order, "check": "injective"}, len(trees), len(set(images)))
            bad = [t.parent for t, f in zip(trees, images) if phi_inv(f) != t]
            r.check({"order": order, "check": "phi_inv.phi=id"}, [], bad)
            bad = [f.rows for f in fillings if phi(phi_inv(f)) != f]
            r.check({"order": order, "check": "phi.phi_inv=id"}, [], bad)

    return _timed("trees", body)


def verify_gf(max_m: int = 4, max_n: int = 4) -> VerifyReport:
    def body(r):
        rows = gf_table(max_m, max_n)
        r.checked = len(rows)
        r.table = [row.to_json() for row in rows]

    return _timed("gf", body)


SUITES = {
    "thm1": verify_thm1,
    "cor6": verify_cor6,
    "euler": verify_euler,
    "entringer": verify_entringer,
    "tutte": verify_tutte,
    "confluence": verify_confluence,
    "repr": verify_repr,
    "trees": verify_trees,
    "gf": verify_gf,
}
