"""Chord diagrams, crossings and chord expansion.

Vertices are the integers ``1..num_vertices`` in anticlockwise order. A chord
is stored as an ordered pair ``(lo, hi)``. Expansion never relabels vertices,
so two diagrams on the same vertex set are equal exactly when their chord
sets are equal.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from ._memo import Memo

Chord = tuple[int, int]
Crossing = tuple[Chord, Chord]
Key = tuple[int, tuple[Chord, ...]]

_LABEL_RE = re.compile(r"^([XYZ])([1-9][0-9]*)$|^P$")


@dataclass(frozen=True, order=True)
class ClassLabel:
    """Vertex class: ``X``, ``Y`` or ``Z`` with a positive index, or plain ``P``."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind == "P":
            if self.index != 0:
                raise ValueError("plain label carries no index")
        elif self.kind in ("X", "Y", "Z"):
            if self.index < 1:
                raise ValueError(f"class index must be positive, got {self.index}")
        else:
            raise ValueError(f"unknown class {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "ClassLabel":
        match = _LABEL_RE.match(text)
        if not match:
            raise ValueError(f"bad class label {text!r}")
        if text == "P":
            return cls("P")
        return cls(match.group(1), int(match.group(2)))

    def __str__(self) -> str:
        return "P" if self.kind == "P" else f"{self.kind}{self.index}"


PLAIN = ClassLabel("P")


def _norm_chord(pair: Sequence[int]) -> Chord:
    if len(pair) != 2:
        raise ValueError(f"chord must have two endpoints, got {pair!r}")
    a, b = int(pair[0]), int(pair[1])
    if a == b:
        raise ValueError(f"chord endpoints must differ, got {pair!r}")
    return (a, b) if a < b else (b, a)


class ChordDiagram:
    """An immutable set of pairwise independent chords.

    ``classes`` optionally maps vertices to :class:`ClassLabel`; when given,
    every chord endpoint must be labeled. Vertices not covered by any chord
    are allowed and kept in ``num_vertices``.
    """

    __slots__ = ("num_vertices", "chords", "_classes", "_hash")

    def __init__(
        self,
        num_vertices: int,
        chords: Iterable[Sequence[int]],
        classes: Mapping[int, ClassLabel] | None = None,
    ):
        if num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        normed = sorted(_norm_chord(c) for c in chords)
        seen: set[int] = set()
        for a, b in normed:
            if a < 1 or b > num_vertices:
                raise ValueError(f"chord {(a, b)} outside 1..{num_vertices}")
            if a in seen or b in seen:
                raise ValueError(f"chord {(a, b)} shares an endpoint with another chord")
            seen.update((a, b))
        if classes is not None:
            classes = {int(v): lab for v, lab in classes.items()}
            missing = seen - classes.keys()
            if missing:
                raise ValueError(f"unlabeled chord endpoints: {sorted(missing)}")
            classes = tuple(sorted(classes.items()))
        self.num_vertices = num_vertices
        self.chords: tuple[Chord, ...] = tuple(normed)
        self._classes: tuple[tuple[int, ClassLabel], ...] | None = classes
        self._hash = None

    @classmethod
    def _trusted(cls, num_vertices, chords, classes) -> "ChordDiagram":
        # Skips validation; only for children produced by expand_step.
        obj = cls.__new__(cls)
        obj.num_vertices = num_vertices
        obj.chords = chords
        obj._classes = classes
        obj._hash = None
        return obj

    @property
    def classes(self) -> dict[int, ClassLabel] | None:
        return None if self._classes is None else dict(self._classes)

    def label(self, vertex: int) -> ClassLabel | None:
        if self._classes is None:
            return None
        for v, lab in self._classes:
            if v == vertex:
                return lab
        return None

    def __len__(self) -> int:
        return len(self.chords)

    def __iter__(self) -> Iterator[Chord]:
        return iter(self.chords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return (
            self.num_vertices == other.num_vertices
            and self.chords == other.chords
            and self._classes == other._classes
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vertices, self.chords, self._classes))
        return self._hash

    def __repr__(self) -> str:
        return f"ChordDiagram({self.num_vertices}, {list(self.chords)})"

    def with_chords(self, chords: Iterable[Sequence[int]]) -> "ChordDiagram":
        return ChordDiagram(self.num_vertices, chords, self.classes)

    def is_nonintersecting(self) -> bool:
        return not any(True for _ in _iter_crossings(self.chords))


def _crosses(c1: Chord, c2: Chord) -> bool:
    a, b = c1
    c, d = c2
    return a < c < b < d or c < a < d < b


def _iter_crossings(chords: Sequence[Chord]) -> Iterator[Crossing]:
    for i, c1 in enumerate(chords):
        for c2 in chords[i + 1:]:
            if _crosses(c1, c2):
                yield (c1, c2)


def crossings(d: ChordDiagram) -> list[Crossing]:
    """All crossing pairs of ``d`` in lexicographic order."""
    return list(_iter_crossings(d.chords))


def canonical_key(d: ChordDiagram) -> Key:
    return (d.num_vertices, d.chords)


def expand_step(d: ChordDiagram, s: Crossing) -> tuple[ChordDiagram, ChordDiagram]:
    """Expand ``d`` at the crossing ``s``.

    With sorted endpoints a < b < c < e and ``s = {ac, be}``, the first child
    replaces ``s`` by ``{ab, ce}`` and the second by ``{ae, bc}``.
    """
    c1, c2 = _norm_chord(s[0]), _norm_chord(s[1])
    if c1 not in d.chords or c2 not in d.chords or not _crosses(*sorted((c1, c2))):
        raise ValueError(f"{s!r} is not a crossing of {d!r}")
    a, b, c, e = sorted(c1 + c2)
    rest = [ch for ch in d.chords if ch != c1 and ch != c2]
    first = tuple(sorted(rest + [(a, b), (c, e)]))
    second = tuple(sorted(rest + [(a, e), (b, c)]))
    return (
        ChordDiagram._trusted(d.num_vertices, first, d._classes),
        ChordDiagram._trusted(d.num_vertices, second, d._classes),
    )


# Crossing-selection policies: callables taking the (nonempty) crossing list.
Policy = Callable[[list[Crossing]], Crossing]


def lex_first(cross: list[Crossing]) -> Crossing:
    return cross[0]


class RandomPolicy:
    """Picks a uniformly random crossing from a seeded generator."""

    def __init__(self, seed: int | None = 0):
        self._rng = random.Random(seed)

    def __call__(self, cross: list[Crossing]) -> Crossing:
        return self._rng.choice(cross)


class NcdMultiset:
    """Multiset of nonintersecting diagrams keyed by :func:`canonical_key`."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[Key, tuple[ChordDiagram, int]] | None = None):
        self.entries = entries or {}

    def total(self) -> int:
        return sum(mult for _, mult in self.entries.values())

    def multiplicity(self, d: ChordDiagram) -> int:
        entry = self.entries.get(canonical_key(d))
        return entry[1] if entry else 0

    def counts(self) -> dict[Key, int]:
        return {key: mult for key, (_, mult) in self.entries.items()}

    def items(self) -> list[tuple[ChordDiagram, int]]:
        return [self.entries[key] for key in sorted(self.entries)]

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcdMultiset):
            return NotImplemented
        return self.counts() == other.counts()

    def __repr__(self) -> str:
        return f"NcdMultiset(distinct={len(self)}, total={self.total()})"


def ncd(d: ChordDiagram, policy: Policy = lex_first, memo: bool = True) -> NcdMultiset:
    """Fully expand ``d``; the leaves form the chord expansion multiset.

    With ``memo`` on, each distinct intermediate diagram is expanded once.
    Switch it off to walk the literal binary expansion tree, e.g. when
    comparing policies.
    """
    leaves: dict[Key, ChordDiagram] = {}
    cache = Memo() if memo else None

    def walk(node: ChordDiagram) -> dict[Key, int]:
        key = canonical_key(node)
        if cache is not None:
            hit = cache.get(key)
            if hit is not None:
                return hit
        cross = crossings(node)
        if not cross:
            leaves[key] = node
            result = {key: 1}
        else:
            left, right = expand_step(node, policy(cross))
            result = dict(walk(left))
            for k, v in walk(right).items():
                result[k] = result.get(k, 0) + v
        if cache is not None:
            cache.put(key, result, cost=96 + 80 * len(result))
        return result

    counts = walk(d)
    return NcdMultiset({k: (leaves[k], v) for k, v in counts.items()})


def ex(d: ChordDiagram, policy: Policy = lex_first) -> int:
    """Chord expansion number: the size of ``ncd(d)`` counted with multiplicity."""
    cache = Memo()

    def count(node: ChordDiagram) -> int:
        key = canonical_key(node)
        hit = cache.get(key)
        if hit is not None:
            return hit
        cross = crossings(node)
        if not cross:
            value = 1
        else:
            left, right = expand_step(node, policy(cross))
            value = count(left) + count(right)
        cache.put(key, value, cost=96 + 16 * len(node.chords))
        return value

    return count(d)


def random_diagram(rng: random.Random, num_chords: int, isolated: int = 0) -> ChordDiagram:
    """A uniformly random perfect matching on ``2*num_chords`` vertices, plus
    ``isolated`` unmatched vertices scattered among them."""
    n = 2 * num_chords + isolated
    verts = list(range(1, n + 1))
    rng.shuffle(verts)
    used = verts[: 2 * num_chords]
    return ChordDiagram(n, [(used[i], used[i + 1]) for i in range(0, len(used), 2)])


# JSON / DOT -----------------------------------------------------------------


def to_json(d: ChordDiagram) -> dict:
    obj: dict = {"num_vertices": d.num_vertices, "chords": [list(c) for c in d.chords]}
    if d._classes is not None:
        obj["classes"] = {str(v): str(lab) for v, lab in d._classes}
    return obj


def from_json(obj: Mapping) -> ChordDiagram:
    try:
        n = obj["num_vertices"]
        chords = obj["chords"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"diagram JSON needs num_vertices and chords: {exc}") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("num_vertices must be an integer")
    if not isinstance(chords, list) or not all(isinstance(c, list) for c in chords):
        raise ValueError("chords must be a list of pairs")
    classes = obj.get("classes")
    if classes is not None:
        classes = {int(v): ClassLabel.parse(lab) for v, lab in classes.items()}
    return ChordDiagram(n, chords, classes)


def dumps(d: ChordDiagram) -> str:
    return json.dumps(to_json(d))


def loads(text: str) -> ChordDiagram:
    return from_json(json.loads(text))


def ncd_to_json(ms: NcdMultiset) -> dict:
    return {
        "total": ms.total(),
        "entries": [
            {"num_vertices": d.num_vertices, "chords": [list(c) for c in d.chords], "multiplicity": m}
            for d, m in ms.items()
        ],
    }


def _chord_text(chords: Iterable[Chord]) -> str:
    return " ".join(f"{a}-{b}" for a, b in chords)


def expansion_tree_dot(d: ChordDiagram, policy: Policy = lex_first, max_nodes: int = 100_000) -> str:
    """The literal expansion tree in Graphviz DOT.

    Internal nodes show the crossing expanded there, leaves their chord list.
    """
    lines = ["digraph expansion {", "  node [shape=box, fontname=monospace];"]
    counter = 0

    def visit(node: ChordDiagram) -> str:
        nonlocal counter
        if counter >= max_nodes:
            raise ValueError(f"expansion tree exceeds {max_nodes} nodes")
        name = f"n{counter}"
        counter += 1
        cross = crossings(node)
        if not cross:
            lines.append(f'  {name} [label="{_chord_text(node.chords)}", style=rounded];')
            return name
        s = policy(cross)
        lines.append(f'  {name} [label="expand {_chord_text(s)}"];')
        left, right = expand_step(node, s)
        for tag, child in (("E1", left), ("E2", right)):
            lines.append(f'  {name} -> {visit(child)} [label="{tag}"];')
        return name

    visit(d)
    lines.append("}")
    return "\n".join(lines) + "\n"
