"""Quivers, paths, path-algebra elements and admissible orders.

Composition is written right to left: the word ``b*a`` means "first ``a``,
then ``b``".  A :class:`Path` stores its arrows in *application* order, so
``b*a`` is ``Path(arrows=(a, b))``.  Tools that multiply left to right
(QPA, for one) use the opposite convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Sequence

from .fields import Field, QQ

__all__ = [
    "Quiver",
    "Path",
    "compose",
    "AdmissibleOrder",
    "Ordering",
    "compare",
    "AlgebraElement",
    "PathAlgebraPresentation",
]


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (name, source, target)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple((str(a), str(s), str(t)) for a, s, t in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        names = [a for a, _, _ in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow name")
        vs = set(self.vertices)
        for a, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {a} has an undeclared endpoint")
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_aindex", {a: i for i, a in enumerate(names)})

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def vertex_index(self, v: str) -> int:
        return self._vindex[str(v)]

    def arrow_index(self, name: str) -> int:
        return self._aindex[name]

    def has_vertex(self, v: str) -> bool:
        return str(v) in self._vindex

    def has_arrow(self, name: str) -> bool:
        return name in self._aindex

    def arrow_name(self, i: int) -> str:
        return self.arrows[i][0]

    def arrow_source(self, i: int) -> int:
        return self._vindex[self.arrows[i][1]]

    def arrow_target(self, i: int) -> int:
        return self._vindex[self.arrows[i][2]]

    def arrows_from(self, v: int) -> list[int]:
        return [i for i in range(self.num_arrows) if self.arrow_source(i) == v]

    def trivial(self, v) -> "Path":
        vi = v if isinstance(v, int) else self.vertex_index(v)
        return Path(vi, vi, ())

    def arrow(self, name_or_index) -> "Path":
        i = name_or_index if isinstance(name_or_index, int) else self.arrow_index(name_or_index)
        return Path(self.arrow_source(i), self.arrow_target(i), (i,))

    def path(self, word: str) -> "Path":
        """Path from a written word such as ``"b*a"`` (``a`` first)."""
        word = word.strip()
        if word.startswith("e(") and word.endswith(")"):
            return self.trivial(word[2:-1].strip())
        p = None
        for name in reversed([w.strip() for w in word.split("*")]):
            a = self.arrow(name)
            p = a if p is None else compose(a, p)
            if p is None:
                raise ValueError(f"{word!r} is not a path")
        return p

    def paths_of_length(self, n: int) -> list["Path"]:
        if n == 0:
            return [self.trivial(v) for v in range(self.num_vertices)]
        out = []
        for p in self.paths_of_length(n - 1):
            for a in self.arrows_from(p.target):
                out.append(Path(p.source, self.arrow_target(a), p.arrows + (a,)))
        return out

    def format_path(self, p: "Path") -> str:
        if not p.arrows:
            return f"e({self.vertices[p.source]})"
        return "*".join(self.arrow_name(a) for a in reversed(p.arrows))


@dataclass(frozen=True, order=False)
class Path:
    source: int
    target: int
    arrows: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def is_trivial(self) -> bool:
        return not self.arrows

    def vertices_visited(self, quiver: Quiver) -> list[int]:
        out = [self.source]
        for a in self.arrows:
            out.append(quiver.arrow_target(a))
        return out

    def subpaths(self, quiver: Quiver) -> Iterator["Path"]:
        """All subpaths, trivial ones included, without repetition."""
        seen = set()
        verts = self.vertices_visited(quiver)
        for v in verts:
            if v not in seen:
                seen.add(v)
                yield Path(v, v, ())
        n = len(self.arrows)
        words = set()
        for i in range(n):
            for j in range(i + 1, n + 1):
                w = self.arrows[i:j]
                if w not in words:
                    words.add(w)
                    yield Path(verts[i], verts[j], w)

    def contains_word(self, word: tuple[int, ...]) -> bool:
        n, m = len(self.arrows), len(word)
        if m == 0 or m > n:
            return False
        return any(self.arrows[i : i + m] == word for i in range(n - m + 1))


def compose(p: Path, q: Path) -> Path | None:
    """``p∘q`` ("q, then p"), or ``None`` (the zero path) if not composable."""
    if p.source != q.target:
        return None
    return Path(q.source, p.target, q.arrows + p.arrows)


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class AdmissibleOrder:
    """Length-then-lexicographic order on written words.

    ``precedence`` lists arrow indices from smallest to largest; by default the
    declaration order of the quiver.
    """

    precedence: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_rank", {a: i for i, a in enumerate(self.precedence)})

    @classmethod
    def default(cls, quiver: Quiver) -> "AdmissibleOrder":
        return cls(tuple(range(quiver.num_arrows)))

    @classmethod
    def from_names(cls, quiver: Quiver, names: Sequence[str]) -> "AdmissibleOrder":
        idx = [quiver.arrow_index(n) for n in names]
        if sorted(idx) != list(range(quiver.num_arrows)):
            raise ValueError("precedence must list every arrow exactly once")
        return cls(tuple(idx))

    def key(self, p: Path):
        if not p.arrows:
            return (0, (p.source,))
        return (len(p.arrows), tuple(self._rank[a] for a in reversed(p.arrows)))


def compare(order: AdmissibleOrder, p: Path, q: Path) -> Ordering:
    kp, kq = order.key(p), order.key(q)
    if kp == kq:
        return Ordering.EQ
    return Ordering.LT if kp < kq else Ordering.GT


class AlgebraElement:
    """Finite linear combination of paths with nonzero coefficients."""

    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, terms: Mapping[Path, object] | Iterable[tuple[Path, object]] = (), field: Field = QQ):
        self.field = field
        acc: dict[Path, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            c = field(c)
            acc[p] = field(acc.get(p, 0) + c)
        self._terms = {p: c for p, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def from_path(cls, p: Path, field: Field = QQ, coeff=1) -> "AlgebraElement":
        return cls({p: coeff}, field)

    @property
    def terms(self) -> Mapping[Path, object]:
        return self._terms

    def paths(self) -> list[Path]:
        return list(self._terms)

    def coefficient(self, p: Path):
        return self._terms.get(p, self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def is_uniform(self) -> bool:
        ends = {(p.source, p.target) for p in self._terms}
        return len(ends) <= 1

    def endpoints(self) -> tuple[int, int]:
        ends = {(p.source, p.target) for p in self._terms}
        if len(ends) != 1:
            raise ValueError("element is zero or not uniform")
        return next(iter(ends))

    def uniform_components(self) -> list["AlgebraElement"]:
        groups: dict[tuple[int, int], dict[Path, object]] = {}
        for p, c in self._terms.items():
            groups.setdefault((p.source, p.target), {})[p] = c
        return [AlgebraElement(g, self.field) for g in groups.values()]

    def min_length(self) -> int:
        return min(p.length for p in self._terms)

    def max_length(self) -> int:
        return max(p.length for p in self._terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return AlgebraElement(out, self.field)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({p: -c for p, c in self._terms.items()}, self.field)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.field(c)
        return AlgebraElement({p: v * c for p, v in self._terms.items()}, self.field)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Product ``self·other`` (``other`` applied first)."""
        out: dict[Path, object] = {}
        for p, c in self._terms.items():
            for q, d in other._terms.items():
                r = compose(p, q)
                if r is not None:
                    out[r] = out.get(r, 0) + c * d
        return AlgebraElement(out, self.field)

    def left_mul_path(self, p: Path) -> "AlgebraElement":
        return AlgebraElement.from_path(p, self.field) * self

    def right_mul_path(self, p: Path) -> "AlgebraElement":
        return self * AlgebraElement.from_path(p, self.field)

    def with_field(self, field: Field) -> "AlgebraElement":
        return AlgebraElement({p: field(c) for p, c in self._terms.items()}, field)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"AlgebraElement({len(self._terms)} terms)"

    def format(self, quiver: Quiver, order: AdmissibleOrder | None = None) -> str:
        if not self._terms:
            return "0"
        order = order or AdmissibleOrder.default(quiver)
        items = sorted(self._terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)
        parts = []
        p_char = self.field.characteristic
        for i, (p, c) in enumerate(items):
            word = quiver.format_path(p)
            neg = False
            if p_char == 0 and c < 0:
                neg, c = True, -c
            if c == 1:
                body = word
            else:
                body = f"{c}*{word}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class PathAlgebraPresentation:
    """``kQ/I`` with ``I`` generated by uniform ``relations``."""

    quiver: Quiver
    field: Field = QQ
    relations: tuple[AlgebraElement, ...] = ()
    name: str = dc_field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            if r.is_zero():
                raise ValueError("zero relation")
            if not r.is_uniform():
                raise ValueError("relation is not uniform")
            if r.min_length() < 2:
                raise ValueError("relation has a term of length < 2")

    def max_relation_length(self) -> int:
        return max((r.max_length() for r in self.relations), default=0)

    def with_field(self, field: Field) -> "PathAlgebraPresentation":
        rels = []
        for r in self.relations:
            r2 = r.with_field(field)
            if not r2.is_zero():
                rels.append(r2)
        return PathAlgebraPresentation(self.quiver, field, tuple(rels), self.name)

    def element(self, text: str) -> AlgebraElement:
        from .parser import parse_expression

        return parse_expression(text, self.quiver, self.field)
