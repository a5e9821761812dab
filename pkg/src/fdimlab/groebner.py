"""Tip reduction, overlap completion and the normal-path basis of kQ/I."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .quiver import (
    AdmissibleOrder,
    AlgebraElement,
    Path,
    PathAlgebraPresentation,
    Quiver,
)

__all__ = [
    "GroebnerBasis",
    "NormalBasis",
    "NotFiniteDimensionalAtCap",
    "AvoidanceReport",
    "tip",
    "reduce",
    "overlap_relations",
    "groebner_basis",
    "normal_basis",
    "avoidance_report",
    "default_degree_cap",
    "path_involves",
]

log = logging.getLogger(__name__)


class NotFiniteDimensionalAtCap(RuntimeError):
    """Normal paths survive at the cap length: the ideal is not admissible or the cap is too low."""


def tip(x: AlgebraElement, order: AdmissibleOrder) -> Path:
    if x.is_zero():
        raise ValueError("tip of the zero element")
    return max(x.terms, key=order.key)


def _monic(x: AlgebraElement, order: AdmissibleOrder) -> AlgebraElement:
    c = x.coefficient(tip(x, order))
    return x if c == 1 else x.scale(x.field.inv(c))


def _splice(p: Path, i: int, m: int, q: Path) -> Path:
    """Replace the arrows ``p.arrows[i:i+m]`` by ``q`` (a path parallel to them)."""
    arrows = p.arrows[:i] + q.arrows + p.arrows[i + m :]
    return Path(p.source, p.target, arrows)


class _TipIndex:
    def __init__(self, elements: Sequence[AlgebraElement], order: AdmissibleOrder):
        self.by_word: dict[tuple[int, ...], AlgebraElement] = {}
        self.lengths: set[int] = set()
        for g in elements:
            t = tip(g, order)
            self.by_word.setdefault(t.arrows, g)
            self.lengths.add(t.length)

    def find(self, p: Path):
        n = p.length
        for m in sorted(self.lengths):
            if m > n:
                break
            for i in range(n - m + 1):
                g = self.by_word.get(p.arrows[i : i + m])
                if g is not None:
                    return i, m, g
        return None


def reduce(x: AlgebraElement, basis: Sequence[AlgebraElement], order: AdmissibleOrder) -> AlgebraElement:
    """Normal form of ``x`` modulo monic uniform ``basis``; no result path contains a basis tip."""
    return _reduce_with(x, _TipIndex(basis, order), order)


def _reduce_with(x: AlgebraElement, index: _TipIndex, order: AdmissibleOrder) -> AlgebraElement:
    F = x.field
    work = dict(x.terms)
    done: dict[Path, object] = {}
    while work:
        p = max(work, key=order.key)
        c = work.pop(p)
        hit = index.find(p)
        if hit is None:
            done[p] = c
            continue
        i, m, g = hit
        t = tip(g, order)
        for q, d in g.terms.items():
            if q == t:
                continue
            r = _splice(p, i, m, q)
            v = F(work.get(r, 0) - c * d)
            if v == 0:
                work.pop(r, None)
            else:
                work[r] = v
    return AlgebraElement(done, F)


def overlap_relations(x: AlgebraElement, y: AlgebraElement, order: AdmissibleOrder) -> list[AlgebraElement]:
    """All ``x·m − n·y`` with ``tip(x)·m = n·tip(y)``, ``|m|, |n| ≥ 1`` and ``|m| < |tip(y)|``."""
    tx, ty = tip(x, order), tip(y, order)
    F = x.field
    out = []
    ax, ay = tx.arrows, ty.arrows
    for k in range(1, len(ay)):
        L = len(ay) - k  # shared stretch
        if L >= len(ax):
            continue
        if ay[k:] != ax[:L]:
            continue
        # the shared stretch runs from tx.source to ty.target
        m = Path(ty.source, tx.source, ay[:k])
        n = Path(ty.target, tx.target, ax[L:])
        xm = x * AlgebraElement.from_path(m, F)
        ny = AlgebraElement.from_path(n, F) * y
        out.append(xm - ny)
    return out


def _interreduce(elements: list[AlgebraElement], order: AdmissibleOrder) -> list[AlgebraElement]:
    G = [_monic(g, order) for g in elements if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        G.sort(key=lambda g: order.key(tip(g, order)))
        for i in range(len(G)):
            others = G[:i] + G[i + 1 :]
            r = reduce(G[i], others, order)
            if r != G[i]:
                changed = True
                G = others if r.is_zero() else others[:i] + [_monic(r, order)] + others[i:]
                break
    return G


@dataclass(frozen=True)
class GroebnerBasis:
    presentation: PathAlgebraPresentation
    order: AdmissibleOrder
    elements: tuple[AlgebraElement, ...]
    degree_cap: int
    complete_below_cap: bool
    discarded: int = 0

    @property
    def tips(self) -> list[Path]:
        return [tip(g, self.order) for g in self.elements]

    def reduce(self, x: AlgebraElement) -> AlgebraElement:
        return reduce(x, self.elements, self.order)

    def format(self) -> list[str]:
        q = self.presentation.quiver
        return [g.format(q, self.order) for g in self.elements]


def default_degree_cap(pres: PathAlgebraPresentation) -> int:
    return 2 * max(pres.max_relation_length(), 1) + 2


def groebner_basis(
    pres: PathAlgebraPresentation,
    order: AdmissibleOrder | None = None,
    degree_cap: int | None = None,
    max_passes: int = 10_000,
) -> GroebnerBasis:
    """Truncated overlap completion; elements with tips longer than ``degree_cap`` are dropped."""
    order = order or AdmissibleOrder.default(pres.quiver)
    cap = default_degree_cap(pres) if degree_cap is None else degree_cap
    if pres.max_relation_length() > cap:
        raise ValueError(f"degree cap {cap} is below the longest relation ({pres.max_relation_length()})")
    G = _interreduce(list(pres.relations), order)
    discarded = 0
    complete = False
    for _ in range(max_passes):
        new: list[AlgebraElement] = []
        current = list(G)
        for x in G:
            for y in G:
                for o in overlap_relations(x, y, order):
                    r = reduce(o, current, order)
                    if r.is_zero():
                        continue
                    if tip(r, order).length > cap:
                        discarded += 1
                        continue
                    r = _monic(r, order)
                    new.append(r)
                    current.append(r)
        if not new:
            complete = True
            break
        G = _interreduce(G + new, order)
    log.debug("groebner basis: %d elements, %d discarded above cap", len(G), discarded)
    return GroebnerBasis(pres, order, tuple(G), cap, complete, discarded)


@dataclass(frozen=True)
class NormalBasis:
    quiver: Quiver
    paths: tuple[Path, ...]
    termination_length: int
    index: dict = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "index", {p: i for i, p in enumerate(self.paths)})

    def __len__(self):
        return len(self.paths)

    def __contains__(self, p: Path) -> bool:
        return p in self.index

    def by_endpoints(self) -> dict[tuple[int, int], list[int]]:
        """(target, source) -> indices of normal paths."""
        out: dict[tuple[int, int], list[int]] = {}
        for i, p in enumerate(self.paths):
            out.setdefault((p.target, p.source), []).append(i)
        return out

    def dim_by_length(self) -> list[int]:
        counts = [0] * self.termination_length
        for p in self.paths:
            counts[p.length] += 1
        return counts


def normal_basis(gb: GroebnerBasis) -> NormalBasis:
    """Breadth-first enumeration of tip-avoiding paths until a length has none."""
    if not gb.complete_below_cap:
        raise ValueError("Gröbner basis is not complete below its cap")
    q = gb.presentation.quiver
    index = _TipIndex(gb.elements, gb.order)
    lengths = sorted(index.lengths)
    layer = [q.trivial(v) for v in range(q.num_vertices)]
    paths: list[Path] = list(layer)
    n = 0
    while layer:
        n += 1
        if n > gb.degree_cap:
            raise NotFiniteDimensionalAtCap(
                f"normal paths of length {n - 1} survive at degree cap {gb.degree_cap}"
            )
        nxt = []
        for p in layer:
            for a in q.arrows_from(p.target):
                w = p.arrows + (a,)
                if any(w[len(w) - m :] in index.by_word for m in lengths if m <= len(w)):
                    continue
                nxt.append(Path(p.source, q.arrow_target(a), w))
        nxt.sort(key=gb.order.key)
        paths.extend(nxt)
        layer = nxt
    return NormalBasis(q, tuple(paths), n)


def path_involves(p: Path, x, quiver: Quiver) -> bool:
    """Whether ``p`` factors through ``x`` (a vertex name or an arrow name)."""
    kind, idx = _resolve_x(quiver, x)
    if kind == "arrow":
        return idx in p.arrows
    return idx in p.vertices_visited(quiver)


def _resolve_x(quiver: Quiver, x) -> tuple[str, int]:
    if isinstance(x, tuple):
        return x
    if quiver.has_arrow(str(x)):
        return ("arrow", quiver.arrow_index(str(x)))
    if quiver.has_vertex(str(x)):
        return ("vertex", quiver.vertex_index(str(x)))
    raise KeyError(f"{x!r} is neither a vertex nor an arrow")


@dataclass(frozen=True)
class AvoidanceReport:
    x: str
    relations_avoid_x: bool
    basis_closed: bool
    groebner_avoids_x: bool | None
    counterexample: str | None


def avoidance_report(pres: PathAlgebraPresentation, x, gb: GroebnerBasis, nb: NormalBasis | None = None) -> AvoidanceReport:
    q = pres.quiver
    kind, idx = _resolve_x(q, x)
    nb = nb or normal_basis(gb)
    rel_avoid = not any(path_involves(p, (kind, idx), q) for r in pres.relations for p in r.terms)
    counter = None
    gb_avoid = None
    if kind == "arrow":
        xs, xt = q.arrow_source(idx), q.arrow_target(idx)
        mid = (idx,)
    else:
        xs = xt = idx
        mid = ()
    closed = True
    for p2 in nb.paths:
        if p2.target != xs:
            continue
        for p1 in nb.paths:
            if p1.source != xt:
                continue
            w = Path(p2.source, p1.target, p2.arrows + mid + p1.arrows)
            if w not in nb:
                closed = False
                counter = counter or q.format_path(w)
                break
        if not closed:
            break
    if rel_avoid:
        gb_avoid = True
        for g in gb.elements:
            bad = [p for p in g.terms if path_involves(p, (kind, idx), q)]
            if bad:
                gb_avoid = False
                counter = counter or q.format_path(bad[0])
                break
    return AvoidanceReport(str(x), rel_avoid, closed, gb_avoid, counter)
