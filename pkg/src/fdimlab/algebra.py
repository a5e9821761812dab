"""Finite-dimensional algebras given by structure constants.

Every algebra here carries a complete set of primitive orthogonal idempotents
that are themselves basis elements (one per vertex), and every other basis
element ``b`` satisfies ``e_t b e_s = b`` for a unique pair of vertices.  Path
algebras modulo admissible ideals, their corners ``(1-e)A(1-e)`` and their
quotients by two-sided ideals all keep this shape, which is what the module
code relies on.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg
from .fields import Field
from .groebner import GroebnerBasis, NormalBasis, groebner_basis, normal_basis
from .quiver import AlgebraElement, Path, PathAlgebraPresentation, compose

__all__ = [
    "FDAlgebra",
    "IdealModule",
    "Corner",
    "build_algebra",
    "algebra_from_presentation",
    "idempotent_reduction",
    "quotient_by_ideal",
    "two_sided_closure",
]

log = logging.getLogger(__name__)


class FDAlgebra:
    """Basic algebra with basis labels, structure constants and vertex idempotents.

    ``table[i, j, k]`` is the coefficient of ``b_k`` in ``b_i * b_j``.
    """

    def __init__(
        self,
        field: Field,
        labels: Sequence[str],
        table: np.ndarray,
        vertices: Sequence[str],
        idempotents: Sequence[int],
        src: Sequence[int],
        tgt: Sequence[int],
        degree: Sequence[int] | None = None,
        words: Sequence[Path] | None = None,
        name: str = "",
        check: bool = True,
    ):
        self.field = field
        self.labels = list(labels)
        self.n = len(self.labels)
        self.table = table
        self.vertices = list(vertices)
        self.idempotents = list(idempotents)
        self.src = np.asarray(src, dtype=np.int64).reshape(-1)
        self.tgt = np.asarray(tgt, dtype=np.int64).reshape(-1)
        self.degree = list(degree) if degree is not None else [0 if i in set(self.idempotents) else 1 for i in range(self.n)]
        self.words = list(words) if words is not None else None
        self.name = name
        self.presentation: PathAlgebraPresentation | None = None
        self.groebner: GroebnerBasis | None = None
        self.normal: NormalBasis | None = None
        if table.shape != (self.n, self.n, self.n):
            raise ValueError("structure constants have the wrong shape")
        if check:
            self.check()

    def __repr__(self):
        return f"FDAlgebra({self.name or '?'}, dim={self.n}, vertices={self.vertices})"

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v) -> int:
        if isinstance(v, (int, np.integer)):
            return int(v)
        return self.vertices.index(str(v))

    @cached_property
    def sparse(self) -> list[dict[int, dict[int, object]]]:
        out: list[dict[int, dict[int, object]]] = [dict() for _ in range(self.n)]
        for i, j in zip(*np.nonzero(np.any(self.table != 0, axis=2))):
            row = self.table[i, j]
            out[i][int(j)] = {int(k): row[k] for k in np.flatnonzero(row != 0)}
        return out

    @cached_property
    def left(self) -> np.ndarray:
        """``left[i]`` is the matrix of ``x -> b_i x``."""
        return np.ascontiguousarray(self.table.transpose(0, 2, 1))

    @cached_property
    def right(self) -> np.ndarray:
        """``right[j]`` is the matrix of ``x -> x b_j``."""
        return np.ascontiguousarray(self.table.transpose(1, 2, 0))

    @cached_property
    def radical_indices(self) -> list[int]:
        idem = set(self.idempotents)
        return [i for i in range(self.n) if i not in idem]

    @cached_property
    def generators(self) -> list[int]:
        """Radical basis elements whose classes span rad/rad²."""
        F = self.field
        rad = self.radical_indices
        sq = []
        for i in rad:
            for j, vec in self.sparse[i].items():
                if j in rad:
                    v = F.zeros(self.n)
                    for k, c in vec.items():
                        v[k] = c
                    sq.append(v)
        span = np.array(sq, dtype=F.dtype).T if sq else F.zeros((self.n, 0))
        span = linalg.column_basis(F, span) if span.shape[1] else span
        gens = []
        for i in sorted(rad, key=lambda i: (self.degree[i], i)):
            e = F.zeros((self.n, 1))
            e[i, 0] = F.one
            cand = np.concatenate([span, e], axis=1)
            if linalg.rank(F, cand) > span.shape[1]:
                gens.append(i)
                span = cand
        return gens

    @cached_property
    def generator_words(self) -> tuple[list[tuple[int, ...]], np.ndarray]:
        """Words in the generators spanning the radical, and the radical basis in those words.

        A word ``(g1, g2, ..., gk)`` stands for the product ``g1*g2*...*gk``.
        Returns ``(words, expr)`` where column ``r`` of ``expr`` writes
        ``radical_indices[r]`` as a combination of ``words``.
        """
        F = self.field
        words: list[tuple[int, ...]] = []
        vecs: list[np.ndarray] = []
        frontier = [((g,), self.basis_vector(g)) for g in self.generators]
        while frontier:
            kept = []
            for w, v in frontier:
                if F.is_zero(v):
                    continue
                cand = np.array(vecs + [v], dtype=F.dtype).T
                if linalg.rank(F, cand) == len(vecs) + 1:
                    words.append(w)
                    vecs.append(v)
                    kept.append((w, v))
            frontier = [
                ((g,) + w, self.multiply(self.basis_vector(g), v)) for w, v in kept for g in self.generators
            ]
        rad = self.radical_indices
        if not rad:
            return [], F.zeros((0, 0))
        W = np.array(vecs, dtype=F.dtype).T
        targets = F.zeros((self.n, len(rad)))
        for r, i in enumerate(rad):
            targets[i, r] = F.one
        return words, linalg.solve(F, W, targets)

    def element(self, coords) -> np.ndarray:
        v = self.field.array(coords)
        if v.shape != (self.n,):
            raise ValueError("bad coordinate vector")
        return v

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.n)
        v[i] = self.field.one
        return v

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        F = self.field
        out = F.zeros(self.n)
        for i in np.flatnonzero(x != 0):
            for j, vec in self.sparse[int(i)].items():
                if y[j] != 0:
                    c = x[i] * y[j]
                    for k, d in vec.items():
                        out[k] += c * d
        return F.reduce(out)

    def unit(self) -> np.ndarray:
        v = self.field.zeros(self.n)
        for i in self.idempotents:
            v[i] = self.field.one
        return v

    def check(self, exhaustive_up_to: int = 64, samples: int = 2000, seed: int = 0) -> None:
        """Associativity, unit and idempotent invariants; raises ``ValueError`` on failure."""
        F = self.field
        n = self.n
        if len(self.idempotents) != len(self.vertices):
            raise ValueError("one idempotent per vertex required")
        for v, i in enumerate(self.idempotents):
            if self.src[i] != v or self.tgt[i] != v:
                raise ValueError("idempotent at the wrong vertex")
        for b in range(n):
            for v, i in enumerate(self.idempotents):
                lhs = self.sparse[i].get(b, {})
                expect = {b: F.one} if self.tgt[b] == v else {}
                if {k: c for k, c in lhs.items() if c != 0} != expect:
                    raise ValueError(f"e_{self.vertices[v]} * {self.labels[b]} is wrong")
                rhs = self.sparse[b].get(i, {})
                expect = {b: F.one} if self.src[b] == v else {}
                if {k: c for k, c in rhs.items() if c != 0} != expect:
                    raise ValueError(f"{self.labels[b]} * e_{self.vertices[v]} is wrong")
        for i in range(n):
            for j, vec in self.sparse[i].items():
                for k in vec:
                    if self.tgt[k] != self.tgt[i] or self.src[k] != self.src[j]:
                        raise ValueError("product leaves its vertex block")
        if n <= exhaustive_up_to:
            by_tgt = {v: [i for i in range(n) if self.tgt[i] == v] for v in range(self.num_vertices)}
            triples = (
                (i, j, k)
                for j in range(n)
                for i in range(n)
                if self.src[i] == self.tgt[j]
                for k in by_tgt[int(self.src[j])]
            )
        else:
            rng = np.random.default_rng(seed)
            triples = ((int(a), int(b), int(c)) for a, b, c in rng.integers(0, n, size=(samples, 3)))
        for i, j, k in triples:
            lhs: dict[int, object] = {}
            for m, c in self.sparse[i].get(j, {}).items():
                for t, d in self.sparse[m].get(k, {}).items():
                    lhs[t] = lhs.get(t, 0) + c * d
            rhs: dict[int, object] = {}
            for m, c in self.sparse[j].get(k, {}).items():
                for t, d in self.sparse[i].get(m, {}).items():
                    rhs[t] = rhs.get(t, 0) + c * d
            lhs = {t: F(c) for t, c in lhs.items() if F(c) != 0}
            rhs = {t: F(c) for t, c in rhs.items() if F(c) != 0}
            if lhs != rhs:
                raise ValueError(f"not associative at ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    def opposite(self) -> "FDAlgebra":
        op = FDAlgebra(
            self.field,
            [f"{l}^op" for l in self.labels],
            np.ascontiguousarray(self.table.transpose(1, 0, 2)),
            self.vertices,
            self.idempotents,
            self.tgt,
            self.src,
            self.degree,
            None,
            name=f"{self.name}^op",
            check=False,
        )
        return op

    def with_field(self, field: Field) -> "FDAlgebra":
        """Same structure constants read in another field (e.g. reduced mod p)."""
        if field == self.field:
            return self
        flat = [field(c) for c in self.table.reshape(-1)]
        table = np.array(flat, dtype=field.dtype).reshape(self.table.shape)
        B = FDAlgebra(
            field, self.labels, table, self.vertices, self.idempotents, self.src, self.tgt,
            self.degree, self.words, name=self.name,
        )
        if self.presentation is not None:
            B.presentation = self.presentation.with_field(field)
        return B

    def block(self, t: int, s: int) -> list[int]:
        return [i for i in range(self.n) if self.tgt[i] == t and self.src[i] == s]

    def column(self, v: int) -> list[int]:
        """Basis indices spanning ``A e_v``."""
        return [i for i in range(self.n) if self.src[i] == v]

    def row(self, v: int) -> list[int]:
        """Basis indices spanning ``e_v A``."""
        return [i for i in range(self.n) if self.tgt[i] == v]

    def summary(self) -> dict:
        return {
            "name": self.name,
            "field": str(self.field),
            "dimension": self.n,
            "vertices": self.vertices,
            "idempotents": [self.labels[i] for i in self.idempotents],
            "basis": self.labels,
        }

    def table_json(self) -> list[list[dict[str, str]]]:
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                vec = self.sparse[i].get(j, {})
                row.append({self.labels[k]: str(c) for k, c in sorted(vec.items())})
            out.append(row)
        return out


def build_algebra(nb: NormalBasis, gb: GroebnerBasis, name: str = "") -> FDAlgebra:
    """Structure constants of kQ/I on the normal-path basis."""
    pres = gb.presentation
    F = pres.field
    q = pres.quiver
    n = len(nb)
    table = F.zeros((n, n, n))
    for i, p in enumerate(nb.paths):
        for j, r in enumerate(nb.paths):
            w = compose(p, r)
            if w is None:
                continue
            red = gb.reduce(AlgebraElement.from_path(w, F))
            for path, c in red.terms.items():
                table[i, j, nb.index[path]] = c
    idem = [nb.index[q.trivial(v)] for v in range(q.num_vertices)]
    A = FDAlgebra(
        F,
        [q.format_path(p) for p in nb.paths],
        table,
        list(q.vertices),
        idem,
        [p.source for p in nb.paths],
        [p.target for p in nb.paths],
        [p.length for p in nb.paths],
        list(nb.paths),
        name=name or pres.name,
    )
    A.presentation = pres
    A.groebner = gb
    A.normal = nb
    return A


def algebra_from_presentation(pres: PathAlgebraPresentation, order=None, degree_cap=None) -> FDAlgebra:
    gb = groebner_basis(pres, order, degree_cap)
    return build_algebra(normal_basis(gb), gb)


@dataclass(frozen=True)
class Corner:
    """Basis correspondence between ``Γ = (1-e)A(1-e)`` and ``A``."""

    ambient: FDAlgebra
    corner: FDAlgebra
    removed: tuple[int, ...]  # vertex indices of A making up e
    embed: tuple[int, ...]  # Γ basis index -> A basis index
    vertex_map: tuple[int, ...]  # Γ vertex -> A vertex

    def restrict(self) -> dict[int, int]:
        return {a: g for g, a in enumerate(self.embed)}

    def embed_vector(self, x: np.ndarray) -> np.ndarray:
        out = self.ambient.field.zeros(self.ambient.n)
        out[list(self.embed)] = x
        return out

    def restrict_vector(self, x: np.ndarray) -> np.ndarray:
        return x[list(self.embed)]


def idempotent_reduction(A: FDAlgebra, e: Sequence) -> Corner:
    """``Γ = (1-e)A(1-e)`` for ``e`` a sum of vertex idempotents (given as vertices)."""
    removed = sorted({A.vertex_index(v) for v in e})
    if not removed:
        warnings.warn("empty idempotent: the corner is the whole algebra", stacklevel=2)
    if len(removed) == A.num_vertices:
        warnings.warn("e is the unit: the corner is the zero algebra", stacklevel=2)
    keep_v = [v for v in range(A.num_vertices) if v not in removed]
    vmap = {v: i for i, v in enumerate(keep_v)}
    basis = [b for b in range(A.n) if A.src[b] in vmap and A.tgt[b] in vmap]
    idx = np.array(basis, dtype=np.int64)
    table = A.table[np.ix_(idx, idx, idx)] if basis else A.field.zeros((0, 0, 0))
    G = FDAlgebra(
        A.field,
        [A.labels[b] for b in basis],
        np.ascontiguousarray(table),
        [A.vertices[v] for v in keep_v],
        [basis.index(A.idempotents[v]) for v in keep_v],
        [vmap[int(A.src[b])] for b in basis],
        [vmap[int(A.tgt[b])] for b in basis],
        [A.degree[b] for b in basis],
        [A.words[b] for b in basis] if A.words else None,
        name=f"({A.name})_corner",
    )
    return Corner(A, G, tuple(removed), tuple(basis), tuple(keep_v))


@dataclass(frozen=True)
class IdealModule:
    """Subspace of an algebra closed under left (and possibly right) multiplication."""

    algebra: FDAlgebra
    carrier: np.ndarray  # n x k, independent columns
    left_closed: bool
    two_sided: bool

    @property
    def dim(self) -> int:
        return self.carrier.shape[1]

    def contains(self, x: np.ndarray) -> bool:
        F = self.algebra.field
        if self.dim == 0:
            return F.is_zero(x)
        return linalg.rank(F, np.concatenate([self.carrier, x.reshape(-1, 1)], axis=1)) == self.dim

    def times_radical_is_zero(self) -> bool:
        A = self.algebra
        F = A.field
        for j in A.radical_indices:
            if not F.is_zero(F.matmul(A.right[j], self.carrier)):
                return False
        return True

    def as_left_module(self):
        from .modules import regular_module

        return regular_module(self.algebra).submodule(self.carrier)[0]

    def as_right_module(self):
        """The ideal as a left module over the opposite algebra."""
        from .modules import regular_module

        return regular_module(self.algebra.opposite()).submodule(self.carrier)[0]


def _closure_checks(A: FDAlgebra, U: np.ndarray) -> tuple[bool, bool]:
    F = A.field
    k = U.shape[1]
    if k == 0:
        return True, True
    left = all(linalg.rank(F, np.concatenate([U, F.matmul(A.left[i], U)], axis=1)) == k for i in range(A.n))
    right = all(linalg.rank(F, np.concatenate([U, F.matmul(A.right[i], U)], axis=1)) == k for i in range(A.n))
    return left, right


def _block_adapted_basis(A: FDAlgebra, vectors: np.ndarray) -> np.ndarray:
    """Basis of a sub-bimodule over the vertex idempotents, one block at a time.

    Pivots sit on the largest basis elements of each block, so short elements
    (idempotents first) stay available for a complement.
    """
    F = A.field
    cols = []
    for t in range(A.num_vertices):
        for s in range(A.num_vertices):
            blk = A.block(t, s)
            if not blk:
                continue
            sub = vectors[blk]
            if F.is_zero(sub):
                continue
            order = sorted(range(len(blk)), key=lambda i: (A.degree[blk[i]], blk[i]), reverse=True)
            R, piv = linalg.rref(F, sub[order].T)
            for r in range(len(piv)):
                v = F.zeros(A.n)
                v[[blk[i] for i in order]] = R[r]
                cols.append(v)
    if not cols:
        return F.zeros((A.n, 0))
    return np.array(cols, dtype=F.dtype).T


def two_sided_closure(A: FDAlgebra, gens: Sequence[np.ndarray]) -> np.ndarray:
    """Basis of ``A·gens·A``."""
    F = A.field
    vecs = []
    for g in gens:
        g = np.asarray(g, dtype=F.dtype).reshape(-1)
        if F.is_zero(g):
            continue
        lefts = F.matmul(A.left.reshape(A.n * A.n, A.n), g).reshape(A.n, A.n).T  # columns b_i g
        for i in range(A.n):
            x = lefts[:, i]
            if F.is_zero(x):
                continue
            vecs.append(F.matmul(A.right.reshape(A.n * A.n, A.n), x).reshape(A.n, A.n).T)
    if not vecs:
        return F.zeros((A.n, 0))
    return _block_adapted_basis(A, np.concatenate(vecs, axis=1))


def quotient_by_ideal(A: FDAlgebra, gens: Sequence[np.ndarray]) -> tuple[FDAlgebra, IdealModule, list[int]]:
    """``A/J`` with ``J = A·gens·A``; returns the quotient, ``J`` and the kept basis indices of ``A``."""
    F = A.field
    J = two_sided_closure(A, gens)
    ideal = IdealModule(A, J, True, True)
    if J.shape[1] == A.n:
        warnings.warn("the ideal is the whole algebra: quotient is zero", stacklevel=2)
    keep: list[int] = []
    for t in range(A.num_vertices):
        for s in range(A.num_vertices):
            blk = A.block(t, s)
            if not blk:
                continue
            sub = J[blk][:, [c for c in range(J.shape[1]) if not F.is_zero(J[blk, c])]]
            order = sorted(range(len(blk)), key=lambda i: (A.degree[blk[i]], blk[i]))
            comp = linalg.complement_indices(F, sub, len(blk), order)
            keep.extend(blk[i] for i in comp)
    keep.sort()
    dead_vertices = [v for v in range(A.num_vertices) if A.idempotents[v] not in keep]
    live = [v for v in range(A.num_vertices) if v not in dead_vertices]
    vmap = {v: i for i, v in enumerate(live)}
    m = len(keep)
    basis_change = F.zeros((A.n, A.n))
    for c, i in enumerate(keep):
        basis_change[i, c] = F.one
    if J.shape[1]:
        basis_change[:, m:] = J
    proj = linalg.inverse(F, basis_change)[:m]  # A coordinates -> quotient coordinates
    table = F.zeros((m, m, m))
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            vec = A.table[i, j]
            if not F.is_zero(vec):
                table[a, b] = F.matmul(proj, vec.reshape(-1, 1)).reshape(-1)
    Q = FDAlgebra(
        F,
        [A.labels[i] for i in keep],
        table,
        [A.vertices[v] for v in live],
        [keep.index(A.idempotents[v]) for v in live],
        [vmap[int(A.src[i])] for i in keep],
        [vmap[int(A.tgt[i])] for i in keep],
        [A.degree[i] for i in keep],
        [A.words[i] for i in keep] if A.words else None,
        name=f"{A.name}/J",
    )
    Q.quotient_projection = proj  # type: ignore[attr-defined]
    Q.quotient_of = A  # type: ignore[attr-defined]
    return Q, ideal, keep
