"""Finite-dimensional left modules given by explicit action matrices.

A module over an :class:`~fdimlab.algebra.FDAlgebra` ``A`` stores one
``d x d`` matrix per basis element of ``A``.  Every basis vector of the module
lies in a single vertex space ``e_v M``; ``vertex[i]`` records which.  Module
maps are plain matrices (target x source).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import FDAlgebra

__all__ = [
    "FDModule",
    "ModuleMap",
    "IsomorphismUndecided",
    "IndecomposabilityUndecided",
    "zero_module",
    "simple",
    "projective",
    "projective_sum",
    "regular_module",
    "from_generator_matrices",
    "direct_sum",
    "hom_space",
    "is_homomorphism",
    "is_isomorphic",
    "find_isomorphism",
    "is_indecomposable",
    "endomorphism_radical",
    "fingerprint",
    "EXHAUSTIVE_SEARCH_LIMIT",
]

# Largest hom/end space size p**h that is searched element by element over GF(p).
EXHAUSTIVE_SEARCH_LIMIT = 2**16


class IsomorphismUndecided(RuntimeError):
    """Bounded search over a large GF(p) hom space found no isomorphism and cannot rule one out."""


class IndecomposabilityUndecided(RuntimeError):
    """The endomorphism algebra is too large to search and no cheaper certificate applies."""


class FDModule:
    def __init__(self, algebra: FDAlgebra, vertex: Sequence[int], act: np.ndarray, name: str = "", check: bool = False):
        self.algebra = algebra
        self.field = algebra.field
        self.vertex = np.asarray(vertex, dtype=np.int64).reshape(-1)
        self.dim = int(self.vertex.size)
        self.act = act
        self.name = name
        if act.shape != (algebra.n, self.dim, self.dim):
            raise ValueError("action has the wrong shape")
        if check:
            self.check()

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"FDModule({label}dimvec={self.dim_vector})"

    @cached_property
    def blocks(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.vertex == v) for v in range(self.algebra.num_vertices)]

    @cached_property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(int(b.size) for b in self.blocks)

    def is_zero(self) -> bool:
        return self.dim == 0

    def generator_matrices(self) -> list[np.ndarray]:
        return [self.act[g] for g in self.algebra.generators]

    def check(self) -> None:
        """Action respects the table and the vertex grading; raises ``ValueError``."""
        A, F = self.algebra, self.field
        for v, i in enumerate(A.idempotents):
            want = F.zeros((self.dim, self.dim))
            for k in self.blocks[v]:
                want[k, k] = F.one
            if not np.array_equal(self.act[i], want):
                raise ValueError(f"idempotent {A.labels[i]} acts wrongly")
        for i in range(A.n):
            for j in range(A.n):
                lhs = F.matmul(self.act[i], self.act[j])
                vec = A.table[i, j]
                nz = np.flatnonzero(vec != 0)
                rhs = F.zeros((self.dim, self.dim))
                for k in nz:
                    rhs = rhs + vec[k] * self.act[k]
                if not np.array_equal(F.reduce(lhs), F.reduce(rhs)):
                    raise ValueError(f"action not multiplicative at ({A.labels[i]}, {A.labels[j]})")

    # -- constructions -------------------------------------------------

    def _pure_basis(self, U: np.ndarray) -> np.ndarray:
        """Vertex-pure basis of the column span of ``U`` (assumed closed under idempotents)."""
        F = self.field
        cols = []
        for v, blk in enumerate(self.blocks):
            if blk.size == 0:
                continue
            sub = U[blk]
            if F.is_zero(sub):
                continue
            B = linalg.column_basis(F, sub)
            full = F.zeros((self.dim, B.shape[1]))
            full[blk] = B
            cols.append(full)
        if not cols:
            return F.zeros((self.dim, 0))
        return np.concatenate(cols, axis=1)

    def submodule(self, U: np.ndarray, name: str = "") -> tuple["FDModule", np.ndarray]:
        """Submodule spanned by the columns of ``U`` and its inclusion matrix."""
        F = self.field
        B = self._pure_basis(np.asarray(U, dtype=F.dtype).reshape(self.dim, -1))
        k = B.shape[1]
        vert = np.array([int(self.vertex[np.flatnonzero(B[:, c] != 0)[0]]) for c in range(k)], dtype=np.int64)
        L = F.zeros((k, self.dim))
        for v in range(self.algebra.num_vertices):
            cols = np.flatnonzero(vert == v)
            if cols.size == 0:
                continue
            blk = self.blocks[v]
            sub = B[np.ix_(blk, cols)]
            piv = linalg.pivot_columns(F, sub.T)
            L[np.ix_(cols, blk[piv])] = linalg.inverse(F, sub[piv])
        act = F.reduce(F.matmul(F.matmul(L, self.act), B)) if k else F.zeros((self.algebra.n, 0, 0))
        sub_mod = FDModule(self.algebra, vert, act, name)
        return sub_mod, B

    def quotient(self, U: np.ndarray, name: str = "") -> tuple["FDModule", np.ndarray]:
        """``M/U`` for a submodule spanned by the columns of ``U``, with the projection matrix."""
        F = self.field
        B = self._pure_basis(np.asarray(U, dtype=F.dtype).reshape(self.dim, -1))
        keep = linalg.complement_indices(F, B, self.dim)
        m = len(keep)
        change = F.zeros((self.dim, self.dim))
        for c, i in enumerate(keep):
            change[i, c] = F.one
        change[:, m:] = B
        proj = linalg.inverse(F, change)[:m]
        E = change[:, :m]
        act = F.reduce(F.matmul(F.matmul(proj, self.act), E)) if m else F.zeros((self.algebra.n, 0, 0))
        return FDModule(self.algebra, self.vertex[keep], act, name), proj

    def radical_span(self) -> np.ndarray:
        """Columns spanning ``rad(A)·M``."""
        F = self.field
        mats = [self.act[g] for g in self.algebra.generators]
        if not mats or self.dim == 0:
            return F.zeros((self.dim, 0))
        S = np.concatenate(mats, axis=1)
        if F.is_zero(S):
            return F.zeros((self.dim, 0))
        return self._pure_basis(S)

    def socle_span(self) -> np.ndarray:
        """Columns spanning the vectors killed by ``rad(A)``."""
        F = self.field
        mats = [self.act[g] for g in self.algebra.generators]
        if not mats:
            return F.eye(self.dim)
        return self._pure_basis(linalg.nullspace(F, np.concatenate(mats, axis=0)))

    def radical_series(self) -> list[int]:
        """Dimensions of ``rad^k M`` for ``k = 0, 1, ...`` down to zero."""
        F = self.field
        dims = [self.dim]
        U = F.eye(self.dim)
        mats = [self.act[g] for g in self.algebra.generators]
        while U.shape[1]:
            if not mats:
                U = F.zeros((self.dim, 0))
            else:
                imgs = np.concatenate([F.matmul(m, U) for m in mats], axis=1)
                U = linalg.column_basis(F, imgs) if not F.is_zero(imgs) else F.zeros((self.dim, 0))
            dims.append(U.shape[1])
        return dims

    def socle_series(self) -> list[int]:
        """Dimensions of ``soc^k M`` for ``k = 0, 1, ...`` up to ``M``."""
        F = self.field
        mats = [self.act[g] for g in self.algebra.generators]
        dims = [0]
        if self.dim == 0:
            return dims
        if not mats:
            return [0, self.dim]
        U = F.zeros((self.dim, 0))
        while U.shape[1] < self.dim:
            # x lies in the next layer iff g·x ∈ U for every generator g
            C = linalg.nullspace(F, U.T).T if U.shape[1] else F.eye(self.dim)
            stacked = F.reduce(np.concatenate([F.matmul(C, m) for m in mats], axis=0))
            U = linalg.nullspace(F, stacked)
            if U.shape[1] == dims[-1]:
                break
            dims.append(U.shape[1])
        return dims

    def loewy_length(self) -> int:
        return len(self.radical_series()) - 1

    def direct_sum(self, other: "FDModule") -> "FDModule":
        return direct_sum([self, other])


def zero_module(A: FDAlgebra) -> FDModule:
    return FDModule(A, [], A.field.zeros((A.n, 0, 0)), "0")


def simple(A: FDAlgebra, v) -> FDModule:
    v = A.vertex_index(v)
    if not 0 <= v < A.num_vertices:
        raise IndexError(f"no vertex {v}")
    F = A.field
    act = F.zeros((A.n, 1, 1))
    act[A.idempotents[v], 0, 0] = F.one
    return FDModule(A, [v], act, f"S({A.vertices[v]})")


def projective(A: FDAlgebra, v) -> FDModule:
    """``A e_v`` with its basis of algebra basis elements starting at ``v``."""
    v = A.vertex_index(v)
    if not 0 <= v < A.num_vertices:
        raise IndexError(f"no vertex {v}")
    col = A.column(v)
    idx = np.array(col, dtype=np.int64)
    act = np.ascontiguousarray(A.left[:, idx][:, :, idx])
    return FDModule(A, A.tgt[idx], act, f"P({A.vertices[v]})")


def projective_sum(A: FDAlgebra, verts: Sequence[int]) -> FDModule:
    """``⊕ A e_v`` in the given order (summands are not re-sorted)."""
    if not verts:
        return zero_module(A)
    return direct_sum([projective(A, v) for v in verts])


def regular_module(A: FDAlgebra) -> FDModule:
    return FDModule(A, A.tgt, np.ascontiguousarray(A.left), "A")


def direct_sum(mods: Sequence[FDModule]) -> FDModule:
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    A = mods[0].algebra
    F = A.field
    d = sum(m.dim for m in mods)
    act = F.zeros((A.n, d, d))
    o = 0
    for m in mods:
        if m.algebra is not A:
            raise ValueError("modules over different algebras")
        act[:, o : o + m.dim, o : o + m.dim] = m.act
        o += m.dim
    vert = np.concatenate([m.vertex for m in mods]) if d else np.zeros(0, dtype=np.int64)
    return FDModule(A, vert, act, " ⊕ ".join(m.name or "?" for m in mods))


def from_generator_matrices(A: FDAlgebra, dimvec: Sequence[int], mats: Sequence[np.ndarray], check: bool = True) -> FDModule:
    """Module with the given generator actions; raises ``ValueError`` if the relations fail.

    ``mats[r]`` is the full ``d x d`` matrix of generator ``A.generators[r]``
    in the basis ordered by vertex.
    """
    F = A.field
    vert = np.repeat(np.arange(A.num_vertices), dimvec)
    d = int(vert.size)
    act = F.zeros((A.n, d, d))
    for v, i in enumerate(A.idempotents):
        for k in np.flatnonzero(vert == v):
            act[i, k, k] = F.one
    words, expr = A.generator_words
    pos = {g: r for r, g in enumerate(A.generators)}
    cache: dict[tuple[int, ...], np.ndarray] = {}

    def word_matrix(w):
        if w not in cache:
            head = np.asarray(mats[pos[w[0]]], dtype=F.dtype)
            cache[w] = head if len(w) == 1 else F.matmul(head, word_matrix(w[1:]))
        return cache[w]

    for r, b in enumerate(A.radical_indices):
        acc = F.zeros((d, d))
        for c in np.flatnonzero(expr[:, r] != 0):
            acc = acc + expr[c, r] * word_matrix(words[c])
        act[b] = F.reduce(acc)
    M = FDModule(A, vert, act)
    if check:
        M.check()
    return M


@dataclass(frozen=True)
class ModuleMap:
    source: FDModule
    target: FDModule
    matrix: np.ndarray  # target.dim x source.dim

    def check(self) -> None:
        if not is_homomorphism(self.source, self.target, self.matrix):
            raise ValueError("matrix does not intertwine the actions")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self ∘ other``."""
        F = self.source.field
        return ModuleMap(other.source, self.target, F.matmul(self.matrix, other.matrix))

    def rank(self) -> int:
        return linalg.rank(self.source.field, self.matrix)

    def kernel(self) -> tuple[FDModule, np.ndarray]:
        F = self.source.field
        M = self.source
        cols = []
        for v, blk in enumerate(M.blocks):
            if blk.size == 0:
                continue
            tb = self.target.blocks[v]
            N = linalg.nullspace(F, self.matrix[np.ix_(tb, blk)]) if tb.size else F.eye(blk.size)
            full = F.zeros((M.dim, N.shape[1]))
            full[blk] = N
            cols.append(full)
        U = np.concatenate(cols, axis=1) if cols else F.zeros((M.dim, 0))
        return M.submodule(U)

    def image(self) -> tuple[FDModule, np.ndarray]:
        return self.target.submodule(self.matrix)

    def cokernel(self) -> tuple[FDModule, np.ndarray]:
        return self.target.quotient(self.matrix)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim


def is_homomorphism(M: FDModule, N: FDModule, phi: np.ndarray) -> bool:
    F = M.field
    for g in range(M.algebra.n):
        if not np.array_equal(F.reduce(F.matmul(phi, M.act[g])), F.reduce(F.matmul(N.act[g], phi))):
            return False
    return True


def hom_space(M: FDModule, N: FDModule) -> list[np.ndarray]:
    """Basis of ``Hom_A(M, N)`` as ``N.dim x M.dim`` matrices."""
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    A, F = M.algebra, M.field
    nv = A.num_vertices
    offs = [0]
    for v in range(nv):
        offs.append(offs[-1] + N.blocks[v].size * M.blocks[v].size)
    total = offs[-1]
    if total == 0:
        return []
    rows = []
    for g in A.generators:
        u, w = int(A.src[g]), int(A.tgt[g])
        Mu, Mw, Nu, Nw = M.blocks[u], M.blocks[w], N.blocks[u], N.blocks[w]
        if Nw.size == 0 or Mu.size == 0:
            continue
        Mg = M.act[g][np.ix_(Mw, Mu)]  # |Mw| x |Mu|
        Ng = N.act[g][np.ix_(Nw, Nu)]  # |Nw| x |Nu|
        # phi_w Mg - Ng phi_u = 0, unknowns row-major vec(phi_v)
        eq = F.zeros((Nw.size * Mu.size, total))
        if Mw.size:
            eq[:, offs[w] : offs[w + 1]] = np.kron(F.eye(Nw.size), Mg.T)
        if Nu.size:
            eq[:, offs[u] : offs[u + 1]] = eq[:, offs[u] : offs[u + 1]] - np.kron(Ng, F.eye(Mu.size))
        rows.append(eq)
    if rows:
        system = F.reduce(np.concatenate(rows, axis=0))
        sol = linalg.nullspace(F, system)
    else:
        sol = F.eye(total)
    out = []
    for c in range(sol.shape[1]):
        phi = F.zeros((N.dim, M.dim))
        for v in range(nv):
            a, b = N.blocks[v], M.blocks[v]
            if a.size and b.size:
                phi[np.ix_(a, b)] = sol[offs[v] : offs[v + 1], c].reshape(a.size, b.size)
        out.append(phi)
    return out


def fingerprint(M: FDModule) -> tuple:
    """Isomorphism invariant: dimension vector, generator ranks, radical and socle series."""
    F = M.field
    ranks = tuple(linalg.rank(F, M.act[g]) for g in M.algebra.generators)
    return (M.dim_vector, ranks, tuple(M.radical_series()), tuple(M.socle_series()))


def _blocks_invertible(M: FDModule, phi: np.ndarray) -> bool:
    F = M.field
    for blk in M.blocks:
        if blk.size and linalg.rank(F, phi[np.ix_(blk, blk)]) < blk.size:
            return False
    return True


def _combine(F, basis: list[np.ndarray], coeffs) -> np.ndarray:
    out = F.zeros(basis[0].shape)
    for c, b in zip(coeffs, basis):
        if c != 0:
            out = out + c * b
    return F.reduce(out)


def _is_nilpotent(F, x: np.ndarray) -> bool:
    d = x.shape[0]
    y = x
    k = 1
    while k < d:
        y = F.matmul(y, y)
        k *= 2
    return F.is_zero(y)


def find_isomorphism(M: FDModule, N: FDModule, seed: int = 0, trials: int = 24) -> np.ndarray | None:
    """An invertible intertwiner ``M -> N``, or ``None`` when none exists.

    Over QQ a negative answer rests on random evaluation of the determinant
    (coefficients up to 2**20, so each trial misses a nonzero determinant with
    probability at most ``dim/2**20``).  Over GF(p) the hom space is searched
    exhaustively up to ``EXHAUSTIVE_SEARCH_LIMIT`` elements; above that a
    failed random search raises :class:`IsomorphismUndecided`.
    """
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    F = M.field
    if M.dim_vector != N.dim_vector:
        return None
    if M.dim == 0:
        return F.zeros((0, 0))
    if fingerprint(M) != fingerprint(N):
        return None
    H = hom_space(M, N)
    if not H:
        return None
    if len(hom_space(N, M)) != len(H):
        return None
    rng = np.random.default_rng(seed)
    for b in H:
        if _blocks_invertible(M, b):
            return b
    p = F.characteristic
    if p == 0:
        for _ in range(trials):
            phi = _combine(F, H, F.random(rng, len(H), bound=2**20))
            if _blocks_invertible(M, phi):
                return phi
        return None
    h = len(H)
    if p**h <= EXHAUSTIVE_SEARCH_LIMIT:
        return _exhaustive_iso(M, H, p)
    for _ in range(max(trials, 64)):
        phi = _combine(F, H, F.random(rng, h))
        if _blocks_invertible(M, phi):
            return phi
    raise IsomorphismUndecided(f"hom space of size {p}^{h} too large to search")


def _exhaustive_iso(M: FDModule, H: list[np.ndarray], p: int) -> np.ndarray | None:
    h = len(H)
    stack = np.array(H, dtype=np.int64).reshape(h, -1)
    coeffs = np.array(list(itertools.product(range(p), repeat=h)), dtype=np.int64)
    ok = np.ones(len(coeffs), dtype=bool)
    allm = (coeffs @ stack % p).reshape(len(coeffs), M.dim, M.dim)
    for blk in M.blocks:
        if blk.size == 0:
            continue
        sub = allm[:, blk][:, :, blk]
        ok &= linalg.batched_rank_mod_p(sub, p) == blk.size
    hits = np.flatnonzero(ok)
    return allm[hits[0]] if hits.size else None


def is_isomorphic(M: FDModule, N: FDModule, seed: int = 0) -> bool:
    return find_isomorphism(M, N, seed) is not None


def endomorphism_radical(M: FDModule, E: list[np.ndarray] | None = None) -> list[np.ndarray] | None:
    """Basis of ``rad End(M)`` by the trace form, or ``None`` where the trace form is unreliable.

    Valid in characteristic 0 and in characteristic ``p > dim M``: there an
    endomorphism ``x`` is in the radical iff ``tr(xy) = 0`` for every ``y``.
    """
    F = M.field
    p = F.characteristic
    if p and p <= M.dim:
        return None
    E = hom_space(M, M) if E is None else E
    h = len(E)
    G = F.zeros((h, h))
    for i in range(h):
        for j in range(h):
            G[i, j] = F(np.trace(F.matmul(E[i], E[j])))
    N = linalg.nullspace(F, G)
    return [_combine(F, E, N[:, c]) for c in range(N.shape[1])]


def is_indecomposable(M: FDModule, seed: int = 0, trials: int = 64) -> bool:
    """Whether ``End(M)`` is local (no idempotents but 0 and 1)."""
    F = M.field
    if M.dim == 0:
        return False
    if M.dim == 1:
        return True
    top = M.dim - M.radical_span().shape[1]
    if top == 1:
        return True
    if M.socle_span().shape[1] == 1:
        return True
    E = hom_space(M, M)
    if len(E) == 1:
        return True
    rad = endomorphism_radical(M, E)
    if rad is not None:
        if len(E) - len(rad) == 1:
            return True
        found = _fitting_split(M, E, seed, trials)
        if found:
            return False
        return _residue_is_division(M, E, rad)
    p = F.characteristic
    h = len(E)
    if p**h <= EXHAUSTIVE_SEARCH_LIMIT:
        stack = np.array(E, dtype=np.int64).reshape(h, -1)
        coeffs = np.array(list(itertools.product(range(p), repeat=h)), dtype=np.int64)
        allm = (coeffs @ stack % p).reshape(len(coeffs), M.dim, M.dim)
        sq = np.matmul(allm, allm) % p
        idem = np.all((sq == allm).reshape(len(coeffs), -1), axis=1)
        eye = np.eye(M.dim, dtype=np.int64)
        zero = ~np.any(allm.reshape(len(coeffs), -1), axis=1)
        one = np.all((allm == eye).reshape(len(coeffs), -1), axis=1)
        return not np.any(idem & ~zero & ~one)
    if _fitting_split(M, E, seed, trials):
        return False
    raise IndecomposabilityUndecided(f"End(M) has {p}^{h} elements")


def _fitting_split(M: FDModule, E: list[np.ndarray], seed: int, trials: int) -> bool:
    """Random endomorphisms that are neither nilpotent nor invertible certify a splitting."""
    F = M.field
    rng = np.random.default_rng(seed)
    bound = 3 if F.characteristic == 0 else 5
    for _ in range(trials):
        x = _combine(F, E, F.random(rng, len(E), bound=bound))
        r = linalg.rank(F, x)
        if r == M.dim or _is_nilpotent(F, x):
            continue
        return True
    return False


def _residue_is_division(M: FDModule, E: list[np.ndarray], rad: list[np.ndarray]) -> bool:
    """Decide whether ``End(M)/rad`` is a field when it is larger than k (char 0 or p > dim).

    A commutative semisimple quotient is a field iff some element has an
    irreducible minimal polynomial of full degree; non-commutative quotients
    reaching here are matrix algebras over division rings and the random
    Fitting search would almost surely have split them, so they raise.
    """
    import sympy

    F = M.field
    h, r = len(E), len(rad)
    q = h - r
    R = np.array([x.reshape(-1) for x in rad], dtype=F.dtype).T if rad else F.zeros((M.dim**2, 0))
    comm = all(
        linalg.rank(F, np.concatenate([R, F.reduce(F.matmul(a, b) - F.matmul(b, a)).reshape(-1, 1)], axis=1)) == r
        for a in E
        for b in E
    )
    if not comm:
        raise IndecomposabilityUndecided("non-commutative End(M)/rad without a visible splitting")
    rng = np.random.default_rng(1)
    for _ in range(16):
        x = _combine(F, E, F.random(rng, h, bound=7))
        powers = [np.eye(M.dim, dtype=np.int64).astype(F.dtype).reshape(-1)]
        cur = powers[0].reshape(M.dim, M.dim)
        for _k in range(q):
            cur = F.reduce(F.matmul(cur, x))
            powers.append(cur.reshape(-1))
        # minimal polynomial of x modulo rad
        S = np.concatenate([R, np.array(powers, dtype=F.dtype).T], axis=1)
        N = linalg.nullspace(F, S)
        if N.shape[1] == 0:
            continue
        coeffs = None
        for c in range(N.shape[1]):
            tail = N[r:, c]
            deg = max(np.flatnonzero(tail != 0), default=-1)
            if deg >= 0 and (coeffs is None or deg < len(coeffs) - 1):
                coeffs = list(tail[: deg + 1])
        if coeffs is None or len(coeffs) - 1 < q:
            continue
        t = sympy.Symbol("t")
        poly = sympy.Poly(list(reversed([sympy.Rational(str(c)) for c in coeffs])), t)
        if F.characteristic:
            poly = sympy.Poly(poly.as_expr(), t, modulus=F.characteristic)
        return poly.is_irreducible
    raise IndecomposabilityUndecided("could not find a primitive element of End(M)/rad")
