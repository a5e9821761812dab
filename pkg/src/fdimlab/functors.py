"""The corner functor ``F = (1-e)·-`` and its left adjoint ``G = A(1-e) ⊗_Γ -``."""

from __future__ import annotations

import numpy as np

from .algebra import Corner, FDAlgebra
from .modules import FDModule, ModuleMap

__all__ = ["functor_F", "functor_G", "adjunction_unit", "to_quotient_module"]


def functor_F(corner: Corner, M: FDModule) -> FDModule:
    """``(1-e)M`` as a Γ-module."""
    if M.algebra is not corner.ambient:
        raise ValueError("module is not over the ambient algebra")
    keep = np.flatnonzero(np.isin(M.vertex, corner.vertex_map))
    vmap = {v: i for i, v in enumerate(corner.vertex_map)}
    emb = np.array(corner.embed, dtype=np.int64)
    act = np.ascontiguousarray(M.act[emb][:, keep][:, :, keep]) if emb.size else M.field.zeros((0, keep.size, keep.size))
    verts = [vmap[int(v)] for v in M.vertex[keep]]
    return FDModule(corner.corner, verts, act, f"F({M.name})" if M.name else "")


def functor_G(corner: Corner, X: FDModule) -> FDModule:
    """``A(1-e) ⊗_Γ X`` as the quotient of ``A(1-e) ⊗_k X`` by the balancing relations."""
    return _tensor(corner, X)[0]


def adjunction_unit(corner: Corner, X: FDModule) -> ModuleMap:
    """``X -> F(G(X))``, ``x -> e_x ⊗ x``; an isomorphism for every Γ-module ``X``."""
    GX, index, proj = _tensor(corner, X)
    FGX = functor_F(corner, GX)
    keep = np.flatnonzero(np.isin(GX.vertex, corner.vertex_map))
    A = corner.ambient
    F = A.field
    gv = list(corner.vertex_map)
    mat = F.zeros((FGX.dim, X.dim))
    for x in range(X.dim):
        e = A.idempotents[gv[int(X.vertex[x])]]
        mat[:, x] = proj[keep, index[(e, x)]]
    return ModuleMap(X, FGX, mat)


def _tensor(corner: Corner, X: FDModule):
    A, G = corner.ambient, corner.corner
    F = A.field
    if X.algebra is not G:
        raise ValueError("module is not over the corner algebra")
    gv = list(corner.vertex_map)
    # basis pairs (a, x) with src(a) = vertex(x); a ∈ A(1-e)
    pairs = [(a, x) for x in range(X.dim) for a in A.column(gv[int(X.vertex[x])])]
    index = {p: i for i, p in enumerate(pairs)}
    D = len(pairs)
    act = F.zeros((A.n, D, D))
    for c, (a, x) in enumerate(pairs):
        for b in range(A.n):
            vec = A.sparse[b].get(a)
            if not vec:
                continue
            for k, coef in vec.items():
                act[b, index[(k, x)], c] += coef
    act = F.reduce(act)
    V = FDModule(A, [int(A.tgt[a]) for a, _ in pairs], act)
    rels = []
    for gamma in G.generators:
        ag = corner.embed[gamma]
        s, t = int(A.src[ag]), int(A.tgt[ag])
        for x in range(X.dim):
            if gv[int(X.vertex[x])] != s:
                continue
            gx = X.act[gamma][:, x]
            for a in A.column(t):
                r = F.zeros(D)
                for k, coef in A.sparse[a].get(ag, {}).items():
                    r[index[(k, x)]] += coef
                for y in np.flatnonzero(gx != 0):
                    r[index[(a, int(y))]] -= gx[y]
                r = F.reduce(r)
                if not F.is_zero(r):
                    rels.append(r)
    R = np.array(rels, dtype=F.dtype).T if rels else F.zeros((D, 0))
    out, proj = V.quotient(R)
    out.name = f"G({X.name})" if X.name else ""
    return out, index, proj


def to_quotient_module(M: FDModule, Q: FDAlgebra, keep) -> FDModule:
    """View an ``A``-module killed by ``J`` as a module over ``Q = A/J``.

    ``keep`` lists the basis indices of ``A`` that survive in ``Q``.
    """
    A = M.algebra
    F = M.field
    if getattr(Q, "quotient_of", None) is not A:
        raise ValueError("Q is not a quotient of the module's algebra")
    proj = Q.quotient_projection
    # J-part of each basis element b is b - Σ proj[:, b]_q keep_q; it must act as zero
    for b in range(A.n):
        acc = M.act[b].copy()
        for q in np.flatnonzero(proj[:, b] != 0):
            acc = acc - proj[q, b] * M.act[keep[q]]
        if not F.is_zero(F.reduce(acc)):
            raise ValueError("the ideal does not annihilate the module")
    live = [A.vertices.index(v) for v in Q.vertices]
    if any(M.dim_vector[v] for v in range(A.num_vertices) if v not in live):
        raise ValueError("module is supported on a vertex killed by the quotient")
    vmap = {v: i for i, v in enumerate(live)}
    act = np.ascontiguousarray(M.act[np.array(keep, dtype=np.int64)])
    return FDModule(Q, [vmap[int(v)] for v in M.vertex], act, M.name)
