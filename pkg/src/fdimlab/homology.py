"""Projective covers, minimal resolutions, projective dimension and Ext."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import FDAlgebra
from .modules import (
    FDModule,
    IsomorphismUndecided,
    ModuleMap,
    find_isomorphism,
    fingerprint,
    projective,
    projective_sum,
    simple,
)

__all__ = [
    "StructureParts",
    "structure_parts",
    "projective_cover",
    "Resolution",
    "minimal_resolution",
    "Finite",
    "InfiniteCertified",
    "UnknownAtCap",
    "PdResult",
    "projective_dimension",
    "ext_dim",
    "ext_dim_hom_complex",
    "is_projective",
    "global_dimension",
    "GlobalDimension",
    "loewy_length",
    "default_resolution_cap",
    "syzygy",
]

log = logging.getLogger(__name__)


def default_resolution_cap(A: FDAlgebra) -> int:
    return 2 * A.n + 4


@dataclass(frozen=True)
class StructureParts:
    radical: FDModule
    radical_inclusion: np.ndarray
    top: FDModule
    top_projection: np.ndarray
    socle: FDModule
    socle_inclusion: np.ndarray


def structure_parts(M: FDModule) -> StructureParts:
    rad, ri = M.submodule(M.radical_span(), name=f"rad {M.name}".strip())
    top, tp = M.quotient(M.radical_span(), name=f"top {M.name}".strip())
    soc, si = M.submodule(M.socle_span(), name=f"soc {M.name}".strip())
    return StructureParts(rad, ri, top, tp, soc, si)


def loewy_length(M: FDModule) -> int:
    return M.loewy_length()


def projective_cover(M: FDModule) -> tuple[FDModule, ModuleMap, list[int]]:
    """``(P, epi, summand_vertices)`` with ``P = ⊕ A e_v`` over the top of ``M``."""
    if M.dim == 0:
        raise ValueError("projective cover of the zero module")
    A, F = M.algebra, M.field
    R = M.radical_span()
    tops = linalg.complement_indices(F, R, M.dim)
    tops.sort(key=lambda i: (int(M.vertex[i]), i))
    verts = [int(M.vertex[i]) for i in tops]
    P = projective_sum(A, verts)
    cols = []
    for i, v in zip(tops, verts):
        for b in A.column(v):
            cols.append(M.act[b][:, i])
    epi = np.array(cols, dtype=F.dtype).T.reshape(M.dim, P.dim)
    return P, ModuleMap(P, M, epi), verts


def syzygy(M: FDModule) -> FDModule:
    if M.dim == 0:
        return M
    P, epi, _ = projective_cover(M)
    return epi.kernel()[0]


@dataclass
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> M``.

    ``terms[i]`` lists the vertices of the indecomposable summands of ``P_i``;
    ``differentials[i]`` is ``P_{i+1} -> P_i``; ``syzygies[i]`` is ``Ω^i M``
    (``syzygies[0] = M``) with its inclusion into ``P_{i-1}``.
    """

    module: FDModule
    terms: list[list[int]] = field(default_factory=list)
    modules: list[FDModule] = field(default_factory=list)
    augmentation: ModuleMap | None = None
    differentials: list[ModuleMap] = field(default_factory=list)
    syzygies: list[FDModule] = field(default_factory=list)
    inclusions: list[np.ndarray] = field(default_factory=list)
    minimal: bool = True
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.terms) - 1 if not self.truncated else len(self.terms)

    def multiplicities(self, i: int) -> list[int]:
        nv = self.module.algebra.num_vertices
        if i >= len(self.terms):
            return [0] * nv
        return [self.terms[i].count(v) for v in range(nv)]

    def finite(self) -> bool:
        return not self.truncated

    def extend(self) -> bool:
        """Compute one more step; returns ``False`` once the resolution has ended."""
        if not self.truncated and self.terms:
            return False
        A = self.module.algebra
        K = self.syzygies[-1]
        if K.dim == 0:
            self.truncated = False
            return False
        P, epi, verts = projective_cover(K)
        self.terms.append(verts)
        self.modules.append(P)
        if len(self.terms) == 1:
            self.augmentation = epi
        else:
            incl = self.inclusions[-1]
            prev = self.modules[-2]
            self.differentials.append(ModuleMap(P, prev, A.field.reduce(A.field.matmul(incl, epi.matrix))))
        nxt, incl = epi.kernel()
        nxt.name = f"Ω^{len(self.terms)}({self.module.name})" if self.module.name else ""
        self.syzygies.append(nxt)
        self.inclusions.append(incl)
        self.truncated = nxt.dim != 0
        return self.truncated

    def euler_characteristic(self) -> list[int]:
        nv = self.module.algebra.num_vertices
        out = [0] * nv
        for i, P in enumerate(self.modules):
            for v in range(nv):
                out[v] += (-1) ** i * P.dim_vector[v]
        return out


def minimal_resolution(M: FDModule, cap: int | None = None) -> Resolution:
    """Iterated projective covers; ``cap`` bounds the number of projective terms minus one."""
    cap = default_resolution_cap(M.algebra) if cap is None else cap
    if cap < 0:
        raise ValueError("cap must be non-negative")
    res = Resolution(M, syzygies=[M], inclusions=[M.field.eye(M.dim)], truncated=M.dim != 0)
    steps = 0
    while res.truncated and steps <= cap:
        res.extend()
        steps += 1
    return res


@dataclass(frozen=True)
class Finite:
    n: int

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class InfiniteCertified:
    """``Ω^j ≅ Ω^i`` with ``1 <= i < j``: the syzygies repeat forever."""

    i: int
    j: int

    def __str__(self):
        return f"inf (Ω^{self.j} ≅ Ω^{self.i})"


@dataclass(frozen=True)
class UnknownAtCap:
    cap: int

    def __str__(self):
        return f"unknown (cap {self.cap})"


PdResult = Finite | InfiniteCertified | UnknownAtCap


def projective_dimension(M: FDModule, cap: int | None = None, resolution: Resolution | None = None) -> PdResult:
    """Projective dimension by minimal resolution with a syzygy-repetition certificate.

    Pairs of nonzero syzygies ``Ω^i, Ω^j`` (``1 <= i < j``) with equal invariant
    fingerprints are tested for isomorphism; an isomorphism makes the
    resolution periodic from ``i`` on.
    """
    A = M.algebra
    cap = default_resolution_cap(A) if cap is None else cap
    res = resolution or Resolution(M, syzygies=[M], inclusions=[M.field.eye(M.dim)], truncated=M.dim != 0)
    if M.dim == 0:
        return Finite(0)
    seen: dict[tuple, list[int]] = {}
    k = 1
    while True:
        while len(res.syzygies) <= k and res.truncated:
            res.extend()
        if k >= len(res.syzygies):
            return Finite(len(res.terms) - 1)
        Om = res.syzygies[k]
        if Om.dim == 0:
            return Finite(k - 1)
        fp = fingerprint(Om)
        for i in seen.get(fp, []):
            try:
                if find_isomorphism(res.syzygies[i], Om) is not None:
                    return InfiniteCertified(i, k)
            except IsomorphismUndecided:
                log.debug("undecided isomorphism between syzygies %d and %d", i, k)
        seen.setdefault(fp, []).append(k)
        if k >= cap:
            return UnknownAtCap(cap)
        k += 1


def is_projective(M: FDModule) -> bool:
    """First syzygy is zero."""
    if M.dim == 0:
        return True
    P, epi, _ = projective_cover(M)
    return P.dim == M.dim


def ext_dim(M: FDModule, j, i: int, resolution: Resolution | None = None) -> int:
    """``dim Ext^i(M, S_j)``: the multiplicity of ``A e_j`` in the ``i``-th term."""
    A = M.algebra
    j = A.vertex_index(j)
    res = resolution or minimal_resolution(M, cap=i + 1)
    while res.truncated and len(res.terms) <= i:
        res.extend()
    if len(res.terms) <= i:
        if res.truncated:
            raise ValueError(f"resolution truncated before step {i}")
        return 0
    return res.terms[i].count(j)


def _hom_from_projective(res: Resolution, i: int, N: FDModule) -> list[int]:
    """Offsets of ``Hom(P_i, N) ≅ ⊕ e_v N`` (one block per summand)."""
    offs = [0]
    for v in res.terms[i]:
        offs.append(offs[-1] + N.blocks[v].size)
    return offs


def _dual_differential(res: Resolution, i: int, N: FDModule) -> np.ndarray:
    """Matrix of ``Hom(P_{i-1}, N) -> Hom(P_i, N)``, ``f -> f∘d_i``."""
    A, F = N.algebra, N.field
    src_offs = _hom_from_projective(res, i - 1, N)
    tgt_offs = _hom_from_projective(res, i, N)
    D = F.zeros((tgt_offs[-1], src_offs[-1]))
    d = res.differentials[i - 1].matrix if i >= 1 else None
    P_prev = res.modules[i - 1]
    # summand positions inside P_{i-1}
    starts = [0]
    for v in res.terms[i - 1]:
        starts.append(starts[-1] + len(A.column(v)))
    gen_pos = [0]
    for v in res.terms[i]:
        gen_pos.append(gen_pos[-1] + len(A.column(v)))
    for l, w in enumerate(res.terms[i]):
        col = d[:, gen_pos[l] + A.column(w).index(A.idempotents[w])]
        rows_l = N.blocks[w]
        for k, v in enumerate(res.terms[i - 1]):
            seg = col[starts[k] : starts[k + 1]]
            if F.is_zero(seg):
                continue
            acc = F.zeros((N.dim, N.dim))
            for c, b in zip(seg, A.column(v)):
                if c != 0:
                    acc = acc + c * N.act[b]
            acc = F.reduce(acc)
            D[tgt_offs[l] : tgt_offs[l + 1], src_offs[k] : src_offs[k + 1]] = acc[np.ix_(rows_l, N.blocks[v])]
    return D


def _augmentation_dual_rank(res: Resolution, N: FDModule) -> int:
    """Rank of ``Hom(M, N) -> Hom(P_0, N)`` equals ``dim Hom(M, N)``; it is injective."""
    from .modules import hom_space

    return len(hom_space(res.module, N))


def ext_dim_hom_complex(M: FDModule, N: FDModule, i: int, resolution: Resolution | None = None) -> int:
    """``dim Ext^i(M, N)`` as cohomology of ``Hom(P_•, N)``."""
    F = M.field
    res = resolution or minimal_resolution(M, cap=i + 1)
    while res.truncated and len(res.terms) <= i + 1:
        res.extend()
    if len(res.terms) <= i:
        if res.truncated:
            raise ValueError(f"resolution truncated before step {i}")
        return 0
    dim_i = _hom_from_projective(res, i, N)[-1]
    if len(res.terms) > i + 1:
        out_rank = linalg.rank(F, _dual_differential(res, i + 1, N))
    elif res.truncated:
        raise ValueError(f"resolution truncated before step {i + 1}")
    else:
        out_rank = 0
    in_rank = linalg.rank(F, _dual_differential(res, i, N)) if i >= 1 else 0
    return dim_i - out_rank - in_rank


@dataclass(frozen=True)
class GlobalDimension:
    value: PdResult
    per_simple: tuple[PdResult, ...]

    def __str__(self):
        return str(self.value)


def global_dimension(A: FDAlgebra, cap: int | None = None) -> GlobalDimension:
    """Maximum of the projective dimensions of the simples."""
    pds = tuple(projective_dimension(simple(A, v), cap) for v in range(A.num_vertices))
    inf = [p for p in pds if isinstance(p, InfiniteCertified)]
    unk = [p for p in pds if isinstance(p, UnknownAtCap)]
    if inf:
        value: PdResult = inf[0]
    elif unk:
        value = unk[0]
    else:
        value = Finite(max((p.n for p in pds), default=0))
    return GlobalDimension(value, pds)


def resolution_is_minimal(res: Resolution) -> bool:
    """Every differential lands in the radical: no component hits a summand generator."""
    A = res.module.algebra
    for i, d in enumerate(res.differentials):
        pos = 0
        for v in res.terms[i]:
            col = A.column(v)
            if not res.module.field.is_zero(d.matrix[pos + col.index(A.idempotents[v])]):
                return False
            pos += len(col)
    return True


def resolution_is_exact(res: Resolution) -> bool:
    """Rank bookkeeping: ``rank d_{i+1} + rank d_i = dim P_i`` and the augmentation is onto."""
    F = res.module.field
    if res.augmentation is None:
        return res.module.dim == 0
    ranks = [res.augmentation.rank()] + [d.rank() for d in res.differentials]
    if ranks[0] != res.module.dim:
        return False
    for i, P in enumerate(res.modules):
        if i + 1 < len(ranks):
            incoming = ranks[i + 1]
        elif res.truncated:
            continue
        else:
            incoming = 0
        if ranks[i] + incoming != P.dim:
            return False
    for i, d in enumerate(res.differentials):
        prev = res.augmentation.matrix if i == 0 else res.differentials[i - 1].matrix
        if not F.is_zero(F.reduce(F.matmul(prev, d.matrix))):
            return False
    return True


__all__ += ["resolution_is_minimal", "resolution_is_exact"]
