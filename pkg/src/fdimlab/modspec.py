"""A tiny language for naming modules on the command line.

``S(v)``, ``P(v)``, ``rad P(v)``, ``top P(v)``, ``soc P(v)``, ``P(v)/soc`` and
``coker P(u)->P(v)``.  The cokernel uses the map ``x -> x·h`` where ``h`` is
the sum of the basis paths from ``v`` to ``u`` (every coefficient 1); when
that hom space has dimension above one, :func:`coker_choices` compares the
cokernels of the individual basis maps.
"""

from __future__ import annotations

import re

import numpy as np

from .algebra import FDAlgebra
from .homology import structure_parts
from .modules import FDModule, ModuleMap, find_isomorphism, projective, simple

__all__ = ["ModuleSpecError", "parse_module", "projective_map", "coker_choices"]

_V = r"\s*([A-Za-z0-9_]+)\s*"


class ModuleSpecError(ValueError):
    pass


def projective_map(A: FDAlgebra, u, v, h: np.ndarray) -> ModuleMap:
    """``A e_u -> A e_v``, ``x -> x·h`` for ``h ∈ e_u A e_v``."""
    F = A.field
    u, v = A.vertex_index(u), A.vertex_index(v)
    Pu, Pv = projective(A, u), projective(A, v)
    cu, cv = A.column(u), A.column(v)
    pos = {b: i for i, b in enumerate(cv)}
    mat = F.zeros((len(cv), len(cu)))
    for j, a in enumerate(cu):
        for hb in np.flatnonzero(h != 0):
            for k, c in A.sparse[a].get(int(hb), {}).items():
                mat[pos[k], j] += c * h[hb]
    return ModuleMap(Pu, Pv, F.reduce(mat))


def _hom_basis(A: FDAlgebra, u: int, v: int) -> list[int]:
    return A.block(u, v)


def coker_choices(A: FDAlgebra, u, v) -> list[FDModule]:
    u, v = A.vertex_index(u), A.vertex_index(v)
    out = []
    for b in _hom_basis(A, u, v):
        M, _ = projective_map(A, u, v, A.basis_vector(b)).cokernel()
        M.name = f"coker({A.labels[b]})"
        out.append(M)
    return out


def parse_module(A: FDAlgebra, text: str) -> FDModule:
    t = text.strip()

    def vert(s):
        try:
            return A.vertex_index(s)
        except ValueError:
            raise ModuleSpecError(f"unknown vertex {s!r}") from None

    m = re.fullmatch(rf"S\({_V}\)", t)
    if m:
        return simple(A, vert(m.group(1)))
    m = re.fullmatch(rf"P\({_V}\)", t)
    if m:
        return projective(A, vert(m.group(1)))
    m = re.fullmatch(rf"(rad|top|soc)\s+P\({_V}\)", t)
    if m:
        P = projective(A, vert(m.group(2)))
        parts = structure_parts(P)
        return {"rad": parts.radical, "top": parts.top, "soc": parts.socle}[m.group(1)]
    m = re.fullmatch(rf"P\({_V}\)\s*/\s*soc", t)
    if m:
        P = projective(A, vert(m.group(1)))
        Q, _ = P.quotient(P.socle_span(), name=f"P({m.group(1)})/soc")
        return Q
    m = re.fullmatch(rf"coker\s+P\({_V}\)\s*->\s*P\({_V}\)", t)
    if m:
        u, v = vert(m.group(1)), vert(m.group(2))
        basis = _hom_basis(A, u, v)
        if not basis:
            raise ModuleSpecError(f"Hom(P({m.group(1)}), P({m.group(2)})) is zero")
        h = A.field.zeros(A.n)
        for b in basis:
            h[b] = A.field.one
        M, _ = projective_map(A, u, v, h).cokernel()
        M.name = t
        return M
    raise ModuleSpecError(f"cannot parse module description {text!r}")


def choices_agree(A: FDAlgebra, u, v) -> bool:
    """Whether every basis choice for ``coker P(u)->P(v)`` gives the same module."""
    mods = coker_choices(A, u, v)
    return all(find_isomorphism(mods[0], M) is not None for M in mods[1:])


__all__ += ["choices_agree"]
