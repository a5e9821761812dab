"""Certified lower bounds for the finitistic dimension.

Exhaustive mode lists every indecomposable module up to a total dimension over
GF(p).  Each indecomposable ``E`` of dimension ``d`` has a simple submodule
``S_v``, so it is an extension ``0 -> S_v -> E -> M -> 0`` with ``M`` of
dimension ``d - 1``.  By Krull-Schmidt ``M`` is a direct sum of
indecomposables already found, so running over those sums, over ``v`` and
over the classes of ``Ext^1(M, S_v)`` (up to scalars) reaches every
indecomposable.  Since ``pd(X ⊕ Y) = max(pd X, pd Y)``, indecomposables
suffice for findim.

:func:`brute_force_modules` is the independent check: it lists every tuple of
generator matrices of each dimension vector and keeps those satisfying the
relations.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .algebra import FDAlgebra
from .fields import Field, GF
from .homology import Finite, PdResult, projective_dimension, projective_cover, global_dimension
from .modules import (
    FDModule,
    direct_sum,
    fingerprint,
    from_generator_matrices,
    hom_space,
    is_indecomposable,
    projective,
    simple,
    _is_nilpotent,
)

__all__ = [
    "FindimEstimate",
    "Candidate",
    "findim_bounded",
    "indecomposables_up_to",
    "brute_force_modules",
    "brute_force_indecomposables",
    "ext1_classes",
    "extension_module",
    "iso_indecomposable",
    "describe",
]

log = logging.getLogger(__name__)


@dataclass
class Candidate:
    module: FDModule
    pd: PdResult
    label: str = ""


@dataclass
class FindimEstimate:
    """``value`` is attained by ``witness`` (pd certified finite); it is a lower bound unless ``exact``."""

    value: int
    exhaustive: bool
    dim_cap: int | None
    field: str
    mode: str
    witness: str
    witness_module: FDModule | None = field(default=None, repr=False)
    exact: bool = False
    examined: int = 0
    indecomposables_by_dim: dict[int, int] = field(default_factory=dict)
    finite_pd: list[Candidate] = field(default_factory=list, repr=False)
    notes: list[str] = field(default_factory=list)

    def recheck(self) -> bool:
        """Recompute the witness's projective dimension."""
        if self.witness_module is None:
            return self.value == 0
        pd = projective_dimension(self.witness_module)
        return isinstance(pd, Finite) and pd.n == self.value

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exhaustive": self.exhaustive,
            "exact": self.exact,
            "dim_cap": self.dim_cap,
            "field": self.field,
            "mode": self.mode,
            "witness": self.witness,
            "examined": self.examined,
            "indecomposables_by_dim": {str(k): v for k, v in sorted(self.indecomposables_by_dim.items())},
            "notes": list(self.notes),
        }


def describe(M: FDModule) -> str:
    if M.name:
        return f"{M.name} dimvec={list(M.dim_vector)}"
    return f"dimvec={list(M.dim_vector)} radical series={M.radical_series()}"


# -- extensions by a simple --------------------------------------------------


def ext1_classes(M: FDModule, v: int) -> list[np.ndarray]:
    """Representatives of a basis of ``Ext^1(M, S_v)`` as cocycles.

    A cocycle is a ``(n, dim M)`` array ``δ`` with ``δ[b]`` the row vector
    by which the radical basis element ``b`` maps ``M`` into ``S_v``; it
    satisfies ``δ(bc) = δ(b)·M(c)`` for radical ``b, c``.
    """
    A, F = M.algebra, M.field
    rad = A.radical_indices
    heads = [b for b in rad if A.tgt[b] == v]
    blocks = M.blocks
    offs = {}
    o = 0
    for b in heads:
        offs[b] = o
        o += blocks[int(A.src[b])].size
    total = o
    if total == 0:
        return []
    rows = []
    for b in heads:
        sb = int(A.src[b])
        for c in rad:
            if int(A.tgt[c]) != sb:
                continue
            sc = blocks[int(A.src[c])]
            if sc.size == 0:
                continue
            eq = F.zeros((sc.size, total))
            for k, coef in A.sparse[b].get(c, {}).items():
                if k in offs:
                    kb = blocks[int(A.src[k])]
                    # δ(k) restricted to src(k) = src(c) block
                    eq[:, offs[k] : offs[k] + kb.size] += coef * F.eye(kb.size)
            Mc = M.act[c][np.ix_(blocks[sb], sc)]  # |M_sb| x |M_sc|
            eq[:, offs[b] : offs[b] + blocks[sb].size] -= Mc.T
            rows.append(F.reduce(eq))
    Z = linalg.nullspace(F, np.concatenate(rows, axis=0)) if rows else F.eye(total)
    if Z.shape[1] == 0:
        return []
    # coboundaries δ_h(b) = -h·M(b) for h a row vector on M_v
    Mv = blocks[v]
    cob = []
    for r in range(Mv.size):
        vec = F.zeros(total)
        for b in heads:
            sb = blocks[int(A.src[b])]
            vec[offs[b] : offs[b] + sb.size] = F.reduce(-M.act[b][Mv[r], sb])
        cob.append(vec)
    Bmat = np.array(cob, dtype=F.dtype).T if cob else F.zeros((total, 0))
    Bmat = linalg.column_basis(F, Bmat) if Bmat.shape[1] and not F.is_zero(Bmat) else F.zeros((total, 0))
    both = np.concatenate([Bmat, Z], axis=1)
    piv = linalg.pivot_columns(F, both)
    k = Bmat.shape[1]
    reps = [Z[:, c - k] for c in piv if c >= k]
    out = []
    for vec in reps:
        delta = F.zeros((A.n, M.dim))
        for b in heads:
            sb = blocks[int(A.src[b])]
            delta[b, sb] = vec[offs[b] : offs[b] + sb.size]
        out.append(delta)
    return out


def extension_module(M: FDModule, v: int, delta: np.ndarray) -> FDModule:
    """``E`` with basis ``(s, M)``: ``b`` acts by ``[[S_v(b), δ(b)], [0, M(b)]]``."""
    A, F = M.algebra, M.field
    d = M.dim + 1
    act = F.zeros((A.n, d, d))
    act[:, 1:, 1:] = M.act
    act[:, 0, 1:] = delta
    act[A.idempotents[v], 0, 0] = F.one
    return FDModule(A, np.concatenate([[v], M.vertex]), act)


def iso_indecomposable(M: FDModule, N: FDModule) -> bool:
    """Isomorphism test for indecomposable ``M``.

    ``M ≅ N`` iff some ``ψ∘φ`` (``φ, ψ`` running over hom bases) is not
    nilpotent: ``End(M)`` is local, so a non-nilpotent composite is invertible
    and ``φ`` splits, and equal dimensions force an isomorphism.
    """
    if M.dim_vector != N.dim_vector:
        return False
    F = M.field
    H = hom_space(M, N)
    if not H:
        return False
    K = hom_space(N, M)
    for phi in H:
        for psi in K:
            if not _is_nilpotent(F, F.matmul(psi, phi)):
                return True
    return False


def _multisets(sizes: Sequence[int], total: int, start: int = 0) -> Iterable[tuple[int, ...]]:
    """Non-decreasing index tuples whose sizes add up to ``total``."""
    if total == 0:
        yield ()
        return
    for i in range(start, len(sizes)):
        if sizes[i] <= total:
            for rest in _multisets(sizes, total - sizes[i], i):
                yield (i,) + rest


def indecomposables_up_to(A: FDAlgebra, dim_cap: int) -> list[FDModule]:
    """Representatives of the indecomposable modules of dimension ``<= dim_cap`` over GF(p).

    Listed by dimension, then in discovery order (deterministic).
    """
    F = A.field
    p = F.characteristic
    if p == 0:
        raise ValueError("exhaustive enumeration needs a finite field")
    found: list[FDModule] = []
    if dim_cap < 1:
        return found
    for v in range(A.num_vertices):
        found.append(simple(A, v))
    ext_cache: dict[tuple[int, int], list[np.ndarray]] = {}
    buckets: dict[tuple, list[int]] = {}
    for i, S in enumerate(found):
        buckets.setdefault(fingerprint(S), []).append(i)
    for d in range(2, dim_cap + 1):
        sizes = [m.dim for m in found]
        new_start = len(found)
        for combo in _multisets(sizes, d - 1):
            parts = [found[i] for i in combo]
            M = direct_sum(parts)
            for v in range(A.num_vertices):
                per = []
                for i in combo:
                    key = (i, v)
                    if key not in ext_cache:
                        ext_cache[key] = ext1_classes(found[i], v)
                    per.append(ext_cache[key])
                if any(not reps for reps in per):
                    continue  # some summand splits off
                for coeffs in _component_choices([len(r) for r in per], p):
                    delta = F.zeros((A.n, M.dim))
                    o = 0
                    for part, reps, cs in zip(parts, per, coeffs):
                        blockdelta = F.zeros((A.n, part.dim))
                        for c, rep in zip(cs, reps):
                            if c:
                                blockdelta = blockdelta + c * rep
                        delta[:, o : o + part.dim] = F.reduce(blockdelta)
                        o += part.dim
                    E = extension_module(M, v, delta)
                    if not is_indecomposable(E):
                        continue
                    fp = fingerprint(E)
                    if any(iso_indecomposable(found[j], E) for j in buckets.get(fp, [])):
                        continue
                    buckets.setdefault(fp, []).append(len(found))
                    found.append(E)
        log.debug("dimension %d: %d new indecomposables", d, len(found) - new_start)
    return found


def _component_choices(ks: Sequence[int], p: int) -> Iterable[list[tuple[int, ...]]]:
    """Coefficient tuples per summand, every summand nonzero, up to a global scalar."""
    per = [[c for c in itertools.product(range(p), repeat=k) if any(c)] for k in ks]
    for choice in itertools.product(*per):
        first = choice[0]
        lead = next(x for x in first if x)
        if lead != 1:
            continue
        yield list(choice)


# -- brute force oracle --------------------------------------------------------


def _dim_vectors(nv: int, total: int) -> Iterable[tuple[int, ...]]:
    for combo in itertools.product(range(total + 1), repeat=nv):
        if sum(combo) == total:
            yield combo


def brute_force_modules(A: FDAlgebra, dimvec: Sequence[int]) -> list[FDModule]:
    """Every module with the given dimension vector in the vertex-ordered standard basis."""
    F = A.field
    p = F.characteristic
    if p == 0:
        raise ValueError("brute force needs a finite field")
    vert = np.repeat(np.arange(A.num_vertices), dimvec)
    d = int(vert.size)
    slots = []
    for g in A.generators:
        s, t = int(A.src[g]), int(A.tgt[g])
        slots.append((np.flatnonzero(vert == t), np.flatnonzero(vert == s)))
    sizes = [r.size * c.size for r, c in slots]
    out = []
    for values in itertools.product(range(p), repeat=sum(sizes)):
        mats = []
        o = 0
        for (r, c), sz in zip(slots, sizes):
            m = F.zeros((d, d))
            if sz:
                m[np.ix_(r, c)] = np.array(values[o : o + sz], dtype=F.dtype).reshape(r.size, c.size)
            o += sz
            mats.append(m)
        try:
            out.append(from_generator_matrices(A, dimvec, mats, check=True))
        except ValueError:
            continue
    return out


def brute_force_indecomposables(A: FDAlgebra, dim_cap: int) -> list[FDModule]:
    """Indecomposable iso classes by raw enumeration; only for tiny cases."""
    reps: list[FDModule] = []
    for total in range(1, dim_cap + 1):
        for dv in _dim_vectors(A.num_vertices, total):
            for M in brute_force_modules(A, dv):
                if not is_indecomposable(M):
                    continue
                if any(iso_indecomposable(R, M) for R in reps if R.dim_vector == M.dim_vector):
                    continue
                reps.append(M)
    return reps


# -- the estimate ----------------------------------------------------------------


def _best(cands: list[Candidate]) -> Candidate | None:
    best = None
    for c in cands:
        if isinstance(c.pd, Finite) and (best is None or c.pd.n > best.pd.n):
            best = c
    return best


def _sampled_modules(A: FDAlgebra, count: int, seed: int) -> list[FDModule]:
    from .modspec import projective_map

    F = A.field
    rng = np.random.default_rng(seed)
    out = []
    nv = A.num_vertices
    for _ in range(count):
        top = sorted(int(x) for x in rng.integers(0, nv, size=int(rng.integers(1, 3))))
        rel = sorted(int(x) for x in rng.integers(0, nv, size=int(rng.integers(0, 3))))
        P0 = direct_sum([projective(A, v) for v in top])
        if not rel:
            out.append(P0)
            continue
        P1 = direct_sum([projective(A, u) for u in rel])
        mat = F.zeros((P0.dim, P1.dim))
        ro = 0
        for v in top:
            rows = len(A.column(v))
            co = 0
            for u in rel:
                cols = len(A.column(u))
                h = F.zeros(A.n)
                for b in A.block(u, v):
                    h[b] = F(int(rng.integers(-3, 4)))
                mat[ro : ro + rows, co : co + cols] = projective_map(A, u, v, h).matrix
                co += cols
            ro += rows
        from .modules import ModuleMap

        M, _ = ModuleMap(P1, P0, F.reduce(mat)).cokernel()
        if M.dim:
            M.name = f"coker(random P{rel}->P{top})"
            out.append(M)
    return out


def findim_bounded(
    A: FDAlgebra,
    dim_cap: int | None = None,
    field: Field | None = None,
    mode: str = "exhaustive",
    modules: Sequence[FDModule] | None = None,
    samples: int = 50,
    seed: int = 0,
    pd_cap: int | None = None,
) -> FindimEstimate:
    """Largest finite projective dimension among the candidate modules.

    ``exhaustive`` lists all indecomposables of dimension ``<= dim_cap`` over
    ``field`` (default: the algebra's field, which must then be finite);
    ``curated`` evaluates ``modules``; ``sampled`` draws ``samples`` random
    cokernels of maps between projectives with the given ``seed``.
    """
    notes: list[str] = []
    if mode == "exhaustive":
        F = field or A.field
        if F.characteristic == 0:
            raise ValueError("exhaustive mode requires a finite field")
        if dim_cap is None:
            raise ValueError("exhaustive mode requires dim_cap")
        B = A.with_field(F)
        if F != A.field:
            notes.append(f"structure constants reduced to {F}")
        mods = indecomposables_up_to(B, dim_cap)
        labels = [describe(M) for M in mods]
        by_dim: dict[int, int] = {}
        for M in mods:
            by_dim[M.dim] = by_dim.get(M.dim, 0) + 1
    elif mode == "curated":
        if modules is None:
            raise ValueError("curated mode requires a module list")
        mods = list(modules)
        F = mods[0].field if mods else A.field
        labels = [describe(M) for M in mods]
        by_dim = {}
    elif mode == "sampled":
        F = field or A.field
        B = A.with_field(F)
        mods = _sampled_modules(B, samples, seed)
        labels = [describe(M) for M in mods]
        by_dim = {}
        notes.append(f"seed {seed}, {samples} samples")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    cands = [Candidate(M, projective_dimension(M, pd_cap), lab) for M, lab in zip(mods, labels)]
    best = _best(cands)
    if best is None:
        notes.append("no module of finite projective dimension found; value 0 is the empty-search convention")
    return FindimEstimate(
        value=best.pd.n if best else 0,
        exhaustive=mode == "exhaustive",
        dim_cap=dim_cap if mode == "exhaustive" else None,
        field=str(F),
        mode=mode,
        witness=best.label if best else "0",
        witness_module=best.module if best else None,
        exact=False,
        examined=len(cands),
        indecomposables_by_dim=by_dim,
        finite_pd=[c for c in cands if isinstance(c.pd, Finite)],
        notes=notes,
    )


def findim_certified(A: FDAlgebra, cap: int | None = None) -> FindimEstimate | None:
    """``findim = gl.dim`` when the global dimension is finite; ``None`` otherwise."""
    gd = global_dimension(A, cap)
    if not isinstance(gd.value, Finite):
        return None
    n = gd.value.n
    v = max(range(A.num_vertices), key=lambda i: (gd.per_simple[i].n, -i)) if A.num_vertices else 0
    S = simple(A, v)
    return FindimEstimate(
        value=n,
        exhaustive=False,
        dim_cap=None,
        field=str(A.field),
        mode="gl.dim",
        witness=describe(S),
        witness_module=S,
        exact=True,
        notes=["finite global dimension: findim equals gl.dim"],
    )


__all__ += ["findim_certified"]


def sample_modules(A: FDAlgebra, count: int, seed: int = 0) -> list[FDModule]:
    """``count`` nonzero cokernels of random maps between small sums of indecomposable projectives."""
    out: list[FDModule] = []
    rounds = 0
    while len(out) < count:
        if rounds > 100 or A.n == 0:
            raise ValueError("could not draw enough nonzero modules")
        out += _sampled_modules(A, count, seed + 7919 * rounds)
        rounds += 1
    return out[:count]


__all__ += ["sample_modules"]
