"""Executable versions of the finitistic-dimension bounds and the two quiver surgeries.

Each ``check_*`` function measures the quantities an inequality talks about
and returns a :class:`BoundReport`.  Findim values are certified lower bounds
(a witness of that projective dimension exists) unless marked exact, which
happens when the global dimension is finite.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import FDAlgebra, IdealModule, algebra_from_presentation, idempotent_reduction, quotient_by_ideal
from .fields import GF, Field
from .findim import FindimEstimate, describe, findim_bounded, findim_certified
from .functors import to_quotient_module
from .groebner import avoidance_report, groebner_basis, normal_basis, path_involves
from .homology import (
    Finite,
    InfiniteCertified,
    PdResult,
    ext_dim,
    is_projective,
    minimal_resolution,
    projective_dimension,
)
from .modules import FDModule, ModuleMap, projective, projective_sum, regular_module, simple
from .quiver import AlgebraElement, Path, PathAlgebraPresentation, Quiver

__all__ = [
    "Quantity",
    "Hypothesis",
    "BoundReport",
    "PdNotFinite",
    "NotUniform",
    "ext_loewy_length",
    "uniform_graded_loewy_length",
    "measure_findim",
    "check_corner_bound",
    "two_sided_ideal",
    "check_ideal_projective",
    "SplitResult",
    "arrow_split",
    "SplitCheck",
    "check_arrow_split",
    "SurgeryResult",
    "almost_vanishing_construction",
    "SurgeryCheck",
    "check_almost_vanishing",
    "check_projective_ideal_bound",
    "check_avoidance_bound",
    "check_almost_vanishing_bound",
    "SocleCandidate",
    "socle_ideal_candidates",
    "quotient_correspondence",
]

log = logging.getLogger(__name__)


class PdNotFinite(ValueError):
    """A simple whose projective dimension is infinite or unknown at the cap."""


@dataclass(frozen=True)
class NotUniform:
    """Two summands of ``S_e`` whose top Ext degrees disagree."""

    first: str
    first_top: int
    second: str
    second_top: int


@dataclass
class Quantity:
    name: str
    value: object
    exact: bool
    note: str = ""


@dataclass
class Hypothesis:
    name: str
    holds: bool
    detail: str = ""


@dataclass
class BoundReport:
    statement: str
    inputs: dict
    hypotheses: list[Hypothesis]
    quantities: list[Quantity]
    inequality: str
    holds: bool
    witnesses: list[str] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    conclusive: bool = False  # a failure would contradict the statement outright
    skipped: bool = False

    @property
    def counterexample(self) -> bool:
        return not self.holds and self.conclusive and not self.skipped

    def quantity(self, name: str):
        for q in self.quantities:
            if q.name == name:
                return q.value
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "inputs": self.inputs,
            "hypotheses": [asdict(h) for h in self.hypotheses],
            "quantities": [{"name": q.name, "value": q.value, "exact": q.exact} for q in self.quantities],
            "inequality": self.inequality,
            "holds": self.holds,
            "conclusive": self.conclusive,
            "skipped": self.skipped,
            "witnesses": list(self.witnesses),
            "caveats": list(self.caveats),
        }


def _algebra(obj) -> FDAlgebra:
    if isinstance(obj, FDAlgebra):
        return obj
    return algebra_from_presentation(obj)


def _vertex(A: FDAlgebra, v) -> int:
    return A.vertex_index(v if isinstance(v, (int, np.integer)) else str(v))


# -- Ext-algebra Loewy lengths ---------------------------------------------------


def _finite_resolution(A: FDAlgebra, v: int, cap: int | None):
    S = simple(A, v)
    pd = projective_dimension(S, cap)
    if not isinstance(pd, Finite):
        raise PdNotFinite(f"pd S({A.vertices[v]}) is {pd}")
    return minimal_resolution(S, pd.n + 1), pd


def ext_loewy_length(A: FDAlgebra, e, cap: int | None = None) -> int:
    """``1 + max{i : Ext^i(S_e, S_e) ≠ 0}`` for a vertex ``e`` with ``pd S_e`` finite."""
    v = _vertex(A, e)
    res, pd = _finite_resolution(A, v, cap)
    top = max(i for i in range(pd.n + 1) if ext_dim(res.module, v, i, res) != 0)
    return top + 1


def uniform_graded_loewy_length(A: FDAlgebra, es: Sequence, cap: int | None = None) -> int | NotUniform:
    """Common value of ``1 + max{i : Ext^i(S, S_e) ≠ 0}`` over the simple summands ``S`` of ``S_e``."""
    vs = [_vertex(A, e) for e in es]
    tops = []
    for v in vs:
        res, pd = _finite_resolution(A, v, cap)
        nz = [i for i in range(pd.n + 1) if sum(ext_dim(res.module, w, i, res) for w in vs) != 0]
        tops.append((v, max(nz)))
    for v, t in tops[1:]:
        if t != tops[0][1]:
            return NotUniform(A.vertices[tops[0][0]], tops[0][1], A.vertices[v], t)
    return tops[0][1] + 1


# -- findim measurement ----------------------------------------------------------


def measure_findim(
    A: FDAlgebra,
    dim_cap: int = 4,
    field: Field | None = None,
    pd_cap: int | None = None,
    modules: Sequence[FDModule] | None = None,
) -> FindimEstimate:
    """Exact value when gl.dim is finite; otherwise a curated or exhaustive lower bound."""
    cert = findim_certified(A, pd_cap)
    if cert is not None:
        return cert
    if modules is not None:
        return findim_bounded(A, mode="curated", modules=modules, pd_cap=pd_cap)
    F = field or (A.field if A.field.characteristic else GF(2))
    return findim_bounded(A, dim_cap, F, "exhaustive", pd_cap=pd_cap)


def _fq(name: str, est: FindimEstimate) -> Quantity:
    how = "exact (finite gl.dim)" if est.exact else f"lower bound ({est.mode}" + (f", dim <= {est.dim_cap}, {est.field})" if est.exhaustive else ")")
    return Quantity(name, est.value, est.exact, how)


def check_corner_bound(
    pres,
    e,
    dim_cap: int = 6,
    field: Field | None = None,
    pd_cap: int | None = None,
) -> BoundReport:
    """``findim Γ <= 2·findim Λ - ℓ`` for ``Γ = (1-e)Λ(1-e)``, ``e`` primitive with ``pd S_e`` finite."""
    L = _algebra(pres)
    v = _vertex(L, e)
    S = simple(L, v)
    pd = projective_dimension(S, pd_cap)
    hyp = [Hypothesis("pd S_e finite", isinstance(pd, Finite), str(pd))]
    inputs = {"algebra": L.name, "e": L.vertices[v], "dim_cap": dim_cap, "field": str(field or GF(2))}
    if not isinstance(pd, Finite):
        raise PdNotFinite(f"pd S({L.vertices[v]}) is {pd}")
    ell = ext_loewy_length(L, v, pd_cap)
    r = measure_findim(L, dim_cap, field, pd_cap)
    G = idempotent_reduction(L, [v]).corner
    g = measure_findim(G, dim_cap, field, pd_cap)
    bound = 2 * r.value - ell
    caveats = []
    degenerate = bound < 0
    if degenerate:
        caveats.append(
            "negative bound: read as 'Γ has no module of positive finite projective dimension'; compared against 0"
        )
    target = max(bound, 0) if degenerate else bound
    holds = g.value <= target
    if not r.exact:
        caveats.append("findim Λ is a lower bound, so a failure would be inconclusive")
    if not g.exact:
        caveats.append("findim Γ is a certified lower bound")
    if holds and g.value == bound:
        caveats.append("bound is attained")
    return BoundReport(
        statement="corner-bound",
        inputs=inputs,
        hypotheses=hyp,
        quantities=[
            _fq("findim Λ", r),
            _fq("findim Γ", g),
            Quantity("pd S_e", pd.n, True),
            Quantity("ℓ", ell, True),
            Quantity("bound", bound, r.exact),
        ],
        inequality=f"findim Γ <= 2·findim Λ - ℓ : {g.value} <= 2·{r.value} - {ell} = {bound}",
        holds=holds,
        witnesses=[f"Λ: {r.witness}", f"Γ: {g.witness}"],
        caveats=caveats,
        conclusive=r.exact,
    )


# -- ideals generated by a vertex or an arrow ----------------------------------------


def _x_vector(A: FDAlgebra, x) -> np.ndarray:
    x = str(x)
    if x in A.vertices:
        return A.basis_vector(A.idempotents[A.vertices.index(x)])
    if x in A.labels:
        return A.basis_vector(A.labels.index(x))
    raise KeyError(f"{x!r} is neither a vertex nor an arrow")


def two_sided_ideal(A: FDAlgebra, x) -> IdealModule:
    """``AxA`` for a vertex or arrow ``x``."""
    from .algebra import two_sided_closure

    return IdealModule(A, two_sided_closure(A, [_x_vector(A, x)]), True, True)


def check_ideal_projective(pres: PathAlgebraPresentation, x) -> BoundReport:
    """Whether ``ΛxΛ`` is projective on both sides, next to the avoidance hypothesis."""
    L = algebra_from_presentation(pres)
    rep = avoidance_report(pres, x, L.groebner, L.normal)
    J = two_sided_ideal(L, x)
    left = is_projective(J.as_left_module()) if J.dim else True
    right = is_projective(J.as_right_module()) if J.dim else True
    hyp = [
        Hypothesis("relations avoid x", rep.relations_avoid_x, rep.counterexample or ""),
        Hypothesis("normal basis closed under p2·x·p1", rep.basis_closed),
    ]
    caveats = [] if rep.relations_avoid_x else ["hypothesis fails; the conclusion is reported for information"]
    return BoundReport(
        statement="ideal-projective",
        inputs={"algebra": pres.name, "x": str(x)},
        hypotheses=hyp,
        quantities=[
            Quantity("dim ΛxΛ", J.dim, True),
            Quantity("left projective", left, True),
            Quantity("right projective", right, True),
        ],
        inequality="ΛxΛ projective as a left and as a right module",
        holds=left and right,
        caveats=caveats,
        conclusive=rep.relations_avoid_x,
    )


# -- correspondences between quotients ---------------------------------------------


def _transfer_path(p: Path, src_q: Quiver, dst_q: Quiver) -> Path:
    names = [src_q.arrow_name(a) for a in p.arrows]
    if not names:
        return dst_q.trivial(src_q.vertices[p.source])
    arrows = tuple(dst_q.arrow_index(n) for n in names)
    return Path(dst_q.vertex_index(src_q.vertices[p.source]), dst_q.vertex_index(src_q.vertices[p.target]), arrows)


def quotient_correspondence(QB: FDAlgebra, QA: FDAlgebra) -> tuple[bool, str]:
    """Compare two quotient algebras through the identity on common path words.

    Each kept basis path of ``QB`` is read as a path of ``QA``'s ambient
    quiver, reduced there and projected to ``QA``.  The resulting linear map
    must be bijective and multiplicative.
    """
    B, A = QB.quotient_of, QA.quotient_of
    F = QA.field
    if QB.n != QA.n:
        return False, f"dimensions differ: {QB.n} vs {QA.n}"
    qb, qa = B.presentation.quiver, A.presentation.quiver
    Phi = F.zeros((QA.n, QB.n))
    for c, w in enumerate(QB.words):
        try:
            p = _transfer_path(w, qb, qa)
        except (KeyError, ValueError):
            return False, f"basis path {qb.format_path(w)} has no counterpart"
        red = A.groebner.reduce(AlgebraElement.from_path(p, F))
        vec = F.zeros(A.n)
        for path, coef in red.terms.items():
            vec[A.normal.index[path]] = coef
        Phi[:, c] = F.reduce(F.matmul(QA.quotient_projection, vec.reshape(-1, 1))).reshape(-1)
    if linalg.rank(F, Phi) != QA.n:
        return False, "the path correspondence is not bijective"
    for i in range(QB.n):
        for j in range(QB.n):
            lhs = F.matmul(Phi, QB.table[i, j].reshape(-1, 1)).reshape(-1)
            rhs = QA.multiply(Phi[:, i], Phi[:, j])
            if not np.array_equal(F.reduce(lhs), F.reduce(rhs)):
                return False, f"products differ at ({QB.labels[i]}, {QB.labels[j]})"
    return True, "isomorphic under the path correspondence"


# -- arrow split -------------------------------------------------------------------


def _fresh(name: str, taken: set[str]) -> str:
    out = name
    k = 2
    while out in taken:
        out = f"{name}{k}"
        k += 1
    return out


@dataclass(frozen=True)
class SplitResult:
    presentation: PathAlgebraPresentation
    u: str
    first: str  # s -> u
    second: str  # u -> t


def arrow_split(pres: PathAlgebraPresentation, alpha: str) -> SplitResult:
    """Replace ``alpha: s -> t`` by ``alpha_2·alpha_1`` through a new vertex ``u``; keep the ideal."""
    q = pres.quiver
    ai = q.arrow_index(alpha)
    _, s, t = q.arrows[ai]
    u = _fresh("u", set(q.vertices))
    names = {a for a, _, _ in q.arrows}
    a1 = _fresh(f"{alpha}_1", names)
    a2 = _fresh(f"{alpha}_2", names | {a1})
    arrows = []
    for a, src, tgt in q.arrows:
        if a == alpha:
            arrows += [(a1, s, u), (a2, u, t)]
        else:
            arrows.append((a, src, tgt))
    nq = Quiver(q.vertices + (u,), tuple(arrows))

    def sub(p: Path) -> Path:
        new = []
        for a in p.arrows:
            if a == ai:
                new += [nq.arrow_index(a1), nq.arrow_index(a2)]
            else:
                new.append(nq.arrow_index(q.arrow_name(a)))
        return Path(p.source, p.target, tuple(new))

    rels = tuple(AlgebraElement({sub(p): c for p, c in r.terms.items()}, pres.field) for r in pres.relations)
    name = f"{pres.name}|{alpha}" if pres.name else f"split {alpha}"
    return SplitResult(PathAlgebraPresentation(nq, pres.field, rels, name), u, a1, a2)


@dataclass
class SplitCheck:
    dim_quotient_B: int
    dim_quotient_L: int
    tables_match: bool
    detail: str
    ideal_projective: bool
    pd_S_u: PdResult

    @property
    def ok(self) -> bool:
        return self.dim_quotient_B == self.dim_quotient_L and self.tables_match and self.ideal_projective


def check_arrow_split(pres: PathAlgebraPresentation, alpha: str) -> SplitCheck:
    """``B/Be_uB ≅ Λ/ΛαΛ`` and ``Be_uB`` projective on the left."""
    sp = arrow_split(pres, alpha)
    L = algebra_from_presentation(pres)
    B = algebra_from_presentation(sp.presentation)
    QL, _, _ = quotient_by_ideal(L, [_x_vector(L, alpha)])
    eu = B.basis_vector(B.idempotents[B.vertices.index(sp.u)])
    QB, JB, _ = quotient_by_ideal(B, [eu])
    ok, detail = quotient_correspondence(QB, QL)
    proj = is_projective(JB.as_left_module())
    return SplitCheck(QB.n, QL.n, ok, detail, proj, projective_dimension(simple(B, B.vertices.index(sp.u))))


# -- almost vanishing ideals --------------------------------------------------------


def _element_vector(L: FDAlgebra, x: AlgebraElement) -> np.ndarray:
    F = L.field
    red = L.groebner.reduce(x)
    vec = F.zeros(L.n)
    for p, c in red.terms.items():
        vec[L.normal.index[p]] = c
    return vec


def _lift(L: FDAlgebra, vec: np.ndarray) -> AlgebraElement:
    """Normal-form representative in kQ of an algebra vector."""
    return AlgebraElement({L.words[i]: vec[i] for i in np.flatnonzero(vec != 0)}, L.field)


@dataclass
class AlmostVanishingData:
    algebra: FDAlgebra
    vertex: int  # v with J = J e_v
    ideal: IdealModule
    generators: list[np.ndarray]  # minimal uniform generators r_i
    targets: list[int]  # t(r_i)
    kernel: list[list[np.ndarray]]  # per kernel generator, its components a_i ∈ Λ e_{t_i}


def _almost_vanishing_data(pres: PathAlgebraPresentation, gens) -> AlmostVanishingData:
    L = algebra_from_presentation(pres)
    F = L.field
    vecs = []
    for g in gens:
        if isinstance(g, str):
            g = pres.element(g)
        if isinstance(g, AlgebraElement):
            g = _element_vector(L, g)
        vecs.append(np.asarray(g, dtype=F.dtype))
    vecs = [v for v in vecs if not F.is_zero(v)]
    if not vecs:
        raise ValueError("J = 0: nothing to construct")
    srcs = {int(L.src[i]) for v in vecs for i in np.flatnonzero(v != 0)}
    if len(srcs) != 1:
        raise ValueError("J is not of the form Je for a single primitive idempotent e")
    v = srcs.pop()
    R = regular_module(L)
    Jspan = np.array([L.multiply(L.basis_vector(b), x) for x in vecs for b in range(L.n)], dtype=F.dtype).T
    JM, Jinc = R.submodule(Jspan)
    J = IdealModule(L, Jinc, True, False)
    if not J.times_radical_is_zero():
        raise ValueError("J·rad Λ ≠ 0")
    idem = set(L.idempotents)
    if any(Jinc[i, c] != 0 for c in range(J.dim) for i in idem):
        raise ValueError("J is not contained in rad Λ (source-vertex case, handled separately)")
    J = IdealModule(L, Jinc, True, True)
    top = linalg.complement_indices(F, JM.radical_span(), JM.dim)
    top.sort(key=lambda i: (int(JM.vertex[i]), i))
    r = [Jinc[:, i] for i in top]
    targets = [int(JM.vertex[i]) for i in top]
    P = projective_sum(L, targets)
    cols = []
    for ri, ti in zip(r, targets):
        for a in L.column(ti):
            cols.append(L.multiply(L.basis_vector(a), ri))
    phi = ModuleMap(P, R, np.array(cols, dtype=F.dtype).T.reshape(L.n, P.dim))
    K, Kinc = phi.kernel()
    kernel = []
    if K.dim:
        ktop = linalg.complement_indices(F, K.radical_span(), K.dim)
        for i in sorted(ktop):
            col = Kinc[:, i]
            comps = []
            o = 0
            for ti in targets:
                c = L.column(ti)
                a = F.zeros(L.n)
                a[c] = col[o : o + len(c)]
                comps.append(a)
                o += len(c)
            kernel.append(comps)
    return AlmostVanishingData(L, v, J, r, targets, kernel)


@dataclass(frozen=True)
class SurgeryResult:
    presentation: PathAlgebraPresentation
    x: str
    alpha: str
    betas: tuple[str, ...]
    generators: tuple[str, ...]
    kernel_relations: tuple[str, ...]


def almost_vanishing_construction(
    pres: PathAlgebraPresentation,
    gens,
    perturb: int | None = None,
) -> SurgeryResult:
    """Glue a new vertex ``x`` with ``α: v -> x`` and ``β_i: x -> t(r_i)`` so that ``Be_xB`` is projective.

    ``perturb`` (a seed) adds a random element of ``I`` to each kernel lift;
    the ideal generated must not change.
    """
    data = _almost_vanishing_data(pres, gens)
    L = data.algebra
    F = L.field
    q = pres.quiver
    x = _fresh("x", set(q.vertices))
    names = {a for a, _, _ in q.arrows}
    alpha = _fresh("a_x", names)
    betas = []
    for i in range(len(data.generators)):
        betas.append(_fresh(f"b_x{i + 1}", names | {alpha} | set(betas)))
    v = q.vertices[data.vertex]
    arrows = list(q.arrows) + [(alpha, v, x)] + [(b, x, q.vertices[t]) for b, t in zip(betas, data.targets)]
    nq = Quiver(q.vertices + (x,), tuple(arrows))
    ai = nq.arrow_index(alpha)
    rels = list(pres.relations)
    gen_text = []
    for r, b in zip(data.generators, betas):
        lift = _lift(L, r)
        for p in lift.terms:
            if p.length < 2:
                raise ValueError("a generator of J has a component of length < 2")
        bi = nq.arrow_index(b)
        path = Path(data.vertex, nq.arrow_target(bi), (ai, bi))
        rels.append(lift - AlgebraElement.from_path(path, F))
        gen_text.append(lift.format(q))
    vi = nq.vertex_index(x)
    for g in range(q.num_arrows):
        if q.arrow_target(g) == data.vertex:
            rels.append(AlgebraElement.from_path(Path(q.arrow_source(g), vi, (g, ai)), F))
    rng = np.random.default_rng(perturb) if perturb is not None else None
    ker_text = []
    for comps in data.kernel:
        total = AlgebraElement({}, F)
        for a, b in zip(comps, betas):
            lift = _lift(L, a)
            if rng is not None:
                lift = lift + _random_ideal_element(pres, L, a, rng)
            bi = nq.arrow_index(b)
            beta = AlgebraElement.from_path(Path(vi, nq.arrow_target(bi), (bi,)), F)
            total = total + lift * beta
        if not total.is_zero():
            rels.append(total)
            ker_text.append(total.format(nq))
    name = f"{pres.name}+x" if pres.name else "almost vanishing surgery"
    B = PathAlgebraPresentation(nq, F, tuple(rels), name)
    return SurgeryResult(B, x, alpha, tuple(betas), tuple(gen_text), tuple(ker_text))


def _random_ideal_element(pres, L: FDAlgebra, a: np.ndarray, rng) -> AlgebraElement:
    """A random element of ``I`` parallel to the lift of ``a`` (zero if none is at hand)."""
    F = L.field
    nz = np.flatnonzero(a != 0)
    if nz.size == 0:
        return AlgebraElement({}, F)
    s, t = int(L.src[nz[0]]), int(L.tgt[nz[0]])
    q = pres.quiver
    options = []
    for rho in L.groebner.elements:
        rs, rt = rho.endpoints()
        for m in range(3):
            for pre in q.paths_of_length(m):
                if pre.source != s or pre.target != rs:
                    continue
                for k in range(3):
                    for post in q.paths_of_length(k):
                        if post.source != rt or post.target != t:
                            continue
                        options.append(AlgebraElement.from_path(post, F) * rho * AlgebraElement.from_path(pre, F))
    if not options:
        return AlgebraElement({}, F)
    pick = options[int(rng.integers(len(options)))]
    return pick.scale(int(rng.integers(1, 5)))


@dataclass
class SurgeryCheck:
    surgery: SurgeryResult
    ideal_projective: bool
    quotient_matches: bool
    detail: str
    double_lift_agrees: bool
    dim_B: int
    pd_S_x: PdResult

    @property
    def ok(self) -> bool:
        return self.ideal_projective and self.quotient_matches and self.double_lift_agrees


def _same_ideal(P1: PathAlgebraPresentation, P2: PathAlgebraPresentation) -> bool:
    g1, g2 = groebner_basis(P1), groebner_basis(P2)
    return all(g2.reduce(r).is_zero() for r in P1.relations) and all(g1.reduce(r).is_zero() for r in P2.relations)


def check_almost_vanishing(pres: PathAlgebraPresentation, gens, seed: int = 7) -> SurgeryCheck:
    """``Be_xB`` projective on the left, ``B/Be_xB ≅ Λ/J`` and independence of the kernel lifts."""
    sur = almost_vanishing_construction(pres, gens)
    alt = almost_vanishing_construction(pres, gens, perturb=seed)
    L = algebra_from_presentation(pres)
    data = _almost_vanishing_data(pres, gens)
    QL, _, _ = quotient_by_ideal(L, list(data.generators))
    B = algebra_from_presentation(sur.presentation)
    ex = B.basis_vector(B.idempotents[B.vertices.index(sur.x)])
    QB, JB, _ = quotient_by_ideal(B, [ex])
    ok, detail = quotient_correspondence(QB, QL)
    proj = is_projective(JB.as_left_module())
    same = _same_ideal(sur.presentation, alt.presentation)
    pd_x = projective_dimension(simple(B, B.vertices.index(sur.x)))
    return SurgeryCheck(sur, proj, ok, detail, same, B.n, pd_x)


# -- findim inequalities ---------------------------------------------------------------


def _le(lhs: FindimEstimate | int, rhs_value: int, rhs_exact: bool) -> tuple[bool, bool]:
    """``(holds, conclusive)`` for ``lhs <= rhs`` with ``lhs`` a certified lower bound."""
    v = lhs.value if isinstance(lhs, FindimEstimate) else lhs
    return v <= rhs_value, rhs_exact


def check_projective_ideal_bound(pres, e, dim_cap: int = 4, field: Field | None = None, pd_cap: int | None = None) -> BoundReport:
    """With ``J = ΛeΛ`` projective on the left: ``findim Λ <= findim Λ/J + 2`` and ``findim Λ/J <= findim Λ``."""
    L = _algebra(pres)
    v = _vertex(L, e)
    Q, J, _ = quotient_by_ideal(L, [L.basis_vector(L.idempotents[v])])
    proj = is_projective(J.as_left_module())
    hyp = [Hypothesis("ΛeΛ projective as a left module", proj)]
    inputs = {"algebra": L.name, "e": L.vertices[v]}
    if not proj:
        return BoundReport("projective-ideal", inputs, hyp, [], "skipped", True, caveats=["hypothesis fails"], skipped=True)
    r = measure_findim(L, dim_cap, field, pd_cap)
    if Q.n == 0:
        q = FindimEstimate(0, False, None, str(L.field), "zero algebra", "0", exact=True)
    else:
        q = measure_findim(Q, dim_cap, field, pd_cap)
    h1, c1 = _le(r, q.value + 2, q.exact)
    h2, c2 = _le(q, r.value, r.exact)
    return BoundReport(
        "projective-ideal",
        inputs,
        hyp,
        [_fq("findim Λ", r), _fq("findim Λ/J", q)],
        f"findim Λ <= findim Λ/J + 2 : {r.value} <= {q.value + 2}; findim Λ/J <= findim Λ : {q.value} <= {r.value}",
        h1 and h2,
        [f"Λ: {r.witness}", f"Λ/J: {q.witness}"],
        [] if (c1 and c2) else ["some quantities are lower bounds; failures would be inconclusive"],
        conclusive=c1 and c2,
    )


def check_avoidance_bound(pres: PathAlgebraPresentation, x, dim_cap: int = 4, field: Field | None = None, pd_cap: int | None = None) -> BoundReport:
    """Relations avoiding ``x``: ``findim Λ <= 2 findim Λ/J + 3`` and ``findim Λ/J <= findim Λ``."""
    L = algebra_from_presentation(pres)
    rep = avoidance_report(pres, x, L.groebner, L.normal)
    hyp = [Hypothesis("relations avoid x", rep.relations_avoid_x, rep.counterexample or "")]
    inputs = {"algebra": pres.name, "x": str(x)}
    if not rep.relations_avoid_x:
        return BoundReport("avoidance", inputs, hyp, [], "skipped", True, caveats=["hypothesis fails"], skipped=True)
    J = two_sided_ideal(L, x)
    Q, _, _ = quotient_by_ideal(L, [_x_vector(L, x)])
    r = measure_findim(L, dim_cap, field, pd_cap)
    q = measure_findim(Q, dim_cap, field, pd_cap) if Q.n else FindimEstimate(0, False, None, str(L.field), "zero algebra", "0", exact=True)
    h1, c1 = _le(r, 2 * q.value + 3, q.exact)
    h2, c2 = _le(q, r.value, r.exact)
    h3, c3 = _le(2 * q.value + 3, 2 * r.value + 3, r.exact)
    return BoundReport(
        "avoidance",
        inputs,
        hyp,
        [_fq("findim Λ", r), _fq("findim Λ/J", q), Quantity("dim J", J.dim, True)],
        (
            f"findim Λ <= 2 findim Λ/J + 3 : {r.value} <= {2 * q.value + 3}; "
            f"2 findim Λ/J + 3 <= 2 findim Λ + 3 : {2 * q.value + 3} <= {2 * r.value + 3}; "
            f"findim Λ/J <= findim Λ : {q.value} <= {r.value}"
        ),
        h1 and h2 and h3,
        [f"Λ: {r.witness}", f"Λ/J: {q.witness}"],
        [] if (c1 and c2 and c3) else ["some quantities are lower bounds; failures would be inconclusive"],
        conclusive=c1 and c2 and c3,
    )


def check_almost_vanishing_bound(
    pres: PathAlgebraPresentation,
    gens,
    dim_cap: int = 4,
    field: Field | None = None,
    pd_cap: int | None = None,
    modules: Sequence[FDModule] | None = None,
) -> BoundReport:
    """``J = Je``, ``J·rad Λ = 0``, ``pd_{Λ/J} J`` finite: ``findim Λ <= 2 findim Λ/J + 3``."""
    L = algebra_from_presentation(pres)
    inputs = {"algebra": pres.name, "J": [str(g) if not isinstance(g, AlgebraElement) else g.format(pres.quiver) for g in gens]}
    hyp = []
    try:
        data = _almost_vanishing_data(pres, gens)
        hyp.append(Hypothesis("J = Je with e primitive, J ⊆ rad Λ, J·rad Λ = 0", True, f"e = e_{L.vertices[data.vertex]}"))
    except ValueError as exc:
        hyp.append(Hypothesis("J = Je with e primitive, J ⊆ rad Λ, J·rad Λ = 0", False, str(exc)))
        return BoundReport("almost-vanishing", inputs, hyp, [], "skipped", True, caveats=["hypothesis fails"], skipped=True)
    Q, J, keep = quotient_by_ideal(L, list(data.generators))
    JQ = to_quotient_module(J.as_left_module(), Q, keep)
    res = minimal_resolution(JQ)
    pdJ = projective_dimension(JQ, pd_cap)
    hyp.append(Hypothesis("pd_{Λ/J} J finite", isinstance(pdJ, Finite), str(pdJ)))
    if not isinstance(pdJ, Finite):
        return BoundReport("almost-vanishing", inputs, hyp, [Quantity("pd_{Λ/J} J", str(pdJ), True)], "skipped", True, caveats=["hypothesis fails"], skipped=True)
    q = measure_findim(Q, dim_cap, field, pd_cap)
    r = measure_findim(L, dim_cap, field, pd_cap, modules=modules)
    h1, c1 = _le(r, 2 * q.value + 3, q.exact)
    terms = [[Q.vertices[v] for v in t] for t in res.terms]
    return BoundReport(
        "almost-vanishing",
        inputs,
        hyp,
        [
            Quantity("dim J", J.dim, True),
            Quantity("pd_{Λ/J} J", pdJ.n, True),
            Quantity("resolution of J (summand vertices per term)", terms, True),
            _fq("findim Λ/J", q),
            _fq("findim Λ", r),
            Quantity("bound", 2 * q.value + 3, q.exact),
        ],
        f"findim Λ <= 2 findim Λ/J + 3 : {r.value} <= {2 * q.value + 3}",
        h1,
        [f"Λ: {r.witness}", f"Λ/J: {q.witness}"],
        [] if c1 else ["findim Λ/J is a lower bound; a failure would be inconclusive"],
        conclusive=c1,
    )


# -- socle ideals --------------------------------------------------------------------


@dataclass
class SocleCandidate:
    projective: str
    element: str
    two_sided: bool
    in_radical: bool
    pd_in_quotient: PdResult | None
    report: BoundReport | None
    note: str = ""


def socle_ideal_candidates(
    A: FDAlgebra, dim_cap: int = 4, field: Field | None = None, pd_cap: int | None = None
) -> list[SocleCandidate]:
    """Simple submodules of projectives of maximal Loewy length and the bound they give.

    Only vertex-pure socle basis vectors are tried; when a socle has a
    repeated simple there are further (non-basis) simple submodules.
    """
    from .algebra import two_sided_closure

    F = A.field
    lengths = [projective(A, v).loewy_length() for v in range(A.num_vertices)]
    top = max(lengths, default=0)
    out = []
    for v in range(A.num_vertices):
        if lengths[v] != top:
            continue
        P = projective(A, v)
        soc = P.socle_span()
        col = A.column(v)
        for c in range(soc.shape[1]):
            x = F.zeros(A.n)
            x[col] = soc[:, c]
            label = " + ".join(f"{A.labels[i]}" if x[i] == 1 else f"{x[i]}*{A.labels[i]}" for i in np.flatnonzero(x != 0))
            closure = two_sided_closure(A, [x])
            two = closure.shape[1] == 1
            in_rad = all(i not in A.idempotents for i in np.flatnonzero(x != 0))
            if not in_rad:
                out.append(SocleCandidate(f"P({A.vertices[v]})", label, two, False, None, None, "simple projective: source-vertex case"))
                continue
            Q, J, keep = quotient_by_ideal(A, [x])
            JQ = to_quotient_module(J.as_left_module(), Q, keep)
            pd = projective_dimension(JQ, pd_cap)
            report = None
            if isinstance(pd, Finite) and A.presentation is not None:
                report = check_almost_vanishing_bound(A.presentation, [x], dim_cap, field, pd_cap)
            out.append(SocleCandidate(f"P({A.vertices[v]})", label, two, True, pd, report))
    return out
