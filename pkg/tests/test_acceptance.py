"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.  All
comparisons are exact: integer equality or an explicit isomorphism.
"""

from __future__ import annotations

import pytest

from fdimlab import (
    GF,
    Finite,
    adjunction_unit,
    algebra_from_presentation,
    check_almost_vanishing,
    check_arrow_split,
    corpus,
    find_isomorphism,
    findim_bounded,
    functor_F,
    functor_G,
    groebner_basis,
    idempotent_reduction,
    indecomposables_up_to,
    minimal_resolution,
    normal_basis,
    projective,
    projective_dimension,
    quotient_by_ideal,
    sample_modules,
    simple,
    to_quotient_module,
    two_sided_ideal,
)
from fdimlab.regressions import diamond_checks, diamond_curated_modules, three_cycle_checks
from helpers import check_resolution
from oracles import indecomposable_classes_gf2, monomial_dimension, truncated_quotient_dimension
from test_groebner import _closed_under_subpaths

CORNERS = [("C3", ["1"]), ("D4", ["4"]), ("D4", ["1", "3"]), ("tail", ["4"]), ("A3", ["2"]), ("A2", ["1"]), ("semisimple", ["1"])]


def report(n: int, ok: bool, detail: str) -> None:
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, detail


def test_criterion_1_three_cycle():
    checks = three_cycle_checks(dim_cap=6)
    pres = corpus.load("C3")
    checks_ok = all(c.passed for c in checks)
    dims = (monomial_dimension(pres, 12), monomial_dimension(pres, 12, endpoints={1, 2}))
    failed = [c.line() for c in checks if not c.passed]
    report(1, checks_ok and dims == (12, 7), f"{len(checks)} checks, oracle dims {dims}" + (f"; {failed}" if failed else ""))


def test_criterion_2_diamond():
    checks = diamond_checks()
    failed = [c.line() for c in checks if not c.passed]
    report(2, not failed, f"{len(checks)} checks" + (f"; {failed}" if failed else ""))


def test_criterion_3_groebner_soundness():
    bad = []
    for name in corpus.names():
        pres = corpus.load(name)
        gb = groebner_basis(pres)
        nb = normal_basis(gb)
        length = nb.termination_length + pres.max_relation_length()
        if not (
            all(gb.reduce(r).is_zero() for r in pres.relations)
            and _closed_under_subpaths(nb)
            and len(nb) == truncated_quotient_dimension(pres, length)
        ):
            bad.append(name)
    report(3, not bad, f"{len(corpus.names())} presentations" + (f", unsound: {bad}" if bad else ""))


def test_criterion_4_functors():
    bad = []
    for name, e in CORNERS:
        cor = idempotent_reduction(algebra_from_presentation(corpus.load(name)), e)
        for X in sample_modules(cor.corner, 50, seed=3):
            eta = adjunction_unit(cor, X)
            if eta.target.dim != X.dim or eta.rank() != X.dim:
                bad.append((name, tuple(e), "unit"))
                break
        for g, v in enumerate(cor.vertex_map):
            PG, PL = projective(cor.corner, g), projective(cor.ambient, v)
            if find_isomorphism(functor_G(cor, PG), PL) is None or find_isomorphism(functor_F(cor, PL), PG) is None:
                bad.append((name, tuple(e), cor.ambient.vertices[v]))
    report(4, not bad, f"{len(CORNERS)} corners, 50 modules each" + (f", failures {bad}" if bad else ""))


def test_criterion_5_surgeries():
    rows = []
    for name, arrow in [("C3", "a1"), ("C3", "a2"), ("C3", "a3"), ("D4", "e")]:
        chk = check_arrow_split(corpus.load(name), arrow)
        rows.append((f"{name}@{arrow}", chk.dim_quotient_B == chk.dim_quotient_L and chk.tables_match, chk.ideal_projective))
    av = check_almost_vanishing(corpus.load("D4"), ["a*e"])
    quotients = all(q for _, q, _ in rows)
    projective_ok = all(p for _, _, p in rows)
    detail = "; ".join(f"{n} quotient {'ok' if q else 'MISMATCH'}, ideal {'projective' if p else 'NOT projective'}" for n, q, p in rows)
    detail += f"; D4 surgery ideal projective {av.ideal_projective}, quotient {av.quotient_matches}, lifts {av.double_lift_agrees}"
    report(5, quotients and projective_ok and av.ok, detail)


def _resolutions():
    out = []
    for name in corpus.names():
        A = algebra_from_presentation(corpus.load(name))
        for v in range(A.num_vertices):
            out += [minimal_resolution(simple(A, v)), minimal_resolution(projective(A, v))]
    L = algebra_from_presentation(corpus.load("D4"))
    out += [minimal_resolution(M) for M in diamond_curated_modules(L)]
    J = two_sided_ideal(L, "a*e")
    Q, JJ, keep = quotient_by_ideal(L, [J.carrier[:, 0]])
    out.append(minimal_resolution(to_quotient_module(JJ.as_left_module(), Q, keep)))
    out += [minimal_resolution(simple(Q, v)) for v in range(Q.num_vertices)]
    for name, e in CORNERS:
        G = idempotent_reduction(algebra_from_presentation(corpus.load(name)), e).corner
        out += [minimal_resolution(M) for M in sample_modules(G, 5, seed=1)]
    return out


def test_criterion_6_resolutions():
    res = _resolutions()
    bad = 0
    for r in res:
        try:
            check_resolution(r)
        except AssertionError:
            bad += 1
    report(6, bad == 0, f"{len(res)} resolutions checked, {bad} failing")


def test_criterion_7_oracle_equivalence():
    pres = corpus.load("A2", GF(2))
    A = algebra_from_presentation(pres)
    oracle = sorted(tuple(dv) for dv, _ in indecomposable_classes_gf2(pres, 4))
    found = sorted(M.dim_vector for M in indecomposables_up_to(A, 4))
    est = findim_bounded(A, 4, GF(2), "exhaustive")
    witness_pd = projective_dimension(est.witness_module)
    ok = oracle == found == [(0, 1), (1, 0), (1, 1)] and est.value == 1 and witness_pd == Finite(1) and est.recheck()
    report(7, ok, f"classes {found} (oracle {oracle}), findim {est.value}, witness {est.witness} pd {witness_pd}")
