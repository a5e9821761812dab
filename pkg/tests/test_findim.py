from __future__ import annotations

from collections import Counter

import pytest

from fdimlab import (
    GF,
    algebra_from_presentation,
    corpus,
    ext1_classes,
    extension_module,
    findim_bounded,
    findim_certified,
    idempotent_reduction,
    indecomposables_up_to,
    is_indecomposable,
    simple,
)
from fdimlab.findim import brute_force_indecomposables
from oracles import indecomposable_classes_gf2


@pytest.mark.parametrize("name, cap", [("A2", 4), ("A3", 3), ("C3", 3), ("D4", 3)])
def test_enumeration_matches_raw_search(name, cap):
    pres = corpus.load(name, GF(2))
    A = algebra_from_presentation(pres)
    got = Counter(M.dim_vector for M in indecomposables_up_to(A, cap))
    want = Counter(tuple(dv) for dv, _ in indecomposable_classes_gf2(pres, cap))
    assert got == want


def test_corner_enumeration_matches_package_brute_force(c3_gf2):
    G = idempotent_reduction(c3_gf2, ["1"]).corner
    got = Counter(M.dim_vector for M in indecomposables_up_to(G, 4))
    want = Counter(M.dim_vector for M in brute_force_indecomposables(G, 4))
    assert got == want and sum(got.values()) == 7


def test_extensions_by_a_simple(a2_gf2):
    S1, S2 = simple(a2_gf2, 0), simple(a2_gf2, 1)
    classes = ext1_classes(S1, 1)
    assert len(classes) == 1
    E = extension_module(S1, 1, classes[0])
    assert E.dim == 2 and is_indecomposable(E)
    assert ext1_classes(S2, 0) == []


def test_estimate_is_monotone_in_the_cap(c3_gf2):
    G = idempotent_reduction(c3_gf2, ["1"]).corner
    values = [findim_bounded(G, k, GF(2)).value for k in range(1, 7)]
    assert values == sorted(values)
    assert values[-1] == 1


def test_witness_is_rechecked():
    A = algebra_from_presentation(corpus.load("C3"))
    est = findim_bounded(A, 3, GF(2))
    assert est.value == 2 and est.recheck()
    assert est.to_json()["value"] == 2


def test_exhaustive_mode_needs_a_finite_field(c3):
    with pytest.raises(ValueError):
        findim_bounded(c3, 3)


def test_degenerate_cases():
    S = algebra_from_presentation(corpus.load("semisimple"))
    assert findim_bounded(S, 2, GF(2)).value == 0
    assert findim_bounded(S, mode="sampled", samples=5).value == 0
    A = algebra_from_presentation(corpus.load("A2"))
    est = findim_bounded(A, 0, GF(2))
    assert est.value == 0 and est.notes


def test_sampled_mode_is_reproducible(d4):
    a = findim_bounded(d4, mode="sampled", samples=10, seed=3)
    b = findim_bounded(d4, mode="sampled", samples=10, seed=3)
    assert a.to_json() == b.to_json()
    assert a.value <= 3


def test_certified_value_uses_global_dimension(c3, d4):
    est = findim_certified(c3)
    assert est.exact and est.value == 2
    assert findim_certified(d4) is None


def test_curated_requires_modules(d4):
    with pytest.raises(ValueError):
        findim_bounded(d4, mode="curated")
