from __future__ import annotations

import pytest

from fdimlab import (
    adjunction_unit,
    algebra_from_presentation,
    corpus,
    direct_sum,
    find_isomorphism,
    functor_F,
    functor_G,
    idempotent_reduction,
    is_homomorphism,
    projective,
    sample_modules,
    simple,
)

CORNERS = [("C3", ["1"]), ("D4", ["4"]), ("D4", ["1", "3"]), ("tail", ["4"]), ("A3", ["2"])]


def _corner(name, e):
    return idempotent_reduction(algebra_from_presentation(corpus.load(name)), e)


def assert_unit_iso(cor, X):
    eta = adjunction_unit(cor, X)
    eta.check()
    assert eta.target.dim == X.dim
    assert eta.rank() == X.dim


@pytest.mark.parametrize("name, e", CORNERS)
def test_unit_is_iso_on_random_modules(name, e):
    cor = _corner(name, e)
    mods = sample_modules(cor.corner, 50, seed=11)
    assert len(mods) == 50
    for X in mods:
        assert_unit_iso(cor, X)


@pytest.mark.parametrize("name, e", CORNERS)
def test_projectives_correspond(name, e):
    cor = _corner(name, e)
    L, G = cor.ambient, cor.corner
    for g, v in enumerate(cor.vertex_map):
        PG, PL = projective(G, g), projective(L, v)
        phi = find_isomorphism(functor_G(cor, PG), PL)
        assert phi is not None and is_homomorphism(functor_G(cor, PG), PL, phi)
        assert find_isomorphism(functor_F(cor, PL), PG) is not None


@pytest.mark.parametrize("name, e", CORNERS)
def test_simples_and_sums(name, e):
    cor = _corner(name, e)
    G = cor.corner
    for g in range(G.num_vertices):
        assert_unit_iso(cor, simple(G, g))
    assert_unit_iso(cor, direct_sum([simple(G, 0), projective(G, G.num_vertices - 1)]))


def test_functor_F_keeps_the_corner_part():
    cor = _corner("D4", ["4"])
    P = projective(cor.ambient, "1")
    FP = functor_F(cor, P)
    assert FP.dim == P.dim - P.dim_vector[3]
    FP.check()


def test_wrong_algebra_is_rejected():
    cor = _corner("C3", ["1"])
    with pytest.raises(ValueError):
        functor_F(cor, simple(cor.corner, 0))
    with pytest.raises(ValueError):
        functor_G(cor, simple(cor.ambient, 0))
