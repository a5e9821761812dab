from __future__ import annotations

import pytest

from fdimlab import (
    Finite,
    InfiniteCertified,
    UnknownAtCap,
    corpus,
    direct_sum,
    global_dimension,
    is_projective,
    loewy_length,
    minimal_resolution,
    parse_module,
    projective,
    projective_cover,
    projective_dimension,
    simple,
    structure_parts,
    syzygy,
)
from fdimlab.homology import ext_dim, ext_dim_hom_complex
from helpers import check_resolution


@pytest.mark.parametrize("name", corpus.names())
def test_resolutions_of_simples_and_projectives(name, all_algebras):
    A = all_algebras[name]
    for v in range(A.num_vertices):
        for M in (simple(A, v), projective(A, v)):
            check_resolution(minimal_resolution(M))
    assert is_projective(projective(A, 0))


@pytest.mark.parametrize("name", ["C3", "D4", "A3", "tail"])
def test_ext1_counts_arrows(name, all_algebras):
    A = all_algebras[name]
    q = corpus.load(name).quiver
    for i in range(A.num_vertices):
        res = minimal_resolution(simple(A, i))
        for j in range(A.num_vertices):
            arrows = sum(1 for _, s, t in q.arrows if (q.vertex_index(s), q.vertex_index(t)) == (i, j))
            assert ext_dim(res.module, j, 1, res) == arrows


@pytest.mark.parametrize("name", ["C3", "D4", "tail"])
def test_ext2_counts_minimal_relations(name, all_algebras):
    A = all_algebras[name]
    pres = corpus.load(name)
    for i in range(A.num_vertices):
        res = minimal_resolution(simple(A, i))
        for j in range(A.num_vertices):
            rels = sum(1 for r in pres.relations if r.endpoints() == (i, j))
            assert ext_dim(res.module, j, 2, res) == rels


def test_three_cycle_homology(c3):
    assert projective_dimension(simple(c3, "1")) == Finite(2)
    assert str(global_dimension(c3).value) == "2"
    res = minimal_resolution(simple(c3, "1"))
    assert [ext_dim(res.module, 0, i, res) for i in range(4)] == [1, 0, 1, 0]


def test_diamond_projective_dimensions(d4):
    want = {"S(3)": Finite(3), "S(4)": Finite(2), "P(1)/soc": Finite(3), "coker P(3)->P(1)": Finite(1)}
    for spec, pd in want.items():
        assert projective_dimension(parse_module(d4, spec)) == pd
    s1 = projective_dimension(simple(d4, "1"))
    s2 = projective_dimension(simple(d4, "2"))
    assert isinstance(s1, InfiniteCertified) and isinstance(s2, InfiniteCertified)
    assert 1 <= s1.i < s1.j and 1 <= s2.i < s2.j
    assert isinstance(projective_dimension(parse_module(d4, "rad P(1)")), InfiniteCertified)
    gd = global_dimension(d4)
    assert isinstance(gd.value, InfiniteCertified)


def test_certificate_is_a_real_isomorphism(d4):
    from fdimlab import find_isomorphism

    S1 = simple(d4, "1")
    pd = projective_dimension(S1)
    res = minimal_resolution(S1, pd.j + 1)
    assert find_isomorphism(res.syzygies[pd.i], res.syzygies[pd.j]) is not None


def test_cap_gives_unknown(d4):
    assert projective_dimension(simple(d4, "1"), cap=1) == UnknownAtCap(1)


def test_cover_and_syzygy(d4):
    M = parse_module(d4, "P(1)/soc")
    P, epi, verts = projective_cover(M)
    assert verts == [0]
    assert epi.is_surjective()
    assert syzygy(M).dim == P.dim - M.dim
    parts = structure_parts(M)
    assert parts.top.dim == 1 and parts.radical.dim == M.dim - 1
    assert loewy_length(M) == 2


def test_hom_complex_with_nonsimple_target(d4):
    M = simple(d4, "3")
    res = minimal_resolution(M)
    N = projective(d4, "1")
    vals = [ext_dim_hom_complex(M, N, i, res) for i in range(4)]
    assert vals[0] == 0
    check_resolution(res)


def test_direct_sums_add_resolutions(c3):
    M = direct_sum([simple(c3, "1"), simple(c3, "2")])
    res = minimal_resolution(M)
    check_resolution(res)
    a = minimal_resolution(simple(c3, "1"))
    b = minimal_resolution(simple(c3, "2"))
    for i in range(3):
        assert res.multiplicities(i) == [x + y for x, y in zip(a.multiplicities(i), b.multiplicities(i))]


def test_zero_module():
    from fdimlab import algebra_from_presentation, zero_module

    A = algebra_from_presentation(corpus.load("A2"))
    Z = zero_module(A)
    assert projective_dimension(Z) == Finite(0)
    assert is_projective(Z)
