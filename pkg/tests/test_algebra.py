from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fdimlab import GF, QQ, algebra_from_presentation, corpus, idempotent_reduction, quotient_by_ideal, two_sided_closure


@pytest.mark.parametrize("name", corpus.names())
def test_structure_constants_are_associative_with_unit(name, all_algebras):
    A = all_algebras[name]
    A.check()
    one = A.unit()
    F = A.field
    for i in range(A.n):
        b = A.basis_vector(i)
        assert np.array_equal(F.reduce(A.multiply(one, b)), b)
        assert np.array_equal(F.reduce(A.multiply(b, one)), b)


def test_dimensions(c3, d4, a2):
    assert (c3.n, d4.n, a2.n) == (12, 12, 3)
    assert len(c3.generators) == 3 and len(d4.generators) == 5


def test_products_follow_path_composition(d4):
    lab = d4.labels
    b, a = lab.index("b"), lab.index("a")
    ba = d4.multiply(d4.basis_vector(b), d4.basis_vector(a))
    assert ba[lab.index("b*a")] == 1 and sum(ba != 0) == 1
    ab = d4.multiply(d4.basis_vector(a), d4.basis_vector(b))
    assert not np.any(ab)
    # d*g equals b*a in the algebra
    dg = d4.multiply(d4.basis_vector(lab.index("d")), d4.basis_vector(lab.index("g")))
    assert np.array_equal(dg, ba)


@given(st.lists(st.integers(-3, 3), min_size=36, max_size=36))
@settings(max_examples=40, deadline=None)
def test_random_triples_associate(coeffs):
    A = algebra_from_presentation(corpus.load("D4"))
    x, y, z = (QQ.array(coeffs[12 * i : 12 * (i + 1)]) for i in range(3))
    assert np.array_equal(A.multiply(A.multiply(x, y), z), A.multiply(x, A.multiply(y, z)))


def test_corner_of_three_cycle(c3):
    cor = idempotent_reduction(c3, ["1"])
    G = cor.corner
    assert G.n == 7 and G.vertices == ["2", "3"]
    G.check()
    for g, a in enumerate(cor.embed):
        for h, b in enumerate(cor.embed):
            want = cor.restrict_vector(c3.multiply(c3.basis_vector(a), c3.basis_vector(b)))
            assert np.array_equal(G.multiply(G.basis_vector(g), G.basis_vector(h)), want)


def test_corner_warnings(c3):
    with pytest.warns(UserWarning):
        idempotent_reduction(c3, [])
    with pytest.warns(UserWarning):
        G = idempotent_reduction(c3, ["1", "2", "3"]).corner
    assert G.n == 0


def test_opposite_reverses_products(d4):
    op = d4.opposite()
    op.check()
    for i in range(d4.n):
        for j in range(d4.n):
            assert np.array_equal(op.multiply(op.basis_vector(i), op.basis_vector(j)),
                                  d4.multiply(d4.basis_vector(j), d4.basis_vector(i)))


def test_field_change_keeps_dimension():
    A = algebra_from_presentation(corpus.load("D4", GF(3)))
    assert A.n == 12
    A.check()


def test_quotient_by_vertex_ideal(d4):
    e3 = d4.basis_vector(d4.idempotents[2])
    Q, J, keep = quotient_by_ideal(d4, [e3])
    assert Q.vertices == ["1", "2", "4"]
    assert Q.n + J.dim == d4.n
    Q.check()
    # the projection is multiplicative on kept elements
    P = Q.quotient_projection
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            lhs = Q.multiply(Q.basis_vector(a), Q.basis_vector(b))
            rhs = QQ.matmul(P, d4.multiply(d4.basis_vector(i), d4.basis_vector(j)).reshape(-1, 1)).reshape(-1)
            assert np.array_equal(lhs, QQ.reduce(rhs))


def test_two_sided_closure_of_socle_element(d4):
    x = d4.basis_vector(d4.labels.index("a*e"))
    J = two_sided_closure(d4, [x])
    assert J.shape[1] == 1


def test_ideal_modules(d4):
    from fdimlab import two_sided_ideal

    J = two_sided_ideal(d4, "a*e")
    assert J.dim == 1 and J.times_radical_is_zero()
    assert J.contains(d4.basis_vector(d4.labels.index("a*e")))
    assert not J.contains(d4.basis_vector(d4.labels.index("a")))
    assert J.as_left_module().dim_vector == (0, 1, 0, 0)
    assert J.as_right_module().dim == 1
