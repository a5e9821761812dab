"""Assertions shared by the homology-heavy tests."""

from __future__ import annotations

import numpy as np

from fdimlab import linalg, resolution_is_exact, resolution_is_minimal, simple
from fdimlab.homology import ext_dim, ext_dim_hom_complex


def _in_radical(P, image) -> bool:
    R = P.radical_span()
    F = P.field
    if image.shape[1] == 0 or F.is_zero(image):
        return True
    if R.shape[1] == 0:
        return False
    return linalg.rank(F, np.concatenate([R, image], axis=1)) == R.shape[1]


def check_resolution(res) -> None:
    """Minimality, exactness, Euler characteristic and the two Ext computations."""
    M = res.module
    A = M.algebra
    assert resolution_is_minimal(res)
    for d in res.differentials:
        assert _in_radical(d.target, d.matrix)
    for d in res.differentials:
        d.check()
    assert resolution_is_exact(res)
    if res.finite() and M.dim:
        assert res.euler_characteristic() == list(M.dim_vector)
    top = len(res.terms) - (1 if not res.finite() else 0)
    for i in range(top):
        for j in range(A.num_vertices):
            mult = ext_dim(M, j, i, res)
            assert mult == res.multiplicities(i)[j]
            if i + 1 < len(res.terms) or res.finite():
                assert ext_dim_hom_complex(M, simple(A, j), i, res) == mult
