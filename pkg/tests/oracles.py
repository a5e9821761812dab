"""Brute-force references used by the tests.

Nothing here calls the package's linear algebra or search code.  Modules are
built from raw arrow matrices over GF(2) and checked against the relations
directly; Hom, isomorphism and decomposability are found by enumeration.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix


def paths_upto(quiver, length: int):
    """All paths of length <= ``length`` as (source, target, arrows) in application order."""
    out = [(v, v, ()) for v in range(len(quiver.vertices))]
    layer = list(out)
    for _ in range(length):
        nxt = []
        for s, t, arrows in layer:
            for i, (_, a_src, a_tgt) in enumerate(quiver.arrows):
                if quiver.vertices.index(a_src) == t:
                    nxt.append((s, quiver.vertices.index(a_tgt), arrows + (i,)))
        out += nxt
        layer = nxt
    return out


def _contains(word, sub) -> bool:
    k = len(sub)
    return any(word[i : i + k] == sub for i in range(len(word) - k + 1))


def monomial_dimension(pres, max_length: int = 40, endpoints=None) -> int:
    """Count paths avoiding every monomial relation as a subword."""
    subs = []
    for r in pres.relations:
        (p,) = r.terms
        subs.append(tuple(p.arrows))
    count = 0
    for s, t, w in paths_upto(pres.quiver, max_length):
        if endpoints is not None and (s not in endpoints or t not in endpoints):
            continue
        if not any(_contains(w, sub) for sub in subs):
            count += 1
    return count


def truncated_quotient_dimension(pres, length: int) -> int:
    """``dim kQ_{<=L} / span{p·r·q}`` over QQ with every product kept below ``L``."""
    paths = paths_upto(pres.quiver, length)
    index = {(s, t, w): i for i, (s, t, w) in enumerate(paths)}
    rows = []
    for r in pres.relations:
        terms = [((p.source, p.target, tuple(p.arrows)), Fraction(c)) for p, c in r.terms.items()]
        rs, rt = terms[0][0][0], terms[0][0][1]
        longest = max(len(w) for (_, _, w), _ in terms)
        for ps, pt, pw in paths:
            if pt != rs:
                continue
            for qs, qt, qw in paths:
                if qs != rt or len(pw) + longest + len(qw) > length:
                    continue
                row = [0] * len(paths)
                for (_, _, w), c in terms:
                    row[index[(ps, qt, pw + w + qw)]] += c
                rows.append(row)
    if not rows:
        return len(paths)
    dm = DomainMatrix([[sympy.QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.QQ(c) for c in r] for r in rows], (len(rows), len(paths)), sympy.QQ)
    return len(paths) - dm.rank()


# -- GF(2) modules from arrow matrices ---------------------------------------------------


def rank_gf2(M: np.ndarray) -> int:
    M = np.array(M, dtype=np.int64) % 2
    r = 0
    rows, cols = M.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i, c]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] ^= M[r]
        r += 1
    return r


def relation_holds(pres, mats) -> bool:
    d = mats[0].shape[0] if mats else 0
    for rel in pres.relations:
        acc = np.zeros((d, d), dtype=np.int64)
        for p, c in rel.terms.items():
            m = np.eye(d, dtype=np.int64)
            for a in p.arrows:
                m = mats[a] @ m
            acc += int(c) * m
        if np.any(acc % 2):
            return False
    return True


def modules_gf2(pres, dimvec):
    """Every representation with dimension vector ``dimvec`` (arrow matrices on the vertex-ordered basis)."""
    q = pres.quiver
    offsets = np.concatenate([[0], np.cumsum(dimvec)])
    d = int(offsets[-1])
    slots = []
    for _, s, t in q.arrows:
        si, ti = q.vertices.index(s), q.vertices.index(t)
        slots.append((range(offsets[ti], offsets[ti + 1]), range(offsets[si], offsets[si + 1])))
    sizes = [len(r) * len(c) for r, c in slots]
    for values in itertools.product((0, 1), repeat=sum(sizes)):
        mats = []
        o = 0
        for (r, c), sz in zip(slots, sizes):
            m = np.zeros((d, d), dtype=np.int64)
            if sz:
                m[np.ix_(list(r), list(c))] = np.array(values[o : o + sz]).reshape(len(r), len(c))
            o += sz
            mats.append(m)
        if relation_holds(pres, mats):
            yield mats


def _block_maps(dv_m, dv_n):
    om = np.concatenate([[0], np.cumsum(dv_m)])
    on = np.concatenate([[0], np.cumsum(dv_n)])
    cells = [(i, j) for v in range(len(dv_m)) for i in range(on[v], on[v + 1]) for j in range(om[v], om[v + 1])]
    for values in itertools.product((0, 1), repeat=len(cells)):
        phi = np.zeros((int(on[-1]), int(om[-1])), dtype=np.int64)
        for (i, j), x in zip(cells, values):
            phi[i, j] = x
        yield phi


def homs_gf2(mats_m, dv_m, mats_n, dv_n):
    for phi in _block_maps(dv_m, dv_n):
        if all(not np.any((phi @ a - b @ phi) % 2) for a, b in zip(mats_m, mats_n)):
            yield phi


def isomorphic_gf2(mats_m, dv_m, mats_n, dv_n) -> bool:
    if tuple(dv_m) != tuple(dv_n):
        return False
    d = sum(dv_m)
    return any(rank_gf2(phi) == d for phi in homs_gf2(mats_m, dv_m, mats_n, dv_n))


def decomposable_gf2(mats, dv) -> bool:
    d = sum(dv)
    eye = np.eye(d, dtype=np.int64)
    for phi in homs_gf2(mats, dv, mats, dv):
        if np.any(phi) and np.any((phi - eye) % 2) and not np.any((phi @ phi - phi) % 2):
            return True
    return False


def indecomposable_classes_gf2(pres, dim_cap: int):
    """Representatives ``(dimvec, mats)`` of the indecomposables up to isomorphism."""
    nv = len(pres.quiver.vertices)
    reps = []
    for total in range(1, dim_cap + 1):
        for dv in itertools.product(range(total + 1), repeat=nv):
            if sum(dv) != total:
                continue
            for mats in modules_gf2(pres, dv):
                if decomposable_gf2(mats, dv):
                    continue
                if any(isomorphic_gf2(m, d, mats, dv) for d, m in reps if d == dv):
                    continue
                reps.append((dv, mats))
    return reps


def module_arrow_matrices(M, pres):
    """Arrow matrices of a package module, in its own basis, reduced mod 2."""
    A = M.algebra
    out = []
    for name, _, _ in pres.quiver.arrows:
        out.append(np.array(M.act[A.labels.index(name)], dtype=np.int64) % 2)
    return out


def hom_dim_gf2(M, N, pres) -> int:
    """``dim Hom(M, N)`` by counting all homomorphisms (modules ordered by vertex)."""
    mm, nn = module_arrow_matrices(M, pres), module_arrow_matrices(N, pres)
    om, on = np.argsort(M.vertex, kind="stable"), np.argsort(N.vertex, kind="stable")
    mm = [a[np.ix_(om, om)] for a in mm]
    nn = [b[np.ix_(on, on)] for b in nn]
    count = sum(1 for _ in homs_gf2(mm, M.dim_vector, nn, N.dim_vector))
    return int(round(np.log2(count)))
