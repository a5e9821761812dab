"""Walk through the 3-cycle: resolutions, the corner at vertex 1 and its findim."""

from __future__ import annotations

from fdimlab import GF, algebra_from_presentation, corpus, idempotent_reduction, minimal_resolution, simple
from fdimlab.findim import findim_bounded
from fdimlab.regressions import three_cycle_checks


def main() -> None:
    L = algebra_from_presentation(corpus.load("C3"))
    print(f"dim Λ = {L.n}, basis {L.labels}")
    for v in L.vertices:
        res = minimal_resolution(simple(L, v))
        terms = [[L.vertices[i] for i in t] for t in res.terms]
        print(f"S({v}): projective terms {terms}")
    G = idempotent_reduction(L, ["1"]).corner
    print(f"corner away from 1: dim {G.n}")
    est = findim_bounded(G, 6, GF(2))
    print(f"findim of the corner (GF(2), dim <= 6): {est.value}, witness {est.witness}")
    for c in three_cycle_checks():
        print(c.line())


if __name__ == "__main__":
    main()
