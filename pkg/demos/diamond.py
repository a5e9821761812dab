"""The diamond with a returning arrow: curated pds and the almost vanishing surgery."""

from __future__ import annotations

from fdimlab import check_almost_vanishing, corpus, format_presentation, projective_dimension
from fdimlab.regressions import DIAMOND_CURATED, diamond_checks, diamond_curated_modules


def main() -> None:
    for spec, M in zip(DIAMOND_CURATED, diamond_curated_modules()):
        print(f"{spec:>18}  dim {M.dim}  pd {projective_dimension(M)}")
    chk = check_almost_vanishing(corpus.load("D4"), ["a*e"])
    print(format_presentation(chk.surgery.presentation))
    print(f"new vertex: dim B = {chk.dim_B}, pd S_x = {chk.pd_S_x}, checks pass: {chk.ok}")
    for c in diamond_checks():
        print(c.line())


if __name__ == "__main__":
    main()
