"""Split an arrow and see when the ideal generated by the new vertex is projective."""

from __future__ import annotations

from fdimlab import arrow_split, check_arrow_split, corpus, format_presentation


def main() -> None:
    for name, arrow in [("tail", "f"), ("C3", "a1"), ("D4", "e")]:
        sp = arrow_split(corpus.load(name), arrow)
        chk = check_arrow_split(corpus.load(name), arrow)
        print(f"--- {name}, arrow {arrow}")
        print(format_presentation(sp.presentation))
        print(f"quotients agree: {chk.tables_match} ({chk.dim_quotient_B} = {chk.dim_quotient_L})")
        print(f"ideal projective: {chk.ideal_projective}, pd S_u = {chk.pd_S_u}")


if __name__ == "__main__":
    main()
