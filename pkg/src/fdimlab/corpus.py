"""Built-in algebra documents: the two worked examples plus small degenerate cases."""

from __future__ import annotations

from .parser import parse_algebra_spec
from .quiver import PathAlgebraPresentation

__all__ = ["DOCUMENTS", "load", "names"]

C3 = """\
# 3-cycle with the single monomial relation of length three
field QQ
vertices 1 2 3
arrow a1 : 1 -> 2
arrow a2 : 2 -> 3
arrow a3 : 3 -> 1
relations:
  a3*a2*a1;
"""

# a = alpha, b = beta, g = gamma, d = delta, e = epsilon
D4 = """\
field QQ
vertices 1 2 3 4
arrow a : 1 -> 2
arrow b : 2 -> 4
arrow g : 1 -> 3
arrow d : 3 -> 4
arrow e : 4 -> 1
relations:
  b*a - d*g;
  e*d;
  g*e;
  a*e*b;
"""

# the 3-cycle with an incoming tail that no relation uses
TAIL = """\
field QQ
vertices 1 2 3 4
arrow a1 : 1 -> 2
arrow a2 : 2 -> 3
arrow a3 : 3 -> 1
arrow f : 4 -> 1
relations:
  a3*a2*a1;
"""

A2 = """\
field QQ
vertices 1 2
arrow a : 1 -> 2
relations:
"""

A3 = """\
field QQ
vertices 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
relations:
"""

SEMISIMPLE = """\
field QQ
vertices 1 2
relations:
"""

POINT = """\
field QQ
vertices 1
"""

DOCUMENTS = {
    "C3": C3,
    "D4": D4,
    "tail": TAIL,
    "A2": A2,
    "A3": A3,
    "semisimple": SEMISIMPLE,
    "point": POINT,
}


def names() -> list[str]:
    return list(DOCUMENTS)


def load(name: str, field=None) -> PathAlgebraPresentation:
    """Presentation of a built-in document, optionally over another field."""
    pres = parse_algebra_spec(DOCUMENTS[name], name=name)
    return pres if field is None else pres.with_field(field)
