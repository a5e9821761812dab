"""Reader and writer for the line-oriented algebra-description format.

::

    # comments start with '#'
    field QQ                 # or GF(p)
    vertices 1 2 3
    arrow a1 : 1 -> 2
    arrow a2 : 2 -> 3
    arrow a3 : 3 -> 1
    relations:
      a3*a2*a1;

A relation is a signed sum of terms ``[c *] x*y*...``; products compose right
to left and ``e(v)`` is the trivial path at ``v``.  Expressions that are not
uniform are split into their uniform parts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, QQ, parse_field
from .quiver import AdmissibleOrder, AlgebraElement, Path, PathAlgebraPresentation, Quiver, compose

__all__ = [
    "AlgebraSpecError",
    "parse_algebra_spec",
    "parse_expression",
    "format_presentation",
    "load_presentation",
]

_IDENT = r"[A-Za-z_][A-Za-z0-9_']*"
_VERTEX = r"[A-Za-z0-9_]+"


class AlgebraSpecError(ValueError):
    """Syntax or semantic error, with 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + message)


@dataclass
class _Tok:
    kind: str  # NUM IDENT TRIV OP END
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    rf"\s*(?:(?P<TRIV>e\(\s*(?P<tv>{_VERTEX})\s*\))|(?P<NUM>\d+(?:/\d+)?)|(?P<IDENT>{_IDENT})|(?P<OP>[-+*;]))"
)


def _tokenize(chunks: list[tuple[int, int, str]]) -> list[_Tok]:
    toks: list[_Tok] = []
    for line, col0, text in chunks:
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(text, pos)
            if not m:
                j = pos
                while j < len(text) and text[j].isspace():
                    j += 1
                raise AlgebraSpecError(f"unexpected character {text[j]!r}", line, col0 + j)
            kind = next(k for k in ("TRIV", "NUM", "IDENT", "OP") if m.group(k) is not None)
            start = m.start(kind)
            val = m.group("tv") if kind == "TRIV" else m.group(kind)
            toks.append(_Tok(kind, val, line, col0 + start))
            pos = m.end()
    last_line = chunks[-1][0] if chunks else 0
    toks.append(_Tok("END", "", last_line, 0))
    return toks


class _ExprParser:
    def __init__(self, toks: list[_Tok], quiver: Quiver, field: Field):
        self.toks = toks
        self.i = 0
        self.q = quiver
        self.F = field

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> _Tok:
        t = self.take()
        if t.kind != "OP" or t.text != op:
            raise AlgebraSpecError(f"expected {op!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return t

    def expressions(self) -> list[tuple[AlgebraElement, _Tok]]:
        out = []
        while self.peek().kind != "END":
            if self.peek().kind == "OP" and self.peek().text == ";":
                self.take()
                continue
            start = self.peek()
            out.append((self.expression(), start))
            t = self.peek()
            if t.kind == "END":
                break
            self.expect_op(";")
        return out

    def expression(self) -> AlgebraElement:
        total: dict[Path, object] = {}
        sign = 1
        t = self.peek()
        if t.kind == "OP" and t.text in "+-":
            sign = -1 if t.text == "-" else 1
            self.take()
        while True:
            coeff, path = self.term()
            if path is not None:
                total[path] = total.get(path, 0) + sign * coeff
            t = self.peek()
            if t.kind == "OP" and t.text in "+-":
                sign = -1 if t.text == "-" else 1
                self.take()
                continue
            break
        return AlgebraElement(total, self.F)

    def term(self) -> tuple[Fraction, Path | None]:
        coeff = Fraction(1)
        t = self.peek()
        if t.kind == "NUM":
            self.take()
            coeff = Fraction(t.text)
            self.expect_op("*")
        factors: list[tuple[Path, _Tok]] = []
        while True:
            t = self.take()
            if t.kind == "IDENT":
                if not self.q.has_arrow(t.text):
                    raise AlgebraSpecError(f"unknown arrow {t.text!r}", t.line, t.col)
                factors.append((self.q.arrow(t.text), t))
            elif t.kind == "TRIV":
                if not self.q.has_vertex(t.text):
                    raise AlgebraSpecError(f"unknown vertex {t.text!r}", t.line, t.col)
                factors.append((self.q.trivial(t.text), t))
            else:
                raise AlgebraSpecError(f"expected an arrow or e(v), found {t.text or 'end of input'!r}", t.line, t.col)
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "*":
                self.take()
                continue
            break
        path = factors[-1][0]
        for p, tok in reversed(factors[:-1]):
            r = compose(p, path)
            if r is None:
                raise AlgebraSpecError(
                    f"non-composable product at {self.q.format_path(p)!r} (denotes 0)", tok.line, tok.col
                )
            path = r
        return coeff, path


def parse_expression(text: str, quiver: Quiver, field: Field = QQ) -> AlgebraElement:
    """Parse a single expression (no trailing ``;`` needed)."""
    toks = _tokenize([(1, 1, text)])
    p = _ExprParser(toks, quiver, field)
    exprs = p.expressions()
    if len(exprs) != 1:
        raise AlgebraSpecError("expected exactly one expression", 1, 1)
    return exprs[0][0]


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_algebra_spec(text: str, name: str = "") -> PathAlgebraPresentation:
    """Parse a document into a validated presentation."""
    field: Field | None = None
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] = []
    rel_chunks: list[tuple[int, int, str]] | None = None
    arrow_lines: dict[str, tuple[int, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if rel_chunks is not None:
            rel_chunks.append((lineno, 1, line))
            continue
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        head = stripped.split(None, 1)[0]
        if head == "field":
            if field is not None:
                raise AlgebraSpecError("duplicate field declaration", lineno, col)
            try:
                field = parse_field(stripped[len("field"):])
            except ValueError as exc:
                raise AlgebraSpecError(str(exc), lineno, col) from None
        elif head == "vertices":
            if vertices is not None:
                raise AlgebraSpecError("duplicate vertices declaration", lineno, col)
            vertices = stripped.split()[1:]
            for v in vertices:
                if not re.fullmatch(_VERTEX, v):
                    raise AlgebraSpecError(f"bad vertex identifier {v!r}", lineno, col + line.lstrip().find(v))
            if len(set(vertices)) != len(vertices):
                raise AlgebraSpecError("duplicate vertex identifier", lineno, col)
        elif head == "arrow":
            m = re.fullmatch(rf"arrow\s+({_IDENT})\s*:\s*({_VERTEX})\s*->\s*({_VERTEX})", stripped)
            if not m:
                raise AlgebraSpecError("malformed arrow line; expected 'arrow name : src -> tgt'", lineno, col)
            if vertices is None:
                raise AlgebraSpecError("arrow declared before vertices", lineno, col)
            a, s, t = m.groups()
            for v in (s, t):
                if v not in vertices:
                    raise AlgebraSpecError(f"unknown vertex {v!r}", lineno, col + stripped.find(v, len("arrow")))
            if a in arrow_lines:
                raise AlgebraSpecError(f"duplicate arrow {a!r}", lineno, col)
            arrow_lines[a] = (lineno, col)
            arrows.append((a, s, t))
        elif stripped.startswith("relations:") or stripped == "relations":
            if vertices is None:
                raise AlgebraSpecError("relations before vertices", lineno, col)
            rest_at = line.find("relations") + len("relations")
            if line[rest_at:rest_at + 1] == ":":
                rest_at += 1
            else:
                raise AlgebraSpecError("expected 'relations:'", lineno, col)
            rel_chunks = [(lineno, rest_at + 1, line[rest_at:])]
        else:
            raise AlgebraSpecError(f"unknown directive {head!r}", lineno, col)

    if vertices is None:
        raise AlgebraSpecError("missing 'vertices' line", 1, 1)
    field = field or QQ
    quiver = Quiver(tuple(vertices), tuple(arrows))
    relations: list[AlgebraElement] = []
    if rel_chunks:
        toks = _tokenize(rel_chunks)
        for expr, tok in _ExprParser(toks, quiver, field).expressions():
            if expr.is_zero():
                continue
            for comp in expr.uniform_components():
                if comp.min_length() < 2:
                    raise AlgebraSpecError("relation contains a path of length < 2", tok.line, tok.col)
                relations.append(comp)
    return PathAlgebraPresentation(quiver, field, tuple(relations), name)


def load_presentation(path) -> PathAlgebraPresentation:
    from pathlib import Path as _P

    p = _P(path)
    return parse_algebra_spec(p.read_text(encoding="utf-8"), name=p.stem)


def format_presentation(pres: PathAlgebraPresentation, order: AdmissibleOrder | None = None) -> str:
    """Normalized document; ``parse_algebra_spec`` inverts it."""
    q = pres.quiver
    lines = [f"field {pres.field}", "vertices " + " ".join(q.vertices)]
    for a, s, t in q.arrows:
        lines.append(f"arrow {a} : {s} -> {t}")
    lines.append("relations:")
    for r in pres.relations:
        lines.append(f"  {r.format(q, order)};")
    return "\n".join(lines) + "\n"
