"""``fdimlab``: command-line front end.

Exit status is 0 on success, 1 when a checked assertion fails and 2 on bad
input.  ``FILE`` is a path to an algebra document or the name of a built-in
one (``fdimlab algebra C3``).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path as FsPath

import numpy as np

from . import corpus
from .algebra import algebra_from_presentation, idempotent_reduction, quotient_by_ideal
from .fields import parse_field
from .findim import findim_bounded
from .groebner import NotFiniteDimensionalAtCap, groebner_basis, normal_basis
from .homology import ext_dim, minimal_resolution, projective_dimension
from .lab import (
    PdNotFinite,
    check_almost_vanishing,
    check_almost_vanishing_bound,
    check_arrow_split,
    check_avoidance_bound,
    check_corner_bound,
    check_ideal_projective,
    check_projective_ideal_bound,
    ext_loewy_length,
    socle_ideal_candidates,
)
from .modspec import ModuleSpecError, parse_module
from .parser import AlgebraSpecError, format_presentation, load_presentation
from .quiver import AdmissibleOrder

log = logging.getLogger("fdimlab")

STATEMENTS = ("corner-bound", "projective-ideal", "ideal-projective", "avoidance", "almost-vanishing", "socle-ideal")
DEMOS = ("C3", "D4")


class InputError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    return str(x)


def _emit(args, payload: dict, text: list[str]) -> None:
    if args.json:
        payload = dict(payload)
        payload["config"] = {
            "command": args.command,
            "cap": args.cap,
            "dim_cap": args.dim_cap,
            "field": args.field,
            "seed": args.seed,
        }
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, default=_jsonable))
    elif not args.quiet:
        print("\n".join(text))


def _load(args, field_override: bool = True):
    src = args.file
    if FsPath(src).is_file():
        try:
            pres = load_presentation(src)
        except AlgebraSpecError as exc:
            raise InputError(f"{src}: {exc}") from None
    elif src in corpus.DOCUMENTS:
        pres = corpus.load(src)
    else:
        raise InputError(f"{src}: no such file or built-in algebra")
    if field_override and args.field and args.command not in ("findim", "check"):
        pres = pres.with_field(_enum_field(args))
    return pres


def _algebra(args, pres):
    order = _order(args, pres)
    cap = args.cap if args.command == "algebra" else None
    try:
        return algebra_from_presentation(pres, order=order, degree_cap=cap)
    except NotFiniteDimensionalAtCap as exc:
        raise InputError(str(exc)) from None


def _order(args, pres):
    if not getattr(args, "precedence", None):
        return None
    try:
        return AdmissibleOrder.from_names(pres.quiver, args.precedence.split(","))
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad precedence: {exc}") from None


def _enum_field(args):
    if not args.field:
        return None
    try:
        return parse_field(args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- subcommands ---------------------------------------------------------------------


def cmd_gb(args) -> int:
    pres = _load(args)
    gb = groebner_basis(pres, _order(args, pres), args.cap)
    try:
        nb = normal_basis(gb)
    except NotFiniteDimensionalAtCap as exc:
        raise InputError(str(exc)) from None
    basis = gb.format()
    payload = {"basis": basis, "normal_count": len(nb), "dim_by_length": nb.dim_by_length()}
    text = ["Gröbner basis:"] + [f"  {b}" for b in basis]
    text += [f"normal words: {len(nb)}", f"by length: {nb.dim_by_length()}"]
    _emit(args, payload, text)
    return 0


def cmd_algebra(args) -> int:
    pres = _load(args)
    A = _algebra(args, pres)
    payload = {"name": A.name, "dimension": A.n, "idempotents": [A.labels[i] for i in A.idempotents], "basis": list(A.labels)}
    text = [f"{A.name}: dimension {A.n}", "basis: " + " ".join(A.labels)]
    if args.reduce:
        verts = args.reduce.split("=", 1)[-1].split(",")
        try:
            cor = idempotent_reduction(A, verts)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        G = cor.corner
        payload["corner"] = {"removed": verts, "dimension": G.n, "basis": list(G.labels)}
        text.append(f"corner without {','.join(verts)}: dimension {G.n}: " + " ".join(G.labels))
    if args.quotient:
        gens = [_element_vector(A, pres, g) for g in args.quotient]
        Q, J, _ = quotient_by_ideal(A, gens)
        payload["quotient"] = {"ideal_dimension": J.dim, "dimension": Q.n, "basis": list(Q.labels)}
        text.append(f"quotient by ⟨{', '.join(args.quotient)}⟩: ideal dim {J.dim}, quotient dim {Q.n}")
    if args.table:
        payload["table"] = A.table_json()
    _emit(args, payload, text)
    return 0


def _element_vector(A, pres, text):
    from .lab import _element_vector as ev

    try:
        return ev(A, pres.element(text))
    except (AlgebraSpecError, KeyError, ValueError) as exc:
        raise InputError(f"bad element {text!r}: {exc}") from None


def _module(A, spec):
    try:
        return parse_module(A, spec)
    except ModuleSpecError as exc:
        raise InputError(str(exc)) from None


def cmd_resolve(args) -> int:
    pres = _load(args)
    A = _algebra(args, pres)
    M = _module(A, args.module)
    res = minimal_resolution(M, args.cap)
    pd = projective_dimension(M, args.cap, res)
    terms = [[A.vertices[v] for v in t] for t in res.terms]
    payload = {"module": args.module, "dim_vector": list(M.dim_vector), "terms": terms, "pd": str(pd)}
    text = [f"{args.module}: dimension vector {list(M.dim_vector)}"]
    text += [f"  P_{i}: " + (" ⊕ ".join(f"P({v})" for v in t) or "0") for i, t in enumerate(terms)]
    text.append(f"pd = {pd}")
    _emit(args, payload, text)
    return 0


def cmd_ext(args) -> int:
    pres = _load(args)
    A = _algebra(args, pres)
    M = _module(A, args.module)
    res = minimal_resolution(M, args.cap)
    top = args.degree if args.degree is not None else len(res.terms) - 1
    rows = {A.vertices[j]: [ext_dim(M, j, i, res) for i in range(top + 1)] for j in range(A.num_vertices)}
    payload = {"module": args.module, "degrees": list(range(top + 1)), "ext": rows}
    text = [f"dim Ext^i({args.module}, S_j), i = 0..{top}"] + [f"  S({j}): {r}" for j, r in rows.items()]
    _emit(args, payload, text)
    return 0


def cmd_reduce(args) -> int:
    pres = _load(args)
    A = _algebra(args, pres)
    verts = args.e.split(",")
    try:
        cor = idempotent_reduction(A, verts)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {"removed": verts, "dimension": cor.corner.n, "basis": list(cor.corner.labels)}
    text = [f"Γ = (1-e)Λ(1-e), e = {'+'.join('e' + v for v in verts)}: dimension {cor.corner.n}"]
    if len(verts) == 1:
        try:
            ell = ext_loewy_length(A, verts[0], args.cap)
            payload["ell"] = ell
            text.append(f"ℓ = {ell}")
        except PdNotFinite as exc:
            payload["ell"] = None
            text.append(f"ℓ undefined: {exc}")
    _emit(args, payload, text)
    return 0


def cmd_split(args) -> int:
    pres = _load(args)
    try:
        chk = check_arrow_split(pres, args.arrow)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad arrow {args.arrow!r}: {exc}") from None
    from .lab import arrow_split

    sp = arrow_split(pres, args.arrow)
    payload = {
        "presentation": format_presentation(sp.presentation),
        "u": sp.u,
        "quotient_dimensions": [chk.dim_quotient_B, chk.dim_quotient_L],
        "quotients_match": chk.tables_match,
        "ideal_projective": chk.ideal_projective,
        "pd_S_u": str(chk.pd_S_u),
    }
    text = [format_presentation(sp.presentation).rstrip(), ""]
    text.append(f"B/Be_uB vs Λ/ΛαΛ: dims {chk.dim_quotient_B} / {chk.dim_quotient_L}; {chk.detail}")
    text.append(f"Be_uB projective as a left module: {chk.ideal_projective}")
    text.append(f"pd S(u) = {chk.pd_S_u}")
    _emit(args, payload, text)
    return 0 if chk.ok else 1


def cmd_surgery(args) -> int:
    pres = _load(args)
    try:
        chk = check_almost_vanishing(pres, args.J, seed=args.seed)
    except (KeyError, ValueError, AlgebraSpecError) as exc:
        raise InputError(str(exc)) from None
    s = chk.surgery
    payload = {
        "presentation": format_presentation(s.presentation),
        "x": s.x,
        "generators": list(s.generators),
        "kernel_relations": list(s.kernel_relations),
        "ideal_projective": chk.ideal_projective,
        "quotients_match": chk.quotient_matches,
        "double_lift_agrees": chk.double_lift_agrees,
        "pd_S_x": str(chk.pd_S_x),
    }
    text = [format_presentation(s.presentation).rstrip(), ""]
    text.append(f"Be_xB projective as a left module: {chk.ideal_projective}")
    text.append(f"B/Be_xB vs Λ/J: {chk.detail}")
    text.append(f"independent of the kernel lifts: {chk.double_lift_agrees}")
    _emit(args, payload, text)
    return 0 if chk.ok else 1


def _curated(args, A):
    if not args.modules:
        return None
    return [_module(A, m) for m in args.modules]


def cmd_check(args) -> int:
    pres = _load(args)
    F = _enum_field(args)
    st = args.statement
    try:
        if st == "corner-bound":
            rep = check_corner_bound(pres, _need(args.e, "--e"), args.dim_cap, F, args.cap)
        elif st == "projective-ideal":
            rep = check_projective_ideal_bound(pres, _need(args.e, "--e"), args.dim_cap, F, args.cap)
        elif st == "ideal-projective":
            rep = check_ideal_projective(pres, _need(args.x, "--x"))
        elif st == "avoidance":
            rep = check_avoidance_bound(pres, _need(args.x, "--x"), args.dim_cap, F, args.cap)
        elif st == "almost-vanishing":
            A = algebra_from_presentation(pres)
            rep = check_almost_vanishing_bound(pres, _need(args.J, "--J"), args.dim_cap, F, args.cap, _curated(args, A))
        else:
            A = algebra_from_presentation(pres)
            cands = socle_ideal_candidates(A, args.dim_cap, F, args.cap)
            payload = {
                "statement": st,
                "candidates": [
                    {
                        "projective": c.projective,
                        "element": c.element,
                        "two_sided": c.two_sided,
                        "in_radical": c.in_radical,
                        "pd_in_quotient": None if c.pd_in_quotient is None else str(c.pd_in_quotient),
                        "report": None if c.report is None else c.report.to_json(),
                        "note": c.note,
                    }
                    for c in cands
                ],
            }
            text = []
            for c in cands:
                line = f"{c.projective} ⊇ ⟨{c.element}⟩ two-sided={c.two_sided} pd in quotient={c.pd_in_quotient}"
                if c.report is not None:
                    line += f" -> {c.report.inequality} [{'holds' if c.report.holds else 'FAILS'}]"
                text.append(line + (f" ({c.note})" if c.note else ""))
            _emit(args, payload, text)
            return 1 if any(c.report is not None and c.report.counterexample for c in cands) else 0
    except PdNotFinite as exc:
        raise InputError(str(exc)) from None
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc)) from None
    text = [f"[{rep.statement}] {rep.inequality}"]
    text += [f"  hypothesis {h.name}: {h.holds}" + (f" ({h.detail})" if h.detail else "") for h in rep.hypotheses]
    text += [f"  {q.name} = {q.value}" + ("" if q.exact else " (lower bound)") for q in rep.quantities]
    text += [f"  witness {w}" for w in rep.witnesses] + [f"  note: {c}" for c in rep.caveats]
    text.append("skipped" if rep.skipped else ("holds" if rep.holds else ("COUNTEREXAMPLE" if rep.conclusive else "fails (inconclusive)")))
    _emit(args, rep.to_json(), text)
    return 0 if rep.holds else 1


def _need(value, flag):
    if not value:
        raise InputError(f"this statement needs {flag}")
    return value


def cmd_findim(args) -> int:
    pres = _load(args)
    A = _algebra(args, pres)
    F = _enum_field(args)
    mode = args.mode
    if mode == "exhaustive" and F is None and A.field.characteristic == 0:
        raise InputError("exhaustive mode needs a finite field: pass --field GF(p)")
    try:
        est = findim_bounded(
            A,
            dim_cap=args.dim_cap,
            field=F,
            mode=mode,
            modules=_curated(args, A) if mode == "curated" else None,
            samples=args.samples,
            seed=args.seed,
            pd_cap=args.cap,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = est.to_json()
    text = [f"findim >= {est.value}" + (" (exact)" if est.exact else ""), f"witness: {est.witness}"]
    if est.indecomposables_by_dim:
        text.append(f"indecomposables by dimension: {est.indecomposables_by_dim}")
    text += [f"note: {n}" for n in est.notes]
    _emit(args, payload, text)
    return 0


def cmd_demo(args) -> int:
    from .regressions import diamond_checks, three_cycle_checks

    checks = three_cycle_checks() if args.name == "C3" else diamond_checks()
    payload = {"demo": args.name, "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}
    # timings make the detail strings vary between runs
    if args.json:
        for c in payload["checks"]:
            if c["name"].startswith("runtime"):
                c["detail"] = ""
    _emit(args, payload, [c.line() for c in checks])
    return 0 if all(c.passed for c in checks) else 1


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=None, help="Gröbner degree cap or resolution length cap")
    common.add_argument("--dim-cap", type=int, default=4, help="module dimension cap for exhaustive search")
    common.add_argument("--field", default=None, help="QQ or GF(p)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--quiet", action="store_true")

    p = argparse.ArgumentParser(prog="fdimlab", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gb", parents=[common], help="Gröbner basis and normal words")
    s.add_argument("file")
    s.add_argument("--precedence", help="arrow precedence, largest first: a,b,...")
    s.set_defaults(func=cmd_gb)

    s = sub.add_parser("algebra", parents=[common], help="structure constants, corners and quotients")
    s.add_argument("file")
    s.add_argument("--precedence")
    s.add_argument("--reduce", help="e=v1[,v2...]: vertices removed by the corner")
    s.add_argument("--quotient", nargs="+", help="generators of a two-sided ideal")
    s.add_argument("--table", action="store_true", help="include the multiplication table")
    s.set_defaults(func=cmd_algebra)

    for name, func, helptext in (("resolve", cmd_resolve, "minimal projective resolution"), ("ext", cmd_ext, "Ext dimensions against the simples")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.add_argument("--module", required=True, help="S(v), P(v), rad P(v), top P(v), soc P(v), P(v)/soc, coker P(u)->P(v)")
        s.add_argument("--precedence")
        if name == "ext":
            s.add_argument("--degree", type=int)
        s.set_defaults(func=func)

    s = sub.add_parser("reduce", parents=[common], help="corner algebra and ℓ")
    s.add_argument("file")
    s.add_argument("--e", required=True, help="v1[,v2...]")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("split", parents=[common], help="replace an arrow by a path of length two")
    s.add_argument("file")
    s.add_argument("--arrow", required=True)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("surgery", parents=[common], help="new vertex for an almost vanishing ideal")
    s.add_argument("file")
    s.add_argument("--J", nargs="+", required=True, help="generators of J")
    s.set_defaults(func=cmd_surgery)

    s = sub.add_parser("check", parents=[common], help="measure and test a finitistic dimension bound")
    s.add_argument("statement", choices=STATEMENTS)
    s.add_argument("file")
    s.add_argument("--e")
    s.add_argument("--x")
    s.add_argument("--J", nargs="+")
    s.add_argument("--modules", nargs="+", help="curated module list for the larger algebra")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("findim", parents=[common], help="certified lower bound for findim")
    s.add_argument("file")
    s.add_argument("--precedence")
    s.add_argument("--mode", choices=("exhaustive", "curated", "sampled"), default="exhaustive")
    s.add_argument("--modules", nargs="+")
    s.add_argument("--samples", type=int, default=50)
    s.set_defaults(func=cmd_findim)

    s = sub.add_parser("demo", parents=[common], help="worked examples with pass/fail lines")
    s.add_argument("name", choices=DEMOS)
    s.set_defaults(func=cmd_demo)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING if not args.quiet else logging.ERROR, format="%(levelname)s: %(message)s")
    if args.cap is not None and args.cap <= 0 or args.dim_cap <= 0:
        print("fdimlab: caps must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"fdimlab: {exc}", file=sys.stderr)
        return 2
    except AlgebraSpecError as exc:
        print(f"fdimlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
