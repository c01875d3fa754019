"""Command-line front end: ``thomgen <command> ...``.

Every command builds one output document (a dict).  ``--format text`` prints
a human-readable rendering, ``--format structured`` prints the document as
JSON with rational numbers as ``"p/q"`` strings.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
import time
from fractions import Fraction

from . import catalog
from .assoc import assoc_equations, ci_multidegree, euler_class, format_qpoly
from .expand import ExpansionError, expand
from .exprparse import ParseError, parse_dimvec, parse_factor, parse_rational
from .genfun import RationalGF, gf_equal_exact, k_function, ktilde_function, multiply_factor
from .laurent import format_poly
from .schur import render_schur, schur_expansion
from .thom import IntegralityError, first_difference, render, thom_polynomial
from .verify import SUITES, run_suite

log = logging.getLogger("thomgen")


class UsageError(Exception):
    pass


def _q(x) -> str:
    return str(Fraction(x))


# -- source selection --------------------------------------------------------

def _from_catalog(name: str, params, variant: int, tilde: bool) -> tuple[RationalGF, str]:
    e = catalog.entry(name, *params)
    if not 0 <= variant < len(e.variants):
        raise UsageError(f"{name} has {len(e.variants)} variant(s); --variant {variant} is out of range")
    label = name + (f"({','.join(map(str, params))})" if params else "") + f"@{variant}"
    return e.variants[variant].build(tilde), label


def _from_dimvec(dimvec: str, factor: str | None, scale: str | None, tilde: bool) -> tuple[RationalGF, str]:
    d = parse_dimvec(dimvec)
    gf = ktilde_function(d) if tilde else k_function(d)
    label = ("Ktilde" if tilde else "K") + f"[{','.join(map(str, d))}]"
    if factor:
        gf = multiply_factor(gf, parse_factor(factor, gf.nvars))
        label += f"*({factor})"
    if scale:
        gf = multiply_factor(gf, None, parse_rational(scale))
        label += f"*{scale}"
    return gf, label


def resolve_source(args, tilde: bool = False) -> tuple[RationalGF, str]:
    if bool(args.name) == bool(args.dimvec):
        raise UsageError("give exactly one of --name or --dimvec")
    if args.name:
        name, *params = args.name
        try:
            params = [int(p) for p in params]
        except ValueError:
            raise UsageError(f"catalog parameters must be integers: {params}") from None
        if args.factor or args.scale:
            raise UsageError("--factor/--scale only apply to --dimvec")
        return _from_catalog(name, params, args.variant, tilde)
    return _from_dimvec(args.dimvec, args.factor, args.scale, tilde)


_CATALOG_SOURCE = re.compile(r"^\s*(?P<name>[A-Za-z]\w*)\s*(?:\((?P<params>[^)]*)\))?\s*(?:@(?P<variant>\d+))?\s*$")
_DIMVEC_SOURCE = re.compile(r"^\s*K\[(?P<d>[^\]]*)\]\s*(?:\*(?P<rest>.+))?$")


def parse_source(text: str) -> tuple[RationalGF, str]:
    """``NAME[(p,..)][@variant]`` for catalog entries or ``K[d][*expr]`` for a dimension vector."""
    m = _DIMVEC_SOURCE.match(text)
    if m:
        gf = k_function(parse_dimvec(m["d"]))
        if m["rest"]:
            gf = multiply_factor(gf, parse_factor(m["rest"], gf.nvars))
        return gf, text.strip()
    m = _CATALOG_SOURCE.match(text)
    if not m:
        raise UsageError(f"cannot read generating function {text!r}")
    params = [int(p) for p in m["params"].split(",")] if m["params"] else []
    return _from_catalog(m["name"], params, int(m["variant"] or 0), False)


# -- commands ----------------------------------------------------------------

def cmd_catalog(args) -> tuple[dict, str, int]:
    if args.action == "list":
        rows = catalog.list_entries()
        doc = {"entries": [{"name": n, "mu": mu, "d": d, "variants": v} for n, mu, d, v in rows]}
        width = max(len(r[0]) for r in rows)
        text = "\n".join(f"{n:<{width}}  mu={mu}  d={d}  variants={v}" for n, mu, d, v in rows)
        return doc, text, 0
    if args.action == "export":
        records = list(catalog.export_records())
        return {"records": records}, catalog.export_jsonl().rstrip("\n"), 0
    if not args.target:
        raise UsageError("catalog show needs an entry name")
    name, *params = args.target
    e = catalog.entry(name, *[int(p) for p in params])
    recs = list(catalog.export_records([e]))
    lines = [f"{e.name}{tuple(e.params) if e.params else ''}: mu={e.mu} d={e.d} c={tuple(e.c_per_variant)}"]
    if e.notes:
        lines.append(f"  {e.notes}")
    for i, r in enumerate(recs):
        scal = "" if r["scalar"] == "1" else f" * {r['scalar']}"
        fac = "" if r["factor"] == "1" else f" * {r['factor']}"
        lines.append(f"  [{i}] K_{{{','.join(map(str, r['dimvec']))}}}{fac}{scal}  c={r['c']}")
    doc = {"name": e.name, "params": list(e.params), "mu": e.mu, "d": e.d, "notes": e.notes,
           "c": e.c_per_variant, "variants": recs}
    return doc, "\n".join(lines), 0


def cmd_thom(args) -> tuple[dict, str, int]:
    schur = args.basis == "schur"
    gf, label = resolve_source(args, tilde=schur)
    if schur:
        se = schur_expansion(gf, args.ell, allow_negative_ell=True)
        terms = [{"partition": list(k), "coeff": _q(v)} for k, v in se.sorted_terms()]
        text = render_schur(se, args.style)
    else:
        tp = thom_polynomial(gf, args.ell, allow_negative_ell=True)
        terms = [{"chern": list(k), "coeff": _q(v)} for k, v in tp.sorted_terms()]
        text = render(tp, args.style)
    doc = {"source": label, "basis": args.basis, "ell": args.ell, "mu": gf.nvars,
           "codim": (args.ell + 1) * gf.nvars + gf.homogeneous_degree, "terms": terms}
    return doc, text, 0


def cmd_expand(args) -> tuple[dict, str, int]:
    gf, label = resolve_source(args, tilde=args.tilde)
    series = expand(gf, args.ell, allow_negative_ell=True)
    terms = [{"exponent": list(e), "coeff": _q(c)} for e, c in series.items()]
    doc = {"source": label, "basis": "laurent", "ell": args.ell, "mu": gf.nvars,
           "degree": gf.homogeneous_degree, "terms": terms}
    return doc, format_poly(series), 0


def cmd_equiv(args) -> tuple[dict, str, int]:
    a, la = parse_source(args.a)
    b, lb = parse_source(args.b)
    doc = {"a": la, "b": lb, "ell_min": args.ell_min, "ell_max": args.ell_max}
    if a.nvars == b.nvars and gf_equal_exact(a, b):
        doc["verdict"] = "EXACT-EQUAL"
        return doc, "EXACT-EQUAL", 0
    diff = first_difference(a, b, args.ell_max, args.ell_min)
    if diff is None:
        doc["verdict"] = "SERIES-EQUIVALENT"
        return doc, f"SERIES-EQUIVALENT (ell in [{args.ell_min},{args.ell_max}])", 0
    doc["verdict"] = "INEQUIVALENT"
    if isinstance(diff, str):
        doc["reason"] = diff
        text = f"INEQUIVALENT ({diff})"
    else:
        ell, key, ca, cb = diff
        doc["witness"] = {"ell": ell, "chern": list(key), "coeff_a": _q(ca), "coeff_b": _q(cb)}
        mono = " ".join(f"c{j}" for j in key) or "1"
        text = f"INEQUIVALENT (ell={ell}: {mono} has {ca} vs {cb})"
    return doc, text, 0


def cmd_assoc(args) -> tuple[dict, str, int]:
    d = parse_dimvec(args.dimvec)
    mode = "euler" if args.euler else "ci" if args.ci else "equations"
    doc = {"dimvec": list(d), "mode": mode}
    if mode == "euler":
        forms = euler_class(d)
        doc["factors"] = [str(f) for f in forms]
        doc["matches_denominator"] = sorted(forms) == sorted(k_function(d).denominator)
        text = "\n".join(f"({f})" for f in forms) or "1"
        return doc, text, 0
    eqs = assoc_equations(d)
    if mode == "ci":
        p = ci_multidegree(eqs, nvars=sum(d))
        doc["equations"] = len(eqs)
        doc["multidegree"] = format_poly(p)
        doc["factors"] = [str(e.multidegree) for e in eqs]
        text = " * ".join(f"({e.multidegree})" for e in eqs) or "1"
        return doc, text, 0
    doc["equations"] = [
        {"i": e.i, "j": e.j, "k": e.k, "n": e.n, "polynomial": format_qpoly(e.polynomial),
         "multidegree": str(e.multidegree)}
        for e in eqs
    ]
    text = "\n".join(f"{format_qpoly(e.polynomial)}    [{e.multidegree}]" for e in eqs)
    return doc, text or "no nontrivial equations", 0


def cmd_verify(args) -> tuple[dict, str, int]:
    results = run_suite(args.suite)
    doc = {"suites": {}}
    lines = []
    failed = False
    for name, checks in results.items():
        bad = [c for c in checks if not c.ok]
        failed |= bool(bad)
        doc["suites"][name] = {"passed": not bad, "checks": [c.as_dict() for c in checks]}
        lines.append(f"{name}: {'PASS' if not bad else 'FAIL'} ({len(checks) - len(bad)}/{len(checks)})")
        for c in bad:
            lines.append(f"  {c.name}: expected {c.expected}, got {c.actual}")
    return doc, "\n".join(lines), 1 if failed else 0


# -- argument parsing --------------------------------------------------------

def _add_source(p: argparse.ArgumentParser):
    p.add_argument("--name", nargs="+", metavar="ID", help="catalog entry, then its integer parameters")
    p.add_argument("--variant", type=int, default=0, help="variant index for --name (default 0)")
    p.add_argument("--dimvec", help="dimension vector, e.g. 2,1")
    p.add_argument("--factor", help="extra polynomial factor for --dimvec")
    p.add_argument("--scale", help="rational scalar for --dimvec, e.g. 1/2")


def build_parser() -> argparse.ArgumentParser:
    # output flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="add wall-clock time to the output")
    parser = argparse.ArgumentParser(prog="thomgen", parents=[common],
                                     description="Thom polynomials from rational generating functions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list, export or show catalog entries")
    p.add_argument("action", choices=("list", "export", "show"))
    p.add_argument("target", nargs="*", help="entry name and parameters for show")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("thom", parents=[common], help="Thom polynomial in the Chern or Schur basis")
    _add_source(p)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--basis", choices=("chern", "schur"), default="chern")
    p.add_argument("--style", choices=("numeric", "symbolic-ell"), default="numeric")
    p.set_defaults(func=cmd_thom)

    p = sub.add_parser("expand", parents=[common], help="truncated Laurent expansion")
    _add_source(p)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--tilde", action="store_true", help="use the Schur-side function")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("equiv", parents=[common], help="compare two generating functions")
    p.add_argument("--a", required=True, help="NAME[(params)][@variant] or K[d][*expr]")
    p.add_argument("--b", required=True)
    p.add_argument("--ell-max", type=int, default=2)
    p.add_argument("--ell-min", type=int, default=-1)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("assoc", parents=[common], help="associativity equations and multidegrees")
    p.add_argument("--dimvec", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--equations", action="store_true")
    g.add_argument("--euler", action="store_true")
    g.add_argument("--ci", action="store_true")
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("verify", parents=[common], help="run a reference suite")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    level = logging.DEBUG if os.environ.get("THOMGEN_VERBOSE") else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    timing = getattr(args, "timing", False)
    start = time.perf_counter()
    try:
        doc, text, status = args.func(args)
    except IntegralityError as exc:
        print(f"error: integrality failure at term {exc.key}: coefficient {exc.value}", file=sys.stderr)
        return 1
    except (UsageError, ParseError, ExpansionError, catalog.CatalogError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    log.debug("%s finished in %.3fs", args.command, elapsed)
    out = {"command": list(sys.argv[1:] if argv is None else argv)}
    out.update(doc)
    if timing:
        out["seconds"] = round(elapsed, 6)
    if fmt == "structured":
        print(json.dumps(out, indent=2))
    else:
        print(text)
        if timing:
            print(f"({elapsed:.3f}s)")
    return status


if __name__ == "__main__":
    sys.exit(main())
