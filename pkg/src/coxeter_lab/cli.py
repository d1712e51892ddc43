"""Command-line front end: ``coxeter-lab <subcommand> ...``.

Output is JSON by default or TSV with ``--format tsv``.  Exit codes: 0 on
success, 1 on domain errors (the library error class is printed), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance
from .characters import (
    CharPair,
    factor_by_search,
    factor_singular,
    phi_shadow_step,
    simplest_object,
    standard_character,
    standard_character_iterative,
)
from .coxeter import defect, defect_plus, orbit, reflect, singularity
from .errors import CoxeterLabError
from .graph_core import EVEN, ODD, bipartition, build_star, classify, parse_wood
from .gvector import GVector, format_fraction, to_fraction
from .rationality import rationality_polynomial
from .sepfunc import (
    SepParam,
    WeightSeq,
    dominated_exact_solution,
    enumerate_K,
    enumerate_N,
    is_separating,
    rho,
    rho_vec,
)
from .surd import Surd


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- input helpers --------------------------------------------------------------

def _load_graph(args):
    sources = [s for s in (args.graph, args.graph_json, args.star) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --graph, --graph-json, --star")
    if args.star is not None:
        try:
            arms = [int(a) for a in args.star.split(",")]
        except ValueError:
            raise UsageError(f"--star expects comma-separated arm lengths, got {args.star!r}")
        w = build_star(arms)
    elif args.graph is not None:
        try:
            text = Path(args.graph).read_text()
        except OSError as exc:
            raise UsageError(f"--graph: {exc}")
        w = parse_wood(_json(text, "--graph"))
    else:
        w = parse_wood(_json(args.graph_json, "--graph-json"))
    return bipartition(w)


def _json(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: invalid JSON ({exc})")


def _vector(ctx, text: str, flag: str = "--vector") -> GVector:
    """A JSON mapping vertex -> value, or a list in declared vertex order."""
    doc = _json(text, flag)
    try:
        if isinstance(doc, dict):
            return GVector.from_mapping(ctx, {k: _exact(v) for k, v in doc.items()})
        if isinstance(doc, list):
            if len(doc) != ctx.n:
                raise UsageError(f"{flag}: expected {ctx.n} entries, got {len(doc)}")
            return GVector.from_mapping(ctx, dict(zip(ctx.wood.vertices, map(_exact, doc))))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{flag}: {exc}")
    raise UsageError(f"{flag}: expected a JSON object or array")


def _exact(x) -> Fraction:
    if isinstance(x, float):
        raise UsageError(f"non-exact number {x!r}; write rationals as \"p/q\" strings")
    return to_fraction(x)


def _alpha(text: str) -> SepParam:
    try:
        return SepParam(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--alpha: not a nonnegative rational: {text!r}")


def _seq(text: str) -> WeightSeq:
    doc = _json(text, "--seq") if text.strip().startswith("[") else text.split(",")
    try:
        return WeightSeq(_entry(x) for x in doc)
    except ValueError as exc:
        raise UsageError(f"--seq: {exc}")


def _entry(x):
    if isinstance(x, str):
        x = x.strip()
        return x if x in ("inf", "∞") else int(x)
    return x


def _value(x):
    if isinstance(x, Surd):
        return format_fraction(x.a) if x.is_rational else {
            "a": format_fraction(x.a), "b": format_fraction(x.b), "d": x.d, "approx": float(x)}
    return format_fraction(x)


# -- handlers ---------------------------------------------------------------------

def cmd_classify(args):
    return classify(_load_graph(args)).to_json()


def cmd_imaginary_root(args):
    cls = classify(_load_graph(args))
    return {"u": cls.u.to_json() if cls.u is not None else None}


def cmd_reflect(args):
    ctx = _load_graph(args)
    return reflect(_vector(ctx, args.vector), args.vertex).to_json()


def cmd_orbit(args):
    ctx = _load_graph(args)
    x = _vector(ctx, args.vector)
    return [{"t": t, "vector": y.to_json()} for t, y in orbit(x, args.t_min, args.t_max)]


def cmd_defect(args):
    ctx = _load_graph(args)
    x = _vector(ctx, args.vector)
    return {"L": format_fraction(defect(x)), "L_plus": format_fraction(defect_plus(x))}


def cmd_singular(args):
    ctx = _load_graph(args)
    return singularity(_vector(ctx, args.vector), args.bound).to_json()


def cmd_factor(args):
    ctx = _load_graph(args)
    x = _vector(ctx, args.vector)
    if classify(ctx).tag == "ExtendedDynkin":
        return factor_singular(x).to_json()
    return factor_by_search(x).to_json()


def cmd_standard_char(args):
    ctx = _load_graph(args)
    fn = standard_character_iterative if args.iterate else standard_character
    return fn(ctx, args.parity, args.index).to_json()


def cmd_simplest(args):
    return simplest_object(_load_graph(args), args.vertex).to_json()


def cmd_phi_step(args):
    ctx = _load_graph(args)
    pair = CharPair(_vector(ctx, args.d, "--d"), _vector(ctx, args.f, "--f"))
    return phi_shadow_step(pair, args.parity).to_json()


def cmd_rho(args):
    p = _alpha(args.alpha)
    if (args.n is None) == (args.seq is None):
        raise UsageError("give exactly one of --n, --seq")
    if args.n is not None:
        n = args.n.strip()
        if n not in ("inf", "∞") and not n.isdigit():
            raise UsageError(f"--n: expected a nonnegative integer or inf, got {n!r}")
        return _value(rho(p, n if n in ("inf", "∞") else int(n)))
    return _value(rho_vec(p, _seq(args.seq)))


def cmd_enum_k(args):
    return enumerate_K(_alpha(args.alpha), Fraction(args.target)).to_json()


def cmd_enum_n(args):
    return enumerate_N(_alpha(args.alpha), Fraction(args.target)).to_json()


def cmd_separating(args):
    return is_separating(_alpha(args.alpha), Fraction(args.target)).to_json()


def cmd_dominated(args):
    v = dominated_exact_solution(_alpha(args.alpha), Fraction(args.target), _seq(args.seq))
    return {"dominated": v.to_json() if v is not None else None}


def cmd_rationality(args):
    return rationality_polynomial(_seq(args.seq)).to_json()


def cmd_selftest(args):
    outcomes = acceptance.run_all()
    for o in outcomes:
        print(o.line(), file=sys.stderr)
    result = [{"criterion": o.number, "name": o.name, "passed": o.passed, "detail": o.detail}
              for o in outcomes]
    return result, 0 if all(o.passed for o in outcomes) else 1


# -- parser -------------------------------------------------------------------------

def _graph_flags(p):
    p.add_argument("--graph", help="path to a JSON graph document")
    p.add_argument("--graph-json", help="inline JSON graph document")
    p.add_argument("--star", help="star graph by arm lengths, e.g. 3,3,1")


def _seq_target(p, seq=False):
    p.add_argument("--alpha", default="0", help="rational parameter p/q (default 0)")
    p.add_argument("--target", required=True)
    if seq:
        p.add_argument("--seq", required=True, help="weights, e.g. 6,2,1 or [6,2,1]")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coxeter-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, graph=True, vector=False, help=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        if graph:
            _graph_flags(p)
        if vector:
            p.add_argument("--vector", required=True,
                           help="JSON object vertex->value or list in declared vertex order")
        return p

    add("classify", cmd_classify, help="Dynkin / extended Dynkin / other")
    add("imaginary-root", cmd_imaginary_root)
    add("reflect", cmd_reflect, vector=True).add_argument("--vertex", required=True)
    p = add("orbit", cmd_orbit, vector=True)
    p.add_argument("--t-min", type=int, default=-4)
    p.add_argument("--t-max", type=int, default=4)
    add("defect", cmd_defect, vector=True)
    add("singular", cmd_singular, vector=True).add_argument("--bound", type=int)
    add("factor", cmd_factor, vector=True)
    p = add("standard-char", cmd_standard_char)
    p.add_argument("--parity", choices=(ODD, EVEN), required=True)
    p.add_argument("--index", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed-form", action="store_true", default=True)
    mode.add_argument("--iterate", action="store_true")
    add("simplest", cmd_simplest).add_argument("--vertex", required=True)
    p = add("phi-step", cmd_phi_step)
    p.add_argument("--d", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--parity", choices=(ODD, EVEN), required=True)
    p = add("rho", cmd_rho, graph=False)
    p.add_argument("--alpha", default="0")
    p.add_argument("--n")
    p.add_argument("--seq")
    _seq_target(add("enum-k", cmd_enum_k, graph=False))
    _seq_target(add("enum-n", cmd_enum_n, graph=False))
    _seq_target(add("separating", cmd_separating, graph=False))
    _seq_target(add("dominated", cmd_dominated, graph=False), seq=True)
    add("rationality", cmd_rationality, graph=False).add_argument("--seq", required=True)
    add("selftest", cmd_selftest, graph=False)
    return parser


# -- output ---------------------------------------------------------------------------

def _cell(x) -> str:
    return x if isinstance(x, str) else json.dumps(x, separators=(",", ":"))


def to_tsv(result) -> str:
    if isinstance(result, dict):
        rows = [("key", "value")] + [(k, _cell(v)) for k, v in result.items()]
    elif isinstance(result, list) and result and all(isinstance(r, dict) for r in result):
        keys = list(result[0])
        rows = [tuple(keys)] + [tuple(_cell(r.get(k)) for k in keys) for r in result]
    elif isinstance(result, list):
        rows = [("index", "value")] + [(str(i), _cell(v)) for i, v in enumerate(result)]
    else:
        rows = [("value",), (_cell(result),)]
    return "\n".join("\t".join(r) for r in rows)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.fn(args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        # library ValueErrors reject argument values (negative index, bad rational)
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CoxeterLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    code = 0
    if args.command == "selftest":
        result, code = result
    if args.format == "tsv":
        print(to_tsv(result))
    else:
        print(json.dumps(result, ensure_ascii=False))
    return code


def main() -> None:
    sys.exit(run())
