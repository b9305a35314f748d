"""Command-line front end.

Every command prints JSON (or DOT/text where asked) on stdout.  Exit status
is 0 on success, 1 on a domain error or a failed suite, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import SCHEMA_VERSIONS, __version__
from .cayley import cayley_ball, check_acyclic, check_local_transitivity, grading_violations
from .core import LabeledDigraph, SimpleGraph
from .equiv import OneSidedWord, e0_verdict, e_z_witness
from .linord import (
    classify_vt,
    code_compare_with_symbolic,
    condense,
    finite_order_type,
    parse_order,
    z_compare,
    z_power_code,
)
from .ordinals import Ordinal, ord_compare, ordinal_iso
from .poset import recover_generator_arcs, transitive_closure
from .raag import CommutationGraph, label, normal_form, parse_word, words_equal
from .suites import DEFAULT_SEED, SUITES, dumps, run_suite
from .tournament import (
    BitWindow,
    GridTournament,
    build_tournament,
    check_genericity,
    check_window_genericity,
    decode,
    decode_column,
    identify_columns,
    phi_isomorphism_check,
)


class UsageError(Exception):
    pass


# --- argument helpers ---------------------------------------------------


def parse_graph(text: str) -> CommutationGraph:
    """``3:0-1,1-2`` (n, then edges), or a path to SimpleGraph JSON."""
    if ":" not in text:
        return CommutationGraph(SimpleGraph.from_json(_load(text)))
    n, _, edges = text.partition(":")
    pairs = []
    for e in filter(None, edges.split(",")):
        a, _, b = e.partition("-")
        pairs.append((int(a), int(b)))
    return CommutationGraph.from_edges(int(n), pairs)


def parse_range(text: str) -> tuple:
    """``-3..3`` -> (-3, 3)."""
    a, sep, b = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    return int(a), int(b)


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _json_arg(text: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    return _load(text[1:]) if text.startswith("@") else json.loads(text)


def _word_arg(args) -> BitWindow:
    if args.word_json:
        return BitWindow.from_json(_json_arg(args.word_json))
    if args.bits is None:
        raise UsageError("give --bits or --word-json")
    bits = tuple(int(c) for c in args.bits)
    if args.period:
        if args.period != len(bits):
            raise UsageError("--period must equal the number of --bits given")
        return BitWindow.periodic(bits, lo=args.lo)
    return BitWindow.window(bits, lo=args.lo)


def _emit(args, payload, text: str | None = None):
    out = text if text is not None else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _digraph_out(args, d: LabeledDigraph, extra: dict | None = None):
    if args.format == "dot":
        _emit(args, None, d.to_dot())
    else:
        _emit(args, {**d.to_json(), **(extra or {})})


# --- commands -------------------------------------------------------------


def cmd_raag_nf(args):
    g = parse_graph(args.graph)
    nf = normal_form(g, parse_word(args.word))
    _emit(args, {"normal_form": label(nf), "length": len(nf)})


def cmd_raag_eq(args):
    g = parse_graph(args.graph)
    _emit(args, {"equal": words_equal(g, parse_word(args.w1), parse_word(args.w2))})


def cmd_cayley_ball(args):
    b = cayley_ball(parse_graph(args.graph), args.radius, cap=args.cap)
    _digraph_out(args, b.digraph, {"radius": b.radius, "center": b.center})


def cmd_cayley_check(args):
    b = cayley_ball(parse_graph(args.graph), args.radius, cap=args.cap)
    r_small = args.radius // 2 if args.r_small is None else args.r_small
    if args.digraph:
        b = type(b)(b.graph, b.radius, LabeledDigraph.from_json(_load(args.digraph), oriented=False))
    _emit(args, {
        "vertices": len(b.digraph),
        "acyclic": check_acyclic(b),
        "grading_violations": [list(a) for a in grading_violations(b)],
        "local_transitivity": check_local_transitivity(b, r_small),
        "r_small": r_small,
    })


def _digraph_in(args) -> LabeledDigraph:
    if args.input:
        return LabeledDigraph.from_json(_load(args.input), oriented=False)
    if args.graph:
        return cayley_ball(parse_graph(args.graph), args.radius).digraph
    raise UsageError("give --in or --graph/--radius")


def cmd_poset_close(args):
    _digraph_out(args, transitive_closure(_digraph_in(args)).digraph)


def cmd_poset_recover(args):
    _digraph_out(args, recover_generator_arcs(_digraph_in(args)))


def cmd_lo_zpow(args):
    import random

    alpha = Ordinal.parse(args.alpha)
    code = z_power_code(alpha)
    rng = random.Random(args.seed)
    codes = sorted(set(code.elements(args.sample // 2) + [code.sample(rng) for _ in range(args.sample - args.sample // 2)]))
    elems = [{"code": str(n), "element": str(code.decode(n))} for n in codes]
    mismatches = 0
    for i, a in enumerate(codes):
        for b in codes[i + 1:]:
            want = z_compare(alpha, code.decode(a), code.decode(b))
            mismatches += want != code.compare(a, b)
    _emit(args, {
        "alpha": str(alpha), "seed": args.seed, "code": code.describe(), "sample": elems,
        "pairs_checked": len(codes) * (len(codes) - 1) // 2, "mismatches": mismatches,
        "back_and_forth": code_compare_with_symbolic(alpha, code, sample_size=args.sample, seed=args.seed),
    })


def cmd_lo_condense(args):
    t = parse_order(args.term)
    _emit(args, {"term": str(t), "condensation": str(condense(t))})


def cmd_lo_classify(args):
    t = parse_order(args.term)
    c = classify_vt(t)
    _emit(args, {"term": str(t), "vertex_transitive": c.vertex_transitive,
                 "alpha": None if c.alpha is None else str(c.alpha), "tail": c.tail, "reason": c.reason or None})


def _ordinal_arg(text: str) -> Ordinal:
    if text.startswith("@"):
        data = _load(text[1:])
        return finite_order_type(data["elements"], data["pairs"])
    return Ordinal.parse(text)


def cmd_lo_ordcmp(args):
    a, b = _ordinal_arg(args.a), _ordinal_arg(args.b)
    c = ord_compare(a, b)
    _emit(args, {"a": str(a), "b": str(b), "compare": {-1: "lt", 0: "eq", 1: "gt"}[c], "iso": ordinal_iso(a, b)})


def cmd_tour_build(args):
    x = _word_arg(args)
    (m_lo, m_hi), (n_lo, n_hi) = args.cols, args.rows
    t = build_tournament(x, m_lo, m_hi, n_lo, n_hi)
    if args.format == "dot":
        _emit(args, None, t.digraph.to_dot("T"))
    else:
        _emit(args, t.to_json())


def cmd_tour_generic(args):
    x = _word_arg(args)
    out = check_genericity(x, args.bound).to_json()
    if args.cols and args.rows:
        (m_lo, m_hi), (n_lo, n_hi) = args.cols, args.rows
        missing = check_window_genericity(x, m_lo, m_hi, n_lo, n_hi)
        out["window"] = {"generic": not missing, "unwitnessed_pairs": [[list(v), list(w)] for v, w in missing]}
    _emit(args, out)


def _tournament_in(args) -> GridTournament:
    return GridTournament.from_json(_load(args.input))


def cmd_tour_columns(args):
    t = _tournament_in(args)
    cols = identify_columns(t, args.vertex)
    order = {v: i for i, v in enumerate(t.digraph.vertices)}
    _emit(args, {"vertex": args.vertex, "columns": {str(i): sorted(c, key=order.get) for i, c in cols.items()}})


def cmd_tour_decode(args):
    t = _tournament_in(args)
    sc = decode_column(t, args.vertex) if args.stitched else decode(t, args.vertex)
    _emit(args, sc.to_json())


def cmd_tour_phi(args):
    x = _word_arg(args)
    (m_lo, m_hi), (n_lo, n_hi) = args.cols, args.rows
    ok = phi_isomorphism_check(x, args.k, m_lo, m_hi, n_lo, n_hi, phi_k=args.phi_k)
    _emit(args, {"k": args.k, "phi_k": args.k if args.phi_k is None else args.phi_k, "isomorphism": ok})


def cmd_equiv_e0(args):
    a = OneSidedWord.from_json(_json_arg(args.a))
    b = OneSidedWord.from_json(_json_arg(args.b))
    v = e0_verdict(a, b, exact=not args.window_limited)
    _emit(args, {"equivalent": v.equivalent, "window_limited": v.window_limited})


def cmd_equiv_ez(args):
    a = BitWindow.from_json(_json_arg(args.a))
    b = BitWindow.from_json(_json_arg(args.b))
    v = e_z_witness(a, b, coerce=args.coerce)
    _emit(args, {"equivalent": v.equivalent, "k": v.k, "window_limited": v.window_limited})


def cmd_suite(args):
    report = run_suite(args.name, seed=args.seed)
    _emit(args, None, dumps(report))
    return 0 if report["passed"] else 1


# --- parser ---------------------------------------------------------------


def _add_word_flags(p):
    p.add_argument("--bits", help="bit string, e.g. 01101")
    p.add_argument("--lo", type=int, default=0, help="index of the first bit")
    p.add_argument("--period", type=int, help="extend periodically (must equal the number of bits)")
    p.add_argument("--word-json", help="BitWindow JSON, inline or @file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vtstruct", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="store_true", help="print package and schema versions")
    top = ap.add_subparsers(dest="group")

    def group(name, help_):
        return top.add_parser(name, help=help_).add_subparsers(dest="cmd", required=True)

    def add(sub, name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="write the result here instead of stdout")
        return p

    raag = group("raag", "RAAG word problem")
    p = add(raag, "nf", cmd_raag_nf, "shortlex normal form")
    p.add_argument("--graph", required=True, help="n:edges, e.g. 3:0-1,1-2, or SimpleGraph JSON path")
    p.add_argument("--word", required=True)
    p = add(raag, "eq", cmd_raag_eq, "decide equality of two words")
    p.add_argument("--graph", required=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)

    cay = group("cayley", "Cayley digraph balls")
    p = add(cay, "ball", cmd_cayley_ball, "build a ball")
    p.add_argument("--graph", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--cap", type=int, default=20_000)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p = add(cay, "check", cmd_cayley_check, "acyclicity, grading and local transitivity")
    p.add_argument("--graph", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--r-small", type=int)
    p.add_argument("--cap", type=int, default=20_000)
    p.add_argument("--digraph", help="check this (possibly edited) ball digraph JSON instead")

    po = group("poset", "closure and covering arcs")
    for name, fn, h in (("close", cmd_poset_close, "transitive closure"),
                        ("recover", cmd_poset_recover, "covering arcs of a partial order")):
        p = add(po, name, fn, h)
        p.add_argument("--in", dest="input", help="digraph JSON path, or - for stdin")
        p.add_argument("--graph")
        p.add_argument("--radius", type=int, default=2)
        p.add_argument("--format", choices=("json", "dot"), default="json")

    lo = group("lo", "linear orders Z^alpha")
    p = add(lo, "zpow", cmd_lo_zpow, "sample the code for Z^alpha")
    p.add_argument("--alpha", required=True, help="CNF notation, e.g. 'w^2*3 + w + 4'")
    p.add_argument("--sample", "--sample-size", dest="sample", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p = add(lo, "condense", cmd_lo_condense, "condensation of an order term")
    p.add_argument("--term", required=True, help="e.g. 'Prod(ZPow(w+1), Q)'")
    p = add(lo, "classify", cmd_lo_classify, "vertex-transitive classification")
    p.add_argument("--term", required=True)
    p = add(lo, "ordcmp", cmd_lo_ordcmp, "compare two ordinals")
    p.add_argument("--a", required=True, help="CNF notation or @file with a finite well-order")
    p.add_argument("--b", required=True)

    tour = group("tour", "tournaments T_x")
    p = add(tour, "build", cmd_tour_build, "build a grid window of T_x")
    _add_word_flags(p)
    p.add_argument("--cols", type=parse_range, required=True, help="LO..HI")
    p.add_argument("--rows", type=parse_range, required=True, help="LO..HI")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p = add(tour, "generic", cmd_tour_generic, "genericity screen")
    _add_word_flags(p)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--cols", type=parse_range, help="also check three-cycle witnesses in this window")
    p.add_argument("--rows", type=parse_range)
    p = add(tour, "columns", cmd_tour_columns, "the five columns around a vertex")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--vertex", required=True)
    p = add(tour, "decode", cmd_tour_decode, "read the word back up to shift")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--vertex", required=True)
    p.add_argument("--stitched", action="store_true", help="read the whole column, not just the vertex")
    p = add(tour, "phi", cmd_tour_phi, "check the shear map between T_x and T_x'")
    _add_word_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--phi-k", type=int)
    p.add_argument("--cols", type=parse_range, default=(-2, 2))
    p.add_argument("--rows", type=parse_range, default=(-3, 3))

    eq = group("equiv", "E_0 and E_Z")
    p = add(eq, "e0", cmd_equiv_e0, "eventual equality of one-sided words")
    p.add_argument("--a", required=True, help="word JSON, inline or @file")
    p.add_argument("--b", required=True)
    p.add_argument("--window-limited", action="store_true", help="allow words without tails")
    p = add(eq, "ez", cmd_equiv_ez, "shift equivalence of two-sided words")
    p.add_argument("--a", required=True, help="BitWindow JSON, inline or @file")
    p.add_argument("--b", required=True)
    p.add_argument("--coerce", action="store_true", help="compare periodic with windowed as windows")

    p = top.add_parser("suite", help="run an acceptance suite")
    p.add_argument("name", choices=list(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_suite)
    return ap


_RANGE_FLAGS = ("--cols", "--rows")


def _glue_ranges(argv: list) -> list:
    # "--cols -3..3" would otherwise read -3..3 as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _RANGE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(_glue_ranges(list(sys.argv[1:] if argv is None else argv)))
    if args.version:
        sys.stdout.write(json.dumps({"version": __version__, "schemas": SCHEMA_VERSIONS}, sort_keys=True) + "\n")
        return 0
    if not getattr(args, "fn", None):
        ap.print_usage(sys.stderr)
        return 2
    try:
        status = args.fn(args)
    except UsageError as e:
        sys.stderr.write(f"vtstruct: error: {e}\n")
        return 2
    except (ValueError, KeyError, IndexError, RuntimeError, OSError) as e:
        sys.stdout.write(json.dumps({"error": type(e).__name__, "message": str(e)}, sort_keys=True) + "\n")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
