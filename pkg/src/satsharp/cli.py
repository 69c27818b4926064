"""Command-line front end.

Every command writes JSON to stdout and a short human summary to stderr
(suppressed by ``--json-only``). Exit codes: 0 ok, 2 input error,
3 capability error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as cons
from .embed import verify_saturation
from .errors import CapabilityError, InputError
from .graph import Graph, complete, disjoint_cliques, join, read_graph, star, write_graph
from .oracle import sat_exact, sharpness_probe
from .threshold import build, format_sequence, parse_sequence, recognize, threshold_weight, trace
from .weights import InfiniteSaturation, lower_bound, weight_report

EXIT_INPUT = 2
EXIT_CAPABILITY = 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _n_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}") from None
    return lo, hi


def _add_forbidden(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("graph", nargs="?", help="forbidden graph file")
    else:
        p.add_argument("--forbidden", metavar="FILE", help="forbidden graph file")
    p.add_argument("--clique", type=int, metavar="K", help="use K_K")
    p.add_argument("--star", type=int, metavar="K", help="use K_{1,K}")
    p.add_argument("--cliques", type=_int_list, metavar="P1,P2,..", help="use a disjoint union of cliques")
    p.add_argument("--seq", metavar="IDSTRING", help="use the threshold graph built from this sequence")
    p.add_argument("--ell", type=int, default=0, help="join with K_ell (with --cliques)")


def _forbidden(args, file_attr: str = "graph") -> Graph:
    path = getattr(args, file_attr, None)
    given = [x is not None for x in (path, args.clique, args.star, args.cliques, args.seq)]
    if sum(given) != 1:
        raise InputError("give exactly one forbidden graph: a file, --clique, --star, --cliques or --seq")
    if path is not None:
        return read_graph(path)
    if args.clique is not None:
        return complete(args.clique)
    if args.star is not None:
        return star(args.star)
    if args.cliques is not None:
        return join(complete(args.ell), disjoint_cliques(args.cliques))
    return build(parse_sequence(args.seq))


def _cmd_weight(args) -> tuple[dict, str]:
    h = _forbidden(args)
    rep = weight_report(h)
    return rep.to_json(), f"wt(H) = {rep.to_json()['graph_weight']}"


def _cmd_lower_bound(args) -> tuple[dict, str]:
    h = _forbidden(args)
    try:
        lb = lower_bound(h)
    except InfiniteSaturation:
        return {"graph_weight": "inf", "saturation": "inf"}, "H is edgeless: sat(H, n) is infinite"
    out = lb.to_json(args.n)
    return out, f"sat(H, n) >= {out['slope']} n - {out['constant']}"


def _cmd_recognize(args) -> tuple[dict, str]:
    h = _forbidden(args)
    seq = recognize(h)
    if seq is None:
        return {"threshold": False, "seq": None}, "not a threshold graph"
    return {"threshold": True, "seq": format_sequence(seq)}, f"threshold, sequence {format_sequence(seq) or '(empty)'}"


def _cmd_threshold_weight(args) -> tuple[dict, str]:
    if args.seq is None:
        raise InputError("--seq is required")
    seq = parse_sequence(args.seq)
    states = trace(seq)
    final = threshold_weight(seq).to_json()
    out = {"seq": format_sequence(seq), **final, "trace": [s.to_json() for s in states]}
    return out, f"wt = {final['wt']}, satlim = {final['satlim']}"


def _recipe(args) -> cons.ConstructionRecipe:
    if args.n is None and args.kind != "dominating-lift":
        raise InputError("--n is required")
    kind = args.kind
    if kind == "dominating-lift":
        if args.base is None:
            raise InputError("dominating-lift needs --base FILE")
        base = read_graph(args.base)
        params = {"base": base}
        if args.forbidden is not None:
            params["base_target"] = read_graph(args.forbidden)
        return cons.ConstructionRecipe(kind, base.n + 1, params)
    if kind == "clique-partition":
        if args.k is None:
            raise InputError("clique-partition needs --k")
        return cons.ConstructionRecipe(kind, args.n, {"k": args.k})
    if kind in ("disjoint-cliques", "join-lift"):
        if args.cliques is None:
            raise InputError(f"{kind} needs --cliques")
        params = {"cliques": args.cliques}
        if kind == "join-lift":
            params["ell"] = args.ell
        return cons.ConstructionRecipe(kind, args.n, params)
    if args.seq is None:
        raise InputError("threshold needs --seq")
    return cons.ConstructionRecipe(kind, args.n, {"seq": format_sequence(parse_sequence(args.seq))})


def _cmd_construct(args) -> tuple[dict, str]:
    recipe = _recipe(args)
    g = recipe.build()
    side = recipe.sidecar()
    out = {**side, "edges": g.m}
    if args.out:
        path = Path(args.out)
        write_graph(g, path)
        Path(str(path) + ".json").write_text(json.dumps(side, indent=2) + "\n", encoding="utf-8")
        out["graph_file"] = str(path)
    else:
        out["graph_text"] = g.to_text()
    return out, f"{recipe.kind}: {g.n} vertices, {g.m} edges"


def _cmd_verify(args) -> tuple[dict, str]:
    g = read_graph(args.host)
    h = _forbidden(args, "forbidden")
    verdict = verify_saturation(g, h)
    msg = "saturated" if verdict.is_saturated else ("not H-free" if not verdict.is_h_free else f"missing {verdict.missing}")
    return verdict.to_json(), msg


def _cmd_sat_exact(args) -> tuple[dict, str]:
    if args.n is None:
        raise InputError("--n is required")
    res = sat_exact(_forbidden(args), args.n, workers=args.workers)
    return res.to_json(), f"sat(H, {args.n}) = {res.to_json()['value']}"


def _cmd_probe(args) -> tuple[dict, str]:
    if args.n_range is None:
        raise InputError("--n-range a:b is required")
    lo, hi = args.n_range
    probe = sharpness_probe(_forbidden(args), lo, hi, workers=args.workers)
    out = probe.to_json()
    return out, f"slopes {out['successive_slopes']} vs weight slope {out['weight_slope']}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satsharp", description="Graph saturation numbers, weights and constructions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-only", action="store_true", help="suppress the stderr summary")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weight", parents=[common], help="edge weights and wt(H)")
    _add_forbidden(p)
    p.set_defaults(func=_cmd_weight)

    p = sub.add_parser("lower-bound", parents=[common], help="weight lower bound on sat(H, n)")
    _add_forbidden(p)
    p.add_argument("--n", type=int)
    p.set_defaults(func=_cmd_lower_bound)

    p = sub.add_parser("threshold-recognize", parents=[common], help="recognize a threshold graph")
    _add_forbidden(p)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("threshold-weight", parents=[common], help="weight and slope along a build sequence")
    p.add_argument("--seq")
    p.set_defaults(func=_cmd_threshold_weight)

    p = sub.add_parser("construct", parents=[common], help="build a saturated graph")
    p.add_argument("kind", choices=cons.KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--cliques", type=_int_list)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--seq")
    p.add_argument("--base", metavar="FILE", help="base graph for dominating-lift")
    p.add_argument("--forbidden", metavar="FILE", help="graph the base is saturated for")
    p.add_argument("--out", metavar="FILE", help="write the graph here and a .json sidecar next to it")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check H-saturation of a host graph")
    p.add_argument("host", help="host graph file")
    _add_forbidden(p, positional=False)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sat-exact", parents=[common], help="exact sat(H, n) by enumeration")
    _add_forbidden(p)
    p.add_argument("--n", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_sat_exact)

    p = sub.add_parser("probe", parents=[common], help="exact values over a range of n")
    _add_forbidden(p)
    p.add_argument("--n-range", type=_n_range)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_probe)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        out, summary = args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    print(json.dumps(out, sort_keys=True))
    if not args.json_only:
        print(summary, file=sys.stderr)
    return 0


def main() -> None:
    sys.exit(run())
