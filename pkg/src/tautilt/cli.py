"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error.  All numeric output
is exact (integers or rational strings).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio, modules, mutation, pairs, silting
from .errors import TauTiltError


def _yesno(b):
    return "yes" if b else "no"


def _load_pair_or_module(algebra, path):
    with open(path) as fh:
        obj = json.load(fh)
    if "summands" in obj:
        return fileio.load_pair(algebra, obj)
    return pairs.check_pair(algebra, [fileio.load_module(algebra, obj)], ())


def cmd_check(args):
    algebra = fileio.load_algebra(args.algebra)
    pair = _load_pair_or_module(algebra, args.module)
    flags = pairs.classify_pair(pair)
    print(
        f"support-tau-tilting: {_yesno(flags['supportTauTilting'])}; "
        f"tilting: {_yesno(flags['tilting'])}"
    )
    return 0


def cmd_classify(args):
    algebra = fileio.load_algebra(args.algebra)
    pair = _load_pair_or_module(algebra, args.module)
    flags = pairs.classify_pair(pair)
    for name in sorted(flags):
        print(f"{name}: {_yesno(flags[name])}")
    return 0


def cmd_mutate(args):
    algebra = fileio.load_algebra(args.algebra)
    pair = fileio.load_pair(algebra, args.pair)
    result, direction, new_pos = mutation.mutate(pair, args.position)
    print(f"direction: {direction}")
    print(f"exchanged: {new_pos[0]} {new_pos[1]}")
    print(json.dumps(fileio.dump_pair(result), sort_keys=True))
    return 0


def cmd_enumerate(args):
    algebra = fileio.load_algebra(args.algebra)
    graph = mutation.enumerate_pairs(
        algebra, max_vertices=args.max_vertices, max_depth=args.max_depth
    )
    if args.count_only:
        print(
            f"{len(graph.vertices)} "
            f"{'complete' if graph.complete else 'partial'}"
        )
    else:
        print(fileio.export_graph(graph, "json"))
    return 0


def cmd_hasse(args):
    algebra = fileio.load_algebra(args.algebra)
    graph = mutation.enumerate_pairs(
        algebra, max_vertices=args.max_vertices, max_depth=args.max_depth
    )
    if args.verify:
        mutation.verify_hasse(graph)
    out = fileio.export_graph(graph, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        print(out, end="" if out.endswith("\n") else "\n")
    if args.figure:
        from . import plotting

        plotting.render_hasse(graph, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_gvectors(args):
    algebra = fileio.load_algebra(args.algebra)
    pair = _load_pair_or_module(algebra, args.module)
    for m in pair.summands:
        g = modules.g_vector(m)
        c = modules.c_vector(m)
        print(
            "g={}\tc={}\t{}".format(
                ",".join(map(str, g)), ",".join(map(str, c)),
                pairs.module_label(m),
            )
        )
    for v in pair.support:
        g = pairs._neg_unit(algebra.n_vertices, v)
        print(
            "g={}\tsupport\te{}".format(
                ",".join(map(str, g)), algebra.vertex_names[v]
            )
        )
    return 0


def cmd_einvariant(args):
    algebra = fileio.load_algebra(args.algebra)
    pa = _load_pair_or_module(algebra, args.pair_a)
    pb = _load_pair_or_module(algebra, args.pair_b)
    eab, eba, e = pairs.e_invariant(pa, pb)
    print(f"E'(A,B) = {eab}")
    print(f"E'(B,A) = {eba}")
    print(f"E = {e}")
    return 0


def cmd_silting(args):
    algebra = fileio.load_algebra(args.algebra)
    if args.from_pair:
        pair = fileio.load_pair(algebra, args.from_pair)
        cx = silting.pair_to_complex(pair)
        print(json.dumps(fileio.dump_complex(cx), sort_keys=True))
        return 0
    if args.check:
        cx = fileio.load_complex(algebra, args.check)
        pre = silting.is_presilting(cx)
        print(f"presilting: {_yesno(pre)}")
        print(f"silting: {_yesno(pre and silting.is_silting(cx))}")
        return 0
    if args.mutate:
        cx = fileio.load_complex(algebra, args.mutate)
        out = silting.silting_mutate(cx, args.position)
        print(json.dumps(fileio.dump_complex(out), sort_keys=True))
        return 0
    print("silting: one of --from-pair/--check/--mutate required",
          file=sys.stderr)
    return 2


def cmd_bongartz(args):
    algebra = fileio.load_algebra(args.algebra)
    m = fileio.load_module(algebra, args.module)
    pair = mutation.bongartz_completion(m)
    print(json.dumps(fileio.dump_pair(pair), sort_keys=True))
    print(f"label: {pair.label()}", file=sys.stderr)
    return 0


def cmd_dagger(args):
    algebra = fileio.load_algebra(args.algebra)
    pair = fileio.load_pair(algebra, args.pair)
    dag, _ = pairs.dagger(pair)
    print(json.dumps(fileio.dump_pair(dag), sort_keys=True))
    return 0


def cmd_serve(args):
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tautilt",
        description="workbench for support tau-tilting pairs over bound "
        "quiver algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def alg(p):
        p.add_argument("-a", "--algebra", required=True,
                       help="algebra file (JSON)")

    p = sub.add_parser("check", help="validate a pair / module")
    alg(p)
    p.add_argument("-m", "--module", required=True,
                   help="module or pair file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="all classification flags")
    alg(p)
    p.add_argument("-m", "--module", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mutate", help="mutate a pair at a position")
    alg(p)
    p.add_argument("-p", "--pair", required=True)
    p.add_argument("-k", "--position", type=int, required=True)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("enumerate", help="enumerate the exchange graph")
    alg(p)
    p.add_argument("--max-vertices", type=int, default=mutation.MAX_VERTICES)
    p.add_argument("--max-depth", type=int, default=mutation.MAX_DEPTH)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hasse", help="export the Hasse diagram")
    alg(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--figure", help="also render a figure to this file")
    p.add_argument("-o", "--output", help="write the export here")
    p.add_argument("--verify", action="store_true",
                   help="check arrows against the recomputed order")
    p.add_argument("--max-vertices", type=int, default=mutation.MAX_VERTICES)
    p.add_argument("--max-depth", type=int, default=mutation.MAX_DEPTH)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("gvectors", help="g- and c-vectors of a pair")
    alg(p)
    p.add_argument("-m", "--module", required=True)
    p.set_defaults(func=cmd_gvectors)

    p = sub.add_parser("einvariant", help="E-invariant of two pairs")
    alg(p)
    p.add_argument("--pair-a", required=True)
    p.add_argument("--pair-b", required=True)
    p.set_defaults(func=cmd_einvariant)

    p = sub.add_parser("silting", help="two-term silting operations")
    alg(p)
    p.add_argument("--from-pair", help="pair file -> complex")
    p.add_argument("--check", help="complex file -> silting flags")
    p.add_argument("--mutate", help="complex file to mutate")
    p.add_argument("-k", "--position", type=int, default=0)
    p.set_defaults(func=cmd_silting)

    p = sub.add_parser("bongartz", help="Bongartz completion of a module")
    alg(p)
    p.add_argument("-m", "--module", required=True)
    p.set_defaults(func=cmd_bongartz)

    p = sub.add_parser("dagger", help="dagger dual over the opposite algebra")
    alg(p)
    p.add_argument("-p", "--pair", required=True)
    p.set_defaults(func=cmd_dagger)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8172)
    p.set_defaults(func=cmd_serve)

    return parser


def run_command(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except TauTiltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
