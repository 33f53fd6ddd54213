"""Command-line front end.

Exit codes are shared by all subcommands: 0 extendable (or ok), 1 not
extendable (or violations found), 2 invalid input, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from repext import io
from repext.checker import check_representation, check_segments
from repext.graph import InvalidInstance, PartialOrientation, complement
from repext.mdtree import modular_decomposition

EXIT_YES, EXIT_NO, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("repext")


def _verdict(ok: bool) -> int:
    print("EXTENDABLE" if ok else "NOT EXTENDABLE")
    return EXIT_YES if ok else EXIT_NO


def _write_svg(path: str | None, doc: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(doc)


def cmd_orient_ext(args) -> int:
    from repext.orient import orient_ext_explain

    g = io.load_graph(args.graph)
    if args.complement:
        g = complement(g)
    partial = io.load_orientation(args.partial, g) if args.partial else PartialOrientation(g)
    t0 = time.perf_counter()
    poset, conflict = orient_ext_explain(g, partial)
    log.info("orient-ext: n=%d m=%d in %.3fs", g.n, g.m, time.perf_counter() - t0)
    if args.oracle:
        from repext.orient import count_transitive_orientations

        brute = count_transitive_orientations(g, partial) > 0
        print(f"oracle: {'EXTENDABLE' if brute else 'NOT EXTENDABLE'}")
    if poset is None:
        print(conflict.describe())
        return _verdict(False)
    if args.out:
        io.write_json(args.out, poset.to_json())
    return _verdict(True)


def cmd_perm_ext(args) -> int:
    from repext.perm_ext import graph_from_permutation, rep_ext_perm

    if args.perm:
        g = graph_from_permutation([int(x) for x in args.perm.split(",")])
    elif args.graph:
        g = io.load_graph(args.graph)
    else:
        raise InvalidInstance("give --graph or --perm")
    placed = io.load_segments(args.placed) if args.placed else {}
    out = rep_ext_perm(g, placed)
    if args.oracle:
        from repext.oracle import brute_perm_ext

        print(f"oracle: {'EXTENDABLE' if brute_perm_ext(g, placed) else 'NOT EXTENDABLE'}")
    if out is None:
        return _verdict(False)
    if args.out:
        io.write_json(args.out, io.segments_to_json(out))
    if args.svg:
        from repext.render import render_segments

        _write_svg(args.svg, render_segments(out, placed))
    return _verdict(True)


def cmd_fun_ext(args) -> int:
    from repext.fun_ext import rep_ext_fun_explain

    g = io.load_graph(args.graph)
    rep = io.load_rep(args.rep, full=True)
    res = rep_ext_fun_explain(g, rep, construct=bool(args.construct or args.svg))
    log.info("fun-ext: %d variables, %d clauses", res.num_variables, res.num_clauses)
    if args.oracle:
        from repext.oracle import brute_rep_ext_fun

        print(f"oracle: {'EXTENDABLE' if brute_rep_ext_fun(g, rep) else 'NOT EXTENDABLE'}")
    if not res.extendable:
        print(res.reason + (f" {res.failing_pair}" if res.failing_pair else ""))
        return _verdict(False)
    if args.construct:
        io.write_json(args.construct, io.rep_to_json(res.representation))
    if args.svg:
        from repext.render import render_curves

        _write_svg(args.svg, render_curves(res.representation))
    return _verdict(True)


def cmd_fun_ext_star(args) -> int:
    from repext.partialfun_ext import rep_ext_star_graph_explain

    g = io.load_graph(args.graph)
    rep = io.load_rep(args.rep)
    res = rep_ext_star_graph_explain(g, rep, budget=args.budget, construct=bool(args.construct or args.svg))
    log.info("fun-ext-star: %d search nodes", res.nodes)
    if not res.extendable:
        print(res.reason)
        return _verdict(False)
    if args.construct:
        io.write_json(args.construct, io.rep_to_json(res.representation))
    if args.svg:
        from repext.render import render_curves

        _write_svg(args.svg, render_curves(res.representation))
    return _verdict(True)


def cmd_poset_ext(args) -> int:
    from repext.poset_ext import (
        poset_construct,
        poset_construct_partial,
        poset_extendable,
        poset_extendable_partial,
    )
    from repext.regions import check_poset_rep

    p = io.load_poset(args.poset)
    rep = io.load_rep(args.rep, full=not args.partial)
    check_poset_rep(p, rep, full=not args.partial)
    ok, pair = (poset_extendable_partial if args.partial else poset_extendable)(p, rep)
    if args.oracle:
        from repext.oracle import poset_feasible_brute

        print(f"oracle: {'EXTENDABLE' if poset_feasible_brute(p, rep) else 'NOT EXTENDABLE'}")
    if not ok:
        print(f"regions of {pair[0]} and {pair[1]} do not meet")
        return _verdict(False)
    if args.construct or args.svg:
        psi = (poset_construct_partial if args.partial else poset_construct)(p, rep)
        if args.construct:
            io.write_json(args.construct, io.rep_to_json(psi))
        if args.svg:
            from repext.render import render_curves

            _write_svg(args.svg, render_curves(psi))
    return _verdict(True)


def cmd_mdtree(args) -> int:
    tree = modular_decomposition(io.load_graph(args.graph))
    if args.json:
        print(json.dumps(tree.to_json()))
    else:
        print(tree.pretty())
    return EXIT_YES


def cmd_gadget(args) -> int:
    from repext.partialfun_ext import gen_3sat_gadget

    num_vars, clauses = io.load_cnf(args.cnf)
    gd = gen_3sat_gadget(num_vars, clauses)
    io.write_json(args.out_graph, gd.graph.to_json())
    io.write_json(args.out_rep, io.rep_to_json(gd.rep))
    if args.svg:
        from repext.render import render_gadget

        _write_svg(args.svg, render_gadget(gd))
    print(f"gadget: {gd.graph.n} vertices, {gd.graph.m} edges")
    if args.oracle:
        from repext.oracle import brute_sat3

        print(f"oracle: {'SATISFIABLE' if brute_sat3(num_vars, clauses) else 'UNSATISFIABLE'}")
    return EXIT_YES


def cmd_check(args) -> int:
    g = io.load_graph(args.graph)
    if args.segments:
        segs = io.load_segments(args.segments)
        placed = io.load_segments(args.rep) if args.rep else None
        bad = check_segments(g, segs, placed)
    else:
        if not args.psi:
            raise InvalidInstance("give --psi or --segments")
        psi = io.load_rep(args.psi)
        rep = io.load_rep(args.rep) if args.rep else None
        bad = check_representation(g, psi, rep)
    for line in bad:
        print(line)
    print("OK" if not bad else f"{len(bad)} violation(s)")
    return EXIT_YES if not bad else EXIT_NO


def cmd_render(args) -> int:
    from repext.render import render_curves, render_segments

    if args.segments:
        doc = render_segments(io.load_segments(args.segments))
    else:
        if not args.rep:
            raise InvalidInstance("give --rep or --segments")
        rep = io.load_rep(args.rep)
        regions = {}
        if args.poset and args.region is not None:
            from repext.regions import region_full, region_partial

            p = io.load_poset(args.poset)
            full = all(f.is_full for f in rep.values())
            build = region_full if full else region_partial
            regions = {v: build(v, p, rep) for v in args.region}
        doc = render_curves(rep, regions=regions)
    _write_svg(args.out, doc)
    return EXIT_YES


def cmd_oracle(args) -> int:
    from repext.crosscheck import run_suite, summarize

    t0 = time.perf_counter()
    results = run_suite(args.suite, args.count, seed=args.seed, jobs=args.jobs)
    c = summarize(results)
    print(
        f"{args.suite}: {c['agree']}/{c['cases']} agree, {c['checked']}/{c['cases']} checked, "
        f"{c['yes']} yes, {time.perf_counter() - t0:.1f}s"
    )
    for r in results:
        if not (r.agree and r.checked) and r.detail:
            print(f"  mismatch: {r.detail}")
    return EXIT_YES if c["agree"] == c["checked"] == c["cases"] else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="repext", description="Extend partial representations of function and permutation graphs.")
    ap.add_argument("-v", "--verbose", action="store_true")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for independent cases")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orient-ext", help="extend a partial orientation transitively")
    p.add_argument("--graph", required=True)
    p.add_argument("--partial", help="JSON {\"directed\": [[u, v], ...]}")
    p.add_argument("--complement", action="store_true", help="work on the complement of --graph")
    p.add_argument("--out")
    p.add_argument("--oracle", action="store_true", help="also run the exhaustive check")
    p.set_defaults(func=cmd_orient_ext)

    p = sub.add_parser("perm-ext", help="extend a partial segment drawing of a permutation graph")
    p.add_argument("--graph")
    p.add_argument("--perm", help="comma-separated permutation of 1..n instead of --graph")
    p.add_argument("--placed", help="JSON {\"v\": [\"top\", \"bottom\"], ...}")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_perm_ext)

    p = sub.add_parser("fun-ext", help="extend a partial representation by functions on [0, 1]")
    p.add_argument("--graph", required=True, help="the comparability graph")
    p.add_argument("--rep", required=True)
    p.add_argument("--construct", metavar="OUT", help="write the full representation here")
    p.add_argument("--svg")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_fun_ext)

    p = sub.add_parser("fun-ext-star", help="extend a partial representation by partial functions")
    p.add_argument("--graph", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--construct", metavar="OUT")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_fun_ext_star)

    p = sub.add_parser("poset-ext", help="extend a partial representation of a poset")
    p.add_argument("--poset", required=True, help="JSON {\"n\": N, \"less\": [[u, v], ...]}")
    p.add_argument("--rep", required=True)
    p.add_argument("--partial", action="store_true", help="curves may be partial functions")
    p.add_argument("--construct", metavar="OUT")
    p.add_argument("--svg")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_poset_ext)

    p = sub.add_parser("mdtree", help="print the modular decomposition tree")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mdtree)

    p = sub.add_parser("gadget", help="build the hardness gadget of a DIMACS 3-CNF formula")
    p.add_argument("--cnf", required=True)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--out-rep", required=True)
    p.add_argument("--svg")
    p.add_argument("--oracle", action="store_true", help="also report satisfiability by exhaustive search")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("check", help="audit a representation or a segment drawing")
    p.add_argument("--graph", required=True, help="the comparability graph (or the permutation graph for --segments)")
    p.add_argument("--psi", help="full representation to audit")
    p.add_argument("--rep", help="partial representation (or placed segments) it must extend")
    p.add_argument("--segments", help="segment drawing to audit")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="draw curves, regions or segments as SVG")
    p.add_argument("--rep")
    p.add_argument("--segments")
    p.add_argument("--poset", help="shade regions with respect to this poset")
    p.add_argument("--region", type=int, nargs="*", help="vertices whose regions to shade")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("oracle", help="seeded cross-check of an algorithm against its brute-force oracle")
    p.add_argument("suite", choices=["fun", "perm", "perm-adversarial", "regions", "twosat", "poset", "gadget"])
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    from repext.partialfun_ext import BudgetExceeded

    try:
        return args.func(args)
    except InvalidInstance as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
