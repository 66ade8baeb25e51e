"""Command-line front end: exact zonotope counts, Ehrhart data,
characters, shelling data, spectral-layer tables, and the batch
verification suites, with deterministic machine-readable output.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exceeded.
"""

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import suites
from .equivariant import permutation_character, verify_decomposition
from .graphs import Multigraph, ehrhart_complete, tutte_complete
from .hitchin import HitchinInstance, normalize_partition, stalk_dimension, supports
from .posets import EdgeOrder, LexLabelling, flats, \
    mediocre_maximal_chains, rank_formula, sphere_count
from .zonotopes import Budget, BudgetError, Zonotope, count_via_reciprocity, \
    ehrhart_qp, graphical_zonotope, interior_lattice_points, mobius_count, \
    typed_count_table

SCHEMA = 1


class InputError(Exception):
    pass


def parse_fractions(text):
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad fraction list %r: %s" % (text, exc))


def frac_str(value):
    return str(Fraction(value))


def load_json_arg(text):
    """Accept inline JSON or a path to a JSON file."""
    if os.path.exists(text):
        with open(text) as handle:
            return json.load(handle)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("argument %r is neither a file nor JSON: %s" % (text, exc))


def build_budget(args):
    points = args.budget_points
    if points is None:
        env = os.environ.get("ZONOLAT_BUDGET_POINTS")
        points = int(env) if env else 10 ** 7
    return Budget(max_generators=args.budget_generators, max_points=points)


def load_zonotope(args, budget):
    """Zonotope from --complete/--mult, a graph literal, or a raw vector
    spec; returns (zonotope, graph_or_None, omega)."""
    omega = parse_fractions(args.omega) if args.omega else None
    graph = None
    if args.complete:
        graph = Multigraph.complete(args.complete, args.mult)
    elif getattr(args, "vectors", None):
        obj = load_json_arg(args.vectors)
        vectors = obj["vectors"] if isinstance(obj, dict) else obj
        try:
            return Zonotope(vectors, omega, budget=budget), None, omega
        except ValueError as exc:
            raise InputError(str(exc))
    elif args.graph:
        obj = load_json_arg(args.graph)
        if "vectors" in obj:
            vec_omega = tuple(Fraction(w) for w in obj.get("omega", []))
            if omega is None and vec_omega:
                omega = vec_omega
            try:
                return Zonotope(obj["vectors"], omega, budget=budget), None, omega
            except ValueError as exc:
                raise InputError(str(exc))
        else:
            try:
                graph = Multigraph.from_json(obj)
            except (KeyError, ValueError, TypeError) as exc:
                raise InputError("bad graph literal: %s" % exc)
    else:
        raise InputError("no zonotope given: use --complete, --graph or --vectors")
    if omega is not None and len(omega) != graph.r:
        raise InputError("omega has %d entries for %d vertices" % (len(omega), graph.r))
    return graphical_zonotope(graph, omega, budget), graph, omega


def emit(payload, fmt, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        payload = {"schema": SCHEMA, **payload}
        json.dump(payload, stream, indent=2, sort_keys=True)
        stream.write("\n")
    elif fmt == "csv":
        if "columns" not in payload:
            raise InputError("this command has no tabular output; use --format json")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(payload["columns"])
        for row in payload["rows"]:
            writer.writerow(row)
    else:
        title = payload.get("title")
        if title:
            stream.write(title + "\n")
        if "columns" in payload:
            widths = [max(len(str(c)), *(len(str(row[i])) for row in payload["rows"]))
                      if payload["rows"] else len(str(c))
                      for i, c in enumerate(payload["columns"])]
            stream.write("  ".join(str(c).ljust(w) for c, w
                                   in zip(payload["columns"], widths)).rstrip() + "\n")
            for row in payload["rows"]:
                stream.write("  ".join(str(v).ljust(w) for v, w
                                       in zip(row, widths)).rstrip() + "\n")
        for key, value in payload.items():
            if key in ("columns", "rows", "title"):
                continue
            stream.write("%s: %s\n" % (key, value))


# -- commands ----------------------------------------------------------


def cmd_count(args, fmt, budget):
    z, graph, omega = load_zonotope(args, budget)
    methods = ("oracle", "reciprocity", "mobius") if args.method == "all" \
        else (args.method,)
    values = {}
    breakdown = None
    points = None
    for method in methods:
        if method == "oracle":
            points = interior_lattice_points(z)
            values["oracle"] = len(points)
        elif method == "reciprocity":
            values["reciprocity"] = count_via_reciprocity(z)
        else:
            total, rows = mobius_count(z)
            values["mobius"] = total
            breakdown = [[row[0].describe(), row[1], row[2]] for row in rows]
    agreed = len(set(values.values())) == 1
    payload = {"command": "count", "count": next(iter(values.values())),
               "methods": values, "agree": agreed}
    if omega is not None:
        payload["omega"] = [frac_str(w) for w in omega]
    if args.breakdown and breakdown is not None:
        payload["breakdown"] = breakdown
    if args.breakdown and graph is not None and graph.is_complete_type() \
            and omega is not None:
        from .zonotopes import graphical_count
        total, rows = graphical_count(graph, omega, budget)
        payload["partition_breakdown"] = [
            [str(part), coeff, prod] for part, coeff, prod in rows]
    if args.points and points is not None:
        payload["points"] = [list(p) for p in points]
    emit(payload, fmt)
    return 0 if agreed else 1


def cmd_ehrhart(args, fmt, budget):
    z, graph, omega = load_zonotope(args, budget)
    qp = ehrhart_qp(z)
    rows = [[rank, coeff, period] for _, rank, coeff, period in qp.terms]
    payload = {"command": "ehrhart", "columns": ["degree", "coefficient", "period"],
               "rows": sorted(rows), "dimension": z.dim,
               "full_period": qp.period()}
    if omega is not None:
        payload["omega"] = [frac_str(w) for w in omega]
    if qp.is_polynomial():
        payload["polynomial"] = qp.as_polynomial().render("q")
    if args.at:
        payload["values"] = {t: qp.evaluate(t)
                             for t in (int(v) for v in args.at.split(","))}
    emit(payload, fmt)
    return 0


def cmd_character(args, fmt, budget):
    z, graph, omega = load_zonotope(args, budget)
    if graph is None:
        raise InputError("character needs a graph, not a raw vector spec")
    char = permutation_character(graph, omega, budget)
    rows = [[repr(p), char[p]] for p in char.group]
    payload = {"command": "character", "columns": ["automorphism", "fixed"],
               "rows": rows, "dimension": char.dimension,
               "orbits": char.orbit_count()}
    emit(payload, fmt)
    return 0


def cmd_verify_decomposition(args, fmt, budget):
    z, graph, omega = load_zonotope(args, budget)
    if graph is None or omega is None:
        raise InputError("verify-decomposition needs --graph/--complete and --omega")
    report = verify_decomposition(graph, omega, budget)
    rows = [[repr(r.sigma), r.lhs, r.rhs, "ok" if r.ok else "FAIL"]
            for r in report.rows]
    payload = {
        "command": "verify-decomposition",
        "omega": [frac_str(w) for w in omega],
        "columns": ["automorphism", "lhs", "rhs", "status"],
        "rows": rows,
        "translated_count": report.translated_count,
        "base_count": report.base_count,
        "dimension_gap": report.dimension_gap(),
        "dimension_ok": report.dimension_ok,
        "characters_ok": report.characters_ok,
        "summands": [
            {"representative": str(s.representative), "orbit": s.orbit_size,
             "stabilizer": s.stabilizer_order, "dimension": s.dimension,
             "induced": {repr(p): v for p, v in sorted(s.induced.items(),
                                                       key=lambda kv: kv[0].map)}}
            for s in report.summands],
        "ok": report.ok,
    }
    emit(payload, fmt)
    return 0 if report.ok else 1


def cmd_shelling(args, fmt, budget):
    z, graph, omega = load_zonotope(args, budget)
    if graph is None or omega is None:
        raise InputError("shelling needs --graph/--complete and --omega")
    order = EdgeOrder.from_string(args.edge_order) if args.edge_order else None
    spheres = sphere_count(graph, omega, cross_check=True)
    chains = mediocre_maximal_chains(graph, omega, order)
    fp = flats(graph, omega)
    payload = {"command": "shelling", "spheres": spheres,
               "omega": [frac_str(w) for w in omega],
               "mediocre_chains": chains,
               "non_integral_flats": len(fp.non_integral()),
               "flats": len(fp.elements), "ok": spheres == chains}
    if args.axiom:
        lab = LexLabelling(graph, omega, order)
        payload["axiom_violations"] = len(lab.check_axiom())
        payload["ok"] = payload["ok"] and not payload["axiom_violations"]
    emit(payload, fmt)
    return 0 if payload["ok"] else 1


def cmd_hitchin(args, fmt, budget):
    if args.hitchin_cmd == "supports":
        report = supports(HitchinInstance(args.n, args.d, args.g))
        rows = [[",".join(map(str, r.parts)), "yes" if r.d_integral else "no",
                 r.rank, "yes" if r.supports else "no"] for r in report.rows]
        payload = {"command": "hitchin supports", "n": args.n, "d": args.d,
                   "g": args.g,
                   "columns": ["partition", "d-integral", "rank", "supports"],
                   "rows": rows}
        emit(payload, fmt)
        return 0
    if args.hitchin_cmd == "rank":
        parts = normalize_partition(int(p) for p in args.m.split(","))
        payload = {"command": "hitchin rank",
                   "partition": ",".join(map(str, parts)), "d": args.d,
                   "rank": rank_formula(parts, args.d)}
        emit(payload, fmt)
        return 0
    parts = normalize_partition(int(p) for p in args.m.split(","))
    inst = HitchinInstance(sum(parts), args.d, args.g)
    value = stalk_dimension(parts, inst, budget)
    payload = {"command": "hitchin stalk", "partition": ",".join(map(str, parts)),
               "d": args.d, "g": args.g, "components": value}
    emit(payload, fmt)
    return 0


def cmd_tables(args, fmt, budget):
    which = args.which
    if which == "tutte":
        rows = [[m, str(tutte_complete(m - 1)), ehrhart_complete(m).render("q")]
                for m in range(1, 5)]
        payload = {"command": "tables tutte",
                   "columns": ["m", "tutte", "ehrhart"], "rows": rows}
    elif which == "table1":
        shapes = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        from .hitchin import branch_count
        rows = [["b"] + [branch_count(s) for s in shapes]]
        for d in (0, 1, 2):
            rows.append(["l(omega(%d))" % d] + [rank_formula(s, d) for s in shapes])
        payload = {"command": "tables table1",
                   "columns": ["row"] + ["{%s}" % ",".join(map(str, s)) for s in shapes],
                   "rows": rows}
    elif which == "figure5":
        g4 = Multigraph.complete(4)
        rows = []
        for d in (0, 1, 2):
            omega = tuple(Fraction(d, 4) for _ in range(4))
            z = graphical_zonotope(g4, omega, budget)
            rows.append([d, len(interior_lattice_points(z))])
        payload = {"command": "tables figure5",
                   "columns": ["d", "interior"], "rows": rows}
    else:  # example-polynomials
        from .graphs import Polynomial
        counts = {1: Polynomial([1]), 2: Polynomial([-1, 1]),
                  3: Polynomial([1, -3, 3]), 4: Polynomial([-1, 6, -15, 16])}
        rows = []
        for d in (0, 1, 2):
            total = Polynomial([])
            _, table = typed_count_table(4, 1, d)
            for shape, b, l, _ in table:
                prod = Polynomial([1])
                for p in shape:
                    prod = prod * counts[p]
                total = total + b * l * prod
            rows.append([d, total.render("e")])
        payload = {"command": "tables example-polynomials",
                   "columns": ["d", "count"], "rows": rows}
    emit(payload, fmt)
    return 0


def cmd_verify(args, fmt, budget):
    runs = []
    if args.suite in ("shelling", "all"):
        runs.append(("shelling", suites.shelling_suite(r_max=args.r_max)))
    if args.suite in ("decomposition", "all"):
        if args.graph or args.complete:
            z, graph, omega = load_zonotope(args, budget)
            if graph is None or omega is None:
                raise InputError("decomposition verify needs a graph and --omega")
            name = "cli instance"
            runs.append(("decomposition",
                         suites.decomposition_suite([(name, graph, omega)])))
        else:
            runs.append(("decomposition", suites.decomposition_suite()))
    if args.suite in ("hitchin", "all"):
        d_max = None
        if args.d_range:
            lo, hi = args.d_range.split("..")
            d_max = int(hi)
        runs.append(("hitchin", suites.hitchin_suite(
            n_max=args.n or 6, g=args.g, d_max=d_max)))
    if args.suite in ("oracle", "all"):
        runs.append(("oracle", suites.oracle_suite(trials=args.trials)))
    rows = []
    ok = True
    for name, (suite_ok, detail) in runs:
        ok = ok and suite_ok
        passed = sum(1 for r in detail if r["ok"])
        rows.append([name, "pass" if suite_ok else "FAIL",
                     "%d/%d" % (passed, len(detail))])
        if not suite_ok:
            for r in detail:
                if not r["ok"]:
                    rows.append([name, "counterexample",
                                 "%s: %s" % (r["check"], r["detail"])])
                    break
    payload = {"command": "verify", "columns": ["suite", "status", "checks"],
               "rows": rows, "ok": ok}
    emit(payload, fmt)
    return 0 if ok else 1


def _global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("pretty", "json", "csv"),
                        default=default("pretty"))
    parser.add_argument("--json", action="store_const", const="json",
                        dest="format", default=argparse.SUPPRESS,
                        help="shortcut for --format json")
    parser.add_argument("--budget-points", type=int, default=default(None),
                        help="max candidate points for box scans "
                             "(env ZONOLAT_BUDGET_POINTS)")
    parser.add_argument("--budget-generators", type=int, default=default(24))
    parser.add_argument("--edge-order", default=default(None),
                        help="total edge order like '1-2,2-3,1-3'")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zonolat",
        description="Exact lattice-point counts in translated graphical "
                    "zonotopes and their shelling/representation data.")
    _global_flags(parser, suppress=False)
    shared = argparse.ArgumentParser(add_help=False)
    _global_flags(shared, suppress=True)
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_zonotope_args(p):
        p.add_argument("--graph", help="graph literal / vector spec "
                                       "(inline JSON or a file path)")
        p.add_argument("--vectors", help="generator list as JSON, e.g. '[[2,4]]'")
        p.add_argument("--complete", type=int, help="complete graph size")
        p.add_argument("--mult", type=int, default=1)
        p.add_argument("--omega", help="translation, e.g. '1/4,1/4,1/4,1/4'")

    p = sub.add_parser("count", parents=[shared], help="interior lattice point count")
    add_zonotope_args(p)
    p.add_argument("--method", choices=("oracle", "reciprocity", "mobius", "all"),
                   default="all")
    p.add_argument("--breakdown", action="store_true")
    p.add_argument("--points", action="store_true")

    p = sub.add_parser("ehrhart", parents=[shared], help="Ehrhart quasi-polynomial data")
    add_zonotope_args(p)
    p.add_argument("--at", help="comma list of dilations to evaluate")

    p = sub.add_parser("character", parents=[shared], help="fixed-point character table")
    add_zonotope_args(p)

    p = sub.add_parser("verify-decomposition", parents=[shared],
                       help="per-automorphism decomposition identity")
    add_zonotope_args(p)

    p = sub.add_parser("shelling", parents=[shared], help="sphere and chain counts for one instance")
    add_zonotope_args(p)
    p.add_argument("--axiom", action="store_true",
                   help="also check the labelling axiom on all intervals")

    ph = sub.add_parser("hitchin", help="spectral-layer data")
    hsub = ph.add_subparsers(dest="hitchin_cmd", required=True)
    p = hsub.add_parser("supports", parents=[shared])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=0)
    p.add_argument("-g", type=int, default=2)
    p = hsub.add_parser("rank", parents=[shared])
    p.add_argument("-m", required=True, help="partition, e.g. '2,1,1'")
    p.add_argument("-d", type=int, default=0)
    p = hsub.add_parser("stalk", parents=[shared])
    p.add_argument("-m", required=True, help="partition, e.g. '1,1,1,1'")
    p.add_argument("-d", type=int, default=0)
    p.add_argument("-g", type=int, default=2)

    p = sub.add_parser("tables", parents=[shared], help="reference tables")
    p.add_argument("which", choices=("tutte", "table1", "figure5",
                                     "example-polynomials"))

    p = sub.add_parser("verify", parents=[shared], help="batch verification suites")
    p.add_argument("suite", choices=("shelling", "decomposition", "hitchin",
                                     "oracle", "all"))
    p.add_argument("--r-max", type=int, default=5)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-g", type=int, default=2)
    p.add_argument("--d-range", default=None, help="like 0..4")
    p.add_argument("--trials", type=int, default=200)
    add_zonotope_args(p)
    return parser


_DISPATCH = {
    "count": cmd_count,
    "ehrhart": cmd_ehrhart,
    "character": cmd_character,
    "verify-decomposition": cmd_verify_decomposition,
    "shelling": cmd_shelling,
    "hitchin": cmd_hitchin,
    "tables": cmd_tables,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = build_budget(args)
    try:
        return _DISPATCH[args.cmd](args, args.format, budget)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except BudgetError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
