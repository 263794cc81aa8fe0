"""Command-line interface.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
3 a search ran out of its node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import BudgetExceeded, SnarkforgeError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SPEC_HELP = """\
family spec grammar:  NAME[:CONN][:key=value,...]
  NAME  one of P, T1, T2, G, G34no4, flower, goldberg
  CONN  alpha | beta            (default alpha; ignored for flower)
  keys  m, a, b, c (integers; defaults m=3, a=b=c=1),
        contract=true|false     (shrink the central triangle; m=3 only)
        diameters=true|false    (replace w and its loop by diameters; even m)
examples:  T2:alpha:m=7,a=1,b=1,c=1,contract=false   G:beta:m=5   P:alpha:m=10,a=2,b=2,c=1
"""

PROBES = {
    "even-cluster-cycles": ("Loupekine-type lifts with even cluster-cycles are 3-edge-colorable",
                            ["P:alpha:m=6", "P:alpha:m=8,a=2,b=2,c=1", "P:alpha:m=8,a=2,b=2,c=3",
                             "P:alpha:m=12,a=3,b=3,c=1", "P:beta:m=8,a=2,b=2,c=1"]),
    "a-neq-b": ("lifts with unequal arrow voltages are 3-edge-colorable",
                ["P:alpha:m=5,a=1,b=2,c=1", "P:alpha:m=7,a=1,b=3,c=1", "P:beta:m=5,a=1,b=2,c=1",
                 "G:alpha:m=5,a=1,b=2,c=1"]),
    "g-alpha-gcd": ("G_alpha(m;a,b,c) with gcd(c,m) > 1 is 3-edge-colorable",
                    ["G:alpha:m=6,a=1,b=1,c=2", "G:alpha:m=9,a=1,b=1,c=3", "G:alpha:m=10,a=1,b=1,c=2",
                     "G:alpha:m=8,a=1,b=1,c=2"]),
    "g-beta": ("G_beta(m;a,b,c) is never a snark",
               [f"G:beta:m={m},a={a},b={a},c=1" for m in range(3, 9) for a in (1, 2) if a < m]),
    "g-alpha-15-3-3-1": ("status of G_alpha(15;3,3,1)", ["G:alpha:m=15,a=3,b=3,c=1"]),
    "t1-cyclic5": ("T1 lifts are cyclically 5-connected when m/gcd(m,c) > 4",
                   ["T1:alpha:m=5,a=1,b=1,c=1", "T1:alpha:m=5,a=2,b=2,c=2", "T1:beta:m=5,a=1,b=1,c=2",
                    "T1:alpha:m=7,a=1,b=1,c=3", "T1:beta:m=7,a=2,b=2,c=1"]),
}


def default_threads() -> int:
    env = os.environ.get("SNARKFORGE_THREADS")
    if env and env.isdigit() and int(env) > 0:
        return int(env)
    return os.cpu_count() or 1


def _fixtures_dir(arg: str | None):
    if arg:
        return arg
    return "fixtures" if os.path.isdir("fixtures") else None


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands

def cmd_build(args) -> int:
    from .codec import encode_graph6
    from .coloring import find_3_edge_coloring
    from .graph import EdgeColoring, to_dot
    from .report import graph_report
    from .voltage import parse_family_spec

    spec = parse_family_spec(args.spec)
    g = spec.build()
    rotational = spec.m if not spec.contract and not spec.diameters else None
    fmt = "json" if args.json else args.format
    out: dict = {"command": f"build {spec}", "spec": str(spec), "n": g.n, "m_edges": g.m}
    if fmt == "g6":
        print(encode_graph6(g))
    elif fmt == "dot":
        print(to_dot(g, name=spec.name.replace("-", "_"), m=rotational), end="")
    else:
        out["graph6"] = encode_graph6(g)
    if args.props:
        t = time.perf_counter()
        rep = graph_report(g, str(spec), args.node_budget, timings=args.timings)
        out["properties"] = rep
        if fmt != "json":
            _print_table(rep)
        if args.timings:
            out["seconds"] = round(time.perf_counter() - t, 3)
    if args.witness:
        col = find_3_edge_coloring(g, node_budget=args.node_budget)
        if isinstance(col, EdgeColoring):
            out["witness"] = col.to_json()
            if fmt != "json":
                print("\n".join(col.lines()))
        else:
            out["witness"] = None
            if fmt != "json":
                print("no 3-edge-coloring exists")
    if fmt == "json":
        print(json.dumps(out, indent=2))
    return EXIT_OK


def _print_table(rep: dict) -> None:
    for key in ("name", "n", "girth", "chromatic_index", "oddness", "cyclic_connectivity", "aut_order"):
        print(f"{key:>20}  {rep[key]}")
    if "seconds" in rep:
        print(f"{'seconds':>20}  {rep['seconds']}")


def cmd_verify(args) -> int:
    from . import suites

    t = time.perf_counter()
    checks = suites.run(args.suite, _fixtures_dir(args.fixtures), args.threads, args.node_budget)
    failed = [c for c in checks if not c.passed]
    if args.json:
        obj = {"command": f"verify {args.suite}", "passed": not failed,
               "checks": [c.to_json(args.timings) for c in checks]}
        if args.timings:
            obj["seconds"] = round(time.perf_counter() - t, 3)
        print(json.dumps(obj, indent=2))
    else:
        for c in checks:
            print(c.line() if args.timings else c.line().rsplit(" (", 1)[0])
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_probe(args) -> int:
    from .coloring import chromatic_index
    from .invariants import cyclic_edge_connectivity
    from .voltage import parse_family_spec

    title, defaults = PROBES[args.conjecture]
    specs = args.params or defaults
    rows = []
    for text in specs:
        spec = parse_family_spec(text)
        g = spec.build()
        row = {"spec": str(spec), "n": g.n}
        if args.conjecture == "t1-cyclic5":
            cc = cyclic_edge_connectivity(g, 5, args.node_budget)
            row["cyclic_connectivity"] = str(cc)
        else:
            chi = chromatic_index(g, args.node_budget)
            row["chromatic_index"] = chi
            row["snark"] = chi == 4
        rows.append(row)
    label = "probe — not a proof"
    if args.json:
        print(json.dumps({"command": f"probe {args.conjecture}", "label": label, "conjecture": title,
                          "instances": rows}, indent=2))
    else:
        print(f"{label}: {title}")
        for row in rows:
            print("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
    return EXIT_OK


def cmd_flow(args) -> int:
    from . import flows as fl
    from .voltage import family_pole

    p = family_pole(args.pole)
    fs = fl.flow(p, args.string, args.conn)
    idx = fl.string_index(p, args.string, args.conn)
    if args.json:
        print(json.dumps({"pole": args.pole, "connection": args.conn, "string": args.string,
                          "flow": [[list(a), list(b)] for a, b in sorted(fs)], "string_index": idx}, indent=2))
    else:
        print(f"Flow({args.string}) = {fl.format_flow(fs)}")
        print(f"string index = {idx}")
        viol = fl.forbidden_scan(args.string, cyclic=True)
        if viol:
            print("forbidden substrings (cyclic): " + ", ".join(f"{v.text}@{v.start}" for v in viol))
    return EXIT_OK


def cmd_pole(args) -> int:
    from .multipole import PATTERN_FAMILIES, has_loupekine_property, normalized_patterns
    from .voltage import family_pole

    p = family_pole(args.pole)
    pats = sorted(normalized_patterns(p))
    if args.json:
        print(json.dumps({"pole": args.pole, "text": p.to_text(), "patterns": pats,
                          "loupekine_property": has_loupekine_property(p)}, indent=2))
    else:
        print(p.to_text(), end="")
        for s in pats:
            print(f"  {s}  {PATTERN_FAMILIES.get(s, '')}".rstrip())
        print(f"loupekine property: {has_loupekine_property(p)}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--node-budget", type=int, default=10**8, help="search node budget (default 1e8)")
    common.add_argument("--threads", type=int, default=default_threads(),
                        help="worker processes for batch jobs (default: SNARKFORGE_THREADS or CPU count)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--fixtures", metavar="DIR", default=None,
                        help="fixture directory (default ./fixtures, else the bundled copy)")
    common.add_argument("--timings", action="store_true", help="include wall-clock times")

    ap = argparse.ArgumentParser(prog="snarkforge", description="Build and certify snark families.",
                                 epilog=SPEC_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
                                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="construct a family member",
                       epilog=SPEC_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    b.add_argument("spec")
    b.add_argument("--props", action="store_true", help="compute the property report")
    b.add_argument("--format", choices=("g6", "dot", "json"), default="g6")
    b.add_argument("--witness", action="store_true", help="print a 3-edge-coloring if one exists")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=("appendices", "families", "flows", "voltage-facts", "all"))
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("probe", parents=[common], help="run conjecture instances (not proofs)")
    p.add_argument("conjecture", choices=sorted(PROBES))
    p.add_argument("params", nargs="*", help="family specs overriding the default instances")
    p.set_defaults(func=cmd_probe)

    f = sub.add_parser("flow", parents=[common], help="flow set of a color string")
    f.add_argument("--pole", default="G")
    f.add_argument("--conn", choices=("alpha", "beta"), default="alpha")
    f.add_argument("--string", required=True)
    f.set_defaults(func=cmd_flow)

    q = sub.add_parser("pole", parents=[common], help="show a named 5-pole and its admissible patterns")
    q.add_argument("pole")
    q.set_defaults(func=cmd_pole)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SnarkforgeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
