"""Command line: poset building, path listing, charges, the weak
bijection, and the verification sweeps.

Exit codes: 0 success, 1 failed gating check, 2 usage or domain error.
KSHAPE_WORKERS sets the sweep worker count.
"""
from __future__ import annotations

import argparse
import sys

from .errors import IntegrityError
from .partitions import format_partition, parse_partition
from .poset import build_poset, enumerate_paths, equivalence_classes
from .kshape_tableaux import (
    charge_kshape,
    cocharge_kshape,
    kshape_tableau_from_filling,
)
from .pushout import descend, weak_bijection_standard
from .verify import CHECKS, GATING_CHECKS, run_check
from .weak_tableaux import (
    charge_any_weight,
    charge_dominant_semistandard,
    charge_standard,
    cocharge_standard,
    parse_tableau_text,
)


def _read_tableau_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_poset(args) -> int:
    poset = build_poset(args.k, args.size)
    print(f"poset of {args.k}-shapes, boundary size {args.size}")
    print(f"vertices: {len(poset.vertices)}  edges: {poset.edge_count}")
    for v in poset.vertices:
        for m in poset.edges[v]:
            o = "r" if m.orientation == "row" else "c"
            print(
                f"  {format_partition(v)} -> {format_partition(m.target)}"
                f"  {o} (rank {m.rank}, len {m.length})"
            )
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(poset.to_dot() + "\n")
        print(f"dot written to {args.dot}")
    return 0


def _cmd_paths(args) -> int:
    src = parse_partition(args.src)
    dst = parse_partition(args.dst)
    paths = enumerate_paths(src, dst, args.k)
    print(f"{len(paths)} paths from {format_partition(src)} to {format_partition(dst)}")
    for p in paths:
        print(f"  {p.text()}  | charge {p.charge()} cocharge {p.cocharge()}")
    if args.classes:
        classes = equivalence_classes(paths, args.k)
        print(f"{len(classes)} equivalence classes")
        for c in sorted(classes, key=lambda c: c.representative.sort_key()):
            print(
                f"  [{len(c.members)} paths, charge {c.charge}] "
                f"rep {c.representative.text()}"
            )
    return 0


def _cmd_charge(args) -> int:
    text = _read_tableau_text(args.tableau)
    if args.kshape:
        rows = [
            [int(tok) for tok in part.split()]
            for part in text.strip().split("/")
            if part.strip()
        ]
        t = kshape_tableau_from_filling(args.k, rows)
        value = cocharge_kshape(t) if args.cocharge else charge_kshape(t)
        print(value)
        return 0
    t = parse_tableau_text(args.k, text)
    if args.cocharge:
        print(cocharge_standard(t))
        return 0
    if t.is_standard():
        print(charge_standard(t))
    elif all(t.weight[i] >= t.weight[i + 1] for i in range(len(t.weight) - 1)):
        print(charge_dominant_semistandard(t))
    else:
        print(charge_any_weight(t))
    return 0


def _cmd_bijection(args) -> int:
    text = _read_tableau_text(args.tableau)
    t = parse_tableau_text(args.k, text)
    if args.descend:
        record = descend(t)
        print(record.to_json() if args.json else record.to_text())
        return 0
    res = weak_bijection_standard(t)
    target = res.target_tableau
    print(f"target ({args.k - 1}-tableau): {target.text() or '-'}")
    print(f"path: {res.path.text()}")
    print(f"path charge {res.path.charge()} cocharge {res.path.cocharge()}")
    print(
        f"charges: {charge_standard(t)} ="
        f" {charge_standard(target)} + {res.path.charge()}"
    )
    return 0


def _cmd_verify(args) -> int:
    if args.check == "gating":
        names = list(GATING_CHECKS)
    elif args.check == "all":
        names = list(CHECKS)
    else:
        names = [args.check]
    params = {}
    if args.n_max is not None:
        params["n_max"] = args.n_max
    if args.k_max is not None:
        params["k_max"] = args.k_max
    if args.vars is not None:
        params["variables"] = args.vars
    if args.size_max is not None:
        params["size_max"] = args.size_max
    failed = False
    reports = []
    for name in names:
        report = run_check(name, **params)
        reports.append(report)
        print(report.line())
        for f in report.failures:
            print(f"    {f}")
        if not report.passed and not report.conjecture:
            failed = True
    if args.report:
        payload = "[\n" + ",\n".join(r.to_json() for r in reports) + "\n]\n"
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(payload)
        print(f"report written to {args.report}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kshape",
        description="k-shape poset, tableau charges, and the weak bijection",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poset", help="build the poset of k-shapes of a size")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--dot", metavar="FILE", help="write DOT output")
    p.set_defaults(fn=_cmd_poset)

    p = sub.add_parser("paths", help="list paths between two k-shapes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="src", required=True, metavar="PARTITION")
    p.add_argument("--to", dest="dst", required=True, metavar="PARTITION")
    p.add_argument("--classes", action="store_true", help="group into classes")
    p.set_defaults(fn=_cmd_paths)

    p = sub.add_parser("charge", help="charge of a tableau (file or '-')")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tableau", required=True, metavar="FILE|-")
    p.add_argument("--cocharge", action="store_true")
    p.add_argument("--kshape", action="store_true", help="treat as k-shape tableau")
    p.set_defaults(fn=_cmd_charge)

    p = sub.add_parser("bijection", help="apply the weak bijection")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tableau", required=True, metavar="FILE|-")
    p.add_argument("--descend", action="store_true", help="iterate down to k=1")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(fn=_cmd_bijection)

    p = sub.add_parser("verify", help="run a named verification sweep")
    p.add_argument(
        "--check",
        required=True,
        help=f"one of: gating, all, {', '.join(sorted(CHECKS))}",
    )
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--size-max", type=int, default=None)
    p.add_argument("--report", metavar="FILE.json")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
