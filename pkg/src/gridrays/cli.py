"""Command-line interface.

Verbs::

    gridrays build    --bound N --out map.json [--tie down|left]
    gridrays error    --map map.json [--per-diagonal out.csv] [--plot out.svg]
    gridrays verify   --map map.json [--dead-pairs] [--report report.json]
    gridrays oracle   --bound N [--bnb] [--budget K] [--out result.json]
    gridrays baseline --scheme rounding|lpath --bound N
                      [--find-s3-violation] [--out map.json]
    gridrays render   (--bound N [--tie down|left] | --map map.json) --out tree.svg
    gridrays leaves   --bound N --lo L --hi H [--tie down|left] [--out out.csv]

Exit codes: 0 success, 1 verification found violations, 2 malformed
arguments or input.  Errors are printed as exact fractions; decimal values
are labelled as approximations.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .baselines import find_s3_violation_rounding, lpath_system, rounding_ray
from .construction import build_system
from .errors import max_error, per_diagonal_errors, point_error_linf
from .oracle import EXHAUSTIVE_CAP, min_error_bnb, min_error_exhaustive
from .system import ParentChoice, RaySystem, RaySystemError, iter_domain
from .verify import run_all_checks

_TIES = {"down": ParentChoice.DOWN, "left": ParentChoice.LEFT}


def _fmt(value: Fraction) -> str:
    approx = value.numerator / value.denominator
    return f"{value} (approx. {approx:.6f})"


def _load_map(path: str) -> RaySystem:
    try:
        return RaySystem.load(path)
    except OSError as exc:
        raise RaySystemError(f"cannot read {path}: {exc}") from exc


def _cmd_build(args: argparse.Namespace) -> int:
    system = build_system(args.bound, _TIES[args.tie])
    system.dump(args.out)
    print(f"wrote bound-{args.bound} map to {args.out}")
    return 0


def _cmd_error(args: argparse.Namespace) -> int:
    system = _load_map(args.map)
    report = max_error(system)
    print(
        f"max error = {_fmt(report.max_error)} at {report.witness_point} "
        f"on target {report.witness_target} (diagonal {report.diagonal})"
    )
    if args.per_diagonal or args.plot:
        rows = per_diagonal_errors(system)
        if args.per_diagonal:
            with open(args.per_diagonal, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(
                    [
                        "diagonal",
                        "max_error_num",
                        "max_error_den",
                        "witness_x",
                        "witness_y",
                        "target_x",
                        "target_y",
                    ]
                )
                for row in rows:
                    writer.writerow(
                        [
                            row.diagonal,
                            row.error.numerator,
                            row.error.denominator,
                            row.witness.x,
                            row.witness.y,
                            row.target.x,
                            row.target.y,
                        ]
                    )
            print(f"wrote per-diagonal errors to {args.per_diagonal}")
        if args.plot:
            from .plots import plot_error_profile

            plot_error_profile(rows, args.plot)
            print(f"wrote error profile to {args.plot}")
    return 0


def _witness_json(value: object) -> object:
    if value is None:
        return None
    if hasattr(value, "_asdict"):
        return {k: _witness_json(v) for k, v in value._asdict().items()}
    if isinstance(value, (list, tuple)):
        return list(value)
    return value


def _cmd_verify(args: argparse.Namespace) -> int:
    system = _load_map(args.map)
    report = run_all_checks(system)
    failed = False
    lines: dict[str, object] = {}
    for name in ("s1", "s2", "s3", "s5", "alternation"):
        violation = report.get(name)
        status = "pass" if violation is None else f"FAIL: {violation}"
        failed = failed or violation is not None
        lines[name] = _witness_json(violation)
        print(f"{name}: {status}")
    leaves = report.get("s4_failures", [])
    print(f"s4: {len(leaves)} prolongation failures (inner leaves)")
    lines["s4_failures"] = [[p.x, p.y] for p in leaves]
    if args.dead_pairs:
        violation = report.get("dead_pair")
        failed = failed or violation is not None
        lines["dead_pair"] = _witness_json(violation)
        print(f"dead-pair: {'pass' if violation is None else f'FAIL: {violation}'}")
    if args.report:
        payload = {
            "bound": system.bound,
            "checks": lines,
            "overall": "fail" if failed else "pass",
        }
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        print(f"wrote report to {args.report}")
    return 1 if failed else 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.bnb:
        result = min_error_bnb(args.bound, budget=args.budget)
    else:
        if args.bound > EXHAUSTIVE_CAP:
            print(
                f"bound {args.bound} exceeds the enumeration cap "
                f"{EXHAUSTIVE_CAP}; pass --bnb",
                file=sys.stderr,
            )
            return 2
        result = min_error_exhaustive(args.bound)
    print(f"minimum error = {_fmt(result.min_error)}")
    print(
        f"systems explored: {result.systems_explored}, pruned: {result.pruned}, "
        f"proven optimal: {result.proven_optimal}"
    )
    if args.out:
        payload = {
            "bound": args.bound,
            "min_error": {
                "num": result.min_error.numerator,
                "den": result.min_error.denominator,
            },
            "witness": result.witness_system.to_json_dict(),
            "systems_explored": result.systems_explored,
            "pruned": result.pruned,
            "proven_optimal": result.proven_optimal,
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
            fh.write("\n")
        print(f"wrote result to {args.out}")
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    if args.scheme == "lpath":
        if args.find_s3_violation:
            print("--find-s3-violation applies to the rounding scheme", file=sys.stderr)
            return 2
        system = lpath_system(args.bound)
        report = max_error(system)
        print(
            f"L-path max error = {_fmt(report.max_error)} at {report.witness_point} "
            f"on target {report.witness_target}"
        )
        if args.out:
            system.dump(args.out)
            print(f"wrote map to {args.out}")
        return 0
    # rounding
    if args.out:
        print("the rounding scheme is not a single tree; no map to export", file=sys.stderr)
        return 2
    if args.find_s3_violation:
        witness = find_s3_violation_rounding(args.bound)
        if witness is None:
            print(f"no prefix violation among targets with diagonal <= {args.bound}")
        else:
            print(
                f"prefix violation: ray({witness.subpoint}) diverges from "
                f"ray({witness.target}) at {witness.divergence}"
            )
        return 0
    worst = Fraction(0)
    for target in iter_domain(args.bound):
        for v in rounding_ray(target):
            err = point_error_linf(v, target)
            if err > worst:
                worst = err
    print(f"rounding worst point error = {_fmt(worst)} over diagonals <= {args.bound}")
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    from .plots import render_tree

    if args.map:
        system = _load_map(args.map)
    else:
        system = build_system(args.bound, _TIES[args.tie])
    render_tree(system, args.out)
    print(f"wrote tree figure to {args.out}")
    return 0


def _cmd_leaves(args: argparse.Namespace) -> int:
    system = build_system(args.bound, _TIES[args.tie])
    if not 0 <= args.lo <= args.hi < args.bound:
        print(
            f"need 0 <= lo <= hi < bound, got lo={args.lo} hi={args.hi} "
            f"bound={args.bound}",
            file=sys.stderr,
        )
        return 2
    total = system.count_inner_leaves_range(args.lo, args.hi)
    print(f"inner leaves on diagonals {args.lo}..{args.hi}: {total}")
    rows = [(d, len(system.inner_leaves(d))) for d in range(args.lo, args.hi + 1)]
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["diagonal", "inner_leaves"])
            writer.writerows(rows)
        print(f"wrote per-diagonal counts to {args.out}")
    else:
        print("diagonal,inner_leaves")
        for d, count in rows:
            print(f"{d},{count}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridrays",
        description="Digital ray trees on the grid: build, measure, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tie(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--tie",
            choices=sorted(_TIES),
            default="down",
            help="how to break exact midline ties (default: down)",
        )

    p = sub.add_parser("build", help="build a map with the zone construction")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out", required=True)
    add_tie(p)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("error", help="exact worst-case error of a map")
    p.add_argument("--map", required=True)
    p.add_argument("--per-diagonal", metavar="CSV", help="write per-diagonal errors")
    p.add_argument("--plot", metavar="FIG", help="write an error profile figure")
    p.set_defaults(func=_cmd_error)

    p = sub.add_parser("verify", help="run the structural checks on a map")
    p.add_argument("--map", required=True)
    p.add_argument(
        "--dead-pairs",
        action="store_true",
        help="also check that no two diagonal neighbours go dead together",
    )
    p.add_argument("--report", metavar="JSON", help="write a machine-readable report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="search for the minimum possible error")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--bnb", action="store_true", help="use branch-and-bound")
    p.add_argument("--budget", type=int, help="node budget for branch-and-bound")
    p.add_argument("--out", metavar="JSON")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("baseline", help="reference schemes for comparison")
    p.add_argument("--scheme", choices=["rounding", "lpath"], required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument(
        "--find-s3-violation",
        action="store_true",
        help="search the rounding scheme for a prefix-consistency failure",
    )
    p.add_argument("--out", metavar="JSON", help="export the L-path map")
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("render", help="draw a ray tree to a figure file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bound", type=int)
    group.add_argument("--map")
    p.add_argument("--out", required=True)
    add_tie(p)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("leaves", help="count inner leaves per diagonal")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--out", metavar="CSV")
    add_tie(p)
    p.set_defaults(func=_cmd_leaves)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RaySystemError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
