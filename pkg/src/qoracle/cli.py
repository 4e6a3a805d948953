"""Command-line front end.

Exit codes: 0 success, 1 runtime/simulation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import algorithms, protocol, statevector as sv
from .oracle import (
    BALANCED,
    CONSTANT,
    FamilyFormatError,
    classify_table,
    mode_oracle_table,
    parse_family_file,
)


def _variant(text: str) -> str:
    try:
        algorithms.parse_variant(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _default_seed() -> int:
    try:
        return int(os.environ.get("ORACLE_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=_default_seed(),
                        help="RNG seed (default: ORACLE_SEED env var or 0)")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--qubit-cap", type=_positive_int,
                        default=sv.DEFAULT_QUBIT_CAP, metavar="N",
                        help="maximum simulated qubits")

    parser = argparse.ArgumentParser(
        prog="qoracle",
        description="Oracle algorithms with the mode register in superposition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common],
                         help="run an algorithm and dump the pre-measurement state")
    run.add_argument("algorithm", choices=algorithms.ALGORITHMS)
    run.add_argument("--variant", type=_variant, default="superposed",
                     help="'superposed' or 'sharp:<label>'")
    run.add_argument("--n", type=_positive_int, default=None, help="query register arity")
    run.add_argument("--iterations", type=_non_negative_int, default=None,
                     help="Grover loop count (default: standard optimum)")
    run.add_argument("--measure", action="store_true",
                     help="also measure x and print the collapsed state")

    proto = sub.add_parser("protocol", parents=[common],
                           help="play seeded examiner/examinee rounds")
    proto.add_argument("algorithm", choices=algorithms.ALGORITHMS)
    proto.add_argument("--n", type=_positive_int, default=None)
    proto.add_argument("--trials", type=_positive_int, default=100)
    proto.add_argument("--iterations", type=_non_negative_int, default=None)
    proto.add_argument("--backdated", action="store_true",
                       help="measure k right after the ancilla preparation")
    proto.add_argument("--audit", action="store_true",
                       help="also report the exact backdating TV distance")

    family = sub.add_parser("family", parents=[common],
                            help="validate or display a family file")
    family.add_argument("subcommand", choices=("check", "show"))
    family.add_argument("path")

    return parser


def _default_n(algorithm: str, n: int | None) -> int:
    if algorithm == algorithms.DEUTSCH:
        return 1
    if n is None:
        return 2
    return n


def _cmd_run(args) -> int:
    n = _default_n(args.algorithm, args.n)
    if args.algorithm == algorithms.DEUTSCH:
        run = algorithms.run_deutsch(args.variant, qubit_cap=args.qubit_cap)
    elif args.algorithm == algorithms.DEUTSCH_JOZSA:
        run = algorithms.run_deutsch_jozsa(n, args.variant, qubit_cap=args.qubit_cap)
    else:
        run = algorithms.run_grover(
            n, args.variant, iterations=args.iterations, qubit_cap=args.qubit_cap
        )
    state = run.pre_measurement_state
    report: dict = {
        "algorithm": run.algorithm,
        "variant": run.variant,
        "n": run.n,
        "state": sv.state_to_dict(state),
    }
    if args.measure:
        rng = sv.SeededRng(args.seed)
        record, collapsed = sv.measure(state, "x", rng)
        report["measurement"] = record.to_dict()
        report["post_state"] = sv.state_to_dict(collapsed)
    if args.output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"{run.algorithm} ({run.variant}), n={run.n}")
        print(sv.format_state_text(state))
        if args.measure:
            record = report["measurement"]
            print(f"measured x = {record['outcome']} (p = {record['probability']:.6f})")
            print(sv.format_state_text(collapsed))
    return 0


def _cmd_protocol(args) -> int:
    n = _default_n(args.algorithm, args.n)
    stats = protocol.run_trials(
        args.algorithm,
        n,
        trials=args.trials,
        seed=args.seed,
        backdated=args.backdated,
        iterations=args.iterations,
    )
    report = stats.to_dict()
    report.update(algorithm=args.algorithm, n=n, seed=args.seed,
                  backdated=args.backdated)
    if args.audit:
        report["backdating_tv_distance"] = protocol.backdating_equivalence(
            args.algorithm, n, iterations=args.iterations
        )
    if args.output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"{args.algorithm}, n={n}, seed={args.seed}, "
              f"backdated={args.backdated}")
        print(f"correct {stats.correct_count}/{stats.trials}")
        for (x, k), count in sorted(stats.joint_histogram.items()):
            print(f"  x={x} k={k}: {count}")
        if args.audit:
            print(f"backdating TV distance: {report['backdating_tv_distance']:.3e}")
    return 0


def _cmd_family(args) -> int:
    with open(args.path, encoding="utf-8") as handle:
        family = parse_family_file(handle.read())
    if args.subcommand == "check":
        counts = {BALANCED: 0, CONSTANT: 0, "other": 0}
        for _, table in family.modes:
            counts[classify_table(table)] += 1
        summary = (f"{len(family.modes)} modes: "
                   f"{counts[BALANCED]} balanced, {counts[CONSTANT]} constant")
        if counts["other"]:
            summary += f", {counts['other']} other"
        if args.output == "json":
            print(json.dumps({"n": family.n, "modes": len(family.modes),
                              "balanced": counts[BALANCED],
                              "constant": counts[CONSTANT],
                              "other": counts["other"]}, sort_keys=True))
        else:
            print(summary)
        return 0
    table = mode_oracle_table(family)
    if args.output == "json":
        rows = [{"k": label, "x": format(x, f"0{family.n}b"),
                 "F": family.table(label)[x]}
                for label in family.labels for x in range(1 << family.n)]
        print(json.dumps({"n": family.n, "rows": rows}, sort_keys=True))
    else:
        print("k" + " " * max(1, family.ancilla_width) + "x" + " " * max(1, family.n) + "F")
        for label in family.labels:
            base = int(label, 2) << family.n
            for x in range(1 << family.n):
                print(f"{label} {format(x, f'0{family.n}b')} {table[base + x]}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": _cmd_run, "protocol": _cmd_protocol, "family": _cmd_family}
    try:
        return handlers[args.command](args)
    except FamilyFormatError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
