"""Command-line front end.

Commands: run, validate, compile, tables, table8, gatedemo. Exit status is
0 on success, 1 on parse/validation problems (diagnostics on stderr), 2
when a program exceeds the simulator or enumeration budget.

All CSV output uses '.' as the decimal separator, LF line endings and
fixed 5-decimal formatting, so files are byte-identical across runs given
the same inputs, shots and seed. Commands that sample echo their seed both
on stdout and in a leading comment line of the CSV.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from .compiler import BudgetError, compile_ruleset, export_circuit, rq_gate_demo
from .inference import infer_exact, infer_shots, oracle
from .reference import TABLE8, demo_ruleset
from .ruledsl import DslError, RuleSet, parse
from .uncertainty import (
    delta_to_alpha,
    fact_amplitudes,
    qualitative_label,
)

DEFAULT_SHOTS = 8192
DEFAULT_SEED = 0


def _fmt(value: float) -> str:
    return f"{value:.5f}"


def _load_ruleset(path: str) -> RuleSet:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse(text)
    except DslError as err:
        err.source_path = path
        raise


def _write_csv(path: str, header: list[str], rows: list[list[str]],
               comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        if comment is not None:
            handle.write(f"# {comment}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# ---------------------------------------------------------------------------
# Table generators (pure; the commands only format and write)


def table4_rows() -> list[list[str]]:
    rows = []
    for delta in (0, 25, 50, 75, 100):
        alpha = delta_to_alpha(delta)
        theta = fact_amplitudes(delta).theta
        rows.append([str(delta), str(int(round(math.degrees(alpha)))),
                     _fmt(alpha), _fmt(theta)])
    return rows


def table5_rows() -> list[list[str]]:
    rows = []
    for k in range(19):
        alpha = k * math.pi / 18.0
        theta = (math.pi - alpha) / 2.0
        mod0, mod1 = math.sin(theta), math.cos(theta)
        rows.append([_fmt(alpha), _fmt(theta), _fmt(mod0), _fmt(mod1),
                     _fmt(mod0**2), _fmt(mod1**2), _fmt(mod0**2 + mod1**2)])
    return rows


def table6_rows() -> list[list[str]]:
    rows = []
    for delta in range(0, 101, 10):
        amps = fact_amplitudes(delta)
        rows.append([
            str(delta),
            str(100 - delta),
            qualitative_label(delta),
            _fmt(amps.theta),
            _fmt(amps.amp_true),
            _fmt(amps.amp_false),
            _fmt(amps.p_true),
            _fmt(amps.p_false),
            _fmt(amps.p_true + amps.p_false),
        ])
    return rows


def _single_fact_ruleset(delta: float) -> RuleSet:
    return RuleSet({"F": float(delta)}, (), "F")


def table7_rows(shots: int, seed: int) -> list[list[str]]:
    rows = []
    for delta in range(0, 101, 10):
        amps = fact_amplitudes(delta)
        sampled = infer_shots(compile_ruleset(_single_fact_ruleset(delta)),
                              shots, seed)
        rows.append([
            str(delta),
            _fmt(amps.p_true),
            _fmt(amps.p_false),
            _fmt(amps.p_true + amps.p_false),
            _fmt(amps.amp_true),
            _fmt(amps.amp_false),
            _fmt(sampled.p_true),
            _fmt(sampled.p_false),
        ])
    return rows


def table8_rows(shots: int, seed: int,
                divergence_threshold: float = 0.02) -> list[list[str]]:
    rows = []
    for deltas, printed in TABLE8:
        rs = demo_ruleset(deltas)
        truth = oracle(rs)
        cp = compile_ruleset(rs)
        exact = infer_exact(cp)
        sampled = infer_shots(cp, shots, seed)
        deviation = abs(truth.p_true - printed)
        flag = "MATCH" if deviation <= divergence_threshold else "DIVERGES"
        rows.append([
            *[str(d) for d in deltas],
            _fmt(truth.p_true),
            _fmt(exact.p_true),
            _fmt(sampled.p_true),
            _fmt(printed),
            _fmt(deviation),
            flag,
        ])
    return rows


def gatedemo_rows(which: str, shots: int, seed: int) -> list[list[str]]:
    rows = []
    for row in rq_gate_demo(which, shots=shots, seed=seed):
        a, b = row.input_bits
        measured = row.percentage
        estimated = 25.0
        low, high = sorted((measured, estimated))
        precision = low / high if high > 0 else 1.0
        rows.append([
            f"{a}{b}{row.output_bit}",
            f"{a}{b}",
            str(row.output_bit),
            _fmt(measured),
            _fmt(estimated),
            _fmt(precision),
        ])
    return rows


# ---------------------------------------------------------------------------
# Commands


def cmd_run(args: argparse.Namespace) -> int:
    rs = _load_ruleset(args.input)
    cp = compile_ruleset(rs)
    if args.mode == "exact":
        result = infer_exact(cp)
    else:
        result = infer_shots(cp, args.shots, args.seed)

    if args.format == "human":
        line = (f"{result.goal} p_true={result.p_true:.6f} "
                f"p_false={result.p_false:.6f} method={result.method}")
        if result.method == "shots":
            line += f" shots={result.shots} seed={result.seed}"
        print(line)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["goal", "p_true", "p_false", "method", "shots", "seed"])
        writer.writerow([
            result.goal, f"{result.p_true:.6f}", f"{result.p_false:.6f}",
            result.method,
            "" if result.shots is None else str(result.shots),
            "" if result.seed is None else str(result.seed),
        ])
    else:  # jsonl
        print(json.dumps({
            "goal": result.goal,
            "p_true": result.p_true,
            "p_false": result.p_false,
            "method": result.method,
            "shots": result.shots,
            "seed": result.seed,
        }, sort_keys=True))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    rs = _load_ruleset(args.input)
    print(f"OK: {len(rs.base_facts)} facts, {len(rs.rules)} rules, "
          f"goal {rs.goal}")
    return 0


def cmd_compile(args: argparse.Namespace) -> int:
    rs = _load_ruleset(args.input)
    text = export_circuit(compile_ruleset(rs))
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.out}")
    return 0


_TABLE_HEADERS = {
    4: ["DELTA (Subjective Disbelief)", "ALPHA (Degrees)", "ALPHA (Radians)",
        "THETA (Radians)"],
    5: ["ALPHA", "THETA", "Mod 0", "Mod 1", "Prob (0)", "Prob (1)",
        "ProbTotal"],
    6: ["Subjective Disbelief", "Subjective Credibility",
        "Subjective Classification", "THETA", "Ket 0", "Ket 1",
        "Prob (True)", "Prob (False)", "Total Probability"],
    7: ["DELTA", "Prob (True)", "Prob (False)", "Total Probability",
        "Amplitude (Ket 0)", "Amplitude (Ket 1)", "Prob (True) shots",
        "Prob (False) shots"],
}


def cmd_tables(args: argparse.Namespace) -> int:
    which = args.which
    if which == 4:
        rows, comment = table4_rows(), None
    elif which == 5:
        rows, comment = table5_rows(), None
    elif which == 6:
        rows, comment = table6_rows(), None
    else:
        rows = table7_rows(args.shots, args.seed)
        comment = f"shots={args.shots} seed={args.seed}"
    _write_csv(args.out, _TABLE_HEADERS[which], rows, comment)
    suffix = f" ({comment})" if comment else ""
    print(f"wrote {args.out}{suffix}")
    return 0


def cmd_table8(args: argparse.Namespace) -> int:
    header = ["DELTA A", "DELTA B", "DELTA C", "DELTA D", "DELTA E",
              "Prob (True) oracle", "Prob (True) exact", "Prob (True) shots",
              "Prob (True) reference", "Deviation", "Flag"]
    rows = table8_rows(args.shots, args.seed)
    comment = f"shots={args.shots} seed={args.seed} divergence_threshold=0.02"
    _write_csv(args.out, header, rows, comment)
    diverging = sum(1 for row in rows if row[-1] == "DIVERGES")
    print(f"wrote {args.out} ({comment}); "
          f"{len(rows) - diverging} rows MATCH, {diverging} DIVERGE")
    return 0


def cmd_gatedemo(args: argparse.Namespace) -> int:
    header = ["Input Vector", "Input Truth Table", "Output Truth Table",
              "Measured Percentage", "Estimated Percentage", "Precision"]
    rows = gatedemo_rows(args.which, args.shots, args.seed)
    comment = f"block={args.which} shots={args.shots} seed={args.seed}"
    _write_csv(args.out, header, rows, comment)
    print(f"wrote {args.out} ({comment})")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrbs",
        description="Rule-based inference under subjective disbelief, "
                    "compiled to reversible quantum circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sampling(p: argparse.ArgumentParser) -> None:
        p.add_argument("--shots", type=int, default=DEFAULT_SHOTS,
                       help=f"samples to draw (default {DEFAULT_SHOTS})")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help=f"RNG seed (default {DEFAULT_SEED})")

    p_run = sub.add_parser("run", help="infer the goal probability of a program")
    p_run.add_argument("input", help="path to a .qrbs program")
    p_run.add_argument("--mode", choices=("exact", "shots"), default="exact")
    p_run.add_argument("--format", choices=("human", "csv", "jsonl"),
                       default="human")
    add_sampling(p_run)
    p_run.set_defaults(func=cmd_run)

    p_val = sub.add_parser("validate", help="parse and validate a program")
    p_val.add_argument("input")
    p_val.set_defaults(func=cmd_validate)

    p_comp = sub.add_parser("compile", help="write the compiled circuit as text")
    p_comp.add_argument("input")
    p_comp.add_argument("--out", required=True)
    p_comp.set_defaults(func=cmd_compile)

    p_tab = sub.add_parser("tables", help="regenerate a reference table as CSV")
    p_tab.add_argument("which", type=int, choices=(4, 5, 6, 7))
    p_tab.add_argument("--out", required=True)
    add_sampling(p_tab)
    p_tab.set_defaults(func=cmd_tables)

    p_t8 = sub.add_parser(
        "table8",
        help="compare the demo network against the reference results",
    )
    p_t8.add_argument("--out", required=True)
    add_sampling(p_t8)
    p_t8.set_defaults(func=cmd_table8)

    p_demo = sub.add_parser("gatedemo", help="drive one connective block "
                            "with superposed inputs")
    p_demo.add_argument("which", choices=("and", "or"))
    p_demo.add_argument("--out", required=True)
    add_sampling(p_demo)
    p_demo.set_defaults(func=cmd_gatedemo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DslError as err:
        path = getattr(err, "source_path", "<input>")
        print(f"{path}:{err}", file=sys.stderr)
        return 1
    except BudgetError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
