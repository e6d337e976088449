"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .circuit import Level, emit_netlist, emit_qasm, parse_netlist
from .cliffordt import expand_circuit
from .errors import QsqrtError
from .resources import (CANDIDATE_SETS, analytic_qubits, analytic_tcount, analytic_tdepth,
                        average_savings, check_compare_n, comparison_table,
                        measure_resources, table_to_csv, table_to_text)
from .simulate import apply_classical
from .sqrt import (SqrtLayout, build_sqrt_circuit, check_radicand, check_width,
                   decode_output, nonrestoring_sqrt_oracle, verify_circuit)

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MAX_VERIFY_N = 12
MAX_MEASURED_REPORT_N = 32


class UsageError(Exception):
    pass


def _n_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_synth(args: argparse.Namespace) -> int:
    circuit, _ = build_sqrt_circuit(args.n)
    if args.level == Level.CLIFFORD_T.value:
        circuit = expand_circuit(circuit)
    text = emit_netlist(circuit) if args.format == "netlist" else emit_qasm(circuit)
    _write(text, args.out)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    check_radicand(args.a, args.n)
    circuit, layout = build_sqrt_circuit(args.n)
    root, rem, restored = decode_output(apply_classical(circuit, layout.encode(args.a)), layout)
    print(f"Y={root} remainder={rem} restored={str(restored).lower()}")
    if args.trace:
        print(nonrestoring_sqrt_oracle(args.a, args.n).trace.format())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    for n in args.n:
        check_width(n)
        if n > MAX_VERIFY_N and not args.allow_large:
            raise UsageError(f"verify is capped at n = {MAX_VERIFY_N}; pass --allow-large")
    if args.netlist is not None and len(args.n) != 1:
        raise UsageError("--netlist needs exactly one n")

    status = EXIT_OK
    for n in args.n:
        if args.netlist is not None:
            with open(args.netlist, encoding="utf-8") as fh:
                circuit = parse_netlist(fh.read())
            layout = SqrtLayout(n)
        else:
            circuit, layout = build_sqrt_circuit(n)
        result = verify_circuit(circuit, layout)
        if result.ok:
            print(f"n={n}: {result.inputs} inputs, all pass")
            continue
        status = EXIT_VERIFY_FAILED
        m = result.mismatches[0]
        print(f"n={n}: {len(result.mismatches)} of {result.inputs} inputs fail; "
              f"first counterexample a={m.a}: got Y={m.got.root} remainder={m.got.remainder} "
              f"restored={str(m.got.restored).lower()}, expected Y={m.expected_root} "
              f"remainder={m.expected_remainder}")
    return status


def cmd_report(args: argparse.Namespace) -> int:
    n = args.n
    tc = analytic_tcount(n)
    td = analytic_tdepth(n)
    if len(tc.part2) <= 4:
        part2 = " + ".join(str(t) for _, t in tc.part2) or "0"
    else:
        part2 = (f"sum of 28i+14 for i=2..{tc.part2[-1][0]} = "
                 f"{sum(t for _, t in tc.part2)}")
    print(f"n = {n}")
    print("analytic")
    print(f"  T-count  {tc.total}  (part 1: {tc.part1}, part 2: {part2}, part 3: {tc.part3})")
    print(f"  T-depth  {td.total}  (R_{n - 2}/R_{n - 3}: {td.part1} + {td.part2} + "
          f"{td.part3_on_r} = {td.on_r}; z: {td.on_z})")
    print(f"  qubits   {analytic_qubits(n)}")
    if n <= MAX_MEASURED_REPORT_N:
        circuit, _ = build_sqrt_circuit(n)
        rep = measure_resources(circuit)
        print("measured (reference adders, Clifford+T expansion)")
        print(f"  T-count  {rep.t_count}  ({rep.toffoli_count} Toffoli)")
        print(f"  T-depth  {rep.t_depth_global}  (per-qubit max {rep.t_depth_per_qubit_max})")
        print(f"  qubits   {rep.qubit_count}")
        hist = ", ".join(f"{k}: {v}" for k, v in rep.gate_histogram.items())
        print(f"  gates    {hist}")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    for n in args.n:
        check_compare_n(n)
    rows = comparison_table(args.n)
    text = table_to_csv(rows) if args.csv else table_to_text(rows) + "\n"
    if args.averages:
        lines = []
        for label, ns in CANDIDATE_SETS.items():
            for clamp in (False, True):
                tag = " (negative savings counted as 0)" if clamp else ""
                lines.append(f"average savings over {label}{tag}:")
                for name, (tc, qb) in average_savings(ns, clamp).items():
                    lines.append(f"  {name}: T-count {tc}%, qubits {qb}%")
        avg = "\n".join(lines) + "\n"
        if args.csv:
            sys.stderr.write(avg)
        else:
            text += "\n" + avg
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qsqrt", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synth", help="emit the square-root circuit")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("netlist", "qasm"), default="netlist")
    s.add_argument("--level", choices=(Level.MACRO.value, Level.CLIFFORD_T.value),
                   default=Level.MACRO.value)
    s.add_argument("--out", help="output path (default: stdout)")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("simulate", help="run one radicand through the circuit")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--trace", action="store_true", help="print the step-by-step R/F table")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("verify", help="check every valid radicand against integer sqrt")
    s.add_argument("--n", type=_n_list, required=True, help="comma-separated widths")
    s.add_argument("--allow-large", action="store_true", help=f"permit n > {MAX_VERIFY_N}")
    s.add_argument("--netlist", help="verify this netlist instead of the built circuit")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("report", help="analytic and measured resource costs")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("compare", help="cost comparison against earlier designs")
    s.add_argument("--n", type=_n_list, required=True, help="comma-separated widths")
    s.add_argument("--csv", action="store_true")
    s.add_argument("--averages", action="store_true",
                   help="also print averaged savings over candidate n sets")
    s.add_argument("--out", help="output path (default: stdout)")
    s.set_defaults(func=cmd_compare)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QsqrtError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
