"""Command-line front end: synthesize, verify, inspect, print the oracle.

Machine-readable output (JSON, circuit text) goes to stdout; human notes go
to stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or input
errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .ancilla import ancilla_stats, synth_hwb_ancilla
from .ancillafree import ancilla_free_stats, synth_hwb_ancilla_free
from .gates import Circuit
from .oracle import HwbSpec, format_truth_table, hwb_permutation
from .quantum import quantum_stats, synth_hwb_quantum
from .sim import (
    assert_perm_equal,
    circuit_unitary,
    rev_check_exhaustive,
    rev_check_sampled,
)
from .sim.statevector import MAX_UNITARY_QUBITS
from .textfmt import ParseError, parse, serialize

DEFAULT_TOL = 1e-8
DEFAULT_SEED = 0x68776263  # "hwbc"


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="hwb", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    oracle = sub.add_parser("oracle", help="print the truth table")
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("--direction", choices=("right", "left"), default="right")

    synth = sub.add_parser("synth", help="synthesize a circuit")
    synth.add_argument("--method", required=True,
                       choices=("ancilla", "ancilla-free", "quantum"))
    synth.add_argument("--n", type=int, required=True)
    synth.add_argument("--direction", choices=("right", "left"), default="right")
    synth.add_argument("--lower", default=None,
                       help="ancilla-free: macro|nct; quantum: macro|clifford-rz")
    synth.add_argument("--out", default=None, help="output file (default stdout)")
    synth.add_argument("--stats", action="store_true",
                       help="emit a JSON stats report to stdout")

    verify = sub.add_parser("verify", help="check a circuit file against the oracle")
    verify.add_argument("--circuit", required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--ancillas", type=int, default=None,
                        help="default: circuit wires minus n")
    verify.add_argument("--mode", default="exhaustive",
                        help="exhaustive | sample:K | unitary")
    verify.add_argument("--direction", choices=("right", "left"), default=None,
                        help="default: the circuit header's direction")
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)

    stats = sub.add_parser("stats", help="gate statistics of a circuit file")
    stats.add_argument("--circuit", required=True)
    return top


def _synthesize(args) -> tuple[Circuit, dict]:
    if args.method == "ancilla":
        circuit = synth_hwb_ancilla(args.n)
        report = ancilla_stats(args.n)
    elif args.method == "ancilla-free":
        lower = args.lower or "macro"
        circuit = synth_hwb_ancilla_free(args.n, lowering=lower)
        report = ancilla_free_stats(args.n, lowering=lower)
    else:
        lower = args.lower or "macro"
        circuit = synth_hwb_quantum(args.n, direction=args.direction, lowering=lower)
        report = quantum_stats(args.n, direction=args.direction, lowering=lower)
    return circuit, report


def _cmd_synth(args) -> int:
    if args.method in ("ancilla", "ancilla-free") and args.direction != "right":
        print("error: reversible synthesis implements the right convention",
              file=sys.stderr)
        return 2
    circuit, report = _synthesize(args)
    text = serialize(circuit)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(circuit.gates)} gates to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    if args.stats:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def _load_circuit(path: str) -> Circuit:
    with open(path) as fh:
        return parse(fh.read())


def _cmd_verify(args) -> int:
    circuit = _load_circuit(args.circuit)
    direction = args.direction or circuit.direction
    spec = HwbSpec(args.n, direction)
    ancillas = args.ancillas
    if ancillas is None:
        ancillas = circuit.wires - args.n
    report: dict
    if args.mode == "unitary":
        if circuit.kind != "quantum":
            print("error: unitary mode needs a quantum circuit", file=sys.stderr)
            return 2
        if circuit.wires > MAX_UNITARY_QUBITS:
            print("error: unitary mode capped at "
                  f"{MAX_UNITARY_QUBITS} qubits", file=sys.stderr)
            return 2
        ok, dev = assert_perm_equal(circuit_unitary(circuit),
                                    hwb_permutation(spec), args.tol)
        report = {"mode": "unitary", "checked": 2 ** args.n,
                  "max_deviation": dev, "tol": args.tol}
    elif args.mode == "exhaustive" or args.mode.startswith("sample:"):
        if circuit.kind != "reversible":
            print("error: bit-vector modes need a reversible circuit",
                  file=sys.stderr)
            return 2
        if args.mode == "exhaustive":
            rep = rev_check_exhaustive(circuit, spec, ancillas)
        else:
            try:
                count = int(args.mode.split(":", 1)[1])
            except ValueError:
                print(f"error: bad sample count in {args.mode!r}", file=sys.stderr)
                return 2
            rep = rev_check_sampled(circuit, spec, ancillas, count, args.seed)
        ok = rep.ok
        report = {"mode": rep.mode, "checked": rep.checked, "max_deviation": 0.0}
        if not ok:
            report["counterexample"] = rep.counterexample
            report["expected"] = rep.expected
            report["got"] = rep.got
    else:
        print(f"error: unknown mode {args.mode!r}", file=sys.stderr)
        return 2
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if not ok:
        detail = report.get("counterexample", report.get("max_deviation"))
        print(f"verification FAILED: {detail}", file=sys.stderr)
        return 1
    return 0


def _cmd_stats(args) -> int:
    circuit = _load_circuit(args.circuit)
    json.dump({
        "wires": circuit.wires,
        "kind": circuit.kind,
        "ancillas": circuit.ancillas,
        "direction": circuit.direction,
        "gates_by_kind": circuit.gate_counts(),
        "total": len(circuit.gates),
    }, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "oracle":
            print(format_truth_table(HwbSpec(args.n, args.direction)))
            return 0
        if args.command == "synth":
            return _cmd_synth(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "stats":
            return _cmd_stats(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
