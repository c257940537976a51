"""End-to-end ancilla-free synthesis on exactly n wires.

Pipeline: weight-bit layers of cycle gates -> parity-controlled rotation for
the even-n bit-0 layer -> 5-cycle decomposition (pairing short and
even-length cycles) -> six orbit restrictions per 5-cycle -> one branching
program per restriction, compiled from a carry-save weight-bit circuit over
the n-5 wires outside the targets -> CPERM5 gates, optionally lowered to
NOT/CNOT/Toffoli/MCT.
"""
from __future__ import annotations

from ..gates import Circuit, Cperm5
from .adder import build_weight_bit_circuit
from .barrington import barrington_compile
from .cgates import decompose_cycle, hwb_layers, synth_C0
from .lowering import lower_cperm5, program_to_gates
from .orbits import ORBIT_WEIGHTS, C5Spec

LOWERINGS = ("macro", "nct")


def c5_specs(n: int) -> tuple[list[C5Spec], bool]:
    """The C5 gate list of the pipeline (order preserved) and whether the
    even-n parity layer is present.  Cheap: no programs are compiled."""
    if n < 5:
        raise ValueError("ancilla-free synthesis needs n >= 5")
    specs: list[C5Spec] = []
    uses_c0 = False
    for k, layer in enumerate(hwb_layers(n)):
        if not layer:
            continue
        t = len(layer[0].targets)
        if k == 0 and n % 2 == 0:
            # single even-length cycle: no partner exists, handled directly
            assert len(layer) == 1 and t == n
            uses_c0 = True
            continue
        if t >= 5 and t % 2 == 1:
            for gate in layer:
                for tup in decompose_cycle([gate.targets], n):
                    specs.append(C5Spec(k, tup))
        else:
            assert len(layer) % 2 == 0, "unpaired short or even cycles"
            for a, b in zip(layer[::2], layer[1::2]):
                for tup in decompose_cycle([a.targets, b.targets], n):
                    specs.append(C5Spec(k, tup))
    return specs, uses_c0


def _compile_programs(n: int, specs):
    """One compiled program per (weight bit, orbit offset); shared across
    gates because programs only reference variable indices."""
    cache = {}
    for spec in specs:
        for w in set(ORBIT_WEIGHTS):
            key = (spec.k, w)
            if key not in cache:
                pads = tuple(s for s in range(3) if (w >> s) & 1)
                circuit = build_weight_bit_circuit(n - 5, spec.k, pads)
                cache[key] = (barrington_compile(circuit), circuit.depth())
    return cache


def synth_hwb_ancilla_free(n: int, lowering: str = "macro") -> Circuit:
    """hwb on exactly n wires, no ancillas (right shift convention)."""
    if lowering not in LOWERINGS:
        raise ValueError(f"unknown lowering {lowering!r}")
    specs, uses_c0 = c5_specs(n)
    programs = _compile_programs(n, specs)
    gates = []
    if uses_c0:
        gates.extend(synth_C0(n))
    for spec in specs:
        outside = sorted(set(range(n)) - set(spec.targets))
        varmap = {j: wire for j, wire in enumerate(outside)}
        for i in range(1, 7):
            program, _ = programs[(spec.k, ORBIT_WEIGHTS[i - 1])]
            gates.extend(program_to_gates(program, i, spec.targets, varmap))
    if lowering == "nct":
        lowered = []
        for g in gates:
            lowered.extend(lower_cperm5(g) if isinstance(g, Cperm5) else [g])
        gates = lowered
    return Circuit(wires=n, kind="reversible", gates=tuple(gates),
                   ancillas=0, direction="right")


def ancilla_free_stats(n: int, lowering: str = "macro") -> dict:
    specs, _ = c5_specs(n)
    programs = _compile_programs(n, specs)
    circuit = synth_hwb_ancilla_free(n, lowering)
    depth_per_bit: dict[int, int] = {}
    for (k, _w), (_prog, depth) in programs.items():
        depth_per_bit[k] = max(depth_per_bit.get(k, 0), depth)
    return {
        "wires": circuit.wires,
        "ancillas": circuit.ancillas,
        "c5_count": len(specs),
        "program_lengths": sorted(
            len(prog) for prog, _ in programs.values()
        ),
        "depth_per_bit": {str(k): d for k, d in sorted(depth_per_bit.items())},
        "gates_by_kind": circuit.gate_counts(),
        "total_gates": len(circuit.gates),
    }
