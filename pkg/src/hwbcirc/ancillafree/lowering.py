"""Mapping branching programs onto reversible gates, and CPERM5 lowering.

Each instruction (variable, sigma) becomes one CPERM5: the variable's wire
controls sigma's action on the orbit strings of the 5 target wires.  A
program's unconditional tail has no control wire and is emitted directly as
elementary gates on the targets.

Lowering a string permutation to NOT/CNOT/MCT works transposition by
transposition: stage the two strings to differ in a single position, flip
zero context bits, apply one multi-controlled NOT, unwind.  With a control
wire present it joins the MCT controls, giving at most 5 controls on 6
wires.
"""
from __future__ import annotations

from ..gates import Cnot, Cperm5, Mct, Not
from ..perm import Permutation
from .barrington import BranchingProgram
from .orbits import orbit_table


def _string_transposition_gates(targets, u: int, v: int, control=None) -> list:
    """Gates swapping exactly the 5-bit strings u and v on `targets`
    (values read MSB-first along the tuple), fixing all other strings.

    When `control` is given the swap applies only on control = 1.
    """
    if u == v:
        return []
    bit = lambda s, j: (s >> (4 - j)) & 1
    diff = [j for j in range(5) if bit(u, j) != bit(v, j)]
    pivot = diff[0]
    if bit(u, pivot):
        u, v = v, u  # ensure u carries 0 at the pivot
    stage = [Cnot(targets[pivot], targets[j]) for j in diff[1:]]
    polarity = [Not(targets[j]) for j in range(5) if j != pivot and not bit(u, j)]
    controls = [targets[j] for j in range(5) if j != pivot]
    if control is not None:
        controls = [control] + controls
    core = Mct(tuple(controls), targets[pivot])
    return stage + polarity + [core] + polarity[::-1] + stage[::-1]


def _table_cycles(table) -> list[tuple[int, ...]]:
    return Permutation(table).cycles()


def table_to_gates(targets, table, control=None) -> list:
    """Lower a 32-entry string permutation to NOT/CNOT/MCT gates.

    Cycles factor into transpositions sharing the cycle head, applied left
    to right: (v0 v1 ... vk) = (v0 v1)(v0 v2)...(v0 vk).
    """
    gates = []
    for cyc in _table_cycles(table):
        head = cyc[0]
        for other in cyc[1:]:
            gates.extend(_string_transposition_gates(targets, head, other, control))
    return gates


def lower_cperm5(gate: Cperm5) -> list:
    """Elementary, ancilla-free equivalent of a CPERM5 on its own 6 wires."""
    return table_to_gates(gate.targets, gate.table, control=gate.control)


def program_to_gates(program: BranchingProgram, orbit_index: int, targets,
                     varmap) -> list:
    """Realize a branching program as gates acting on one orbit.

    varmap sends each program variable to its control wire; it must avoid
    the 5 target wires.  The program tail, if nontrivial, is emitted as an
    unconditional elementary block after the controlled instructions.
    """
    tset = set(targets)
    gates = []
    for var, sigma in program.instructions:
        wire = varmap[var]
        if wire in tset:
            raise ValueError(f"variable wire {wire} collides with the targets")
        gates.append(Cperm5(wire, tuple(targets), orbit_table(orbit_index, sigma)))
    if not program.tail.is_identity():
        gates.extend(table_to_gates(targets, orbit_table(orbit_index, program.tail)))
    return gates
