"""Width-5 permutation branching programs for MAJ/XOR circuits.

A program is a list of instructions (variable, sigma): sigma is applied when
the variable is 1, nothing otherwise.  A program sigma-computes a Boolean
function when the left-to-right product of the applied permutations is the
identity on 0-inputs and sigma on 1-inputs.  Base programs for MAJ and XOR
(8 and 9 instructions) are composed recursively: an instruction controlled
by an internal circuit wire is replaced by the wire's own program, recoded
by relabeling all its permutations so that it computes the required cycle.

Instructions controlled by constants cannot survive (there is no wire to
attach them to), so they are folded away: a constant-1 instruction becomes a
pending unconditional permutation that is pushed right through subsequent
instructions by conjugation and accumulates in the program's `tail`.  The
tail is unavoidable whenever the computed function is 1 on the all-zeros
assignment - a tail-free program's product there is necessarily the
identity - and is later realized as a short unconditional gate block.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..perm import Permutation, canonical_5_cycle, conjugator_to_canonical
from .adder import MajXorCircuit, Ref


def _p(cycle_1based) -> Permutation:
    return Permutation.from_cycle(tuple(v - 1 for v in cycle_1based), 5)


# slot index into the gate's fan-in triple, and the permutation applied
MAJ_BASE: tuple[tuple[int, Permutation], ...] = (
    (0, _p((1, 4, 3, 2, 5))),
    (1, _p((1, 3, 5, 4, 2))),
    (2, _p((1, 2, 5, 3, 4))),
    (0, _p((1, 2, 3, 4, 5))),
    (1, _p((1, 2, 4, 5, 3))),
    (2, _p((1, 4, 3, 5, 2))),
    (0, _p((1, 5, 4, 3, 2))),
    (0, _p((1, 5, 2, 3, 4))),
)

XOR_BASE: tuple[tuple[int, Permutation], ...] = (
    (1, _p((1, 2, 3, 5, 4))),
    (2, _p((1, 2, 4, 5, 3))),
    (1, _p((1, 3, 5, 4, 2))),
    (2, _p((1, 4, 5, 3, 2))),
    (0, _p((1, 2, 3, 4, 5))),
    (1, _p((1, 3, 4, 2, 5))),
    (1, _p((1, 3, 2, 4, 5))),
    (2, _p((1, 3, 4, 2, 5))),
    (2, _p((1, 3, 2, 4, 5))),
)


@dataclass(frozen=True)
class BranchingProgram:
    """Instructions (variable index, 5-cycle) plus a fixed tail permutation."""

    m: int
    instructions: tuple[tuple[int, Permutation], ...]
    tail: Permutation = field(default_factory=lambda: Permutation.identity(5))

    def __len__(self) -> int:
        return len(self.instructions)

    def evaluate(self, assignment) -> Permutation:
        prod = Permutation.identity(5)
        for var, sigma in self.instructions:
            if assignment[var]:
                prod = prod.then(sigma)
        return prod.then(self.tail)

    def computes(self, f, sigma: Permutation) -> bool:
        """Exhaustive check that the program sigma-computes f."""
        for bits in range(1 << self.m):
            a = [(bits >> i) & 1 for i in range(self.m)]
            want = sigma if f(a) else Permutation.identity(5)
            if self.evaluate(a) != want:
                return False
        return True


def _base_program(base) -> BranchingProgram:
    return BranchingProgram(3, tuple((slot, sigma) for slot, sigma in base))


def maj_program() -> BranchingProgram:
    """(0,1,2,3,4)-computes MAJ(z1, z2, z3); 8 instructions."""
    return _base_program(MAJ_BASE)


def xor_program() -> BranchingProgram:
    """(0,1,2,3,4)-computes XOR(z1, z2, z3); 9 instructions."""
    return _base_program(XOR_BASE)


def barrington_compile(circuit: MajXorCircuit) -> BranchingProgram:
    """Program (0,1,2,3,4)-computing the circuit's output."""
    rho = canonical_5_cycle()
    instructions: list[tuple[int, Permutation]] = []
    pending = Permutation.identity(5)

    def emit(ref: Ref, sigma: Permutation) -> None:
        # appends a block sigma-computing `ref` to the instruction stream,
        # represented as [instructions] * pending
        nonlocal pending
        kind, v = ref
        if kind == "const":
            if v:
                pending = pending.then(sigma)
            return
        if kind == "var":
            # pending * <z, sigma> == <z, pending sigma pending^-1> * pending
            conj = pending.then(sigma).then(pending.inverse())
            instructions.append((v, conj))
            return
        gate = circuit.gates[v]
        base = MAJ_BASE if gate.op == "MAJ" else XOR_BASE
        theta = conjugator_to_canonical(sigma)
        for slot, pi in base:
            emit(gate.fanins[slot], pi.relabel(theta))

    emit(circuit.output, rho)
    return BranchingProgram(circuit.m, tuple(instructions), pending)


def program_length_bound(circuit: MajXorCircuit) -> int:
    """Exact instruction count of the recursive expansion: the per-gate
    product bound with variables counting 1 and constants 0."""
    memo: dict[Ref, int] = {}

    def bound(ref: Ref) -> int:
        kind, v = ref
        if kind == "const":
            return 0
        if kind == "var":
            return 1
        if ref not in memo:
            gate = circuit.gates[v]
            base = MAJ_BASE if gate.op == "MAJ" else XOR_BASE
            memo[ref] = sum(bound(gate.fanins[slot]) for slot, _ in base)
        return memo[ref]

    return bound(circuit.output)
