"""Weight-bit circuits over 3-input MAJ and XOR gates.

Computes one output bit of y_1 + ... + y_m (+ an optional constant encoded
as constant-1 digits at their binary positions).  Digits of equal
significance are reduced three at a time by full adders - MAJ is the carry,
XOR the sum - until at most two summands remain per position, then a ripple
of full adders finishes the addition.  Gates outside the requested output
bit's cone are pruned.

Fan-in references are ("var", i), ("const", 0|1) or ("gate", g).
"""
from __future__ import annotations

from dataclasses import dataclass

Ref = tuple[str, int]

CONST0: Ref = ("const", 0)
CONST1: Ref = ("const", 1)


@dataclass(frozen=True)
class Gate3:
    op: str  # "MAJ" | "XOR"
    fanins: tuple[Ref, Ref, Ref]


class MajXorCircuit:
    """Acyclic MAJ/XOR circuit with one designated output."""

    def __init__(self, m: int, gates: list[Gate3], output: Ref):
        self.m = m
        self.gates = list(gates)
        self.output = output

    def depth(self) -> int:
        memo: dict[Ref, int] = {}

        def d(ref: Ref) -> int:
            if ref[0] != "gate":
                return 0
            if ref not in memo:
                g = self.gates[ref[1]]
                memo[ref] = 1 + max(d(f) for f in g.fanins)
            return memo[ref]

        return d(self.output)

    def evaluate(self, assignment) -> int:
        memo: dict[Ref, int] = {}

        def ev(ref: Ref) -> int:
            kind, v = ref
            if kind == "const":
                return v
            if kind == "var":
                return assignment[v]
            if ref not in memo:
                a, b, c = (ev(f) for f in self.gates[v].fanins)
                if self.gates[v].op == "MAJ":
                    memo[ref] = (a & b) | (a & c) | (b & c)
                else:
                    memo[ref] = a ^ b ^ c
            return memo[ref]

        return ev(self.output)

    def pruned(self) -> "MajXorCircuit":
        """Keep only gates on the output's cone, preserving topological order."""
        keep: set[int] = set()

        def visit(ref: Ref):
            if ref[0] == "gate" and ref[1] not in keep:
                keep.add(ref[1])
                for f in self.gates[ref[1]].fanins:
                    visit(f)

        visit(self.output)
        order = sorted(keep)
        renum = {old: new for new, old in enumerate(order)}

        def remap(ref: Ref) -> Ref:
            return ("gate", renum[ref[1]]) if ref[0] == "gate" else ref

        gates = [
            Gate3(self.gates[old].op, tuple(remap(f) for f in self.gates[old].fanins))
            for old in order
        ]
        return MajXorCircuit(self.m, gates, remap(self.output))


def build_weight_bit_circuit(m: int, k: int, extra_ones=()) -> MajXorCircuit:
    """Circuit computing bit k of y_1+...+y_m plus sum(2^s for s in extra_ones).

    extra_ones lists the significances of constant-1 digits (at most a few;
    they encode a constant offset added to the weight).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if k < 0:
        raise ValueError("weight bit index must be nonnegative")
    # bits above the largest possible sum exist and are constantly 0
    gates: list[Gate3] = []

    def new_gate(op: str, a: Ref, b: Ref, c: Ref) -> Ref:
        gates.append(Gate3(op, (a, b, c)))
        return ("gate", len(gates) - 1)

    buckets: dict[int, list[Ref]] = {0: [("var", i) for i in range(m)]}
    for s in extra_ones:
        buckets.setdefault(s, []).append(CONST1)

    # carry-save rounds: each round replaces triples of equal significance
    # by a sum digit and a carry digit one position up
    while any(len(v) >= 3 for v in buckets.values()):
        nxt: dict[int, list[Ref]] = {}
        for s in sorted(buckets):
            digits = buckets[s]
            for i in range(0, len(digits) - len(digits) % 3, 3):
                a, b, c = digits[i: i + 3]
                nxt.setdefault(s, []).append(new_gate("XOR", a, b, c))
                nxt.setdefault(s + 1, []).append(new_gate("MAJ", a, b, c))
            leftover = digits[len(digits) - len(digits) % 3:]
            if leftover:
                nxt.setdefault(s, []).extend(leftover)
        buckets = nxt

    if all(len(v) <= 1 for v in buckets.values()):
        out = buckets.get(k, [CONST0])
        circuit = MajXorCircuit(m, gates, out[0] if out else CONST0)
        return circuit.pruned()

    # two summands remain: ripple up to the requested bit
    carry: Ref = CONST0
    out = CONST0
    for s in range(k + 1):
        digits = buckets.get(s, [])
        a = digits[0] if len(digits) > 0 else CONST0
        b = digits[1] if len(digits) > 1 else CONST0
        if a == CONST0 and b == CONST0:
            total, carry = carry, CONST0
        else:
            total = new_gate("XOR", a, b, carry)
            carry = new_gate("MAJ", a, b, carry)
        if s == k:
            out = total
    return MajXorCircuit(m, gates, out).pruned()
