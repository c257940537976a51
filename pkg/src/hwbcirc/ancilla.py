"""Ancilla-assisted synthesizer: O(n log n) gates, O(log n) clean ancillas.

Three stages: (1) count the input weight into a log-sized register with one
conditional increment per input bit, (2) conditionally rotate the inputs by
each power of two using Fredkin layers, (3) uncompute the weight register by
mirroring stage 1.

Wire layout: inputs x_1..x_n on wires 0..n-1, then w_1, t_1..t_T, w_2..w_W,
where W = floor(log2 n)+1 weight wires and T = max(floor(log2 n)-1, 0)
temporaries.  All ancillas start and end in 0.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gates import Circuit, Cnot, Fredkin, Toffoli


@dataclass(frozen=True)
class AncillaLayout:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def w_wires(self) -> int:
        return (self.n.bit_length() - 1) + 1

    @property
    def t_wires(self) -> int:
        return max(self.n.bit_length() - 2, 0)

    @property
    def ancillas(self) -> int:
        return self.w_wires + self.t_wires

    @property
    def wires(self) -> int:
        return self.n + self.ancillas

    def x(self, i: int) -> int:
        """Wire of input bit i (1-based)."""
        return i - 1

    def w(self, j: int) -> int:
        """Wire of weight bit j (1-based, j=1 is the least significant)."""
        return self.n if j == 1 else self.n + self.t_wires + (j - 1)

    def t(self, j: int) -> int:
        """Wire of temporary carry j (1-based)."""
        return self.n + j


def synth_increment(i: int, layout: AncillaLayout) -> list:
    """Gates adding 1 to the weight register when input bit i is set.

    The temporaries hold the carry chain and return to their incoming
    values once the third step has mirrored the first.
    """
    if not 1 <= i <= layout.n:
        raise ValueError(f"input index {i} out of range 1..{layout.n}")
    x, w, t = layout.x(i), layout.w, layout.t
    if i == 1:
        return [Cnot(x, w(1))]
    if i in (2, 3):
        return [Toffoli(x, w(1), w(2)), Cnot(x, w(1))]
    level = i.bit_length() - 1  # floor(log2 i)
    gates = [Toffoli(x, w(1), t(1))]
    for j in range(2, level):
        gates.append(Toffoli(t(j - 1), w(j), t(j)))
    gates.append(Toffoli(t(level - 1), w(level), w(level + 1)))
    gates.append(Cnot(t(level - 1), w(level)))
    for j in range(level - 1, 1, -1):
        gates.append(Toffoli(t(j - 1), w(j), t(j)))
        gates.append(Cnot(t(j - 1), w(j)))
    gates.append(Toffoli(x, w(1), t(1)))
    gates.append(Cnot(x, w(1)))
    return gates


def synth_weight_circuit(n: int) -> list:
    """Weight computation: |x, 0..0> -> |x, bin(W), 0..0>."""
    layout = AncillaLayout(n)
    gates = []
    for i in range(1, n + 1):
        gates.extend(synth_increment(i, layout))
    return gates


def _reflection_pairs(n: int, c: int):
    """Wire pairs of the reflection i <-> (c - i) mod n."""
    pairs = []
    for i in range(n):
        j = (c - i) % n
        if i < j:
            pairs.append((i, j))
    return pairs


def synth_controlled_shift_stage(k: int, n: int) -> list:
    """Fredkin stage rotating the n input wires right by 2^k when weight
    bit k+1 is set.

    The rotation is the composition of two wire reflections, so the stage
    is two layers of disjoint controlled swaps (at most n Fredkins).
    """
    layout = AncillaLayout(n)
    if not 0 <= k <= n.bit_length() - 1:
        raise ValueError(f"weight-bit index {k} out of range")
    shift = (1 << k) % n
    if shift == 0:
        return []
    control = layout.w(k + 1)
    gates = []
    for a, b in _reflection_pairs(n, 0):
        gates.append(Fredkin(control, a, b))
    for a, b in _reflection_pairs(n, shift):
        gates.append(Fredkin(control, a, b))
    return gates


def synth_hwb_ancilla(n: int) -> Circuit:
    """Full circuit: |x, 0^a> -> |hwb(x), 0^a> (right shift convention)."""
    layout = AncillaLayout(n)
    weight = synth_weight_circuit(n)
    gates = list(weight)
    for k in range(n.bit_length()):
        gates.extend(synth_controlled_shift_stage(k, n))
    gates.extend(reversed(weight))  # every weight gate is self-inverse
    return Circuit(wires=layout.wires, kind="reversible", gates=tuple(gates),
                   ancillas=layout.ancillas, direction="right")


def ancilla_stats(n: int) -> dict:
    layout = AncillaLayout(n)
    circuit = synth_hwb_ancilla(n)
    fredkin_stages = sum(
        1 for k in range(n.bit_length())
        if synth_controlled_shift_stage(k, n)
    )
    return {
        "wires": circuit.wires,
        "ancillas": circuit.ancillas,
        "increment_stages": n,
        "fredkin_stages": fredkin_stages,
        "gates_by_kind": circuit.gate_counts(),
        "total": len(circuit.gates),
    }
