"""Gate alphabets and the circuit container shared by synthesizers and simulators.

Wire indices are 0-based everywhere.  A circuit is an immutable value: wire
count, homogeneous gate list, ancilla count (wires that must enter and leave
in state 0) and the shift-direction convention its function refers to.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union


def _check_distinct(*wires: int) -> None:
    if len(set(wires)) != len(wires):
        raise ValueError(f"gate wires must be pairwise distinct: {wires}")
    if any(w < 0 for w in wires):
        raise ValueError(f"negative wire index: {wires}")


# -- reversible gates --------------------------------------------------------

@dataclass(frozen=True)
class Not:
    target: int

    def wires(self):
        return (self.target,)


@dataclass(frozen=True)
class Cnot:
    control: int
    target: int

    def __post_init__(self):
        _check_distinct(self.control, self.target)

    def wires(self):
        return (self.control, self.target)


@dataclass(frozen=True)
class Toffoli:
    c1: int
    c2: int
    target: int

    def __post_init__(self):
        _check_distinct(self.c1, self.c2, self.target)

    def wires(self):
        return (self.c1, self.c2, self.target)


@dataclass(frozen=True)
class Mct:
    """Multi-controlled NOT with 1..5 positive controls."""

    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(self.controls))
        if not 1 <= len(self.controls) <= 5:
            raise ValueError(f"MCT supports 1..5 controls, got {len(self.controls)}")
        _check_distinct(*self.controls, self.target)

    def wires(self):
        return self.controls + (self.target,)


@dataclass(frozen=True)
class Swap:
    a: int
    b: int

    def __post_init__(self):
        _check_distinct(self.a, self.b)

    def wires(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class Fredkin:
    control: int
    a: int
    b: int

    def __post_init__(self):
        _check_distinct(self.control, self.a, self.b)

    def wires(self):
        return (self.control, self.a, self.b)


@dataclass(frozen=True)
class Cperm5:
    """Permutation of the 32 five-bit strings on `targets`, applied when
    `control` is 1.

    The table maps the value read off the targets (first target is the most
    significant bit) to its image.  It must be a bijection on {0..31} fixing
    0 and 31.
    """

    control: int
    targets: tuple[int, int, int, int, int]
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.targets) != 5:
            raise ValueError("CPERM5 needs exactly 5 targets")
        _check_distinct(self.control, *self.targets)
        if sorted(self.table) != list(range(32)):
            raise ValueError("CPERM5 table is not a bijection on {0..31}")
        if self.table[0] != 0 or self.table[31] != 31:
            raise ValueError("CPERM5 table must fix 00000 and 11111")

    def wires(self):
        return (self.control,) + self.targets


# -- quantum gates -----------------------------------------------------------

def _check_angle(*angles: float) -> None:
    for a in angles:
        if not math.isfinite(a):
            raise ValueError(f"non-finite gate angle: {a}")


@dataclass(frozen=True)
class S:
    """Phase e^{i*gamma} on |1> of one qubit."""

    gamma: float
    q: int

    def __post_init__(self):
        _check_angle(self.gamma)

    def wires(self):
        return (self.q,)


@dataclass(frozen=True)
class R:
    """Two-mode rotation mixing |01> and |10> of qubits (p, q).

    Matrix on the (|01>, |10>) block:
        [[cos(alpha), -e^{-i beta} sin(alpha)],
         [e^{i beta} sin(alpha), cos(alpha)]]
    """

    alpha: float
    beta: float
    p: int
    q: int

    def __post_init__(self):
        _check_angle(self.alpha, self.beta)
        _check_distinct(self.p, self.q)

    def wires(self):
        return (self.p, self.q)


@dataclass(frozen=True)
class FSwap:
    """Fermionic swap: SWAP followed by CZ (|11> picks up a minus sign)."""

    p: int
    q: int

    def __post_init__(self):
        _check_distinct(self.p, self.q)

    def wires(self):
        return (self.p, self.q)


@dataclass(frozen=True)
class Cz:
    p: int
    q: int

    def __post_init__(self):
        _check_distinct(self.p, self.q)

    def wires(self):
        return (self.p, self.q)


@dataclass(frozen=True)
class Phase1:
    """e^{i*theta} on |1> of qubit p (same matrix as S; kept as a distinct
    variant because synthesizers count the two separately)."""

    theta: float
    p: int

    def __post_init__(self):
        _check_angle(self.theta)

    def wires(self):
        return (self.p,)


@dataclass(frozen=True)
class Phase11:
    """e^{i*theta} on |11> of qubits (p, q)."""

    theta: float
    p: int
    q: int

    def __post_init__(self):
        _check_angle(self.theta)
        _check_distinct(self.p, self.q)

    def wires(self):
        return (self.p, self.q)


@dataclass(frozen=True)
class Phase011:
    """e^{i*theta} on the |011> component: qubit q0 in |0>, p and p2 in |1>."""

    theta: float
    q0: int
    p: int
    p2: int

    def __post_init__(self):
        _check_angle(self.theta)
        _check_distinct(self.q0, self.p, self.p2)

    def wires(self):
        return (self.q0, self.p, self.p2)


@dataclass(frozen=True)
class Rz:
    """diag(e^{-i theta/2}, e^{i theta/2}) on one qubit."""

    theta: float
    q: int

    def __post_init__(self):
        _check_angle(self.theta)

    def wires(self):
        return (self.q,)


ReversibleGate = Union[Not, Cnot, Toffoli, Mct, Swap, Fredkin, Cperm5]
QuantumGate = Union[S, R, FSwap, Cnot, Cz, Phase1, Phase11, Phase011, Rz]

REVERSIBLE_TYPES = (Not, Cnot, Toffoli, Mct, Swap, Fredkin, Cperm5)
QUANTUM_TYPES = (S, R, FSwap, Cnot, Cz, Phase1, Phase11, Phase011, Rz)


@dataclass(frozen=True)
class Circuit:
    wires: int
    kind: str  # "reversible" | "quantum"
    gates: tuple = field(default_factory=tuple)
    ancillas: int = 0
    direction: str = "right"

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.wires <= 0:
            raise ValueError("circuit needs at least one wire")
        if self.kind not in ("reversible", "quantum"):
            raise ValueError(f"unknown circuit kind: {self.kind}")
        if self.direction not in ("left", "right"):
            raise ValueError(f"unknown shift direction: {self.direction}")
        if not 0 <= self.ancillas <= self.wires:
            raise ValueError("ancilla count out of range")
        allowed = REVERSIBLE_TYPES if self.kind == "reversible" else QUANTUM_TYPES
        for g in self.gates:
            if not isinstance(g, allowed):
                raise ValueError(f"{type(g).__name__} not allowed in {self.kind} circuit")
            for w in g.wires():
                if w >= self.wires:
                    raise ValueError(f"gate wire {w} out of range for {self.wires} wires")

    def gate_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for g in self.gates:
            name = type(g).__name__
            counts[name] = counts.get(name, 0) + 1
        return counts
