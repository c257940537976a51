"""The six cyclic-shift orbits of nontrivial 5-bit strings.

00000 and 11111 are fixed by any cyclic shift; the remaining 30 strings
split into six orbits of five, each listed in shift order (every entry is
the one-step right rotation of its predecessor).  Restricting a controlled
shift of a 5-wire register to one orbit removes the control function's
dependence on the register itself: on orbit i all strings share weight w_i,
so "weight bit k of the whole input" becomes "bit k of |rest| + w_i".
"""
from __future__ import annotations

from dataclasses import dataclass

from ..perm import Permutation

ORBITS: tuple[tuple[int, ...], ...] = (
    (0b10000, 0b01000, 0b00100, 0b00010, 0b00001),
    (0b01111, 0b10111, 0b11011, 0b11101, 0b11110),
    (0b11000, 0b01100, 0b00110, 0b00011, 0b10001),
    (0b10100, 0b01010, 0b00101, 0b10010, 0b01001),
    (0b00111, 0b10011, 0b11001, 0b11100, 0b01110),
    (0b01011, 0b10101, 0b11010, 0b01101, 0b10110),
)

ORBIT_WEIGHTS: tuple[int, ...] = tuple(bin(o[0]).count("1") for o in ORBITS)


def orbit_table(orbit_index: int, sigma: Permutation) -> tuple[int, ...]:
    """32-entry table acting by sigma on the labels of orbit `orbit_index`
    (1-based) and fixing every other string.

    Labels follow the listed shift order, so the canonical 5-cycle
    (0,1,2,3,4) realizes exactly the one-step shift of the orbit.
    """
    strings = ORBITS[orbit_index - 1]
    table = list(range(32))
    for j, s in enumerate(strings):
        table[s] = strings[sigma(j)]
    return tuple(table)


@dataclass(frozen=True)
class C5Spec:
    """Shift of the 5 wires in `targets` controlled by weight bit `k`."""

    k: int
    targets: tuple[int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(self.targets) != 5 or len(set(self.targets)) != 5:
            raise ValueError("C5 needs exactly 5 distinct targets")


@dataclass(frozen=True)
class RestrictedC5Spec:
    """The action of a C5 gate on a single orbit.

    Controlled by bit k of |rest| + w_i, where rest excludes the 5 target
    wires; moves orbit strings one step along the orbit, fixes the rest.
    """

    parent: C5Spec
    orbit_index: int  # 1-based

    @property
    def weight(self) -> int:
        return ORBIT_WEIGHTS[self.orbit_index - 1]


def c5_to_restricted(spec: C5Spec) -> list[RestrictedC5Spec]:
    """Split a C5 gate into its six pairwise-commuting orbit restrictions."""
    return [RestrictedC5Spec(spec, i) for i in range(1, 7)]


def apply_c5(spec: C5Spec, x: str) -> str:
    """Reference semantics of the full C5 gate on a bit string."""
    if not (x.count("1") >> spec.k) & 1:
        return x
    out = list(x)
    t = spec.targets
    for j, src in enumerate(t):
        out[t[(j + 1) % 5]] = x[src]
    return "".join(out)


def apply_restricted(spec: RestrictedC5Spec, x: str) -> str:
    """Reference semantics of a single orbit restriction on a bit string."""
    targets = spec.parent.targets
    rest_weight = sum(
        1 for w, c in enumerate(x) if c == "1" and w not in targets
    )
    if not ((rest_weight + spec.weight) >> spec.parent.k) & 1:
        return x
    value = 0
    for j, w in enumerate(targets):
        value |= (x[w] == "1") << (4 - j)
    strings = ORBITS[spec.orbit_index - 1]
    if value not in strings:
        return x
    new = strings[(strings.index(value) + 1) % 5]
    out = list(x)
    for j, w in enumerate(targets):
        out[w] = "1" if (new >> (4 - j)) & 1 else "0"
    return "".join(out)
