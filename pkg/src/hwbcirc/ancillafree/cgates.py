"""Weight-controlled cycle gates and their decomposition into 5-cycles.

A C gate cyclically shifts a tuple of target wires (the bit on targets[j]
moves to targets[j+1]) whenever a chosen bit of the input's Hamming weight
is 1.  hwb factors into floor(log2 n)+1 layers of such gates, one layer per
weight bit; each layer splits into gcd(n, 2^k) gates with disjoint targets.

Cycles are then rewritten as products of length-5 cycles.  A single cycle of
even length is an odd permutation and cannot be a product of 5-cycles, so
even-length cycles (and all cycles of length <= 4) are handled in pairs; the
one unpaired case, the full-length parity-controlled rotation when n is
even, gets a direct CNOT/Fredkin realization instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..gates import Cnot, Fredkin
from ..perm import Permutation


@dataclass(frozen=True)
class CGateSpec:
    """Cyclic shift of `targets`, controlled by weight bit `k`."""

    k: int
    targets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        if len(set(self.targets)) != len(self.targets):
            raise ValueError("targets must be distinct")
        if len(self.targets) < 2:
            raise ValueError("a cycle gate needs at least 2 targets")


def apply_cgate(spec: CGateSpec, x: str) -> str:
    """Reference semantics on a bit string."""
    if not (x.count("1") >> spec.k) & 1:
        return x
    out = list(x)
    t = spec.targets
    for j, src in enumerate(t):
        out[t[(j + 1) % len(t)]] = x[src]
    return "".join(out)


def hwb_layers(n: int) -> list[list[CGateSpec]]:
    """One layer per weight bit k; layer k shifts all wires by 2^k.

    Layer k holds gcd(n, 2^k) gates whose target sets partition the wires;
    the layer degenerates to the identity (empty list) when 2^k = 0 mod n.
    Composing every layer's gates, k = 0 first, gives hwb with the right
    shift convention.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    layers = []
    for k in range(n.bit_length()):
        step = (1 << k) % n
        if step == 0:
            layers.append([])
            continue
        g = math.gcd(n, 1 << k)
        t = n // g
        layers.append([
            CGateSpec(k, tuple((i + j * step) % n for j in range(t)))
            for i in range(g)
        ])
    return layers


def synth_C0(n: int) -> list:
    """Parity-controlled rotation of all n wires by one position.

    The parity of the whole register is accumulated onto wire 0 to control
    the swap chain on wires 1..n-1, then onto wire n-1 to control the final
    swap of wires 0 and 1.  Exactly n-1 Fredkin and 4(n-1) CNOT gates.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    gates = []
    gates.extend(Cnot(j, 0) for j in range(1, n))
    for i in range(n - 2, 0, -1):
        gates.append(Fredkin(0, i, i + 1))
    gates.extend(Cnot(j, 0) for j in range(1, n))
    gates.extend(Cnot(j, n - 1) for j in range(n - 1))
    gates.append(Fredkin(n - 1, 0, 1))
    gates.extend(Cnot(j, n - 1) for j in range(n - 1))
    return gates


def _pair2(x, y, spare):
    (x1, x2), (y1, y2) = x, y
    return [(y1, x1, y2, spare, x2), (spare, y1, x1, y2, x2)]


def _pair3(x, y):
    (x1, x2, x3), (y1, y2, y3) = x, y
    return [(x1, y1, x2, y2, y3), (x3, x1, y1, x2, y2)]


def _odd(c):
    t = len(c)
    if t < 5 or t % 2 == 0:
        raise ValueError(f"direct decomposition needs odd length >= 5, got {t}")
    tuples = []
    if t % 4 == 3:
        p = (t - 3) // 4
        tuples.append((c[4 * p + 2], c[4 * p], c[2], c[1], c[0]))
        tuples.append((c[4 * p + 1], c[4 * p + 2], c[0], c[1], c[2]))
        t = 4 * p + 1
    for s in range(t - 5, -1, -4):
        tuples.append((c[s], c[s + 1], c[s + 2], c[s + 3], c[s + 4]))
    return tuples


def _spare_wire(used, n):
    for w in range(n):
        if w not in used:
            return w
    raise ValueError("no spare wire available for the short-cycle identities")


def decompose_cycle(cycles, n: int) -> list[tuple[int, ...]]:
    """Rewrite one odd cycle, or a pair of disjoint equal-length cycles, as
    ordered 5-tuples whose left-to-right composition equals the input.

    Pairs are mandatory for even length (parity) and for length <= 4; the
    length-2 and length-4 identities consume one spare wire, chosen as the
    lowest index outside the two transpositions involved.
    """
    cycles = [tuple(c) for c in cycles]
    if len(cycles) == 1:
        c = cycles[0]
        if len(c) <= 1:
            return []
        if len(c) % 2 == 0:
            raise ValueError("a single even-length cycle is an odd permutation; "
                             "it must be paired")
        if len(c) < 5:
            raise ValueError("cycles shorter than 5 must be paired")
        return _odd(c)
    if len(cycles) != 2:
        raise ValueError("expected one cycle or a pair")
    x, y = cycles
    if len(x) != len(y):
        raise ValueError("paired cycles must have equal length")
    if set(x) & set(y):
        raise ValueError("paired cycles must be disjoint")
    t = len(x)
    if t == 2:
        spare = _spare_wire(set(x) | set(y), n)
        return _pair2(x, y, spare)
    if t == 3:
        return _pair3(x, y)
    if t == 4:
        spare = _spare_wire({x[0], x[1], y[0], y[1]}, n)
        return (_pair2((x[0], x[1]), (y[0], y[1]), spare)
                + _pair3((x[0], x[2], x[3]), (y[0], y[2], y[3])))
    if t % 2 == 1:
        return _odd(x) + _odd(y)
    spare = _spare_wire({x[0], x[1], y[0], y[1]}, n)
    return (_pair2((x[0], x[1]), (y[0], y[1]), spare)
            + _odd((x[0],) + x[2:])
            + _odd((y[0],) + y[2:]))


def cycles_to_permutation(tuples, n: int) -> Permutation:
    """Left-to-right composition of cycle tuples, for verification."""
    p = Permutation.identity(n)
    for c in tuples:
        p = p.then(Permutation.from_cycle(c, n))
    return p
