"""Exact exponential circuits for the diagonal Hamiltonians.

Every projector here is "qubit(s) in |1> and the remaining register of even
total weight", which a CNOT fan-in turns into a plain 2- or 3-qubit phase:
accumulate the parity of the untouched qubits onto a spare wire, apply the
phase, uncompute.  Consecutive factors share almost the whole fan-in, so
ordering them so that neighbors differ in one mode cancels all but two
CNOTs per step and the chains stay linear-size.
"""
from __future__ import annotations

import math

from ..gates import Circuit, Cnot, Phase1, Phase011, Phase11
from .inverse import invert_gates


def _phase11_parity_chain(n: int, angles) -> list:
    """Product over p = 1..n-1 of exp(i*angles[p] * |1><1|_p E): the parity
    of all qubits but p is folded onto qubit 0 around a two-qubit phase."""
    gates = [Cnot(j, 0) for j in range(2, n)]
    for p in range(1, n):
        gates.append(Phase11(angles[p], 0, p))
        if p + 1 < n:
            gates.extend((Cnot(p, 0), Cnot(p + 1, 0)))
    gates.extend(Cnot(j, 0) for j in range(1, n - 1))
    return gates


def synth_exp_h0e(n: int, scale: float = 0.5) -> Circuit:
    """exp(i*scale*H0E) for scale in {+1/2, -1/2}; H0 = (2pi/n) sum_p p n_p.

    The minus circuit is the exact gate-wise inverse of the plus circuit.
    O(n) gates.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if scale not in (0.5, -0.5):
        raise ValueError("scale must be +1/2 or -1/2")
    angles = [p * math.pi / n for p in range(n)]
    gates = _phase11_parity_chain(n, angles)
    if scale < 0:
        gates = invert_gates(gates)
    return Circuit(wires=n, kind="quantum", gates=tuple(gates))


def synth_exp_h0w(n: int) -> Circuit:
    """exp(i*H0W): one single-qubit phase per mode and one two-qubit phase
    per mode pair (all terms diagonal, hence commuting)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    unit = 2.0 * math.pi / n
    gates = [Phase1(unit * p, p) for p in range(1, n)]
    gates.extend(
        Phase11(unit * (p + q), p, q)
        for p in range(n) for q in range(p + 1, n)
    )
    return Circuit(wires=n, kind="quantum", gates=tuple(gates))


def _weight_even_chain(n: int, theta: float) -> list:
    """Product over every mode p of exp(i*theta*|1><1|_p E)."""
    gates = _phase11_parity_chain(n, [theta] * n)
    # mode 0 needs a different parity accumulator; use qubit 1
    gates.extend(Cnot(j, 1) for j in range(2, n))
    gates.append(Phase11(theta, 0, 1))
    gates.extend(Cnot(j, 1) for j in range(2, n))
    return gates


def synth_exp_we(n: int) -> Circuit:
    """exp(i*(pi/n)*W*E), the even-weight phase correction."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Circuit(wires=n, kind="quantum",
                   gates=tuple(_weight_even_chain(n, math.pi / n)))


def _serpentine_pairs(n: int):
    """All mode pairs 0 < p < p' ordered so neighbors share one mode."""
    pairs = []
    for x in range(1, n - 1):
        if x % 2 == 1:
            pairs.extend((x, q) for q in range(x + 1, n))
        else:
            pairs.extend((x, q) for q in range(n - 1, x, -1))
    return pairs


def synth_exp_w2e(n: int) -> Circuit:
    """exp(i*(pi/n)*W^2*E) in O(n^2) gates.

    W^2 E splits into commuting projector terms: pair terms away from mode
    0 (three-qubit phases conjugated by a shared parity fan-in, walked in a
    serpentine order so consecutive factors differ by two CNOTs), pair
    terms touching mode 0, and the single-mode chain.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    theta = 2.0 * math.pi / n
    gates = []

    # pair terms 0 < p < p': parity of modes outside {0, p, p'} on qubit 0
    pairs = _serpentine_pairs(n)
    first, last = pairs[0], pairs[-1]
    gates.extend(Cnot(j, 0) for j in range(1, n) if j not in first)
    for idx, (p, q) in enumerate(pairs):
        gates.append(Phase011(theta, 0, p, q))
        if idx + 1 < len(pairs):
            changed = set((p, q)) ^ set(pairs[idx + 1])
            gates.extend(Cnot(j, 0) for j in sorted(changed))
    gates.extend(Cnot(j, 0) for j in range(1, n) if j not in last)

    # pair terms (0, p): parity accumulator must avoid 0 and p
    gates.extend(Cnot(j, 1) for j in range(3, n))
    for p in range(2, n):
        gates.append(Phase011(theta, 1, 0, p))
        if p + 1 < n:
            gates.extend((Cnot(p, 1), Cnot(p + 1, 1)))
    gates.extend(Cnot(j, 1) for j in range(2, n - 1))
    gates.extend(Cnot(j, 2) for j in range(3, n))
    gates.append(Phase011(theta, 2, 0, 1))
    gates.extend(Cnot(j, 2) for j in range(3, n))

    # single-mode terms
    gates.extend(_weight_even_chain(n, math.pi / n))
    return Circuit(wires=n, kind="quantum", gates=tuple(gates))


def lower_phase011(gate: Phase011) -> list:
    """Phase-exact expansion of a three-qubit |011> phase into CNOT and
    two-qubit phases, using x0*x1*x2 = (x0*x1 + x0*x2 - x0*(x1^x2))/2."""
    if gate.theta == 0.0:
        return []
    t, q0, p, p2 = gate.theta, gate.q0, gate.p, gate.p2
    return [
        Phase11(t, p, p2),
        Phase11(-t / 2.0, q0, p),
        Phase11(-t / 2.0, q0, p2),
        Cnot(p, p2),
        Phase11(t / 2.0, q0, p2),
        Cnot(p, p2),
    ]
