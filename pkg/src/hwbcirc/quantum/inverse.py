"""Gate-wise inversion of quantum gate sequences."""
from __future__ import annotations

from ..gates import Cnot, Cz, FSwap, Phase1, Phase011, Phase11, R, Rz, S


def invert_gate(g):
    if isinstance(g, S):
        return S(-g.gamma, g.q)
    if isinstance(g, R):
        return R(-g.alpha, g.beta, g.p, g.q)
    if isinstance(g, Phase1):
        return Phase1(-g.theta, g.p)
    if isinstance(g, Phase11):
        return Phase11(-g.theta, g.p, g.q)
    if isinstance(g, Phase011):
        return Phase011(-g.theta, g.q0, g.p, g.p2)
    if isinstance(g, Rz):
        return Rz(-g.theta, g.q)
    if isinstance(g, (FSwap, Cnot, Cz)):
        return g
    raise TypeError(f"cannot invert gate {g!r}")


def invert_gates(gates):
    """Reversed, gate-wise inverted sequence."""
    return [invert_gate(g) for g in reversed(list(gates))]
