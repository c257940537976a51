"""Dense statevector and unitary simulation for quantum circuits.

Amplitude indexing follows the package-wide convention: qubit 0 is the most
significant bit of the basis index, so a state reshaped to (2,)*n has qubit
p on axis p.  Dense-only on purpose; every verification here runs at
n <= 10.
"""
from __future__ import annotations

import numpy as np

from ..gates import (
    Circuit,
    Cnot,
    Cz,
    FSwap,
    Phase1,
    Phase011,
    Phase11,
    R,
    Rz,
    S,
)
from ..perm import Permutation

MAX_UNITARY_QUBITS = 10
MAX_EXPM_DIM = 1024


def _slicer(n, **fixed):
    sl = [slice(None)] * n
    for axis, value in fixed.items():
        sl[int(axis[1:])] = value
    return tuple(sl)


def _fix(n, pairs):
    sl = [slice(None)] * n
    for axis, value in pairs:
        sl[axis] = value
    return tuple(sl)


def apply_circuit(circuit: Circuit, psi: np.ndarray) -> np.ndarray:
    """Apply a quantum circuit to a statevector (or a batch of columns).

    psi has shape (2**n,) or (2**n, batch); a fresh array is returned.
    """
    if circuit.kind != "quantum":
        raise ValueError("apply_circuit needs a quantum circuit")
    n = circuit.wires
    dim = 1 << n
    if psi.shape[0] != dim:
        raise ValueError(f"state dimension {psi.shape[0]} != 2^{n}")
    batch = psi.shape[1:] if psi.ndim > 1 else ()
    state = np.array(psi, dtype=np.complex128).reshape((2,) * n + batch)
    for gate in circuit.gates:
        _apply_gate(state, gate, n)
    return state.reshape((dim,) + batch)


def _apply_gate(state, gate, n):
    if isinstance(gate, S):
        state[_fix(n, [(gate.q, 1)])] *= np.exp(1j * gate.gamma)
    elif isinstance(gate, Phase1):
        state[_fix(n, [(gate.p, 1)])] *= np.exp(1j * gate.theta)
    elif isinstance(gate, Rz):
        state[_fix(n, [(gate.q, 0)])] *= np.exp(-0.5j * gate.theta)
        state[_fix(n, [(gate.q, 1)])] *= np.exp(0.5j * gate.theta)
    elif isinstance(gate, Phase11):
        state[_fix(n, [(gate.p, 1), (gate.q, 1)])] *= np.exp(1j * gate.theta)
    elif isinstance(gate, Phase011):
        sl = _fix(n, [(gate.q0, 0), (gate.p, 1), (gate.p2, 1)])
        state[sl] *= np.exp(1j * gate.theta)
    elif isinstance(gate, Cz):
        state[_fix(n, [(gate.p, 1), (gate.q, 1)])] *= -1.0
    elif isinstance(gate, Cnot):
        a = _fix(n, [(gate.control, 1), (gate.target, 0)])
        b = _fix(n, [(gate.control, 1), (gate.target, 1)])
        tmp = state[a].copy()
        state[a] = state[b]
        state[b] = tmp
    elif isinstance(gate, FSwap):
        a = _fix(n, [(gate.p, 0), (gate.q, 1)])
        b = _fix(n, [(gate.p, 1), (gate.q, 0)])
        tmp = state[a].copy()
        state[a] = state[b]
        state[b] = tmp
        state[_fix(n, [(gate.p, 1), (gate.q, 1)])] *= -1.0
    elif isinstance(gate, R):
        a = _fix(n, [(gate.p, 0), (gate.q, 1)])
        b = _fix(n, [(gate.p, 1), (gate.q, 0)])
        c, s = np.cos(gate.alpha), np.sin(gate.alpha)
        a01 = state[a].copy()
        a10 = state[b].copy()
        state[a] = c * a01 - np.exp(-1j * gate.beta) * s * a10
        state[b] = np.exp(1j * gate.beta) * s * a01 + c * a10
    else:  # pragma: no cover - Circuit already validates gate types
        raise TypeError(f"unsupported quantum gate {gate!r}")


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense unitary; column j is the image of basis state |j>."""
    if circuit.wires > MAX_UNITARY_QUBITS:
        raise ValueError(f"dense unitary capped at {MAX_UNITARY_QUBITS} qubits")
    dim = 1 << circuit.wires
    return apply_circuit(circuit, np.eye(dim, dtype=np.complex128))


def expm_hermitian(h: np.ndarray) -> np.ndarray:
    """e^{iH} for Hermitian H, via eigendecomposition."""
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("expected a square matrix")
    if h.shape[0] > MAX_EXPM_DIM:
        raise ValueError(f"matrix exponential capped at dim {MAX_EXPM_DIM}")
    if np.max(np.abs(h - h.conj().T)) > 1e-10:
        raise ValueError("matrix is not Hermitian")
    evals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * evals)) @ vecs.conj().T


def permutation_matrix(perm: Permutation) -> np.ndarray:
    dim = len(perm.image)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for j in range(dim):
        mat[perm.image[j], j] = 1.0
    return mat


def assert_perm_equal(u: np.ndarray, perm: Permutation, tol: float):
    """Phase-exact comparison of a unitary against a basis permutation.

    Returns (ok, max_deviation): entry U[perm(j), j] must be 1 and every
    other entry 0, both within tol; a global phase fails the check.
    """
    if u.shape != (len(perm.image),) * 2:
        raise ValueError("dimension mismatch")
    dev = float(np.max(np.abs(u - permutation_matrix(perm))))
    return dev <= tol, dev


def max_unitarity_defect(u: np.ndarray) -> float:
    dim = u.shape[0]
    return float(np.max(np.abs(u.conj().T @ u - np.eye(dim))))
