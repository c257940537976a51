"""Jordan-Wigner realization of fermionic mode operators on qubits."""
from __future__ import annotations

import numpy as np

MAX_DENSE_QUBITS = 10

_Z = np.diag([1.0, -1.0]).astype(np.complex128)
_I = np.eye(2, dtype=np.complex128)
_LOWER = np.array([[0, 1], [0, 0]], dtype=np.complex128)  # |0><1|
_RAISE = np.array([[0, 0], [1, 0]], dtype=np.complex128)  # |1><0|


def jordan_wigner_op(n: int, p: int, kind: str = "annihilate") -> np.ndarray:
    """Dense 2^n x 2^n matrix of a_p ('annihilate') or a_p^dag ('create'):
    p leading Z factors, the ladder operator on qubit p, identities after."""
    if not 0 <= p < n:
        raise ValueError(f"mode {p} out of range for {n} qubits")
    if n > MAX_DENSE_QUBITS:
        raise ValueError(f"dense operators capped at {MAX_DENSE_QUBITS} qubits")
    if kind == "annihilate":
        ladder = _LOWER
    elif kind == "create":
        ladder = _RAISE
    else:
        raise ValueError(f"unknown kind {kind!r}")
    out = np.array([[1.0]], dtype=np.complex128)
    for j in range(n):
        out = np.kron(out, _Z if j < p else (ladder if j == p else _I))
    return out
