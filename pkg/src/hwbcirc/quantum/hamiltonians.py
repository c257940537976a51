"""Dense Hamiltonians used as verification oracles (n <= 10).

All diagonal in the computational basis (qubit 0 = most significant index
bit): the mode-weighted number operator H0, the Hamming weight operator W,
and the even-weight projector E.
"""
from __future__ import annotations

import numpy as np


def _bit(idx: int, n: int, p: int) -> int:
    return (idx >> (n - 1 - p)) & 1


def number_diag(n: int, p: int) -> np.ndarray:
    """Diagonal of |1><1|_p."""
    return np.array([_bit(i, n, p) for i in range(1 << n)], dtype=np.float64)


def weight_diag(n: int) -> np.ndarray:
    return sum(number_diag(n, p) for p in range(n))


def even_projector_diag(n: int) -> np.ndarray:
    return np.array([1.0 - (bin(i).count("1") % 2) for i in range(1 << n)])


def h0_diag(n: int) -> np.ndarray:
    """(2*pi/n) * sum_p p|1><1|_p."""
    return (2.0 * np.pi / n) * sum(p * number_diag(n, p) for p in range(n))


def h0_matrix(n: int) -> np.ndarray:
    return np.diag(h0_diag(n)).astype(np.complex128)


def weight_matrix(n: int) -> np.ndarray:
    return np.diag(weight_diag(n)).astype(np.complex128)


def even_projector(n: int) -> np.ndarray:
    return np.diag(even_projector_diag(n)).astype(np.complex128)


def h0e_matrix(n: int) -> np.ndarray:
    return np.diag(h0_diag(n) * even_projector_diag(n)).astype(np.complex128)


def h0w_matrix(n: int) -> np.ndarray:
    return np.diag(h0_diag(n) * weight_diag(n)).astype(np.complex128)


def w2e_matrix(n: int) -> np.ndarray:
    w = weight_diag(n)
    return np.diag(w * w * even_projector_diag(n)).astype(np.complex128)


def we_matrix(n: int) -> np.ndarray:
    return np.diag(weight_diag(n) * even_projector_diag(n)).astype(np.complex128)


def hprime_matrix(n: int) -> np.ndarray:
    """H0 + (pi/n) W E."""
    return h0_matrix(n) + (np.pi / n) * we_matrix(n)
