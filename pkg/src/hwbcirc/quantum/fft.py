"""Fermionic Fourier transform circuit via Givens-rotation column reduction.

The n x n mode-space matrix f_{p,q} = exp(2i*pi*p*q/n)/sqrt(n) is reduced
to the identity column by column (last column first); every row operation is
mirrored by a two-mode gate so that the accumulated circuit U conjugates the
mode operators by f^{-1}.  The transform circuit is the gate-wise inverse
of U.  Gate count O(n^2); the vacuum is fixed.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..gates import Circuit, FSwap, R, S
from .inverse import invert_gates

ZERO_TOL = 1e-12


def fourier_matrix(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be at least 1")
    p, q = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return np.exp(2j * np.pi * p * q / n) / math.sqrt(n)


def column_reduce(f: np.ndarray, m: int, gates: list) -> tuple[np.ndarray, list]:
    """Zero column m of f above the diagonal and normalize f[m, m] to 1.

    f is modified in place; the mirroring gates are appended to `gates` in
    execution order.  Entries with magnitude <= 1e-12 count as zero.
    """
    n = f.shape[0]
    if not 0 <= m < n:
        raise ValueError(f"column {m} out of range")
    if np.max(np.abs(f @ f.conj().T - np.eye(n))) > 1e-10:
        raise ValueError("matrix is not unitary")
    for p in range(m):
        if abs(f[p, m]) <= ZERO_TOL:
            continue  # nothing to zero on this row
        if abs(f[p + 1, m]) <= ZERO_TOL:
            # the rotation below would be trivial; a mode swap suffices
            f[[p, p + 1]] = f[[p + 1, p]]
            gates.append(FSwap(p, p + 1))
            continue
        ratio = -f[p, m] / f[p + 1, m]
        alpha = math.atan(abs(ratio))
        beta = -cmath.phase(ratio)
        v = f[p].copy()
        f[p] = math.cos(alpha) * f[p] + math.sin(alpha) * cmath.exp(-1j * beta) * f[p + 1]
        f[p + 1] = math.cos(alpha) * f[p + 1] - math.sin(alpha) * cmath.exp(1j * beta) * v
        gates.append(R(alpha, beta, p, p + 1))
    gamma = cmath.phase(f[m, m])
    if abs(gamma) > ZERO_TOL:
        f[m] *= cmath.exp(-1j * gamma)
        gates.append(S(gamma, m))
    return f, gates


def reduction_gates(n: int) -> list:
    """Execution-order gates of the reducing circuit U (so that U realizes
    the inverse transform); the residual matrix must be the identity."""
    f = fourier_matrix(n)
    gates: list = []
    for m in range(n - 1, -1, -1):
        column_reduce(f, m, gates)
    if np.max(np.abs(f - np.eye(n))) > 1e-9:
        raise AssertionError("column reduction did not reach the identity")
    return gates


def fft_gates(n: int) -> list:
    """Gates of the transform itself (inverse of the reducing circuit)."""
    return invert_gates(reduction_gates(n))


def synth_fft(n: int) -> Circuit:
    return Circuit(wires=n, kind="quantum", gates=tuple(fft_gates(n)))
