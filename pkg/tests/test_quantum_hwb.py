"""Assembled quantum circuits, and the fermionic-shift identities they rest
on, checked densely against exact matrix oracles."""
import math

import numpy as np
import pytest

from hwbcirc.gates import Circuit, FSwap, Phase011
from hwbcirc.oracle import HwbSpec, hwb_permutation
from hwbcirc.perm import Permutation
from hwbcirc.quantum import (
    h0_matrix,
    synth_cyclic_shift,
    synth_fft,
    synth_hwb_quantum,
    quantum_stats,
    weight_matrix,
)
from hwbcirc.quantum.assemble import cyclic_shift_right_gates
from hwbcirc.sim import (
    assert_perm_equal,
    circuit_unitary,
    expm_hermitian,
    max_unitarity_defect,
    permutation_matrix,
)


def shift_perm(n, direction):
    image = [0] * (1 << n)
    for v in range(1 << n):
        x = format(v, f"0{n}b")
        y = x[1:] + x[0] if direction == "left" else x[-1] + x[:-1]
        image[v] = int(y, 2)
    return Permutation(image)


def fermionic_shift(n):
    """Matrix product of neighbor fermionic swaps, first pair applied last."""
    out = np.eye(1 << n, dtype=complex)
    for p in range(n - 1):
        out = out @ circuit_unitary(Circuit(n, "quantum", (FSwap(p, p + 1),)))
    return out


def test_fswap_matrix():
    u = circuit_unitary(Circuit(2, "quantum", (FSwap(0, 1),)))
    want = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]],
                    dtype=complex)
    assert np.max(np.abs(u - want)) == 0.0


def test_fermionic_shift_phase_relation():
    # right shift = parity-dependent sign times the fermionic shift chain
    for n in range(2, 7):
        fc = fermionic_shift(n)
        right = permutation_matrix(shift_perm(n, "right"))
        dev = 0.0
        for v in range(1 << n):
            x = [int(c) for c in format(v, f"0{n}b")]
            sign = (-1) ** (x[n - 1] * sum(x[: n - 1]))
            dev = max(dev, np.max(np.abs(right[:, v] - sign * fc[:, v])))
        assert dev <= 1e-9, n


def test_fermionic_shift_is_transform_conjugated_momentum():
    for n in range(2, 7):
        F = circuit_unitary(synth_fft(n))
        fc = fermionic_shift(n)
        got = F @ expm_hermitian(h0_matrix(n)) @ F.conj().T
        assert np.max(np.abs(fc - got)) <= 1e-9, n


def test_fermionic_shift_boundary_identity():
    # fc Z_last = e^{-iH0/2} fc e^{iH0/2} e^{i(pi/n)W}
    for n in range(2, 7):
        fc = fermionic_shift(n)
        z_last = np.diag([(-1.0) ** (v & 1) for v in range(1 << n)]).astype(complex)
        lhs = fc @ z_last
        h0 = h0_matrix(n)
        rhs = (expm_hermitian(-0.5 * h0) @ fc @ expm_hermitian(0.5 * h0)
               @ expm_hermitian((math.pi / n) * weight_matrix(n)))
        assert np.max(np.abs(lhs - rhs)) <= 1e-9, n


def test_shift_splits_by_weight_parity():
    # right shift = E fc Z_last + (I - E) fc
    for n in range(2, 7):
        fc = fermionic_shift(n)
        z_last = np.diag([(-1.0) ** (v & 1) for v in range(1 << n)]).astype(complex)
        even = np.diag([1.0 - bin(v).count("1") % 2 for v in range(1 << n)])
        combined = even @ fc @ z_last + (np.eye(1 << n) - even) @ fc
        right = permutation_matrix(shift_perm(n, "right"))
        assert np.max(np.abs(combined - right)) <= 1e-9, n


def test_cyclic_shift_left_convention():
    for n in range(2, 7):
        u = circuit_unitary(synth_cyclic_shift(n))
        ok, dev = assert_perm_equal(u, shift_perm(n, "left"), 1e-8)
        assert ok, (n, dev)


def test_cyclic_shift_right_assembly():
    for n in range(2, 7):
        gates = cyclic_shift_right_gates(n)
        u = circuit_unitary(Circuit(n, "quantum", tuple(gates)))
        ok, dev = assert_perm_equal(u, shift_perm(n, "right"), 1e-8)
        assert ok, (n, dev)


def test_cyclic_shift_n2_is_swap():
    u = circuit_unitary(synth_cyclic_shift(2))
    want = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
                    dtype=complex)
    assert np.max(np.abs(u - want)) <= 1e-8


def test_cyclic_shift_n3_basis_example():
    u = circuit_unitary(synth_cyclic_shift(3))
    state = np.zeros(8)
    state[0b100] = 1.0
    out = u @ state
    assert abs(out[0b001] - 1.0) <= 1e-8


def test_hwb_n2_is_swap_both_directions():
    want = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
                    dtype=complex)
    for direction in ("right", "left"):
        u = circuit_unitary(synth_hwb_quantum(2, direction))
        assert np.max(np.abs(u - want)) <= 1e-8


def test_hwb_n3_right_matches_truth_table():
    u = circuit_unitary(synth_hwb_quantum(3, "right"))
    ok, dev = assert_perm_equal(u, hwb_permutation(HwbSpec(3, "right")), 1e-8)
    assert ok, dev


def test_hwb_matches_oracle_small_sizes():
    for n in range(2, 9):
        for direction in ("right", "left"):
            u = circuit_unitary(synth_hwb_quantum(n, direction))
            ok, dev = assert_perm_equal(u, hwb_permutation(HwbSpec(n, direction)), 1e-8)
            assert ok, (n, direction, dev)


def test_hwb_clifford_rz_lowering():
    for n in (3, 6):
        circuit = synth_hwb_quantum(n, "right", "clifford-rz")
        assert not any(isinstance(g, Phase011) for g in circuit.gates)
        u = circuit_unitary(circuit)
        ok, dev = assert_perm_equal(u, hwb_permutation(HwbSpec(n, "right")), 1e-8)
        assert ok, (n, dev)


def test_unitarity_of_synthesized_circuits():
    for n in range(2, 9):
        u = circuit_unitary(synth_hwb_quantum(n, "right"))
        assert max_unitarity_defect(u) <= 1e-9, n


def test_global_phase_would_fail():
    u = circuit_unitary(synth_hwb_quantum(3, "right")) * np.exp(1j * math.pi / 7)
    ok, _dev = assert_perm_equal(u, hwb_permutation(HwbSpec(3, "right")), 1e-8)
    assert not ok


def test_gate_count_quadratic():
    for n in (4, 8, 16, 32, 64):
        stats = quantum_stats(n)
        assert stats["total"] <= 6 * n * n, (n, stats["total"])


def test_invalid_arguments():
    with pytest.raises(ValueError):
        synth_hwb_quantum(1)
    with pytest.raises(ValueError):
        synth_hwb_quantum(3, "up")
    with pytest.raises(ValueError):
        synth_hwb_quantum(3, "right", "magic")
