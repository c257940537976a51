import math
import random

import numpy as np
import pytest

from hwbcirc.ancilla import synth_hwb_ancilla
from hwbcirc.gates import (
    Circuit, Cnot, Cperm5, Cz, FSwap, Fredkin, Mct, Not, Phase11, S, Swap,
)
from hwbcirc.oracle import HwbSpec
from hwbcirc.perm import Permutation
from hwbcirc.quantum import synth_fft, fourier_matrix, jordan_wigner_op
from hwbcirc.sim import (
    apply_circuit,
    assert_perm_equal,
    backend_name,
    circuit_unitary,
    compile_circuit,
    expm_hermitian,
    rev_check_exhaustive,
    rev_check_sampled,
    rev_simulate,
    run_words,
)
from hwbcirc.sim import _pycore
from hwbcirc.sim.reversible import hwb_words, pack_bits, unpack_bits


def test_basic_gate_semantics():
    c = Circuit(2, "reversible", (Cnot(0, 1),))
    assert rev_simulate(c, "10") == "11"
    assert rev_simulate(c, "01") == "01"
    c = Circuit(3, "reversible", (Fredkin(0, 1, 2),))
    assert rev_simulate(c, "110") == "101"
    assert rev_simulate(c, "010") == "010"
    c = Circuit(3, "reversible", (Swap(0, 2),))
    assert rev_simulate(c, "100") == "001"
    c = Circuit(2, "reversible", (Not(1),))
    assert rev_simulate(c, "00") == "01"
    c = Circuit(6, "reversible", (Mct((0, 1, 2, 3, 4), 5),))
    assert rev_simulate(c, "111110") == "111111"
    assert rev_simulate(c, "111010") == "111010"


def test_cperm5_reads_first_target_as_msb():
    table = list(range(32))
    table[0b10000], table[0b01000] = 0b01000, 0b10000
    gate = Cperm5(5, (0, 1, 2, 3, 4), tuple(table))
    c = Circuit(6, "reversible", (gate,))
    assert rev_simulate(c, "100001") == "010001"  # control (wire 5) set
    assert rev_simulate(c, "100000") == "100000"  # control clear


def test_cperm5_orbit_shift_example():
    from hwbcirc.ancillafree import orbit_table
    from hwbcirc.perm import canonical_5_cycle
    gate = Cperm5(5, (0, 1, 2, 3, 4), orbit_table(1, canonical_5_cycle()))
    c = Circuit(6, "reversible", (gate,))
    assert rev_simulate(c, "100001") == "010001"


def test_rev_simulate_is_a_bijection():
    rng = random.Random(47)
    from tests_util_circuits import random_reversible_circuit
    for _ in range(10):
        c = random_reversible_circuit(rng, wires=8, gates=30)
        seen = {rev_simulate(c, format(v, "08b")[::-1]) for v in range(256)}
        assert len(seen) == 256


def test_word_length_checked():
    c = Circuit(3, "reversible", (Not(0),))
    with pytest.raises(ValueError):
        rev_simulate(c, "0101")


def test_exhaustive_check_catches_mutations():
    circuit = synth_hwb_ancilla(4)
    spec = HwbSpec(4, "right")
    assert rev_check_exhaustive(circuit, spec, circuit.ancillas).ok
    broken = Circuit(circuit.wires, "reversible", circuit.gates[:-1],
                     ancillas=circuit.ancillas)
    report = rev_check_exhaustive(broken, spec, broken.ancillas)
    assert not report.ok
    assert report.counterexample is not None
    assert report.expected != report.got


def test_sampled_check_is_seed_deterministic():
    circuit = synth_hwb_ancilla(9)
    spec = HwbSpec(9, "right")
    a = rev_check_sampled(circuit, spec, circuit.ancillas, 100, seed=7)
    b = rev_check_sampled(circuit, spec, circuit.ancillas, 100, seed=7)
    assert a == b and a.ok


def test_backends_agree_bit_for_bit():
    circuit = synth_hwb_ancilla(10)
    program = compile_circuit(circuit)
    words = np.arange(1 << 10, dtype=np.uint64)
    via_selected = words.copy()
    run_words(program, via_selected)
    via_python = words.copy()
    _pycore.run_words(program.op, program.cmask, program.amask,
                      program.bmask, program.tref, program.tables, via_python)
    assert np.array_equal(via_selected, via_python)
    assert backend_name() in ("compiled", "python")


def test_hwb_words_matches_string_oracle():
    from hwbcirc.oracle import hwb_apply
    for n in (1, 3, 6):
        for direction in ("right", "left"):
            spec = HwbSpec(n, direction)
            words = np.arange(1 << n, dtype=np.uint64)
            out = hwb_words(spec, words)
            for v in range(1 << n):
                x = unpack_bits(v, n)
                assert unpack_bits(int(out[v]), n) == hwb_apply(spec, x)


def test_pack_unpack_roundtrip():
    assert pack_bits("1010") == 0b0101
    assert unpack_bits(5, 4) == "1010"


def test_statevector_norm_preserved():
    rng = np.random.default_rng(51)
    circuit = synth_fft(5)
    psi = rng.normal(size=32) + 1j * rng.normal(size=32)
    psi /= np.linalg.norm(psi)
    out = apply_circuit(circuit, psi)
    assert abs(np.linalg.norm(out) - 1.0) <= 1e-9


def test_quantum_gate_matrices():
    u = circuit_unitary(Circuit(2, "quantum", (Cz(0, 1),)))
    assert np.allclose(u, np.diag([1, 1, 1, -1]))
    fs = circuit_unitary(Circuit(2, "quantum", (FSwap(0, 1),)))
    state = np.zeros(4)
    state[0b11] = 1.0
    assert np.allclose(fs @ state, -state)
    gamma = 1.1
    sm = circuit_unitary(Circuit(1, "quantum", (S(gamma, 0),)))
    assert np.allclose(sm, np.diag([1.0, np.exp(1j * gamma)]))


def test_fft2_matches_mode_matrix_relation():
    F = circuit_unitary(synth_fft(2))
    f = fourier_matrix(2)
    for p in range(2):
        lhs = F @ jordan_wigner_op(2, p) @ F.conj().T
        rhs = sum(f[p, q] * jordan_wigner_op(2, q) for q in range(2))
        assert np.max(np.abs(lhs - rhs)) <= 1e-10


def test_unitary_of_concatenation_is_product():
    rng = random.Random(53)
    from tests_util_circuits import random_quantum_circuit
    for _ in range(10):
        a = random_quantum_circuit(rng, wires=4, gates=6)
        b = random_quantum_circuit(rng, wires=4, gates=6)
        ab = Circuit(4, "quantum", a.gates + b.gates)
        got = circuit_unitary(ab)
        want = circuit_unitary(b) @ circuit_unitary(a)
        assert np.max(np.abs(got - want)) <= 1e-10


def test_expm_hermitian_examples():
    assert np.allclose(expm_hermitian(np.zeros((4, 4))), np.eye(4))
    h = np.diag([0.0, math.pi]).astype(complex)
    assert np.allclose(expm_hermitian(h), np.diag([1.0, -1.0]))
    rng = np.random.default_rng(57)
    a = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    h = (a + a.conj().T) / 2
    u = expm_hermitian(h)
    assert np.max(np.abs(u @ expm_hermitian(-h) - np.eye(16))) <= 1e-10


def test_expm_rejects_non_hermitian():
    with pytest.raises(ValueError):
        expm_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_assert_perm_equal():
    ok, dev = assert_perm_equal(np.eye(4, dtype=complex), Permutation.identity(4), 0.0)
    assert ok and dev == 0.0
    swap = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
                    dtype=complex)
    ok, _ = assert_perm_equal(swap, Permutation((0, 2, 1, 3)), 1e-12)
    assert ok
    phased = swap * np.exp(1j * math.pi / 7)
    ok, dev = assert_perm_equal(phased, Permutation((0, 2, 1, 3)), 1e-8)
    assert not ok and dev > 0.1


def test_kind_mismatches_rejected():
    q = Circuit(2, "quantum", (Cz(0, 1),))
    with pytest.raises(ValueError):
        rev_simulate(q, "00")
    r = Circuit(2, "reversible", (Cnot(0, 1),))
    with pytest.raises(ValueError):
        apply_circuit(r, np.zeros(4, dtype=complex))


def test_threads_env_changes_nothing(monkeypatch):
    circuit = synth_hwb_ancilla(12)
    spec = HwbSpec(12, "right")
    base = rev_check_exhaustive(circuit, spec, circuit.ancillas)
    monkeypatch.setenv("HWB_THREADS", "2")
    threaded = rev_check_exhaustive(circuit, spec, circuit.ancillas)
    assert base == threaded and base.ok
