"""Reversible bit-vector simulation and oracle checks.

States are packed machine words, wire i at bit i.  Circuits are compiled
once into flat gate arrays and executed by the compiled kernel when it was
built, otherwise by the numpy fallback (``hwbcirc.sim.backend_name()`` tells
which).  ``HWB_THREADS`` caps the number of worker threads used to shard
large exhaustive checks; each worker owns a disjoint slice of the word
array, so results are deterministic regardless of schedule.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass

import numpy as np

from ..gates import Circuit, Cnot, Cperm5, Fredkin, Mct, Not, Swap, Toffoli
from ..oracle import HwbSpec
from ..rng import splitmix64_stream

try:  # compiled extension is optional
    from . import _core as _kernel
except ImportError:  # pragma: no cover - exercised only on fallback installs
    from . import _pycore as _kernel

from ._pycore import OP_PERM5IF, OP_SWAPIF, OP_XORIF

MAX_EXHAUSTIVE_WIRES = 26


def backend_name() -> str:
    return _kernel.BACKEND


def _num_threads() -> int:
    raw = os.environ.get("HWB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class CompiledProgram:
    """Flat gate arrays consumed by the word kernels."""

    wires: int
    op: np.ndarray
    cmask: np.ndarray
    amask: np.ndarray
    bmask: np.ndarray
    tref: np.ndarray
    tables: np.ndarray

    def __len__(self) -> int:
        return int(self.op.shape[0])


def _spread_table(targets, table) -> list[int]:
    # table entry bits are MSB-first along the target tuple; place bit 4-j
    # of the entry on wire targets[j].
    out = []
    for value in table:
        word = 0
        for j, wire in enumerate(targets):
            word |= ((value >> (4 - j)) & 1) << wire
        out.append(word)
    return out


def compile_circuit(circuit: Circuit) -> CompiledProgram:
    if circuit.kind != "reversible":
        raise ValueError("word simulation needs a reversible circuit")
    n = len(circuit.gates)
    op = np.zeros(n, dtype=np.uint8)
    cmask = np.zeros(n, dtype=np.uint64)
    amask = np.zeros(n, dtype=np.uint64)
    bmask = np.zeros(n, dtype=np.uint64)
    tref = np.full(n, -1, dtype=np.int64)
    tables: list[int] = []
    for g, gate in enumerate(circuit.gates):
        if isinstance(gate, Not):
            op[g], amask[g] = OP_XORIF, 1 << gate.target
        elif isinstance(gate, Cnot):
            op[g] = OP_XORIF
            cmask[g] = 1 << gate.control
            amask[g] = 1 << gate.target
        elif isinstance(gate, Toffoli):
            op[g] = OP_XORIF
            cmask[g] = (1 << gate.c1) | (1 << gate.c2)
            amask[g] = 1 << gate.target
        elif isinstance(gate, Mct):
            op[g] = OP_XORIF
            for c in gate.controls:
                cmask[g] |= np.uint64(1 << c)
            amask[g] = 1 << gate.target
        elif isinstance(gate, Swap):
            op[g] = OP_SWAPIF
            amask[g] = 1 << gate.a
            bmask[g] = 1 << gate.b
        elif isinstance(gate, Fredkin):
            op[g] = OP_SWAPIF
            cmask[g] = 1 << gate.control
            amask[g] = 1 << gate.a
            bmask[g] = 1 << gate.b
        elif isinstance(gate, Cperm5):
            op[g] = OP_PERM5IF
            cmask[g] = 1 << gate.control
            packed = 0
            for j, wire in enumerate(gate.targets):
                packed |= wire << (6 * j)
                amask[g] |= np.uint64(1 << wire)
            bmask[g] = packed
            tref[g] = len(tables)
            tables.extend(_spread_table(gate.targets, gate.table))
        else:  # pragma: no cover - Circuit already validates gate types
            raise TypeError(f"unsupported reversible gate {gate!r}")
    return CompiledProgram(circuit.wires, op, cmask, amask, bmask, tref,
                           np.asarray(tables, dtype=np.uint64))


def run_words(program: CompiledProgram, words: np.ndarray) -> np.ndarray:
    """Run the program over a uint64 word array, in place."""
    if words.dtype != np.uint64:
        raise ValueError("words must be a uint64 array")
    threads = _num_threads()
    if threads > 1 and words.shape[0] >= 1 << 14:
        slices = np.array_split(words, threads)
        workers = [
            threading.Thread(
                target=_kernel.run_words,
                args=(program.op, program.cmask, program.amask,
                      program.bmask, program.tref, program.tables, part),
            )
            for part in slices if part.shape[0]
        ]
        for t in workers:
            t.start()
        for t in workers:
            t.join()
    else:
        _kernel.run_words(program.op, program.cmask, program.amask,
                          program.bmask, program.tref, program.tables, words)
    return words


def pack_bits(x: str) -> int:
    return sum(1 << i for i, c in enumerate(x) if c == "1")


def unpack_bits(word: int, wires: int) -> str:
    return "".join("1" if (word >> i) & 1 else "0" for i in range(wires))


def rev_simulate(circuit: Circuit, x: str) -> str:
    """Apply a reversible circuit to one bit string (wire i = position i)."""
    if len(x) != circuit.wires or any(c not in "01" for c in x):
        raise ValueError(f"expected a {circuit.wires}-bit string, got {x!r}")
    program = compile_circuit(circuit)
    words = np.array([pack_bits(x)], dtype=np.uint64)
    run_words(program, words)
    return unpack_bits(int(words[0]), circuit.wires)


def _popcount(words: np.ndarray) -> np.ndarray:
    v = words.copy()
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    v -= (v >> np.uint64(1)) & m1
    v = (v & m2) + ((v >> np.uint64(2)) & m2)
    v = (v + (v >> np.uint64(4))) & m4
    return (v * np.uint64(0x0101010101010101)) >> np.uint64(56)


def hwb_words(spec: HwbSpec, words: np.ndarray) -> np.ndarray:
    """Vectorized hwb on packed words (low spec.n bits hold the input)."""
    n = spec.n
    mask = np.uint64((1 << n) - 1)
    v = words & mask
    shift = _popcount(v) % np.uint64(n)
    if spec.direction == "right":
        # bit i moves to i + W: left shift inside the low n bits
        out = ((v << shift) | (v >> (np.uint64(n) - shift))) & mask
    else:
        out = ((v >> shift) | (v << (np.uint64(n) - shift))) & mask
    return out


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    mode: str
    checked: int
    counterexample: str | None = None
    expected: str | None = None
    got: str | None = None


def _compare(circuit, spec, words) -> CheckReport:
    expected = hwb_words(spec, words)
    program = compile_circuit(circuit)
    inputs = words.copy()
    run_words(program, words)
    bad = np.nonzero(words != expected)[0]
    mode = "exhaustive" if words.shape[0] == 1 << spec.n else f"sample:{words.shape[0]}"
    if bad.size:
        i = int(bad[0])
        return CheckReport(
            ok=False, mode=mode, checked=int(words.shape[0]),
            counterexample=unpack_bits(int(inputs[i]), circuit.wires),
            expected=unpack_bits(int(expected[i]), circuit.wires),
            got=unpack_bits(int(words[i]), circuit.wires),
        )
    return CheckReport(ok=True, mode=mode, checked=int(words.shape[0]))


def rev_check_exhaustive(circuit: Circuit, spec: HwbSpec, ancillas: int) -> CheckReport:
    """Check circuit(x . 0^a) == hwb(x) . 0^a for every n-bit input."""
    if circuit.wires != spec.n + ancillas:
        raise ValueError("wires must equal n + ancillas")
    if circuit.wires > MAX_EXHAUSTIVE_WIRES:
        raise ValueError(f"exhaustive check capped at {MAX_EXHAUSTIVE_WIRES} wires")
    words = np.arange(1 << spec.n, dtype=np.uint64)
    return _compare(circuit, spec, words)


def rev_check_sampled(circuit: Circuit, spec: HwbSpec, ancillas: int,
                      samples: int, seed: int) -> CheckReport:
    """Check on `samples` seeded pseudo-random inputs (splitmix64 stream)."""
    if circuit.wires != spec.n + ancillas:
        raise ValueError("wires must equal n + ancillas")
    mask = (1 << spec.n) - 1
    words = np.fromiter(
        (w & mask for w in splitmix64_stream(seed, samples)),
        dtype=np.uint64, count=samples,
    )
    return _compare(circuit, spec, words)
