"""Benchmark: compiled reversible kernel vs the numpy fallback.

Runs the same compiled gate programs over exhaustive input batches with
both backends and reports gate-applications per second.

    python benchmarks/bench_reversible.py [--n 14] [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from hwbcirc.ancilla import synth_hwb_ancilla
from hwbcirc.ancillafree import synth_hwb_ancilla_free
from hwbcirc.sim import _pycore
from hwbcirc.sim.reversible import compile_circuit

try:
    from hwbcirc.sim import _core
except ImportError:
    _core = None


def _run(kernel, program, words):
    t0 = time.perf_counter()
    kernel.run_words(program.op, program.cmask, program.amask,
                     program.bmask, program.tref, program.tables, words)
    return time.perf_counter() - t0


def bench(name, circuit, inputs, repeat):
    program = compile_circuit(circuit)
    total_apps = len(program) * inputs.shape[0]
    print(f"{name}: {len(program)} gates x {inputs.shape[0]} words "
          f"= {total_apps/1e6:.1f}M gate applications")
    results = {}
    for label, kernel in (("compiled", _core), ("python", _pycore)):
        if kernel is None:
            print(f"  {label:>9}: extension not built")
            continue
        best = min(_run(kernel, program, inputs.copy()) for _ in range(repeat))
        rate = total_apps / best
        results[label] = rate
        print(f"  {label:>9}: {best*1e3:8.1f} ms  ({rate/1e6:8.1f}M gate-apps/s)")
    if len(results) == 2:
        print(f"  speedup: {results['compiled']/results['python']:.1f}x")
    # both backends must agree bit for bit
    if _core is not None:
        a, b = inputs.copy(), inputs.copy()
        _core.run_words(program.op, program.cmask, program.amask,
                        program.bmask, program.tref, program.tables, a)
        _pycore.run_words(program.op, program.cmask, program.amask,
                          program.bmask, program.tref, program.tables, b)
        assert np.array_equal(a, b), "backend outputs disagree"
        print("  outputs identical across backends")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=14,
                    help="input size for the ancilla-assisted benchmark")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    n = args.n
    bench(f"ancilla-assisted hwb, n={n}",
          synth_hwb_ancilla(n), np.arange(1 << n, dtype=np.uint64), args.repeat)
    bench("ancilla-free hwb (table gates), n=8",
          synth_hwb_ancilla_free(8), np.arange(1 << 8, dtype=np.uint64), args.repeat)
    bench("ancilla-free hwb (elementary gates), n=7",
          synth_hwb_ancilla_free(7, lowering="nct"),
          np.arange(1 << 7, dtype=np.uint64), args.repeat)


if __name__ == "__main__":
    main()
