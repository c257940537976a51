"""Circuit synthesis and verification for the hidden weighted bit function.

hwb cyclically shifts an n-bit string by its Hamming weight.  Three
synthesizers produce circuits for it, all checked against brute-force
oracles by the built-in simulators:

* ``synth_hwb_ancilla``       - O(n log n) reversible gates, O(log n) ancillas
* ``synth_hwb_ancilla_free``  - polynomial-size reversible, exactly n wires
* ``synth_hwb_quantum``       - O(n^2) quantum gates, exactly n qubits
"""

from .ancilla import synth_hwb_ancilla
from .ancillafree import synth_hwb_ancilla_free
from .gates import Circuit
from .oracle import HwbSpec, hwb_apply, hwb_permutation, truth_table
from .perm import Permutation
from .quantum import synth_cyclic_shift, synth_fft, synth_hwb_quantum
from .textfmt import parse, serialize

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "HwbSpec",
    "Permutation",
    "__version__",
    "hwb_apply",
    "hwb_permutation",
    "parse",
    "serialize",
    "synth_cyclic_shift",
    "synth_fft",
    "synth_hwb_ancilla",
    "synth_hwb_ancilla_free",
    "synth_hwb_quantum",
    "truth_table",
]
