"""Quantum synthesis: fermionic Fourier transform, diagonal exponentials,
and the assembled O(n^2) circuits."""

from .assemble import (
    quantum_stats,
    synth_cyclic_shift,
    synth_hwb_quantum,
)
from .exponentials import (
    lower_phase011,
    synth_exp_h0e,
    synth_exp_h0w,
    synth_exp_w2e,
    synth_exp_we,
)
from .fermion import jordan_wigner_op
from .fft import column_reduce, fft_gates, fourier_matrix, synth_fft
from .hamiltonians import (
    even_projector,
    h0_matrix,
    h0e_matrix,
    h0w_matrix,
    hprime_matrix,
    w2e_matrix,
    we_matrix,
    weight_matrix,
)
from .inverse import invert_gate, invert_gates

__all__ = [
    "column_reduce",
    "even_projector",
    "fft_gates",
    "fourier_matrix",
    "h0_matrix",
    "h0e_matrix",
    "h0w_matrix",
    "hprime_matrix",
    "invert_gate",
    "invert_gates",
    "jordan_wigner_op",
    "lower_phase011",
    "quantum_stats",
    "synth_cyclic_shift",
    "synth_exp_h0e",
    "synth_exp_h0w",
    "synth_exp_w2e",
    "synth_exp_we",
    "synth_fft",
    "synth_hwb_quantum",
    "w2e_matrix",
    "we_matrix",
    "weight_matrix",
]
