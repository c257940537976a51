"""Execution and verification engines."""

from .reversible import (
    CheckReport,
    CompiledProgram,
    backend_name,
    compile_circuit,
    hwb_words,
    pack_bits,
    rev_check_exhaustive,
    rev_check_sampled,
    rev_simulate,
    run_words,
    unpack_bits,
)
from .statevector import (
    apply_circuit,
    assert_perm_equal,
    circuit_unitary,
    expm_hermitian,
    max_unitarity_defect,
    permutation_matrix,
)

__all__ = [
    "CheckReport",
    "CompiledProgram",
    "apply_circuit",
    "assert_perm_equal",
    "backend_name",
    "circuit_unitary",
    "compile_circuit",
    "expm_hermitian",
    "hwb_words",
    "max_unitarity_defect",
    "pack_bits",
    "permutation_matrix",
    "rev_check_exhaustive",
    "rev_check_sampled",
    "rev_simulate",
    "run_words",
    "unpack_bits",
]
