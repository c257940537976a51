"""Ancilla-free polynomial-size reversible synthesis."""

from .adder import MajXorCircuit, build_weight_bit_circuit
from .barrington import (
    BranchingProgram,
    barrington_compile,
    maj_program,
    program_length_bound,
    xor_program,
)
from .cgates import (
    CGateSpec,
    apply_cgate,
    cycles_to_permutation,
    decompose_cycle,
    hwb_layers,
    synth_C0,
)
from .lowering import lower_cperm5, program_to_gates, table_to_gates
from .orbits import (
    ORBIT_WEIGHTS,
    ORBITS,
    C5Spec,
    RestrictedC5Spec,
    apply_c5,
    apply_restricted,
    c5_to_restricted,
    orbit_table,
)
from .pipeline import ancilla_free_stats, c5_specs, synth_hwb_ancilla_free

__all__ = [
    "BranchingProgram",
    "C5Spec",
    "CGateSpec",
    "MajXorCircuit",
    "ORBITS",
    "ORBIT_WEIGHTS",
    "RestrictedC5Spec",
    "ancilla_free_stats",
    "apply_c5",
    "apply_cgate",
    "apply_restricted",
    "barrington_compile",
    "build_weight_bit_circuit",
    "c5_specs",
    "c5_to_restricted",
    "cycles_to_permutation",
    "decompose_cycle",
    "hwb_layers",
    "lower_cperm5",
    "maj_program",
    "orbit_table",
    "program_length_bound",
    "program_to_gates",
    "synth_C0",
    "synth_hwb_ancilla_free",
    "table_to_gates",
    "xor_program",
]
