"""Generalized Pauli gates for qudits, Heisenberg-Weyl synthesis, and an
element-level simulator for interferometric OAM mode-shift circuits."""

from .optics import (
    GATE_KINDS,
    IDEAL,
    CalibrationError,
    CircuitError,
    Mirror,
    NoiseParams,
    OpticalCircuit,
    ParitySorter,
    PhaseShift,
    Recombiner,
    SpiralPhasePlate,
    apply_element,
    build_gate_circuit,
    calibrate_visibility,
    circuit_unitary_fidelity,
    correlation_matrix,
    efficiency,
    expected_permutation,
    ideal_gate_matrix,
    mean_gate_efficiency,
    monte_carlo_counts,
    output_mode_probabilities,
    propagate,
    propagate_branches,
    superposition_visibility,
    total_probability,
    trace_modes,
)
from .pauli import (
    SubspaceMap,
    apply_gate,
    basis_state,
    dagger,
    gate_power,
    is_hermitian,
    is_unitary,
    make_x,
    make_y,
    make_z,
    omega,
)
from .weyl import (
    CHI,
    decompose,
    exp_i_hermitian,
    hermitian_from_coeffs,
    q_basis,
    random_unitary,
    reconstruct,
    weyl_operator,
)

__all__ = [
    "CHI",
    "GATE_KINDS",
    "IDEAL",
    "CalibrationError",
    "CircuitError",
    "Mirror",
    "NoiseParams",
    "OpticalCircuit",
    "ParitySorter",
    "PhaseShift",
    "Recombiner",
    "SpiralPhasePlate",
    "SubspaceMap",
    "apply_element",
    "apply_gate",
    "basis_state",
    "build_gate_circuit",
    "calibrate_visibility",
    "circuit_unitary_fidelity",
    "correlation_matrix",
    "dagger",
    "decompose",
    "efficiency",
    "exp_i_hermitian",
    "expected_permutation",
    "gate_power",
    "hermitian_from_coeffs",
    "ideal_gate_matrix",
    "is_hermitian",
    "is_unitary",
    "make_x",
    "make_y",
    "make_z",
    "mean_gate_efficiency",
    "monte_carlo_counts",
    "omega",
    "output_mode_probabilities",
    "propagate",
    "propagate_branches",
    "q_basis",
    "random_unitary",
    "reconstruct",
    "superposition_visibility",
    "total_probability",
    "trace_modes",
    "weyl_operator",
]

__version__ = "0.1.0"
