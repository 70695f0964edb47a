"""Basis entropy of quantum states under projective measurement.

Matrices are complex128 numpy arrays. Entropies are in bits. A projector
basis is passed as the unitary frame whose columns are the basis vectors.
"""

from bentropy._core import (
    apply_measurement,
    asymmetric_discord_state,
    axis_frame,
    basis_entropy,
    bell,
    bell_diagonal,
    classify_purity,
    decohere_sequence,
    detect_discord,
    discord,
    eigh,
    from_bloch,
    grover_optimal_iterations,
    grover_trace,
    luo_discord,
    max_basis_entropy,
    maximally_mixed,
    min_basis_entropy,
    mutual_information,
    partial_trace,
    product_frame,
    shor_trace,
    validate_state,
    von_neumann_entropy,
    werner,
    werner_sweep,
)

__all__ = [
    "apply_measurement",
    "asymmetric_discord_state",
    "axis_frame",
    "basis_entropy",
    "bell",
    "bell_diagonal",
    "classify_purity",
    "decohere_sequence",
    "detect_discord",
    "discord",
    "eigh",
    "from_bloch",
    "grover_optimal_iterations",
    "grover_trace",
    "luo_discord",
    "max_basis_entropy",
    "maximally_mixed",
    "min_basis_entropy",
    "mutual_information",
    "partial_trace",
    "product_frame",
    "shor_trace",
    "validate_state",
    "von_neumann_entropy",
    "werner",
    "werner_sweep",
]

__version__ = "0.1.0"
