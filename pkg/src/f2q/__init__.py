"""Two-dimensional fermion-to-qubit mappings: exact Pauli encodings,
Clifford-circuit derivations, and machine verification."""

from .pauli import (
    PauliOperator,
    RegistryMismatchError,
    SiteRegistry,
    pauli_commutation_scalar,
    pauli_mul,
    pauli_weight,
)
from .majorana import (
    MajoranaMonomial,
    OpenPathError,
    loop_word,
    majorana_canonicalize,
    majorana_commutation_scalar,
    majorana_mul,
)
from .lattice import Coloring, Torus, build_coloring, build_torus, color_of
from .clifford import (
    CliffordCircuit,
    Gate,
    circuit_conjugate,
    circuit_inverse,
    gate_conjugate,
    load_circuit,
    parse_circuit,
    tile_pattern,
)

__all__ = [
    "PauliOperator",
    "RegistryMismatchError",
    "SiteRegistry",
    "pauli_commutation_scalar",
    "pauli_mul",
    "pauli_weight",
    "MajoranaMonomial",
    "OpenPathError",
    "loop_word",
    "majorana_canonicalize",
    "majorana_commutation_scalar",
    "majorana_mul",
    "Coloring",
    "Torus",
    "build_coloring",
    "build_torus",
    "color_of",
    "CliffordCircuit",
    "Gate",
    "circuit_conjugate",
    "circuit_inverse",
    "gate_conjugate",
    "load_circuit",
    "parse_circuit",
    "tile_pattern",
]

__version__ = "0.1.0"
