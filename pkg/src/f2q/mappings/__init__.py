"""Catalog of fermion-to-qubit mappings on the torus."""

from __future__ import annotations

from ..lattice import Torus
from .base import (
    AB,
    FACES,
    SP,
    VERTICES,
    Mapping,
    Pairing,
    PathError,
    encode_bilinear,
    fermion_path,
    fermion_registry,
    hopping_word,
    parity_word,
    repair,
)
from .bksf import bksf
from .exact_bosonization import exact_bosonization
from .jordan_wigner_1d import jordan_wigner_1d
from .kitaev_honeycomb import kitaev_honeycomb
from .verstraete_cirac import verstraete_cirac

__all__ = [
    "AB",
    "SP",
    "FACES",
    "VERTICES",
    "Mapping",
    "Pairing",
    "PathError",
    "bksf",
    "build_mapping",
    "encode_bilinear",
    "exact_bosonization",
    "fermion_path",
    "fermion_registry",
    "hopping_word",
    "jordan_wigner_1d",
    "kitaev_honeycomb",
    "parity_word",
    "repair",
    "verstraete_cirac",
]

_BUILDERS = {
    "bksf": bksf,
    "exact_bosonization": exact_bosonization,
    "jordan_wigner_1d": jordan_wigner_1d,
    "kitaev_honeycomb": kitaev_honeycomb,
    "verstraete_cirac": verstraete_cirac,
}


def build_mapping(kind: str, t: Torus) -> Mapping:
    """Build the catalog mapping *kind* on torus *t*.

    Kind names use underscores; hyphens are accepted as an alias.
    """
    key = kind.replace("-", "_")
    try:
        builder = _BUILDERS[key]
    except KeyError:
        known = ", ".join(sorted(_BUILDERS))
        raise ValueError(f"unknown mapping kind {kind!r} (known: {known})")
    return builder(t)
