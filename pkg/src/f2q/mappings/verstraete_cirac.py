"""Auxiliary-fermion mapping: physical qubits on vertical edges, auxiliary
qubits on horizontal edges, fermions on faces.

Generator images (SP convention):

- U_h(x,y) = X_v(x,y) · Y_h(x,y) · Y_v(x,y−1) · X_h(x,y−1)   (weight 4)
- U_v(x,y) = X_v(x−1,y) · X_v(x,y) · Z_h(x−1,y)              (weight 3)
- W_f(x,y) = Z_v(x,y)                                         (weight 1)

The hopping across a horizontal edge rides on an auxiliary-fermion pair,
which is why it touches horizontal-edge qubits; the parity is a single Z
on the physical qubit carrying the face's fermion.  Stabilizers are the
loop residues of the elementary dual plaquettes: the auxiliary-sector
plaquette operators of weight 6.

The generator signs are a gauge freedom: flipping any image flips its
own appearances inside every loop residue, so loop closure, −1-freeness
of the joint stabilizer/parity group, and the degeneracy are unchanged
(all sign patterns pass the same exhaustive scan).  The all-positive
choice below is the canonical representative.
"""

from __future__ import annotations

from dataclasses import replace

from ..lattice import Torus
from ..pauli import PauliOperator, SiteRegistry
from .base import FACES, SP, Mapping, fermion_registry, loop_residue, plaquette_edges

__all__ = ["verstraete_cirac"]

_SIGN_H = 0  # i^k prefactor of U_h
_SIGN_V = 0  # i^k prefactor of U_v
_SIGN_W = 0  # i^k prefactor of W_f


def _hopping_image(registry: SiteRegistry, t: Torus, e) -> PauliOperator:
    kind, x, y = e
    if kind == "h":
        letters = {
            t.v_edge(x, y): "X",
            e: "Y",
            t.v_edge(x, y - 1): "Y",
            t.h_edge(x, y - 1): "X",
        }
        return PauliOperator.from_letters(registry, letters, _SIGN_H)
    letters = {
        t.v_edge(x - 1, y): "X",
        e: "X",
        t.h_edge(x - 1, y): "Z",
    }
    return PauliOperator.from_letters(registry, letters, _SIGN_V)


def _parity_image(registry: SiteRegistry, t: Torus, f) -> PauliOperator:
    return PauliOperator.from_letters(registry, {t.v_edge(*f): "Z"}, _SIGN_W)


def verstraete_cirac(t: Torus) -> Mapping:
    """Build the auxiliary-fermion mapping on *t* (any size ≥ 2)."""
    registry = t.edge_registry()
    m = Mapping(
        name="verstraete_cirac",
        lattice=t,
        convention=SP,
        fermion_kind=FACES,
        fermion_sites=fermion_registry(t),
        qubit_registry=registry,
        hopping_images={e: _hopping_image(registry, t, e) for e in t.edges()},
        parity_images={f: _parity_image(registry, t, f) for f in t.vertices()},
    )
    stabilizers = tuple(
        loop_residue(m, plaquette_edges(m, v)) for v in t.vertices()
    )
    return replace(m, stabilizers=stabilizers)
