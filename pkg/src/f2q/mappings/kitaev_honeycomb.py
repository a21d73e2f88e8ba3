"""Honeycomb-model mapping in its square-embedded form: fermions on faces,
one qubit on every edge, all generator images of weight 2.

Generator images (SP convention):

- S_h(x,y) = X_h(x,y) · Z_v(x+1,y)
- S_v(x,y) = X_v(x,y) · Z_h(x,y+1)
- P_f(x,y) = Y_h(x,y+1) · Y_v(x+1,y)

Each square-lattice edge hosts the x/y/z-link pair term of one honeycomb
link after the brick-wall embedding; the face parity pairs the two link
qubits on the face's north and east sides.  Stabilizers are the loop
residues of the elementary dual plaquettes (weight 6).

As with the auxiliary-fermion mapping, the generator signs are a gauge
freedom absorbed by the loop residues; the all-positive choice below is
the canonical representative.
"""

from __future__ import annotations

from dataclasses import replace

from ..lattice import Torus
from ..pauli import PauliOperator, SiteRegistry
from .base import FACES, SP, Mapping, fermion_registry, loop_residue, plaquette_edges

__all__ = ["kitaev_honeycomb"]

_SIGN_H = 0  # i^k prefactor of S_h
_SIGN_V = 0  # i^k prefactor of S_v
_SIGN_P = 0  # i^k prefactor of P_f


def _hopping_image(registry: SiteRegistry, t: Torus, e) -> PauliOperator:
    kind, x, y = e
    if kind == "h":
        letters = {e: "X", t.v_edge(x + 1, y): "Z"}
        return PauliOperator.from_letters(registry, letters, _SIGN_H)
    letters = {e: "X", t.h_edge(x, y + 1): "Z"}
    return PauliOperator.from_letters(registry, letters, _SIGN_V)


def _parity_image(registry: SiteRegistry, t: Torus, f) -> PauliOperator:
    x, y = f
    letters = {t.h_edge(x, y + 1): "Y", t.v_edge(x + 1, y): "Y"}
    return PauliOperator.from_letters(registry, letters, _SIGN_P)


def kitaev_honeycomb(t: Torus) -> Mapping:
    """Build the square-embedded honeycomb mapping on *t* (any size ≥ 2)."""
    registry = t.edge_registry()
    m = Mapping(
        name="kitaev_honeycomb",
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
