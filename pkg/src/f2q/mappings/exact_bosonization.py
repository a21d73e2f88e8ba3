"""Exact bosonization: fermions on faces, one qubit on every edge.

Generator images (SP convention, exact phases):

- hopping  S_h(x,y) → U_h(x,y) = X on h(x,y), Z on v(x,y−1);
- hopping  S_v(x,y) → U_v(x,y) = X on v(x,y), Z on h(x−1,y);
- parity   P_f      → W_f = Z on the four boundary edges of the face.

The stabilizer at vertex (x, y) is the image of the fermionic identity
P_{f(x−1,y−1)} · P_{f(x,y)} · S_v(x,y) · S_h(x,y) · S_v(x,y−1) · S_h(x−1,y),
taken as the ordered product of the corresponding images (weight 6).
"""

from __future__ import annotations

from dataclasses import replace

from ..lattice import Torus
from ..pauli import PauliOperator, SiteRegistry, product
from .base import FACES, SP, Mapping, fermion_registry

__all__ = ["exact_bosonization", "vertex_constraint_factors"]


def _hopping_image(registry: SiteRegistry, t: Torus, e) -> PauliOperator:
    kind, x, y = e
    if kind == "h":
        other = t.v_edge(x, y - 1)
    else:
        other = t.h_edge(x - 1, y)
    return PauliOperator.from_letters(registry, {e: "X", other: "Z"})


def _parity_image(registry: SiteRegistry, t: Torus, f) -> PauliOperator:
    return PauliOperator.from_letters(
        registry, {e: "Z" for e in t.face_boundary(f)}
    )


def vertex_constraint_factors(m: Mapping, v) -> list:
    """Images whose ordered product is the stabilizer at vertex *v*.

    The underlying fermionic product is exactly +1, so the ordered image
    product is a stabilizer with its phase fixed by the Pauli algebra.
    """
    x, y = v
    t = m.lattice
    return [
        m.parity(t.wrap(x - 1, y - 1)),
        m.parity(t.wrap(x, y)),
        m.hopping(t.v_edge(x, y)),
        m.hopping(t.h_edge(x, y)),
        m.hopping(t.v_edge(x, y - 1)),
        m.hopping(t.h_edge(x - 1, y)),
    ]


def exact_bosonization(t: Torus) -> Mapping:
    """Build the exact-bosonization mapping on *t* (any size ≥ 2)."""
    registry = t.edge_registry()
    m = Mapping(
        name="exact_bosonization",
        lattice=t,
        convention=SP,
        fermion_kind=FACES,
        fermion_sites=fermion_registry(t),
        qubit_registry=registry,
        hopping_images={e: _hopping_image(registry, t, e) for e in t.edges()},
        parity_images={f: _parity_image(registry, t, f) for f in t.vertices()},
    )
    stabilizers = tuple(
        product(registry, vertex_constraint_factors(m, v)) for v in t.vertices()
    )
    return replace(m, stabilizers=stabilizers)
