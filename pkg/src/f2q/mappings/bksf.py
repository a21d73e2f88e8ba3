"""Superfast encoding: fermions on vertices, one qubit on every edge.

Each vertex orders its incident edges south < east < north < west; the
hopping image of an edge is X on the edge itself times Z on every
lower-ordered edge at both endpoints:

- Ã_h(x,y) = X_h(x,y) · Z_v(x,y−1) · Z_v(x+1,y−1) · Z_h(x+1,y) · Z_v(x+1,y)
- Ã_v(x,y) = X_v(x,y) · Z_v(x,y−1) · Z_h(x,y)

(the south edge has no lower neighbour, so the top endpoint of a vertical
edge contributes nothing).  The parity image is Z on the four edges of the
vertex star.  Stabilizers are the ordered hopping products around each
face, which the Majorana algebra fixes to i^{−4}·(walk product) = plain
product for a length-4 loop.
"""

from __future__ import annotations

from dataclasses import replace

from ..lattice import Torus
from ..pauli import PauliOperator, SiteRegistry, product
from .base import AB, VERTICES, Mapping, fermion_registry

__all__ = ["bksf"]

# incident-edge order at a vertex: south(1) < east(2) < north(3) < west(4)


def _lower_edges(t: Torus, v, label: int) -> list:
    south, east, north, west = t.vertex_star(v)
    return [south, east, north, west][: label - 1]


def _hopping_image(registry: SiteRegistry, t: Torus, e) -> PauliOperator:
    kind, x, y = e
    if kind == "h":
        # east edge (label 2) at the left vertex, west edge (4) at the right
        left, right = (x, y), t.wrap(x + 1, y)
        zs = _lower_edges(t, left, 2) + _lower_edges(t, right, 4)
    else:
        # south edge (1) at the top vertex, north edge (3) at the bottom
        top, bottom = t.wrap(x, y + 1), (x, y)
        zs = _lower_edges(t, top, 1) + _lower_edges(t, bottom, 3)
    letters = {z: "Z" for z in zs}
    letters[e] = "X"
    return PauliOperator.from_letters(registry, letters)


def _parity_image(registry: SiteRegistry, t: Torus, v) -> PauliOperator:
    return PauliOperator.from_letters(
        registry, {e: "Z" for e in t.vertex_star(v)}
    )


def bksf(t: Torus) -> Mapping:
    """Build the superfast encoding on *t* (any size ≥ 2)."""
    registry = t.edge_registry()
    m = Mapping(
        name="bksf",
        lattice=t,
        convention=AB,
        fermion_kind=VERTICES,
        fermion_sites=fermion_registry(t),
        qubit_registry=registry,
        hopping_images={e: _hopping_image(registry, t, e) for e in t.edges()},
        parity_images={v: _parity_image(registry, t, v) for v in t.vertices()},
    )
    stabilizers = tuple(
        product(registry, [m.hopping(e) for e in t.rectangle_loop(x, y, 1, 1)])
        for x, y in t.vertices()
    )
    return replace(m, stabilizers=stabilizers)
