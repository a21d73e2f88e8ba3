"""Geometry, orientation conventions, and colorings of the periodic square
lattice that every mapping lives on.

Coordinates and conventions (fixed once, used by every module):

- Vertices ``(x, y)`` with x mod Lx, y mod Ly.
- Horizontal edge ``('h', x, y)``: tail vertex (x, y), head vertex (x+1, y)
  (arrow points east).
- Vertical edge ``('v', x, y)``: tail vertex (x, y), head vertex (x, y+1)
  (arrow points north).
- Face ``(x, y)``: the unit square [x, x+1] × [y, y+1]; its boundary in
  cyclic order is bottom h(x,y), right v(x+1,y), top h(x,y+1), left v(x,y).
- Left/right *faces* of an edge follow the arrow: walking east along
  h(x,y) the left face is f(x,y) (north) and the right face f(x,y−1);
  walking north along v(x,y) the left face is f(x−1,y) (west) and the
  right face f(x,y).
- Left/right *vertices* of an edge: h(x,y) has L = (x,y) (west),
  R = (x+1,y); v(x,y) has L = (x,y+1) (top), R = (x,y) (bottom).

Counting: |vertices| = |faces| = Lx·Ly and |edges| = 2·Lx·Ly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator, Mapping

from .pauli import SiteRegistry

__all__ = ["Torus", "Coloring", "build_torus", "build_coloring", "color_of"]

CHECKERBOARD = "checkerboard"
FOUR_CLASS = "four_class"


class SizeError(ValueError):
    """Raised for torus sizes that do not fit a construction."""


@dataclass(frozen=True)
class Torus:
    """Lx × Ly periodic square lattice."""

    Lx: int
    Ly: int

    def __post_init__(self):
        if self.Lx < 2 or self.Ly < 2:
            raise SizeError(f"torus must be at least 2x2, got {self.Lx}x{self.Ly}")

    # -- cells ---------------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.Lx * self.Ly

    @property
    def n_faces(self) -> int:
        return self.Lx * self.Ly

    @property
    def n_edges(self) -> int:
        return 2 * self.Lx * self.Ly

    def wrap(self, x: int, y: int) -> tuple:
        return (x % self.Lx, y % self.Ly)

    def vertices(self) -> Iterator[tuple]:
        for y in range(self.Ly):
            for x in range(self.Lx):
                yield (x, y)

    faces = vertices  # same coordinate range, row-major

    def edges(self) -> Iterator[tuple]:
        """All edges: the full h block (row-major) then the full v block."""
        for y in range(self.Ly):
            for x in range(self.Lx):
                yield ("h", x, y)
        for y in range(self.Ly):
            for x in range(self.Lx):
                yield ("v", x, y)

    def h_edge(self, x: int, y: int) -> tuple:
        return ("h", x % self.Lx, y % self.Ly)

    def v_edge(self, x: int, y: int) -> tuple:
        return ("v", x % self.Lx, y % self.Ly)

    def edge(self, kind: str, x: int, y: int) -> tuple:
        if kind not in ("h", "v"):
            raise ValueError(f"unknown edge kind {kind!r}")
        return (kind, x % self.Lx, y % self.Ly)

    def is_edge(self, e) -> bool:
        return (
            isinstance(e, tuple)
            and len(e) == 3
            and e[0] in ("h", "v")
            and 0 <= e[1] < self.Lx
            and 0 <= e[2] < self.Ly
        )

    def _check_edge(self, e) -> None:
        if not self.is_edge(e):
            raise ValueError(f"invalid edge id {e!r}")

    # -- indices -------------------------------------------------------------

    def vertex_index(self, v: tuple) -> int:
        x, y = self.wrap(*v)
        return y * self.Lx + x

    face_index = vertex_index  # row-major as well

    # -- incidence -----------------------------------------------------------

    def edge_endpoints_vertices(self, e) -> tuple:
        """(tail, head) vertices in arrow direction, wrapped."""
        self._check_edge(e)
        kind, x, y = e
        if kind == "h":
            return ((x, y), self.wrap(x + 1, y))
        return ((x, y), self.wrap(x, y + 1))

    def edge_vertices_lr(self, e) -> tuple:
        """(L, R) vertices: west/east for horizontal, top/bottom for vertical."""
        self._check_edge(e)
        kind, x, y = e
        if kind == "h":
            return ((x, y), self.wrap(x + 1, y))
        return (self.wrap(x, y + 1), (x, y))

    def edge_faces_lr(self, e) -> tuple:
        """(L, R) faces relative to the edge arrow (east / north)."""
        self._check_edge(e)
        kind, x, y = e
        if kind == "h":
            return ((x, y), self.wrap(x, y - 1))
        return (self.wrap(x - 1, y), (x, y))

    def face_boundary(self, f: tuple) -> tuple:
        """The four boundary edges in cyclic order (bottom, right, top, left)."""
        x, y = self.wrap(*f)
        return (
            self.h_edge(x, y),
            self.v_edge(x + 1, y),
            self.h_edge(x, y + 1),
            self.v_edge(x, y),
        )

    def vertex_star(self, v: tuple) -> tuple:
        """The four incident edges in compass order (S, E, N, W)."""
        x, y = self.wrap(*v)
        return (
            self.v_edge(x, y - 1),
            self.h_edge(x, y),
            self.v_edge(x, y),
            self.h_edge(x - 1, y),
        )

    def face_neighbors(self, f: tuple) -> tuple:
        """((edge, adjacent face) for the four neighbours of *f*)."""
        x, y = self.wrap(*f)
        return (
            (self.h_edge(x, y), self.wrap(x, y - 1)),
            (self.v_edge(x + 1, y), self.wrap(x + 1, y)),
            (self.h_edge(x, y + 1), self.wrap(x, y + 1)),
            (self.v_edge(x, y), self.wrap(x - 1, y)),
        )

    def vertex_neighbors(self, v: tuple) -> tuple:
        """((edge, adjacent vertex) for the four neighbours of *v*)."""
        x, y = self.wrap(*v)
        return (
            (self.v_edge(x, y - 1), self.wrap(x, y - 1)),
            (self.h_edge(x, y), self.wrap(x + 1, y)),
            (self.v_edge(x, y), self.wrap(x, y + 1)),
            (self.h_edge(x - 1, y), self.wrap(x - 1, y)),
        )

    # -- registries ----------------------------------------------------------

    def edge_registry(self) -> SiteRegistry:
        """One qubit site per edge, h block then v block, row-major."""
        return SiteRegistry(self.edges())

    def v_edge_registry(self) -> SiteRegistry:
        """One qubit site per vertical edge only (ratio-1 mappings)."""
        return SiteRegistry(
            ("v", x, y) for y in range(self.Ly) for x in range(self.Lx)
        )

    # -- loops ---------------------------------------------------------------

    def rectangle_loop(self, x: int, y: int, w: int, h: int) -> list:
        """Boundary edges of the w × h rectangle anchored at face (x, y),
        listed in traversal order (counter-clockwise from the SW corner).
        The rectangle must not wrap (w < Lx, h < Ly)."""
        if not (1 <= w < self.Lx and 1 <= h < self.Ly):
            raise SizeError("rectangle must be strictly smaller than the torus")
        loop = []
        loop += [self.h_edge(x + i, y) for i in range(w)]
        loop += [self.v_edge(x + w, y + j) for j in range(h)]
        loop += [self.h_edge(x + w - 1 - i, y + h) for i in range(w)]
        loop += [self.v_edge(x, y + h - 1 - j) for j in range(h)]
        return loop

    def contractible_loops(self, max_perimeter: int = 8) -> Iterator[list]:
        """Rectangle loops (including all faces) up to the given perimeter."""
        for h in range(1, self.Ly):
            for w in range(1, self.Lx):
                if 2 * (w + h) > max_perimeter:
                    continue
                for y in range(self.Ly):
                    for x in range(self.Lx):
                        yield self.rectangle_loop(x, y, w, h)

    def __repr__(self) -> str:
        return f"Torus({self.Lx}x{self.Ly})"


@dataclass(frozen=True)
class Coloring:
    """A face coloring: scheme name plus the face → label assignment."""

    scheme: str
    assignment: Mapping

    def __getitem__(self, face: tuple):
        return self.assignment[face]


def build_torus(Lx: int, Ly: int) -> Torus:
    """Construct a torus (raises SizeError below 2×2)."""
    return Torus(Lx, Ly)


def build_coloring(t: Torus, scheme: str) -> Coloring:
    """Build a face coloring.

    checkerboard: labels 'even'/'odd' by (x+y) mod 2; needs Lx, Ly even.
    four_class: period-2×2 classes 1..4 with classes 1, 3 on odd faces;
    needs Lx, Ly ≡ 0 mod 4 (the translation cell of the derived circuits).
    """
    if scheme == CHECKERBOARD:
        if t.Lx % 2 or t.Ly % 2:
            raise SizeError("checkerboard coloring needs even Lx and Ly")
        assignment = {
            (x, y): ("odd" if (x + y) % 2 else "even") for (x, y) in t.faces()
        }
    elif scheme == FOUR_CLASS:
        if t.Lx % 4 or t.Ly % 4:
            raise SizeError("four-class coloring is built on mod-4 tori")
        classes = {(1, 0): 1, (0, 0): 2, (0, 1): 3, (1, 1): 4}
        assignment = {(x, y): classes[(x % 2, y % 2)] for (x, y) in t.faces()}
    else:
        raise ValueError(f"unknown coloring scheme {scheme!r}")
    return Coloring(scheme, assignment)


def color_of(t: Torus, coloring: Coloring, f: tuple):
    """Label of face *f* under *coloring*."""
    return coloring.assignment[t.wrap(*f)]
