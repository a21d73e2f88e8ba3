"""Common structure of fermion-to-qubit mappings on the torus.

A mapping assigns a Pauli image to every edge generator (hopping) and every
fermion-site generator (parity), together with a list of stabilizer
generators.  Two generator conventions occur:

- ``AB``: hopping A_e = i·γ_L(e)·γ_R(e), parity B_v = −i·γ_v·γ'_v
  (fermions on vertices);
- ``SP``: hopping S_e = i·γ_L(e)·γ'_R(e), parity P_f = −i·γ_f·γ'_f
  (fermions on faces).

Fermion sites are labelled by their ``(x, y)`` coordinate in either case and
indexed row-major; fermion site ``i`` owns Majorana modes ``2i`` (γ) and
``2i + 1`` (γ').  ``encode_bilinear`` extends the generator images to an
arbitrary Majorana bilinear along a path of edges, with the exact phase
fixed by the abstract Majorana algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping as MappingABC, Sequence

from ..lattice import Torus
from ..majorana import MajoranaMonomial, majorana_mul
from ..pauli import PauliOperator, SiteRegistry

__all__ = [
    "AB",
    "SP",
    "FACES",
    "VERTICES",
    "PathError",
    "Mapping",
    "Pairing",
    "fermion_registry",
    "hopping_word",
    "parity_word",
    "fermion_path",
    "encode_bilinear",
    "repair",
    "loop_image",
    "loop_residue",
    "plaquette_edges",
    "rectangle_loop_edges",
]

AB = "AB"
SP = "SP"
FACES = "faces"
VERTICES = "vertices"


class PathError(ValueError):
    """Raised when an edge path cannot realize the requested bilinear."""


def fermion_registry(t: Torus) -> SiteRegistry:
    """Row-major registry of fermion sites, one per ``(x, y)`` coordinate."""
    return SiteRegistry(t.vertices())


@dataclass(frozen=True, eq=False)
class Mapping:
    """A fermion-to-qubit mapping: generator images plus stabilizers.

    ``hopping_images`` covers every lattice edge; ``parity_images`` covers
    every fermion site.  All images and stabilizers share ``qubit_registry``
    (a subset of the edge registry for every catalog mapping).
    """

    name: str
    lattice: Torus
    convention: str
    fermion_kind: str
    fermion_sites: SiteRegistry
    qubit_registry: SiteRegistry
    hopping_images: MappingABC
    parity_images: MappingABC
    stabilizers: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.convention not in (AB, SP):
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.fermion_kind not in (FACES, VERTICES):
            raise ValueError(f"unknown fermion kind {self.fermion_kind!r}")
        t = self.lattice
        if set(self.fermion_sites.labels) != set(t.vertices()):
            raise ValueError("fermion sites must cover every (x, y) coordinate")
        missing = [e for e in t.edges() if e not in self.hopping_images]
        if missing:
            raise ValueError(f"hopping image missing for {missing[0]!r}")
        for s in self.fermion_sites:
            if s not in self.parity_images:
                raise ValueError(f"parity image missing for {s!r}")

    # -- counting ---------------------------------------------------------

    @property
    def n_fermions(self) -> int:
        return len(self.fermion_sites)

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_registry)

    @property
    def ratio(self) -> Fraction:
        """Qubits per fermion."""
        return Fraction(self.n_qubits, self.n_fermions)

    # -- generator access ---------------------------------------------------

    def hopping(self, e) -> PauliOperator:
        return self.hopping_images[e]

    def parity(self, site) -> PauliOperator:
        return self.parity_images[site]

    # -- Majorana mode indexing --------------------------------------------

    def mode(self, site, primed: bool = False) -> int:
        """Majorana mode index of γ (or γ' if *primed*) at a fermion site."""
        return 2 * self.fermion_sites.index(site) + (1 if primed else 0)

    def mode_site(self, mode: int):
        return self.fermion_sites.label(mode // 2)

    # -- fermion adjacency ---------------------------------------------------

    def edge_fermions_lr(self, e) -> tuple:
        """Left and right fermion sites of an edge (faces or vertices)."""
        if self.fermion_kind == FACES:
            return self.lattice.edge_faces_lr(e)
        return self.lattice.edge_vertices_lr(e)

    def fermion_neighbors(self, site) -> tuple:
        """``(edge, neighbor)`` pairs at a fermion site, in E/N/W/S order.

        For vertex fermions the edge is incident to the vertex; for face
        fermions it is the primal edge crossed by the dual step.
        """
        t = self.lattice
        x, y = site
        if self.fermion_kind == VERTICES:
            return (
                (t.h_edge(x, y), t.wrap(x + 1, y)),
                (t.v_edge(x, y), t.wrap(x, y + 1)),
                (t.h_edge(x - 1, y), t.wrap(x - 1, y)),
                (t.v_edge(x, y - 1), t.wrap(x, y - 1)),
            )
        return (
            (t.v_edge(x + 1, y), t.wrap(x + 1, y)),
            (t.h_edge(x, y + 1), t.wrap(x, y + 1)),
            (t.v_edge(x, y), t.wrap(x - 1, y)),
            (t.h_edge(x, y), t.wrap(x, y - 1)),
        )


def hopping_word(m: Mapping, e) -> MajoranaMonomial:
    """Abstract Majorana monomial of the hopping generator on edge *e*."""
    left, right = m.edge_fermions_lr(e)
    if m.convention == SP:
        return MajoranaMonomial.bilinear(m.mode(left), m.mode(right, primed=True))
    return MajoranaMonomial.bilinear(m.mode(left), m.mode(right))


def parity_word(m: Mapping, site) -> MajoranaMonomial:
    """Abstract Majorana monomial −i·γ·γ' of the parity generator at *site*."""
    return MajoranaMonomial.parity(m.fermion_sites.index(site))


def fermion_path(m: Mapping, site_a, site_b) -> list:
    """Shortest edge path between two fermion sites (deterministic BFS)."""
    if site_a == site_b:
        return []
    prev: dict = {site_a: None}
    frontier = [site_a]
    while frontier:
        nxt = []
        for s in frontier:
            for e, nb in m.fermion_neighbors(s):
                if nb in prev:
                    continue
                prev[nb] = (s, e)
                if nb == site_b:
                    path = []
                    cur = site_b
                    while prev[cur] is not None:
                        cur, edge = prev[cur]
                        path.append(edge)
                    path.reverse()
                    return path
                nxt.append(nb)
        frontier = nxt
    raise PathError(f"no path between {site_a!r} and {site_b!r}")


def geodesic_paths(m: Mapping, site_a, site_b) -> list:
    """All shortest edge paths between two fermion sites."""
    dist = {site_a: 0}
    frontier = [site_a]
    while frontier and site_b not in dist:
        nxt = []
        for s in frontier:
            for _, nb in m.fermion_neighbors(s):
                if nb not in dist:
                    dist[nb] = dist[s] + 1
                    nxt.append(nb)
        frontier = nxt
    if site_b not in dist:
        raise PathError(f"no path between {site_a!r} and {site_b!r}")

    paths: list = []

    def extend(s, acc):
        if s == site_b:
            paths.append(list(acc))
            return
        for e, nb in m.fermion_neighbors(s):
            if dist.get(nb) == dist[s] + 1:
                acc.append(e)
                extend(nb, acc)
                acc.pop()

    extend(site_a, [])
    return paths


def encode_bilinear(m: Mapping, mode_a: int, mode_b: int, path: Sequence) -> PauliOperator:
    """Pauli image of the bilinear i·γ_a·γ_b realized along *path*.

    The product of hopping generators along the path is compared with the
    target bilinear in the abstract Majorana algebra; any leftover Majorana
    pairs are cancelled by parity generators at their sites, and the final
    scalar residue fixes the exact phase of the image.
    """
    if mode_a == mode_b:
        target = MajoranaMonomial.identity(1)  # i·γ·γ = i
    else:
        target = MajoranaMonomial.bilinear(mode_a, mode_b)
    word = MajoranaMonomial.identity()
    image = PauliOperator.identity(m.qubit_registry)
    for e in path:
        word = majorana_mul(word, hopping_word(m, e))
        image = image * m.hopping_images[e]

    residue = majorana_mul(target, word.adjoint())
    leftover = set(residue.modes)
    for s in sorted({mode // 2 for mode in leftover}):
        if not (2 * s in leftover and 2 * s + 1 in leftover):
            raise PathError(
                f"path does not connect the sites of modes {mode_a} and {mode_b}"
            )
        word = majorana_mul(word, MajoranaMonomial.parity(s))
        image = image * m.parity_images[m.fermion_sites.label(s)]

    residue = majorana_mul(target, word.adjoint())
    if not residue.is_scalar:
        raise PathError("path leaves an uncancelled Majorana word")
    return image.times_phase(residue.phase_exp)


def plaquette_edges(m: Mapping, position) -> list:
    """Edges of the elementary fermion loop at *position*, in cyclic order.

    For vertex fermions this is the lattice face with south-west corner
    *position*; for face fermions it is the dual plaquette around the
    vertex *position* (its crossing edges form the vertex star).
    """
    t = m.lattice
    x, y = position
    if m.fermion_kind == VERTICES:
        return t.rectangle_loop(x, y, 1, 1)
    return [t.v_edge(x, y - 1), t.h_edge(x, y), t.v_edge(x, y), t.h_edge(x - 1, y)]


def rectangle_loop_edges(m: Mapping, anchor, w: int, h: int) -> list:
    """Closed w×h rectangle walk on the fermion lattice, counter-clockwise.

    For vertex fermions this is the plain lattice rectangle with south-west
    corner *anchor*.  For face fermions the walk runs on the dual lattice:
    each returned edge is the one crossed when stepping between the two
    adjacent faces, starting from face *anchor* and heading east.
    """
    t = m.lattice
    x, y = anchor
    if m.fermion_kind == VERTICES:
        return t.rectangle_loop(x, y, w, h)
    edges = []
    for a in range(x, x + w):
        edges.append(t.v_edge(a + 1, y))
    for b in range(y, y + h):
        edges.append(t.h_edge(x + w, b + 1))
    for a in range(x + w - 1, x - 1, -1):
        edges.append(t.v_edge(a + 1, y + h))
    for b in range(y + h - 1, y - 1, -1):
        edges.append(t.h_edge(x, b + 1))
    return edges


def loop_image(m: Mapping, edges: Sequence) -> tuple:
    """Walk a closed fermion loop; return (abstract walk word, image).

    The walk starts at the left fermion of the first edge.  Each step
    multiplies the Majorana bilinear i·γ_u·γ_w of the traversal (γ_L γ_R
    forward, reversed picks up i²) and its image: the hopping image alone
    in the AB convention, or i³ · U_e · W_{R(e)} in the SP convention
    (A_e = −i·S_e·P_{R(e)}).  Raises :class:`~f2q.majorana.OpenPathError`
    when the edges do not chain into a closed loop.
    """
    from ..majorana import OpenPathError  # local to avoid cycle at import

    if not edges:
        raise OpenPathError("empty loop")
    word = MajoranaMonomial.identity()
    image = PauliOperator.identity(m.qubit_registry)
    start = m.edge_fermions_lr(edges[0])[0]
    current = start
    for e in edges:
        left, right = m.edge_fermions_lr(e)
        if current == left:
            u, w = left, right
        elif current == right:
            u, w = right, left
        else:
            raise OpenPathError(f"edge {e!r} does not touch {current!r}")
        step = MajoranaMonomial.bilinear(m.mode(u), m.mode(w))
        step_image = m.hopping_images[e]
        if m.convention == SP:
            step_image = (step_image * m.parity_images[right]).times_phase(3)
        if (u, w) != (left, right):
            step_image = step_image.times_phase(2)
        word = majorana_mul(word, step)
        image = image * step_image
        current = w
    if current != start:
        raise OpenPathError("loop does not close")
    if not word.is_scalar:
        raise OpenPathError("closed walk word is not scalar")
    return word, image


def loop_residue(m: Mapping, edges: Sequence) -> PauliOperator:
    """Image of the fermionic identity behind a closed loop.

    The abstract walk equals i^k (k = loop length mod 4); the residue is
    the image divided by that scalar — an exact stabilizer-group element
    for a consistent mapping, and the stabilizer *definition* for mappings
    built from their loop constraints.
    """
    word, image = loop_image(m, edges)
    return image.times_phase(-word.phase_exp % 4)


@dataclass(frozen=True)
class Pairing:
    """A re-pairing of Majorana modes into new complex fermions.

    Each entry ``(site, mode_a, mode_b)`` declares the new fermion at
    *site* to be built from γ̃ = γ_{mode_a}, γ̃' = γ_{mode_b}; the order of
    the two modes is the orientation of the pairing arrow.
    """

    pairs: tuple

    def __post_init__(self):
        seen: set = set()
        labels: set = set()
        for site, a, b in self.pairs:
            if a == b:
                raise ValueError(f"pair at {site!r} repeats mode {a}")
            seen.update((a, b))
            labels.add(site)
        if len(labels) != len(self.pairs):
            raise ValueError("duplicate fermion site in pairing")
        if seen != set(range(2 * len(self.pairs))):
            raise ValueError("pairing is not a perfect matching on modes")

    @classmethod
    def identity(cls, m: Mapping) -> "Pairing":
        return cls(
            tuple((s, 2 * i, 2 * i + 1) for i, s in enumerate(m.fermion_sites))
        )


def repair(m: Mapping, pairing: Pairing) -> Mapping:
    """Rebuild a mapping on the new complex fermions of *pairing*.

    The new parity image at a site is the image of −i·γ_a·γ_b for its pair;
    new hopping images are re-encoded between the new left/right fermions
    of each edge.  Stabilizers and the qubit registry are unchanged.

    Distinct edge paths encode the same bilinear up to a stabilizer factor;
    the representative used is the minimum-weight encoding over all shortest
    paths (ties broken by operator text), which keeps the rebuilt generators
    as local as the geodesics allow while staying deterministic.
    """
    if len(pairing.pairs) != m.n_fermions:
        raise ValueError("pairing does not cover all fermion sites")
    pair_at = {site: (a, b) for site, a, b in pairing.pairs}
    if set(pair_at) != set(m.fermion_sites.labels):
        raise ValueError("pairing sites do not match the fermion sites")
    if pairing == Pairing.identity(m):
        return m

    def bridge(u: int, v: int) -> PauliOperator:
        options = [
            encode_bilinear(m, u, v, path)
            for path in geodesic_paths(m, m.mode_site(u), m.mode_site(v))
        ]
        return min(options, key=lambda p: (p.weight(), p.to_text()))

    parity_images = {}
    for site in m.fermion_sites:
        a, b = pair_at[site]
        # −i·γ_a·γ_b = i² · (i·γ_a·γ_b)
        parity_images[site] = bridge(a, b).times_phase(2)

    hopping_images = {}
    for e in m.lattice.edges():
        left, right = m.edge_fermions_lr(e)
        a = pair_at[left][0]
        b = pair_at[right][1] if m.convention == SP else pair_at[right][0]
        hopping_images[e] = bridge(a, b)

    return Mapping(
        name=m.name,
        lattice=m.lattice,
        convention=m.convention,
        fermion_kind=m.fermion_kind,
        fermion_sites=m.fermion_sites,
        qubit_registry=m.qubit_registry,
        hopping_images=hopping_images,
        parity_images=parity_images,
        stabilizers=m.stabilizers,
    )
