"""The six-gate Clifford set, layered circuits, and exact conjugation.

Gate kinds: H, S, R (single site) and CNOT, CY, CZ (control first).
Conjugation tables for the X and Z generators of each site:

    H:    X → Z,          Z → X
    S:    X → Y,          Z → Z
    R:    X → X,          Z → Y
    CNOT: X⊗I → X⊗X,  Z⊗I → Z⊗I,  I⊗X → I⊗X,  I⊗Z → Z⊗Z
    CY:   X⊗I → X⊗Y,  Z⊗I → Z⊗I,  I⊗X → Z⊗X,  I⊗Z → Z⊗Z
    CZ:   X⊗I → X⊗Z,  Z⊗I → Z⊗I,  I⊗X → Z⊗X,  I⊗Z → I⊗Z

Y images follow from Y = i·X·Z, with phases tracked exactly.

A circuit is an ordered list of layers; each layer is a set of gates with
pairwise disjoint supports (depth 1). Circuits are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .pauli import PauliOperator, SiteRegistry, pauli_mul

__all__ = [
    "Gate",
    "CliffordCircuit",
    "GateTemplate",
    "PatternBlock",
    "CircuitPattern",
    "gate_conjugate",
    "circuit_conjugate",
    "circuit_inverse",
    "tile_pattern",
    "parse_circuit",
    "load_circuit",
]

GATE_KINDS = ("H", "S", "R", "CNOT", "CY", "CZ")
_TWO_SITE = ("CNOT", "CY", "CZ")
_SELF_INVERSE = ("H", "CNOT", "CY", "CZ")

# images of the X/Z generator at gate position p, as (phase_exp, ((pos, letter), ...))
_IMAGES = {
    "H": {("X", 0): (0, ((0, "Z"),)), ("Z", 0): (0, ((0, "X"),))},
    "S": {("X", 0): (0, ((0, "Y"),)), ("Z", 0): (0, ((0, "Z"),))},
    "R": {("X", 0): (0, ((0, "X"),)), ("Z", 0): (0, ((0, "Y"),))},
    "CNOT": {
        ("X", 0): (0, ((0, "X"), (1, "X"))),
        ("Z", 0): (0, ((0, "Z"),)),
        ("X", 1): (0, ((1, "X"),)),
        ("Z", 1): (0, ((0, "Z"), (1, "Z"))),
    },
    "CY": {
        ("X", 0): (0, ((0, "X"), (1, "Y"))),
        ("Z", 0): (0, ((0, "Z"),)),
        ("X", 1): (0, ((0, "Z"), (1, "X"))),
        ("Z", 1): (0, ((0, "Z"), (1, "Z"))),
    },
    "CZ": {
        ("X", 0): (0, ((0, "X"), (1, "Z"))),
        ("Z", 0): (0, ((0, "Z"),)),
        ("X", 1): (0, ((0, "Z"), (1, "X"))),
        ("Z", 1): (0, ((1, "Z"),)),
    },
}


@dataclass(frozen=True)
class Gate:
    """A named Clifford gate on 1 or 2 registry site indices (control first)."""

    kind: str
    sites: tuple

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if not isinstance(self.sites, tuple):
            object.__setattr__(self, "sites", tuple(self.sites))
        arity = 2 if self.kind in _TWO_SITE else 1
        if len(self.sites) != arity:
            raise ValueError(f"{self.kind} takes {arity} site(s), got {self.sites}")
        if arity == 2 and self.sites[0] == self.sites[1]:
            raise ValueError(f"{self.kind} sites must be distinct, got {self.sites}")


@dataclass(frozen=True)
class CliffordCircuit:
    """Ordered layers of disjoint-support gates."""

    layers: tuple

    def __post_init__(self):
        layers = tuple(tuple(layer) for layer in self.layers)
        for li, layer in enumerate(layers):
            seen: set = set()
            for g in layer:
                for s in g.sites:
                    if s in seen:
                        raise ValueError(
                            f"layer {li} has overlapping gate supports at site {s}"
                        )
                    seen.add(s)
        object.__setattr__(self, "layers", layers)

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def n_gates(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def support(self) -> frozenset:
        return frozenset(s for layer in self.layers for g in layer for s in g.sites)

    @classmethod
    def empty(cls) -> "CliffordCircuit":
        return cls(())

    @classmethod
    def from_gates(cls, gates: Iterable[Gate]) -> "CliffordCircuit":
        """One gate per layer (sequential)."""
        return cls(tuple((g,) for g in gates))

    def then(self, other: "CliffordCircuit") -> "CliffordCircuit":
        return CliffordCircuit(self.layers + other.layers)


def gate_conjugate(p: PauliOperator, g: Gate) -> PauliOperator:
    """g · p · g† with exact phase."""
    reg = p.registry
    n = len(reg)
    for s in g.sites:
        if not (0 <= s < n):
            raise ValueError(f"gate site {s} outside registry of size {n}")
    gate_sites = set(g.sites)
    if not (p.support & gate_sites):
        return p
    # split off the gate sites in the X(x)·Z(z) factorization
    k_xz = (p.phase_exp + len(p.x_bits & p.z_bits)) % 4
    x_rest = p.x_bits - gate_sites
    z_rest = p.z_bits - gate_sites
    table = _IMAGES[g.kind]
    acc = None
    for block, bits in (("X", p.x_bits), ("Z", p.z_bits)):
        for pos, site in enumerate(g.sites):
            if site not in bits:
                continue
            phase, letters = table[(block, pos)]
            img = PauliOperator.from_letters(
                reg, {reg.label(g.sites[q]): L for q, L in letters}, phase
            )
            acc = img if acc is None else pauli_mul(acc, img)
    rest = PauliOperator(
        reg,
        (k_xz - len(x_rest & z_rest)) % 4,
        frozenset(x_rest),
        frozenset(z_rest),
    )
    return rest if acc is None else pauli_mul(acc, rest)


def circuit_conjugate(p: PauliOperator, c: CliffordCircuit) -> PauliOperator:
    """Sequential conjugation, first layer first."""
    for layer in c.layers:
        for g in layer:
            p = gate_conjugate(p, g)
    return p


def circuit_inverse(c: CliffordCircuit) -> CliffordCircuit:
    """Reverse the layers; layers containing S or R are repeated three times
    (g³ = g† for every kind in the set), keeping the gate set unchanged."""
    out = []
    for layer in reversed(c.layers):
        reps = 1 if all(g.kind in _SELF_INVERSE for g in layer) else 3
        out.extend([layer] * reps)
    return CliffordCircuit(tuple(out))


# -- translation-invariant patterns and the circuit data format --------------


@dataclass(frozen=True)
class GateTemplate:
    """A gate with cell-relative site offsets (dx, dy, slot)."""

    kind: str
    offsets: tuple  # ((dx, dy, slot), ...), slot in {"h", "v"}


@dataclass(frozen=True)
class PatternBlock:
    """Either a plain tiled layer or a column sweep of layers.

    kind "layer": steps is a 1-tuple of gate-template tuples.
    kind "sweep": steps instantiated once per cell column, columns ordered
    left-to-right (direction "ltr") or right-to-left ("rtl").
    """

    kind: str  # "layer" | "sweep"
    direction: str  # "" | "ltr" | "rtl"
    steps: tuple  # tuple of tuples of GateTemplate


@dataclass(frozen=True)
class CircuitPattern:
    cell: tuple  # (W, H)
    blocks: tuple


def parse_circuit(text: str) -> CircuitPattern:
    """Parse the plain-text circuit format (see docs/formats.md)."""
    cell = None
    blocks: list = []
    cur_steps: list = []  # list of list[GateTemplate] for the open block
    cur_kind = None
    cur_dir = ""
    version_seen = False

    def close_block():
        nonlocal cur_steps, cur_kind, cur_dir
        if cur_kind is None:
            return
        steps = tuple(tuple(s) for s in cur_steps if s)
        if not steps:
            raise ValueError(f"empty {cur_kind} block in circuit file")
        blocks.append(PatternBlock(cur_kind, cur_dir, steps))
        cur_steps, cur_kind, cur_dir = [], None, ""

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "version":
            if version_seen:
                raise ValueError("duplicate version line")
            if tok[1:] != ["1"]:
                raise ValueError(f"unsupported circuit format version {tok[1:]}")
            version_seen = True
        elif tok[0] == "cell":
            if cell is not None:
                raise ValueError("duplicate cell line")
            cell = (int(tok[1]), int(tok[2]))
        elif tok[0] == "layer":
            close_block()
            cur_kind, cur_dir = "layer", ""
            cur_steps = [[]]
        elif tok[0] == "sweep":
            close_block()
            if len(tok) != 3 or tok[1] != "cols" or tok[2] not in ("ltr", "rtl"):
                raise ValueError(f"malformed sweep line {line!r}")
            cur_kind, cur_dir = "sweep", tok[2]
            cur_steps = [[]]
        elif tok[0] == "step":
            if cur_kind != "sweep":
                raise ValueError("step outside a sweep block")
            cur_steps.append([])
        elif tok[0] == "gate":
            if cur_kind is None:
                raise ValueError("gate line outside a layer/sweep block")
            kind = tok[1]
            offsets = []
            for spec in tok[2:]:
                dx_s, dy_s, slot = spec.split(",")
                if slot not in ("h", "v"):
                    raise ValueError(f"unknown slot {slot!r} in {line!r}")
                offsets.append((int(dx_s), int(dy_s), slot))
            cur_steps[-1].append(GateTemplate(kind, tuple(offsets)))
        else:
            raise ValueError(f"unrecognised circuit line {line!r}")
    close_block()
    if not version_seen:
        raise ValueError("missing version line")
    if cell is None:
        raise ValueError("missing cell line")
    return CircuitPattern(cell, tuple(blocks))


def load_circuit(name: str) -> CircuitPattern:
    """Load a named circuit data file shipped with the package."""
    from importlib import resources

    path = resources.files("f2q").joinpath("data", "circuits", f"{name}.circuit")
    return parse_circuit(path.read_text())


def tile_pattern(t, pattern: CircuitPattern, registry: SiteRegistry | None = None) -> CliffordCircuit:
    """Instantiate a translation-invariant pattern over a torus.

    The pattern cell (W, H) must divide (Lx, Ly); every template is stamped
    at every cell origin (multiples of W and H), with coordinates wrapped.
    Support collisions within a layer raise at circuit construction.
    """
    if registry is None:
        registry = t.edge_registry()
    W, H = pattern.cell
    if t.Lx % W or t.Ly % H:
        raise ValueError(
            f"pattern cell {W}x{H} does not divide torus {t.Lx}x{t.Ly}"
        )
    origins_y = range(0, t.Ly, H)

    def instantiate(templates, origins_x) -> tuple:
        gates = []
        for oy in origins_y:
            for ox in origins_x:
                for tpl in templates:
                    sites = tuple(
                        registry.index((slot, (ox + dx) % t.Lx, (oy + dy) % t.Ly))
                        for dx, dy, slot in tpl.offsets
                    )
                    gates.append(Gate(tpl.kind, sites))
        return tuple(gates)

    layers = []
    for block in pattern.blocks:
        if block.kind == "layer":
            layers.append(instantiate(block.steps[0], range(0, t.Lx, W)))
        else:  # sweep
            cols = list(range(0, t.Lx, W))
            if block.direction == "rtl":
                cols.reverse()
            for cx in cols:
                for step in block.steps:
                    layers.append(instantiate(step, (cx,)))
    return CliffordCircuit(tuple(layers))
