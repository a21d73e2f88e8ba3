"""Exact Pauli-string algebra with global phase tracking.

An operator is ``i^k`` times a tensor product of single-site letters from
{X, Y, Z}.  It is stored as two index sets over a site registry: the sites
carrying an X factor and the sites carrying a Z factor.  A site present in
both sets carries Y, normalised by the convention Y = i·X·Z; ``phase_exp``
is the exponent k of the global ``i^k`` prefactor *in front of the letter
product*, so the textual rendering ``i^k <site>:<P> ...`` uses it verbatim.

All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping

__all__ = [
    "RegistryMismatchError",
    "SiteRegistry",
    "PauliOperator",
    "pauli_mul",
    "pauli_commutation_scalar",
    "pauli_weight",
]

_LETTER_BITS = {"X": (True, False), "Y": (True, True), "Z": (False, True)}


class RegistryMismatchError(ValueError):
    """Raised when operators over different site registries are combined."""


class SiteRegistry:
    """Ordered, immutable index space of qubit sites.

    Site labels are arbitrary hashable values (the lattice uses tuples like
    ``('h', x, y)``); the position of a label in the registry is the site
    index used by operators, text forms, and GF(2) column layouts.
    """

    __slots__ = ("_labels", "_index", "_hash")

    def __init__(self, labels: Iterable[Hashable]):
        labels = tuple(labels)
        index: dict[Hashable, int] = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise ValueError(f"duplicate site label {lab!r}")
            index[lab] = i
        self._labels = labels
        self._index = index
        self._hash = hash(labels)

    @property
    def labels(self) -> tuple:
        return self._labels

    def index(self, label: Hashable) -> int:
        """Return the site index of *label* (KeyError if unregistered)."""
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"site label {label!r} not in registry") from None

    def label(self, index: int) -> Hashable:
        return self._labels[index]

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._labels)

    def __contains__(self, label: Hashable) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if isinstance(other, SiteRegistry):
            return self._labels == other._labels
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SiteRegistry({len(self)} sites)"

    def without(self, drop: Iterable[Hashable]) -> "SiteRegistry":
        """Registry with the given labels removed, order preserved."""
        drop = set(drop)
        return SiteRegistry(lab for lab in self._labels if lab not in drop)


def _same_registry(p: "PauliOperator", q: "PauliOperator") -> None:
    if p.registry is not q.registry and p.registry != q.registry:
        raise RegistryMismatchError("operators live on different site registries")


@dataclass(frozen=True)
class PauliOperator:
    """i^phase_exp · ∏ single-site letters, letters implied by the bit sets.

    A site index in ``x_bits`` only carries X, in ``z_bits`` only carries Z,
    and in both carries Y.
    """

    registry: SiteRegistry
    phase_exp: int
    x_bits: frozenset
    z_bits: frozenset

    def __post_init__(self):
        if self.phase_exp not in (0, 1, 2, 3):
            object.__setattr__(self, "phase_exp", self.phase_exp % 4)
        n = len(self.registry)
        for i in self.x_bits | self.z_bits:
            if not (0 <= i < n):
                raise ValueError(f"site index {i} outside registry of size {n}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, registry: SiteRegistry, phase_exp: int = 0) -> "PauliOperator":
        return cls(registry, phase_exp % 4, frozenset(), frozenset())

    @classmethod
    def from_letters(
        cls,
        registry: SiteRegistry,
        letters: Mapping[Hashable, str],
        phase_exp: int = 0,
    ) -> "PauliOperator":
        """Build from a {site label: letter} mapping, letter in {X, Y, Z}."""
        xs, zs = set(), set()
        for label, letter in letters.items():
            i = registry.index(label)
            try:
                bx, bz = _LETTER_BITS[letter]
            except KeyError:
                raise ValueError(f"unknown Pauli letter {letter!r}") from None
            if bx:
                xs.add(i)
            if bz:
                zs.add(i)
        return cls(registry, phase_exp % 4, frozenset(xs), frozenset(zs))

    @classmethod
    def single(
        cls, registry: SiteRegistry, label: Hashable, letter: str, phase_exp: int = 0
    ) -> "PauliOperator":
        return cls.from_letters(registry, {label: letter}, phase_exp)

    # -- inspection --------------------------------------------------------

    @property
    def support(self) -> frozenset:
        return self.x_bits | self.z_bits

    def weight(self) -> int:
        return len(self.x_bits | self.z_bits)

    def is_identity(self) -> bool:
        return not self.x_bits and not self.z_bits and self.phase_exp == 0

    def is_scalar(self) -> bool:
        return not self.x_bits and not self.z_bits

    def is_hermitian(self) -> bool:
        return self.phase_exp in (0, 2)

    def letter_at(self, label: Hashable) -> str:
        i = self.registry.index(label)
        bx, bz = i in self.x_bits, i in self.z_bits
        if bx and bz:
            return "Y"
        if bx:
            return "X"
        if bz:
            return "Z"
        return "I"

    def letters(self) -> dict:
        """{site label: letter} over the support, for display/manifests."""
        out = {}
        for i in sorted(self.support):
            bx, bz = i in self.x_bits, i in self.z_bits
            out[self.registry.label(i)] = "Y" if (bx and bz) else ("X" if bx else "Z")
        return out

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return pauli_mul(self, other)

    def times_phase(self, k: int) -> "PauliOperator":
        """Multiply by the scalar i^k."""
        return PauliOperator(
            self.registry, (self.phase_exp + k) % 4, self.x_bits, self.z_bits
        )

    def adjoint(self) -> "PauliOperator":
        """Hermitian conjugate: the letter product is Hermitian, so only
        the global phase conjugates."""
        return PauliOperator(
            self.registry, (-self.phase_exp) % 4, self.x_bits, self.z_bits
        )

    def commutes_with(self, other: "PauliOperator") -> bool:
        return pauli_commutation_scalar(self, other) == 1

    def restricted_support(self, indices: Iterable[int]) -> frozenset:
        idx = frozenset(indices)
        return (self.x_bits | self.z_bits) & idx

    def map_registry(self, new_registry: SiteRegistry) -> "PauliOperator":
        """Re-express over *new_registry* (labels must cover the support)."""
        xs = frozenset(new_registry.index(self.registry.label(i)) for i in self.x_bits)
        zs = frozenset(new_registry.index(self.registry.label(i)) for i in self.z_bits)
        return PauliOperator(new_registry, self.phase_exp, xs, zs)

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        """Render as ``i^k <site>:<P> ...`` with site indices ascending."""
        parts = [f"i^{self.phase_exp}"]
        for i in sorted(self.support):
            bx, bz = i in self.x_bits, i in self.z_bits
            letter = "Y" if (bx and bz) else ("X" if bx else "Z")
            parts.append(f"{i}:{letter}")
        return " ".join(parts)

    @classmethod
    def from_text(cls, registry: SiteRegistry, text: str) -> "PauliOperator":
        """Parse the ``i^k <site>:<P> ...`` form."""
        parts = text.split()
        if not parts or not parts[0].startswith("i^"):
            raise ValueError(f"malformed operator text {text!r}")
        phase = int(parts[0][2:]) % 4
        xs, zs = set(), set()
        for tok in parts[1:]:
            site_s, _, letter = tok.partition(":")
            i = int(site_s)
            if not (0 <= i < len(registry)):
                raise ValueError(f"site index {i} outside registry")
            bx, bz = _LETTER_BITS[letter]
            if bx:
                xs.add(i)
            if bz:
                zs.add(i)
        return cls(registry, phase, frozenset(xs), frozenset(zs))

    def __str__(self) -> str:
        return self.to_text()


def pauli_mul(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact group product p·q with accumulated i^k phase.

    In the X/Z factorization i^m·X(x)Z(z), commuting Z(z_p) past X(x_q)
    contributes (−1)^|z_p∩x_q|; conversion between the letter normal form
    and the factorization contributes i^|x∩z| per operator.
    """
    _same_registry(p, q)
    xs = p.x_bits ^ q.x_bits
    zs = p.z_bits ^ q.z_bits
    k = (
        p.phase_exp
        + len(p.x_bits & p.z_bits)
        + q.phase_exp
        + len(q.x_bits & q.z_bits)
        + 2 * len(p.z_bits & q.x_bits)
        - len(xs & zs)
    ) % 4
    return PauliOperator(p.registry, k, xs, zs)


def pauli_commutation_scalar(p: PauliOperator, q: PauliOperator) -> int:
    """+1 if pq = qp, −1 otherwise: (−1)^(|x_p∩z_q| + |z_p∩x_q|)."""
    _same_registry(p, q)
    return -1 if (len(p.x_bits & q.z_bits) + len(p.z_bits & q.x_bits)) % 2 else 1


def pauli_weight(p: PauliOperator) -> int:
    """Number of sites acted on non-trivially."""
    return p.weight()


def product(registry: SiteRegistry, ops: Iterable[PauliOperator]) -> PauliOperator:
    """Ordered product of *ops* (identity for an empty iterable)."""
    acc = PauliOperator.identity(registry)
    for op in ops:
        acc = pauli_mul(acc, op)
    return acc
