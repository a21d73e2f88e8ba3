"""Exact algebra of Majorana monomials — the fermionic side of every mapping.

A monomial is ``i^k · γ_{m1} γ_{m2} ···`` over integer mode indices; the
canonical form has strictly increasing modes.  Mode ``2f`` is the unprimed
Majorana of fermion site ``f`` and mode ``2f+1`` the primed one, so the
local parity is −i·γ_{2f}·γ_{2f+1}.

All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "MajoranaMonomial",
    "OpenPathError",
    "majorana_canonicalize",
    "majorana_mul",
    "majorana_commutation_scalar",
    "loop_word",
]


class OpenPathError(ValueError):
    """Raised when a loop word is requested for a non-closed edge path."""


@dataclass(frozen=True)
class MajoranaMonomial:
    """i^phase_exp · product of Majorana modes in the stored order."""

    phase_exp: int
    modes: tuple

    def __post_init__(self):
        if self.phase_exp not in (0, 1, 2, 3):
            object.__setattr__(self, "phase_exp", self.phase_exp % 4)
        if not isinstance(self.modes, tuple):
            object.__setattr__(self, "modes", tuple(self.modes))

    @classmethod
    def identity(cls, phase_exp: int = 0) -> "MajoranaMonomial":
        return cls(phase_exp % 4, ())

    @classmethod
    def gamma(cls, mode: int, phase_exp: int = 0) -> "MajoranaMonomial":
        return cls(phase_exp % 4, (mode,))

    @classmethod
    def bilinear(cls, mode_a: int, mode_b: int) -> "MajoranaMonomial":
        """The Hermitian bilinear i·γ_a·γ_b (a ≠ b), in canonical form."""
        if mode_a == mode_b:
            raise ValueError("bilinear needs two distinct modes")
        return majorana_canonicalize(cls(1, (mode_a, mode_b)))

    @classmethod
    def parity(cls, fermion_site: int) -> "MajoranaMonomial":
        """Local fermion parity −i·γ_{2f}·γ_{2f+1}."""
        return cls(3, (2 * fermion_site, 2 * fermion_site + 1))

    def is_canonical(self) -> bool:
        return all(a < b for a, b in zip(self.modes, self.modes[1:]))

    def is_scalar(self) -> bool:
        return not self.modes

    def is_identity(self) -> bool:
        return not self.modes and self.phase_exp == 0

    def __mul__(self, other: "MajoranaMonomial") -> "MajoranaMonomial":
        return majorana_mul(self, other)

    def times_phase(self, k: int) -> "MajoranaMonomial":
        return MajoranaMonomial((self.phase_exp + k) % 4, self.modes)

    def adjoint(self) -> "MajoranaMonomial":
        """Hermitian conjugate: conjugate the scalar, reverse the word
        (each mode operator is Hermitian on its own)."""
        k = (-self.phase_exp) % 4
        return majorana_canonicalize(MajoranaMonomial(k, tuple(reversed(self.modes))))

    def to_text(self) -> str:
        """Render as ``i^k g<mode> g<mode> ...``."""
        return " ".join([f"i^{self.phase_exp}"] + [f"g{m}" for m in self.modes])

    @classmethod
    def from_text(cls, text: str) -> "MajoranaMonomial":
        parts = text.split()
        if not parts or not parts[0].startswith("i^"):
            raise ValueError(f"malformed monomial text {text!r}")
        return cls(int(parts[0][2:]) % 4, tuple(int(t[1:]) for t in parts[1:]))

    def __str__(self) -> str:
        return self.to_text()


def majorana_canonicalize(m: MajoranaMonomial) -> MajoranaMonomial:
    """Normal order: strictly increasing modes, exact transposition signs,
    adjacent equal modes annihilated (γ² = 1). Idempotent."""
    modes = list(m.modes)
    k = m.phase_exp
    # insertion sort; each adjacent transposition of distinct modes flips sign
    for i in range(1, len(modes)):
        j = i
        while j > 0 and modes[j] < modes[j - 1]:
            modes[j], modes[j - 1] = modes[j - 1], modes[j]
            k += 2
            j -= 1
    # equal modes are now adjacent; cancel in pairs left to right
    out: list = []
    for mode in modes:
        if out and out[-1] == mode:
            out.pop()
        else:
            out.append(mode)
    return MajoranaMonomial(k % 4, tuple(out))


def majorana_mul(a: MajoranaMonomial, b: MajoranaMonomial) -> MajoranaMonomial:
    """Canonical product a·b with exact phase."""
    return majorana_canonicalize(
        MajoranaMonomial((a.phase_exp + b.phase_exp) % 4, a.modes + b.modes)
    )


def majorana_commutation_scalar(a: MajoranaMonomial, b: MajoranaMonomial) -> int:
    """+1 if ab = ba, −1 otherwise: (−1)^(|a||b| − |shared modes|)."""
    shared = len(set(a.modes) & set(b.modes))
    return -1 if (len(a.modes) * len(b.modes) - shared) % 2 else 1


def product(monomials: Iterable[MajoranaMonomial]) -> MajoranaMonomial:
    acc = MajoranaMonomial.identity()
    for m in monomials:
        acc = majorana_mul(acc, m)
    return acc


def loop_word(lattice, loop: Sequence) -> MajoranaMonomial:
    """Product of the traversal-ordered bilinears i·γ_u·γ_w along a closed
    edge path, using one unprimed mode per vertex.

    The edges are chained into a vertex cycle starting from the first edge;
    the product telescopes to i^|loop| · identity, which is returned in
    canonical form.  Raises OpenPathError when the edges do not close."""
    loop = list(loop)
    if not loop:
        return MajoranaMonomial.identity()
    ends = [lattice.edge_endpoints_vertices(e) for e in loop]
    # orient the first edge as given, then chain
    cycle = [ends[0][0], ends[0][1]]
    for a, b in ends[1:]:
        cur = cycle[-1]
        if a == cur:
            cycle.append(b)
        elif b == cur:
            cycle.append(a)
        else:
            raise OpenPathError(f"edge ({a},{b}) does not continue the path at {cur}")
    if cycle[-1] != cycle[0]:
        raise OpenPathError("edge path does not close")
    word = MajoranaMonomial.identity()
    for u, w in zip(cycle[:-1], cycle[1:]):
        mu = 2 * lattice.vertex_index(u)
        mw = 2 * lattice.vertex_index(w)
        word = majorana_mul(word, MajoranaMonomial(1, (mu, mw)))
    return word
