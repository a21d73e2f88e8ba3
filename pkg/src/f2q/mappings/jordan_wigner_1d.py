"""1D Jordan–Wigner transformation threaded through the torus faces.

One qubit per face, carried by the face's west vertical edge; faces are
ordered row-major (first row left to right, then the second row, and so
on).  Each Majorana mode is a single X or Y dressed by a Z-string over all
later positions:

- γ_f  = X_v(f) · ∏_{g after f} Z_v(g)
- γ'_f = Y_v(f) · ∏_{g after f} Z_v(g)

so a hopping between row-adjacent faces collapses to X·X, the parity is a
bare Z, and a hopping between column-adjacent faces keeps a Z-string of
one row's length — the classic non-local term.  The string side (later
rather than earlier positions) is what makes those three forms come out
with plain +1 signs.

This is a ratio-1 mapping: the image algebra is the full Pauli algebra,
there are no stabilizers, and every closed-loop residue is the identity.
"""

from __future__ import annotations

from ..lattice import Torus
from ..majorana import MajoranaMonomial
from ..pauli import PauliOperator, SiteRegistry, product
from .base import FACES, SP, Mapping, fermion_registry

__all__ = ["jordan_wigner_1d"]


def _mode_image(registry: SiteRegistry, t: Torus, mode: int) -> PauliOperator:
    position, primed = divmod(mode, 2)
    letters = {}
    for q in range(position + 1, t.n_faces):
        letters[t.v_edge(q % t.Lx, q // t.Lx)] = "Z"
    letters[t.v_edge(position % t.Lx, position // t.Lx)] = (
        "Y" if primed else "X"
    )
    return PauliOperator.from_letters(registry, letters)


def _word_image(
    registry: SiteRegistry, t: Torus, word: MajoranaMonomial
) -> PauliOperator:
    factors = [_mode_image(registry, t, mode) for mode in word.modes]
    return product(registry, factors).times_phase(word.phase_exp)


def jordan_wigner_1d(t: Torus) -> Mapping:
    """Build the 1D Jordan–Wigner mapping on *t* (any size ≥ 2)."""
    registry = t.v_edge_registry()
    sites = fermion_registry(t)
    hopping_images = {}
    for e in t.edges():
        left, right = t.edge_faces_lr(e)
        word = MajoranaMonomial.bilinear(
            2 * sites.index(left), 2 * sites.index(right) + 1
        )
        hopping_images[e] = _word_image(registry, t, word)
    parity_images = {
        f: _word_image(registry, t, MajoranaMonomial.parity(sites.index(f)))
        for f in t.vertices()
    }
    return Mapping(
        name="jordan_wigner_1d",
        lattice=t,
        convention=SP,
        fermion_kind=FACES,
        fermion_sites=sites,
        qubit_registry=registry,
        hopping_images=hopping_images,
        parity_images=parity_images,
    )
