"""Mode-operator monomials: canonical ordering signs, products, loop words."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f2q import oracle
from f2q.lattice import Torus
from f2q.majorana import (
    MajoranaMonomial,
    OpenPathError,
    loop_word,
    majorana_canonicalize,
    majorana_commutation_scalar,
    majorana_mul,
    product,
)


def monomials(n_modes=6, max_len=6):
    mode = st.integers(0, n_modes - 1)
    return st.builds(
        lambda k, seq: majorana_canonicalize(MajoranaMonomial(k, tuple(seq))),
        st.integers(0, 3),
        st.lists(mode, max_size=max_len),
    )


class TestCanonicalize:
    def test_sorted_word_unchanged(self):
        m = MajoranaMonomial(1, (0, 2, 5))
        assert majorana_canonicalize(m) == m

    def test_single_swap_gives_minus(self):
        """g3 g1 = −g1 g3."""
        m = majorana_canonicalize(MajoranaMonomial(0, (3, 1)))
        assert m == MajoranaMonomial(2, (1, 3))

    def test_pair_cancellation_with_reordering(self):
        """g3 g1 g2 g1 sorts with three swaps, then g1 g1 drops out."""
        m = majorana_canonicalize(MajoranaMonomial(0, (3, 1, 2, 1)))
        assert m == MajoranaMonomial(0, (2, 3))
        assert m.to_text() == "i^0 g2 g3"

    def test_idempotent(self):
        for word in [(4, 4, 4), (2, 0, 2, 0), (5, 1, 3, 1, 5)]:
            once = majorana_canonicalize(MajoranaMonomial(0, word))
            assert majorana_canonicalize(once) == once

    @settings(max_examples=200, deadline=None)
    @given(monomials())
    def test_canonical_word_strictly_increasing(self, m):
        assert all(a < b for a, b in zip(m.modes, m.modes[1:]))


class TestProductsAndSquares:
    def test_bilinear_chain_telescopes(self):
        """(i g1 g2)(i g2 g3) = −g1 g3 = i^2 g1 g3."""
        a = MajoranaMonomial.bilinear(1, 2)
        b = MajoranaMonomial.bilinear(2, 3)
        assert majorana_mul(a, b) == MajoranaMonomial(2, (1, 3))

    def test_parity_squares_to_identity(self):
        p = MajoranaMonomial.parity(2)
        assert p == MajoranaMonomial(3, (4, 5))
        assert majorana_mul(p, p) == MajoranaMonomial.identity()

    def test_gamma_squares_to_identity(self):
        g = MajoranaMonomial.gamma(7)
        assert majorana_mul(g, g) == MajoranaMonomial.identity()

    @settings(max_examples=200, deadline=None)
    @given(monomials(), monomials(), monomials())
    def test_associativity(self, a, b, c):
        assert majorana_mul(majorana_mul(a, b), c) == majorana_mul(
            a, majorana_mul(b, c)
        )

    @settings(max_examples=200, deadline=None)
    @given(monomials(), monomials())
    def test_commutation_scalar(self, a, b):
        ab, ba = majorana_mul(a, b), majorana_mul(b, a)
        assert ab.modes == ba.modes
        offset = (ab.phase_exp - ba.phase_exp) % 4
        assert offset in (0, 2)
        scalar = majorana_commutation_scalar(a, b)
        assert offset == (0 if scalar == 1 else 2)

    def test_adjoint_reverses(self):
        m = MajoranaMonomial(1, (0, 1, 2))
        adj = m.adjoint()
        assert majorana_mul(m, adj) == MajoranaMonomial.identity()


class TestDenseAgreement:
    """Monomials on 3 fermion modes against the 8×8 reference chain."""

    def test_random_products(self, rng):
        for _ in range(200):
            a = MajoranaMonomial(
                rng.randrange(4), tuple(rng.randrange(6) for _ in range(rng.randrange(5)))
            )
            b = MajoranaMonomial(
                rng.randrange(4), tuple(rng.randrange(6) for _ in range(rng.randrange(5)))
            )
            lhs = oracle.monomial_matrix(majorana_mul(a, b), 3)
            rhs = oracle.monomial_matrix(a, 3) @ oracle.monomial_matrix(b, 3)
            assert np.allclose(lhs, rhs)

    def test_parity_matrix_is_number_sign(self):
        """−i γ_f γ'_f acts as +1 on empty mode, −1 on filled."""
        mat = oracle.monomial_matrix(MajoranaMonomial.parity(0), 1)
        assert np.allclose(mat, np.diag([1, -1]))


class TestLoopWord:
    def test_face_loop_is_plus_identity(self):
        t = Torus(4, 4)
        loop = t.face_boundary((1, 1))
        assert loop_word(t, loop) == MajoranaMonomial.identity()

    def test_six_step_rectangle_is_minus_identity(self):
        """A 2×1 rectangle visits 6 edges; the word closes to −1."""
        t = Torus(4, 4)
        loop = t.rectangle_loop(0, 0, 2, 1)
        assert len(loop) == 6
        assert loop_word(t, loop) == MajoranaMonomial(2, ())

    def test_eight_step_rectangle_is_plus_identity(self):
        """Loop words telescope to i^len: length 8 closes to +1."""
        t = Torus(4, 4)
        loop = t.rectangle_loop(1, 1, 2, 2)
        assert len(loop) == 8
        assert loop_word(t, loop) == MajoranaMonomial.identity()

    def test_every_face_on_small_torus(self):
        t = Torus(2, 2)
        for f in t.faces():
            assert loop_word(t, t.face_boundary(f)) == MajoranaMonomial.identity()

    def test_open_path_rejected(self):
        t = Torus(4, 4)
        with pytest.raises(OpenPathError):
            loop_word(t, [t.h_edge(0, 0), t.h_edge(1, 0)])

    def test_product_helper(self):
        ms = [MajoranaMonomial.bilinear(0, 1), MajoranaMonomial.bilinear(1, 0)]
        assert product(ms) == MajoranaMonomial(2, ())
