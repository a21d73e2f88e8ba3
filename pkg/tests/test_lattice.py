"""Torus geometry: counting, incidence, orientation, loops, colorings."""

import pytest

from f2q.lattice import Coloring, SizeError, Torus, build_coloring, color_of


class TestCounting:
    def test_vertices_faces_edges(self):
        t = Torus(4, 6)
        assert t.n_vertices == 24
        assert t.n_faces == 24
        assert t.n_edges == 48
        assert len(list(t.edges())) == 48

    def test_minimum_size_enforced(self):
        with pytest.raises(SizeError):
            Torus(1, 4)

    def test_euler_characteristic_zero(self):
        for t in [Torus(2, 2), Torus(3, 5), Torus(4, 4)]:
            assert t.n_vertices - t.n_edges + t.n_faces == 0


class TestIndexing:
    def test_row_major_vertices(self):
        t = Torus(4, 4)
        assert t.vertex_index((0, 0)) == 0
        assert t.vertex_index((3, 0)) == 3
        assert t.vertex_index((0, 1)) == 4

    def test_edge_registry_blocks(self):
        t = Torus(3, 2)
        reg = t.edge_registry()
        assert len(reg) == 12
        # horizontal block first, then vertical
        assert reg.label(0) == t.h_edge(0, 0)
        assert reg.label(6) == t.v_edge(0, 0)

    def test_wrapping(self):
        t = Torus(4, 4)
        assert t.h_edge(4, 0) == t.h_edge(0, 0)
        assert t.v_edge(-1, 2) == t.v_edge(3, 2)


class TestIncidence:
    def test_face_boundary_orientation(self):
        """Boundary of face (x, y): bottom, right, top, left."""
        t = Torus(4, 4)
        assert t.face_boundary((1, 2)) == (
            t.h_edge(1, 2),
            t.v_edge(2, 2),
            t.h_edge(1, 3),
            t.v_edge(1, 2),
        )

    def test_vertex_star_compass(self):
        """Star of vertex (x, y): south, east, north, west."""
        t = Torus(4, 4)
        assert t.vertex_star((1, 2)) == (
            t.v_edge(1, 1),
            t.h_edge(1, 2),
            t.v_edge(1, 2),
            t.h_edge(0, 2),
        )

    def test_edge_faces_left_right(self):
        """Walking along the arrow: left face then right face."""
        t = Torus(4, 4)
        assert t.edge_faces_lr(t.h_edge(1, 1)) == ((1, 1), (1, 0))
        assert t.edge_faces_lr(t.v_edge(1, 1)) == ((0, 1), (1, 1))

    def test_edge_vertices_left_right(self):
        t = Torus(4, 4)
        assert t.edge_vertices_lr(t.h_edge(1, 1)) == ((1, 1), (2, 1))
        assert t.edge_vertices_lr(t.v_edge(1, 1)) == ((1, 2), (1, 1))

    def test_each_edge_borders_two_faces(self):
        t = Torus(3, 3)
        for e in t.edges():
            fl, fr = t.edge_faces_lr(e)
            assert fl != fr
            assert e in t.face_boundary(fl)
            assert e in t.face_boundary(fr)

    def test_star_and_boundary_consistency(self):
        """Every edge appears in exactly two stars and two boundaries."""
        t = Torus(4, 4)
        star_count = {}
        for v in t.vertices():
            for e in t.vertex_star(v):
                star_count[e] = star_count.get(e, 0) + 1
        assert all(c == 2 for c in star_count.values())
        assert len(star_count) == t.n_edges


class TestLoops:
    def test_face_boundary_is_closed(self):
        t = Torus(4, 4)
        for f in t.faces():
            edges = t.face_boundary(f)
            seen = set()
            for e in edges:
                u, w = t.edge_endpoints_vertices(e)
                seen.symmetric_difference_update({u, w})
            assert not seen  # every vertex hit an even number of times

    def test_rectangle_loop_lengths(self):
        t = Torus(5, 5)
        assert len(t.rectangle_loop(0, 0, 1, 1)) == 4
        assert len(t.rectangle_loop(0, 0, 2, 1)) == 6
        assert len(t.rectangle_loop(1, 2, 3, 2)) == 10

    def test_rectangle_must_fit(self):
        t = Torus(3, 3)
        with pytest.raises(ValueError):
            t.rectangle_loop(0, 0, 3, 1)

    def test_contractible_loops_all_close(self):
        t = Torus(4, 4)
        loops = t.contractible_loops(max_perimeter=8)
        assert loops
        for loop in loops:
            seen = set()
            for e in loop:
                u, w = t.edge_endpoints_vertices(e)
                seen.symmetric_difference_update({u, w})
            assert not seen


class TestColoring:
    def test_checkerboard(self):
        t = Torus(4, 4)
        col = build_coloring(t, "checkerboard")
        assert isinstance(col, Coloring)
        assert color_of(t, col, (0, 0)) == "even"
        assert color_of(t, col, (1, 0)) == "odd"
        assert color_of(t, col, (1, 1)) == "even"

    def test_checkerboard_needs_even_dims(self):
        with pytest.raises(SizeError):
            build_coloring(Torus(3, 4), "checkerboard")

    def test_four_class_period(self):
        t = Torus(4, 4)
        col = build_coloring(t, "four_class")
        assert color_of(t, col, (1, 0)) == 1
        assert color_of(t, col, (0, 0)) == 2
        assert color_of(t, col, (0, 1)) == 3
        assert color_of(t, col, (1, 1)) == 4
        assert color_of(t, col, (3, 2)) == color_of(t, col, (1, 0))

    def test_four_class_needs_multiple_of_four(self):
        with pytest.raises(SizeError):
            build_coloring(Torus(4, 6), "four_class")

    def test_classes_one_and_three_are_odd(self):
        """Classes 1 and 3 sit on odd faces of the checkerboard."""
        t = Torus(4, 4)
        four = build_coloring(t, "four_class")
        check = build_coloring(t, "checkerboard")
        for f in t.faces():
            if color_of(t, four, f) in (1, 3):
                assert color_of(t, check, f) == "odd"
            else:
                assert color_of(t, check, f) == "even"
