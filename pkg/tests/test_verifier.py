"""Verifier: homomorphism/loop/degeneracy checks and the dense oracle."""

from dataclasses import replace
from fractions import Fraction

import pytest

from f2q import build_torus
from f2q.mappings import (
    bksf,
    build_mapping,
    exact_bosonization,
    kitaev_honeycomb,
    verstraete_cirac,
)
from f2q.pauli import PauliOperator
from f2q.verifier import (
    VerificationReport,
    check_homomorphism,
    check_loops,
    degeneracy,
    oracle_check,
    verify_mapping,
    weight_table,
)

ALL_KINDS = ["exact_bosonization", "bksf", "verstraete_cirac", "kitaev_honeycomb"]


@pytest.fixture(scope="module")
def eb22():
    return exact_bosonization(build_torus(2, 2))


@pytest.fixture(scope="module", params=ALL_KINDS)
def catalog44(request):
    return build_mapping(request.param, build_torus(4, 4))


class TestReportFormat:
    def test_pass_line(self):
        r = VerificationReport("loops", True, "96 loops close on +1")
        assert r.line() == "CHECK loops PASS 96 loops close on +1"

    def test_fail_line_carries_detail(self):
        r = VerificationReport("homomorphism", False, "pair broke", ("a", "b"))
        assert r.line() == "CHECK homomorphism FAIL pair broke"
        assert r.counterexample == ("a", "b")


class TestHomomorphism:
    def test_catalog_mappings_pass(self, catalog44):
        report = check_homomorphism(catalog44)
        assert report.passed, report.line()

    def test_corrupted_image_fails_with_pair(self, eb22):
        t = eb22.lattice
        bad = dict(eb22.hopping_images)
        edge = t.h_edge(0, 0)
        extra = PauliOperator.from_letters(
            eb22.qubit_registry, {t.v_edge(0, 0): "Z"}
        )
        bad[edge] = bad[edge] * extra
        corrupted = replace(eb22, hopping_images=bad)
        report = check_homomorphism(corrupted)
        assert not report.passed
        assert report.counterexample is not None
        assert ("hopping", edge) in report.counterexample


class TestLoops:
    def test_catalog_mappings_pass(self, catalog44):
        report = check_loops(catalog44)
        assert report.passed, report.line()
        # six rectangle shapes of perimeter ≤ 8 at sixteen anchors
        assert report.detail.startswith("96 loops")

    def test_smallest_torus_passes(self):
        for kind in ALL_KINDS:
            report = check_loops(build_mapping(kind, build_torus(2, 2)))
            assert report.passed, report.line()

    def test_sign_flipped_stabilizer_fails_on_phase(self, eb22):
        stabs = list(eb22.stabilizers)
        stabs[0] = stabs[0].times_phase(2)
        corrupted = replace(eb22, stabilizers=tuple(stabs))
        report = check_loops(corrupted)
        assert not report.passed
        assert "phase" in report.detail


class TestDegeneracy:
    def test_four_on_small_and_large_tori(self):
        for kind in ALL_KINDS:
            for size in [(2, 2), (4, 4), (4, 8)]:
                m = build_mapping(kind, build_torus(*size))
                assert degeneracy(m) == 4, (kind, size)


class TestWeightTable:
    def test_exact_bosonization_row(self):
        table = weight_table(exact_bosonization(build_torus(4, 4)))
        assert table.ratio == 2
        assert table.parity_range == (4, 4)
        assert table.hopping_range == (2, 6)
        assert table.stabilizer_range == (6, 6)
        assert table.describe() == "ratio 2 parity 4 hopping 2-6 stabilizer 6"

    def test_smallest_torus_shrinks_the_hopping_range(self, eb22):
        # on (2,2) the two faces of an edge share extra edges, so the
        # dressed bilinears never reach weight 6
        assert weight_table(eb22).hopping_range == (2, 5)

    def test_catalog_rows(self):
        t = build_torus(4, 4)
        rows = {
            "bksf": (Fraction(2), (4, 4), (2, 6), (6, 6)),
            "verstraete_cirac": (Fraction(2), (1, 1), (3, 4), (6, 6)),
            "kitaev_honeycomb": (Fraction(2), (2, 2), (2, 4), (6, 6)),
        }
        for kind, expected in rows.items():
            table = weight_table(build_mapping(kind, t))
            got = (
                table.ratio,
                table.parity_range,
                table.hopping_range,
                table.stabilizer_range,
            )
            assert got == expected, kind

    def test_ratio_text_renders_fractions_as_decimals(self, eb22):
        table = weight_table(eb22)
        assert table.ratio_text() == "2"
        shrunk = replace(table, ratio=Fraction(5, 4))
        assert shrunk.ratio_text() == "1.25"


class TestOracle:
    def test_smallest_tori_pass(self):
        for kind in ALL_KINDS:
            m = build_mapping(kind, build_torus(2, 2))
            report = oracle_check(m)
            assert report.passed, (kind, report.line())
            assert "code dimension 4" in report.detail

    def test_sign_flipped_stabilizer_breaks_dimension(self, eb22):
        stabs = list(eb22.stabilizers)
        stabs[0] = stabs[0].times_phase(2)
        corrupted = replace(eb22, stabilizers=tuple(stabs))
        report = oracle_check(corrupted)
        assert not report.passed
        assert "dimension 0 != degeneracy 4" in report.detail

    def test_oversized_register_is_rejected(self):
        m = exact_bosonization(build_torus(4, 4))
        with pytest.raises(ValueError):
            oracle_check(m)

    def test_cap_override(self, monkeypatch, eb22):
        monkeypatch.setenv("F2Q_ORACLE_MAX_QUBITS", "4")
        with pytest.raises(ValueError):
            oracle_check(eb22)
        monkeypatch.setenv("F2Q_ORACLE_MAX_QUBITS", "8")
        assert oracle_check(eb22).passed


class TestVerifyMapping:
    def test_full_suite_on_smallest_torus(self, eb22):
        reports = verify_mapping(eb22)
        names = [r.name for r in reports]
        assert names == ["homomorphism", "loops", "degeneracy", "weights", "oracle"]
        assert all(r.passed for r in reports)

    def test_oracle_skips_gracefully_beyond_cap(self):
        m = exact_bosonization(build_torus(4, 4))
        reports = verify_mapping(m)
        oracle_report = reports[-1]
        assert oracle_report.passed
        assert "skipped" in oracle_report.detail

    def test_unknown_check_rejected(self, eb22):
        with pytest.raises(ValueError):
            verify_mapping(eb22, checks=("distance",))
