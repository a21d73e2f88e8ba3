"""Derivation pipelines: circuit conjugation, qubit removal, re-pairing.

The ratio-1.5 pipeline is the fully wired example: conjugating the
exact-bosonization mapping by the shipped depth-8 circuit turns half of the
vertex stabilizers into single-site −Y operators, removing those qubits and
re-pairing the Majorana modes row-wise lands exactly on the compact-encoding
metrics (ratio 1.5, parity weight 1, hopping weight 3, stabilizer weight 8).
"""

from fractions import Fraction

import pytest

from f2q.clifford import CliffordCircuit, Gate, load_circuit, tile_pattern
from f2q.lattice import Torus
from f2q.mappings import Pairing, build_mapping, repair
from f2q.pauli import pauli_commutation_scalar
from f2q.transforms import (
    PIPELINE_KINDS,
    ConsistencyError,
    TransformReport,
    apply_circuit,
    disentangle,
    pipeline,
)
from f2q.verifier import degeneracy, verify_mapping, weight_table


def generators(m):
    ops = [m.hopping(e) for e in m.lattice.edges()]
    ops += [m.parity(f) for f in m.fermion_sites]
    return ops


class TestApplyCircuit:
    def test_identity_circuit_mapping_unchanged(self):
        m = build_mapping("exact_bosonization", Torus(2, 2))
        out = apply_circuit(m, CliffordCircuit(()))
        assert out.hopping_images == m.hopping_images
        assert out.parity_images == m.parity_images
        assert out.stabilizers == m.stabilizers

    def test_gate_site_outside_registry_rejected(self):
        m = build_mapping("exact_bosonization", Torus(2, 2))
        bad = CliffordCircuit(((Gate("H", (len(m.qubit_registry),)),),))
        with pytest.raises(ValueError):
            apply_circuit(m, bad)

    def test_conjugation_preserves_commutation_scalars(self):
        t = Torus(4, 4)
        m = build_mapping("exact_bosonization", t)
        c = tile_pattern(t, load_circuit("r15"), m.qubit_registry)
        out = apply_circuit(m, c)
        before = generators(m)
        after = generators(out)
        for i in range(0, len(before), 7):
            for j in range(i + 1, len(before), 5):
                assert pauli_commutation_scalar(
                    before[i], before[j]
                ) == pauli_commutation_scalar(after[i], after[j])


class TestDisentangle:
    def test_no_single_site_stabilizers_is_a_no_op(self):
        m = build_mapping("exact_bosonization", Torus(2, 2))
        out, report = disentangle(m)
        assert out is m
        assert report.removed_sites == ()
        assert report.fixed_stabilizers == ()
        assert report.before_ratio == report.after_ratio == Fraction(2)

    def test_conjugated_odd_vertex_stabilizers_become_minus_y(self):
        t = Torus(4, 4)
        m = build_mapping("exact_bosonization", t)
        c = tile_pattern(t, load_circuit("r15"), m.qubit_registry)
        out, report = disentangle(apply_circuit(m, c))
        assert len(report.removed_sites) == 8
        for site, stab in zip(report.removed_sites, report.fixed_stabilizers):
            kind, x, y = site
            assert kind == "v" and (x + y) % 2 == 0
            assert stab.phase_exp == 2
            assert stab.letters() == {site: "Y"}
        assert report.before_ratio == Fraction(2)
        assert report.after_ratio == Fraction(3, 2)

    def test_removal_preserves_algebra_and_degeneracy(self):
        t = Torus(4, 4)
        m = build_mapping("exact_bosonization", t)
        c = tile_pattern(t, load_circuit("r15"), m.qubit_registry)
        conj = apply_circuit(m, c)
        out, _ = disentangle(conj)
        assert degeneracy(out) == degeneracy(m) == 4
        assert out.n_qubits == m.n_qubits - 8
        for site in (s for s, _ in zip(out.qubit_registry, range(4))):
            assert site in m.qubit_registry

    def test_report_requires_one_stabilizer_per_site(self):
        wt = weight_table(build_mapping("exact_bosonization", Torus(2, 2)))
        with pytest.raises(ValueError):
            TransformReport((("v", 0, 0),), (), Fraction(2), Fraction(2), wt, wt)


class TestRatio15Pipeline:
    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            pipeline("nope", Torus(4, 4))
        assert "r15" in PIPELINE_KINDS

    def test_compact_metrics_on_4x4(self):
        m, report = pipeline("r15", Torus(4, 4))
        wt = weight_table(m)
        assert wt.ratio == Fraction(3, 2)
        assert wt.parity_range == (1, 1)
        assert wt.hopping_range == (3, 3)
        assert wt.stabilizer_range == (8, 8)
        assert m.name == "compact"
        assert len(report.removed_sites) == 8

    def test_compact_passes_full_verifier_on_2x2(self):
        m, _ = pipeline("r15", Torus(2, 2))
        assert m.n_qubits == 6
        for check in verify_mapping(m):
            assert check.passed, check.line()

    def test_compact_degeneracy_on_rectangular_torus(self):
        m, _ = pipeline("r15", Torus(4, 6))
        assert degeneracy(m) == 4
        assert weight_table(m).hopping_range == (3, 3)


class TestRepair:
    def test_identity_pairing_is_a_no_op(self):
        m = build_mapping("exact_bosonization", Torus(4, 4))
        out = repair(m, Pairing.identity(m))
        assert out.hopping_images == m.hopping_images
        assert out.parity_images == m.parity_images

    def test_non_perfect_matching_rejected(self):
        m = build_mapping("exact_bosonization", Torus(2, 2))
        pairs = tuple(((x, y), 2 * i, 2 * i) for i, (x, y) in enumerate(m.fermion_sites))
        with pytest.raises(ValueError):
            Pairing(pairs)

    def test_repaired_mapping_keeps_stabilizers_and_registry(self):
        m, _ = pipeline("r15", Torus(4, 4))
        eb = build_mapping("exact_bosonization", Torus(4, 4))
        assert m.n_qubits == 24
        assert set(m.qubit_registry.labels) < set(eb.qubit_registry.labels)
