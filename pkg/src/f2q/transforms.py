"""Derivation pipelines: circuit conjugation, qubit removal, re-pairing.

A pipeline takes a catalog mapping through three kinds of steps:

- :func:`apply_circuit` conjugates every generator image and stabilizer by a
  Clifford circuit (an exact algebra automorphism);
- :func:`disentangle` finds every single-site Pauli in the stabilizer group,
  multiplies the remaining operators by those stabilizers until they act
  trivially on the fixed qubits, and deletes the qubits from the registry;
- :func:`~f2q.mappings.base.repair` re-pairs Majorana modes into new complex
  fermions, recomputing parity and hopping images.

The removed qubits sit in a definite eigenstate of the fixed single-site
stabilizer (sign included, e.g. ``-Y``); the :class:`TransformReport` records
those operators verbatim rather than assuming an eigenvalue convention.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .clifford import CliffordCircuit, circuit_conjugate, load_circuit, tile_pattern
from .lattice import Torus
from .mappings import Pairing, build_mapping, repair
from .mappings.base import Mapping
from .pauli import PauliOperator
from .verifier import WeightTable, check_homomorphism, weight_table

__all__ = [
    "PIPELINE_KINDS",
    "ConsistencyError",
    "TransformReport",
    "apply_circuit",
    "disentangle",
    "pipeline",
]

PIPELINE_KINDS = ("r15", "r125", "vc_to_eb", "mlsc_to_eb", "eb_to_jw")


class ConsistencyError(RuntimeError):
    """An operator contradicts the stabilizer structure during removal."""


@dataclass(frozen=True)
class TransformReport:
    """What a disentangling step removed and how the mapping changed."""

    removed_sites: tuple
    fixed_stabilizers: tuple
    before_ratio: Fraction
    after_ratio: Fraction
    before_weights: WeightTable
    after_weights: WeightTable

    def __post_init__(self):
        if len(self.removed_sites) != len(self.fixed_stabilizers):
            raise ValueError("one fixed stabilizer per removed site required")

    def describe(self) -> str:
        lines = [
            f"removed {len(self.removed_sites)} qubit(s); "
            f"ratio {self.before_ratio} -> {self.after_ratio}"
        ]
        for site, stab in zip(self.removed_sites, self.fixed_stabilizers):
            lines.append(f"  {site!r}: fixed stabilizer {stab}")
        return "\n".join(lines)


def apply_circuit(m: Mapping, c: CliffordCircuit) -> Mapping:
    """Conjugate every image and stabilizer of *m* by the circuit *c*."""
    n = len(m.qubit_registry)
    for layer in c.layers:
        for g in layer:
            for s in g.sites:
                if not 0 <= s < n:
                    raise ValueError(
                        f"gate site {s} outside the {n}-qubit mapping registry"
                    )
    out = replace(
        m,
        hopping_images={e: circuit_conjugate(p, c) for e, p in m.hopping_images.items()},
        parity_images={f: circuit_conjugate(p, c) for f, p in m.parity_images.items()},
        stabilizers=tuple(circuit_conjugate(p, c) for p in m.stabilizers),
    )
    report = check_homomorphism(out)
    if not report.passed:
        raise ConsistencyError(f"conjugation broke the algebra: {report.line()}")
    return out


def _bit(p: PauliOperator, col: int, n: int) -> bool:
    return (col in p.x_bits) if col < n else ((col - n) in p.z_bits)


def _single_site_elements(m: Mapping) -> dict:
    """Single-site Pauli elements of the stabilizer group, by site label.

    Gaussian elimination over the group, exact phases carried by operator
    products; column order is site index ascending, X block before Z block.
    In the fully reduced basis a single-site group element, when one exists
    for a site, is itself a basis row, so scanning rows finds them all.
    """
    rows = list(m.stabilizers)
    n = len(m.qubit_registry)
    r = 0
    for col in range(2 * n):
        pivot = next((i for i in range(r, len(rows)) if _bit(rows[i], col, n)), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and _bit(rows[i], col, n):
                rows[i] = rows[i] * rows[r]
        r += 1
    for leftover in rows[r:]:
        if leftover.phase_exp:
            raise ConsistencyError("stabilizer group contains a non-identity scalar")
    found = {}
    for row in rows[:r]:
        if row.weight() == 1:
            (site,) = [m.qubit_registry.label(i) for i in row.support]
            found[site] = row
    return found


def _clear_sites(op: PauliOperator, singles: dict) -> PauliOperator:
    cur = op
    for site, stab in singles.items():
        letter = cur.letter_at(site)
        if letter == "I":
            continue
        if letter != stab.letter_at(site):
            raise ConsistencyError(
                f"operator acts as {letter} on {site!r} but the fixed "
                f"stabilizer there is {stab.letter_at(site)}"
            )
        cur = cur * stab
    return cur


def disentangle(m: Mapping) -> tuple:
    """Remove every qubit fixed by a single-site stabilizer.

    Returns ``(mapping, report)``; the mapping is returned unchanged with an
    empty report when the stabilizer group contains no single-site element.
    """
    before = weight_table(m)
    singles = _single_site_elements(m)
    if not singles:
        report = TransformReport((), (), m.ratio, m.ratio, before, before)
        return m, report

    order = sorted(singles, key=m.qubit_registry.index)
    singles = {site: singles[site] for site in order}
    new_reg = m.qubit_registry.without(order)

    def rebuild(op: PauliOperator) -> PauliOperator:
        return _clear_sites(op, singles).map_registry(new_reg)

    stabilizers = []
    for s in m.stabilizers:
        cleared = _clear_sites(s, singles)
        if cleared.weight() == 0:
            if cleared.phase_exp:
                raise ConsistencyError("stabilizer reduced to a non-identity scalar")
            continue
        stabilizers.append(cleared.map_registry(new_reg))

    out = replace(
        m,
        qubit_registry=new_reg,
        hopping_images={e: rebuild(p) for e, p in m.hopping_images.items()},
        parity_images={f: rebuild(p) for f, p in m.parity_images.items()},
        stabilizers=tuple(stabilizers),
    )
    report = TransformReport(
        tuple(order),
        tuple(singles[site] for site in order),
        m.ratio,
        out.ratio,
        before,
        weight_table(out),
    )
    return out, report


def _merge_reports(first: TransformReport, last: TransformReport) -> TransformReport:
    return TransformReport(
        first.removed_sites + last.removed_sites,
        first.fixed_stabilizers + last.fixed_stabilizers,
        first.before_ratio,
        last.after_ratio,
        first.before_weights,
        last.after_weights,
    )


def _conjugated(kind: str, circuit_name: str, t: Torus) -> Mapping:
    m = build_mapping(kind, t)
    c = tile_pattern(t, load_circuit(circuit_name), m.qubit_registry)
    return apply_circuit(m, c)


def _row_shift_pairing(m: Mapping) -> Pairing:
    """Pair γ of the fermion one row up with γ' in place (new fermion per site)."""
    t = m.lattice
    pairs = []
    for x, y in m.fermion_sites:
        pairs.append(
            ((x, y), m.mode(t.wrap(x, y + 1)), m.mode((x, y), primed=True))
        )
    return Pairing(tuple(pairs))


def _pipeline_r15(t: Torus) -> tuple:
    m, report = disentangle(_conjugated("exact_bosonization", "r15", t))
    out = replace(repair(m, _row_shift_pairing(m)), name="compact")
    return out, report


def pipeline(kind: str, t: Torus) -> tuple:
    """Run a named derivation pipeline; returns ``(mapping, report)``."""
    if kind == "r15":
        return _pipeline_r15(t)
    if kind in PIPELINE_KINDS:
        raise NotImplementedError(f"pipeline {kind!r} not wired up yet")
    raise ValueError(f"unknown pipeline kind {kind!r}")
