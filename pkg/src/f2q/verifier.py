"""Machine checks for encoded fermion algebras.

Every claim a mapping makes is checked here: commutation relations transfer
from the Majorana algebra to the Pauli images (`check_homomorphism`), closed
hopping loops reproduce i^|l| times a stabilizer with the exact phase
(`check_loops`), the joint stabilizer/parity group has the right size
(`degeneracy`), generator weights match the catalog (`weight_table`), and —
for registers small enough to enumerate basis states — an independent
matrix-level oracle revalidates products and the code space (`oracle_check`).

Reports render one machine-readable line each: ``CHECK <name> PASS|FAIL
<detail>``; a failing report always carries a reproducible counterexample.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .majorana import majorana_commutation_scalar
from .mappings.base import (
    Mapping,
    encode_bilinear,
    hopping_word,
    loop_image,
    parity_word,
    rectangle_loop_edges,
)
from .oracle import pauli_basis_action
from .pauli import PauliOperator, pauli_commutation_scalar, product

__all__ = [
    "ORACLE_MAX_QUBITS",
    "VerificationReport",
    "WeightTable",
    "check_homomorphism",
    "check_loops",
    "degeneracy",
    "oracle_check",
    "symplectic_rows",
    "verify_mapping",
    "weight_table",
]

ORACLE_MAX_QUBITS = 14


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one named check.

    `counterexample` is None on success and otherwise holds whatever
    reproduces the failure (a generator label pair, a loop anchor, ...).
    """

    name: str
    passed: bool
    detail: str = ""
    counterexample: object = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {status} {self.detail}".rstrip()


@dataclass(frozen=True)
class WeightTable:
    """Catalog metrics of a mapping: ratio and min–max generator weights.

    The hopping range is taken over the four dressed bilinears each edge
    supports (both Majorana species at both endpoints), which is what makes
    a weight-2 generator set still cost up to weight 6 in a Hamiltonian.
    """

    ratio: Fraction
    parity_range: tuple[int, int]
    hopping_range: tuple[int, int]
    stabilizer_range: tuple[int, int] | None

    @staticmethod
    def _span(rng: tuple[int, int] | None) -> str:
        if rng is None:
            return "none"
        lo, hi = rng
        return str(lo) if lo == hi else f"{lo}-{hi}"

    def ratio_text(self) -> str:
        if self.ratio.denominator == 1:
            return str(self.ratio.numerator)
        return str(float(self.ratio))

    def describe(self) -> str:
        return (
            f"ratio {self.ratio_text()}"
            f" parity {self._span(self.parity_range)}"
            f" hopping {self._span(self.hopping_range)}"
            f" stabilizer {self._span(self.stabilizer_range)}"
        )


def symplectic_rows(
    ops: Sequence[PauliOperator], registry
) -> np.ndarray:
    """Stack operators as GF(2) rows [x-block | z-block], phases dropped."""
    n = len(registry)
    rows = np.zeros((len(ops), 2 * n), dtype=np.uint8)
    for r, p in enumerate(ops):
        for i in p.x_bits:
            rows[r, i] = 1
        for i in p.z_bits:
            rows[r, n + i] = 1
    return rows


def _generators(m: Mapping) -> list[tuple[tuple, PauliOperator]]:
    gens: list[tuple[tuple, PauliOperator]] = []
    for e in m.lattice.edges():
        gens.append((("hopping", e), m.hopping(e)))
    for f in m.fermion_sites:
        gens.append((("parity", f), m.parity(f)))
    return gens


def check_homomorphism(m: Mapping) -> VerificationReport:
    """Exhaustively compare fermionic and image commutation scalars."""
    gens = _generators(m)
    words = [
        hopping_word(m, label[1])
        if label[0] == "hopping"
        else parity_word(m, label[1])
        for label, _ in gens
    ]
    pairs = 0
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            pairs += 1
            expected = majorana_commutation_scalar(words[i], words[j])
            actual = pauli_commutation_scalar(gens[i][1], gens[j][1])
            if expected != actual:
                return VerificationReport(
                    "homomorphism",
                    False,
                    f"{gens[i][0]} vs {gens[j][0]}:"
                    f" fermionic {expected:+d}, image {actual:+d}",
                    (gens[i][0], gens[j][0]),
                )
    return VerificationReport(
        "homomorphism", True, f"{pairs} generator pairs agree"
    )


def _loop_catalog(m: Mapping) -> Iterable[tuple[tuple, list]]:
    """All rectangle loops of perimeter ≤ 8, every anchor position."""
    t = m.lattice
    for w in range(1, 4):
        for h in range(1, 4):
            if 2 * (w + h) > 8 or w >= t.Lx or h >= t.Ly:
                continue
            for anchor in t.vertices():
                yield (anchor, w, h), rectangle_loop_edges(m, anchor, w, h)


def check_loops(m: Mapping) -> VerificationReport:
    """Closed hopping walks must land on +1 elements of the stabilizers.

    For each loop the fermionic word fixes the scalar i^|l|; the image,
    divided by that scalar, must be a member of the stabilizer group with
    phase exactly +1 (GF(2) membership first, then an exact product check
    on the matched combination).
    """
    rows = symplectic_rows(m.stabilizers, m.qubit_registry)
    checked = 0
    for anchor, edges in _loop_catalog(m):
        word, image = loop_image(m, edges)
        if word.phase_exp != len(edges) % 4:
            return VerificationReport(
                "loops",
                False,
                f"loop {anchor}: walk word i^{word.phase_exp}"
                f" != i^{len(edges) % 4}",
                anchor,
            )
        residue = image.times_phase(-word.phase_exp % 4)
        if not m.stabilizers:
            if not residue.is_identity():
                return VerificationReport(
                    "loops",
                    False,
                    f"loop {anchor}: residue {residue.to_text()}"
                    " outside empty stabilizer group",
                    anchor,
                )
            checked += 1
            continue
        combo = gf2.solve(rows, symplectic_rows([residue], m.qubit_registry)[0])
        if combo is None:
            return VerificationReport(
                "loops",
                False,
                f"loop {anchor}: residue support outside stabilizer span",
                anchor,
            )
        member = product(
            m.qubit_registry,
            [s for c, s in zip(combo, m.stabilizers) if c],
        )
        if member != residue:
            return VerificationReport(
                "loops",
                False,
                f"loop {anchor}: residue phase i^{residue.phase_exp}"
                f" vs stabilizer element i^{member.phase_exp}",
                anchor,
            )
        checked += 1
    return VerificationReport("loops", True, f"{checked} loops close on +1")


def degeneracy(m: Mapping) -> int:
    """Ground-space count of the code Hamiltonian −∑stabilizers −∑parities."""
    ops = list(m.stabilizers) + [m.parity(f) for f in m.fermion_sites]
    r = gf2.rank(symplectic_rows(ops, m.qubit_registry))
    return 2 ** (m.n_qubits - r)


def weight_table(m: Mapping) -> WeightTable:
    """Ratio plus min–max weights per generator class."""
    hop_weights = []
    for e in m.lattice.edges():
        left, right = m.edge_fermions_lr(e)
        for a in (False, True):
            for b in (False, True):
                op = encode_bilinear(
                    m, m.mode(left, primed=a), m.mode(right, primed=b), [e]
                )
                hop_weights.append(op.weight())
    par_weights = [m.parity(f).weight() for f in m.fermion_sites]
    stab_weights = [s.weight() for s in m.stabilizers]
    return WeightTable(
        ratio=m.ratio,
        parity_range=(min(par_weights), max(par_weights)),
        hopping_range=(min(hop_weights), max(hop_weights)),
        stabilizer_range=(
            (min(stab_weights), max(stab_weights)) if stab_weights else None
        ),
    )


# --- dense oracle -----------------------------------------------------------
#
# A Pauli operator is a monomial matrix: P|b⟩ = coeff[b] · |perm[b]⟩. Arrays
# over the full basis keep every check exact (coefficients are ±1, ±i and
# traces are Gaussian-integer sums) while staying linear in 2^n.


def _action(p: PauliOperator, dim: int) -> tuple[np.ndarray, np.ndarray]:
    phase, x_mask, z_mask = pauli_basis_action(p)
    idx = np.arange(dim)
    perm = idx ^ x_mask
    signs = np.ones(dim, dtype=complex)
    if z_mask:
        bits = np.zeros(dim, dtype=np.int64)
        rest = idx & z_mask
        while rest.any():
            bits += rest & 1
            rest = rest >> 1
        signs = np.where(bits % 2 == 1, -1.0 + 0j, 1.0 + 0j)
    return perm, phase * signs


def _compose(after, first):
    perm_a, coeff_a = after
    perm_f, coeff_f = first
    return perm_a[perm_f], coeff_f * coeff_a[perm_f]


def _actions_equal(a, b) -> bool:
    return bool(np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]))


def _trace(a) -> complex:
    perm, coeff = a
    fixed = perm == np.arange(perm.shape[0])
    return complex(coeff[fixed].sum())


def _identity_action(dim: int):
    return np.arange(dim), np.ones(dim, dtype=complex)


def _group_reduce(ops, registry, dim):
    """Split commuting generators into an independent set over GF(2).

    Returns (independent actions, contains_minus_identity). Dependent
    generators are recomputed from their matched combination; any sign
    discrepancy means −1 lies in the generated group.
    """
    indep_actions: list = []
    indep_rows: list[np.ndarray] = []
    minus_one = False
    for p in ops:
        row = symplectic_rows([p], registry)[0]
        act = _action(p, dim)
        if not indep_rows:
            indep_actions.append(act)
            indep_rows.append(row)
            continue
        combo = gf2.solve(np.array(indep_rows), row)
        if combo is None:
            indep_actions.append(act)
            indep_rows.append(row)
            continue
        rebuilt = _identity_action(dim)
        for c, a in zip(combo, indep_actions):
            if c:
                rebuilt = _compose(rebuilt, a)
        if not _actions_equal(rebuilt, act):
            minus_one = True
    return indep_actions, minus_one


def _group_trace_sum(indep_actions, extra, dim) -> complex:
    """∑_{g ∈ ⟨indep⟩} tr(g·extra), walked in Gray-code order."""
    total = 0.0 + 0.0j
    current = extra
    total += _trace(current)
    r = len(indep_actions)
    for k in range(1, 2 ** r):
        flip = (k & -k).bit_length() - 1
        current = _compose(indep_actions[flip], current)
        total += _trace(current)
    return total


def _eigenspace_dimension(ops, registry, dim) -> int:
    """dim of the joint +1 eigenspace of commuting hermitian monomials."""
    if not ops:
        return dim
    indep, minus_one = _group_reduce(ops, registry, dim)
    if minus_one:
        return 0
    total = _group_trace_sum(indep, _identity_action(dim), dim)
    size = 2 ** len(indep)
    value = total / size
    d = int(round(value.real))
    if abs(value - d) > 1e-9:
        raise ArithmeticError(f"projector trace {value} is not an integer")
    return d


def oracle_max_qubits() -> int:
    """Dense-oracle size cap (env F2Q_ORACLE_MAX_QUBITS overrides)."""
    return int(os.environ.get("F2Q_ORACLE_MAX_QUBITS", ORACLE_MAX_QUBITS))


def oracle_check(
    m: Mapping,
    max_qubits: int | None = None,
    pairs: int = 1000,
    seed: int = 20240817,
) -> VerificationReport:
    """Re-derive engine claims from explicit basis actions.

    Three facts are established independently of the set-algebra engines:
    (a) random generator products match the engine exactly, (b) every
    elementary loop residue acts as +1 on the joint +1 eigenspace of the
    stabilizers, and (c) the joint +1 eigenspace of stabilizers and
    parities together has exactly the dimension `degeneracy` reports.
    """
    cap = oracle_max_qubits() if max_qubits is None else max_qubits
    if m.n_qubits > cap:
        raise ValueError(
            f"{m.n_qubits} qubits exceeds the dense-oracle cap {cap}"
        )
    dim = 1 << m.n_qubits
    gens = _generators(m)
    gens += [(("stabilizer", i), s) for i, s in enumerate(m.stabilizers)]
    actions = [_action(p, dim) for _, p in gens]

    # (a) products against the engine
    rng = random.Random(seed)
    for _ in range(pairs):
        i = rng.randrange(len(gens))
        j = rng.randrange(len(gens))
        engine = gens[i][1] * gens[j][1]
        matrix = _compose(actions[i], actions[j])
        if not _actions_equal(matrix, _action(engine, dim)):
            return VerificationReport(
                "oracle",
                False,
                f"product mismatch {gens[i][0]} · {gens[j][0]}",
                (gens[i][0], gens[j][0]),
            )

    # the code group must commute before eigenspaces mean anything
    code_ops = list(m.stabilizers) + [m.parity(f) for f in m.fermion_sites]
    code_actions = [_action(p, dim) for p in code_ops]
    for i in range(len(code_ops)):
        for j in range(i + 1, len(code_ops)):
            ab = _compose(code_actions[i], code_actions[j])
            ba = _compose(code_actions[j], code_actions[i])
            if not _actions_equal(ab, ba):
                return VerificationReport(
                    "oracle",
                    False,
                    f"code generators {i} and {j} do not commute",
                    (i, j),
                )

    # (b) loop residues act as +1 on the stabilizer eigenspace
    stab_indep, stab_minus_one = _group_reduce(
        list(m.stabilizers), m.qubit_registry, dim
    )
    loops_checked = 0
    if not stab_minus_one:
        group_size = 2 ** len(stab_indep)
        eig = _group_trace_sum(stab_indep, _identity_action(dim), dim)
        for anchor in m.lattice.vertices():
            word, image = loop_image(
                m, rectangle_loop_edges(m, anchor, 1, 1)
            )
            residue = image.times_phase(-word.phase_exp % 4)
            acted = _group_trace_sum(stab_indep, _action(residue, dim), dim)
            if abs(acted - eig) > 1e-9 * max(1.0, abs(eig)):
                return VerificationReport(
                    "oracle",
                    False,
                    f"loop {anchor} residue is not +1 on the code space"
                    f" (tr {acted / group_size} vs {eig / group_size})",
                    anchor,
                )
            loops_checked += 1

    # (c) code-space dimension equals the GF(2) rank prediction
    observed = _eigenspace_dimension(code_ops, m.qubit_registry, dim)
    predicted = degeneracy(m)
    if observed != predicted:
        return VerificationReport(
            "oracle",
            False,
            f"code-space dimension {observed} != degeneracy {predicted}",
            ("dimension", observed, predicted),
        )
    return VerificationReport(
        "oracle",
        True,
        f"{pairs} products, {loops_checked} loops,"
        f" code dimension {observed}",
    )


def verify_mapping(
    m: Mapping,
    checks: Sequence[str] = ("algebra", "loops", "degeneracy", "weights", "oracle"),
    max_qubits: int | None = None,
) -> list[VerificationReport]:
    """Run the named checks and collect their reports in order."""
    reports: list[VerificationReport] = []
    for name in checks:
        if name == "algebra":
            reports.append(check_homomorphism(m))
        elif name == "loops":
            reports.append(check_loops(m))
        elif name == "degeneracy":
            deg = degeneracy(m)
            if m.stabilizers:
                reports.append(
                    VerificationReport(
                        "degeneracy", deg == 4, str(deg), None if deg == 4 else deg
                    )
                )
            else:
                reports.append(
                    VerificationReport(
                        "degeneracy", True, f"{deg} (no stabilizers)"
                    )
                )
        elif name == "weights":
            reports.append(
                VerificationReport("weights", True, weight_table(m).describe())
            )
        elif name == "oracle":
            cap = oracle_max_qubits() if max_qubits is None else max_qubits
            if m.n_qubits > cap:
                reports.append(
                    VerificationReport(
                        "oracle",
                        True,
                        f"skipped ({m.n_qubits} qubits exceeds cap {cap})",
                    )
                )
            else:
                reports.append(oracle_check(m, max_qubits=cap))
        else:
            raise ValueError(f"unknown check {name!r}")
    return reports
