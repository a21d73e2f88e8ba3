"""Independent dense ground truth for the set-algebra engines.

Everything here rebuilds operators from scratch as explicit matrices (or as
exact basis actions for larger registers) so that the Pauli and Majorana
engines can be checked against linear algebra that shares none of their code
paths.

The Majorana representation is a fixed reference 1D chain (one qubit per
fermion site, Z-strings to the left); it is test/verification-only and is
never used to *define* mapping operators.
"""

from __future__ import annotations

import numpy as np

from .pauli import PauliOperator

__all__ = [
    "pauli_matrix",
    "pauli_basis_action",
    "apply_pauli_to_vector",
    "majorana_matrix",
    "monomial_matrix",
    "gate_matrix",
    "code_space_dimension_dense",
]

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_SINGLE = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}

DENSE_MATRIX_MAX_QUBITS = 10


def pauli_matrix(p: PauliOperator) -> np.ndarray:
    """Explicit 2^n × 2^n matrix of *p*.

    Basis labels are integers with bit i = site i (so site 0 is the least
    significant factor), matching the vector helpers below."""
    n = len(p.registry)
    if n > DENSE_MATRIX_MAX_QUBITS:
        raise ValueError(f"dense matrix for {n} qubits is not desk scale")
    m = np.array([[1j ** p.phase_exp]], dtype=complex)
    for i in reversed(range(n)):
        bx, bz = i in p.x_bits, i in p.z_bits
        letter = "Y" if (bx and bz) else ("X" if bx else ("Z" if bz else "I"))
        m = np.kron(m, _SINGLE[letter])
    return m


def pauli_basis_action(p: PauliOperator):
    """Exact action on computational basis states for any register size.

    Returns (phase, x_mask, z_mask) with P|b⟩ = phase · (−1)^{popcount(b & z_mask)} |b ^ x_mask⟩,
    where bit i of a basis label corresponds to site i (site 0 = MSB is *not*
    used here; bit i is just 1 << i, consistent within this module's vector
    helpers)."""
    n = len(p.registry)
    x_mask = 0
    z_mask = 0
    for i in p.x_bits:
        x_mask |= 1 << i
    for i in p.z_bits:
        z_mask |= 1 << i
    # convert the letter normal form to the X(x)Z(z) factorization
    k = (p.phase_exp + len(p.x_bits & p.z_bits)) % 4
    return 1j ** k, x_mask, z_mask


def apply_pauli_to_vector(p: PauliOperator, vec: np.ndarray) -> np.ndarray:
    """Apply *p* to a dense state vector indexed by basis labels b (bit i of
    b = site i). Matrix-free and exact."""
    phase, x_mask, z_mask = pauli_basis_action(p)
    dim = vec.shape[0]
    out = np.empty_like(vec, dtype=complex)
    idx = np.arange(dim)
    signs = np.ones(dim, dtype=complex)
    if z_mask:
        par = _popcount_array(idx & z_mask)
        signs = np.where(par % 2 == 1, -1.0 + 0j, 1.0 + 0j)
    out[idx ^ x_mask] = phase * signs * vec
    return out


def _popcount_array(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    count = np.zeros_like(a)
    while a.any():
        count += a & 1
        a >>= 1
    return count


def majorana_matrix(mode: int, n_sites: int) -> np.ndarray:
    """Reference chain Majorana: mode 2f ↦ Z^{⊗f}·X_f, mode 2f+1 ↦ Z^{⊗f}·Y_f
    (chain position f = fermion site f = basis bit f)."""
    site, primed = divmod(mode, 2)
    if site >= n_sites:
        raise ValueError("mode outside register")
    m = np.array([[1.0 + 0j]])
    for i in reversed(range(n_sites)):
        if i < site:
            f = _Z
        elif i == site:
            f = _Y if primed else _X
        else:
            f = _I2
        m = np.kron(m, f)
    return m


def monomial_matrix(monomial, n_sites: int) -> np.ndarray:
    """Dense matrix of a Majorana monomial in the reference chain."""
    dim = 2 ** n_sites
    m = (1j ** monomial.phase_exp) * np.eye(dim, dtype=complex)
    for mode in monomial.modes:
        m = m @ majorana_matrix(mode, n_sites)
    return m


_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)
_R = np.array([[1, 1j], [1j, 1]], dtype=complex) / np.sqrt(2)


def _controlled(u: np.ndarray) -> np.ndarray:
    m = np.eye(4, dtype=complex)
    m[2:, 2:] = u
    return m


_GATES = {
    "H": _H,
    "S": _S,
    "R": _R,
    "CNOT": _controlled(_X),
    "CY": _controlled(_Y),
    "CZ": _controlled(_Z),
}


def gate_matrix(kind: str) -> np.ndarray:
    """Unitary of a gate kind (2×2, or 4×4 with the control as the first
    Kronecker factor)."""
    return _GATES[kind]


def gate_unitary(gate, n_qubits: int) -> np.ndarray:
    """Embed a gate's unitary into the full 2^n register (basis bit i is
    site i; for two-site gates the first site is the control)."""
    local = _GATES[gate.kind]
    sites = gate.sites
    k = len(sites)
    dim = 1 << n_qubits
    u = np.zeros((dim, dim), dtype=complex)
    clear = ~sum(1 << s for s in sites)
    for b in range(dim):
        # local index with sites[0] as the most significant local bit
        lb = 0
        for s in sites:
            lb = (lb << 1) | ((b >> s) & 1)
        base = b & clear
        for lb2 in range(1 << k):
            amp = local[lb2, lb]
            if amp == 0:
                continue
            b2 = base
            for j, s in enumerate(sites):
                if (lb2 >> (k - 1 - j)) & 1:
                    b2 |= 1 << s
            u[b2, b] += amp
    return u


def circuit_unitary(circuit, n_qubits: int) -> np.ndarray:
    """Dense unitary of a layered circuit (later layers act later)."""
    u = np.eye(1 << n_qubits, dtype=complex)
    for layer in circuit.layers:
        for g in layer:
            u = gate_unitary(g, n_qubits) @ u
    return u


def code_space_dimension_dense(stabilizers, n_qubits: int) -> int:
    """Dimension of the joint +1 eigenspace via the dense projector
    ∏(1+S)/2. Exact for small registers."""
    if n_qubits > DENSE_MATRIX_MAX_QUBITS:
        raise ValueError("use the trace formula beyond dense scale")
    dim = 2 ** n_qubits
    proj = np.eye(dim, dtype=complex)
    for s in stabilizers:
        proj = proj @ (np.eye(dim, dtype=complex) + pauli_matrix(s)) / 2
    tr = np.trace(proj)
    d = int(round(tr.real))
    if abs(tr - d) > 1e-6:
        raise ArithmeticError(f"projector trace {tr} is not an integer")
    return d
