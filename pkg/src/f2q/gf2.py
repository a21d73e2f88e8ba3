"""Dense GF(2) linear algebra on numpy uint8 arrays.

Row operations are XOR; matrices are small (a few hundred rows) so plain
Gaussian elimination is ample.
"""

from __future__ import annotations

import numpy as np

__all__ = ["row_echelon", "rank", "solve", "kernel_basis"]


def row_echelon(M, n_pivot_cols=None):
    """Row-reduce a binary matrix over GF(2).

    Args:
        M: binary matrix (m x n), values in {0, 1}.
        n_pivot_cols: restrict pivot search to the first columns (row ops
            still span the full width). Defaults to all columns.

    Returns:
        (R, pivot_cols): the reduced matrix (uint8 copy) and the list of
        pivot column indices (length = rank over the searched columns).
    """
    R = (np.asarray(M, dtype=np.uint8) % 2).copy()
    if R.ndim != 2:
        R = np.atleast_2d(R)
    m, n = R.shape
    if n_pivot_cols is None:
        n_pivot_cols = n

    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        rows = np.nonzero(R[pivot_row:, col])[0]
        if rows.size == 0:
            continue
        found = pivot_row + int(rows[0])
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        # eliminate everywhere else (reduced form makes solves direct)
        for row in range(m):
            if row != pivot_row and R[row, col]:
                R[row] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == m:
            break
    return R, pivot_cols


def rank(M) -> int:
    """GF(2) rank of a dense binary matrix."""
    M = np.asarray(M, dtype=np.uint8)
    if M.size == 0:
        return 0
    _, pivots = row_echelon(M)
    return len(pivots)


def solve(A, b):
    """One solution x of A^T-free system: rows of A are generators, find
    coefficients x with x·A = b over GF(2).

    Args:
        A: (m x n) binary matrix whose m rows span the candidate space.
        b: length-n binary vector.

    Returns:
        uint8 vector x of length m with (x @ A) % 2 == b, or None when b is
        outside the row span.
    """
    A = np.atleast_2d(np.asarray(A, dtype=np.uint8) % 2)
    b = np.asarray(b, dtype=np.uint8) % 2
    m, n = A.shape
    if b.shape != (n,):
        raise ValueError("dimension mismatch")
    # eliminate on [A^T | b^T] columns? Work with augmented rows [A | I]:
    aug = np.concatenate([A, np.eye(m, dtype=np.uint8)], axis=1)
    R, pivots = row_echelon(aug, n_pivot_cols=n)
    x = np.zeros(m, dtype=np.uint8)
    residual = b.copy()
    for prow, pcol in enumerate(pivots):
        if residual[pcol]:
            residual ^= R[prow, :n]
            x ^= R[prow, n:]
    if residual.any():
        return None
    return x


def kernel_basis(A):
    """Basis of {x : x·A = 0 over GF(2)} for the rows-as-generators view.

    Returns a (k x m) uint8 matrix whose rows span the left kernel of A.
    """
    A = np.atleast_2d(np.asarray(A, dtype=np.uint8) % 2)
    m, n = A.shape
    aug = np.concatenate([A, np.eye(m, dtype=np.uint8)], axis=1)
    R, pivots = row_echelon(aug, n_pivot_cols=n)
    r = len(pivots)
    # rows below the pivot rows have zero left block: their right blocks
    # are kernel combinations
    zero_rows = [i for i in range(m) if not R[i, :n].any()]
    if not zero_rows:
        return np.zeros((0, m), dtype=np.uint8)
    return R[zero_rows, n:].copy()
