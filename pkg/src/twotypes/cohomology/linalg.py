"""Exact integer matrix routines: Smith normal form, kernels, linear solves.

Everything works on numpy arrays with dtype=object so arithmetic is
arbitrary-precision; the groups involved are tiny but intermediate entries
in a reduction can outgrow 64 bits.
"""

from __future__ import annotations

import numpy as np


def as_int_matrix(rows, ncols: int | None = None) -> np.ndarray:
    mat = np.array(rows, dtype=object)
    if mat.size == 0:
        nrows = len(rows) if hasattr(rows, "__len__") else 0
        return np.zeros((nrows, ncols or 0), dtype=object)
    if mat.ndim != 2:
        raise ValueError("expected a matrix")
    return mat


def smith_normal_form(mat: np.ndarray):
    """Decompose mat = S @ D @ T with S, T unimodular and D in Smith form.

    Returns (S, D, T, Sinv, Tinv).  D is diagonal with non-negative entries
    satisfying d_1 | d_2 | ... .
    """
    D = np.array(mat, dtype=object)
    nrows, ncols = D.shape
    S = np.eye(nrows, dtype=object)
    Sinv = np.eye(nrows, dtype=object)
    T = np.eye(ncols, dtype=object)
    Tinv = np.eye(ncols, dtype=object)

    # Row ops act on the left: D -> E D, Sinv -> E Sinv, S -> S E^{-1}.
    def row_sub(i, j, q):
        D[i, :] -= q * D[j, :]
        Sinv[i, :] -= q * Sinv[j, :]
        S[:, j] += q * S[:, i]

    def col_sub(i, j, q):
        # col_i -= q * col_j
        D[:, i] -= q * D[:, j]
        T[j, :] += q * T[i, :]
        Tinv[:, i] -= q * Tinv[:, j]

    def row_swap(i, j):
        if i == j:
            return
        D[[i, j], :] = D[[j, i], :]
        Sinv[[i, j], :] = Sinv[[j, i], :]
        S[:, [i, j]] = S[:, [j, i]]

    def col_swap(i, j):
        if i == j:
            return
        D[:, [i, j]] = D[:, [j, i]]
        T[[i, j], :] = T[[j, i], :]
        Tinv[:, [i, j]] = Tinv[:, [j, i]]

    def row_negate(i):
        D[i, :] = -D[i, :]
        Sinv[i, :] = -Sinv[i, :]
        S[:, i] = -S[:, i]

    n = min(nrows, ncols)
    k = 0
    while k < n:
        # pick the minimal nonzero entry of the trailing block as pivot
        best = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                v = abs(D[i, j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        row_swap(k, best[1])
        col_swap(k, best[2])
        if D[k, k] < 0:
            row_negate(k)
        reduced = True
        for i in range(k + 1, nrows):
            if D[i, k]:
                row_sub(i, k, D[i, k] // D[k, k])
                if D[i, k]:
                    reduced = False
        for j in range(k + 1, ncols):
            if D[k, j]:
                col_sub(j, k, D[k, j] // D[k, k])
                if D[k, j]:
                    reduced = False
        if not reduced:
            continue
        # divisibility: fold an offending row back into row k and redo
        fold = None
        for i in range(k + 1, nrows):
            for j in range(k + 1, ncols):
                if D[i, j] % D[k, k]:
                    fold = i
                    break
            if fold is not None:
                break
        if fold is not None:
            row_sub(k, fold, -1)
            continue
        k += 1
    return S, D, T, Sinv, Tinv


def diagonal(D: np.ndarray) -> list:
    return [D[i, i] for i in range(min(D.shape))]


def kernel_basis(mat: np.ndarray) -> np.ndarray:
    """Columns form a basis of the integer kernel lattice of mat."""
    if mat.shape[1] == 0:
        return np.zeros((0, 0), dtype=object)
    if mat.shape[0] == 0:
        return np.eye(mat.shape[1], dtype=object)
    _, D, _, _, Tinv = smith_normal_form(mat)
    diag = diagonal(D)
    free = [j for j in range(mat.shape[1]) if j >= len(diag) or diag[j] == 0]
    return Tinv[:, free]


def solve(mat: np.ndarray, target) -> np.ndarray | None:
    """One integer solution x of mat @ x = target, or None if insoluble."""
    target = np.array(target, dtype=object).reshape(-1)
    if mat.shape[1] == 0:
        return np.zeros(0, dtype=object) if not target.size or all(v == 0 for v in target) else None
    if mat.shape[0] == 0:
        return np.zeros(mat.shape[1], dtype=object)
    S, D, T, Sinv, Tinv = smith_normal_form(mat)
    rhs = Sinv @ target
    diag = diagonal(D)
    y = np.zeros(mat.shape[1], dtype=object)
    for i in range(mat.shape[0]):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if rhs[i] != 0:
                return None
        else:
            if rhs[i] % d:
                return None
            y[i] = rhs[i] // d
    return Tinv @ y
