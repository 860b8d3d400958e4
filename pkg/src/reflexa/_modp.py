"""Exact linear algebra over GF(p) on int64 numpy arrays."""

from __future__ import annotations

import itertools

import numpy as np


def rref(A: np.ndarray, p: int):
    """Reduced row echelon form and pivot columns."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        others = np.nonzero(R[:, c])[0]
        for i in others:
            if i != r:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray, p: int) -> int:
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning ``{x : A x = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, c in enumerate(piv):
            out[k, c] = (-R[i, f]) % p
    return out


def solve(A: np.ndarray, b: np.ndarray, p: int):
    """One solution of ``A x = b`` or None."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.zeros(n, dtype=np.int64)
    R, piv = rref(np.hstack([A, b]), p)
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


def solve_many(A: np.ndarray, B: np.ndarray, p: int):
    """Solutions ``X`` with ``A X = B`` column by column, or None if any column fails."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    n, k = A.shape[1], B.shape[1]
    if k == 0:
        return np.zeros((n, 0), dtype=np.int64)
    R, piv = rref(np.hstack([A, B]), p)
    if any(c >= n for c in piv):
        return None
    X = np.zeros((n, k), dtype=np.int64)
    for i, c in enumerate(piv):
        X[c] = R[i, n:]
    return X


def inverse(A: np.ndarray, p: int):
    n = A.shape[0]
    if A.shape != (n, n):
        return None
    return solve_many(A, np.eye(n, dtype=np.int64), p) if rank(A, p) == n else None


def row_space_basis(A: np.ndarray, p: int) -> np.ndarray:
    if A.size == 0:
        return np.zeros((0, A.shape[1] if A.ndim == 2 else 0), dtype=np.int64)
    R, piv = rref(A, p)
    return R[: len(piv)]


def same_row_space(A: np.ndarray, B: np.ndarray, p: int) -> bool:
    a, b = row_space_basis(A, p), row_space_basis(B, p)
    return a.shape == b.shape and bool(np.all(a == b))


_PERMS: dict = {}


def batch_det(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack ``(N, m, m)`` via the Leibniz sum (small m only)."""
    N, m, _ = mats.shape
    if m == 0:
        return np.ones(N, dtype=np.int64)
    perms = _PERMS.get(m)
    if perms is None:
        perms = []
        for perm in itertools.permutations(range(m)):
            inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
            perms.append((perm, -1 if inv % 2 else 1))
        _PERMS[m] = perms
    total = np.zeros(N, dtype=np.int64)
    for perm, sign in perms:
        prod = np.ones(N, dtype=np.int64)
        for i, j in enumerate(perm):
            prod = prod * mats[:, i, j] % p
        total = (total + sign * prod) % p
    return total
