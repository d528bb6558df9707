"""Exact dense linear algebra over a prime field F_p.

Matrices are ``numpy`` int64 arrays with entries in ``[0, p)``. The modulus is
kept below 2^31 so a product of two residues never leaves int64 range.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from starconf.errors import DimensionError, ParameterError

logger = logging.getLogger(__name__)

MAX_MODULUS = 2**31

# Deterministic Miller-Rabin witnesses, valid for every n < 3.4e14.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)


def is_prime(n: int) -> bool:
    """Deterministic primality test for moduli in the supported range."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_modulus(p: int) -> int:
    """Validate a field modulus and return it."""
    if not 2 <= p < MAX_MODULUS:
        raise ParameterError(f"modulus must lie in [2, 2^31), got {p}")
    if not is_prime(p):
        raise ParameterError(f"modulus {p} is not prime")
    return p


def as_matrix(entries, p: int, cols: int | None = None) -> np.ndarray:
    """Coerce nested sequences or arrays to a reduced int64 matrix.

    ``cols`` fixes the width of an empty matrix.
    """
    a = np.array(entries, dtype=np.int64)
    if a.size == 0:
        width = cols if cols is not None else (a.shape[1] if a.ndim == 2 else 0)
        return np.zeros((0 if a.ndim < 2 else a.shape[0], width), dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def _eliminate(matrix: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination on a copy; returns (echelon form, pivot columns)."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r, c:] = a[r, c:] * inv % p
        if reduced:
            targets = np.flatnonzero(a[:, c])
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.flatnonzero(a[r + 1:, c])
        if targets.size:
            factors = a[targets, c][:, None]
            a[targets, c:] = (a[targets, c:] - factors * a[r, c:]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(matrix: np.ndarray, p: int) -> tuple[np.ndarray, int]:
    """Reduced row-echelon form and rank. Zero rows are kept at the bottom."""
    reduced, pivots = _eliminate(matrix, p, reduced=True)
    return reduced, len(pivots)


def rref_pivots(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form truncated to its nonzero rows, with pivots."""
    reduced, pivots = _eliminate(matrix, p, reduced=True)
    return reduced[: len(pivots)], pivots


def rank(matrix: np.ndarray, p: int) -> int:
    """Rank over F_p by forward elimination only."""
    if matrix.size == 0:
        return 0
    # Eliminating along the shorter side touches fewer entries per pivot.
    if matrix.shape[0] > matrix.shape[1]:
        matrix = matrix.T
    _, pivots = _eliminate(matrix, p, reduced=False)
    return len(pivots)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Matrix product mod p without int64 overflow in the accumulation.

    ``a`` is split into 16-bit limbs so every partial sum stays below 2^63 for
    inner dimensions up to 2^16.
    """
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] >= 2**16:
        raise DimensionError("inner dimension too large for exact int64 product")
    lo = a & 0xFFFF
    hi = a >> 16
    part_hi = (hi @ b) % p
    part_lo = (lo @ b) % p
    return (part_hi * 65536 + part_lo) % p


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of F_p^ambient_dim held by its reduced row-echelon basis.

    The basis is canonical, so two subspaces are equal exactly when their
    bases are equal entrywise.
    """

    ambient_dim: int
    basis: np.ndarray
    modulus: int

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.basis]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.modulus == other.modulus
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.modulus, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"SubspaceBasis(dim={self.dim}, ambient_dim={self.ambient_dim})"


def span(vectors, ambient_dim: int, p: int) -> SubspaceBasis:
    """Echelonized basis of the row space of ``vectors``."""
    m = as_matrix(vectors, p, cols=ambient_dim)
    if m.shape[0] == 0:
        return zero_subspace(ambient_dim, p)
    if m.shape[1] != ambient_dim:
        raise DimensionError(f"vectors have length {m.shape[1]}, expected {ambient_dim}")
    basis, _ = rref_pivots(m, p)
    return SubspaceBasis(ambient_dim=ambient_dim, basis=basis, modulus=p)


def zero_subspace(ambient_dim: int, p: int) -> SubspaceBasis:
    return SubspaceBasis(
        ambient_dim=ambient_dim,
        basis=np.zeros((0, ambient_dim), dtype=np.int64),
        modulus=p,
    )


def full_space(ambient_dim: int, p: int) -> SubspaceBasis:
    return SubspaceBasis(
        ambient_dim=ambient_dim,
        basis=np.eye(ambient_dim, dtype=np.int64),
        modulus=p,
    )


def kernel_basis(matrix: np.ndarray, p: int) -> SubspaceBasis:
    """Basis of {v : M v = 0}; its dimension is cols - rank(M)."""
    cols = matrix.shape[1]
    reduced, pivots = rref_pivots(matrix, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if not free:
        return zero_subspace(cols, p)
    k = np.zeros((len(free), cols), dtype=np.int64)
    k[np.arange(len(free)), free] = 1
    if pivots:
        k[:, pivots] = (-reduced[:, free].T) % p
    return span(k, cols, p)


def _check_compatible(u: SubspaceBasis, w: SubspaceBasis) -> None:
    if u.ambient_dim != w.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {u.ambient_dim} vs {w.ambient_dim}")
    if u.modulus != w.modulus:
        raise DimensionError(f"moduli differ: {u.modulus} vs {w.modulus}")


def sum_bases(u: SubspaceBasis, w: SubspaceBasis) -> SubspaceBasis:
    """Echelonized basis of U + W."""
    _check_compatible(u, w)
    if w.dim == 0:
        return u
    if u.dim == 0:
        return w
    return span(np.vstack([u.basis, w.basis]), u.ambient_dim, u.modulus)


def intersect_bases(u: SubspaceBasis, w: SubspaceBasis) -> SubspaceBasis:
    """Echelonized basis of U ∩ W (Zassenhaus: rows [U|U] over [W|0])."""
    _check_compatible(u, w)
    n, p = u.ambient_dim, u.modulus
    if u.dim == 0 or w.dim == 0:
        return zero_subspace(n, p)
    block = np.zeros((u.dim + w.dim, 2 * n), dtype=np.int64)
    block[: u.dim, :n] = u.basis
    block[: u.dim, n:] = u.basis
    block[u.dim:, :n] = w.basis
    reduced, pivots = rref_pivots(block, p)
    tail = [i for i, c in enumerate(pivots) if c >= n]
    if not tail:
        return zero_subspace(n, p)
    return span(reduced[tail, n:], n, p)


def contains(u: SubspaceBasis, w: SubspaceBasis) -> bool:
    """True when W ⊆ U."""
    _check_compatible(u, w)
    if w.dim == 0:
        return True
    return sum_bases(u, w).dim == u.dim
