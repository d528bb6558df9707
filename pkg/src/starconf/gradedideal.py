"""Degreewise view of homogeneous ideals.

The degree-t piece I_t is the row space of the Macaulay matrix whose rows are
the products m*g of each generator g with the monomials m of degree t - deg g.
Hilbert functions, sums, intersections, and quotient coordinates are all read
off exact F_p ranks of these slices; no Groebner basis is ever computed.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from starconf.errors import ContextMismatchError, ParameterError
from starconf.fieldlinalg import (
    SubspaceBasis,
    contains,
    intersect_bases,
    span,
    sum_bases,
    zero_subspace,
)
from starconf.polyring import HomogeneousForm, Monomial, RingContext, monomial_basis, multiples_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealSlice:
    """I_t as an echelonized subspace of R_t."""

    degree: int
    subspace: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def codim(self) -> int:
        return self.subspace.ambient_dim - self.subspace.dim


@dataclass(frozen=True)
class HilbertFunction:
    """Values H(0), H(1), ..., H(t_max)."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, t: int) -> int:
        return self.values[t]

    def at(self, t: int) -> int:
        """H(t), with H = 0 in negative degrees."""
        if t < 0:
            return 0
        return self.values[t]

    @property
    def t_max(self) -> int:
        return len(self.values) - 1

    def as_row(self) -> str:
        """Ampersand-separated row, e.g. ``1 & 3 & 6 & 10``."""
        return " & ".join(str(v) for v in self.values)


@dataclass(frozen=True, eq=False)
class GradedIdeal:
    """A homogeneous ideal given by generators of positive degree.

    Slices are cached per ideal behind a lock, so one ideal may be shared by
    threads computing different degrees.
    """

    ctx: RingContext
    generators: tuple[HomogeneousForm, ...] = ()
    name: str = ""
    _cache: dict[int, IdealSlice] = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        for g in gens:
            if g.ctx != self.ctx:
                raise ContextMismatchError("generator from a different ring")
            if g.degree < 1:
                raise ParameterError("generators must have degree >= 1")
            if g.is_zero():
                raise ParameterError("generators must be nonzero")
        object.__setattr__(self, "generators", gens)

    def __getstate__(self) -> dict:
        # Locks do not pickle; the cache is rebuilt in the receiving process.
        return {"ctx": self.ctx, "generators": self.generators, "name": self.name}

    def __setstate__(self, state: dict) -> None:
        for key, value in state.items():
            object.__setattr__(self, key, value)
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_lock", threading.Lock())

    @property
    def generator_degrees(self) -> list[int]:
        return [g.degree for g in self.generators]

    def slice(self, t: int) -> IdealSlice:
        with self._lock:
            cached = self._cache.get(t)
        if cached is not None:
            return cached
        computed = _compute_slice(self, t)
        with self._lock:
            self._cache.setdefault(t, computed)
        return computed

    def hilbert(self, t: int) -> int:
        return hilbert(self, t)

    def plus(self, other: GradedIdeal, name: str = "") -> GradedIdeal:
        """The sum ideal, generated by both generator lists."""
        _check_same_ring(self, other)
        return GradedIdeal(self.ctx, self.generators + other.generators, name=name)


def _check_same_ring(*ideals: GradedIdeal) -> None:
    ctxs = {ideal.ctx for ideal in ideals}
    if len(ctxs) > 1:
        raise ContextMismatchError("ideals belong to different rings")


def _compute_slice(ideal: GradedIdeal, t: int) -> IdealSlice:
    if t < 0:
        raise ParameterError(f"negative degree {t}")
    ctx = ideal.ctx
    blocks = [multiples_matrix(g, t) for g in ideal.generators if g.degree <= t]
    if not blocks:
        return IdealSlice(t, zero_subspace(ctx.dim(t), ctx.modulus))
    return IdealSlice(t, span(np.vstack(blocks), ctx.dim(t), ctx.modulus))


def degree_slice(ideal: GradedIdeal, t: int) -> IdealSlice:
    """I_t: span of the monomial multiples of the generators in degree t."""
    return ideal.slice(t)


def hilbert(ideal: GradedIdeal, t: int) -> int:
    """H(R/I, t) = dim R_t - dim I_t."""
    return ideal.slice(t).codim


def hf_sequence(ideal: GradedIdeal, t_max: int) -> HilbertFunction:
    if t_max < 0:
        raise ParameterError(f"negative degree bound {t_max}")
    return HilbertFunction(tuple(hilbert(ideal, t) for t in range(t_max + 1)))


def sum_slice(i: GradedIdeal, j: GradedIdeal, t: int) -> IdealSlice:
    """(I + J)_t."""
    _check_same_ring(i, j)
    return IdealSlice(t, sum_bases(i.slice(t).subspace, j.slice(t).subspace))


def intersection_slice(ideals: Sequence[GradedIdeal], t: int) -> IdealSlice:
    """(I_1 ∩ ... ∩ I_k)_t; intersection of homogeneous ideals is degreewise."""
    if not ideals:
        raise ParameterError("need at least one ideal to intersect")
    _check_same_ring(*ideals)
    subspace = reduce(intersect_bases, (ideal.slice(t).subspace for ideal in ideals))
    return IdealSlice(t, subspace)


def slices_equal(i: GradedIdeal, j: GradedIdeal, t: int) -> bool:
    """True iff I_t = J_t (canonical bases compare entrywise)."""
    _check_same_ring(i, j)
    return i.slice(t).subspace == j.slice(t).subspace


def slice_contains(big: GradedIdeal, small: GradedIdeal, t: int) -> bool:
    """True iff small_t ⊆ big_t."""
    _check_same_ring(big, small)
    return contains(big.slice(t).subspace, small.slice(t).subspace)


# --- quotient coordinates -------------------------------------------------


def standard_columns(ideal: GradedIdeal, t: int) -> list[int]:
    """Columns of R_t that are not pivots of the echelonized I_t."""
    pivots = set(ideal.slice(t).subspace.pivots)
    return [c for c in range(ideal.ctx.dim(t)) if c not in pivots]


def quotient_basis(ideal: GradedIdeal, t: int) -> list[Monomial]:
    """Standard monomials whose cosets form a basis of (R/I)_t."""
    basis = monomial_basis(ideal.ctx, t)
    return [basis[c] for c in standard_columns(ideal, t)]


def normal_form_matrix(ideal: GradedIdeal, t: int) -> np.ndarray:
    """Matrix N with N @ coords(f) = coordinates of f + I_t in the standard basis.

    Shape (H(t), dim R_t). A pivot monomial reduces to minus the rest of its
    reduced row, restricted to the standard columns.
    """
    ctx = ideal.ctx
    p = ctx.modulus
    sub = ideal.slice(t).subspace
    std = standard_columns(ideal, t)
    nf = np.zeros((len(std), ctx.dim(t)), dtype=np.int64)
    if not std:
        return nf
    nf[np.arange(len(std)), std] = 1
    if sub.dim:
        nf[:, sub.pivots] = (-sub.basis[:, std].T) % p
    return nf


def variable_mult_maps(ideal: GradedIdeal, t: int) -> list[np.ndarray]:
    """Matrices of x_k : (R/I)_t -> (R/I)_{t+1}, one per variable."""
    ctx = ideal.ctx
    source = quotient_basis(ideal, t)
    nf = normal_form_matrix(ideal, t + 1)
    target = ctx.index(t + 1)
    maps = []
    for k in range(ctx.num_vars):
        cols = [target[m[:k] + (m[k] + 1,) + m[k + 1:]] for m in source]
        maps.append(nf[:, cols] if cols else np.zeros((nf.shape[0], 0), dtype=np.int64))
    return maps


def quotient_mult_map(ideal: GradedIdeal, form: HomogeneousForm, t: int) -> np.ndarray:
    """Matrix of multiplication by a linear form, (R/I)_t -> (R/I)_{t+1}."""
    if form.degree != 1:
        raise ParameterError(f"expected a linear form, got degree {form.degree}")
    if form.ctx != ideal.ctx:
        raise ContextMismatchError("form and ideal belong to different rings")
    p = ideal.ctx.modulus
    maps = variable_mult_maps(ideal, t)
    result = np.zeros_like(maps[0])
    for mono, c in form.coeffs.items():
        k = mono.index(1)
        result = (result + c * maps[k]) % p
    return result
