"""Homogeneous polynomials over F_p in n+1 variables.

Monomials are exponent tuples. Within a degree they are ordered by graded
reverse lexicographic order with x0 > x1 > ... > xn; that order fixes the
column indexing of every coordinate vector and Macaulay matrix.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from starconf.config import DEFAULT_PRIME
from starconf.errors import ContextMismatchError, ParameterError
from starconf.fieldlinalg import check_modulus, matmul_mod

Monomial = tuple[int, ...]

_TERM_RE = re.compile(r"x(\d+)(?:\^(\d+))?")
# Optional sign and integer coefficient, then the monomial part.
_COEFF_RE = re.compile(r"^(-?)\s*(\d+)?\s*\*?\s*(.*)$")


@lru_cache(maxsize=None)
def _grevlex_basis(num_vars: int, t: int) -> tuple[Monomial, ...]:
    monomials = [
        tuple(b - a - 1 for a, b in zip((-1,) + cuts, cuts + (t + num_vars - 1,)))
        for cuts in itertools.combinations(range(t + num_vars - 1), num_vars - 1)
    ]
    # Descending grevlex: ascending lex order on reversed exponent vectors.
    monomials.sort(key=lambda e: tuple(reversed(e)))
    return tuple(monomials)


@lru_cache(maxsize=None)
def _basis_index(num_vars: int, t: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(_grevlex_basis(num_vars, t))}


@dataclass(frozen=True)
class RingContext:
    """The ring F_p[x0, ..., xn] with grevlex column order."""

    num_vars: int
    modulus: int = DEFAULT_PRIME
    ordering: str = "grevlex"

    def __post_init__(self) -> None:
        if self.num_vars < 2:
            raise ParameterError(f"need at least two variables (n >= 1), got {self.num_vars}")
        if self.ordering != "grevlex":
            raise ParameterError(f"unsupported monomial ordering: {self.ordering}")
        check_modulus(self.modulus)

    @classmethod
    def projective(cls, n: int, modulus: int = DEFAULT_PRIME) -> RingContext:
        """Coordinate ring of P^n."""
        return cls(num_vars=n + 1, modulus=modulus)

    @property
    def n(self) -> int:
        return self.num_vars - 1

    def dim(self, t: int) -> int:
        """dim R_t = C(t+n, n); zero in negative degrees."""
        return comb(t + self.n, self.n) if t >= 0 else 0

    def basis(self, t: int) -> tuple[Monomial, ...]:
        return monomial_basis(self, t)

    def index(self, t: int) -> dict[Monomial, int]:
        return _basis_index(self.num_vars, t)

    def variable(self, i: int) -> HomogeneousForm:
        if not 0 <= i < self.num_vars:
            raise ParameterError(f"no variable x{i} in {self.num_vars} variables")
        exps = tuple(1 if k == i else 0 for k in range(self.num_vars))
        return HomogeneousForm(self, 1, {exps: 1})

    def one(self) -> HomogeneousForm:
        return HomogeneousForm(self, 0, {(0,) * self.num_vars: 1})

    def zero(self, degree: int) -> HomogeneousForm:
        return HomogeneousForm(self, degree, {})


@dataclass(frozen=True)
class HomogeneousForm:
    """A form of fixed degree as a sparse map monomial -> coefficient.

    Coefficients are reduced mod p on construction and zeros are dropped.
    """

    ctx: RingContext
    degree: int
    coeffs: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ParameterError(f"negative degree {self.degree}")
        p = self.ctx.modulus
        clean: dict[Monomial, int] = {}
        for mono, c in self.coeffs.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.ctx.num_vars or sum(mono) != self.degree or min(mono) < 0:
                raise ParameterError(f"monomial {mono} is not of degree {self.degree}")
            c = int(c) % p
            if c:
                clean[mono] = c
        object.__setattr__(self, "coeffs", clean)

    def __hash__(self) -> int:
        return hash((self.ctx, self.degree, tuple(sorted(self.coeffs.items()))))

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[Monomial, int]]:
        """Nonzero terms in grevlex order, largest first."""
        index = self.ctx.index(self.degree)
        return sorted(self.coeffs.items(), key=lambda item: index[item[0]])

    def __add__(self, other: HomogeneousForm) -> HomogeneousForm:
        _check_same(self, other)
        if self.degree != other.degree:
            raise ParameterError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, 0) + c
        return HomogeneousForm(self.ctx, self.degree, out)

    def __neg__(self) -> HomogeneousForm:
        return self.scale(-1)

    def __sub__(self, other: HomogeneousForm) -> HomogeneousForm:
        return self + (-other)

    def __mul__(self, other: HomogeneousForm) -> HomogeneousForm:
        return multiply(self, other)

    def scale(self, c: int) -> HomogeneousForm:
        return HomogeneousForm(self.ctx, self.degree, {m: v * c for m, v in self.coeffs.items()})

    def __str__(self) -> str:
        return to_text(self)


def _check_same(f: HomogeneousForm, g: HomogeneousForm) -> None:
    if f.ctx != g.ctx:
        raise ContextMismatchError("forms belong to different rings")


def monomial_basis(ctx: RingContext, t: int) -> tuple[Monomial, ...]:
    """Degree-t monomials in descending grevlex order; C(t+n, n) of them."""
    if t < 0:
        raise ParameterError(f"negative degree {t}")
    return _grevlex_basis(ctx.num_vars, t)


def multiply(f: HomogeneousForm, g: HomogeneousForm) -> HomogeneousForm:
    """Product of two forms; degrees add."""
    _check_same(f, g)
    p = f.ctx.modulus
    out: dict[Monomial, int] = {}
    for m1, c1 in f.coeffs.items():
        for m2, c2 in g.coeffs.items():
            mono = tuple(a + b for a, b in zip(m1, m2))
            out[mono] = (out.get(mono, 0) + c1 * c2) % p
    return HomogeneousForm(f.ctx, f.degree + g.degree, out)


def product(ctx: RingContext, forms: Iterable[HomogeneousForm]) -> HomogeneousForm:
    """Product of a sequence of forms; the empty product is 1."""
    result = ctx.one()
    for f in forms:
        result = multiply(result, f)
    return result


def power(f: HomogeneousForm, k: int) -> HomogeneousForm:
    return product(f.ctx, [f] * k)


def form_stream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for the child stream keyed by (seed, *key)."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def random_form(ctx: RingContext, d: int, rng: np.random.Generator) -> HomogeneousForm:
    """A degree-d form with independent uniform coefficients in [0, p)."""
    if d < 1:
        raise ParameterError(f"random forms need degree >= 1, got {d}")
    basis = monomial_basis(ctx, d)
    while True:
        values = rng.integers(0, ctx.modulus, size=len(basis), dtype=np.int64)
        if values.any():
            break
    return HomogeneousForm(ctx, d, {m: int(c) for m, c in zip(basis, values) if c})


def coordinate_vector(f: HomogeneousForm, t: int) -> np.ndarray:
    """Dense coefficient vector of f in the grevlex basis of R_t."""
    if f.degree != t:
        raise ParameterError(f"form has degree {f.degree}, expected {t}")
    index = f.ctx.index(t)
    v = np.zeros(f.ctx.dim(t), dtype=np.int64)
    for mono, c in f.coeffs.items():
        v[index[mono]] = c
    return v


def from_coordinate_vector(ctx: RingContext, vector: Sequence[int], t: int) -> HomogeneousForm:
    basis = monomial_basis(ctx, t)
    if len(vector) != len(basis):
        raise ParameterError(f"vector has length {len(vector)}, expected {len(basis)}")
    return HomogeneousForm(ctx, t, {m: int(c) for m, c in zip(basis, vector) if int(c)})


def multiples_matrix(g: HomogeneousForm, t: int) -> np.ndarray:
    """Rows are coordinate vectors of m*g for m in the basis of R_{t - deg g}."""
    ctx = g.ctx
    shift = t - g.degree
    if shift < 0:
        return np.zeros((0, ctx.dim(t)), dtype=np.int64)
    target = ctx.index(t)
    rows = monomial_basis(ctx, shift)
    m = np.zeros((len(rows), ctx.dim(t)), dtype=np.int64)
    terms = list(g.coeffs.items())
    for i, mono in enumerate(rows):
        for gm, c in terms:
            m[i, target[tuple(a + b for a, b in zip(mono, gm))]] = c
    return m


def multiplication_matrix(g: HomogeneousForm, t: int) -> np.ndarray:
    """Matrix of R_t -> R_{t+deg g}, v -> coordinates of g*v (acts on columns)."""
    return multiples_matrix(g, t + g.degree).T.copy()


def apply_matrix(matrix: np.ndarray, vector: np.ndarray, p: int) -> np.ndarray:
    return matmul_mod(matrix, vector.reshape(-1, 1), p).reshape(-1)


# --- serialization -------------------------------------------------------


def to_text(f: HomogeneousForm) -> str:
    """Render as ``c * x0^a0 x1^a1 + ...`` (zero exponents omitted)."""
    if f.is_zero():
        return "0"
    parts = []
    for mono, c in f.terms():
        powers = " ".join(f"x{i}^{e}" for i, e in enumerate(mono) if e)
        parts.append(f"{c} * {powers}" if powers else str(c))
    return " + ".join(parts)


def parse_form(ctx: RingContext, text: str, degree: int | None = None) -> HomogeneousForm:
    """Parse the text format produced by :func:`to_text`."""
    coeffs: dict[Monomial, int] = {}
    text = text.strip()
    if text in ("", "0"):
        if degree is None:
            raise ParameterError("the zero form needs an explicit degree")
        return ctx.zero(degree)
    for term in text.split("+"):
        term = term.strip()
        sign, digits, mono_text = _COEFF_RE.match(term).groups()
        coeff_text = sign + (digits or "1")
        exps = [0] * ctx.num_vars
        consumed = _TERM_RE.sub("", mono_text).replace("*", "").strip()
        if consumed:
            raise ParameterError(f"cannot parse term {term!r}")
        for var, exp in _TERM_RE.findall(mono_text):
            i = int(var)
            if i >= ctx.num_vars:
                raise ParameterError(f"variable x{i} outside the ring")
            exps[i] += int(exp) if exp else 1
        mono = tuple(exps)
        coeffs[mono] = coeffs.get(mono, 0) + int(coeff_text.strip())
    degrees = {sum(m) for m in coeffs}
    if len(degrees) != 1:
        raise ParameterError(f"form is not homogeneous: {text!r}")
    found = degrees.pop()
    if degree is not None and degree != found:
        raise ParameterError(f"form has degree {found}, expected {degree}")
    return HomogeneousForm(ctx, found, coeffs)


def to_json_pairs(f: HomogeneousForm) -> list[list]:
    """JSON-ready list of [exponents, coefficient] pairs in grevlex order."""
    return [[list(mono), c] for mono, c in f.terms()]


def from_json_pairs(ctx: RingContext, pairs: Sequence, degree: int | None = None) -> HomogeneousForm:
    if not pairs:
        if degree is None:
            raise ParameterError("the zero form needs an explicit degree")
        return ctx.zero(degree)
    coeffs = {tuple(int(e) for e in exps): int(c) for exps, c in pairs}
    found = {sum(m) for m in coeffs}
    if len(found) != 1:
        raise ParameterError("form is not homogeneous")
    return HomogeneousForm(ctx, found.pop(), coeffs)


def forms_digest(forms: Sequence[HomogeneousForm]) -> str:
    """SHA-256 of the JSON serialization of a form list (audit hash)."""
    payload = json.dumps([to_json_pairs(f) for f in forms], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()
