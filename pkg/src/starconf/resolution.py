"""Graded Betti tables of star-configuration ideals.

``predict_betti`` evaluates the closed formulas for the minimal free
resolution of a star ideal. ``koszul_betti`` is an independent oracle: it
computes dim Tor_i(R/I, k)_j as the homology of the Koszul complex on the
variables tensored with R/I, using only quotient slices and multiplication
by variables. Step l of the resolution of I is compared with Tor_l(R/I, k).
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from math import comb

import numpy as np

from starconf.errors import ParameterError
from starconf.fieldlinalg import rank
from starconf.gradedideal import GradedIdeal, hilbert, variable_mult_maps
from starconf.models import BettiEntry, BettiReport
from starconf.starconfig import StarConfigSpec, build

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """(step l, shift j) -> multiplicity for the resolution of I, l = 1..length."""

    length: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {key: m for key, m in self.entries.items() if m}
        if any(m < 0 for m in clean.values()):
            raise ParameterError("Betti multiplicities must be nonnegative")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def get(self, step: int, shift: int) -> int:
        return self.entries.get((step, shift), 0)

    def shifts(self, step: int) -> list[int]:
        return sorted(j for (l, j) in self.entries if l == step)

    def rank(self, step: int) -> int:
        return sum(m for (l, _), m in self.entries.items() if l == step)

    @property
    def max_shift(self) -> int:
        return max((j for _, j in self.entries), default=0)

    def as_entries(self) -> list[BettiEntry]:
        return [BettiEntry(step=l, shift=j, multiplicity=m) for (l, j), m in self.entries.items()]


@dataclass(frozen=True)
class KoszulBetti:
    """(i, j) -> dim Tor_i(R/I, k)_j for 0 <= i <= i_max, 0 <= j <= j_max."""

    i_max: int
    j_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def as_entries(self, min_step: int = 1) -> list[BettiEntry]:
        return [
            BettiEntry(step=i, shift=j, multiplicity=m)
            for (i, j), m in sorted(self.entries.items())
            if i >= min_step
        ]


def alpha(r: int, s: int, step: int) -> int:
    """Multiplicity attached to each (r - step)-subset shift at ``step``."""
    if not 1 <= step <= r <= s:
        raise ParameterError(f"need 1 <= step <= r <= s, got step={step}, r={r}, s={s}")
    return comb(s - r + step - 1, step - 1)


def predict_betti(r: int, degrees: tuple[int, ...] | list[int]) -> BettiTable:
    """Resolution of a type (r, s) star ideal from its form degrees.

    Step l carries alpha(r, s, l) copies of R(-(d - sum of d_k over S)) for every
    (r - l)-subset S, with d the sum of all degrees.
    """
    degrees = tuple(degrees)
    s = len(degrees)
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if r > s:
        raise ParameterError(f"r = {r} exceeds s = {s}")
    d = sum(degrees)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for step in range(1, r + 1):
        mult = alpha(r, s, step)
        for subset in itertools.combinations(degrees, r - step):
            entries[(step, d - sum(subset))] += mult
    return BettiTable(length=r, entries=dict(entries))


def _koszul_differential(
    maps: list[np.ndarray], step: int, num_vars: int, p: int
) -> np.ndarray:
    """d_step : wedge^step (x) A_q -> wedge^(step-1) (x) A_(q+1) in block form."""
    h_src = maps[0].shape[1]
    h_tgt = maps[0].shape[0]
    sources = list(itertools.combinations(range(num_vars), step))
    targets = {t: k for k, t in enumerate(itertools.combinations(range(num_vars), step - 1))}
    matrix = np.zeros((len(targets) * h_tgt, len(sources) * h_src), dtype=np.int64)
    for col, subset in enumerate(sources):
        for pos, var in enumerate(subset):
            row = targets[subset[:pos] + subset[pos + 1:]]
            block = maps[var] if pos % 2 == 0 else (-maps[var]) % p
            matrix[row * h_tgt:(row + 1) * h_tgt, col * h_src:(col + 1) * h_src] = block
    return matrix


def koszul_betti(ideal: GradedIdeal, i_max: int | None = None, j_max: int | None = None) -> KoszulBetti:
    """Betti numbers of R/I from Koszul homology, computed by exact ranks.

    Defaults: i_max = n + 1 and j_max = (largest generator degree) + n + 1.
    """
    ctx = ideal.ctx
    num_vars = ctx.num_vars
    p = ctx.modulus
    i_max = num_vars if i_max is None else i_max
    if j_max is None:
        j_max = max(ideal.generator_degrees, default=0) + num_vars
    if i_max < 0 or j_max < 0:
        raise ParameterError("oracle bounds must be nonnegative")

    hf = {q: hilbert(ideal, q) for q in range(j_max + 1)}
    mult_maps: dict[int, list[np.ndarray]] = {}

    def diff_rank(step: int, j: int) -> int:
        # Rank of d_step in internal degree j; zero outside 1..num_vars.
        q = j - step
        if step < 1 or step > num_vars or q < 0 or not hf[q] or not hf[q + 1]:
            return 0
        if q not in mult_maps:
            mult_maps[q] = variable_mult_maps(ideal, q)
        return rank(_koszul_differential(mult_maps[q], step, num_vars, p), p)

    entries: dict[tuple[int, int], int] = {}
    for j in range(j_max + 1):
        ranks = {step: diff_rank(step, j) for step in range(1, min(i_max + 1, num_vars) + 1)}
        for i in range(min(i_max, num_vars) + 1):
            if j - i < 0:
                continue
            chain_dim = comb(num_vars, i) * hf[j - i]
            homology = chain_dim - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if homology:
                entries[(i, j)] = homology
        logger.debug("Koszul homology in degree %d done", j)
    return KoszulBetti(i_max=i_max, j_max=j_max, entries=entries)


def tables_match(predicted: BettiTable, oracle: KoszulBetti) -> bool:
    """True iff every step and shift agrees and the oracle vanishes past the length."""
    if oracle.i_max < predicted.length:
        raise ParameterError(f"oracle computed to i_max={oracle.i_max} < {predicted.length}")
    if oracle.j_max < predicted.max_shift:
        raise ParameterError(f"oracle computed to j_max={oracle.j_max} < {predicted.max_shift}")
    for i in range(1, oracle.i_max + 1):
        for j in range(oracle.j_max + 1):
            if oracle.get(i, j) != predicted.get(i, j):
                return False
    return True


def euler_hf(table: BettiTable, n: int, t: int) -> int:
    """Hilbert function of R/I forced by additivity along the resolution."""
    if t < 0:
        raise ParameterError(f"negative degree {t}")

    def dim_r(a: int) -> int:
        return comb(a + n, n) if a >= 0 else 0

    value = dim_r(t)
    for (step, shift), mult in table.entries.items():
        sign = 1 if step % 2 == 1 else -1
        value -= sign * mult * dim_r(t - shift)
    return value


def is_level(table: BettiTable) -> bool:
    return len(table.shifts(table.length)) == 1


def projective_dimension(oracle: KoszulBetti) -> int:
    return max((i for (i, _), m in oracle.entries.items() if m), default=0)


def betti_report(
    spec: StarConfigSpec,
    verify: bool = False,
    i_max: int | None = None,
    j_max: int | None = None,
) -> BettiReport:
    """Predicted table, and with ``verify`` the Koszul oracle and its checks.

    A mismatch is rerun once on reseeded forms before it is reported.
    """
    predicted = predict_betti(spec.r, spec.degrees)
    if not verify:
        return BettiReport(
            config=spec.summary(), predicted=predicted.as_entries(), level=is_level(predicted)
        )

    i_max = spec.n + 1 if i_max is None else i_max
    j_max = spec.total_degree + spec.n + 1 if j_max is None else j_max
    current = spec
    while True:
        star = build(current)
        oracle = koszul_betti(star.ideal, i_max, j_max)
        match = tables_match(predicted, oracle)
        if match or current.explicit or current.attempt > spec.attempt:
            break
        logger.info("Betti mismatch for %s, reseeding", current.label())
        current = current.reseed()

    t_bound = current.total_degree + current.n
    euler_ok = all(
        euler_hf(predicted, current.n, t) == hilbert(star.ideal, t) for t in range(t_bound + 1)
    )
    pd = projective_dimension(oracle)
    return BettiReport(
        config=current.summary(),
        predicted=predicted.as_entries(),
        oracle=oracle.as_entries(),
        match=match,
        level=is_level(predicted),
        projective_dimension=pd,
        acm=pd == current.r,
        euler_consistent=euler_ok,
    )
