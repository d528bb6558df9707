"""Star-configuration ideals of type (r, s) and the closed formulas around them.

A star-configuration of type (r, s) in P^n is cut out by the intersection of
all ideals (F_i1, ..., F_ir) over r-subsets of s general forms. Its ideal is
generated by the products of s - r + 1 of the forms, one product for every
omitted (r-1)-subset; those products are assembled directly, never by division.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import comb, prod
from pathlib import Path

import numpy as np
import yaml

from starconf.config import DEFAULT_PRIME, DEFAULT_SEED
from starconf.errors import HypothesisViolation, ParameterError, UndeterminedError
from starconf.fieldlinalg import rank
from starconf.gradedideal import (
    GradedIdeal,
    HilbertFunction,
    IdealSlice,
    hilbert,
    intersection_slice,
    slice_contains,
    slices_equal,
)
from starconf.models import BdlRecord, BdlReport, ConfigSummary, IntersectionReport, SliceCheck
from starconf.polyring import (
    HomogeneousForm,
    RingContext,
    coordinate_vector,
    form_stream,
    forms_digest,
    from_json_pairs,
    parse_form,
    power,
    product,
    random_form,
    to_text,
)

logger = logging.getLogger(__name__)

KINDS = ("general", "powers", "products")


def realize_forms(
    ctx: RingContext,
    degrees: Sequence[int],
    kind: str = "general",
    seed: int = DEFAULT_SEED,
    stream: int = 0,
    attempt: int = 0,
) -> tuple[HomogeneousForm, ...]:
    """Sample F_1..F_s, one child RNG stream per form index.

    ``general`` draws every coefficient; ``powers`` takes L_i^d_i and
    ``products`` a product of d_i linear forms, L's general.
    """
    if kind not in KINDS:
        raise ParameterError(f"unknown form kind {kind!r}; expected one of {', '.join(KINDS)}")
    forms = []
    for i, d in enumerate(degrees):
        rng = form_stream(seed, stream, attempt, i)
        if kind == "general":
            forms.append(random_form(ctx, d, rng))
        elif kind == "powers":
            forms.append(power(random_form(ctx, 1, rng), d))
        else:
            forms.append(product(ctx, [random_form(ctx, 1, rng) for _ in range(d)]))
    return tuple(forms)


@dataclass(frozen=True)
class StarConfigSpec:
    """Parameters of a star-configuration plus its realized forms.

    Forms are sampled from ``(seed, stream, attempt, index)`` unless given
    explicitly. ``stream`` separates configurations living in the same ring;
    ``attempt`` counts reseeds.
    """

    n: int
    r: int
    degrees: tuple[int, ...]
    seed: int = DEFAULT_SEED
    prime: int = DEFAULT_PRIME
    kind: str = "general"
    forms: tuple[HomogeneousForm, ...] = ()
    stream: int = 0
    attempt: int = 0
    explicit: bool = field(default=False, init=False, compare=False)

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        s = len(degrees)
        if s < 2:
            raise ParameterError(f"a star-configuration needs s >= 2 forms, got {s}")
        if self.n < 1:
            raise ParameterError(f"ambient dimension must be >= 1, got {self.n}")
        if not 1 <= self.r <= min(s, self.n):
            raise ParameterError(f"need 1 <= r <= min(s, n) = {min(s, self.n)}, got r = {self.r}")
        if min(degrees) < 1:
            raise ParameterError("form degrees must be >= 1")
        if self.kind not in KINDS:
            raise ParameterError(f"unknown form kind {self.kind!r}")
        ctx = self.ctx
        forms = tuple(self.forms)
        if forms:
            if len(forms) != s:
                raise ParameterError(f"{len(forms)} forms given for {s} degrees")
            for i, (f, d) in enumerate(zip(forms, degrees)):
                if f.ctx != ctx:
                    raise ParameterError(f"form {i + 1} lives in a different ring")
                if f.degree != d or f.is_zero():
                    raise ParameterError(f"form {i + 1} must be a nonzero form of degree {d}")
            object.__setattr__(self, "explicit", True)
        else:
            forms = realize_forms(ctx, degrees, self.kind, self.seed, self.stream, self.attempt)
        object.__setattr__(self, "forms", forms)

    @classmethod
    def uniform(cls, n: int, r: int, s: int, degree: int = 1, **kwargs) -> StarConfigSpec:
        """All s forms of the same degree."""
        return cls(n=n, r=r, degrees=(degree,) * s, **kwargs)

    @property
    def ctx(self) -> RingContext:
        return RingContext.projective(self.n, self.prime)

    @property
    def s(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def default_t_max(self) -> int:
        return self.total_degree + self.n + 1

    def reseed(self) -> StarConfigSpec:
        """Same parameters, fresh forms from the next attempt stream."""
        if self.explicit:
            raise ParameterError("explicit forms cannot be reseeded")
        return replace(self, forms=(), attempt=self.attempt + 1)

    def label(self) -> str:
        degs = ",".join(str(d) for d in self.degrees)
        return f"X({self.r},{self.s}) in P^{self.n}, degrees {degs}"

    def summary(self) -> ConfigSummary:
        return ConfigSummary(
            n=self.n,
            r=self.r,
            s=self.s,
            degrees=list(self.degrees),
            seed=self.seed,
            prime=self.prime,
            kind="explicit" if self.explicit else self.kind,
            forms=[to_text(f) for f in self.forms],
            forms_sha256=forms_digest(self.forms),
            reseeded=self.attempt > 0,
        )


@dataclass(frozen=True)
class StarIdeal:
    """The ideal of a star-configuration with its generator bookkeeping."""

    spec: StarConfigSpec
    ideal: GradedIdeal
    omitted: tuple[tuple[int, ...], ...]
    independent: bool = True

    @property
    def ctx(self) -> RingContext:
        return self.ideal.ctx

    @property
    def reseeded(self) -> bool:
        return self.spec.attempt > 0

    def generator_degrees(self) -> list[int]:
        return self.ideal.generator_degrees


def star_generators(
    forms: Sequence[HomogeneousForm], r: int
) -> list[tuple[tuple[int, ...], HomogeneousForm]]:
    """(omitted subset, product of the remaining forms) for each (r-1)-subset."""
    s = len(forms)
    if not 1 <= r <= s:
        raise ParameterError(f"need 1 <= r <= s = {s}, got r = {r}")
    ctx = forms[0].ctx
    out = []
    for omitted in itertools.combinations(range(s), r - 1):
        keep = [f for i, f in enumerate(forms) if i not in omitted]
        out.append((omitted, product(ctx, keep)))
    return out


def star_ideal(forms: Sequence[HomogeneousForm], r: int, name: str = "") -> GradedIdeal:
    """Star ideal of type (r, len(forms)) without the ambient-dimension check."""
    gens = star_generators(forms, r)
    return GradedIdeal(forms[0].ctx, tuple(g for _, g in gens), name=name)


def _generators_independent(spec: StarConfigSpec, ideal: GradedIdeal) -> bool:
    if len(ideal.generators) != comb(spec.s, spec.r - 1):
        return False
    if len(set(spec.degrees)) != 1:
        return True
    t = ideal.generators[0].degree
    matrix = np.vstack([coordinate_vector(g, t) for g in ideal.generators])
    return rank(matrix, spec.prime) == len(ideal.generators)


def build(spec: StarConfigSpec, validate: bool = True) -> StarIdeal:
    """Generate I_X; resample once when the genericity check fails."""
    current = spec
    while True:
        gens = star_generators(current.forms, current.r)
        ideal = GradedIdeal(current.ctx, tuple(g for _, g in gens), name=current.label())
        omitted = tuple(o for o, _ in gens)
        if not validate or _generators_independent(current, ideal):
            return StarIdeal(current, ideal, omitted)
        if current.explicit or current.attempt > spec.attempt:
            logger.warning("Generators of %s are linearly dependent", current.label())
            return StarIdeal(current, ideal, omitted, independent=False)
        logger.info("Generators of %s are dependent, reseeding", current.label())
        current = current.reseed()


@lru_cache(maxsize=64)
def component_ideals(spec: StarConfigSpec) -> tuple[GradedIdeal, ...]:
    """(F_i1, ..., F_ir) for every r-subset, in lexicographic subset order."""
    ctx = spec.ctx
    return tuple(
        GradedIdeal(ctx, tuple(spec.forms[i] for i in subset))
        for subset in itertools.combinations(range(spec.s), spec.r)
    )


def intersection_oracle(spec: StarConfigSpec, t: int) -> IdealSlice:
    """Degree-t piece of the intersection of all C(s, r) component ideals."""
    return intersection_slice(component_ideals(spec), t)


def verify_generators(star: StarIdeal, t_max: int | None = None) -> IntersectionReport:
    """Compare the generated ideal with the intersection oracle in every degree."""
    spec = star.spec
    t_max = spec.default_t_max if t_max is None else t_max
    checks = []
    for t in range(t_max + 1):
        generated = star.ideal.slice(t)
        oracle = intersection_oracle(spec, t)
        checks.append(
            SliceCheck(
                t=t,
                dim_generated=generated.dim,
                dim_oracle=oracle.dim,
                equal=generated.subspace == oracle.subspace,
            )
        )
    passed = all(c.equal for c in checks)
    if not passed:
        logger.warning("Generated ideal differs from the intersection for %s", spec.label())
    return IntersectionReport(config=spec.summary(), checks=checks, passed=passed)


def degree_points(spec: StarConfigSpec) -> int:
    """Number of points, sum over n-subsets of the product of their degrees."""
    if spec.r != spec.n:
        raise ParameterError(f"degree formula needs r = n, got r = {spec.r}, n = {spec.n}")
    return sum(prod(subset) for subset in itertools.combinations(spec.degrees, spec.n))


def generic_hf_linear(n: int, s: int, i: int) -> int:
    """min{C(s, n), C(i + n, n)}: the linear (n, s) configuration."""
    if not s >= n >= 2:
        raise ParameterError(f"need s >= n >= 2, got n = {n}, s = {s}")
    if i < 0:
        raise ParameterError(f"negative degree {i}")
    return min(comb(s, n), comb(i + n, n))


def generic_hf_2s_p2(degrees: Sequence[int], i: int) -> int:
    if len(degrees) < 3:
        raise ParameterError(f"need s >= 3 forms, got {len(degrees)}")
    if any(d not in (1, 2) for d in degrees):
        raise ParameterError("form degrees must be 1 or 2")
    if i < 0:
        raise ParameterError(f"negative degree {i}")
    points = sum(a * b for a, b in itertools.combinations(degrees, 2))
    return min(points, comb(i + 2, 2))


def sigma(hf: HilbertFunction | Sequence[int]) -> int:
    """Least i >= 1 with H(i-1) = H(i)."""
    values = hf.values if isinstance(hf, HilbertFunction) else tuple(hf)
    for i in range(1, len(values)):
        if values[i - 1] == values[i]:
            return i
    raise UndeterminedError(f"no plateau within t_max = {len(values) - 1}; extend the bound")


def sigma_formula_2s(degrees: Sequence[int]) -> int:
    """sigma of a (2, s) configuration in P^2: (sum of degrees) - 1."""
    if len(degrees) < 3:
        raise ParameterError(f"need s >= 3 forms, got {len(degrees)}")
    return sum(degrees) - 1


# --- basic double G-linkage -------------------------------------------------


def bdl_check(
    i_s: GradedIdeal,
    i_c: GradedIdeal | None,
    form: HomogeneousForm,
    t_max: int,
    target: GradedIdeal | None = None,
    config: ConfigSummary | None = None,
) -> BdlReport:
    """Check H(R/I', t) = H_S(t) - H_S(t-d) + H_C(t-d) for I' = F*I_C + I_S.

    ``i_c = None`` stands for the unit ideal (C empty, H_C = 0), which is what
    the construction needs when r = s.
    """
    ctx = i_s.ctx
    d = form.degree
    if d < 1:
        raise ParameterError("the linking form needs degree >= 1")
    if i_c is None:
        linked = GradedIdeal(ctx, (form,) + i_s.generators, name="F + I_S")
    else:
        for t in range(t_max + 1):
            if not slice_contains(i_c, i_s, t):
                raise HypothesisViolation(f"I_S is not contained in I_C in degree {t}")
        linked = GradedIdeal(
            ctx, tuple(form * g for g in i_c.generators) + i_s.generators, name="F*I_C + I_S"
        )

    def h_s(t: int) -> int:
        return hilbert(i_s, t) if t >= 0 else 0

    def h_c(t: int) -> int:
        if t < 0 or i_c is None:
            return 0
        return hilbert(i_c, t)

    records = []
    for t in range(t_max + 1):
        lhs = hilbert(linked, t)
        rhs = h_s(t) - h_s(t - d) + h_c(t - d)
        records.append(BdlRecord(t=t, lhs=lhs, rhs=rhs, equal=lhs == rhs))
    reproduces = None
    if target is not None:
        reproduces = all(slices_equal(linked, target, t) for t in range(t_max + 1))
    return BdlReport(
        config=config,
        form_degree=d,
        records=records,
        holds=all(r.equal for r in records),
        reproduces_star=reproduces,
    )


def linkage_instance(
    spec: StarConfigSpec,
) -> tuple[GradedIdeal, GradedIdeal | None, HomogeneousForm]:
    """(I_S, I_C, F_s) with S of type (r-1, s-1) and C of type (r, s-1)."""
    if spec.r < 2:
        raise ParameterError("linkage needs r >= 2")
    head = spec.forms[:-1]
    i_s = star_ideal(head, spec.r - 1, name="S")
    i_c = star_ideal(head, spec.r, name="C") if spec.r <= len(head) else None
    return i_s, i_c, spec.forms[-1]


def bdl_for_spec(spec: StarConfigSpec, t_max: int | None = None) -> BdlReport:
    """Link the (r, s) star ideal from its (r-1, s-1) and (r, s-1) pieces."""
    t_max = spec.total_degree + spec.n if t_max is None else t_max
    i_s, i_c, form = linkage_instance(spec)
    target = build(spec, validate=False).ideal
    return bdl_check(i_s, i_c, form, t_max, target=target, config=spec.summary())


# --- spec files ---------------------------------------------------------------


def spec_from_mapping(
    data: Mapping, seed: int = DEFAULT_SEED, prime: int = DEFAULT_PRIME, stream: int = 0
) -> StarConfigSpec:
    """Build a spec from a parsed YAML/JSON mapping; ``seed``, ``prime`` and ``stream`` are fallbacks."""
    try:
        n = int(data["n"])
        r = int(data["r"])
    except KeyError as exc:
        raise ParameterError(f"spec file is missing key {exc.args[0]!r}") from exc
    if "degrees" in data:
        degrees = tuple(int(d) for d in data["degrees"])
    elif "s" in data:
        degrees = (1,) * int(data["s"])
    else:
        raise ParameterError("spec file needs 'degrees' or 's'")
    if "s" in data and int(data["s"]) != len(degrees):
        raise ParameterError(f"s = {data['s']} does not match {len(degrees)} degrees")
    seed = int(data.get("seed", seed))
    prime = int(data.get("prime", prime))
    ctx = RingContext.projective(n, prime)
    forms: tuple[HomogeneousForm, ...] = ()
    if data.get("forms"):
        parsed = []
        for raw, d in zip(data["forms"], degrees):
            if isinstance(raw, str):
                parsed.append(parse_form(ctx, raw, degree=d))
            else:
                parsed.append(from_json_pairs(ctx, raw, degree=d))
        forms = tuple(parsed)
    return StarConfigSpec(
        n=n,
        r=r,
        degrees=degrees,
        seed=seed,
        prime=prime,
        kind=str(data.get("kind", "general")),
        forms=forms,
        stream=int(data.get("stream", stream)),
    )


def load_spec_file(
    path: str | Path, seed: int = DEFAULT_SEED, prime: int = DEFAULT_PRIME, stream: int = 0
) -> StarConfigSpec:
    """Read a YAML or JSON spec file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParameterError(f"cannot parse spec file {path}: {exc}") from exc
    if not isinstance(data, Mapping):
        raise ParameterError(f"spec file {path} must contain a mapping")
    return spec_from_mapping(data, seed=seed, prime=prime, stream=stream)


def dump_spec(spec: StarConfigSpec) -> dict:
    """Canonical spec mapping, realized forms included."""
    return {
        "n": spec.n,
        "r": spec.r,
        "s": spec.s,
        "degrees": list(spec.degrees),
        "seed": spec.seed,
        "prime": spec.prime,
        "kind": spec.kind,
        "stream": spec.stream,
        "forms": [to_text(f) for f in spec.forms],
    }
