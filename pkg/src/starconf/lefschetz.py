"""Weak Lefschetz checks for Artinian sums of star-configuration ideals.

A = R/J has the weak Lefschetz property when multiplication by some linear
form L has maximal rank A_t -> A_(t+1) in every degree. Ranks are exact over
F_p, so a ``True`` verdict for one element is a proof for that element; a
``False`` verdict for a random element is only evidence.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

from starconf.config import DEFAULT_SEED
from starconf.errors import NotArtinianError, ParameterError, UndeterminedError
from starconf.fieldlinalg import rank
from starconf.gradedideal import (
    GradedIdeal,
    HilbertFunction,
    hf_sequence,
    hilbert,
    intersection_slice,
    quotient_mult_map,
    sum_slice,
)
from starconf.models import (
    DimensionCheck,
    DimensionReport,
    IdentityRecord,
    UnionHfReport,
    WlpDegree,
    WlpReport,
)
from starconf.polyring import HomogeneousForm, form_stream, random_form, to_text
from starconf.starconfig import StarConfigSpec, StarIdeal, build, sigma, sigma_formula_2s

logger = logging.getLogger(__name__)

# Child-stream key for random Lefschetz elements, disjoint from form streams.
ELEMENT_STREAM = 99

Status = Literal["theorem", "experimental"]


@dataclass(frozen=True)
class PairClass:
    """Which known result, if any, predicts the WLP for a pair."""

    status: Status
    note: str


def lefschetz_element(ideal: GradedIdeal, element: HomogeneousForm | str, seed: int) -> HomogeneousForm:
    if isinstance(element, HomogeneousForm):
        if element.degree != 1:
            raise ParameterError(f"Lefschetz element must be linear, got degree {element.degree}")
        return element
    if element != "random":
        raise ParameterError(f"element must be a linear form or 'random', got {element!r}")
    return random_form(ideal.ctx, 1, form_stream(seed, ELEMENT_STREAM))


def artinian_hilbert(ideal: GradedIdeal, t_max: int) -> list[int]:
    """H(R/J, t) from t = 0 through the first zero."""
    values = []
    for t in range(t_max + 1):
        h = hilbert(ideal, t)
        values.append(h)
        if h == 0:
            return values
    raise NotArtinianError(f"R/J has no vanishing degree up to t_max = {t_max}")


def wlp_check(
    ideal: GradedIdeal,
    element: HomogeneousForm | str = "random",
    t_max: int | None = None,
    seed: int = DEFAULT_SEED,
) -> WlpReport:
    """Rank of x L : A_t -> A_(t+1) for every t up to the socle degree."""
    if t_max is None:
        t_max = 2 * sum(ideal.generator_degrees)
    form = lefschetz_element(ideal, element, seed)
    values = artinian_hilbert(ideal, t_max)
    socle = len(values) - 2
    degrees = []
    for t in range(socle + 1):
        dim_t, dim_t1 = values[t], values[t + 1]
        r = rank(quotient_mult_map(ideal, form, t), ideal.ctx.modulus) if dim_t and dim_t1 else 0
        degrees.append(
            WlpDegree(t=t, dim_a_t=dim_t, dim_a_t1=dim_t1, rank=r, maximal=r == min(dim_t, dim_t1))
        )
    verdict = all(d.maximal for d in degrees)
    logger.info("WLP on %s with %s: %s", ideal.name or "J", to_text(form), verdict)
    return WlpReport(
        ideal_summary=ideal.name or f"ideal with generator degrees {ideal.generator_degrees}",
        element=to_text(form),
        degrees=degrees,
        verdict=verdict,
        socle_degree=socle,
        hilbert=values,
    )


def surjectivity_propagates(report: WlpReport) -> bool:
    """Once x L is onto in some degree, it stays onto in every later degree."""
    onto = [d.rank == d.dim_a_t1 for d in report.degrees]
    if True not in onto:
        return True
    return all(onto[onto.index(True):])


def sigma_criterion(config_hf: HilbertFunction, algebra_hf: list[int]) -> bool | None:
    """H_A(i) = H_X(i) for 0 <= i <= sigma(X) - 1; None if sigma is not reached."""
    try:
        bound = sigma(config_hf)
    except UndeterminedError:
        return None
    padded = list(algebra_hf) + [0] * max(0, bound - len(algebra_hf))
    return all(padded[i] == config_hf[i] for i in range(bound))


def _is_p2_codim2(spec: StarConfigSpec) -> bool:
    return spec.n == 2 and spec.r == 2 and spec.s >= 3 and max(spec.degrees) <= 2


def classify_pair(x: StarConfigSpec, y: StarConfigSpec) -> PairClass:
    """Name the result covering R/(I_X + I_Y), or mark the pair experimental."""
    linear = all(d == 1 for d in x.degrees + y.degrees)
    if linear and x.r == x.n and y.r == y.n and x.n == y.n:
        return PairClass("theorem", "linear configurations of type (n,s) and (n,t)")
    if _is_p2_codim2(x) and _is_p2_codim2(y):
        if sigma_formula_2s(x.degrees) != sigma_formula_2s(y.degrees):
            return PairClass("theorem", "P^2, degrees <= 2, distinct sigma")
        if all(d == 1 for d in x.degrees) or all(d == 1 for d in y.degrees):
            return PairClass("theorem", "P^2, one configuration linear, degrees <= 2")
    return PairClass("experimental", "open: no known result covers this pair")


def wlp_sum(
    x: StarIdeal,
    y: StarIdeal,
    element: HomogeneousForm | str = "random",
    t_max: int | None = None,
    seed: int = DEFAULT_SEED,
    prescribed: HomogeneousForm | None = None,
) -> WlpReport:
    """WLP of R/(I_X + I_Y), with the sigma criterion for both configurations.

    ``prescribed`` reruns the check with a fixed element (the extra linear
    form of a (2, s+1) configuration) and attaches it as ``element_check``.
    """
    if x.ctx != y.ctx:
        raise ParameterError("configurations live in different rings")
    if t_max is None:
        t_max = 2 * (x.spec.total_degree + y.spec.total_degree)
    ideal = x.ideal.plus(y.ideal, name=f"I_X + I_Y, X = {x.spec.label()}; Y = {y.spec.label()}")
    report = wlp_check(ideal, element, t_max, seed)
    bound = len(report.hilbert) + 1
    criteria = [
        sigma_criterion(hf_sequence(star.ideal, max(bound, star.spec.default_t_max)), report.hilbert)
        for star in (x, y)
    ]
    known = [c for c in criteria if c is not None]
    klass = classify_pair(x.spec, y.spec)
    updates = {
        "configs": [x.spec.summary(), y.spec.summary()],
        "criterion_holds": any(known) if known else None,
        "status": klass.status,
        "note": klass.note,
    }
    if prescribed is not None:
        check = wlp_check(ideal, prescribed, t_max, seed)
        updates["element_check"] = check
        if prescribed in y.spec.forms or prescribed in x.spec.forms:
            updates["status"] = "theorem"
            updates["note"] = "P^2 pair (2,s), (2,s+1) sharing degrees; extra linear form is a Lefschetz element"
    return report.model_copy(update=updates)


def lefschetz_pair(s: int, ell: int, seed: int = DEFAULT_SEED, prime: int | None = None) -> tuple[StarIdeal, StarIdeal, HomogeneousForm]:
    """X of type (2, s) and Y of type (2, s+1) whose last form L is linear.

    Both use degrees 1 for the first ``ell`` forms and 2 for the rest; Y's
    first s forms are independent of X's.
    """
    pattern = _degree_pattern(s, ell)
    extra = {} if prime is None else {"prime": prime}
    x = build(StarConfigSpec(n=2, r=2, degrees=pattern, seed=seed, stream=0, **extra))
    y = build(StarConfigSpec(n=2, r=2, degrees=pattern + (1,), seed=seed, stream=1, **extra))
    return x, y, y.spec.forms[-1]


def _degree_pattern(s: int, ell: int) -> tuple[int, ...]:
    if s < 3 or not 0 <= ell < s:
        raise ParameterError(f"need s >= 3 and 0 <= ell < s, got s={s}, ell={ell}")
    return (1,) * ell + (2,) * (s - ell)


def union_dim(x: StarIdeal, y: StarIdeal, t: int) -> int:
    """dim (I_X ∩ I_Y)_t."""
    return intersection_slice([x.ideal, y.ideal], t).dim


def union_hf(x: StarIdeal, y: StarIdeal, t_max: int) -> HilbertFunction:
    """Hilbert function of the union, R/(I_X ∩ I_Y)."""
    ctx = x.ctx
    return HilbertFunction(tuple(ctx.dim(t) - union_dim(x, y, t) for t in range(t_max + 1)))


def sum_hf_identity(x: StarIdeal, y: StarIdeal, t: int) -> IdentityRecord:
    """H(R/(I_X+I_Y), t) against H_X(t) + H_Y(t) - H_(X u Y)(t)."""
    ctx = x.ctx
    lhs = ctx.dim(t) - sum_slice(x.ideal, y.ideal, t).dim
    rhs = hilbert(x.ideal, t) + hilbert(y.ideal, t) - (ctx.dim(t) - union_dim(x, y, t))
    return IdentityRecord(t=t, lhs=lhs, rhs=rhs, equal=lhs == rhs)


def union_hf_report(x: StarIdeal, y: StarIdeal, t_max: int) -> UnionHfReport:
    return UnionHfReport(
        configs=[x.spec.summary(), y.spec.summary()],
        union=list(union_hf(x, y, t_max).values),
        x=list(hf_sequence(x.ideal, t_max).values),
        y=list(hf_sequence(y.ideal, t_max).values),
        identity=[sum_hf_identity(x, y, t) for t in range(t_max + 1)],
    )


def _dim_check(label: str, degree: int, expected: int, actual: int) -> DimensionCheck:
    return DimensionCheck(label=label, degree=degree, expected=expected, actual=actual, equal=expected == actual)


def check_sum_dim_lemma(
    x: StarIdeal,
    y: StarIdeal,
    ell: int,
    extra: HomogeneousForm | None = None,
) -> DimensionReport:
    """Dimensions of (I_X + I_Y) in degrees 2s-ell-2 and 2s-ell-1.

    The second value is taken after appending a linear form L to Y's forms,
    which turns Y into a (2, s+1) configuration; L is random unless given.
    """
    for star in (x, y):
        spec = star.spec
        if spec.n != 2 or spec.r != 2:
            raise ParameterError("both configurations must be of type (2, s) in P^2")
    s = x.spec.s
    pattern = _degree_pattern(s, ell)
    if x.spec.degrees != pattern or y.spec.degrees != pattern:
        raise ParameterError(f"degrees must follow the pattern {pattern}")
    ctx = x.ctx
    if extra is None:
        extra = random_form(ctx, 1, form_stream(y.spec.seed, y.spec.stream, y.spec.attempt, s))
    y_ext = build(
        StarConfigSpec(n=2, r=2, degrees=pattern + (1,), forms=y.spec.forms + (extra,), prime=ctx.modulus),
        validate=False,
    )
    low, high = 2 * s - ell - 2, 2 * s - ell - 1
    checks = [
        _dim_check("dim (I_X + I_Y) with Y of type (2,s)", low, 2 * (s - ell), sum_slice(x.ideal, y.ideal, low).dim),
        _dim_check(
            "dim (I_X + I_Y) with Y of type (2,s+1)", high, 4 * s - 3 * ell, sum_slice(x.ideal, y_ext.ideal, high).dim
        ),
    ]
    return DimensionReport(
        configs=[x.spec.summary(), y.spec.summary(), y_ext.spec.summary()],
        checks=checks,
        passed=all(c.equal for c in checks),
    )


def check_union_vanishing(x: StarIdeal, y: StarIdeal, d: int) -> bool:
    """True iff (I_X ∩ I_Y) has nothing in degree d*s."""
    for star in (x, y):
        spec = star.spec
        if spec.n != 2 or spec.r != 2:
            raise ParameterError("both configurations must be of type (2, s) in P^2")
        if any(deg != d for deg in spec.degrees):
            raise ParameterError(f"all forms must have degree {d}")
    s = x.spec.s
    if s < 4 or y.spec.s != s or d < 2:
        raise ParameterError(f"need s >= 4 for both configurations and d >= 2, got s={s}, d={d}")
    return union_dim(x, y, d * s) == 0


def experiment_open_question(
    n: int,
    s: int,
    t_cfg: int,
    d: int,
    seed: int = DEFAULT_SEED,
    prime: int | None = None,
    t_max: int | None = None,
) -> WlpReport:
    """Probe the WLP of two (n,s), (n,t) configurations of degree-d forms.

    The verdict is data, never an assertion; the report is always marked
    experimental.
    """
    extra = {} if prime is None else {"prime": prime}
    x = build(StarConfigSpec.uniform(n, n, s, d, seed=seed, stream=0, **extra))
    y = build(StarConfigSpec.uniform(n, n, t_cfg, d, seed=seed, stream=1, **extra))
    report = wlp_sum(x, y, t_max=t_max, seed=seed)
    klass = classify_pair(x.spec, y.spec)
    note = "experimental probe of an open question"
    if klass.status == "theorem":
        note += f"; covered by a known result ({klass.note})"
    return report.model_copy(update={"status": "experimental", "note": note})

