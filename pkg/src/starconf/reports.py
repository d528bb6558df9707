"""Single-configuration reports that combine several modules."""

from __future__ import annotations

from starconf.errors import UndeterminedError
from starconf.gradedideal import hf_sequence
from starconf.models import HilbertReport
from starconf.resolution import euler_hf, predict_betti
from starconf.starconfig import (
    StarConfigSpec,
    build,
    degree_points,
    generic_hf_2s_p2,
    generic_hf_linear,
    sigma,
)


def generic_prediction(spec: StarConfigSpec, t_max: int) -> list[int] | None:
    """Closed-form generic Hilbert function, when one is known for ``spec``."""
    if spec.r != spec.n:
        return None
    if all(d == 1 for d in spec.degrees) and spec.s >= spec.n >= 2:
        return [generic_hf_linear(spec.n, spec.s, i) for i in range(t_max + 1)]
    if spec.n == 2 and spec.s >= 3 and max(spec.degrees) <= 2:
        return [generic_hf_2s_p2(spec.degrees, i) for i in range(t_max + 1)]
    return None


def hilbert_report(spec: StarConfigSpec, t_max: int | None = None) -> HilbertReport:
    """Hilbert function by rank, with sigma, degree and closed-form predictions."""
    t_max = spec.default_t_max if t_max is None else t_max
    star = build(spec)
    hf = hf_sequence(star.ideal, t_max)
    try:
        sig = sigma(hf)
    except UndeterminedError:
        sig = None
    generic = generic_prediction(star.spec, t_max)
    table = predict_betti(spec.r, spec.degrees)
    return HilbertReport(
        config=star.spec.summary(),
        values=list(hf.values),
        sigma=sig,
        degree=degree_points(spec) if spec.r == spec.n else None,
        generic=generic,
        matches_generic=None if generic is None else generic == list(hf.values),
        predicted_from_betti=[euler_hf(table, spec.n, t) for t in range(t_max + 1)],
    )
