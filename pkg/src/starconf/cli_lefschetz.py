"""Two-configuration commands: wlp, union-hf, experiment."""

from __future__ import annotations

from dataclasses import replace

from starconf.cli_compute import load_run_config
from starconf.cli_utils import emit, fail, finish, resolve_spec
from starconf.config import Config
from starconf.errors import ParameterError, StarconfError
from starconf.starconfig import StarConfigSpec


def _pair(cfg: Config, x_args: tuple, y_args: tuple) -> tuple[StarConfigSpec, StarConfigSpec]:
    """Resolve X on stream 0 and Y on stream 1 in the same ring."""
    n, r, s, degrees, kind, spec_file = x_args
    x = resolve_spec(cfg, n, r, s, degrees, kind, spec_file, stream=0)
    y_r, y_s, y_degrees, y_kind, y_spec_file = y_args
    y = resolve_spec(cfg, x.n, y_r or x.r, y_s, y_degrees, y_kind, y_spec_file, stream=1)
    if (x.n, x.prime) != (y.n, y.prime):
        raise ParameterError("X and Y must live in the same ring")
    return x, y


def _with_extra_linear(spec: StarConfigSpec) -> StarConfigSpec:
    """Append one general linear form to the configuration."""
    if not spec.explicit:
        return replace(spec, degrees=spec.degrees + (1,), forms=())
    from starconf.polyring import form_stream, random_form

    extra = random_form(spec.ctx, 1, form_stream(spec.seed, spec.stream, spec.attempt, spec.s))
    return replace(spec, degrees=spec.degrees + (1,), forms=spec.forms + (extra,))


def handle_wlp(x_args, y_args, generators, element, extra_linear, t_max, seed, prime, fmt, output, verbose) -> None:
    """WLP of R/(I_X + I_Y), or of R/J for explicit ``generators``."""
    from starconf.gradedideal import GradedIdeal
    from starconf.lefschetz import wlp_check, wlp_sum
    from starconf.polyring import RingContext, parse_form
    from starconf.starconfig import build

    cfg = load_run_config(seed, prime, verbose)
    try:
        if generators:
            n = x_args[0]
            if n is None:
                raise ParameterError("--n is required with --generators")
            ctx = RingContext.projective(n, cfg.prime)
            gens = tuple(parse_form(ctx, g) for g in generators.split(";") if g.strip())
            ideal = GradedIdeal(ctx, gens, name=f"J = ({generators})")
            chosen = element if element == "random" else parse_form(ctx, element, degree=1)
            report = wlp_check(ideal, chosen, t_max, cfg.seed)
        else:
            x, y = _pair(cfg, x_args, y_args)
            if extra_linear:
                y = _with_extra_linear(y)
            x_star, y_star = build(x), build(y)
            chosen = element if element == "random" else parse_form(x.ctx, element, degree=1)
            prescribed = y_star.spec.forms[-1] if extra_linear else None
            report = wlp_sum(x_star, y_star, chosen, t_max, cfg.seed, prescribed=prescribed)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    if report.status == "experimental":
        finish(True)
    element_ok = report.element_check is None or report.element_check.verdict
    finish(report.verdict and element_ok)


def handle_union_hf(x_args, y_args, t_max, seed, prime, fmt, output, verbose) -> None:
    from starconf.lefschetz import union_hf_report
    from starconf.starconfig import build

    cfg = load_run_config(seed, prime, verbose)
    try:
        x, y = _pair(cfg, x_args, y_args)
        bound = max(x.default_t_max, y.default_t_max) if t_max is None else t_max
        report = union_hf_report(build(x), build(y), bound)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    finish(all(r.equal for r in report.identity))


def handle_experiment(n, s, t, d, t_max, seed, prime, fmt, output, verbose) -> None:
    """Probe an open case; the verdict is recorded, never asserted."""
    from starconf.lefschetz import experiment_open_question

    cfg = load_run_config(seed, prime, verbose)
    try:
        report = experiment_open_question(n, s, t, d, seed=cfg.seed, prime=cfg.prime, t_max=t_max)
    except StarconfError as e:
        fail(str(e))
    emit(report, fmt, output)
    finish(True)
