"""Tests for lefschetz module."""

import pytest

from starconf.errors import NotArtinianError, ParameterError
from starconf.gradedideal import GradedIdeal
from starconf.lefschetz import (
    artinian_hilbert,
    check_sum_dim_lemma,
    check_union_vanishing,
    classify_pair,
    experiment_open_question,
    lefschetz_element,
    lefschetz_pair,
    sigma_criterion,
    sum_hf_identity,
    surjectivity_propagates,
    union_hf,
    union_hf_report,
    wlp_check,
    wlp_sum,
)
from starconf.models import WlpDegree, WlpReport
from starconf.polyring import parse_form
from starconf.starconfig import StarConfigSpec


def squares(ctx):
    return GradedIdeal(ctx, tuple(parse_form(ctx, f"x{i}^2") for i in range(ctx.num_vars)))


class TestWlpCheck:
    """Maximal rank of multiplication by a linear form."""

    def test_squares_have_wlp(self, p2):
        report = wlp_check(squares(p2))
        assert report.hilbert == [1, 3, 3, 1, 0]
        assert report.socle_degree == 3
        assert report.verdict
        assert surjectivity_propagates(report)

    def test_bad_element_fails(self, p2):
        # x0 kills x0 in degree 1 modulo the squares
        report = wlp_check(squares(p2), element=parse_form(p2, "x0"))
        assert not report.verdict
        assert not report.degrees[1].maximal

    def test_element_must_be_linear(self, p2):
        with pytest.raises(ParameterError):
            lefschetz_element(squares(p2), parse_form(p2, "x0^2"), seed=1)
        with pytest.raises(ParameterError):
            lefschetz_element(squares(p2), "generic", seed=1)

    def test_not_artinian(self, p2):
        with pytest.raises(NotArtinianError):
            artinian_hilbert(GradedIdeal(p2, (p2.variable(0),)), 6)

    def test_json_aliases(self, p2):
        report = wlp_check(squares(p2))
        dumped = report.degrees[0].model_dump(by_alias=True)
        assert dumped["dimA_t"] == 1
        assert dumped["dimA_t1"] == 3


class TestSurjectivity:
    """Once onto, always onto."""

    def test_detects_relapse(self):
        degrees = [
            WlpDegree(t=0, dim_a_t=1, dim_a_t1=1, rank=1, maximal=True),
            WlpDegree(t=1, dim_a_t=1, dim_a_t1=1, rank=0, maximal=False),
        ]
        report = WlpReport(ideal_summary="J", element="x0", degrees=degrees)
        assert not surjectivity_propagates(report)


class TestClassification:
    """Which known result covers a pair."""

    def test_linear_pair_is_theorem(self):
        x = StarConfigSpec.uniform(2, 2, 4)
        y = StarConfigSpec.uniform(2, 2, 3, stream=1)
        assert classify_pair(x, y).status == "theorem"

    def test_distinct_sigma(self):
        x = StarConfigSpec(n=2, r=2, degrees=(2, 2, 2))
        y = StarConfigSpec(n=2, r=2, degrees=(1, 2, 2), stream=1)
        assert classify_pair(x, y).status == "theorem"

    def test_equal_sigma_quadrics_open(self):
        x = StarConfigSpec.uniform(2, 2, 4, 2)
        y = StarConfigSpec.uniform(2, 2, 4, 2, stream=1)
        assert classify_pair(x, y).status == "experimental"

    def test_sigma_criterion_undetermined(self):
        assert sigma_criterion((1, 3, 6), [1, 3, 6, 0]) is None


class TestWlpSum:
    """WLP for sums of two star-configuration ideals."""

    @pytest.mark.parametrize("n,s,t", [(2, 3, 3), (2, 4, 3), (3, 4, 3)])
    def test_linear_configurations(self, star, n, s, t):
        report = wlp_sum(star(n, n, (1,) * s), star(n, n, (1,) * t, stream=1))
        assert report.verdict
        assert report.status == "theorem"
        assert len(report.configs) == 2

    def test_one_linear_configuration(self, star):
        report = wlp_sum(star(2, 2, (1, 1, 1)), star(2, 2, (2, 2, 2), stream=1))
        assert report.verdict
        assert report.criterion_holds is not None

    @pytest.mark.parametrize("s,ell", [(3, 0), (3, 2), (4, 1)])
    def test_extra_linear_form_is_lefschetz(self, s, ell):
        x, y, form = lefschetz_pair(s, ell)
        assert y.spec.s == s + 1
        assert form == y.spec.forms[-1]
        report = wlp_sum(x, y, prescribed=form)
        assert report.status == "theorem"
        assert report.element_check is not None
        assert report.element_check.verdict

    def test_rings_must_match(self, star):
        x = star(2, 2, (1, 1, 1))
        y = star(3, 3, (1, 1, 1), stream=1)
        with pytest.raises(ParameterError):
            wlp_sum(x, y)


class TestUnion:
    """Hilbert functions of unions and the additivity identity."""

    def test_quadric_pair(self, star):
        x = star(2, 2, (2, 2, 2, 2))
        y = star(2, 2, (2, 2, 2, 2), stream=1)
        assert list(union_hf(x, y, 10).values) == [1, 3, 6, 10, 15, 21, 28, 36, 45, 48, 48]
        record = sum_hf_identity(x, y, 6)
        assert record.equal
        assert record.lhs == 24 + 24 - 28

    def test_report_identity_holds(self, star):
        report = union_hf_report(star(2, 2, (2, 2, 2)), star(2, 2, (2, 2), stream=1), 6)
        assert report.union == [1, 3, 6, 10, 15, 16, 16]
        assert all(r.equal for r in report.identity)

    def test_vanishing_in_top_degree(self, star):
        x = star(2, 2, (2, 2, 2, 2))
        y = star(2, 2, (2, 2, 2, 2), stream=1)
        assert check_union_vanishing(x, y, 2)

    def test_vanishing_needs_four_forms(self, star):
        x = star(2, 2, (2, 2, 2))
        y = star(2, 2, (2, 2, 2), stream=1)
        with pytest.raises(ParameterError):
            check_union_vanishing(x, y, 2)


class TestSumDimensions:
    """Dimensions of I_X + I_Y in the two degrees below the socle."""

    @pytest.mark.parametrize("s,ell", [(3, 0), (3, 1), (4, 0), (4, 2)])
    def test_dimensions(self, star, s, ell):
        pattern = (1,) * ell + (2,) * (s - ell)
        report = check_sum_dim_lemma(star(2, 2, pattern), star(2, 2, pattern, stream=1), ell)
        assert report.passed
        low, high = report.checks
        assert low.expected == 2 * (s - ell)
        assert high.expected == 4 * s - 3 * ell

    def test_pattern_enforced(self, star):
        with pytest.raises(ParameterError):
            check_sum_dim_lemma(star(2, 2, (2, 2, 2)), star(2, 2, (1, 2, 2), stream=1), 0)


class TestExperiment:
    """Open cases are reported, never asserted."""

    def test_always_experimental(self):
        report = experiment_open_question(2, 3, 3, 2)
        assert report.status == "experimental"
        assert report.degrees
        assert len(report.configs) == 2

    def test_covered_pair_mentions_known_result(self):
        report = experiment_open_question(2, 3, 3, 1)
        assert report.status == "experimental"
        assert "known result" in report.note
