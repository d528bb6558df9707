"""Tests for resolution module."""

import pytest

from starconf.errors import ParameterError
from starconf.gradedideal import GradedIdeal, hilbert
from starconf.polyring import RingContext, parse_form
from starconf.resolution import (
    BettiTable,
    KoszulBetti,
    alpha,
    betti_report,
    euler_hf,
    is_level,
    koszul_betti,
    predict_betti,
    projective_dimension,
    tables_match,
)
from starconf.resolution_format import betti_csv, betti_diagram
from starconf.starconfig import StarConfigSpec, build


class TestAlpha:
    """Multiplicities in the predicted resolution."""

    @pytest.mark.parametrize("r,s,step,expected", [(2, 4, 1, 1), (2, 4, 2, 3), (3, 5, 2, 3), (3, 5, 3, 6)])
    def test_values(self, r, s, step, expected):
        assert alpha(r, s, step) == expected

    def test_recurrence(self):
        for s in range(3, 8):
            for r in range(2, s):
                for step in range(2, r + 1):
                    assert alpha(r, s, step) == alpha(r - 1, s - 1, step - 1) + alpha(r, s - 1, step)

    def test_out_of_range(self):
        with pytest.raises(ParameterError):
            alpha(3, 2, 1)
        with pytest.raises(ParameterError):
            alpha(2, 4, 3)


class TestPrediction:
    """Closed-form Betti tables."""

    def test_linear_codim_two(self):
        table = predict_betti(2, (1, 1, 1, 1))
        assert table.entries == {(1, 3): 4, (2, 4): 3}
        assert table.length == 2
        assert is_level(table)

    def test_mixed_degrees(self):
        table = predict_betti(2, (1, 2, 2))
        # d = 5; step 1 shifts 5 - d_k, step 2 a single shift d with alpha = 2
        assert table.entries == {(1, 3): 2, (1, 4): 1, (2, 5): 2}

    def test_complete_intersection(self):
        table = predict_betti(3, (2, 2, 2))
        assert table.entries == {(1, 2): 3, (2, 4): 3, (3, 6): 1}
        assert table.rank(1) == 3
        assert table.max_shift == 6

    def test_r_above_s_rejected(self):
        with pytest.raises(ParameterError):
            predict_betti(4, (1, 1, 1))

    def test_negative_multiplicity_rejected(self):
        with pytest.raises(ParameterError):
            BettiTable(length=1, entries={(1, 2): -1})


class TestKoszulOracle:
    """Betti numbers computed from Koszul homology."""

    def test_principal_ideal(self):
        ctx = RingContext.projective(1)
        oracle = koszul_betti(GradedIdeal(ctx, (ctx.variable(0),)))
        assert oracle.get(0, 0) == 1
        assert [(e.step, e.shift, e.multiplicity) for e in oracle.as_entries()] == [(1, 1, 1)]

    def test_two_variables(self, p2):
        oracle = koszul_betti(GradedIdeal(p2, (p2.variable(0), p2.variable(1))))
        assert {(e.step, e.shift): e.multiplicity for e in oracle.as_entries()} == {(1, 1): 2, (2, 2): 1}
        assert projective_dimension(oracle) == 2

    def test_linear_star_in_p2(self, star):
        ideal = star(2, 2, (1, 1, 1)).ideal
        oracle = koszul_betti(ideal)
        assert {(e.step, e.shift): e.multiplicity for e in oracle.as_entries()} == {(1, 2): 3, (2, 3): 2}
        assert tables_match(predict_betti(2, (1, 1, 1)), oracle)

    def test_artinian_complete_intersection(self, p2):
        ideal = GradedIdeal(p2, tuple(parse_form(p2, f"x{i}^2") for i in range(3)))
        oracle = koszul_betti(ideal, j_max=6)
        assert projective_dimension(oracle) == 3
        assert oracle.get(3, 6) == 1

    def test_bounds_too_small(self):
        oracle = KoszulBetti(i_max=1, j_max=10)
        with pytest.raises(ParameterError):
            tables_match(predict_betti(2, (1, 1, 1)), oracle)


class TestEuler:
    """Hilbert functions forced by a Betti table."""

    def test_linear_codim_two(self):
        table = predict_betti(2, (1, 1, 1))
        assert [euler_hf(table, 2, t) for t in range(5)] == [1, 3, 3, 3, 3]

    def test_matches_rank_for_a_curve(self, star):
        ideal = star(3, 2, (1, 2, 2)).ideal
        table = predict_betti(2, (1, 2, 2))
        assert all(euler_hf(table, 3, t) == hilbert(ideal, t) for t in range(8))


class TestBettiReport:
    """The combined report."""

    def test_prediction_only(self):
        report = betti_report(StarConfigSpec.uniform(2, 2, 4))
        assert report.oracle is None
        assert report.match is None
        assert report.level

    @pytest.mark.slow
    @pytest.mark.parametrize("n,r,degrees", [(2, 2, (1, 2, 2)), (3, 2, (1, 1, 1)), (3, 3, (1, 1, 2, 2))])
    def test_verified(self, n, r, degrees):
        report = betti_report(StarConfigSpec(n=n, r=r, degrees=degrees), verify=True)
        assert report.match
        assert report.euler_consistent
        assert report.acm
        assert report.projective_dimension == r

    def test_powers_of_linear_forms(self):
        spec = StarConfigSpec(n=2, r=2, degrees=(2, 2, 2), kind="powers")
        report = betti_report(spec, verify=True)
        assert report.match


class TestFormatting:
    """Betti diagrams and CSV."""

    def test_csv_rows(self):
        csv_text = betti_csv(predict_betti(2, (1, 1, 1, 1)).as_entries())
        assert csv_text.splitlines() == ["step,shift,multiplicity", "1,3,4", "2,4,3"]

    def test_diagram_mentions_every_multiplicity(self):
        diagram = betti_diagram(predict_betti(2, (1, 1, 1, 1)).as_entries())
        assert "4" in diagram
        assert "3" in diagram


def test_build_used_for_oracle_is_deterministic():
    spec = StarConfigSpec.uniform(2, 2, 3)
    a = koszul_betti(build(spec).ideal)
    b = koszul_betti(build(spec).ideal)
    assert a == b
