"""Tests for starconfig module."""

from math import comb

import pytest

from starconf.errors import HypothesisViolation, ParameterError, UndeterminedError
from starconf.gradedideal import GradedIdeal, hf_sequence
from starconf.polyring import RingContext, parse_form
from starconf.reports import generic_prediction, hilbert_report
from starconf.starconfig import (
    StarConfigSpec,
    bdl_check,
    bdl_for_spec,
    build,
    degree_points,
    dump_spec,
    generic_hf_2s_p2,
    generic_hf_linear,
    linkage_instance,
    load_spec_file,
    realize_forms,
    sigma,
    sigma_formula_2s,
    spec_from_mapping,
    star_generators,
    verify_generators,
)


class TestSpec:
    """Parameter validation and form sampling."""

    @pytest.mark.parametrize(
        "n,r,degrees",
        [
            (2, 2, (1,)),        # s < 2
            (0, 1, (1, 1)),      # n < 1
            (2, 3, (1, 1, 1)),   # r > n
            (3, 3, (1, 1)),      # r > s
            (2, 0, (1, 1)),      # r < 1
            (2, 2, (1, 0)),      # degree 0
        ],
    )
    def test_invalid_parameters(self, n, r, degrees):
        with pytest.raises(ParameterError):
            StarConfigSpec(n=n, r=r, degrees=degrees)

    def test_unknown_kind(self):
        with pytest.raises(ParameterError):
            StarConfigSpec(n=2, r=2, degrees=(1, 1), kind="monomial")

    def test_same_seed_same_forms(self):
        a = StarConfigSpec(n=2, r=2, degrees=(2, 2, 1), seed=5)
        b = StarConfigSpec(n=2, r=2, degrees=(2, 2, 1), seed=5)
        assert a.forms == b.forms
        assert a == b

    def test_streams_give_different_forms(self):
        a = StarConfigSpec(n=2, r=2, degrees=(1, 1, 1), stream=0)
        b = StarConfigSpec(n=2, r=2, degrees=(1, 1, 1), stream=1)
        assert a.forms != b.forms

    def test_prefix_stability(self):
        """Appending a degree keeps the earlier forms."""
        a = StarConfigSpec(n=2, r=2, degrees=(1, 2, 2), stream=1)
        b = StarConfigSpec(n=2, r=2, degrees=(1, 2, 2, 1), stream=1)
        assert b.forms[:3] == a.forms

    def test_powers_and_products(self, p2):
        powers = realize_forms(p2, (3,), kind="powers")
        products = realize_forms(p2, (2,), kind="products")
        assert powers[0].degree == 3
        assert products[0].degree == 2

    def test_reseed_draws_new_forms(self):
        spec = StarConfigSpec(n=2, r=2, degrees=(1, 1, 1))
        again = spec.reseed()
        assert again.attempt == 1
        assert again.forms != spec.forms
        assert again.summary().reseeded

    def test_explicit_forms_cannot_reseed(self, p2):
        forms = tuple(p2.variable(i) for i in range(3))
        spec = StarConfigSpec(n=2, r=2, degrees=(1, 1, 1), forms=forms)
        assert spec.explicit
        assert spec.summary().kind == "explicit"
        with pytest.raises(ParameterError):
            spec.reseed()

    def test_explicit_form_degree_checked(self, p2):
        with pytest.raises(ParameterError):
            StarConfigSpec(n=2, r=2, degrees=(2, 1), forms=(p2.variable(0), p2.variable(1)))

    def test_summary_provenance(self):
        summary = StarConfigSpec.uniform(2, 2, 3).summary()
        assert summary.s == 3
        assert len(summary.forms) == 3
        assert len(summary.forms_sha256) == 64


class TestGenerators:
    """The product generators and the intersection they describe."""

    def test_generator_count(self):
        star = build(StarConfigSpec.uniform(3, 3, 5, 1))
        assert len(star.ideal.generators) == comb(5, 2)
        assert star.generator_degrees() == [3] * 10
        assert star.independent

    def test_omitted_subsets_in_lex_order(self, p2):
        forms = tuple(p2.variable(i) for i in range(3))
        gens = star_generators(forms, 2)
        assert [o for o, _ in gens] == [(0,), (1,), (2,)]
        assert gens[0][1] == parse_form(p2, "x1 x2")

    def test_r_equal_one_is_the_product(self, p2):
        forms = tuple(p2.variable(i) for i in range(3))
        gens = star_generators(forms, 1)
        assert len(gens) == 1
        assert gens[0][1] == parse_form(p2, "x0 x1 x2")

    @pytest.mark.parametrize(
        "n,r,degrees",
        [(2, 2, (1, 1, 1)), (2, 2, (1, 2, 2)), (3, 2, (1, 1, 2)), (3, 3, (1, 1, 1, 1))],
    )
    def test_generated_ideal_equals_intersection(self, star, n, r, degrees):
        report = verify_generators(star(n, r, degrees))
        assert report.passed
        assert len(report.checks) == sum(degrees) + n + 2

    def test_dependent_explicit_forms_are_flagged(self, p2):
        x0 = p2.variable(0)
        spec = StarConfigSpec(n=2, r=2, degrees=(1, 1, 1), forms=(x0, x0, p2.variable(1)))
        assert not build(spec).independent


class TestClosedFormulas:
    """Degree, generic Hilbert functions and sigma."""

    def test_quadrics_in_p3(self):
        report = hilbert_report(StarConfigSpec.uniform(3, 3, 3, 2), t_max=5)
        assert report.values == [1, 4, 7, 8, 8, 8]
        assert report.degree == 8
        assert report.sigma == 4
        assert report.predicted_from_betti == report.values

    def test_quadric_config_in_p2(self):
        report = hilbert_report(StarConfigSpec.uniform(2, 2, 4, 2), t_max=7)
        assert report.values == [1, 3, 6, 10, 15, 21, 24, 24]
        assert report.sigma == 7
        assert report.matches_generic

    @pytest.mark.parametrize("degrees,expected", [((1, 1, 1), 3), ((2, 2, 2), 12), ((1, 2, 3), 11)])
    def test_degree_points_p2(self, degrees, expected):
        assert degree_points(StarConfigSpec(n=2, r=2, degrees=degrees)) == expected

    def test_degree_points_needs_r_equal_n(self):
        with pytest.raises(ParameterError):
            degree_points(StarConfigSpec(n=3, r=2, degrees=(1, 1, 1)))

    def test_generic_linear(self):
        assert [generic_hf_linear(2, 4, i) for i in range(4)] == [1, 3, 6, 6]
        assert [generic_hf_linear(3, 5, i) for i in range(4)] == [1, 4, 10, 10]

    def test_generic_linear_matches_rank(self, star):
        hf = hf_sequence(star(3, 3, (1, 1, 1, 1, 1)).ideal, 4)
        assert list(hf.values) == [generic_hf_linear(3, 5, i) for i in range(5)]

    def test_generic_2s(self):
        assert [generic_hf_2s_p2((1, 2, 2), i) for i in range(5)] == [1, 3, 6, 8, 8]
        with pytest.raises(ParameterError):
            generic_hf_2s_p2((1, 3, 2), 2)

    def test_generic_prediction_absent_for_curves(self):
        assert generic_prediction(StarConfigSpec.uniform(3, 2, 3), 4) is None

    def test_sigma_definition(self):
        assert sigma((1, 3, 6, 10, 15, 21, 24, 24)) == 7
        assert sigma([1, 1]) == 1
        with pytest.raises(UndeterminedError):
            sigma((1, 3, 6))

    @pytest.mark.parametrize("degrees", [(1, 1, 1), (1, 2, 2), (2, 2, 2, 2), (1, 1, 2, 2, 2)])
    def test_sigma_formula_matches_rank(self, star, degrees):
        hf = hf_sequence(star(2, 2, degrees).ideal, sum(degrees) + 1)
        assert sigma(hf) == sigma_formula_2s(degrees)

    def test_sigma_formula_value(self):
        assert sigma_formula_2s((2, 2, 2, 2)) == 7


class TestLinkage:
    """The Hilbert identity of a basic double link."""

    @pytest.mark.parametrize(
        "n,r,degrees",
        [(2, 2, (1, 1, 1)), (2, 2, (2, 1, 2)), (3, 2, (1, 1, 1, 1)), (3, 3, (1, 1, 1)), (3, 3, (2, 1, 1, 2))],
    )
    def test_identity_holds(self, n, r, degrees):
        report = bdl_for_spec(StarConfigSpec(n=n, r=r, degrees=degrees))
        assert report.holds
        assert report.reproduces_star

    def test_r_equal_s_links_with_unit_ideal(self):
        spec = StarConfigSpec.uniform(3, 3, 3)
        i_s, i_c, form = linkage_instance(spec)
        assert i_c is None
        assert bdl_for_spec(spec).holds

    def test_linkage_needs_r_at_least_two(self):
        with pytest.raises(ParameterError):
            linkage_instance(StarConfigSpec.uniform(2, 1, 3))

    def test_containment_is_checked(self, p2):
        i_s = GradedIdeal(p2, (p2.variable(0),))
        i_c = GradedIdeal(p2, (p2.variable(1),))
        with pytest.raises(HypothesisViolation):
            bdl_check(i_s, i_c, p2.variable(2), 3)


class TestSpecFiles:
    """YAML spec files."""

    def test_inline_forms(self, tmp_path):
        path = tmp_path / "spec.yaml"
        path.write_text("n: 2\nr: 2\ndegrees: [1, 1, 1]\nforms: ['x0', 'x1', 'x2']\n")
        spec = load_spec_file(path)
        assert spec.explicit
        assert spec.forms[2] == RingContext.projective(2).variable(2)

    def test_s_defaults_to_linear(self, tmp_path):
        path = tmp_path / "spec.yaml"
        path.write_text("n: 3\nr: 2\ns: 4\nseed: 9\n")
        spec = load_spec_file(path)
        assert spec.degrees == (1, 1, 1, 1)
        assert spec.seed == 9

    def test_stream_fallback(self):
        spec = spec_from_mapping({"n": 2, "r": 2, "s": 3}, stream=1)
        assert spec.stream == 1

    def test_missing_key(self):
        with pytest.raises(ParameterError):
            spec_from_mapping({"n": 2, "degrees": [1, 1]})

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "spec.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ParameterError):
            load_spec_file(path)

    def test_dump_reloads_same_forms(self):
        spec = StarConfigSpec(n=2, r=2, degrees=(1, 2, 2), seed=3)
        again = spec_from_mapping(dump_spec(spec))
        assert again.forms == spec.forms
