"""Tests for output module."""

import json

import pytest

from starconf.models import (
    DegreeReport,
    HilbertReport,
    SuiteCell,
    SuiteReport,
    WlpDegree,
    WlpReport,
)
from starconf.output import ampersand_row, render, to_json, write_atomic, write_suite_dir
from starconf.resolution import betti_report
from starconf.starconfig import StarConfigSpec


@pytest.fixture
def summary():
    return StarConfigSpec.uniform(2, 2, 3).summary()


@pytest.fixture
def hilbert(summary):
    return HilbertReport(config=summary, values=[1, 3, 3, 3], sigma=2, degree=3, generic=[1, 3, 3, 3], matches_generic=True)


@pytest.fixture
def suite_report():
    cells = [
        SuiteCell(key="c01/generators/n2-r2-d11", criterion="c01", passed=True),
        SuiteCell(key="c12/open-question/n2-s3-t3-d2", criterion="c12", passed=True, experimental=True),
    ]
    return SuiteReport(grid="small", seed=1, prime=101, cells=cells, passed=True)


class TestText:
    """Human-readable layouts."""

    def test_ampersand_row(self):
        assert ampersand_row([1, 3, 6, 10]) == "1 & 3 & 6 & 10"

    def test_hilbert_text(self, hilbert):
        text = render(hilbert, "text")
        assert "H: 1 & 3 & 3 & 3" in text
        assert "sigma: 2" in text
        assert "degree: 3" in text

    def test_undetermined_sigma(self, summary):
        report = HilbertReport(config=summary, values=[1, 3, 6])
        assert "sigma: undetermined" in render(report)

    def test_betti_text(self):
        text = render(betti_report(StarConfigSpec.uniform(2, 2, 4)))
        assert "Predicted:" in text
        assert "level: True" in text

    def test_suite_text(self, suite_report):
        text = render(suite_report)
        assert "PASS c01/generators/n2-r2-d11" in text
        assert "experimental" in text
        assert "2 cells, 0 failed" in text

    def test_wlp_text_nests_element_check(self):
        degree = WlpDegree(t=0, dim_a_t=1, dim_a_t1=3, rank=1, maximal=True)
        inner = WlpReport(ideal_summary="J", element="x2", degrees=[degree], verdict=True)
        outer = WlpReport(ideal_summary="J", element="x0", degrees=[degree], verdict=True, element_check=inner)
        text = render(outer)
        assert "with prescribed element:" in text
        assert "  element: x2" in text


class TestJson:
    """Deterministic JSON."""

    def test_sorted_keys_and_newline(self, hilbert):
        text = to_json(hilbert)
        assert text.endswith("\n")
        data = json.loads(text)
        assert list(data) == sorted(data)
        assert data["values"] == [1, 3, 3, 3]

    def test_same_report_same_bytes(self, hilbert):
        assert to_json(hilbert) == to_json(hilbert.model_copy())

    def test_aliases_used(self):
        report = WlpReport(
            ideal_summary="J",
            element="x0",
            degrees=[WlpDegree(t=0, dim_a_t=1, dim_a_t1=3, rank=1, maximal=True)],
        )
        data = json.loads(render(report, "json"))
        assert data["degrees"][0]["dimA_t1"] == 3


class TestCsv:
    """CSV layouts."""

    def test_hilbert_csv(self, hilbert):
        assert render(hilbert, "csv").splitlines() == ["t,value", "0,1", "1,3", "2,3", "3,3"]

    def test_degree_csv(self, summary):
        assert render(DegreeReport(config=summary, degree=3), "csv") == "degree\n3\n"

    def test_suite_csv(self, suite_report):
        lines = render(suite_report, "csv").splitlines()
        assert lines[0] == "key,criterion,passed,reseeded,experimental"
        assert len(lines) == 3

    def test_unknown_format(self, hilbert):
        with pytest.raises(ValueError):
            render(hilbert, "xml")


class TestWriting:
    """Atomic files and suite directories."""

    def test_write_atomic(self, tmp_path):
        target = write_atomic(tmp_path / "sub" / "report.json", "{}\n")
        assert target.read_text() == "{}\n"
        assert not (tmp_path / "sub" / "report.json.tmp").exists()

    def test_write_suite_dir(self, tmp_path, suite_report, hilbert):
        cell_reports = {cell.key: hilbert for cell in suite_report.cells}
        index = write_suite_dir(suite_report, cell_reports, tmp_path / "out")
        assert index.name == "index.json"
        assert (tmp_path / "out" / "c01_generators_n2-r2-d11.json").exists()
        assert json.loads(index.read_text())["passed"] is True
