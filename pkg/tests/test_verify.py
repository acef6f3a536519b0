import json

import pytest

from polyprism.verify import (
    TABLE1,
    TABLE2,
    CheckResult,
    Erratum,
    VerificationReport,
    crosscheck,
    reproduce_table1,
    reproduce_table2,
    series_volume_projection,
)


class TestReportMechanics:
    def _sample(self):
        report = VerificationReport()
        report.check("b/later", "x", "y", "in", 1, 1)
        report.check("a/first", "x", "y", "in", 2, 3)
        return report

    def test_failures_and_exit_codes(self):
        report = self._sample()
        assert [r.check_id for r in report.failures()] == ["a/first"]
        assert not report.passed
        assert report.exit_code() == 2
        clean = VerificationReport(runs=[CheckResult("c", "x", "y", "i", 7, 7)])
        assert clean.exit_code() == 0
        with_erratum = VerificationReport(
            runs=clean.runs,
            errata=[Erratum("somewhere", "oracle", 1, 2, "note")],
        )
        assert with_erratum.exit_code() == 1

    def test_finalize_sorts_by_check_id(self):
        report = self._sample().finalize()
        assert [r.check_id for r in report.runs] == ["a/first", "b/later"]

    def test_json_schema(self):
        report = self._sample().finalize()
        report.errata.append(Erratum("loc", "src", 5, 6, "why"))
        payload = json.loads(report.to_json())
        assert set(payload) == {"runs", "errata"}
        run = payload["runs"][0]
        assert set(run) == {
            "check_id",
            "engine_a",
            "engine_b",
            "input",
            "value_a",
            "value_b",
            "passed",
        }
        erratum = payload["errata"][0]
        assert set(erratum) == {
            "paper_location",
            "expected_source",
            "observed",
            "paper_value",
            "note",
        }

    def test_format_table_marks_status(self):
        text = self._sample().format_table()
        assert "PASS" in text and "FAIL" in text
        assert text.endswith("2 checks, 1 failures, 0 errata\n")


class TestTable1:
    def test_fixture_shape(self):
        assert set(TABLE1) == {"diag", "p2dx2d", "sca", "scb", "total"}
        assert all(len(row) == 8 for row in TABLE1.values())

    def test_degenerate_column(self):
        report = reproduce_table1(1)
        assert report.passed
        by_id = {r.check_id: r for r in report.runs}
        assert by_id["table1/diag/n=1/series"].value_a == 1
        assert by_id["table1/total/n=1/series"].value_a == 1
        assert by_id["table1/sca/n=1/series"].value_a == 0

    def test_small_cube_passes(self):
        report = reproduce_table1(2)
        assert report.passed
        totals = [r for r in report.runs if r.check_id == "table1/total/n=2/oracle"]
        assert totals and totals[0].value_a == 32

    def test_full_reproduction(self):
        report = reproduce_table1(8)
        assert report.passed
        by_id = {r.check_id: r for r in report.runs}
        assert by_id["table1/diag/n=8/series"].value_a == 27263453288
        assert by_id["table1/total/n=8/series"].value_a == 27521161352

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            reproduce_table1(9)


class TestTable2:
    def test_fixture(self):
        assert TABLE2 == (1, 3, 15, 83, 450, 2295, 10834, 47175, 190407, 719243)

    def test_full_reproduction(self):
        report = reproduce_table2(10)
        assert report.passed
        assert len(report.runs) == 20  # formula + series per volume

    def test_projection_matches_fixture(self):
        assert series_volume_projection(10) == list(TABLE2)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            reproduce_table2(11)


class TestCrosscheck:
    def test_engine_subset_validation(self):
        with pytest.raises(ValueError):
            crosscheck(3, engines=("oracle", "psychic"))
        with pytest.raises(ValueError):
            crosscheck(1)

    def test_formulas_vs_series_to_ten(self):
        report = crosscheck(10, engines=("formulas", "series"))
        assert not report.failures()
        assert not report.errata  # the closed corner form matches the recurrence
        ids = {r.check_id for r in report.runs}
        assert "corner/closed-vs-recurrence/10x10x10" in ids
        assert "skewcross/formula-vs-series/3x3x3" in ids

    def test_small_all_engine_run_is_clean_and_deterministic(self):
        first = crosscheck(3)
        second = crosscheck(3)
        assert first.exit_code() == 0
        assert first.to_json() == second.to_json()

    def test_engine_subset_limits_checks(self):
        report = crosscheck(3, engines=("formulas",))
        assert all(
            r.engine_a == "formulas" and r.engine_b == "formulas" for r in report.runs
        )
