import io
import json

import pytest

from polyprism.cli import EX_OVERFLOW, EX_USAGE, run
from polyprism.core import parse_polycubes


def _run(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


class TestCount:
    @pytest.mark.parametrize(
        "engine,expected",
        [("oracle", "32"), ("series", "32"), ("formula", "32")],
    )
    def test_cube_all_engines_agree(self, engine, expected):
        code, out = _run(["count", "--b", "2", "--k", "2", "--h", "2", "--engine", engine])
        assert code == 0
        assert out.strip() == expected

    def test_trivial_formula(self):
        code, out = _run(["count", "--b", "1", "--k", "1", "--h", "1", "--engine", "formula"])
        assert code == 0 and out.strip() == "1"

    def test_formula_refuses_thick_prisms(self, capsys):
        code, _ = _run(["count", "--b", "4", "--k", "4", "--h", "4", "--engine", "formula"])
        assert code == EX_USAGE
        assert "series" in capsys.readouterr().err

    def test_unknown_engine_is_usage_error(self):
        code, _ = _run(["count", "--b", "2", "--k", "2", "--h", "2", "--engine", "magic"])
        assert code == EX_USAGE

    def test_overflow_exit_code(self):
        code, _ = _run(["count", "--b", "1", "--k", "200", "--h", "200", "--engine", "formula"])
        assert code == EX_OVERFLOW


class TestTables:
    def test_table1_csv(self):
        code, out = _run(["table1", "--nmax", "2"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "row,n,engine,computed,reference,status"
        assert "total,2,oracle,32,32,PASS" in lines
        assert all(line.endswith("PASS") for line in lines[1:])

    def test_table2_csv(self):
        code, out = _run(["table2", "--nmax", "4"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,engine,computed,reference,status"
        assert "4,formula,83,83,PASS" in lines
        assert "4,series,83,83,PASS" in lines


class TestVerify:
    def test_writes_json_report_and_exits_clean(self, tmp_path):
        report_path = tmp_path / "report.json"
        code, out = _run(["verify", "--max-dim", "2", "--report", str(report_path)])
        assert code == 0
        assert "0 failures, 0 errata" in out
        payload = json.loads(report_path.read_text())
        assert set(payload) == {"runs", "errata"}
        assert payload["errata"] == []
        assert all(r["passed"] for r in payload["runs"])


class TestList:
    def test_streams_parseable_polycubes(self):
        code, out = _run(["list", "--b", "2", "--k", "2", "--h", "1"])
        assert code == 0
        shapes = parse_polycubes(out)
        assert len(shapes) == 4

    def test_family_filter(self):
        code, out = _run(
            ["list", "--b", "2", "--k", "3", "--h", "3", "--family", "TwoDxTwoD"]
        )
        assert code == 0
        assert len(parse_polycubes(out)) == 2


class TestClassify:
    def test_golden_csv(self):
        code, out = _run(["classify", "--b", "3", "--k", "3", "--h", "3"])
        assert code == 0
        assert out == (
            "family,count\n"
            "Diagonal,2271\n"
            "TwoDxTwoD,66\n"
            "SkewCrossA,48\n"
            "SkewCrossB,16\n"
        )


class TestExpand:
    def test_csv_to_stdout(self):
        code, out = _run(["expand", "--gf", "Stair", "--bounds", "1,1,1"])
        assert code == 0
        assert out == "b,k,h,coefficient\n1,1,1,1\n"

    def test_csv_to_file(self, tmp_path):
        target = tmp_path / "stair.csv"
        code, _ = _run(["expand", "--gf", "Stair", "--bounds", "2,2,2", "--out", str(target)])
        assert code == 0
        assert target.read_text().startswith("b,k,h,coefficient\n")

    def test_unknown_gf(self):
        code, _ = _run(["expand", "--gf", "Bogus", "--bounds", "2,2,2"])
        assert code == EX_USAGE

    def test_malformed_bounds(self):
        code, _ = _run(["expand", "--gf", "Stair", "--bounds", "2,2"])
        assert code == EX_USAGE


class TestUsage:
    def test_missing_subcommand(self):
        code, _ = _run([])
        assert code == EX_USAGE

    def test_unknown_flag(self):
        code, _ = _run(["count", "--sides", "3"])
        assert code == EX_USAGE
