from fractions import Fraction as F

import pytest

from monicheb import (
    IntPoly,
    bundled_table_path,
    format_poly,
    parse_poly,
    parse_table_file,
    run,
)
from monicheb.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED, EXIT_USAGE


@pytest.fixture
def witness_file(tmp_path):
    path = tmp_path / "t.poly"
    path.write_text("poly 1 -3 1\n")
    return str(path)


class TestCertifyCommand:
    def test_conjecture_certifies(self, witness_file):
        report = run(["certify", "--poly", witness_file, "--interval", "1/3", "2/5", "--conjecture"])
        assert report.exit_code == EXIT_OK
        assert "status=certified" in report.lines
        assert "tm_upper=1/3" in report.lines

    def test_explicit_bound_refuted(self, witness_file):
        report = run(["certify", "--poly", witness_file, "--interval", "1/3", "2/5", "--bound", "1/10"])
        assert report.exit_code == EXIT_REFUTED
        assert "status=refuted" in report.lines
        assert "refutation_point=1/3" in report.lines

    def test_negated_table_form_accepted(self, tmp_path):
        # leading coefficient -1 is flipped to the monic witness internally
        path = tmp_path / "neg.poly"
        path.write_text("poly -1 9 -20 -1\n")  # -(x**3 + 20x**2 - 9x + 1)
        report = run(["certify", "--poly", str(path), "--interval", "1/5", "2/9", "--conjecture"])
        assert report.exit_code == EXIT_OK
        assert "status=certified" in report.lines

    def test_non_monic_rejected(self, tmp_path):
        path = tmp_path / "bad.poly"
        path.write_text("poly 1 -3 2\n")
        report = run(["certify", "--poly", str(path), "--interval", "1/3", "2/5", "--conjecture"])
        assert report.exit_code == EXIT_USAGE

    def test_non_farey_interval_usage_error(self, witness_file):
        report = run(["certify", "--poly", witness_file, "--interval", "1/4", "1/2", "--conjecture"])
        assert report.exit_code == EXIT_USAGE

    def test_missing_file(self):
        report = run(["certify", "--poly", "/nonexistent.poly", "--interval", "1/3", "2/5", "--conjecture"])
        assert report.exit_code == EXIT_USAGE

    def test_depth_env_override(self, witness_file, monkeypatch):
        monkeypatch.setenv("MIC_MAX_DEPTH", "0")
        report = run(["certify", "--poly", witness_file, "--interval", "1/3", "2/5", "--conjecture"])
        # depth 0 prefilter falls back to the exact decision; still certified
        assert report.exit_code == EXIT_OK
        monkeypatch.setenv("MIC_MAX_DEPTH", "zz")
        report = run(["certify", "--poly", witness_file, "--interval", "1/3", "2/5", "--conjecture"])
        assert report.exit_code == EXIT_USAGE


class TestConstantCommand:
    def test_interval(self):
        report = run(["constant", "--interval", "0", "1/2"])
        assert report.exit_code == EXIT_OK
        assert "value=1/2" in report.lines

    def test_sqrt_interval(self):
        report = run(["constant", "--interval", "-1/sqrt(2)", "1/sqrt(2)"])
        assert "value=(1/2)^(1/2)" in report.lines

    def test_unknown_interval(self):
        report = run(["constant", "--interval", "1/3", "2/5"])
        assert report.exit_code == EXIT_INCONCLUSIVE
        assert "value=unknown" in report.lines

    def test_point(self):
        report = run(["constant", "--point", "3/7"])
        assert "value=1/7" in report.lines

    def test_set(self):
        report = run(["constant", "--set", "1/2,2/3"])
        assert "value=1/2" in report.lines


class TestFareyCommand:
    def test_order_three(self):
        report = run(["farey", "--order", "3"])
        assert report.exit_code == EXIT_OK
        fracs = [line for line in report.lines if line.startswith("fraction=")]
        assert len(fracs) == 5
        assert "count=5" in report.lines

    def test_pairs(self):
        report = run(["farey", "--order", "2", "--pairs"])
        assert report.lines == ["pair=0,1/2", "pair=1/2,1"]

    def test_bad_order(self):
        report = run(["farey", "--order", "0"])
        assert report.exit_code == EXIT_USAGE


class TestConstructCommand:
    def test_pair(self):
        report = run(["construct", "pair", "1/3", "2/5", "--degree", "4"])
        assert report.exit_code == EXIT_OK
        assert "poly 3 -27 81 -81 1" in report.lines
        assert "value@2/5=1/625" in report.lines
        assert "value@1/3=1/81" in report.lines

    def test_pair_bad_targets(self):
        report = run(["construct", "pair", "1/3", "2/5", "--degree", "4", "--targets", "2,1"])
        assert report.exit_code == EXIT_USAGE

    def test_triple(self):
        report = run(["construct", "triple", "0", "1", "--degree", "3", "--targets", "0,0,1"])
        assert report.exit_code == EXIT_OK
        assert "value@1/2=1/8" in report.lines

    def test_multi(self):
        report = run(["construct", "multi", "2/3", "--max-degree", "10"])
        assert report.exit_code == EXIT_OK
        assert "degree=2" in report.lines
        assert "poly 1 -2 1" in report.lines

    def test_multi_cap_exceeded(self):
        report = run(["construct", "multi", "1/4,3/4", "--max-degree", "100"])
        assert report.exit_code == EXIT_INCONCLUSIVE
        assert "minimal_degree=16384" in report.lines


class TestSearchCommand:
    def test_finds_witness(self):
        report = run(["search", "--interval", "1/3", "2/5", "--degree", "4", "--radius", "1"])
        assert report.exit_code == EXIT_OK
        assert "status=certified" in report.lines
        assert "tm_upper=1/3" in report.lines
        poly_lines = [l for l in report.lines if l.startswith("poly ")]
        assert len(poly_lines) == 1
        assert parse_poly(poly_lines[0]).is_monic

    def test_inadmissible_degree_usage_error(self):
        report = run(["search", "--interval", "1/3", "2/5", "--degree", "3"])
        assert report.exit_code == EXIT_USAGE


class TestVerifyTable:
    def test_bundled_table_certifies(self):
        report = run(["verify-table"])
        assert report.exit_code == EXIT_OK
        entry_lines = [l for l in report.lines if l.startswith("entry=")]
        assert len(entry_lines) == 73
        assert all(l.endswith("status=certified") for l in entry_lines)
        assert "total=73" in report.lines

    def test_bad_entry_flips_exit(self, tmp_path):
        path = tmp_path / "table.txt"
        path.write_text(
            "interval 1/3 2/5\npoly 1 -3 1\n\ninterval 1/3 2/5\npoly 0 0 1\n"
        )
        report = run(["verify-table", str(path)])
        assert report.exit_code == EXIT_REFUTED
        statuses = [l.rsplit("=", 1)[1] for l in report.lines if l.startswith("entry=")]
        assert statuses == ["certified", "refuted"]

    def test_file_order_preserved(self, tmp_path):
        path = tmp_path / "table.txt"
        path.write_text(
            "interval 1/4 2/7\npoly 1 -4 1\n\ninterval 1/3 2/5\npoly 1 -3 1\n"
        )
        report = run(["verify-table", str(path)])
        entries = [l for l in report.lines if l.startswith("entry=")]
        assert entries[0].startswith("entry=1/4..2/7")
        assert entries[1].startswith("entry=1/3..2/5")


class TestParseTableFile:
    def test_bundled_parses(self):
        entries = parse_table_file(bundled_table_path())
        assert len(entries) == 73
        assert all(e.poly.is_monic for e in entries)
        degrees = sorted({e.poly.degree for e in entries})
        assert degrees == [2, 3, 4, 5, 6, 8, 9, 12, 18]

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("# nothing here\n\n")
        assert parse_table_file(path) == []

    def test_missing_poly_reports_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("interval 1/3 2/5\n\ninterval 1/4 2/7\npoly 1 -4 1\n")
        with pytest.raises(ValueError) as exc:
            parse_table_file(path)
        assert ":3:" in str(exc.value)

    def test_trailing_interval_reports_line(self, tmp_path):
        path = tmp_path / "bad2.txt"
        path.write_text("interval 1/3 2/5\n")
        with pytest.raises(ValueError) as exc:
            parse_table_file(path)
        assert ":1:" in str(exc.value)

    def test_round_trip_polys(self):
        for entry in parse_table_file(bundled_table_path()):
            assert parse_poly(format_poly(entry.poly)) == entry.poly


class TestUsage:
    def test_unknown_subcommand(self):
        report = run(["frobnicate"])
        assert report.exit_code == EXIT_USAGE

    def test_no_args(self):
        report = run([])
        assert report.exit_code == EXIT_USAGE

    def test_command_echo(self):
        report = run(["farey", "--order", "1"])
        assert report.command == "farey --order 1"
