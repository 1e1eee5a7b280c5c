"""Command line behavior: exit codes, flag placement, rendering modes.

Exit code contract: 0 flat / holds / probes pass, 1 not flat / fails,
2 not integrable, 3 usage or input problems.
"""

import json
import subprocess
import sys

import pytest

from scaleflat.cli.main import JobConfig, build_parser, main


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse paths
            code = exc.code
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


@pytest.fixture
def system_file(tmp_path):
    def write(f11, f12, f22):
        target = tmp_path / "input.sys"
        target.write_text("f11 = %s\nf12 = %s\nf22 = %s\n" % (f11, f12, f22))
        return str(target)

    return write


class TestCheckCommand:
    def test_flat_exits_zero(self, run, system_file):
        code, out, _ = run("check", system_file("0", "0", "0"))
        assert code == 0
        assert "verdict: Flat" in out

    def test_not_flat_exits_one_with_witness(self, run, system_file):
        code, out, _ = run("check", system_file("z1^2", "0", "0"))
        assert code == 1
        assert "witnesses: S5" in out

    def test_not_integrable_exits_two(self, run, system_file):
        code, out, _ = run("check", system_file("y", "0", "0"))
        assert code == 2
        assert "A = z2" in out

    def test_hyperbolic_example_is_flat(self, run, system_file):
        code, _, _ = run("check", system_file("z1/x1", "0", "0"))
        assert code == 0

    def test_json_verdict(self, run, system_file):
        code, out, _ = run("check", system_file("z1^2", "0", "0"), "--format", "json")
        doc = json.loads(out)
        assert code == doc["exit_code"] == 1
        assert doc["witnesses"] == ["S5"]


class TestDualCommand:
    def test_flat_family(self, run, tmp_path):
        doc = tmp_path / "family.txt"
        doc.write_text(
            "h = X1*x1 + X2*x2 + Y\ninverse.x1 = -Z1\ninverse.x2 = -Z2\n"
        )
        code, out, _ = run("dual", str(doc))
        assert code == 0
        assert "F11 = 0" in out


class TestVerifyStructureCommand:
    @pytest.mark.parametrize("level", ["9", "10", "11"])
    def test_zero_system_all_levels(self, run, system_file, level):
        code, out, _ = run(
            "verify-structure", "--level", level, system_file("0", "0", "0")
        )
        assert code == 0
        assert "holds" in out

    def test_level_11_rejects_non_integrable(self, run, system_file):
        code, out, _ = run(
            "verify-structure", "--level", "11", system_file("y", "0", "0")
        )
        assert code == 2
        assert "NotIntegrable" in out


class TestFibrationCommand:
    def test_sl4_dimension_line(self, run):
        code, out, _ = run(
            "fibration", "--group", "sl4", "--samples", "20", "--seed", "1"
        )
        assert code == 0
        assert "dim group" in out and "15" in out

    def test_compact_quotients(self, run):
        code, out, _ = run(
            "fibration", "--group", "compact", "--samples", "20", "--seed", "42"
        )
        assert code == 0
        assert "incidence_orbit" in out


class TestFlagPlacement:
    def test_format_before_or_after_subcommand(self, run, system_file):
        path = system_file("z1^2", "0", "0")
        _, before, _ = run("--format", "json", "check", path)
        _, after, _ = run("check", path, "--format", "json")
        assert before == after
        json.loads(before)

    def test_seed_threads_through(self):
        parser = build_parser()
        ns = parser.parse_args(["--seed", "7", "fibration", "--group", "sl4"])
        assert ns.seed == 7
        ns = parser.parse_args(["fibration", "--group", "sl4", "--seed", "7"])
        assert ns.seed == 7


class TestDeterminism:
    def test_json_reports_byte_identical(self, run, system_file):
        path = system_file("z1*z2", "0", "0")
        first = run("check", path, "--format", "json")
        second = run("check", path, "--format", "json")
        assert first == second

    def test_fibration_json_byte_identical(self, run):
        args = ("fibration", "--group", "scale", "--seed", "3", "--samples", "25",
                "--format", "json")
        assert run(*args) == run(*args)


class TestUsageErrors:
    def test_no_command(self, run):
        code, _, err = run()
        assert code == 3
        assert "COMMAND" in err

    def test_unknown_command(self, run):
        code, _, _ = run("frobnicate")
        assert code == 3

    def test_missing_file(self, run):
        code, _, err = run("check", "/nonexistent/input.sys")
        assert code == 3
        assert "cannot read" in err

    def test_parse_error_reports_line(self, run, tmp_path):
        doc = tmp_path / "broken.sys"
        doc.write_text("f11 = z1^2\nf12 = )(\nf22 = 0\n")
        code, _, err = run("check", str(doc))
        assert code == 3
        assert "line 2" in err

    def test_level_outside_verify_structure(self, run, system_file):
        code, _, _ = run("check", system_file("0", "0", "0"), "--level", "9")
        assert code == 3

    def test_group_required(self, run):
        code, _, _ = run("fibration")
        assert code == 3

    def test_negative_seed(self, run):
        code, _, _ = run("--seed", "-4", "selftest")
        assert code == 3

    def test_bad_level_value(self, run, system_file):
        code, _, _ = run(
            "verify-structure", "--level", "8", system_file("0", "0", "0")
        )
        assert code == 3


class TestJobConfig:
    def test_couplings(self):
        with pytest.raises(ValueError):
            JobConfig(command="check")  # input required
        with pytest.raises(ValueError):
            JobConfig(command="selftest", input="x.sys")
        with pytest.raises(ValueError):
            JobConfig(command="check", input="x.sys", level=9)
        with pytest.raises(ValueError):
            JobConfig(command="verify-structure", input="x.sys")  # level required
        with pytest.raises(ValueError):
            JobConfig(command="fibration")  # group required
        with pytest.raises(ValueError):
            JobConfig(command="selftest", group="sl4")

    def test_valid_configs(self):
        JobConfig(command="check", input="x.sys")
        JobConfig(command="verify-structure", input="x.sys", level=10)
        JobConfig(command="fibration", group="scale", seed=5, samples=50)
        JobConfig(command="selftest", quick=True)


def test_console_script_installed(tmp_path):
    doc = tmp_path / "zero.sys"
    doc.write_text("f11 = 0\nf12 = 0\nf22 = 0\n")
    proc = subprocess.run(
        [sys.executable, "-m", "scaleflat.cli", "check", str(doc)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "verdict: Flat" in proc.stdout
