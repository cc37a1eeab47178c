"""Tests for the bell-switch command line."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from bell_switch.cli import COMMANDS, build_parser, main

CHIRAL = """
name = "mini"

[loop]
kind = "chiral_modulated"
g0 = 0.1
Delta0 = 0.04
Gamma0 = 0.1
omega = "pi"

[integrator]
steps_per_period = 8000
samples = 200

[[grids]]
name = "aep"
axis_x = "gamma"
axis_y = "delta"
x_range = [0.0, 0.1]
y_range = [-0.05, 0.05]
nx = 21
ny = 21
fixed = { g = 0.1 }
alpha = -1.0
reference = [0.0, 0.0]

[encirclement]
plane = ["gamma", "delta"]
reference = [1e-4, 0.0]
"""


def _write(tmp_path: Path, text: str, name: str = "mini.toml") -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def _run(command: str, config: Path, out: Path, *extra: str) -> int:
    return main([command, "--config", str(config), "--out", str(out), "--display", "none", "--seed-label", "plus", *extra])


class TestParser:
    """Tests for build_parser."""

    def test_subcommands(self) -> None:
        """Test every command is reachable from the parser."""
        parser = build_parser()

        for name in COMMANDS:
            args = parser.parse_args([name, "--config", "fig1"])
            assert args.command == name
            assert args.out is None
            assert args.seed_label is None

    def test_config_required(self) -> None:
        """Test a missing --config is a usage error."""
        with pytest.raises(SystemExit) as exc_info:
            build_parser().parse_args(["spectrum"])

        assert exc_info.value.code == 2

    def test_display_choices(self) -> None:
        """Test unknown display formats are rejected."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["classify", "--config", "fig4", "--display", "html"])

    def test_help_states_float_formats(self) -> None:
        """Test the help text tells JSON and CSV float formats apart."""
        text = " ".join(build_parser().format_help().split())

        assert "shortest representation" in text
        assert "17 significant digits" in text


class TestSpectrumCommand:
    """Tests for the spectrum command."""

    def test_writes_artifacts(self, tmp_path: Path) -> None:
        """Test the grid, level sets, overlay, script and summary are written."""
        config = _write(tmp_path, CHIRAL)
        out = tmp_path / "out"

        assert _run("spectrum", config, out) == 0

        run = out / "mini"
        for name in ("aep.bsgrid", "aep_surface.csv", "aep_d_line.csv", "aep_loop.csv", "plot_aep.py", "spectrum.json"):
            assert (run / name).is_file(), name
        assert not (run / "aep_l_line.csv").exists()
        summary = json.loads((run / "spectrum.json").read_text())
        grid = summary["grids"][0]
        assert grid["min_gap"]["is_ep"] is False
        assert grid["level_sets"]["l_line"] is None
        assert summary["encirclement"]["winding_number"] == -1

    def test_formats_filter(self, tmp_path: Path) -> None:
        """Test only the requested artifact kinds are written."""
        config = _write(tmp_path, CHIRAL + '\n[output]\nformats = ["json"]\n')
        out = tmp_path / "out"

        assert _run("spectrum", config, out) == 0

        assert sorted(p.name for p in (out / "mini").iterdir()) == ["spectrum.json"]

    def test_expectation_mismatch(self, tmp_path: Path) -> None:
        """Test a wrong EP expectation exits with 5."""
        config = _write(tmp_path, CHIRAL + "\n[expect]\nis_ep = { aep = true }\n")
        out = tmp_path / "out"

        assert _run("spectrum", config, out) == 5
        assert json.loads((out / "mini" / "spectrum.json").read_text())["matches_expected"] is False

    def test_plane_mismatch(self, tmp_path: Path) -> None:
        """Test a loop leaving the grid plane exits with 3."""
        text = CHIRAL.replace('kind = "chiral_modulated"\ng0 = 0.1\nDelta0 = 0.04', 'kind = "symmetric"\ng0 = 0.01\nG0 = 0.2')
        text = text.replace("[encirclement]\nplane = [\"gamma\", \"delta\"]\nreference = [1e-4, 0.0]\n", "")
        config = _write(tmp_path, text)

        assert _run("spectrum", config, tmp_path / "out") == 3

    def test_no_grids(self, tmp_path: Path) -> None:
        """Test spectrum without grids is a configuration error."""
        text = CHIRAL.split("[[grids]]")[0]
        config = _write(tmp_path, text)

        assert _run("spectrum", config, tmp_path / "out") == 2


class TestEvolveCommand:
    """Tests for the evolve command."""

    def test_writes_records_and_script(self, tmp_path: Path) -> None:
        """Test one record per direction and a plotting script."""
        config = _write(tmp_path, CHIRAL)
        out = tmp_path / "out"

        assert _run("evolve", config, out) == 0

        run = out / "mini"
        assert (run / "evolve_plus_cw.csv").is_file()
        assert (run / "evolve_plus_ccw.csv").is_file()
        assert not (run / "evolve_minus_cw.csv").exists()
        assert "evolve_plus_ccw.csv" in (run / "plot_fidelity.py").read_text()
        rows = (run / "evolve_plus_ccw.csv").read_text().splitlines()
        assert len(rows) == 202

    def test_single_direction(self, tmp_path: Path) -> None:
        """Test directions = "cw" runs only the clockwise traversal."""
        config = _write(tmp_path, CHIRAL.replace('omega = "pi"', 'omega = "pi"\ndirections = "cw"'))
        out = tmp_path / "out"

        assert _run("evolve", config, out) == 0

        assert not (out / "mini" / "evolve_plus_ccw.csv").exists()


class TestClassifyCommand:
    """Tests for the classify command."""

    def test_report(self, tmp_path: Path) -> None:
        """Test the report carries the verdict and the diagnostics."""
        config = _write(tmp_path, CHIRAL + '\n[expect]\ntransfer_class = "symmetric_identity"\n')
        out = tmp_path / "out"

        assert _run("classify", config, out) == 0

        summary = json.loads((out / "mini" / "classify.json").read_text())
        (report,) = summary["reports"]
        assert report["verdict"]["class"] == "symmetric_identity"
        assert report["verdict"]["initial_label"] == "plus"
        assert report["matches_expected"] is True
        assert report["encirclement"]["winding_number"] == -1
        assert report["loop"]["kind"] == "chiral_modulated"
        assert set(report["directions"]) == {"cw", "ccw"}

    def test_expectation_mismatch(self, tmp_path: Path) -> None:
        """Test a contradicted expected class exits with 5."""
        config = _write(tmp_path, CHIRAL + '\n[expect]\ntransfer_class = "chiral"\n')

        assert _run("classify", config, tmp_path / "out") == 5

    def test_needs_both_directions(self, tmp_path: Path) -> None:
        """Test a one-direction loop cannot be classified."""
        config = _write(tmp_path, CHIRAL.replace('omega = "pi"', 'omega = "pi"\ndirections = "ccw"'))

        assert _run("classify", config, tmp_path / "out") == 2

    def test_deterministic(self, tmp_path: Path) -> None:
        """Test two runs write identical bytes."""
        config = _write(tmp_path, CHIRAL)

        assert _run("classify", config, tmp_path / "a") == 0
        assert _run("classify", config, tmp_path / "b") == 0

        for name in ("classify.json", "evolve_plus_cw.csv", "evolve_plus_ccw.csv"):
            assert (tmp_path / "a" / "mini" / name).read_bytes() == (tmp_path / "b" / "mini" / name).read_bytes()


class TestSweepCommand:
    """Tests for the sweep command."""

    def test_threshold_sweep(self, tmp_path: Path) -> None:
        """Test one row per value in the order given."""
        config = _write(tmp_path, CHIRAL + "\n[sweep]\nparameter = \"threshold\"\nvalues = [0.9, 0.99, 0.9999]\n")
        out = tmp_path / "out"

        assert _run("sweep", config, out) == 0

        lines = (out / "mini" / "sweep.csv").read_text().splitlines()
        assert lines[0] == "value,initial_label,class,cw_same,cw_opposite,ccw_same,ccw_opposite"
        assert [line.split(",")[0] for line in lines[1:]] == ["0.90000000000000002", "0.98999999999999999", "0.99990000000000001"]
        assert lines[1].split(",")[2] == "symmetric_identity"
        assert lines[3].split(",")[2] == "indeterminate"

    def test_workers_match_serial(self, tmp_path: Path) -> None:
        """Test a process pool gives the same table as a serial run."""
        config = _write(tmp_path, CHIRAL + "\n[sweep]\nparameter = \"Gamma0\"\nvalues = [0.05, 0.1]\n")

        assert _run("sweep", config, tmp_path / "serial") == 0
        assert _run("sweep", config, tmp_path / "pool", "--workers", "2") == 0

        serial = (tmp_path / "serial" / "mini" / "sweep.csv").read_bytes()
        assert serial == (tmp_path / "pool" / "mini" / "sweep.csv").read_bytes()

    def test_unknown_parameter(self, tmp_path: Path) -> None:
        """Test sweeping something that is not a loop constant exits with 2."""
        config = _write(tmp_path, CHIRAL + "\n[sweep]\nparameter = \"kind\"\nvalues = [1.0]\n")

        assert _run("sweep", config, tmp_path / "out") == 2

    def test_missing_block(self, tmp_path: Path) -> None:
        """Test sweep needs a sweep block."""
        config = _write(tmp_path, CHIRAL)

        assert _run("sweep", config, tmp_path / "out") == 2


class TestMain:
    """Tests for settings, output resolution and error mapping."""

    def test_unknown_experiment(self) -> None:
        """Test an unknown name exits with 2."""
        assert main(["spectrum", "--config", "fig99", "--display", "none"]) == 2

    def test_invalid_settings(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test invalid environment settings exit with 2."""
        monkeypatch.setenv("BELLSWITCH_WORKERS", "0")

        assert main(["spectrum", "--config", "fig1", "--display", "none"]) == 2

    def test_invalid_workers_flag(self, tmp_path: Path) -> None:
        """Test --workers below one exits with 2."""
        config = _write(tmp_path, CHIRAL)

        assert _run("spectrum", config, tmp_path / "out", "--workers", "0") == 2

    def test_output_dir_from_environment(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test BELLSWITCH_OUTPUT_DIR is used without --out."""
        config = _write(tmp_path, CHIRAL + '\n[output]\nformats = ["json"]\n')
        monkeypatch.setenv("BELLSWITCH_OUTPUT_DIR", str(tmp_path / "env"))

        assert main(["spectrum", "--config", str(config), "--display", "none"]) == 0

        assert (tmp_path / "env" / "mini" / "spectrum.json").is_file()

    def test_plain_display(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the plain renderer prints the minimum-gap table."""
        config = _write(tmp_path, CHIRAL + '\n[output]\nformats = ["json"]\n')

        assert main(["spectrum", "--config", str(config), "--out", str(tmp_path / "out"), "--display", "plain"]) == 0

        out = capsys.readouterr().out
        assert "Grid" in out
        assert "aep" in out

    def test_settings_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Test --settings supplies the output root and display format."""
        config = _write(tmp_path, CHIRAL + '\n[output]\nformats = ["json"]\n')
        settings = tmp_path / "run.yaml"
        settings.write_text(f"output_dir: {tmp_path / 'from-settings'}\ndisplay: plain\n")

        assert main(["spectrum", "--config", str(config), "--settings", str(settings)]) == 0

        assert (tmp_path / "from-settings" / "mini" / "spectrum.json").is_file()
        assert "Grid" in capsys.readouterr().out

    def test_missing_settings_file(self, tmp_path: Path) -> None:
        """Test a missing --settings file exits with 2."""
        config = _write(tmp_path, CHIRAL)

        assert _run("spectrum", config, tmp_path / "out", "--settings", str(tmp_path / "nope.toml")) == 2
