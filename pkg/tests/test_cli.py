#!/usr/bin/env python3
"""
Test script for the phirho command line.
"""

import json
import sys
from fractions import Fraction

import pytest

from src import __version__
from src.boundsregion import evenly_spaced, upper_bound
from src.cli import RunConfig, main
from src.errors import RunConfigError
from src.formats import (
    FamilySpec,
    read_curve,
    read_diagonal,
    read_family_spec,
    read_permutations,
    read_points,
    read_segment_map,
)
from src.segmeasures import phi_exact, rho_exact


@pytest.fixture(autouse=True)
def workspace(tmp_path, monkeypatch):
    """Run every command in an empty directory without configuration files."""
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_missing_configuration_uses_defaults(capsys):
    assert main(["measures", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "Warning: no configuration file found, using built-in defaults" in out
    assert "(1,2,3)" in out
    assert "  phi = 1/1 (1)" in out


def test_measures_permutation_file(workspace, capsys):
    path = write_json(workspace / "example.json", {"n": 8, "pi": [4, 7, 8, 1, 6, 5, 2, 3]})
    assert main(["measures", "--in", str(path)]) == 0
    out = capsys.readouterr().out
    assert "  phi = -5/16 (-0.3125)" in out
    assert "  rho = -13/32 (-0.40625)" in out


def test_measures_family(capsys):
    assert main(["measures", "--family", "o_star", "--N", "2"]) == 0
    out = capsys.readouterr().out
    assert "o_star(N=2)" in out
    assert "  phi = 1/3" in out
    assert "  rho = 151/216" in out


def test_measures_family_file_and_diagonal(workspace, capsys):
    family = write_json(workspace / "family.json", {"family": "c_alpha", "alpha": "1/4"})
    diagonal = write_json(workspace / "d02.json", {"n": 4, "slopes": "0022"})
    assert main(["measures", "--in", str(family), "--in", str(diagonal)]) == 0
    out = capsys.readouterr().out
    assert "  phi = -1/8" in out
    assert "  rho = -3/4" in out
    # the 0/2 pattern 0022 is the shuffle (3,4,1,2)
    assert "  phi = -1/2" in out


def test_measures_grid_mode(capsys):
    assert main(["measures", "--n", "2", "--mode", "grid", "--grid", "64"]) == 0
    out = capsys.readouterr().out
    assert "grid phi =" in out
    assert "grid rho =" in out
    assert "outside its documented bound" not in out


def test_measures_needs_input(capsys):
    assert main(["measures"]) == 1
    assert "❌ RunConfigError" in capsys.readouterr().out


def test_measures_bad_file(workspace, capsys):
    path = workspace / "broken.json"
    path.write_text("{", encoding="utf-8")
    assert main(["measures", "--in", str(path)]) == 1
    assert "❌ Format error" in capsys.readouterr().out


def test_measures_bad_family_parameter(capsys):
    assert main(["measures", "--family", "c_alpha", "--alpha", "3/4"]) == 1
    assert "❌ FamilyParameterError" in capsys.readouterr().out


def test_enumerate(workspace, capsys):
    assert main(["enumerate", "--n", "4"]) == 0
    out_path = workspace / "output" / "involutions_4.csv"
    assert f"✅ Wrote 10 points to {out_path.relative_to(workspace)}" in capsys.readouterr().out
    points = read_points(out_path)
    assert len(points) == 10
    assert points[0].label == "(1,2,3,4)"


def test_enumerate_rejects_large_n(capsys):
    assert main(["enumerate", "--n", "11"]) == 1
    assert "RunConfigError" in capsys.readouterr().out


def test_verify_writes_report(workspace, capsys):
    report = workspace / "reports" / "bounds.json"
    assert main(["verify", "--suite", "bounds", "--n-max", "4", "--out", str(report)]) == 0
    out = capsys.readouterr().out
    assert "VERIFICATION SUMMARY: bounds" in out
    records = json.loads(report.read_text())
    assert records[0]["suite"] == "bounds"
    assert records[0]["passed"]


def test_verify_oracle_with_small_grid(capsys):
    assert main(["verify", "--suite", "oracle", "--grid", "64", "--samples", "1"]) == 0


def test_verify_rejects_coarse_grid(capsys):
    assert main(["verify", "--suite", "oracle", "--grid", "8"]) == 1
    assert "below the minimum" in capsys.readouterr().out


def test_verify_returns_failure(mocker, capsys):
    from src.verification import RUNNERS, SuiteResult

    def failing(settings):
        result = SuiteResult("bounds")
        result.check("upper bound").record(False, lambda: "(2,1)")
        return result

    mocker.patch.dict(RUNNERS, {"bounds": failing})
    assert main(["verify", "--suite", "bounds", "--n-max", "2"]) == 1
    assert "first counterexample: (2,1)" in capsys.readouterr().out


def test_boundary(workspace):
    out = workspace / "upper.csv"
    assert main(["boundary", "--curve", "upper", "--samples", "5", "--out", str(out)]) == 0
    samples = read_curve(out)
    assert [s.y for s in samples] == [float(upper_bound(x)) for x in evenly_spaced(5)]

    out = workspace / "all.csv"
    assert main(["boundary", "--curve", "all", "--samples", "3", "--out", str(out)]) == 0
    assert {s.curve for s in read_curve(out)} == {"lower", "upper", "r", "s"}


def test_render(workspace, capsys):
    assert main(["enumerate", "--n", "4", "--out", "points.csv"]) == 0
    assert main(["boundary", "--curve", "all", "--samples", "21", "--out", "curves.csv"]) == 0
    assert main(["render", "--in", "points.csv", "--curves", "curves.csv", "--out", "region.svg"]) == 0
    svg = (workspace / "region.svg").read_text()
    assert svg.lstrip().startswith("<?xml")
    assert "<svg" in svg
    assert "Rendered 10 points and 84 curve samples" in capsys.readouterr().out


def test_init_config(workspace, capsys):
    (workspace / "config.default.json").write_text(json.dumps({"output": {"decimal_digits": 6}}))
    assert main(["init-config"]) == 0
    assert (workspace / "config.json").exists()
    assert main(["measures", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "Warning: no configuration file found" not in out


def test_user_configuration_is_used(workspace, capsys):
    write_json(workspace / "config.json", {"output": {"decimal_digits": 4}})
    assert main(["measures", "--family", "c_alpha", "--alpha", "1/3"]) == 0
    out = capsys.readouterr().out
    # alpha = 1/3 gives phi = -1/3, rho = -25/27
    assert "  phi = -1/3 (-0.3333)" in out


def test_rearrange_writes_report_and_permutations(workspace, capsys):
    source = write_json(workspace / "example.json", {"n": 8, "pi": [4, 7, 8, 1, 6, 5, 2, 3]})
    report = workspace / "report.json"
    hat = workspace / "hat.json"
    args = ["rearrange", "--in", str(source), "--out", str(report), "--permutations-out", str(hat)]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert "✅ (4,7,8,1,6,5,2,3) -> (8,7,3,6,5,4,2,1)" in out
    rows = json.loads(report.read_text())
    assert rows[0]["output"] == [8, 7, 3, 6, 5, 4, 2, 1]
    assert rows[0]["phi"] == "-5/16"
    assert rows[0]["rho_before"] == "-13/32"
    assert [p.pi for p in read_permutations(hat)] == [(8, 7, 3, 6, 5, 4, 2, 1)]


def test_rearrange_default_output(workspace):
    source = write_json(workspace / "swap.json", [{"n": 4, "pi": [2, 1, 4, 3]}, {"n": 3, "pi": [1, 2, 3]}])
    assert main(["rearrange", "--in", str(source)]) == 0
    rows = json.loads((workspace / "output" / "rearrangement_report.json").read_text())
    assert len(rows) == 2
    assert rows[1]["output"] == [1, 2, 3]


def test_rearrange_rejects_non_involution(workspace, capsys):
    source = write_json(workspace / "cycle.json", {"n": 3, "pi": [2, 3, 1]})
    assert main(["rearrange", "--in", str(source)]) == 1
    assert "❌ NotAnInvolutionError" in capsys.readouterr().out


def test_rearrange_needs_input(capsys):
    assert main(["rearrange"]) == 1
    assert "❌ RunConfigError" in capsys.readouterr().out


def test_export_family_records(workspace):
    assert main(["export", "--family", "delta_up", "--a", "1/3", "--out", "records"]) == 0
    records = workspace / "records"
    assert json.loads((records / "delta_up.json").read_text()) == {"family": "delta_up", "a": "1/3"}
    assert json.loads((records / "delta_up_diagonal.json").read_text()) == {
        "breakpoints": ["0/1", "1/3", "2/3", "1/1"],
        "values": ["0/1", "0/1", "1/3", "1/1"],
    }
    assert read_family_spec(records / "delta_up.json") == FamilySpec("delta_up", Fraction(1, 3))

    assert main(["export", "--family", "c_alpha", "--alpha", "1/4", "--out", "records"]) == 0
    support = read_segment_map(records / "c_alpha_support.json")
    assert (phi_exact(support), rho_exact(support)) == (Fraction(-1, 8), Fraction(-3, 4))

    assert main(["export", "--family", "o_star", "--N", "2", "--out", "records"]) == 0
    assert json.loads((records / "o_star.json").read_text()) == {"family": "o_star", "N": "2"}


def test_export_shuffle_diagonals(workspace, capsys):
    source = write_json(workspace / "perms.json", [{"n": 4, "pi": [3, 4, 1, 2]}, {"n": 3, "pi": [2, 3, 1]}])
    assert main(["export", "--in", str(source)]) == 0
    out_dir = workspace / "output"
    assert json.loads((out_dir / "perms_1_diagonal.json").read_text()) == {"n": 4, "slopes": "0022"}
    general = read_diagonal(out_dir / "perms_2_diagonal.json")
    assert general.breakpoints == tuple(Fraction(i, 3) for i in range(4))
    assert "✅ Wrote" in capsys.readouterr().out


def test_export_needs_input(capsys):
    assert main(["export"]) == 1
    assert "❌ RunConfigError" in capsys.readouterr().out


def test_run_config_validation():
    assert RunConfig("verify").validate(16, 10).n_max == 8
    with pytest.raises(RunConfigError):
        RunConfig("verify", n_max=11).validate(16, 10)
    with pytest.raises(RunConfigError):
        RunConfig("verify", workers=0).validate(16, 10)
    with pytest.raises(RunConfigError):
        RunConfig("verify", samples=0).validate(16, 10)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
