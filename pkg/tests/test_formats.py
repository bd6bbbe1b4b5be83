#!/usr/bin/env python3
"""
Test script for the JSON records and CSV files read and written by the command line.
"""

import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from src.boundsregion import PRECISION_NOTE, Curve, RegionPoint, evenly_spaced, sample_curve
from src.diagonals import Diagonal02, delta_w
from src.errors import FormatError
from src.formats import (
    FamilySpec,
    family_spec_from_record,
    family_spec_to_record,
    permutation_from_record,
    point_row,
    read_curve,
    read_diagonal,
    read_family_spec,
    read_permutations,
    read_points,
    read_segment_map,
    record_kind,
    write_curve,
    write_diagonal,
    write_family_spec,
    write_permutations,
    write_points,
    write_rearrangement_report,
    write_segment_map,
)
from src.rearrange import rearrangement_record
from src.shuffles import Involution, Permutation, star_shuffle


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def test_permutation_record():
    permutation = permutation_from_record({"n": 3, "pi": [2, 3, 1]})
    assert permutation == Permutation(3, (2, 3, 1))


@pytest.mark.parametrize("record, field", [
    ({"pi": [1]}, "n"),
    ({"n": 2}, "pi"),
    ({"n": "2", "pi": [1, 2]}, "n"),
    ({"n": 2, "pi": [1, "2"]}, "pi"),
    ({"n": 3, "pi": [1, 1, 2]}, "pi"),
])
def test_permutation_record_errors(record, field):
    with pytest.raises(FormatError) as excinfo:
        permutation_from_record(record, "input.json")
    assert excinfo.value.field == field
    assert excinfo.value.source == "input.json"


def test_permutations_single_and_list(tmp_path):
    single = tmp_path / "single.json"
    write_permutations(single, [star_shuffle(4)])
    assert json.loads(single.read_text()) == {"n": 4, "pi": [2, 1, 4, 3]}
    assert read_permutations(single) == [star_shuffle(4)]

    many = tmp_path / "many.json"
    write_permutations(many, [star_shuffle(2), star_shuffle(4)])
    assert isinstance(json.loads(many.read_text()), list)
    assert len(read_permutations(many)) == 2


def test_invalid_json_reports_line(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "n": 2,\n  "pi": [1, 2\n}\n', encoding="utf-8")
    with pytest.raises(FormatError) as excinfo:
        read_permutations(path)
    assert excinfo.value.line == 4


def test_segment_map_file(tmp_path):
    path = write_json(tmp_path / "map.json", {"pieces": [["0", "1/2", "-1", "1/2"], ["1/2", "1", "-1", "3/2"]]})
    segment_map = read_segment_map(path)
    assert segment_map(Fraction(1, 4)) == Fraction(1, 4)
    copy = tmp_path / "copy.json"
    write_segment_map(copy, segment_map)
    assert json.loads(copy.read_text())["pieces"][1] == ["1/2", "1/1", "-1/1", "3/2"]


@pytest.mark.parametrize("pieces, field", [
    ([["0", "1", "1"]], "pieces[0]"),
    ([["0", "1", "one", "0"]], "pieces[0]"),
    ([["0", "1", "2", "0"]], "pieces"),
])
def test_segment_map_file_errors(tmp_path, pieces, field):
    path = write_json(tmp_path / "map.json", {"pieces": pieces})
    with pytest.raises(FormatError) as excinfo:
        read_segment_map(path)
    assert excinfo.value.field == field


def test_diagonal_files(tmp_path):
    path = write_json(tmp_path / "d02.json", {"n": 12, "slopes": "002022020022"})
    d02 = read_diagonal(path)
    assert isinstance(d02, Diagonal02)
    assert d02.pattern == "002022020022"

    path = tmp_path / "delta_w.json"
    write_diagonal(path, delta_w())
    assert json.loads(path.read_text()) == {"breakpoints": ["0/1", "1/2", "1/1"], "values": ["0/1", "0/1", "1/1"]}
    assert read_diagonal(path) == delta_w()


def test_diagonal_file_errors(tmp_path):
    path = write_json(tmp_path / "bad.json", {"n": 4, "slopes": "2002"})
    with pytest.raises(FormatError) as excinfo:
        read_diagonal(path)
    assert excinfo.value.field == "slopes"

    path = write_json(tmp_path / "bad2.json", {"breakpoints": ["0", "1"], "values": ["0", "1/2"]})
    with pytest.raises(FormatError):
        read_diagonal(path)


def test_family_spec(tmp_path):
    spec = family_spec_from_record({"family": "c_alpha", "alpha": "1/4"})
    assert spec == FamilySpec("c_alpha", Fraction(1, 4))
    assert family_spec_to_record(FamilySpec("o_star", Fraction(3))) == {"family": "o_star", "N": "3"}
    path = write_json(tmp_path / "family.json", {"family": "delta_down", "b": "1/8"})
    assert read_family_spec(path) == FamilySpec("delta_down", Fraction(1, 8))
    written = tmp_path / "o_star.json"
    write_family_spec(written, FamilySpec("o_star", Fraction(2)))
    assert json.loads(written.read_text()) == {"family": "o_star", "N": "2"}
    assert read_family_spec(written) == FamilySpec("o_star", Fraction(2))


@pytest.mark.parametrize("record, field", [
    ({"family": "gumbel", "alpha": "1"}, "family"),
    ({"family": "c_alpha"}, "alpha"),
    ({"family": "c_alpha", "alpha": 0.25}, "alpha"),
])
def test_family_spec_errors(record, field):
    with pytest.raises(FormatError) as excinfo:
        family_spec_from_record(record)
    assert excinfo.value.field == field


def test_record_kind(tmp_path):
    assert record_kind(write_json(tmp_path / "a.json", {"family": "c_alpha", "alpha": "0"})) == "family"
    assert record_kind(write_json(tmp_path / "b.json", {"pieces": []})) == "segment_map"
    assert record_kind(write_json(tmp_path / "c.json", {"n": 2, "slopes": "02"})) == "diagonal"
    assert record_kind(write_json(tmp_path / "d.json", {"n": 1, "pi": [1]})) == "permutation"
    assert record_kind(write_json(tmp_path / "e.json", [{"n": 1, "pi": [1]}])) == "permutation"


def test_point_row():
    row = point_row(RegionPoint(Fraction(1, 2), Fraction(5, 6), "star-6"), digits=6)
    assert row == {
        "label": "star-6",
        "phi": "1/2",
        "rho": "5/6",
        "phi_float": "0.5",
        "rho_float": "0.833333",
        "upper_eq": "true",
        "lower_eq": "false",
    }


def test_points_csv(tmp_path):
    points = [RegionPoint(Fraction(1), Fraction(1), "id"), RegionPoint(Fraction(-1, 8), Fraction(-3, 4), "c")]
    path = tmp_path / "out" / "points.csv"
    assert write_points(path, points) == 2
    lines = path.read_text().splitlines()
    assert lines[0] == "label,phi,rho,phi_float,rho_float,upper_eq,lower_eq"
    assert lines[2].startswith("c,-1/8,-3/4,")
    assert read_points(path) == points


def test_points_to_stream():
    buffer = io.StringIO()
    assert write_points(buffer, [RegionPoint(0, 0, "pi")]) == 1
    assert "pi,0/1,0/1,0,0," in buffer.getvalue()


def test_points_csv_errors(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("label,phi\nx,1/2\n", encoding="utf-8")
    with pytest.raises(FormatError) as excinfo:
        read_points(path)
    assert excinfo.value.line == 1

    path.write_text("label,phi,rho\nx,1/2,abc\n", encoding="utf-8")
    with pytest.raises(FormatError) as excinfo:
        read_points(path)
    assert excinfo.value.field == "rho"
    assert excinfo.value.line == 2


def test_curve_csv(tmp_path):
    path = tmp_path / "curve.csv"
    samples = sample_curve(Curve.UPPER, evenly_spaced(5))
    assert write_curve(path, samples) == 5
    text = path.read_text().splitlines()
    assert text[0] == f"# precision: {PRECISION_NOTE}"
    assert text[1] == "curve,x,y"
    restored = read_curve(path)
    assert [s.y for s in restored] == [s.y for s in samples]
    assert restored[0].curve == "upper"


def test_curve_csv_errors(tmp_path):
    path = tmp_path / "curve.csv"
    path.write_text("x,y\n0,0\n", encoding="utf-8")
    with pytest.raises(FormatError):
        read_curve(path)
    path.write_text("curve,x,y\nupper,zero,0\n", encoding="utf-8")
    with pytest.raises(FormatError) as excinfo:
        read_curve(path)
    assert excinfo.value.line == 2


def test_rearrangement_report(tmp_path):
    path = tmp_path / "report.json"
    example = Involution(8, (4, 7, 8, 1, 6, 5, 2, 3))
    assert write_rearrangement_report(path, [rearrangement_record(example)]) == 1
    rows = json.loads(path.read_text())
    assert rows[0]["output"] == [8, 7, 3, 6, 5, 4, 2, 1]


DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.mark.parametrize("name, kind", [
    ("rearrange_example_8.json", "permutation"),
    ("rearrange_example_16.json", "permutation"),
    ("diagonal02_12.json", "diagonal"),
    ("c_alpha_quarter.json", "family"),
    ("reversal_map.json", "segment_map"),
    ("delta_w.json", "diagonal"),
])
def test_shipped_data_files(name, kind):
    path = DATA / name
    assert record_kind(path) == kind
    reader = {
        "permutation": read_permutations,
        "diagonal": read_diagonal,
        "family": read_family_spec,
        "segment_map": read_segment_map,
    }[kind]
    assert reader(path) is not None


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
