"""
File Formats

Readers and writers for the text formats exchanged by the command line:
permutation, segment-map, diagonal and family-spec JSON records, the points
and curve CSV files, and rearrangement reports. Rationals are always written
as "num/den" strings.
"""

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO, Union

from .boundsregion import PRECISION_NOTE, CurveSample, RegionPoint, Verdict, check_lower, check_upper
from .diagonals import Diagonal, Diagonal02
from .errors import FormatError, PhiRhoError
from .exactnum import format_decimal, format_rational, parse_rational
from .families import FAMILIES, format_parameter
from .rearrange import RearrangementRecord
from .segmeasures import Branch, SegmentMap
from .shuffles import Permutation, validate

POINT_COLUMNS = ["label", "phi", "rho", "phi_float", "rho_float", "upper_eq", "lower_eq"]
CURVE_COLUMNS = ["curve", "x", "y"]
PRECISION_PREFIX = "# precision: "

PathLike = Union[str, Path]


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its rational parameter."""
    family: str
    parameter: Fraction


def _load_json(path: PathLike) -> Any:
    source = str(path)
    try:
        with open(path, 'r', encoding='utf-8') as file:
            return json.load(file)
    except json.JSONDecodeError as e:
        raise FormatError(source, f"invalid JSON: {e.msg}", line=e.lineno)


def _write_json(path: PathLike, data: Any) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as file:
        json.dump(data, file, indent=2, ensure_ascii=False)
        file.write("\n")


def _require(record: Any, key: str, source: str, line: Optional[int] = None) -> Any:
    if not isinstance(record, dict):
        raise FormatError(source, "expected a JSON object", line=line)
    if key not in record:
        raise FormatError(source, "missing field", line=line, field=key)
    return record[key]


def _rational_field(text: Any, source: str, field: str, line: Optional[int] = None) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise FormatError(source, f"expected a rational string, got {text!r}", line=line, field=field)
    try:
        return parse_rational(str(text))
    except PhiRhoError as e:
        raise FormatError(source, str(e), line=line, field=field)


# Permutations

def permutation_from_record(record: Any, source: str = "<record>") -> Permutation:
    n = _require(record, "n", source)
    pi = _require(record, "pi", source)
    if isinstance(n, bool) or not isinstance(n, int):
        raise FormatError(source, f"expected an integer, got {n!r}", field="n")
    if not isinstance(pi, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in pi):
        raise FormatError(source, "expected an array of integers", field="pi")
    try:
        return validate(n, pi)
    except PhiRhoError as e:
        raise FormatError(source, str(e), field="pi")


def permutation_to_record(permutation: Permutation) -> Dict[str, Any]:
    return {"n": permutation.n, "pi": list(permutation.pi)}


def read_permutations(path: PathLike) -> List[Permutation]:
    """A single {"n", "pi"} record or an array of them."""
    data = _load_json(path)
    source = str(path)
    if isinstance(data, list):
        return [permutation_from_record(record, f"{source}#{i}") for i, record in enumerate(data)]
    return [permutation_from_record(data, source)]


def write_permutations(path: PathLike, permutations: Sequence[Permutation]) -> None:
    records = [permutation_to_record(p) for p in permutations]
    _write_json(path, records[0] if len(records) == 1 else records)


# Segment maps and diagonals

def read_segment_map(path: PathLike) -> SegmentMap:
    data = _load_json(path)
    source = str(path)
    pieces = _require(data, "pieces", source)
    if not isinstance(pieces, list):
        raise FormatError(source, "expected an array of pieces", field="pieces")
    branches = []
    for i, piece in enumerate(pieces):
        field = f"pieces[{i}]"
        if not isinstance(piece, list) or len(piece) != 4:
            raise FormatError(source, "expected [x_lo, x_hi, slope, intercept]", field=field)
        branches.append(Branch(*(_rational_field(value, source, field) for value in piece)))
    try:
        return SegmentMap(tuple(branches))
    except PhiRhoError as e:
        raise FormatError(source, str(e), field="pieces")


def write_segment_map(path: PathLike, segment_map: SegmentMap) -> None:
    _write_json(path, {"pieces": [list(piece.as_strings()) for piece in segment_map.pieces]})


def read_diagonal(path: PathLike) -> Union[Diagonal, Diagonal02]:
    """A breakpoints/values record, or an {"n", "slopes"} 0/2 record."""
    data = _load_json(path)
    source = str(path)
    if isinstance(data, dict) and "slopes" in data:
        n = _require(data, "n", source)
        slopes = data["slopes"]
        if isinstance(n, bool) or not isinstance(n, int):
            raise FormatError(source, f"expected an integer, got {n!r}", field="n")
        if not isinstance(slopes, str):
            raise FormatError(source, "expected a string of '0' and '2'", field="slopes")
        try:
            return Diagonal02.from_pattern(n, slopes)
        except PhiRhoError as e:
            raise FormatError(source, str(e), field="slopes")
    breakpoints = _require(data, "breakpoints", source)
    values = _require(data, "values", source)
    if not isinstance(breakpoints, list) or not isinstance(values, list):
        raise FormatError(source, "breakpoints and values must be arrays")
    try:
        return Diagonal(
            tuple(_rational_field(t, source, "breakpoints") for t in breakpoints),
            tuple(_rational_field(v, source, "values") for v in values),
        )
    except FormatError:
        raise
    except PhiRhoError as e:
        raise FormatError(source, str(e))


def write_diagonal(path: PathLike, diagonal: Union[Diagonal, Diagonal02]) -> None:
    if isinstance(diagonal, Diagonal02):
        _write_json(path, {"n": diagonal.n, "slopes": diagonal.pattern})
        return
    _write_json(path, {
        "breakpoints": [format_rational(t) for t in diagonal.breakpoints],
        "values": [format_rational(v) for v in diagonal.values],
    })


# Family specs

def family_spec_from_record(record: Any, source: str = "<record>") -> FamilySpec:
    family = _require(record, "family", source)
    if family not in FAMILIES:
        raise FormatError(source, f"unknown family {family!r}", field="family")
    parameter_name = FAMILIES[family][0]
    value = _require(record, parameter_name, source)
    return FamilySpec(family, _rational_field(value, source, parameter_name))


def read_family_spec(path: PathLike) -> FamilySpec:
    return family_spec_from_record(_load_json(path), str(path))


def family_spec_to_record(spec: FamilySpec) -> Dict[str, str]:
    return {"family": spec.family, FAMILIES[spec.family][0]: format_parameter(spec.family, spec.parameter)}


def write_family_spec(path: PathLike, spec: FamilySpec) -> None:
    _write_json(path, family_spec_to_record(spec))


def record_kind(path: PathLike) -> str:
    """One of "family", "segment_map", "diagonal" or "permutation"."""
    data = _load_json(path)
    keys = set(data) if isinstance(data, dict) else set()
    if "family" in keys:
        return "family"
    if "pieces" in keys:
        return "segment_map"
    if "breakpoints" in keys or "slopes" in keys:
        return "diagonal"
    return "permutation"


# Points CSV

def point_row(point: RegionPoint, digits: int = 17) -> Dict[str, str]:
    return {
        "label": point.label,
        "phi": format_rational(point.phi),
        "rho": format_rational(point.rho),
        "phi_float": format_decimal(point.phi, digits),
        "rho_float": format_decimal(point.rho, digits),
        "upper_eq": str(check_upper(point) is Verdict.EQUALITY).lower(),
        "lower_eq": str(check_lower(point) is Verdict.EQUALITY).lower(),
    }


def write_points(target: Union[PathLike, TextIO], points: Iterable[RegionPoint], digits: int = 17) -> int:
    """Write the points CSV; returns the number of rows."""
    if isinstance(target, (str, Path)):
        Path(target).parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8', newline='') as file:
            return write_points(file, points, digits)
    writer = csv.DictWriter(target, fieldnames=POINT_COLUMNS)
    writer.writeheader()
    rows = 0
    for point in points:
        writer.writerow(point_row(point, digits))
        rows += 1
    return rows


def read_points(path: PathLike) -> List[RegionPoint]:
    source = str(path)
    points = []
    with open(path, 'r', encoding='utf-8', newline='') as file:
        reader = csv.DictReader(file)
        missing = [c for c in ("label", "phi", "rho") if c not in (reader.fieldnames or [])]
        if missing:
            raise FormatError(source, f"missing columns {', '.join(missing)}", line=1)
        for row in reader:
            line = reader.line_num
            phi = _rational_field(row["phi"], source, "phi", line)
            rho = _rational_field(row["rho"], source, "rho", line)
            try:
                points.append(RegionPoint(phi, rho, row["label"]))
            except PhiRhoError as e:
                raise FormatError(source, str(e), line=line)
    return points


# Curve CSV

def write_curve(path: PathLike, samples: Iterable[CurveSample], digits: int = 17) -> int:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    rows = 0
    with open(path, 'w', encoding='utf-8', newline='') as file:
        file.write(f"{PRECISION_PREFIX}{PRECISION_NOTE}\n")
        writer = csv.writer(file)
        writer.writerow(CURVE_COLUMNS)
        for sample in samples:
            writer.writerow([sample.curve, format_decimal(sample.x, digits), format_decimal(sample.y, digits)])
            rows += 1
    return rows


def read_curve(path: PathLike) -> List[CurveSample]:
    source = str(path)
    samples = []
    precision = PRECISION_NOTE
    with open(path, 'r', encoding='utf-8', newline='') as file:
        lines = file.read().splitlines()
    body_start = 0
    while body_start < len(lines) and lines[body_start].startswith("#"):
        if lines[body_start].startswith(PRECISION_PREFIX):
            precision = lines[body_start][len(PRECISION_PREFIX):]
        body_start += 1
    reader = csv.reader(lines[body_start:])
    header = next(reader, None)
    if header != CURVE_COLUMNS:
        raise FormatError(source, f"expected header {','.join(CURVE_COLUMNS)}", line=body_start + 1)
    for offset, row in enumerate(reader, body_start + 2):
        if not row:
            continue
        if len(row) != 3:
            raise FormatError(source, "expected three columns", line=offset)
        try:
            samples.append(CurveSample(float(row[1]), float(row[2]), row[0], precision))
        except ValueError:
            raise FormatError(source, "x and y must be decimals", line=offset)
    return samples


# Rearrangement reports

def write_rearrangement_report(path: PathLike, records: Iterable[RearrangementRecord]) -> int:
    rows = [record.to_record() for record in records]
    _write_json(path, rows)
    return len(rows)
