"""
Command Line Interface

Batch front door of the toolkit: compute statistics, enumerate involutions
into a points CSV, run verification suites, sample boundary curves, render
the region to SVG, rearrange involutions into a report and export JSON
records. Every subcommand returns an exit status; failures print a one-line
diagnostic.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Union

import numpy as np

from . import __version__
from .boundsregion import Curve, RegionPoint, evenly_spaced, sample_curve
from .config_manager import ConfigManager
from .create_config import main as create_config_main
from .diagonals import (
    Diagonal,
    Diagonal02,
    diagonal_of_shuffle,
    ed_numeric_cdf,
    kernel_support,
    shuffle_to_diagonal,
)
from .errors import FormatError, NotAnInvolutionError, PhiRhoError, RunConfigError, ShuffleDiagonalError
from .exactnum import format_decimal, format_rational
from .families import FAMILIES, family_member, format_parameter
from .formats import (
    FamilySpec,
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
from .rearrange import rearrangement_record
from .render import RenderSettings, render_region
from .segmeasures import (
    GridOracleConfig,
    SegmentMap,
    SupportMeasure,
    from_permutation,
    phi_exact,
    phi_numeric,
    rho_exact,
    rho_numeric,
)
from .shuffles import Involution, enumerate_involutions, identity, shuffle_phi, shuffle_rho
from .verification import SUITES, VerificationSettings, print_summary, run_suite

ArrayCDF = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class RunConfig:
    """Command line settings layered over the verification section of the configuration."""
    command: str
    inputs: List[Path] = field(default_factory=list)
    output: Optional[Path] = None
    n: Optional[int] = None
    n_max: int = 8
    grid_resolution: int = 2000
    seed: int = 20240611
    samples: int = 50
    workers: int = 1

    def validate(self, grid_minimum: int, n_max_ceiling: int) -> "RunConfig":
        """
        Check the settings against the configured limits.

        Raises:
            RunConfigError: If the grid is too coarse or n exceeds the ceiling
        """
        if self.grid_resolution < grid_minimum:
            raise RunConfigError(f"Grid resolution {self.grid_resolution} is below the minimum {grid_minimum}")
        if self.n_max > n_max_ceiling:
            raise RunConfigError(f"n-max {self.n_max} exceeds the ceiling {n_max_ceiling}")
        if self.n_max < 2:
            raise RunConfigError(f"n-max must be at least 2, got {self.n_max}")
        if self.n is not None and not 1 <= self.n <= n_max_ceiling:
            raise RunConfigError(f"n = {self.n} outside 1..{n_max_ceiling}")
        if self.samples < 1:
            raise RunConfigError(f"samples must be positive, got {self.samples}")
        if self.workers < 1:
            raise RunConfigError(f"workers must be positive, got {self.workers}")
        return self


@dataclass(frozen=True)
class Measurement:
    label: str
    phi: Fraction
    rho: Fraction
    numeric_cdf: ArrayCDF


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phirho",
        description="Exact footrule/rho computations for shuffles, diagonals and copula families",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default="config.json", help="User configuration file")
    parser.add_argument("--verbose", action="store_true", help="Print diagnostic detail")
    subparsers = parser.add_subparsers(dest="command", required=True)

    measures = subparsers.add_parser("measures", help="Footrule and rho of an input")
    measures.add_argument("--in", dest="inputs", action="append", default=[], type=Path,
                          help="Permutation, segment map, diagonal or family spec JSON")
    measures.add_argument("--n", type=int, help="Use the identity permutation of this size")
    measures.add_argument("--family", choices=sorted(FAMILIES))
    measures.add_argument("--alpha")
    measures.add_argument("--a")
    measures.add_argument("--b")
    measures.add_argument("--N", dest="big_n")
    measures.add_argument("--mode", choices=("exact", "grid"), default="exact")
    measures.add_argument("--grid", type=int)

    enumerate_cmd = subparsers.add_parser("enumerate", help="All involutions of size n as a points CSV")
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.add_argument("--out", type=Path)

    verify = subparsers.add_parser("verify", help="Run a verification suite")
    verify.add_argument("--suite", choices=SUITES + ("all",), required=True)
    verify.add_argument("--n-max", dest="n_max", type=int)
    verify.add_argument("--grid", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--samples", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--out", type=Path, help="Write the machine-readable report as JSON")

    boundary = subparsers.add_parser("boundary", help="Sample a bound curve into a CSV")
    boundary.add_argument("--curve", choices=[c.value for c in Curve] + ["all"], required=True)
    boundary.add_argument("--samples", type=int)
    boundary.add_argument("--out", type=Path)

    render = subparsers.add_parser("render", help="Render points and curves to SVG")
    render.add_argument("--in", dest="inputs", action="append", default=[], type=Path, help="Points CSV")
    render.add_argument("--curves", action="append", default=[], type=Path, help="Curve CSV")
    render.add_argument("--out", type=Path)

    rearrange = subparsers.add_parser("rearrange", help="Mass rearrangement of involutions into a JSON report")
    rearrange.add_argument("--in", dest="inputs", action="append", default=[], type=Path,
                           help="Permutation JSON (every entry must be an involution)")
    rearrange.add_argument("--out", type=Path, help="Report file")
    rearrange.add_argument("--permutations-out", dest="permutations_out", type=Path,
                           help="Also write the rearranged involutions as permutation JSON")

    export = subparsers.add_parser("export", help="Write family and shuffle records as JSON")
    export.add_argument("--in", dest="inputs", action="append", default=[], type=Path,
                        help="Permutation JSON whose shuffle diagonals are exported")
    export.add_argument("--family", choices=sorted(FAMILIES))
    export.add_argument("--alpha")
    export.add_argument("--a")
    export.add_argument("--b")
    export.add_argument("--N", dest="big_n")
    export.add_argument("--out", type=Path, help="Output directory")

    init_config = subparsers.add_parser("init-config", help="Copy the default configuration to config.json")
    init_config.add_argument("--default", default="config.default.json")
    return parser


def load_config(path: str, verbose: bool) -> ConfigManager:
    """Load the configuration files, falling back to built-in defaults when neither exists."""
    try:
        manager = ConfigManager(path)
    except FileNotFoundError:
        print("Warning: no configuration file found, using built-in defaults")
        return ConfigManager.with_defaults()
    if verbose:
        print(manager.get_current_config_source())
    return manager


def run_config_from_args(args: argparse.Namespace, config: ConfigManager) -> RunConfig:
    verification = config.get_verification_config()
    return RunConfig(
        command=args.command,
        inputs=list(getattr(args, "inputs", []) or []),
        output=getattr(args, "out", None),
        n=getattr(args, "n", None),
        n_max=_first(getattr(args, "n_max", None), verification.default_n_max),
        grid_resolution=_first(getattr(args, "grid", None), verification.grid_resolution),
        seed=_first(getattr(args, "seed", None), verification.seed),
        samples=_first(getattr(args, "samples", None), verification.random_samples),
        workers=_first(getattr(args, "workers", None), verification.workers),
    ).validate(verification.grid_resolution_minimum, verification.n_max_ceiling)


def _first(value: Optional[int], default: int) -> int:
    return default if value is None else value


def _support_measurement(label: str, phi: Fraction, rho: Fraction, support: SupportMeasure) -> Measurement:
    return Measurement(label, phi, rho, support.numeric_cdf())


def _diagonal_measurement(label: str, diagonal: Diagonal) -> Measurement:
    support = kernel_support(diagonal)
    return Measurement(label, phi_exact(support), rho_exact(support), ed_numeric_cdf(diagonal))


def _family_parameter(args: argparse.Namespace) -> Optional[str]:
    return {
        "c_alpha": args.alpha,
        "delta_up": args.a,
        "delta_down": args.b,
        "o_star": args.big_n,
    }[args.family]


def _family_measurement(name: str, parameter: object) -> Measurement:
    member = family_member(name, parameter)  # type: ignore[arg-type]
    label = f"{name}({FAMILIES[name][0]}={format_parameter(name, member.parameter)})"
    if member.diagonal is not None:
        numeric = ed_numeric_cdf(member.diagonal)
    else:
        assert member.support is not None
        numeric = member.support.numeric_cdf()
    return Measurement(label, member.phi, member.rho, numeric)


def _file_measurements(path: Path) -> List[Measurement]:
    kind = record_kind(path)
    if kind == "family":
        spec = read_family_spec(path)
        return [_family_measurement(spec.family, spec.parameter)]
    if kind == "segment_map":
        segment_map = read_segment_map(path)
        return [_support_measurement(str(path), phi_exact(segment_map), rho_exact(segment_map), segment_map)]
    if kind == "diagonal":
        diagonal = read_diagonal(path)
        if isinstance(diagonal, Diagonal02):
            diagonal = diagonal.to_diagonal()
        return [_diagonal_measurement(str(path), diagonal)]
    return [
        _support_measurement(str(permutation), shuffle_phi(permutation), shuffle_rho(permutation),
                             from_permutation(permutation))
        for permutation in read_permutations(path)
    ]


def collect_measurements(args: argparse.Namespace) -> List[Measurement]:
    measurements: List[Measurement] = []
    for path in args.inputs:
        measurements.extend(_file_measurements(path))
    if args.family is not None:
        measurements.append(_family_measurement(args.family, _family_parameter(args)))
    if args.n is not None:
        permutation = identity(args.n)
        measurements.append(_support_measurement(
            str(permutation), shuffle_phi(permutation), shuffle_rho(permutation), from_permutation(permutation)
        ))
    if not measurements:
        raise RunConfigError("measures needs --in, --family or --n")
    return measurements


def cmd_measures(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    digits = config.get_decimal_digits()
    oracle = GridOracleConfig(run.grid_resolution) if args.mode == "grid" else None
    for measurement in collect_measurements(args):
        print(f"{measurement.label}")
        print(f"  phi = {format_rational(measurement.phi)} ({format_decimal(measurement.phi, digits)})")
        print(f"  rho = {format_rational(measurement.rho)} ({format_decimal(measurement.rho, digits)})")
        if oracle is not None:
            phi_estimate = phi_numeric(measurement.numeric_cdf, oracle)
            rho_estimate = rho_numeric(measurement.numeric_cdf, oracle)
            print(f"  grid phi = {format_decimal(phi_estimate.value, digits)} "
                  f"(bound {format_rational(phi_estimate.bound)}, n = {oracle.resolution})")
            print(f"  grid rho = {format_decimal(rho_estimate.value, digits)} "
                  f"(bound {format_rational(rho_estimate.bound)}, n = {oracle.resolution})")
            if not (phi_estimate.contains(measurement.phi) and rho_estimate.contains(measurement.rho)):
                print("  ⚠️  grid estimate outside its documented bound")
    return 0


def cmd_enumerate(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    assert run.n is not None
    if run.n < 2:
        raise RunConfigError(f"n must be at least 2, got {run.n}")
    out = run.output or config.get_output_directory() / f"involutions_{run.n}.csv"
    points = (
        RegionPoint(shuffle_phi(inv), shuffle_rho(inv), str(inv))
        for inv in enumerate_involutions(run.n)
    )
    rows = write_points(out, points, config.get_decimal_digits())
    print(f"✅ Wrote {rows} points to {out}")
    return 0


def cmd_verify(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    verification = config.get_verification_config()
    settings = VerificationSettings(
        n_max=run.n_max,
        grid_resolution=run.grid_resolution,
        random_samples=run.samples,
        seed=run.seed,
        workers=run.workers,
        boundary_grid_points=verification.boundary_grid_points,
        verbose=config.is_verbose_logging(),
    )
    suites = SUITES if args.suite == "all" else (args.suite,)
    results = []
    for name in suites:
        print(f"Running suite '{name}'...")
        result = run_suite(name, settings)
        results.append(result)
        if config.should_show_summary():
            print_summary(result)
        else:
            print(f"{'✅' if result.passed else '❌'} {name}")
    if run.output is not None:
        run.output.parent.mkdir(parents=True, exist_ok=True)
        with open(run.output, 'w', encoding='utf-8') as file:
            json.dump([result.to_record() for result in results], file, indent=2)
            file.write("\n")
        print(f"Report written to {run.output}")
    return 0 if all(result.passed for result in results) else 1


def cmd_boundary(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    samples = args.samples if args.samples is not None else config.get_render_config().curve_samples
    curves = list(Curve) if args.curve == "all" else [Curve(args.curve)]
    out = run.output or config.get_output_directory() / f"curve_{args.curve}.csv"
    xs = evenly_spaced(samples)
    rows = write_curve(out, [sample for curve in curves for sample in sample_curve(curve, xs)],
                       config.get_decimal_digits())
    print(f"✅ Wrote {rows} curve samples to {out}")
    return 0


def cmd_render(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    render_config = config.get_render_config()
    points = [point for path in run.inputs for point in read_points(path)]
    curves = [sample for path in args.curves for sample in read_curve(path)]
    if not args.curves:
        xs = evenly_spaced(render_config.curve_samples)
        curves = [sample for curve in Curve for sample in sample_curve(curve, xs)]
    out = run.output or config.get_output_directory() / "region.svg"
    written = render_region(points, curves, out, RenderSettings(
        width_inches=render_config.width_inches,
        height_inches=render_config.height_inches,
        point_size=render_config.point_size,
    ))
    print(f"✅ Rendered {len(points)} points and {len(curves)} curve samples to {written}")
    return 0


def cmd_rearrange(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    if not run.inputs:
        raise RunConfigError("rearrange needs at least one --in permutation file")
    involutions = [
        Involution.from_permutation(permutation)
        for path in run.inputs
        for permutation in read_permutations(path)
    ]
    records = [rearrangement_record(involution) for involution in involutions]
    for record in records:
        glyph = "✅" if record.phi_preserved and record.rho_not_increased else "❌"
        print(f"{glyph} {record.source} -> {record.result} "
              f"(rho {format_rational(record.rho_before)} -> {format_rational(record.rho_after)}, "
              f"{record.hat_class.value})")
    out = run.output or config.get_output_directory() / "rearrangement_report.json"
    rows = write_rearrangement_report(out, records)
    print(f"✅ Wrote {rows} rearrangement records to {out}")
    if args.permutations_out is not None:
        write_permutations(args.permutations_out, [record.result for record in records])
        print(f"✅ Wrote the rearranged permutations to {args.permutations_out}")
    return 0 if all(r.phi_preserved and r.rho_not_increased for r in records) else 1


def _export_family(name: str, parameter: object, directory: Path) -> List[Path]:
    member = family_member(name, parameter)  # type: ignore[arg-type]
    written = [directory / f"{name}.json"]
    write_family_spec(written[0], FamilySpec(name, member.parameter))
    if isinstance(member.support, SegmentMap):
        written.append(directory / f"{name}_support.json")
        write_segment_map(written[-1], member.support)
    if member.diagonal is not None:
        written.append(directory / f"{name}_diagonal.json")
        write_diagonal(written[-1], member.diagonal)
    return written


def _export_shuffle_diagonals(path: Path, directory: Path) -> List[Path]:
    written = []
    for i, permutation in enumerate(read_permutations(path), 1):
        target = directory / f"{path.stem}_{i}_diagonal.json"
        try:
            diagonal: Union[Diagonal, Diagonal02] = shuffle_to_diagonal(Involution.from_permutation(permutation))
        except (NotAnInvolutionError, ShuffleDiagonalError):
            diagonal = diagonal_of_shuffle(permutation)
        write_diagonal(target, diagonal)
        written.append(target)
    return written


def cmd_export(args: argparse.Namespace, run: RunConfig, config: ConfigManager) -> int:
    """Write family specs, support maps and diagonals as JSON records."""
    if args.family is None and not run.inputs:
        raise RunConfigError("export needs --family or --in")
    directory = run.output or config.get_output_directory()
    directory.mkdir(parents=True, exist_ok=True)
    written: List[Path] = []
    if args.family is not None:
        written.extend(_export_family(args.family, _family_parameter(args), directory))
    for path in run.inputs:
        written.extend(_export_shuffle_diagonals(path, directory))
    for path in written:
        print(f"✅ Wrote {path}")
    return 0


COMMANDS = {
    "measures": cmd_measures,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "boundary": cmd_boundary,
    "render": cmd_render,
    "rearrange": cmd_rearrange,
    "export": cmd_export,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Program entry point; returns the exit status."""
    args = build_parser().parse_args(argv)

    if args.command == "init-config":
        return create_config_main(args.config, args.default)

    try:
        config = load_config(args.config, args.verbose)
        if args.verbose:
            config.get_output_config().verbose_logging = True
    except (RuntimeError, ValueError) as e:
        print(f"❌ Configuration error: {e}")
        return 1

    try:
        run = run_config_from_args(args, config)
        return COMMANDS[args.command](args, run, config)
    except FormatError as e:
        print(f"❌ Format error: {e}")
        return 1
    except PhiRhoError as e:
        print(f"❌ {type(e).__name__}: {e}")
        return 1
    except OSError as e:
        print(f"❌ I/O error: {e}")
        return 1
    except KeyboardInterrupt:
        print("\nProcess interrupted by user.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
