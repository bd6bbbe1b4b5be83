"""
Verification Suites

Exhaustive and sampled checks of the exact statements the toolkit encodes:
the region bounds over all involutions, the rearrangement transform, the
diagonal/shuffle round trips, the family closed forms, the boundary curves
and the agreement of the grid oracle with exact integration. Every check
records how many cases it saw and the first counterexample it met.
"""

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .boundsregion import (
    Curve,
    RegionPoint,
    Verdict,
    branch_boundaries,
    check_lower,
    check_upper,
    evenly_spaced,
    is_knot,
    lower_bound,
    one_sided_values,
    r_of,
    s_of,
    upper_bound,
)
from .diagonals import (
    Diagonal,
    Diagonal02,
    PiecewiseLinear,
    approximate_02,
    delta_m,
    delta_w,
    diagonal_of_shuffle,
    diagonal_to_shuffle,
    dominates,
    ed_cdf,
    ed_numeric_cdf,
    enumerate_diagonal02,
    kernel_at,
    kernel_support,
    shuffle_to_diagonal,
    sup_distance,
)
from .errors import PhiRhoError, UnknownSuiteError
from .exactnum import ONE, ZERO, Ordering, StepFunction, SurdSum, format_rational, step_rearrange_check
from .families import (
    FamilyMember,
    c_alpha,
    delta_down,
    delta_up,
    o_star,
    o_star_closed_form,
    ordinal_stats,
    ordinal_support,
)
from .rearrange import (
    HatClass,
    m_from_stats,
    m_value,
    p_vector,
    hat_class_check,
    rearrange_hat,
    rearrangement_step_functions,
    terminal_swap_m,
)
from .segmeasures import (
    GridOracleConfig,
    SupportMeasure,
    from_permutation,
    m_cdf,
    phi_exact,
    phi_numeric,
    pi_cdf,
    rho_exact,
    rho_numeric,
    w_cdf,
)
from .shuffles import (
    Involution,
    classify,
    enumerate_involutions,
    equality_condition,
    involution_count,
    partition_keys,
    shuffle_phi,
    shuffle_rho,
    shuffle_rho_general,
    star_shuffle_stats,
    validate,
)

SUITES = ("bounds", "rearrange", "roundtrip", "families", "boundary", "oracle")

EXAMPLE_8 = (Involution(8, (4, 7, 8, 1, 6, 5, 2, 3)), (8, 7, 3, 6, 5, 4, 2, 1))
EXAMPLE_16 = (
    Involution(16, (15, 16, 3, 14, 11, 12, 7, 8, 9, 10, 5, 6, 13, 4, 1, 2)),
    (16, 15, 14, 13, 5, 6, 7, 8, 9, 12, 11, 10, 4, 3, 2, 1),
)
WORKED_PATTERN = ("002022020022", (3, 5, 1, 6, 2, 4, 8, 7, 11, 12, 9, 10))
APPROXIMATION_SIZES = (2, 4, 8, 16, 32, 64)


@dataclass
class CheckResult:
    """Outcome of one named invariant."""
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def merge(self, other: "CheckResult") -> None:
        self.checked += other.checked
        self.failures += other.failures
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def to_record(self) -> Dict[str, object]:
        record: Dict[str, object] = {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
        }
        if self.counterexample is not None:
            record["counterexample"] = self.counterexample
        return record


@dataclass
class SuiteResult:
    """All checks of one suite; it passes only if every check passes."""
    suite: str
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def check(self, name: str) -> CheckResult:
        if name not in self.checks:
            self.checks[name] = CheckResult(name)
        return self.checks[name]

    def absorb(self, checks: Dict[str, CheckResult]) -> None:
        for name, result in checks.items():
            self.check(name).merge(result)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.checks.values())

    def to_record(self) -> Dict[str, object]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [result.to_record() for result in self.checks.values()],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class VerificationSettings:
    n_max: int = 8
    grid_resolution: int = 2000
    random_samples: int = 50
    seed: int = 20240611
    workers: int = 1
    boundary_grid_points: int = 10000
    step_pairs: int = 10000
    disintegration_grid: int = 64
    maximality_n_max: int = 8
    verbose: bool = False


@dataclass
class PartitionResult:
    """Checks and tallies of one (n, pi(1)) slice of the involution stream."""
    n: int
    first_partner: int
    count: int = 0
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    tallies: Dict[str, int] = field(default_factory=dict)

    def check(self, name: str) -> CheckResult:
        if name not in self.checks:
            self.checks[name] = CheckResult(name)
        return self.checks[name]


def _fan_out(task: Callable[[int, int], PartitionResult], keys: Sequence[Tuple[int, int]],
             workers: int) -> List[PartitionResult]:
    if workers <= 1:
        return [task(n, partner) for n, partner in keys]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, [n for n, _ in keys], [partner for _, partner in keys]))


def _partition_keys(n_max: int) -> List[Tuple[int, int]]:
    return [(n, partner) for n in range(2, n_max + 1) for partner in partition_keys(n)]


def _collect(suite: SuiteResult, partitions: Iterable[PartitionResult], verbose: bool) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    tallies: Dict[str, int] = {}
    for partition in partitions:
        suite.absorb(partition.checks)
        counts[partition.n] = counts.get(partition.n, 0) + partition.count
        for key, value in partition.tallies.items():
            tallies[key] = tallies.get(key, 0) + value
        if verbose:
            print(f"  n={partition.n} pi(1)={partition.first_partner}: {partition.count} involutions")
    for key, value in sorted(tallies.items()):
        suite.notes.append(f"{key}: {value}")
    return counts


def _check_counts(suite: SuiteResult, counts: Dict[int, int]) -> None:
    check = suite.check("involution count")
    for n, count in sorted(counts.items()):
        check.record(count == involution_count(n), lambda n=n, count=count: (
            f"n={n}: enumerated {count}, expected {involution_count(n)}"
        ))


# Bounds

def bounds_partition(n: int, first_partner: int) -> PartitionResult:
    result = PartitionResult(n, first_partner)
    for involution in enumerate_involutions(n, first_partner):
        result.count += 1
        phi = shuffle_phi(involution)
        rho = shuffle_rho(involution)
        point = RegionPoint(phi, rho, str(involution))
        upper = check_upper(point)
        lower = check_lower(point)
        described = lambda: f"{involution}: phi={format_rational(phi)}, rho={format_rational(rho)}"  # noqa: E731
        result.check("upper bound").record(upper is not Verdict.VIOLATED, described)
        result.check("lower bound").record(lower is not Verdict.VIOLATED, described)
        # the identity (C = M) is the trivial equality point
        expected_equality = equality_condition(involution) or not classify(involution).i_minus
        result.check("upper equality set").record(
            (upper is Verdict.EQUALITY) == expected_equality, described
        )
        result.check("symmetric rho formula").record(
            rho == shuffle_rho_general(involution.base), described
        )
        support = from_permutation(involution)
        result.check("exact integration").record(
            phi_exact(support) == phi and rho_exact(support) == rho, described
        )
    return result


def run_bounds(settings: VerificationSettings) -> SuiteResult:
    suite = SuiteResult("bounds")
    partitions = _fan_out(bounds_partition, _partition_keys(settings.n_max), settings.workers)
    _check_counts(suite, _collect(suite, partitions, settings.verbose))
    star = suite.check("star shuffle upper equality")
    for n in range(1, 51):
        phi, rho = star_shuffle_stats(2 * n)
        star.record(
            check_upper(RegionPoint(phi, rho)) is Verdict.EQUALITY,
            lambda n=n: f"star shuffle on {2 * n} stripes",
        )
    return suite


# Rearrangement

def rearrange_partition(n: int, first_partner: int) -> PartitionResult:
    result = PartitionResult(n, first_partner)
    for involution in enumerate_involutions(n, first_partner):
        result.count += 1
        hat = rearrange_hat(involution)
        described = lambda: f"{involution} -> {hat}"  # noqa: E731
        phi = shuffle_phi(involution)
        rho = shuffle_rho(involution)
        result.check("footrule preserved").record(shuffle_phi(hat) == phi, described)
        result.check("rho not increased").record(shuffle_rho(hat) <= rho, described)
        if p_vector(involution).delta == 0:
            landed = hat.pi == tuple(range(1, n + 1))
        else:
            landed = hat_class_check(hat) is not HatClass.NONE
        result.check("lands in canonical class").record(landed, described)
        m_sign = m_value(n, p_vector(involution)).sign
        result.check("m non-negative").record(m_sign >= 0, described)
        result.check("m sign matches statistics").record(m_sign == m_from_stats(phi, rho), described)
        result.check("m non-negative after rearrangement").record(
            m_value(n, p_vector(hat)).sign >= 0, described
        )
        f, _, g = rearrangement_step_functions(involution)
        report = step_rearrange_check(f, g)
        result.check("rearrangement inequality").record(report.inequality_holds, described)
        result.check("prefix sums non-negative").record(report.prefix_sums_non_negative, described)
        if report.block_decomposable:
            result.tallies["greedy block decomposition found"] = (
                result.tallies.get("greedy block decomposition found", 0) + 1
            )
    return result


def random_step_pair(rng: random.Random, max_blocks: int = 4, max_run: int = 4) -> Tuple[StepFunction, StepFunction]:
    """
    Draw a step-function pair for the rearrangement inequality.

    g is a chain of blocks, each a strictly positive run followed by a
    non-positive run of the same total mass, so the greedy decomposition
    recovers the blocks. f is non-negative and non-decreasing on the same
    partition.

    Args:
        rng: Seeded random source
        max_blocks: Largest number of blocks in g
        max_run: Largest length of each run

    Returns:
        (f, g) sharing one cell count
    """
    g_values: List[int] = []
    for _ in range(rng.randint(1, max_blocks)):
        positive = [rng.randint(1, 6) for _ in range(rng.randint(1, max_run))]
        mass = sum(positive)
        cuts = sorted(rng.randint(0, mass) for _ in range(rng.randint(1, max_run) - 1))
        edges = [0, *cuts, mass]
        g_values.extend(positive)
        g_values.extend(lo - hi for lo, hi in zip(edges, edges[1:]))
    f_values = []
    level = 0
    for _ in g_values:
        level += rng.randint(0, 3)
        f_values.append(level)
    scale = Fraction(1, rng.randint(1, 8))
    return StepFunction.of(f_values, scale), StepFunction.of(g_values, scale)


def _random_pairs(suite: SuiteResult, settings: VerificationSettings) -> None:
    rng = random.Random(settings.seed)
    for _ in range(settings.step_pairs):
        f, g = random_step_pair(rng)
        report = step_rearrange_check(f, g)
        described = lambda f=f, g=g: (  # noqa: E731
            f"f={[format_rational(v) for v in f.values]}, g={[format_rational(v) for v in g.values]}"
        )
        suite.check("random pairs: inequality").record(report.inequality_holds, described)
        suite.check("random pairs: polarization identity").record(
            report.polarization_gap == -2 * report.inner_product, described
        )
        suite.check("random pairs: block inner products").record(
            report.block_decomposable and all(value <= 0 for value in report.block_inner_products),
            described,
        )
    if settings.verbose:
        print(f"  {settings.step_pairs} random step-function pairs")


def run_rearrange(settings: VerificationSettings) -> SuiteResult:
    suite = SuiteResult("rearrange")
    partitions = _fan_out(rearrange_partition, _partition_keys(settings.n_max), settings.workers)
    _check_counts(suite, _collect(suite, partitions, settings.verbose))
    _random_pairs(suite, settings)
    anchors = suite.check("worked examples")
    for source, expected in (EXAMPLE_8, EXAMPLE_16):
        produced = rearrange_hat(source).pi
        anchors.record(produced == expected, lambda s=source, p=produced: f"{s} -> {p}")
    terminal = suite.check("terminal swap value")
    for n in range(2, max(settings.n_max, 2) + 1):
        terminal.record(n ** 3 * terminal_swap_m(n) == 2, lambda n=n: f"n={n}: m={terminal_swap_m(n)}")
    return suite


# Round trips

def disintegration_grid(diagonal: Diagonal, resolution: int) -> List[Fraction]:
    """The points i/resolution together with the breakpoints of the diagonal."""
    return sorted({Fraction(i, resolution) for i in range(resolution + 1)} | set(diagonal.breakpoints))


def disintegration_agrees(support: SupportMeasure, diagonal: Diagonal, resolution: int = 64) -> bool:
    cuts = disintegration_grid(diagonal, resolution)
    return all(support.cdf(u, v) == ed_cdf(diagonal, u, v) for u in cuts for v in cuts)


def kernel_is_monotone(diagonal: Diagonal, samples: int = 64) -> bool:
    """L and U do not decrease along the interior non-breakpoint points i/samples."""
    ts = [t for t in (Fraction(i, samples) for i in range(1, samples)) if not diagonal.is_breakpoint(t)]
    atoms = [kernel_at(diagonal, t) for t in ts]
    return all(a.L <= b.L and a.U <= b.U for a, b in zip(atoms, atoms[1:]))


def _square_gap(d: PiecewiseLinear) -> Tuple[Fraction, Fraction]:
    """Exact (min, max) of t^2 - d(t) over [0, 1]."""
    low, high = None, None
    for t0, t1, slope in zip(d.breakpoints, d.breakpoints[1:], d.slopes()):
        candidates = [t0, t1]
        if t0 < slope / 2 < t1:
            candidates.append(slope / 2)
        for t in candidates:
            value = t * t - d(t)
            low = value if low is None else min(low, value)
            high = value if high is None else max(high, value)
    assert low is not None and high is not None
    return low, high


def _grid_agreement(d02: Diagonal02, involution: Involution) -> bool:
    n = d02.n
    diagonal = d02.to_diagonal()
    support = from_permutation(involution)
    return all(
        ed_cdf(diagonal, Fraction(i, n), Fraction(j, n)) == support.cdf(Fraction(i, n), Fraction(j, n))
        for i in range(n + 1)
        for j in range(n + 1)
    )


def shuffles_by_diagonal(n: int) -> Dict[Tuple[Fraction, ...], List[Involution]]:
    """Involutions of n grouped by the values of their diagonal section at i/n."""
    classes: Dict[Tuple[Fraction, ...], List[Involution]] = {}
    for involution in enumerate_involutions(n):
        classes.setdefault(diagonal_of_shuffle(involution).values, []).append(involution)
    return classes


def dominated_by_diagonal_copula(diagonal: Diagonal, involution: Involution) -> bool:
    """C_{S_pi} <= E_delta at every grid point (i/n, j/n)."""
    n = involution.n
    support = from_permutation(involution)
    grid = [Fraction(i, n) for i in range(n + 1)]
    return all(support.cdf(u, v) <= ed_cdf(diagonal, u, v) for u in grid for v in grid)


def _check_maximality(suite: SuiteResult, n: int) -> None:
    classes = shuffles_by_diagonal(n)
    check = suite.check("diagonal copula is maximal in its class")
    shared = 0
    for d02 in enumerate_diagonal02(n):
        diagonal = d02.to_diagonal()
        members = classes.get(diagonal.values, [])
        shared += len(members)
        for involution in members:
            check.record(
                dominated_by_diagonal_copula(diagonal, involution),
                lambda d02=d02, involution=involution: f"{d02.pattern}: {involution}",
            )
    suite.notes.append(f"involutions sharing a 0/2 diagonal at n={n}: {shared}")


def run_roundtrip(settings: VerificationSettings) -> SuiteResult:
    suite = SuiteResult("roundtrip")
    for n in range(2, min(settings.n_max, settings.maximality_n_max) + 1, 2):
        _check_maximality(suite, n)
    for n in range(2, settings.n_max + 1, 2):
        count = 0
        for d02 in enumerate_diagonal02(n):
            count += 1
            involution = diagonal_to_shuffle(d02)
            described = lambda: f"{d02.pattern} <-> {involution}"  # noqa: E731
            suite.check("diagonal of shuffle").record(
                diagonal_of_shuffle(involution) == d02.to_diagonal(), described
            )
            suite.check("shuffle to diagonal round trip").record(
                shuffle_to_diagonal(involution) == d02, described
            )
            suite.check("diagonal to shuffle round trip").record(
                diagonal_to_shuffle(shuffle_to_diagonal(involution)).pi == involution.pi, described
            )
            suite.check("copula agreement on grid").record(_grid_agreement(d02, involution), described)
        half = n // 2
        suite.check("pattern count").record(
            count == math.comb(n, half) // (half + 1),
            lambda n=n, count=count: f"n={n}: {count} patterns",
        )
        if settings.verbose:
            print(f"  n={n}: {count} slope patterns")

    figure = Diagonal02.from_pattern(12, WORKED_PATTERN[0])
    suite.check("worked example").record(
        diagonal_to_shuffle(figure).pi == WORKED_PATTERN[1],
        lambda: f"{figure.pattern} -> {diagonal_to_shuffle(figure)}",
    )
    figure_diagonal = figure.to_diagonal()
    suite.check("worked example disintegration").record(
        disintegration_agrees(kernel_support(figure_diagonal), figure_diagonal, settings.disintegration_grid)
        and kernel_is_monotone(figure_diagonal),
        lambda: figure.pattern,
    )

    for name, target in (("delta_M", delta_m()), ("delta_W", delta_w())):
        for size in APPROXIMATION_SIZES:
            approx = approximate_02(target, size).to_diagonal()
            suite.check("approximation from below").record(
                dominates(target, approx), lambda name=name, size=size: f"{name}, N={size}"
            )
            suite.check("approximation distance").record(
                sup_distance(target, approx) <= Fraction(1, size),
                lambda name=name, size=size: f"{name}, N={size}",
            )
    for size in APPROXIMATION_SIZES:
        approx = approximate_02(lambda t: t * t, size).to_diagonal()
        low, high = _square_gap(approx)
        suite.check("approximation from below").record(low >= 0, lambda size=size: f"t^2, N={size}")
        suite.check("approximation distance").record(
            max(high, -low) <= Fraction(1, size), lambda size=size: f"t^2, N={size}"
        )
    return suite


# Families

def _rational_grid(lo: Fraction, hi: Fraction, points: int) -> List[Fraction]:
    return [lo + (hi - lo) * Fraction(i, points - 1) for i in range(points)]


def run_families(settings: VerificationSettings) -> SuiteResult:
    suite = SuiteResult("families")
    oracle = GridOracleConfig(settings.grid_resolution)

    for alpha in _rational_grid(ZERO, Fraction(1, 2), 32):
        member = c_alpha(alpha)
        described = lambda alpha=alpha: f"alpha={format_rational(alpha)}"
        suite.check("c_alpha closed form").record(
            phi_exact(member.support) == member.phi and rho_exact(member.support) == member.rho, described
        )
        suite.check("c_alpha attains lower bound").record(
            check_lower(RegionPoint(member.phi, member.rho)) is Verdict.EQUALITY, described
        )

    for a in _rational_grid(Fraction(1, 4), Fraction(1, 2), 16):
        member = delta_up(a)
        described = lambda a=a: f"a={format_rational(a)}"
        suite.check("delta_up closed form").record(
            phi_exact(member.support) == member.phi and rho_exact(member.support) == member.rho, described
        )
        suite.check("delta_up kernel disintegration").record(
            disintegration_agrees(member.support, member.diagonal, settings.disintegration_grid), described
        )
        suite.check("delta_up kernel monotone").record(kernel_is_monotone(member.diagonal), described)
        suite.check("delta_up on r").record(r_of(member.phi).compare(member.rho) is Ordering.EQUAL, described)

    for b in _rational_grid(ZERO, Fraction(1, 4), 16):
        member = delta_down(b)
        described = lambda b=b: f"b={format_rational(b)}"
        suite.check("delta_down closed form").record(
            phi_exact(member.support) == member.phi and rho_exact(member.support) == member.rho, described
        )
        suite.check("delta_down support matches kernel").record(
            disintegration_agrees(member.support, member.diagonal, settings.disintegration_grid)
            and disintegration_agrees(kernel_support(member.diagonal), member.diagonal, settings.disintegration_grid),
            described,
        )
        suite.check("delta_down kernel monotone").record(kernel_is_monotone(member.diagonal), described)
        suite.check("delta_down on s").record(s_of(member.phi).compare(member.rho) is Ordering.EQUAL, described)
        numeric = ed_numeric_cdf(member.diagonal)
        suite.check("delta_down grid oracle").record(
            phi_numeric(numeric, oracle).contains(member.phi) and rho_numeric(numeric, oracle).contains(member.rho),
            described,
        )

    chain = suite.check("interpolation chain")
    chain_pairs = (
        ("delta_up(1/2) = star shuffle on 2 stripes", delta_up(Fraction(1, 2)), star_shuffle_stats(2)),
        ("delta_up(1/4) = delta_down(0)", delta_up(Fraction(1, 4)), _stats(delta_down(ZERO))),
        ("delta_down(1/4) = star shuffle on 4 stripes", delta_down(Fraction(1, 4)), star_shuffle_stats(4)),
    )
    for label, member, expected in chain_pairs:
        chain.record((member.phi, member.rho) == expected, lambda label=label: label)

    for n in range(2, 21):
        built = o_star(n)
        phi, rho, gap = o_star_closed_form(n)
        described = lambda n=n: f"N={n}"
        suite.check("o_star closed form").record((built.phi, built.rho) == (phi, rho), described)
        suite.check("o_star gap over r").record(
            built.gap == gap == Fraction(1, 2 * n * n * (n + 1) ** 3), described
        )
        lo, hi = 1 - Fraction(3, 2 * n), 1 - Fraction(3, 2 * (n + 1))
        suite.check("o_star footrule window").record(lo <= phi <= hi, described)

    for n in range(2, 5):
        built = o_star(n, with_support=True)
        support = ordinal_support(built.spec)
        suite.check("ordinal sum integration").record(
            (phi_exact(support), rho_exact(support)) == ordinal_stats(built.spec),
            lambda n=n: f"N={n}",
        )
    return suite


def _stats(member: FamilyMember) -> Tuple[Fraction, Fraction]:
    return member.phi, member.rho


# Boundary curves

def run_boundary(settings: VerificationSettings) -> SuiteResult:
    suite = SuiteResult("boundary")
    minus_eighth = Fraction(-1, 8)
    for x in evenly_spaced(settings.boundary_grid_points):
        described = lambda x=x: f"x={format_rational(x)}"
        lower, r, s = lower_bound(x), r_of(x), s_of(x)
        upper = SurdSum(upper_bound(x))
        suite.check("lower <= r").record(lower.compare(r) is not Ordering.GREATER, described)
        suite.check("r <= s").record(r.compare(s) is not Ordering.GREATER, described)
        suite.check("s <= upper").record(s.compare(upper) is not Ordering.GREATER, described)
        knot = is_knot(x)
        if x > minus_eighth and x < 1:
            suite.check("s > r off the knots").record(
                (s.compare(r) is Ordering.EQUAL) == knot, described
            )
        suite.check("s = upper exactly at the knots").record(
            (s.compare(upper) is Ordering.EQUAL) == knot, described
        )

    for curve in (Curve.R, Curve.S):
        for x in branch_boundaries(curve, 20):
            left, right = one_sided_values(curve, x)
            suite.check(f"{curve.value} continuous").record(
                left.compare(right) is Ordering.EQUAL,
                lambda x=x, left=left, right=right: f"x={format_rational(x)}: {left} vs {right}",
            )
    if settings.verbose:
        print(f"  sampled {settings.boundary_grid_points} rational points")
    return suite


# Oracle

def run_oracle(settings: VerificationSettings) -> SuiteResult:
    suite = SuiteResult("oracle")
    config = GridOracleConfig(settings.grid_resolution)
    references = (("M", m_cdf, ONE, ONE), ("Pi", pi_cdf, ZERO, ZERO), ("W", w_cdf, Fraction(-1, 2), -ONE))
    for name, reference, phi, rho in references:
        suite.check("reference copulas").record(
            phi_numeric(reference, config).contains(phi) and rho_numeric(reference, config).contains(rho),
            lambda name=name: name,
        )
    rng = random.Random(settings.seed)
    for n in range(4, 13):
        for _ in range(settings.random_samples):
            values = list(range(1, n + 1))
            rng.shuffle(values)
            permutation = validate(n, values)
            numeric = from_permutation(permutation).numeric_cdf()
            phi_estimate = phi_numeric(numeric, config)
            rho_estimate = rho_numeric(numeric, config)
            suite.check("footrule within bound").record(
                phi_estimate.contains(shuffle_phi(permutation)),
                lambda p=permutation, e=phi_estimate: f"{p}: grid {e.value!r}",
            )
            suite.check("rho within bound").record(
                rho_estimate.contains(shuffle_rho(permutation)),
                lambda p=permutation, e=rho_estimate: f"{p}: grid {e.value!r}",
            )
        if settings.verbose:
            print(f"  n={n}: {settings.random_samples} random shuffles")
    return suite


RUNNERS: Dict[str, Callable[[VerificationSettings], SuiteResult]] = {
    "bounds": run_bounds,
    "rearrange": run_rearrange,
    "roundtrip": run_roundtrip,
    "families": run_families,
    "boundary": run_boundary,
    "oracle": run_oracle,
}


def run_suite(name: str, settings: VerificationSettings) -> SuiteResult:
    """
    Run one named suite.

    Raises:
        UnknownSuiteError: If the suite does not exist
    """
    if name not in RUNNERS:
        raise UnknownSuiteError(f"Unknown suite {name!r}; known: {', '.join(SUITES)}")
    started = time.perf_counter()
    try:
        result = RUNNERS[name](settings)
    except PhiRhoError as e:
        result = SuiteResult(name)
        result.check("suite completed").record(False, lambda: f"{type(e).__name__}: {e}")
    result.elapsed = time.perf_counter() - started
    if settings.verbose:
        print(f"  {name} finished in {result.elapsed:.2f}s")
    return result


def print_summary(result: SuiteResult) -> None:
    """
    Print the per-invariant outcome of a suite.

    Args:
        result: Suite result to display
    """
    print("\n" + "=" * 60)
    print(f"VERIFICATION SUMMARY: {result.suite}")
    print("=" * 60)
    for check in result.checks.values():
        glyph = "✅" if check.passed else "❌"
        print(f"{glyph} {check.name}: {check.checked} checked, {check.failures} failed")
        if check.counterexample is not None:
            print(f"    first counterexample: {check.counterexample}")
    for note in result.notes:
        print(f"ℹ️  {note}")
    print(f"Elapsed: {result.elapsed:.2f}s")
    print("=" * 60)
