"""
Bounds Region

The bound curves of the (footrule, rho) region, the known boundary function
r and the improved function s, and exact membership verdicts for rational
points. Curves with 3/2-power branches are evaluated as SurdSum values, so
every comparison between them is exact.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .errors import DomainError
from .exactnum import Ordering, RationalLike, SurdSum, cmp_pow32, format_rational, to_rational

LOWER_COEFFICIENT_SQUARED = Fraction(4, 27)
R_COEFFICIENT_SQUARED = Fraction(1, 27)
S_COEFFICIENT_SQUARED = Fraction(1, 216)

PHI_MIN = Fraction(-1, 2)
EIGHTH = Fraction(1, 8)
QUARTER = Fraction(1, 4)

PRECISION_NOTE = (
    "y is the exact value rounded to double precision; "
    "3/2-power branches carry one rounded square root (relative error below 1e-15)"
)


class Verdict(Enum):
    STRICT = "strict"
    EQUALITY = "equality"
    VIOLATED = "violated"


class Curve(Enum):
    LOWER = "lower"
    UPPER = "upper"
    R = "r"
    S = "s"


@dataclass(frozen=True)
class RegionPoint:
    """A rational (phi, rho) pair with a provenance label."""
    phi: Fraction
    rho: Fraction
    label: str = ""

    def __post_init__(self) -> None:
        phi, rho = to_rational(self.phi), to_rational(self.rho)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "rho", rho)
        if not PHI_MIN <= phi <= 1:
            raise DomainError(f"phi = {format_rational(phi)} outside [-1/2, 1]")
        if not -1 <= rho <= 1:
            raise DomainError(f"rho = {format_rational(rho)} outside [-1, 1]")


@dataclass(frozen=True)
class CurveSample:
    x: float
    y: float
    curve: str
    precision: str = PRECISION_NOTE


def _require_domain(x: Fraction) -> None:
    if not PHI_MIN <= x <= 1:
        raise DomainError(f"x = {format_rational(x)} outside [-1/2, 1]")


def upper_bound(x: RationalLike) -> Fraction:
    """1 - (2/3)(1 - x)^2."""
    x = to_rational(x)
    return 1 - Fraction(2, 3) * (1 - x) ** 2


def lower_bound(x: RationalLike) -> SurdSum:
    """(2/9) sqrt(3) (1 + 2x)^(3/2) - 1."""
    x = to_rational(x)
    _require_domain(x)
    return SurdSum(Fraction(-1)) + SurdSum.power_term(LOWER_COEFFICIENT_SQUARED, 1 + 2 * x)


def check_upper(point: RegionPoint) -> Verdict:
    gap = upper_bound(point.phi) - point.rho
    if gap > 0:
        return Verdict.STRICT
    if gap == 0:
        return Verdict.EQUALITY
    return Verdict.VIOLATED


def check_lower(point: RegionPoint) -> Verdict:
    """Decide rho >= lower bound as (4/27)(1 + 2 phi)^3 against (1 + rho)^2."""
    ordering = cmp_pow32(LOWER_COEFFICIENT_SQUARED, 1 + 2 * point.phi, 1 + point.rho)
    return {
        Ordering.LESS: Verdict.STRICT,
        Ordering.EQUAL: Verdict.EQUALITY,
        Ordering.GREATER: Verdict.VIOLATED,
    }[ordering]


def segment_index(x: Fraction, right: bool = False) -> int:
    """
    The n >= 2 with x in [1 - 3/(2n), 1 - 3/(2(n+1))], for x in [1/4, 1).

    A knot belongs to the segment on its left unless `right` is set.
    """
    ratio = Fraction(3, 2) / (1 - x)
    if right:
        return max(2, math.floor(ratio))
    return max(2, math.ceil(ratio) - 1)


def star_knot(n: int) -> Tuple[Fraction, Fraction]:
    """(phi, rho) of the star shuffle on 2n stripes: (1 - 3/(2n), 1 - 3/(2n^2))."""
    return 1 - Fraction(3, 2 * n), 1 - Fraction(3, 2 * n * n)


def _interpolate(x: Fraction, x0: Fraction, y0: Fraction, x1: Fraction, y1: Fraction) -> Fraction:
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def _left_of(x: Fraction, knot: Fraction, right: bool) -> bool:
    return x < knot if right else x <= knot


def _steep_branch(x: Fraction) -> SurdSum:
    # shared by r and s on [-1/2, -1/8]
    return SurdSum(2 * x + Fraction(1, 2)) + SurdSum.power_term(R_COEFFICIENT_SQUARED, 1 + 2 * x, negative=True)


def _r_value(x: Fraction, right: bool) -> SurdSum:
    if x == 1:
        return SurdSum(Fraction(1))
    if _left_of(x, -EIGHTH, right):
        return _steep_branch(x)
    if _left_of(x, QUARTER, right):
        return SurdSum(Fraction(4, 3) * x + Fraction(7, 24))
    n = segment_index(x, right)
    slope = Fraction(2 * n + 1, n * n + n)
    intercept = Fraction(2 * n * n - 2 * n + 1, 2 * n * n + 2 * n)
    return SurdSum(slope * x + intercept)


def r_of(x: RationalLike) -> SurdSum:
    """
    The boundary function r.

    2x + 1/2 - (sqrt(3)/9)(1 + 2x)^(3/2) on [-1/2, -1/8], (4/3)x + 7/24 on
    [-1/8, 1/4], and ((2n+1)/(n^2+n)) x + (2n^2-2n+1)/(2n^2+2n) on
    [1 - 3/(2n), 1 - 3/(2(n+1))] for n >= 2. Knots belong to the left branch.
    """
    x = to_rational(x)
    _require_domain(x)
    return _r_value(x, right=False)


def s_knots(n: int) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    """Left star knot, interior ordinal-sum knot and right star knot of segment n."""
    from .families import o_star_closed_form

    phi, rho, _ = o_star_closed_form(n)
    return star_knot(n), (phi, rho), star_knot(n + 1)


def _s_value(x: Fraction, right: bool) -> SurdSum:
    if x == 1:
        return SurdSum(Fraction(1))
    if _left_of(x, -EIGHTH, right):
        return _steep_branch(x)
    if _left_of(x, QUARTER, right):
        return SurdSum(x + Fraction(3, 8)) + SurdSum.power_term(S_COEFFICIENT_SQUARED, 1 - 4 * x, negative=True)
    (x0, y0), (xm, ym), (x1, y1) = s_knots(segment_index(x, right))
    if _left_of(x, xm, right):
        return SurdSum(_interpolate(x, x0, y0, xm, ym))
    return SurdSum(_interpolate(x, xm, ym, x1, y1))


def s_of(x: RationalLike) -> SurdSum:
    """
    The improved boundary function s.

    Equal to r on [-1/2, -1/8], x + 3/8 - (sqrt(6)/36)(1 - 4x)^(3/2) on
    [-1/8, 1/4], and on every [1 - 3/(2N), 1 - 3/(2(N+1))] the two segments
    through the star-shuffle knots and the statistics of O_N.
    """
    x = to_rational(x)
    _require_domain(x)
    return _s_value(x, right=False)


def one_sided_values(curve: Curve, x: RationalLike) -> Tuple[SurdSum, SurdSum]:
    """Values at x of the branch ending at x and of the branch starting at x."""
    x = to_rational(x)
    _require_domain(x)
    if curve is Curve.R:
        return _r_value(x, right=False), _r_value(x, right=True)
    if curve is Curve.S:
        return _s_value(x, right=False), _s_value(x, right=True)
    value = curve_value(curve, x)
    return value, value


def branch_boundaries(curve: Curve, segments: int) -> List[Fraction]:
    """Branch boundaries of r or s on the first `segments` linear segments past 1/4."""
    boundaries = [-EIGHTH, QUARTER]
    for n in range(2, segments + 2):
        boundaries.append(star_knot(n + 1)[0])
        if curve is Curve.S:
            boundaries.append(s_knots(n)[1][0])
    return sorted(boundaries)


def curve_value(curve: Curve, x: RationalLike) -> SurdSum:
    if curve is Curve.LOWER:
        return lower_bound(x)
    if curve is Curve.UPPER:
        x = to_rational(x)
        _require_domain(x)
        return SurdSum(upper_bound(x))
    if curve is Curve.R:
        return r_of(x)
    return s_of(x)


def is_knot(x: Fraction) -> bool:
    """True at x = 1 and at the star knots 1 - 3/(2N), N >= 1."""
    if x == 1:
        return True
    ratio = Fraction(3, 2) / (1 - x)
    return ratio.denominator == 1


@dataclass(frozen=True)
class RegionReport:
    point: RegionPoint
    upper: Verdict
    lower: Verdict
    r_gap: Optional[Fraction]
    s_gap: Optional[Fraction]

    @property
    def inside(self) -> bool:
        return Verdict.VIOLATED not in (self.upper, self.lower)

    @property
    def strictly_inside(self) -> bool:
        return self.upper is Verdict.STRICT and self.lower is Verdict.STRICT


def region_verdict(point: RegionPoint) -> RegionReport:
    """Both bound verdicts plus the exact gaps to r and s where those are linear."""
    r_value = r_of(point.phi)
    s_value = s_of(point.phi)
    return RegionReport(
        point=point,
        upper=check_upper(point),
        lower=check_lower(point),
        r_gap=point.rho - r_value.rational if r_value.is_rational else None,
        s_gap=s_value.rational - point.rho if s_value.is_rational else None,
    )


def evenly_spaced(samples: int) -> List[Fraction]:
    """samples rational points from -1/2 to 1 inclusive."""
    if samples < 1:
        raise DomainError(f"Need at least one sample, got {samples}")
    if samples == 1:
        return [PHI_MIN]
    return [PHI_MIN + Fraction(3 * i, 2 * (samples - 1)) for i in range(samples)]


def sample_curve(curve: Curve, xs: Iterable[RationalLike]) -> List[CurveSample]:
    return [
        CurveSample(x=float(to_rational(x)), y=float(curve_value(curve, x)), curve=curve.value)
        for x in xs
    ]
