"""
Copula Families

Named families with closed-form statistics: the completely dependent C_alpha,
the diagonals delta_a (up) and delta_b (down) with their diagonal copulas,
ordinal sums, and the interpolating ordinal sums O_N built from N scaled
copies of E_{delta_a} with a = N/(2N+2).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import boundsregion
from .diagonals import Diagonal, kernel_support
from .errors import FamilyParameterError, OrdinalSpecError, SegmentMapError
from .exactnum import ONE, ZERO, RationalLike, SurdSum, format_rational, to_rational
from .segmeasures import Branch, KernelSupport, SegmentMap, SupportMeasure

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FamilyMember:
    """One member of a named family with its exact statistics."""
    family: str
    parameter: Fraction
    phi: Fraction
    rho: Fraction
    support: Optional[SupportMeasure] = None
    diagonal: Optional[Diagonal] = None


def _require_range(name: str, value: Fraction, lo: Fraction, hi: Fraction) -> None:
    if not lo <= value <= hi:
        raise FamilyParameterError(
            f"{name} = {format_rational(value)} outside [{format_rational(lo)}, {format_rational(hi)}]"
        )


def _strict_diagonal(breakpoints: Sequence[Fraction], values: Sequence[Fraction]) -> Diagonal:
    """Diagonal with zero-width pieces removed."""
    knots: List[Fraction] = []
    levels: List[Fraction] = []
    for t, value in zip(breakpoints, values):
        if knots and knots[-1] == t:
            continue
        knots.append(t)
        levels.append(value)
    return Diagonal(tuple(knots), tuple(levels))


def _nonempty(branches: Sequence[Branch]) -> Tuple[Branch, ...]:
    return tuple(branch for branch in branches if branch.x_lo < branch.x_hi)


def c_alpha_stats(alpha: Fraction) -> Tuple[Fraction, Fraction]:
    phi = 6 * alpha ** 2 - 6 * alpha + 1
    rho = -16 * alpha ** 3 + 24 * alpha ** 2 - 12 * alpha + 1
    return phi, rho


def c_alpha(alpha: RationalLike) -> FamilyMember:
    """h = 1 - x on [0, alpha] and [1 - alpha, 1], h = x in between."""
    alpha = to_rational(alpha)
    _require_range("alpha", alpha, ZERO, HALF)
    pieces = _nonempty((
        Branch(ZERO, alpha, -ONE, ONE),
        Branch(alpha, 1 - alpha, ONE, ZERO),
        Branch(1 - alpha, ONE, -ONE, ONE),
    ))
    phi, rho = c_alpha_stats(alpha)
    return FamilyMember("c_alpha", alpha, phi, rho, support=SegmentMap(pieces))


def delta_up_stats(a: Fraction) -> Tuple[Fraction, Fraction]:
    return 6 * a ** 2 - 6 * a + 1, 8 * a ** 3 - 6 * a + Fraction(3, 2)


def delta_up_diagonal(a: Fraction) -> Diagonal:
    return _strict_diagonal((ZERO, a, 1 - a, ONE), (ZERO, ZERO, 1 - 2 * a, ONE))


def delta_up(a: RationalLike) -> FamilyMember:
    """0 on [0, a], x - a on [a, 1 - a], 2x - 1 on [1 - a, 1]."""
    a = to_rational(a)
    _require_range("a", a, QUARTER, HALF)
    diagonal = delta_up_diagonal(a)
    phi, rho = delta_up_stats(a)
    return FamilyMember("delta_up", a, phi, rho, support=kernel_support(diagonal), diagonal=diagonal)


def delta_down_stats(b: Fraction) -> Tuple[Fraction, Fraction]:
    phi = -6 * b ** 2 + 3 * b - Fraction(1, 8)
    rho = 8 * b ** 3 - 12 * b ** 2 + Fraction(9, 2) * b + Fraction(1, 8)
    return phi, rho


def delta_down_diagonal(b: Fraction) -> Diagonal:
    return _strict_diagonal(
        (ZERO, QUARTER, QUARTER + b, 3 * QUARTER - b, 3 * QUARTER, ONE),
        (ZERO, ZERO, 2 * b, HALF, HALF, ONE),
    )


def h_b_support(b: Fraction) -> KernelSupport:
    """Support branches of E_{delta_b}; the middle interval splits its mass 1/2-1/2."""
    return KernelSupport(_nonempty((
        Branch(ZERO, b, ONE, QUARTER),
        Branch(b, QUARTER, Fraction(2), QUARTER - b),
        Branch(QUARTER, QUARTER + b, ONE, -QUARTER),
        Branch(QUARTER + b, 3 * QUARTER - b, HALF, Fraction(5, 8) - b / 2, HALF),
        Branch(QUARTER + b, 3 * QUARTER - b, HALF, Fraction(-1, 8) + b / 2, HALF),
        Branch(3 * QUARTER - b, 3 * QUARTER, ONE, QUARTER),
        Branch(3 * QUARTER, 1 - b, Fraction(2), Fraction(-5, 4) + b),
        Branch(1 - b, ONE, ONE, -QUARTER),
    )))


def delta_down(b: RationalLike) -> FamilyMember:
    """
    0 on [0, 1/4], slope 2 on [1/4, 1/4 + b], slope 1 on [1/4 + b, 3/4 - b],
    1/2 on [3/4 - b, 3/4], 2x - 1 on [3/4, 1].
    """
    b = to_rational(b)
    _require_range("b", b, ZERO, QUARTER)
    phi, rho = delta_down_stats(b)
    return FamilyMember(
        "delta_down", b, phi, rho, support=h_b_support(b), diagonal=delta_down_diagonal(b)
    )


@dataclass(frozen=True)
class OrdinalComponent:
    """Block (a, b) carrying a copula with statistics (phi, rho)."""
    a: Fraction
    b: Fraction
    phi: Fraction
    rho: Fraction
    support: Optional[SupportMeasure] = None

    @property
    def width(self) -> Fraction:
        return self.b - self.a


@dataclass(frozen=True)
class OrdinalSumSpec:
    """Disjoint, non-degenerate blocks in [0, 1]; M outside the blocks."""
    components: Tuple[OrdinalComponent, ...]

    def __post_init__(self) -> None:
        components = tuple(sorted(self.components, key=lambda c: c.a))
        object.__setattr__(self, "components", components)
        previous_end = ZERO
        for component in components:
            if component.a >= component.b:
                raise OrdinalSpecError(f"degenerate block ({component.a}, {component.b})")
            if component.a < 0 or component.b > 1:
                raise OrdinalSpecError(f"block ({component.a}, {component.b}) leaves [0,1]")
            if component.a < previous_end:
                raise OrdinalSpecError(f"block ({component.a}, {component.b}) overlaps its predecessor")
            previous_end = component.b

    def gaps(self) -> List[Tuple[Fraction, Fraction]]:
        """Maximal intervals not covered by any block."""
        gaps = []
        cursor = ZERO
        for component in self.components:
            if component.a > cursor:
                gaps.append((cursor, component.a))
            cursor = component.b
        if cursor < 1:
            gaps.append((cursor, ONE))
        return gaps


def ordinal_stats(spec: OrdinalSumSpec) -> Tuple[Fraction, Fraction]:
    """
    rho = 1 - sum w^3 (1 - rho_k) and
    phi = sum (6 a w + w^2 (phi_k + 2)) + 3 sum over gaps (d^2 - c^2) - 2.

    The gap term vanishes when the blocks tile [0, 1].
    """
    rho = 1 - sum((c.width ** 3 * (1 - c.rho) for c in spec.components), ZERO)
    phi = sum((6 * c.a * c.width + c.width ** 2 * (c.phi + 2) for c in spec.components), ZERO)
    phi += 3 * sum((d * d - c * c for c, d in spec.gaps()), ZERO)
    return phi - 2, rho


def ordinal_support(spec: OrdinalSumSpec) -> SupportMeasure:
    """Rescale every component support into its block and use the identity on gaps."""
    branches: List[Branch] = []
    for component in spec.components:
        if component.support is None:
            raise OrdinalSpecError(f"block ({component.a}, {component.b}) has no support attached")
        a, width = component.a, component.width
        for branch in component.support.branches:
            branches.append(Branch(
                a + width * branch.x_lo,
                a + width * branch.x_hi,
                branch.slope,
                a - branch.slope * a + width * branch.intercept,
                branch.weight,
            ))
    for lo, hi in spec.gaps():
        branches.append(Branch(lo, hi, ONE, ZERO))
    if all(b.weight == 1 and b.slope in (1, -1) for b in branches):
        try:
            return SegmentMap(tuple(branches))
        except SegmentMapError:
            pass
    return KernelSupport(tuple(branches))


@dataclass(frozen=True)
class OStar:
    """N blocks ((k-1)/N, k/N), each carrying E_{delta_a} with a = N/(2N+2)."""
    n: int
    a: Fraction
    spec: OrdinalSumSpec
    phi: Fraction
    rho: Fraction
    gap: Fraction


def o_star_closed_form(n: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(phi, rho, gap over r) of O_N from the closed forms."""
    if n < 2:
        raise FamilyParameterError(f"N must be at least 2, got {n}")
    phi = Fraction(2 * n * n + n - 4, 2 * (n + 1) ** 2)
    rho = Fraction(
        2 * n ** 5 + 6 * n ** 4 + 3 * n ** 3 - 7 * n ** 2 - 3 * n + 1,
        2 * n ** 2 * (n + 1) ** 3,
    )
    return phi, rho, Fraction(1, 2 * n ** 2 * (n + 1) ** 3)


def o_star(n: int, with_support: bool = False) -> OStar:
    """
    Build O_N from ordinal_stats and measure its gap above r.

    Args:
        n: Number of blocks, at least 2
        with_support: Attach the kernel support of each block

    Returns:
        OStar with exact statistics and gap rho - r(phi)
    """
    if n < 2:
        raise FamilyParameterError(f"N must be at least 2, got {n}")
    a = Fraction(n, 2 * n + 2)
    block = delta_up(a)
    spec = OrdinalSumSpec(tuple(
        OrdinalComponent(
            Fraction(k - 1, n), Fraction(k, n), block.phi, block.rho,
            block.support if with_support else None,
        )
        for k in range(1, n + 1)
    ))
    phi, rho = ordinal_stats(spec)
    gap = (SurdSum.of(rho) - boundsregion.r_of(phi)).exact()
    return OStar(n=n, a=a, spec=spec, phi=phi, rho=rho, gap=gap)


def _o_star_member(n: RationalLike) -> FamilyMember:
    value = to_rational(n)
    if value.denominator != 1:
        raise FamilyParameterError(f"N must be an integer, got {format_rational(value)}")
    built = o_star(int(value), with_support=True)
    return FamilyMember("o_star", value, built.phi, built.rho, support=ordinal_support(built.spec))


FAMILIES: Dict[str, Tuple[str, Callable[[RationalLike], FamilyMember]]] = {
    "c_alpha": ("alpha", c_alpha),
    "delta_up": ("a", delta_up),
    "delta_down": ("b", delta_down),
    "o_star": ("N", _o_star_member),
}


def family_member(name: str, parameter: Union[RationalLike, None]) -> FamilyMember:
    """Dispatch a family name and its parameter."""
    if name not in FAMILIES:
        raise FamilyParameterError(f"Unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    parameter_name, builder = FAMILIES[name]
    if parameter is None:
        raise FamilyParameterError(f"Family {name} needs its parameter {parameter_name}")
    return builder(parameter)


def format_parameter(name: str, value: Fraction) -> str:
    """The family parameter as written in labels and records; N is a plain integer."""
    if FAMILIES[name][0] == "N":
        return str(value.numerator)
    return format_rational(value)
