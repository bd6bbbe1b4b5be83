"""
Mass Rearrangement

p-vectors of symmetric shuffles, the deficiency m of the lower bound, the
canonical hat classes, and the rearrangement pi -> pi_hat that keeps the
footrule and does not increase rho.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

from .errors import MPreconditionError, RearrangementInvariantError
from .exactnum import (
    ZERO,
    Ordering,
    StepFunction,
    SurdSum,
    cmp_pow32,
    format_rational,
    rational_sqrt,
)
from .shuffles import Involution, classify, identity, shuffle_phi, shuffle_rho


class HatClass(Enum):
    HAT_1 = "hat-1"
    HAT_2 = "hat-2"
    NONE = "none"


@dataclass(frozen=True)
class PVector:
    """Sorted displacements (i - pi(i))/N over I-, with delta = N * sum(p)."""
    n: int
    k: int
    p: Tuple[Fraction, ...]
    delta: int


@dataclass(frozen=True)
class MValue:
    """Exact sign of m plus a decimal rendering for reports."""
    sign: int
    value: float
    exact: SurdSum

    @property
    def is_non_negative(self) -> bool:
        return self.sign >= 0


def p_vector(involution: Involution) -> PVector:
    n = involution.n
    displacements = sorted(i - involution(i) for i in classify(involution).i_minus)
    return PVector(
        n=n,
        k=len(displacements),
        p=tuple(Fraction(d, n) for d in displacements),
        delta=sum(displacements),
    )


def m_value(n: int, pv: PVector) -> MValue:
    """
    m = 1 - (6/N) sum p^2 - (1 - (4/N) sum p)^(3/2), signed exactly.

    Args:
        n: Size N of the involution
        pv: Its p-vector

    Returns:
        MValue with the exact sign and a float value

    Raises:
        MPreconditionError: If (4/N) sum p > 1
    """
    rational_part = 1 - Fraction(6, n) * sum((q * q for q in pv.p), ZERO)
    base = 1 - Fraction(4, n) * sum(pv.p, ZERO)
    if base < 0:
        raise MPreconditionError(f"(4/N) * sum(p) = {format_rational(1 - base)} exceeds 1")
    ordering = cmp_pow32(Fraction(1), base, rational_part)
    sign = {Ordering.GREATER: -1, Ordering.EQUAL: 0, Ordering.LESS: 1}[ordering]
    exact = SurdSum(rational_part) + SurdSum.power_term(Fraction(1), base, negative=True)
    return MValue(sign=sign, value=float(exact), exact=exact)


def m_from_stats(phi: Fraction, rho: Fraction) -> int:
    """Sign of (1 + rho)/2 - ((1 + 2 phi)/3)^(3/2), the same m read off the statistics."""
    ordering = cmp_pow32(Fraction(1), (1 + 2 * phi) / 3, (1 + rho) / 2)
    return {Ordering.GREATER: -1, Ordering.EQUAL: 0, Ordering.LESS: 1}[ordering]


def terminal_swap_m(n: int) -> Fraction:
    """m for the single swap (1, N), where the 3/2-power is rational; equals 2/N^3."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    p = Fraction(n - 1, n)
    base = 1 - Fraction(4, n) * p
    root = rational_sqrt(base)
    if root is None:
        raise RearrangementInvariantError(f"1 - (4/N) * p = {format_rational(base)} is not a rational square")
    return 1 - Fraction(6, n) * p * p - root ** 3


def _displacement_scan(n: int, k: int, delta: int) -> int:
    """Largest l <= k with l*N - l^2 <= delta, or 0 when delta < N - 1."""
    if delta < n - 1:
        return 0
    level = 0
    for j in range(1, k + 1):
        if j * n - j * j <= delta:
            level = j
        else:
            break
    return level


def rearrange_hat(involution: Involution) -> Involution:
    """
    Push the displacement mass of I- into a terminal nested block.

    With delta = N * sum(p), l the largest count of nested terminal swaps
    whose total displacement l*N - l^2 stays within delta, the result is:
    a single swap (N, N - delta) when l = 0; the l nested swaps
    (N - i + 1, i) plus one swap carrying the remainder when delta exceeds
    l*N - l^2; the l nested swaps alone otherwise. Indices not named are
    fixed. delta = 0 returns the identity.

    Args:
        involution: Any involution

    Returns:
        The rearranged involution (a hat-1 or hat-2 member when delta > 0)

    Raises:
        RearrangementInvariantError: If the remainder swap falls outside its admissible range
    """
    n = involution.n
    pv = p_vector(involution)
    delta = pv.delta
    if delta == 0:
        return identity(n)

    values: Dict[int, int] = {}

    def swap(i: int, j: int) -> None:
        if i in values or j in values:
            raise RearrangementInvariantError(f"index reused while pairing ({i}, {j})")
        values[i] = j
        values[j] = i

    level = _displacement_scan(n, pv.k, delta)
    if level == 0:
        swap(n, n - delta)
    else:
        base_delta = level * n - level * level
        for i in range(1, level + 1):
            swap(n - i + 1, i)
        if delta > base_delta:
            k_hat = level + 1
            displacement = delta - base_delta
            if not 1 <= displacement <= n - (2 * k_hat - 1):
                raise RearrangementInvariantError(
                    f"remainder displacement {displacement} outside 1..{n - (2 * k_hat - 1)}"
                )
            head = n - k_hat + 1
            swap(head, head - displacement)
    return Involution(n, tuple(values.get(i, i) for i in range(1, n + 1)))


def hat_class_check(involution: Involution) -> HatClass:
    """
    Membership in the canonical classes.

    hat-1: I- = {N} and pi(N) in {1, ..., N-1}.
    hat-2: I- = {N-k+1, ..., N} with k >= 2, pi(N-i+1) = i for i < k, and
    the displacement of N-k+1 in {1, ..., N-(2k-1)}.
    """
    n = involution.n
    minus = classify(involution).i_minus
    if minus == (n,) and 1 <= involution(n) <= n - 1:
        return HatClass.HAT_1
    k = len(minus)
    if k >= 2 and minus == tuple(range(n - k + 1, n + 1)):
        nested = all(involution(n - i + 1) == i for i in range(1, k))
        head = n - k + 1
        displacement = head - involution(head)
        if nested and 1 <= displacement <= n - (2 * k - 1):
            return HatClass.HAT_2
    return HatClass.NONE


def rearrangement_step_functions(involution: Involution) -> Tuple[StepFunction, StepFunction, StepFunction]:
    """
    Step functions (f, f_hat, g) on k cells comparing pi with its rearrangement.

    f has values (k/N) p_i, f_hat the zero-padded (k/N) p_hat_i, and g = f - f_hat.
    """
    pv = p_vector(involution)
    if pv.k == 0:
        zero = StepFunction.zeros(1)
        return zero, zero, zero
    hat = p_vector(rearrange_hat(involution))
    scale = Fraction(pv.k, pv.n)
    padded = (ZERO,) * (pv.k - hat.k) + hat.p
    f = StepFunction.of(pv.p, scale)
    f_hat = StepFunction.of(padded, scale)
    return f, f_hat, f - f_hat


@dataclass(frozen=True)
class RearrangementRecord:
    """One row of a rearrangement report."""
    source: Involution
    result: Involution
    phi: Fraction
    rho_before: Fraction
    rho_after: Fraction
    m_sign: int
    hat_class: HatClass

    @property
    def phi_preserved(self) -> bool:
        return shuffle_phi(self.result) == self.phi

    @property
    def rho_not_increased(self) -> bool:
        return self.rho_after <= self.rho_before

    def to_record(self) -> Dict[str, object]:
        return {
            "input": list(self.source.pi),
            "output": list(self.result.pi),
            "phi": format_rational(self.phi),
            "rho_before": format_rational(self.rho_before),
            "rho_after": format_rational(self.rho_after),
            "m_sign": self.m_sign,
            "class": self.hat_class.value,
        }


def rearrangement_record(involution: Involution) -> RearrangementRecord:
    result = rearrange_hat(involution)
    return RearrangementRecord(
        source=involution,
        result=result,
        phi=shuffle_phi(involution),
        rho_before=shuffle_rho(involution),
        rho_after=shuffle_rho(result),
        m_sign=m_value(involution.n, p_vector(involution)).sign,
        hat_class=hat_class_check(result),
    )
