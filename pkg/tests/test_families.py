#!/usr/bin/env python3
"""
Test script for the named copula families and ordinal sums.
"""

import sys
from fractions import Fraction

import pytest

from src.boundsregion import RegionPoint, Verdict, check_lower, r_of, s_of
from src.errors import FamilyParameterError, OrdinalSpecError
from src.exactnum import Ordering
from src.families import (
    FAMILIES,
    OrdinalComponent,
    OrdinalSumSpec,
    c_alpha,
    delta_down,
    delta_up,
    family_member,
    format_parameter,
    o_star,
    o_star_closed_form,
    ordinal_stats,
    ordinal_support,
)
from src.segmeasures import SegmentMap, phi_exact, rho_exact
from src.shuffles import star_shuffle_stats

F = Fraction


@pytest.mark.parametrize("alpha, phi, rho", [
    (F(0), F(1), F(1)),
    (F(1, 4), F(-1, 8), F(-3, 4)),
    (F(1, 2), F(-1, 2), F(-1)),
])
def test_c_alpha_values(alpha, phi, rho):
    member = c_alpha(alpha)
    assert (member.phi, member.rho) == (phi, rho)
    assert isinstance(member.support, SegmentMap)
    assert (phi_exact(member.support), rho_exact(member.support)) == (phi, rho)
    assert check_lower(RegionPoint(phi, rho)) is Verdict.EQUALITY


def test_c_alpha_closed_form_on_a_grid():
    for i in range(17):
        member = c_alpha(F(i, 32))
        assert phi_exact(member.support) == member.phi
        assert rho_exact(member.support) == member.rho
        assert check_lower(RegionPoint(member.phi, member.rho)) is Verdict.EQUALITY


def test_c_alpha_rejects_parameter():
    with pytest.raises(FamilyParameterError):
        c_alpha(F(3, 4))
    with pytest.raises(FamilyParameterError):
        c_alpha(F(-1, 10))


@pytest.mark.parametrize("a, phi, rho", [
    (F(1, 2), F(-1, 2), F(-1, 2)),
    (F(1, 4), F(-1, 8), F(1, 8)),
    (F(1, 3), F(-1, 3), F(-11, 54)),
])
def test_delta_up_values(a, phi, rho):
    member = delta_up(a)
    assert (member.phi, member.rho) == (phi, rho)
    assert (phi_exact(member.support), rho_exact(member.support)) == (phi, rho)
    assert r_of(phi).compare(rho) is Ordering.EQUAL


def test_delta_up_rejects_parameter():
    with pytest.raises(FamilyParameterError):
        delta_up(F(1, 5))


@pytest.mark.parametrize("b, phi, rho", [
    (F(0), F(-1, 8), F(1, 8)),
    (F(1, 8), F(5, 32), F(33, 64)),
    (F(1, 4), F(1, 4), F(5, 8)),
])
def test_delta_down_values(b, phi, rho):
    member = delta_down(b)
    assert (member.phi, member.rho) == (phi, rho)
    assert (phi_exact(member.support), rho_exact(member.support)) == (phi, rho)
    assert s_of(phi).compare(rho) is Ordering.EQUAL


def test_delta_down_support_disintegrates_its_diagonal():
    from src.diagonals import ed_cdf, kernel_support

    for b in (F(0), F(1, 16), F(3, 16), F(1, 4)):
        member = delta_down(b)
        grid = [F(i, 8) for i in range(9)]
        for u in grid:
            for v in grid:
                expected = ed_cdf(member.diagonal, u, v)
                assert member.support.cdf(u, v) == expected
                assert kernel_support(member.diagonal).cdf(u, v) == expected


def test_delta_down_zero_width_pieces_are_dropped():
    assert len(delta_down(F(0)).diagonal.breakpoints) == 4
    assert len(delta_down(F(1, 4)).diagonal.breakpoints) == 5
    assert len(delta_down(F(1, 8)).diagonal.breakpoints) == 6


def test_interpolation_chain_endpoints():
    assert (delta_up(F(1, 2)).phi, delta_up(F(1, 2)).rho) == star_shuffle_stats(2)
    assert (delta_up(F(1, 4)).phi, delta_up(F(1, 4)).rho) == (delta_down(F(0)).phi, delta_down(F(0)).rho)
    assert (delta_down(F(1, 4)).phi, delta_down(F(1, 4)).rho) == star_shuffle_stats(4)


def test_ordinal_sum_spec_validation():
    with pytest.raises(OrdinalSpecError):
        OrdinalSumSpec((OrdinalComponent(F(1, 2), F(1, 2), F(0), F(0)),))
    with pytest.raises(OrdinalSpecError):
        OrdinalSumSpec((
            OrdinalComponent(F(0), F(1, 2), F(0), F(0)),
            OrdinalComponent(F(1, 4), F(3, 4), F(0), F(0)),
        ))
    with pytest.raises(OrdinalSpecError):
        OrdinalSumSpec((OrdinalComponent(F(1, 2), F(3, 2), F(0), F(0)),))


def test_ordinal_sum_gaps():
    spec = OrdinalSumSpec((OrdinalComponent(F(1, 4), F(1, 2), F(0), F(0)),))
    assert spec.gaps() == [(F(0), F(1, 4)), (F(1, 2), F(1))]
    assert OrdinalSumSpec(()).gaps() == [(F(0), F(1))]


def test_ordinal_stats():
    assert ordinal_stats(OrdinalSumSpec(())) == (F(1), F(1))
    whole = OrdinalSumSpec((OrdinalComponent(F(0), F(1), F(-1, 2), F(-1)),))
    assert ordinal_stats(whole) == (F(-1, 2), F(-1))


def test_ordinal_stats_with_gaps_match_integration():
    block = c_alpha(F(1, 2))
    spec = OrdinalSumSpec((OrdinalComponent(F(1, 4), F(3, 4), block.phi, block.rho, block.support),))
    support = ordinal_support(spec)
    assert isinstance(support, SegmentMap)
    assert (phi_exact(support), rho_exact(support)) == ordinal_stats(spec)


def test_ordinal_support_needs_component_supports():
    spec = OrdinalSumSpec((OrdinalComponent(F(0), F(1), F(0), F(0)),))
    with pytest.raises(OrdinalSpecError):
        ordinal_support(spec)


def test_o_star_two():
    built = o_star(2)
    assert (built.phi, built.rho, built.gap) == (F(1, 3), F(151, 216), F(1, 216))
    assert built.a == F(1, 3)


@pytest.mark.parametrize("n", range(2, 21))
def test_o_star_closed_form(n):
    built = o_star(n)
    phi, rho, gap = o_star_closed_form(n)
    assert (built.phi, built.rho, built.gap) == (phi, rho, gap)
    assert gap == F(1, 2 * n * n * (n + 1) ** 3)
    assert 1 - F(3, 2 * n) <= phi <= 1 - F(3, 2 * (n + 1))


@pytest.mark.parametrize("n", [2, 3])
def test_o_star_support_integration(n):
    built = o_star(n, with_support=True)
    support = ordinal_support(built.spec)
    assert (phi_exact(support), rho_exact(support)) == (built.phi, built.rho)


def test_o_star_rejects_small_n():
    with pytest.raises(FamilyParameterError):
        o_star(1)
    with pytest.raises(FamilyParameterError):
        o_star_closed_form(1)


def test_family_member_dispatch():
    assert set(FAMILIES) == {"c_alpha", "delta_up", "delta_down", "o_star"}
    member = family_member("c_alpha", "1/4")
    assert (member.phi, member.rho) == (F(-1, 8), F(-3, 4))
    member = family_member("o_star", "2")
    assert (member.phi, member.rho) == (F(1, 3), F(151, 216))
    assert (phi_exact(member.support), rho_exact(member.support)) == (member.phi, member.rho)


@pytest.mark.parametrize("name, parameter", [
    ("bogus", "1/2"),
    ("c_alpha", None),
    ("o_star", "5/2"),
    ("delta_down", "1/2"),
])
def test_family_member_rejects(name, parameter):
    with pytest.raises(FamilyParameterError):
        family_member(name, parameter)


def test_format_parameter():
    assert format_parameter("o_star", F(3)) == "3"
    assert format_parameter("c_alpha", F(0)) == "0/1"
    assert format_parameter("delta_up", F(1, 3)) == "1/3"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
