#!/usr/bin/env python3
"""
Test script for segment maps, weighted supports and the grid oracle.
"""

import sys
from fractions import Fraction

import numpy as np
import pytest

from src.errors import DomainError, KernelSupportError, SegmentMapError
from src.segmeasures import (
    Branch,
    GridOracleConfig,
    KernelSupport,
    SegmentMap,
    cdf,
    from_permutation,
    m_cdf,
    phi_exact,
    phi_numeric,
    pi_cdf,
    rho_exact,
    rho_numeric,
    w_cdf,
)
from src.shuffles import Permutation, shuffle_phi, shuffle_rho, star_shuffle, validate

HALF = Fraction(1, 2)


def reversal_map() -> SegmentMap:
    return SegmentMap.from_tuples([(0, 1, -1, 1)])


def test_identity_and_reversal_statistics():
    assert phi_exact(SegmentMap.identity()) == 1
    assert rho_exact(SegmentMap.identity()) == 1
    assert phi_exact(reversal_map()) == Fraction(-1, 2)
    assert rho_exact(reversal_map()) == -1


def test_identity_cdf_is_min():
    assert cdf(SegmentMap.identity(), Fraction(1, 3), Fraction(1, 4)) == Fraction(1, 4)
    assert cdf(reversal_map(), Fraction(1, 3), Fraction(1, 4)) == 0
    assert cdf(reversal_map(), Fraction(3, 4), Fraction(1, 2)) == Fraction(1, 4)


def test_star_shuffle_cdf():
    support = from_permutation(star_shuffle(2))
    assert support.cdf(HALF, HALF) == 0
    assert support.cdf(1, HALF) == HALF
    assert support.cdf(HALF, 1) == HALF
    assert support.cdf(HALF, Fraction(3, 4)) == Fraction(1, 4)


def test_exact_integration_matches_shuffle_formulas():
    for sequence in ([2, 3, 1], [3, 1, 2], [4, 7, 8, 1, 6, 5, 2, 3], [2, 4, 1, 3]):
        permutation = validate(len(sequence), sequence)
        support = from_permutation(permutation)
        assert phi_exact(support) == shuffle_phi(permutation)
        assert rho_exact(support) == shuffle_rho(permutation)


def test_segment_map_accepts_unsorted_pieces():
    segment_map = SegmentMap.from_tuples([("1/2", 1, 1, "-1/2"), (0, "1/2", 1, "1/2")])
    assert segment_map.pieces[0].x_lo == 0
    assert segment_map(Fraction(1, 4)) == Fraction(3, 4)
    assert segment_map(1) == HALF


@pytest.mark.parametrize("pieces", [
    [(0, 1, 2, 0)],
    [(0, HALF, 1, 0)],
    [(0, HALF, 1, 0), (HALF, 1, 1, -HALF)],
    [(0, HALF, 1, 0), ("3/4", 1, 1, 0)],
    [(0, 1, 1, HALF)],
])
def test_segment_map_rejects_invalid_pieces(pieces):
    with pytest.raises(SegmentMapError):
        SegmentMap.from_tuples(pieces)


def test_refine_keeps_statistics():
    refined = reversal_map().refine(Fraction(1, 3))
    assert len(refined.pieces) == 2
    assert phi_exact(refined) == Fraction(-1, 2)
    assert rho_exact(refined) == -1
    with pytest.raises(SegmentMapError):
        reversal_map().refine(0)


def test_cdf_domain():
    with pytest.raises(DomainError):
        SegmentMap.identity().cdf(Fraction(3, 2), HALF)


def test_kernel_support_mixture():
    """Equal mixture of M and W."""
    support = KernelSupport((
        Branch(0, 1, 1, 0, HALF),
        Branch(0, 1, -1, 1, HALF),
    ))
    assert phi_exact(support) == Fraction(1, 4)
    assert rho_exact(support) == 0
    assert support.cdf(HALF, HALF) == Fraction(1, 4)


def test_kernel_support_rejects_missing_mass():
    with pytest.raises(KernelSupportError):
        KernelSupport((Branch(0, 1, 1, 0, HALF),))
    with pytest.raises(KernelSupportError):
        KernelSupport((Branch(0, HALF, 1, 0), Branch(HALF, 1, 2, 0)))


def test_numeric_cdf_matches_exact():
    support = from_permutation(Permutation(4, (2, 4, 1, 3)))
    numeric = support.numeric_cdf()
    points = [Fraction(i, 8) for i in range(9)]
    u = np.array([[float(a) for _ in points] for a in points])
    v = np.array([[float(b) for b in points] for _ in points])
    expected = np.array([[float(support.cdf(a, b)) for b in points] for a in points])
    assert np.allclose(numeric(u, v), expected)


def test_grid_oracle_bounds():
    config = GridOracleConfig(100)
    assert config.phi_bound == Fraction(3, 100)
    assert config.rho_bound == Fraction(24, 100)
    with pytest.raises(ValueError):
        GridOracleConfig(0)


def test_grid_oracle_reference_copulas():
    config = GridOracleConfig(200, row_block=64)
    assert phi_numeric(m_cdf, config).contains(Fraction(1))
    assert rho_numeric(m_cdf, config).contains(Fraction(1))
    assert phi_numeric(pi_cdf, config).contains(Fraction(0))
    assert rho_numeric(pi_cdf, config).contains(Fraction(0))
    assert phi_numeric(w_cdf, config).contains(Fraction(-1, 2))
    assert rho_numeric(w_cdf, config).contains(Fraction(-1))


def test_grid_oracle_on_shuffle():
    permutation = validate(8, [4, 7, 8, 1, 6, 5, 2, 3])
    config = GridOracleConfig(256)
    numeric = from_permutation(permutation).numeric_cdf()
    assert phi_numeric(numeric, config).contains(shuffle_phi(permutation))
    assert rho_numeric(numeric, config).contains(shuffle_rho(permutation))


@pytest.mark.slow
def test_grid_oracle_at_default_resolution():
    config = GridOracleConfig(2000)
    numeric = from_permutation(star_shuffle(6)).numeric_cdf()
    assert phi_numeric(numeric, config).contains(HALF)
    assert rho_numeric(numeric, config).contains(Fraction(5, 6))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
