import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from vertexwork.exceptions import ParameterError
from vertexwork.global_vars import GENERAL, KIRCHHOFF, KRONIG_PENNEY
from vertexwork.lattice import (
    LatticeParams,
    ab_form,
    b_minus_one,
    b_plus_one_minus_two_a,
    b_plus_one_plus_two_a,
    corner_oracle,
    corner_oracle_grid,
    corner_oracle_negative,
    is_dirichlet_point,
    kronig_penney_band,
    kronig_penney_negative,
    membership_kirchhoff,
    membership_kirchhoff_negative,
    membership_negative,
    membership_positive,
    negative_regime,
    positive_regime,
    rescaled_cubic,
)
from vertexwork.utils import get_logger

ATTRACTIVE = -4.0 * (math.sqrt(2.0) - 1.0)
STRONGLY_ATTRACTIVE = -4.0 * (math.sqrt(2.0) + 1.0)
NUM_POINTS = 10**4
EDGE_DELTA = 1e-7


def check_agree(predicate, oracle, grid):
    """Predicate and oracle may only differ within ``EDGE_DELTA`` of a band edge."""
    disagree = np.asarray(predicate(grid)) != np.asarray(oracle(grid))
    below, above = grid - EDGE_DELTA, grid + EDGE_DELTA
    near_edge = (np.asarray(predicate(below)) != np.asarray(predicate(above))) | (
        np.asarray(oracle(below)) != np.asarray(oracle(above))
    )
    assert not np.any(disagree & ~near_edge), grid[disagree & ~near_edge][:5]
    return True


def check_regimes():
    logger = get_logger()
    assert positive_regime(LatticeParams(1.0, ATTRACTIVE, 0.0)) == KRONIG_PENNEY
    assert positive_regime(LatticeParams(1.0, 0.0, 0.4)) == KIRCHHOFF
    assert positive_regime(LatticeParams(1.0, ATTRACTIVE, 1.0)) == KIRCHHOFF
    assert positive_regime(LatticeParams(1.0, ATTRACTIVE, 0.4)) == GENERAL
    assert negative_regime(LatticeParams(1.0, 5.0, 0.4)) == KIRCHHOFF
    assert negative_regime(LatticeParams(1.0, ATTRACTIVE, 0.4)) == GENERAL
    with pytest.raises(ParameterError):
        LatticeParams(0.0, 0.0, 0.5)
    with pytest.raises(ParameterError):
        LatticeParams(1.0, 0.0, -0.1)
    logger.info("band regimes: pass")


def check_reduced_form():
    logger = get_logger()
    k = np.array([0.37, 1.1, 2.3, 4.4, 7.3])
    for lp in (LatticeParams(1.0, ATTRACTIVE, 0.5), LatticeParams(2.0, 3.0, 0.3)):
        for x, y in ((0.3, -0.7), (1.0, 1.0), (-1.0, 0.2)):
            assert np.allclose(ab_form(k, x, y, lp), rescaled_cubic(k, x, y, lp), rtol=1e-9, atol=1e-12)
        assert np.allclose(b_plus_one_minus_two_a(k, lp), ab_form(k, -1.0, -1.0, lp), rtol=1e-9, atol=1e-12)
        assert np.allclose(b_plus_one_plus_two_a(k, lp), ab_form(k, 1.0, 1.0, lp), rtol=1e-9, atol=1e-12)
        assert np.allclose(b_minus_one(k, lp), ab_form(k, 1.0, -1.0, lp), rtol=1e-9, atol=1e-12)
    with pytest.raises(ParameterError):
        ab_form(k, 0.0, 0.0, LatticeParams(1.0, 0.0, 0.5))
    logger.info("reduced band form: pass")


def check_dirichlet_points():
    logger = get_logger()
    ell = 1.3
    points = np.array([m * math.pi / ell for m in range(1, 6)])
    assert np.all(is_dirichlet_point(points, ell))
    assert not is_dirichlet_point(points[0] * (1.0 + 1e-6), ell)
    # always in the spectrum, but a band condition alone reports them only where a band reaches them
    lp = LatticeParams(ell, 0.0, 1.0)
    assert np.all(membership_positive(points, lp))
    assert not np.any(membership_positive(points, lp, dirichlet=False))
    logger.info("dirichlet points: pass")


def check_positive_equivalence():
    logger = get_logger()
    for ell in (1.0, 2.0 * math.pi):
        grid = np.linspace(0.01, 25.0, NUM_POINTS)
        for alpha in (ATTRACTIVE, STRONGLY_ATTRACTIVE, 2.5):
            for t in (0.2, 0.5, 0.85):
                lp = LatticeParams(ell, alpha, t)
                check_agree(lambda k: membership_positive(k, lp), lambda k: corner_oracle(k, lp), grid)
        for t in (0.3, 0.8, 1.0):
            lp = LatticeParams(ell, 0.0, t)
            check_agree(lambda k: membership_kirchhoff(k, lp), lambda k: corner_oracle(k, lp), grid)
            check_agree(lambda k: membership_positive(k, lp), lambda k: corner_oracle(k, lp), grid)
        for alpha in (-3.0, 0.0, 4.0):
            lp = LatticeParams(ell, alpha, 0.0)
            check_agree(lambda k: kronig_penney_band(k, lp), lambda k: corner_oracle(k, lp), grid)
    logger.info("positive band conditions against the corner oracle: pass")


def check_negative_equivalence():
    logger = get_logger()
    grid = np.linspace(0.01, 6.0, NUM_POINTS)
    for ell in (1.0, 2.0 * math.pi):
        for alpha in (ATTRACTIVE, STRONGLY_ATTRACTIVE, -1.0, 0.0, 3.0):
            for t in (0.0, 0.3, 0.7, 1.0):
                lp = LatticeParams(ell, alpha, t)
                check_agree(
                    lambda kappa: membership_negative(kappa, lp),
                    lambda kappa: corner_oracle_negative(kappa, lp),
                    grid,
                )
        lp = LatticeParams(ell, STRONGLY_ATTRACTIVE, 0.0)
        check_agree(
            lambda kappa: kronig_penney_negative(kappa, lp),
            lambda kappa: corner_oracle(1j * kappa, lp),
            grid,
        )
    logger.info("negative band conditions against the corner oracle: pass")


def check_repulsive_negative_side():
    logger = get_logger()
    grid = np.linspace(0.01, 10.0, NUM_POINTS)
    for t in (0.2, 0.5, 0.9):
        repulsive = membership_negative(grid, LatticeParams(1.0, 5.0, t))
        kirchhoff = membership_kirchhoff_negative(grid, LatticeParams(1.0, 0.0, t))
        assert np.array_equal(repulsive, kirchhoff)
    logger.info("repulsive coupling leaves the negative spectrum: pass")


def check_dirichlet_points_in_oracle():
    logger = get_logger()
    # sin(k l) rounds to about 1e-14 here and leaves every corner value slightly negative
    assert corner_oracle(25.0, LatticeParams(2.0 * math.pi, 0.0, 1.0))
    for ell in (1.0, 1.3, 2.0 * math.pi):
        points = np.array([m * math.pi / ell for m in range(1, 9)])
        for alpha in (STRONGLY_ATTRACTIVE, ATTRACTIVE, 0.0, 2.5):
            for t in (0.0, 0.3, 0.85, 1.0):
                lp = LatticeParams(ell, alpha, t)
                assert np.all(corner_oracle(points, lp))
                assert np.all(corner_oracle_grid(points, lp))
                assert np.all(membership_positive(points, lp))
    logger.info("dirichlet points in the corner oracle: pass")


@settings(max_examples=200, deadline=None)
@given(
    ell=st.floats(0.5, 7.0),
    alpha=st.floats(-12.0, 5.0),
    t=st.one_of(st.just(0.0), st.floats(0.01, 1.0)),
    k=st.floats(0.05, 20.0),
    m=st.integers(1, 12),
)
def check_oracle_agreement_property(ell, alpha, t, k, m):
    lp = LatticeParams(ell, alpha, t)
    grid = np.array([k, m * math.pi / ell])
    check_agree(lambda q: membership_positive(q, lp), lambda q: corner_oracle(q, lp), grid)
