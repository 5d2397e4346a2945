import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from vertexwork.lattice import (
    BlochPhase,
    LatticeParams,
    corner_oracle,
    corner_oracle_grid,
    det_condition,
    det_prefactor,
    spectral_cubic,
    v_coefficients,
)
from vertexwork.utils import get_logger


@settings(max_examples=300, deadline=None)
@given(
    k=st.floats(0.1, 5.0),
    theta1=st.floats(-math.pi, math.pi),
    theta2=st.floats(-math.pi, math.pi),
    t=st.floats(0.0, 1.0),
    alpha=st.floats(-10.0, 10.0),
    ell=st.floats(0.5, 3.0),
)
def check_determinant_identity(k, theta1, theta2, t, alpha, ell):
    lp = LatticeParams(ell, alpha, t)
    bp = BlochPhase(theta1, theta2)
    x, y = bp.cosines
    reduced = det_condition(k, bp, lp) / det_prefactor(bp, lp)
    cubic = float(spectral_cubic(k, x, y, lp))
    v = v_coefficients(k, bp, lp)
    scale = abs(v.v3) * k**3 + abs(v.v2) * k**2 + abs(v.v1) * k + abs(v.v0)
    assert abs(reduced - cubic) <= 1e-9 * scale + 1e-10
    assert abs(v.cubic(k) - cubic) <= 1e-12 * (scale + 1.0)


def check_known_determinant():
    logger = get_logger()
    # Kirchhoff coupling, t = 1: theta = 0, k l = pi / 2 and k = 2 give 512 (2 - 8)
    lp = LatticeParams(math.pi / 4.0, 0.0, 1.0)
    value = det_condition(2.0, BlochPhase(0.0, 0.0), lp)
    assert abs(value - (-3072.0)) <= 1e-9
    logger.info("determinant at a known point: pass")


def check_wrapped_phases():
    logger = get_logger()
    bp = BlochPhase.wrapped(3.0 * math.pi, -math.pi)
    assert -math.pi <= bp.theta1 < math.pi and -math.pi <= bp.theta2 < math.pi
    assert np.allclose(bp.cosines, (-1.0, -1.0))
    logger.info("bloch phases: pass")


def check_grid_oracle():
    logger = get_logger()
    lp = LatticeParams(1.0, 0.0, 1.0)
    # mid band at (m - 1/2) pi, deep in the gap just below pi
    k = np.array([math.pi / 2.0, math.pi - 0.05, 1.5 * math.pi, 2.0 * math.pi - 0.05])
    expected = np.array([True, False, True, False])
    assert np.array_equal(corner_oracle(k, lp), expected)
    assert np.array_equal(corner_oracle_grid(k, lp), expected)
    logger.info("grid oracle: pass")
