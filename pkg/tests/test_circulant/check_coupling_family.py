import math

import numpy as np
import pytest
import torch
from hypothesis import given, settings
from hypothesis import strategies as st
from vertexwork.circulant import (
    CouplingParams,
    closed_form_generator,
    coupling_matrix,
    delta_coupling_matrix,
    delta_generator,
    gamma,
    interpolated_eigenvalues,
    interpolated_generator,
    rotation_generator,
    summed_generator,
    unitarity_defect,
)
from vertexwork.exceptions import ParameterError
from vertexwork.utils import as_complex_tensor, get_logger

ALPHAS = (-10.0, -1.0, 0.0, 1.0, 10.0)


def check_equal(A, B, atol=1e-12):
    eq = torch.allclose(A, B, rtol=0.0, atol=atol)
    assert eq
    return eq


def check_endpoints():
    logger = get_logger()
    check_equal(interpolated_generator(CouplingParams(4, 0.0, 0.0)), as_complex_tensor([-0.5, 0.5, 0.5, 0.5]))
    check_equal(interpolated_generator(CouplingParams(4, 0.0, 1.0)), as_complex_tensor([0.0, 1.0, 0.0, 0.0]))
    for n in range(2, 13):
        for alpha in ALPHAS:
            check_equal(summed_generator(CouplingParams(n, alpha, 0.0)), delta_generator(n, alpha))
            check_equal(summed_generator(CouplingParams(n, alpha, 1.0)), rotation_generator(n))
    logger.info("coupling endpoints: pass")


def check_delta_coupling():
    logger = get_logger()
    n, alpha = 5, -2.5
    ones = torch.ones((n, n), dtype=torch.complex128)
    expected = -torch.eye(n, dtype=torch.complex128) + 2.0 / complex(n, alpha) * ones
    check_equal(delta_coupling_matrix(n, alpha), expected)
    # exp(-i gamma) is the eigenvalue on the constant vector
    lam0 = interpolated_eigenvalues(CouplingParams(n, alpha, 0.0))[0].item()
    assert abs(lam0 - (n - 1j * alpha) / (n + 1j * alpha)) <= 1e-14
    assert gamma(4, 4.0) == pytest.approx(math.pi / 2)
    logger.info("delta coupling: pass")


def check_unitarity_on_grid():
    logger = get_logger()
    for n in range(2, 13):
        for alpha in ALPHAS:
            for t in np.linspace(0.0, 1.0, 101):
                u = coupling_matrix(CouplingParams(n, alpha, float(t)))
                eigenvalues = interpolated_eigenvalues(CouplingParams(n, alpha, float(t)))
                assert (eigenvalues.abs() - 1.0).abs().max().item() <= 1e-12
                check_equal(u.eigenvalues, eigenvalues)
    logger.info("unitarity on the t grid: pass")


def check_closed_form_matches_sum():
    logger = get_logger()
    for n in range(2, 13):
        for alpha in ALPHAS:
            for t in np.linspace(1e-3, 1.0 - 1e-3, 37):
                p = CouplingParams(n, alpha, float(t))
                check_equal(closed_form_generator(p), summed_generator(p), atol=1e-11)
    logger.info("closed form generator: pass")


NEAR_ENDPOINTS = (1e-8, 1e-6, 1.0 - 1e-6, 1.0 - 1e-8)


def check_near_endpoints():
    logger = get_logger()
    for n in range(2, 13):
        for alpha in ALPHAS:
            for t in NEAR_ENDPOINTS:
                p = CouplingParams(n, alpha, t)
                check_equal(closed_form_generator(p), summed_generator(p), atol=1e-11)
                u = coupling_matrix(p)
                assert unitarity_defect(u.generator) <= 1e-12
            # below t_eps the summed generator is used
            assert coupling_matrix(CouplingParams(n, alpha, 1e-12)).n == n
    logger.info("closed form near the endpoints: pass")


@settings(max_examples=300, deadline=None)
@given(
    n=st.integers(2, 12),
    alpha=st.floats(-50.0, 50.0),
    t=st.one_of(st.floats(0.0, 1.0), st.sampled_from(NEAR_ENDPOINTS + (1e-10, 1.0 - 1e-10))),
)
def check_unitarity_property(n, alpha, t):
    p = CouplingParams(n, alpha, t)
    u = coupling_matrix(p)
    assert unitarity_defect(u.generator) <= 1e-12
    check_equal(u.eigenvalues, interpolated_eigenvalues(p))


@settings(max_examples=200, deadline=None)
@given(
    n=st.integers(2, 12),
    alpha=st.floats(-50.0, 50.0),
    t1=st.floats(0.0, 1.0),
    t2=st.floats(0.0, 1.0),
)
def check_continuity_in_t(n, alpha, t1, t2):
    # every eigenphase moves with speed at most pi
    u1 = coupling_matrix(CouplingParams(n, alpha, t1)).matrix
    u2 = coupling_matrix(CouplingParams(n, alpha, t2)).matrix
    assert (u1 - u2).abs().max().item() <= math.pi * abs(t1 - t2) + 1e-12


def check_parameter_bounds():
    logger = get_logger()
    with pytest.raises(ParameterError):
        CouplingParams(1, 0.0, 0.5)
    with pytest.raises(ParameterError):
        CouplingParams(4, 0.0, 1.5)
    with pytest.raises(ParameterError):
        CouplingParams(4, math.inf, 0.5)
    with pytest.raises(ParameterError):
        closed_form_generator(CouplingParams(4, 1.0, 0.0))
    assert CouplingParams(4, 1.0, 0.2).with_t(0.7).t == 0.7
    logger.info("coupling parameter bounds: pass")
