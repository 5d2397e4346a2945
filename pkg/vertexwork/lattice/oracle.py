"""Independent checks of the band conditions.

``det_condition`` evaluates the 4x4 determinant of the Bloch-Floquet problem directly. ``corner_oracle`` uses
that the spectral cubic is bilinear in ``(cos theta1, cos theta2)``: it has a zero on ``[-1, 1]^2`` iff its
values at the four corners are not all of one strict sign.
"""
import cmath
import math

import numpy as np
import torch
from vertexwork.circulant import dft_matrix, interpolated_eigenvalues
from vertexwork.utils import as_complex_tensor

from .conditions import _result, is_dirichlet_point, spectral_cubic, spectral_cubic_imaginary
from .params import DEGREE, BlochPhase, LatticeParams

# the cubic is symmetric in (x, y), so the corner (-1, 1) repeats (1, -1)
_CORNERS = ((1.0, 1.0), (1.0, -1.0), (-1.0, -1.0))


def det_prefactor(bp: BlochPhase, lp: LatticeParams):
    return 512.0 * cmath.exp(1j * (bp.theta1 + bp.theta2)) * cmath.exp(-1j * lp.half_angle)


def _floquet_matrices(k, bp, lp):
    e1m, e1p = cmath.exp(1j * (bp.theta1 - k * lp.ell)), cmath.exp(1j * (bp.theta1 + k * lp.ell))
    e2m, e2p = cmath.exp(1j * (bp.theta2 - k * lp.ell)), cmath.exp(1j * (bp.theta2 + k * lp.ell))
    values = as_complex_tensor(
        [
            [e1m, e1p, 0, 0],
            [0, 0, e2m, e2p],
            [1, 1, 0, 0],
            [0, 0, 1, 1],
        ]
    )
    slopes = as_complex_tensor(
        [
            [e1m, -e1p, 0, 0],
            [0, 0, e2m, -e2p],
            [-1, 1, 0, 0],
            [0, 0, -1, 1],
        ]
    )
    return values, slopes


def det_condition(k, bp: BlochPhase, lp: LatticeParams):
    """``det[(D - I) F^* M - k (D + I) F^* N]`` with ``D = diag(Lambda(t))``."""
    d = torch.diag(interpolated_eigenvalues(lp.coupling()))
    eye = torch.eye(DEGREE, dtype=d.dtype, device=d.device)
    f_star = dft_matrix(DEGREE).conj()
    m, n = _floquet_matrices(k, bp, lp)
    return complex(torch.linalg.det((d - eye) @ f_star @ m - k * (d + eye) @ f_star @ n).item())


def _corner_verdict(values, dirichlet=None):
    values = np.stack(values)
    inside = (values.min(axis=0) <= 0.0) & (values.max(axis=0) >= 0.0)
    if dirichlet is not None:
        inside = inside | dirichlet
    return _result(inside)


def corner_oracle(k_or_ikappa, lp: LatticeParams):
    """Spectral membership from the corner values; an imaginary argument ``i kappa`` tests ``E = -kappa^2``.

    The corner values degenerate at the Dirichlet points ``k = m pi / l``, which always belong to the spectrum;
    those are taken from ``is_dirichlet_point``.
    """
    value = np.asarray(k_or_ikappa)
    if np.iscomplexobj(value):
        return corner_oracle_negative(value.imag, lp)
    corners = [spectral_cubic(value, x, y, lp) for x, y in _CORNERS]
    return _corner_verdict(corners, np.asarray(is_dirichlet_point(value, lp.ell)))


def corner_oracle_negative(kappa, lp: LatticeParams):
    return _corner_verdict([spectral_cubic_imaginary(kappa, x, y, lp) for x, y in _CORNERS])


def corner_oracle_grid(k, lp: LatticeParams, points=101):
    """Slow oracle: scan the cubic over a ``points x points`` grid of quasimomenta."""
    cosines = np.cos(np.linspace(-math.pi, math.pi, points))
    k = np.asarray(k, dtype=np.float64)
    values = spectral_cubic(k[..., None, None], cosines[:, None], cosines[None, :], lp)
    flat = values.reshape(values.shape[:-2] + (-1,))
    inside = (flat.min(axis=-1) <= 0.0) & (flat.max(axis=-1) >= 0.0)
    return _result(inside | np.asarray(is_dirichlet_point(k, lp.ell)))
