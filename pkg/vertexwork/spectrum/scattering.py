import math
from dataclasses import dataclass
from typing import Optional

import torch
from vertexwork.circulant import (
    CouplingParams,
    assemble_matrix,
    generator_from_eigenvalues,
    interpolated_eigenvalues,
)
from vertexwork.exceptions import ParameterError, PoleError
from vertexwork.utils import as_complex_tensor


@dataclass(frozen=True)
class SMatrix:
    k: float
    matrix: torch.Tensor
    mu: torch.Tensor
    generator: Optional[torch.Tensor] = None


def _check_momentum(k):
    if not k > 0 or not math.isfinite(k):
        raise ParameterError(f"k must satisfy 0 < k < inf, got k={k}")


def unitarity_residual(matrix):
    eye = torch.eye(matrix.shape[-1], dtype=matrix.dtype, device=matrix.device)
    return (matrix.conj().transpose(-2, -1) @ matrix - eye).abs().max().item()


def s_matrix_general(k, u):
    _check_momentum(k)
    u = as_complex_tensor(u)
    eye = torch.eye(u.shape[-1], dtype=u.dtype, device=u.device)
    lhs = (k + 1.0) * eye + (k - 1.0) * u
    rhs = (k - 1.0) * eye + (k + 1.0) * u
    try:
        s = torch.linalg.solve(lhs, rhs)
    except RuntimeError as e:
        raise PoleError(f"(k+1)I + (k-1)U is singular at k={k}") from e
    if not torch.isfinite(s.abs()).all():
        raise PoleError(f"(k+1)I + (k-1)U is singular at k={k}")
    return SMatrix(k=k, matrix=s, mu=torch.linalg.eigvals(s))


def s_eigenvalues(k, lambdas):
    lambdas = as_complex_tensor(lambdas)
    return (k - 1.0 + (k + 1.0) * lambdas) / (k + 1.0 + (k - 1.0) * lambdas)


def s_matrix_circulant(k, lambdas):
    _check_momentum(k)
    mu = s_eigenvalues(k, lambdas)
    generator = generator_from_eigenvalues(mu)
    return SMatrix(k=k, matrix=assemble_matrix(generator), mu=mu, generator=generator)


def s_matrix(k, p: CouplingParams):
    return s_matrix_circulant(k, interpolated_eigenvalues(p))


def high_energy_limit(n, p: Optional[CouplingParams] = None):
    """Generator of ``lim S(k)`` as ``k -> inf``: the identity for odd ``n``; for even ``n`` the eigenvalue
    ``lambda_{n/2} = -1`` survives and flips one mode. At ``t = 0`` every ``lambda_j``, ``j >= 1``, is -1 and the
    limit is ``-I + (2/n) J``."""
    if n < 2:
        raise ParameterError(f"n must satisfy n >= 2, got n={n}")
    if p is not None and abs((1.0 - p.t) * p.gamma) >= math.pi:
        raise ParameterError(f"|(1-t) gamma| must stay below pi, got {(1.0 - p.t) * p.gamma}")

    if p is not None and p.t == 0.0:
        return as_complex_tensor([2.0 / n - 1.0] + [2.0 / n] * (n - 1))
    g = [1.0] + [0.0] * (n - 1)
    if n % 2 == 0:
        g = [g[j] - (2.0 / n) * (-1) ** j for j in range(n)]
    return as_complex_tensor(g)


def high_energy_distance(k, p: CouplingParams):
    limit = assemble_matrix(high_energy_limit(p.n, p))
    return (s_matrix(k, p).matrix - limit).abs().max().item()


def n4_generator_entries(k, t, gamma):
    _check_momentum(k)
    if not 0.0 <= t <= 1.0:
        raise ParameterError(f"t must satisfy 0 <= t <= 1, got t={t}")
    common = 1.0 / (2.0 * (1.0 + 1j * math.tan((1.0 - t) * gamma / 2.0) / k))
    kt = k * math.tan(math.pi * t / 4.0)
    lorentz = 1.0 / (1.0 + kt**2)
    dispersive = kt / (1.0 + kt**2)
    return as_complex_tensor(
        [
            common - lorentz,
            common + dispersive,
            -1.0 + common + lorentz,
            common - dispersive,
        ]
    )
