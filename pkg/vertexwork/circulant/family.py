import math
from dataclasses import dataclass, replace

import torch
from vertexwork.exceptions import ParameterError
from vertexwork.global_vars import env
from vertexwork.utils import as_complex_tensor, get_logger

from .core import CirculantUnitary, assemble_matrix, generator_from_eigenvalues, rotation_generator


def gamma(n, alpha):
    """Phase of ``(n + i alpha) / (n - i alpha)``, taken in ``(-pi, pi)``."""
    if n < 2:
        raise ParameterError(f"n must satisfy n >= 2, got n={n}")
    return 2.0 * math.atan(alpha / n)


@dataclass(frozen=True)
class CouplingParams:
    n: int
    alpha: float
    t: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ParameterError(f"n must be an integer with n >= 2, got n={self.n}")
        if not math.isfinite(self.alpha):
            raise ParameterError(f"alpha must be finite, got alpha={self.alpha}")
        if not 0.0 <= self.t <= 1.0:
            raise ParameterError(f"t must satisfy 0 <= t <= 1, got t={self.t}")

    @property
    def gamma(self):
        return gamma(self.n, self.alpha)

    def with_t(self, t):
        return replace(self, t=t)


def interpolated_eigenvalues(p: CouplingParams):
    k = torch.arange(p.n, dtype=torch.float64)
    phases = math.pi * p.t * (2.0 * k / p.n - 1.0)
    values = -torch.polar(torch.ones_like(phases), phases)
    phase0 = -(1.0 - p.t) * p.gamma
    values[0] = complex(math.cos(phase0), math.sin(phase0))
    return as_complex_tensor(values)


def delta_generator(n, alpha):
    """First row of ``-I + 2/(n + i alpha) J``."""
    g = torch.full((n,), 2.0 / complex(n, alpha), dtype=torch.complex128)
    g[0] -= 1.0
    return as_complex_tensor(g)


def delta_coupling_matrix(n, alpha):
    if n < 2:
        raise ParameterError(f"n must satisfy n >= 2, got n={n}")
    return assemble_matrix(delta_generator(n, alpha))


def summed_generator(p: CouplingParams):
    return generator_from_eigenvalues(interpolated_eigenvalues(p))


def closed_form_generator(p: CouplingParams):
    # the denominator exp(2 pi i (t - j) / n) - 1 vanishes at t = j, so it is taken as
    # 2i sin(theta / 2) exp(i theta / 2) and sin(pi t) is evaluated from the nearer endpoint
    if not 0.0 < p.t < 1.0:
        raise ParameterError(f"closed form needs 0 < t < 1, got t={p.t}")
    j = torch.arange(p.n, dtype=torch.float64)
    lam0 = complex(math.cos((1.0 - p.t) * p.gamma), -math.sin((1.0 - p.t) * p.gamma))
    e_minus = complex(math.cos(math.pi * p.t), -math.sin(math.pi * p.t))
    sin_pi_t = math.sin(math.pi * min(p.t, 1.0 - p.t))
    half = math.pi * (p.t - j) / p.n
    ratio = sin_pi_t / torch.sin(half) * torch.polar(torch.ones_like(half), -half)
    return as_complex_tensor((lam0 + e_minus - ratio) / p.n)


def interpolated_generator(p: CouplingParams):
    if p.t == 0.0:
        return delta_generator(p.n, p.alpha)
    if p.t == 1.0:
        return rotation_generator(p.n)
    if env.t_eps < p.t < 1.0 - env.t_eps:
        return closed_form_generator(p)
    get_logger().debug(f"t={p.t!r} within t_eps of an endpoint, using the summed generator")
    return summed_generator(p)


def coupling_matrix(p: CouplingParams):
    return CirculantUnitary.from_generator(interpolated_generator(p))
