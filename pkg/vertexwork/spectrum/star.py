import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
import torch
from vertexwork.circulant import CirculantUnitary, CouplingParams, coupling_matrix
from vertexwork.global_vars import env
from vertexwork.utils import get_logger, scan_roots

KAPPA0 = "kappa0"

# the continuous spectrum of the star graph is [0, inf) for every coupling
CONTINUOUS_SPECTRUM = (0.0, math.inf)


def kappa1_label(j):
    return f"kappa1-{j}"


@dataclass(frozen=True)
class StarSpectrum:
    energies: List[float]
    kappas: List[float]
    multiplicities: List[int]
    branches: List[Tuple[str, ...]]

    def __len__(self):
        return sum(self.multiplicities)


def branch_kappas(p: CouplingParams) -> Dict[str, float]:
    kappas = {}
    if p.alpha < 0 and p.t != 1.0:
        kappas[KAPPA0] = -math.tan((1.0 - p.t) * p.gamma / 2.0)
    if p.n >= 3 and p.t > 0.0:
        for j in range(1, (p.n + 1) // 2):
            kappas[kappa1_label(j)] = -1.0 / math.tan((j / p.n - 0.5) * math.pi * p.t)
    return kappas


def branch_energies(p: CouplingParams) -> Dict[str, float]:
    return {label: -kappa**2 for label, kappa in branch_kappas(p).items()}


def negative_eigenvalues(p: CouplingParams, rtol=1e-12):
    grouped = []
    for label, kappa in sorted(branch_kappas(p).items(), key=lambda item: -item[1]):
        if grouped and abs(grouped[-1][0] - kappa) <= rtol * kappa:
            grouped[-1][1].append(label)
        else:
            grouped.append((kappa, [label]))

    return StarSpectrum(
        energies=[-kappa**2 for kappa, _ in grouped],
        kappas=[kappa for kappa, _ in grouped],
        multiplicities=[len(labels) for _, labels in grouped],
        branches=[tuple(labels) for _, labels in grouped],
    )


def secular_determinant(kappa, u: CirculantUnitary):
    m = u.matrix
    eye = torch.eye(u.n, dtype=m.dtype, device=m.device)
    return complex(torch.linalg.det((m - eye) - 1j * kappa * (m + eye)).item())


def _secular_phase(u: CirculantUnitary):
    # det = prod_j [(lambda_j - 1) - i kappa (lambda_j + 1)] = C * prod_{lambda_j != -1} (kappa - kappa_j)
    phase = 1.0 + 0.0j
    for lam in u.eigenvalues.tolist():
        phase *= -2.0 if abs(lam + 1.0) <= env.unitary_tol else -1j * (lam + 1.0)
    return phase


def normalised_secular(kappas, u: CirculantUnitary):
    """Secular determinant divided by its constant phase; real, with the star eigenvalues as its roots."""
    kappas = torch.as_tensor(np.atleast_1d(kappas), dtype=torch.float64).to(u.generator.device)
    m = u.matrix
    eye = torch.eye(u.n, dtype=m.dtype, device=m.device)
    batch = (m - eye).unsqueeze(0) - 1j * kappas.view(-1, 1, 1) * (m + eye).unsqueeze(0)
    values = torch.linalg.det(batch) / _secular_phase(u)
    return values.real.cpu().numpy()


def secular_roots(u: CirculantUnitary, kappa_min=1e-6, kappa_max=1e3, points=10**4, xtol=None):
    grid = np.logspace(math.log10(kappa_min), math.log10(kappa_max), points)
    values = normalised_secular(grid, u)
    roots = scan_roots(lambda kappa: normalised_secular(kappa, u)[0], grid, values, xtol)
    get_logger().debug(f"secular scan over {points} points in [{kappa_min}, {kappa_max}] found {len(roots)} roots")
    return roots


@dataclass
class LimitReport:
    endpoint: float
    t_grid: np.ndarray
    trajectories: Dict[str, np.ndarray] = field(default_factory=dict)
    limits: Dict[str, float] = field(default_factory=dict)


def limit_behavior(p: CouplingParams, points=50, closest=1e-8):
    """Energies of every branch along a log-spaced path of t towards the endpoint nearest to ``p.t``."""
    towards_zero = p.t <= 0.5
    distance = p.t if towards_zero else 1.0 - p.t
    distance = max(distance, closest)
    offsets = np.logspace(-1, math.log10(distance), points) if distance < 0.1 else np.array([distance])
    t_grid = offsets if towards_zero else 1.0 - offsets

    labels = list(branch_kappas(p.with_t(float(t_grid[-1]))).keys())
    trajectories = {label: np.full(len(t_grid), np.nan) for label in labels}
    for i, t in enumerate(t_grid):
        for label, energy in branch_energies(p.with_t(float(t))).items():
            if label in trajectories:
                trajectories[label][i] = energy

    limits = {}
    for label in labels:
        if label == KAPPA0:
            limits[label] = -((p.alpha / p.n) ** 2) if towards_zero else 0.0
        else:
            j = int(label.split("-")[1])
            limits[label] = -math.inf if towards_zero else -math.tan(j * math.pi / p.n) ** 2

    return LimitReport(endpoint=0.0 if towards_zero else 1.0, t_grid=t_grid, trajectories=trajectories, limits=limits)


def secular_residual(kappa, u: CirculantUnitary):
    """``|det|`` relative to the product of the factor magnitudes."""
    scale = 1.0
    for lam in u.eigenvalues.tolist():
        scale *= abs(lam - 1.0) + kappa * abs(lam + 1.0)
    return abs(secular_determinant(kappa, u)) / scale


def star_oracle_residuals(p: CouplingParams):
    u = coupling_matrix(p)
    return {label: secular_residual(kappa, u) for label, kappa in branch_kappas(p).items()}
