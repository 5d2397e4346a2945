import math
from dataclasses import dataclass

import torch
from vertexwork.exceptions import ParameterError
from vertexwork.global_vars import env
from vertexwork.utils import as_complex_tensor


def _as_vector(values, name="generator"):
    vec = as_complex_tensor(values)
    if vec.dim() != 1:
        raise ParameterError(f"{name} must be a 1-D vector, got shape {tuple(vec.shape)}")
    if vec.numel() < 2:
        raise ParameterError(f"{name} must satisfy n >= 2, got n={vec.numel()}")
    return vec


def _root_of_unity_powers(n, sign):
    # exponents reduced mod n before the angle is formed
    idx = torch.arange(n, device=torch.device("cpu"))
    exponents = (idx.unsqueeze(1) * idx.unsqueeze(0)) % n
    angles = sign * 2.0 * math.pi * exponents.to(torch.float64) / n
    return as_complex_tensor(torch.polar(torch.ones_like(angles), angles))


def dft_matrix(n):
    """``F[j, k] = omega^(j k)`` with ``omega = exp(2 pi i / n)``; ``F @ diag(lambda) @ F^* / n`` is circulant."""
    if n < 2:
        raise ParameterError(f"n must satisfy n >= 2, got n={n}")
    return _root_of_unity_powers(n, 1.0)


def eigenvalues_from_generator(generator):
    g = _as_vector(generator)
    return dft_matrix(g.numel()) @ g


def generator_from_eigenvalues(eigenvalues):
    e = _as_vector(eigenvalues, name="eigenvalue vector")
    n = e.numel()
    return (_root_of_unity_powers(n, -1.0) @ e) / n


def assemble_matrix(generator):
    g = _as_vector(generator)
    n = g.numel()
    idx = torch.arange(n, device=g.device)
    return g[(idx.unsqueeze(0) - idx.unsqueeze(1)) % n]


def rotation_generator(n):
    if n < 2:
        raise ParameterError(f"n must satisfy n >= 2, got n={n}")
    g = torch.zeros(n, dtype=torch.complex128)
    g[1] = 1.0
    return as_complex_tensor(g)


def anti_diagonal(n):
    return as_complex_tensor(torch.eye(n, dtype=torch.complex128).flip(1))


def unitarity_defect(generator):
    return (eigenvalues_from_generator(generator).abs() - 1.0).abs().max().item()


def is_unitary(generator, tol=None):
    if tol is None:
        tol = env.unitary_tol
    if tol <= 0:
        raise ParameterError(f"tol must satisfy tol > 0, got {tol}")
    return unitarity_defect(generator) <= tol


def mirror_symmetry_residual(generator):
    # A U A is the index reversal of U in both axes
    u = assemble_matrix(generator)
    return (u.flip(0).flip(1) - u).abs().max().item()


def time_reversal_residual(generator):
    u = assemble_matrix(generator)
    return (u.transpose(0, 1) - u).abs().max().item()


def rotation_commutator_residual(generator):
    g = _as_vector(generator)
    u = assemble_matrix(g)
    r = assemble_matrix(rotation_generator(g.numel()))
    return (r @ u - u @ r).abs().max().item()


def permutation_residual(generator):
    g = _as_vector(generator)
    off_diagonal = g[1:]
    return (off_diagonal - off_diagonal[0]).abs().max().item()


@dataclass(frozen=True)
class SymmetryClasses:
    mirror_symmetric: bool
    time_reversal: bool
    permutation_invariant: bool


def symmetry_classify(generator, tol=None):
    if tol is None:
        tol = env.unitary_tol
    defect = unitarity_defect(generator)
    if defect > tol:
        raise ParameterError(f"symmetry classes need a unitary coupling, defect {defect:.3e} > tol {tol:.3e}")

    return SymmetryClasses(
        mirror_symmetric=mirror_symmetry_residual(generator) <= tol,
        time_reversal=time_reversal_residual(generator) <= tol,
        permutation_invariant=permutation_residual(generator) <= tol,
    )


@dataclass(frozen=True)
class CirculantUnitary:
    """A unitary circulant matrix kept as its generator together with the eigenvalues."""

    generator: torch.Tensor
    eigenvalues: torch.Tensor

    @classmethod
    def from_generator(cls, generator, tol=None):
        g = _as_vector(generator)
        e = eigenvalues_from_generator(g)
        cls._validate(g, e, tol)
        return cls(generator=g, eigenvalues=e)

    @classmethod
    def from_eigenvalues(cls, eigenvalues, tol=None):
        e = _as_vector(eigenvalues, name="eigenvalue vector")
        g = generator_from_eigenvalues(e)
        cls._validate(g, e, tol)
        return cls(generator=g, eigenvalues=e)

    @staticmethod
    def _validate(generator, eigenvalues, tol):
        unitary_tol = env.unitary_tol if tol is None else tol
        roundtrip_tol = env.roundtrip_tol if tol is None else tol
        defect = (eigenvalues.abs() - 1.0).abs().max().item()
        if defect > unitary_tol:
            raise ParameterError(f"eigenvalues must satisfy |lambda| = 1, defect {defect:.3e} > tol {unitary_tol:.3e}")
        drift = (generator_from_eigenvalues(eigenvalues) - generator).abs().max().item()
        if drift > roundtrip_tol:
            raise ParameterError(f"generator and eigenvalues disagree by {drift:.3e} > tol {roundtrip_tol:.3e}")

    @property
    def n(self):
        return self.generator.numel()

    @property
    def matrix(self):
        return assemble_matrix(self.generator)

    def symmetry(self, tol=None):
        return symmetry_classify(self.generator, tol)
