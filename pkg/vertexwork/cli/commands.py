import math
import time

from vertexwork.circulant import CouplingParams, assemble_matrix, coupling_matrix, unitarity_defect
from vertexwork.exceptions import NumericalError, ParameterError
from vertexwork.initialize import initialize
from vertexwork.lattice import LatticeParams, SpectralDiagram, build_diagram, default_resolution, scan_bands
from vertexwork.spectrum import (
    high_energy_limit,
    negative_eigenvalues,
    s_matrix,
    star_oracle_residuals,
    unitarity_residual,
)
from vertexwork.utils import get_logger

from .config import RunConfig
from .writers import write_diagram, write_table

COUPLING_HEADER = (
    "index",
    "generator_re",
    "generator_im",
    "eigenvalue_re",
    "eigenvalue_im",
    "mirror_symmetric",
    "time_reversal",
    "permutation_invariant",
)
STAR_HEADER = ("branch", "kappa", "energy", "multiplicity", "oracle_residual")
SMATRIX_HEADER = ("k", "index", "generator_re", "generator_im", "unitarity_residual")


def _coupling_params(cfg):
    return CouplingParams(n=cfg.n, alpha=cfg.alpha, t=cfg.t)


def cmd_coupling(cfg: RunConfig):
    u = coupling_matrix(_coupling_params(cfg))
    residual = unitarity_defect(u.generator)
    classes = u.symmetry()
    rows = []
    for j, (g, lam) in enumerate(zip(u.generator.tolist(), u.eigenvalues.tolist())):
        rows.append(
            (
                j,
                g.real,
                g.imag,
                lam.real,
                lam.imag,
                classes.mirror_symmetric,
                classes.time_reversal,
                classes.permutation_invariant,
            )
        )
    get_logger().info(f"coupling n={cfg.n}, alpha={cfg.alpha}, t={cfg.t}: unitarity residual {residual:.3e}")
    write_table(cfg, COUPLING_HEADER, rows, summary=dict(unitarity_residual=residual))
    return rows


def cmd_star(cfg: RunConfig):
    p = _coupling_params(cfg)
    spectrum = negative_eigenvalues(p)
    residuals = star_oracle_residuals(p)
    rows = []
    for energy, kappa, multiplicity, branches in zip(
        spectrum.energies, spectrum.kappas, spectrum.multiplicities, spectrum.branches
    ):
        residual = max(residuals[label] for label in branches)
        rows.append((";".join(branches), kappa, energy, multiplicity, residual))
    get_logger().info(f"star graph n={cfg.n}, alpha={cfg.alpha}, t={cfg.t}: {len(spectrum)} negative eigenvalues")
    write_table(cfg, STAR_HEADER, rows)
    return rows


def cmd_smatrix(cfg: RunConfig):
    if not cfg.k and not cfg.limit:
        raise ParameterError("smatrix needs at least one --k or --limit")
    p = _coupling_params(cfg)
    rows = []
    for k in cfg.k:
        s = s_matrix(k, p)
        residual = unitarity_residual(s.matrix)
        rows += [(k, j, g.real, g.imag, residual) for j, g in enumerate(s.generator.tolist())]
    if cfg.limit:
        limit = high_energy_limit(cfg.n, p)
        residual = unitarity_residual(assemble_matrix(limit))
        rows += [(math.inf, j, g.real, g.imag, residual) for j, g in enumerate(limit.tolist())]
    get_logger().info(f"scattering matrix n={cfg.n} at {len(cfg.k)} momenta" + (" and k -> inf" if cfg.limit else ""))
    write_table(cfg, SMATRIX_HEADER, rows)
    return rows


def _lattice(cfg):
    return LatticeParams(ell=cfg.ell, alpha=cfg.alpha, t=cfg.t)


def cmd_bands(cfg: RunConfig):
    lp = _lattice(cfg)
    resolution = cfg.resolution if cfg.resolution is not None else default_resolution(cfg.ell)
    bands = scan_bands(lp, cfg.t, cfg.e_range, resolution)
    diagram = SpectralDiagram(cfg.ell, cfg.alpha, cfg.e_range, resolution, [cfg.t], [bands])
    get_logger().info(f"lattice ell={cfg.ell}, alpha={cfg.alpha}, t={cfg.t}: {len(bands)} intervals")
    write_diagram(cfg, diagram)
    return diagram


def cmd_sweep(cfg: RunConfig):
    start = time.time()
    diagram = build_diagram(_lattice(cfg), cfg.t_grid, cfg.e_range, cfg.resolution, progress=cfg.out is not None)
    get_logger().info(
        f"lattice ell={cfg.ell}, alpha={cfg.alpha}: {cfg.t_steps} values of t in {time.time() - start:.3f} s"
    )
    write_diagram(cfg, diagram)
    return diagram


COMMANDS = {
    "coupling": cmd_coupling,
    "star": cmd_star,
    "smatrix": cmd_smatrix,
    "bands": cmd_bands,
    "sweep": cmd_sweep,
}


def main(argv=None):
    """Entry point; returns 0 on success, 2 for invalid parameters and 3 for numerical failures."""
    args = initialize(argv)
    logger = get_logger()
    try:
        cfg = RunConfig.from_args(args)
        COMMANDS[cfg.command](cfg)
    except ParameterError as e:
        logger.error(f"invalid parameters: {e}")
        return 2
    except NumericalError as e:
        logger.error(f"numerical failure: {e}")
        return 3
    return 0
