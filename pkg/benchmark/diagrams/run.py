import argparse
import math
import os
import time

import vertexwork
from vertexwork.cli.writers import DIAGRAM_HEADER, write_csv
from vertexwork.lattice import LatticeParams, build_diagram, default_resolution, flat_band_points
from vertexwork.utils import get_logger

_diagrams = {
    "kirchhoff": dict(ell=1.0, alpha=0.0),
    "weak_attractive": dict(ell=1.0, alpha=-4.0 * (math.sqrt(2.0) - 1.0)),
    "strong_attractive": dict(ell=1.0, alpha=-4.0 * (math.sqrt(2.0) + 1.0)),
    "strong_attractive_wide": dict(ell=2.0 * math.pi, alpha=-4.0 * (math.sqrt(2.0) + 1.0)),
}


def get_parser():
    parser = argparse.ArgumentParser()

    parser.add_argument("--diagram", "--d", type=str, choices=list(_diagrams) + ["all"], default="all")
    parser.add_argument("--t_steps", "--n_t", type=int, default=201)
    parser.add_argument("--e_min", type=float, default=-30.0)
    parser.add_argument("--e_max", type=float, default=90.0)
    parser.add_argument("--resolution", type=float)
    parser.add_argument("--out_dir", "--out", type=str, default="diagrams")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--verbose", "-v", action="store_true", default=False)

    parser.add_argument("--log_file", type=str)
    parser.set_defaults(command="sweep")
    return parser


def _sweep(name, args):
    logger = get_logger()
    lp = LatticeParams(t=0.0, **_diagrams[name])
    t_grid = [j / (args.t_steps - 1) for j in range(args.t_steps)] if args.t_steps > 1 else [0.0]
    resolution = args.resolution if args.resolution is not None else default_resolution(lp.ell)

    start = time.time()
    diagram = build_diagram(lp, t_grid, (args.e_min, args.e_max), resolution, progress=True)
    used_time = time.time() - start

    rows = diagram.to_rows()
    path = os.path.join(args.out_dir, f"{name}.csv")
    with open(path, "w", newline="") as f:
        write_csv(f, DIAGRAM_HEADER, rows)
    logger.info(
        f"{name}: {len(rows)} intervals over {len(t_grid)} values of t | "
        f"time = {used_time:.3f} s | {used_time / len(t_grid) * 1e3:.1f} ms per t | saved to {path}"
    )
    return diagram


def run():
    parser = get_parser()
    args = vertexwork.initialize(parser=parser)
    logger = get_logger()
    os.makedirs(args.out_dir, exist_ok=True)

    names = list(_diagrams) if args.diagram == "all" else [args.diagram]
    logger.info("Benchmark start.")
    for name in names:
        _sweep(name, args)
    if "kirchhoff" in names:
        for t, k in flat_band_points(_diagrams["kirchhoff"]["ell"], 4):
            logger.info(f"kirchhoff: flat band at t = {t:.4f}, E = {k**2:.4f}")
    logger.info("Benchmark complete.")


if __name__ == "__main__":
    run()
