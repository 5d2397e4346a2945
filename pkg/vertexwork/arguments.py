import argparse

from vertexwork.global_vars import ALLOWED_FORMATS

_ARGS = None

SUBCOMMANDS = ("coupling", "star", "smatrix", "bands", "sweep")


def get_args():
    return _ARGS


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)

    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--alpha", type=float, default=0.0)
    parser.add_argument("--t", type=float, default=0.5)
    parser.add_argument("--ell", type=float, default=1.0)
    parser.add_argument("--format", type=str, choices=ALLOWED_FORMATS, default="csv")
    parser.add_argument("--out", type=str)
    parser.add_argument("--resolution", type=float)
    parser.add_argument("--e-min", "--e_min", dest="e_min", type=float, default=-30.0)
    parser.add_argument("--e-max", "--e_max", dest="e_max", type=float, default=90.0)
    parser.add_argument("--t-min", "--t_min", dest="t_min", type=float, default=0.0)
    parser.add_argument("--t-max", "--t_max", dest="t_max", type=float, default=1.0)
    parser.add_argument("--t-steps", "--t_steps", dest="t_steps", type=int, default=201)
    parser.add_argument("--k", type=float, action="append")
    parser.add_argument("--limit", action="store_true")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--log-file", "--log_file", dest="log_file", type=str)
    parser.add_argument("--verbose", "-v", action="store_true")
    return parser


def build_parser():
    parser = argparse.ArgumentParser(prog="vertexwork")
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", metavar="{" + ",".join(SUBCOMMANDS) + "}")
    subparsers.required = True
    subparsers.add_parser("coupling", parents=[common], help="generator, eigenvalues and symmetries of U(t)")
    subparsers.add_parser("star", parents=[common], help="negative eigenvalues of the star graph")
    subparsers.add_parser("smatrix", parents=[common], help="on-shell scattering matrix at the given momenta")
    subparsers.add_parser("bands", parents=[common], help="band intervals of the square lattice at one t")
    subparsers.add_parser("sweep", parents=[common], help="band diagram of the square lattice over a t grid")
    return parser


def parse_args(argv=None, parser=None):
    if parser is None:
        parser = build_parser()

    global _ARGS
    _ARGS = parser.parse_args(argv)
    return _ARGS
