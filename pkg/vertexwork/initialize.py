import logging
import os

from vertexwork.arguments import parse_args
from vertexwork.global_vars import env
from vertexwork.utils import get_logger, init_logger, set_seed, write_logger_to_file

_DEFAULT_SEED = 1024


def _get_version():
    version_file = os.path.join(os.path.dirname(__file__), "../version.txt")
    if os.path.isfile(version_file):
        with open(version_file, "r") as f:
            version = f.read().strip()
    else:
        version = "0.0.0"

    return version


def initialize(argv=None, parser=None):
    args = parse_args(argv, parser)

    init_logger(logging.DEBUG if args.verbose else logging.INFO)
    if args.log_file is not None:
        write_logger_to_file(args.log_file)
    logger = get_logger()
    logger.info(f"Vertexwork v{_get_version()}")

    env.load(num_workers=args.workers)

    seed = args.seed if args.seed is not None else _DEFAULT_SEED
    set_seed(seed)

    logger.debug(f"running '{args.command}' with seed {seed}")
    return args
