import logging
import os

from rich.console import Console
from rich.logging import RichHandler


def _add_file_handler(file, logger):
    path = os.path.dirname(file)
    if path:
        os.makedirs(path, exist_ok=True)

    file_handler = logging.FileHandler(file, mode="a")
    file_handler.setLevel(logging.DEBUG)
    formatter = logging.Formatter("%(asctime)s %(levelname)s > %(message)s", datefmt="[%Y/%m/%d %H:%M:%S]")
    file_handler.setFormatter(formatter)

    logger.addHandler(file_handler)


_default_logger = None


def init_logger(level=logging.INFO):
    global _default_logger
    _default_logger = logging.getLogger("vertexwork")
    _default_logger.setLevel(level)

    # re-initialisation must not stack handlers
    for handler in list(_default_logger.handlers):
        if isinstance(handler, RichHandler):
            _default_logger.removeHandler(handler)

    handler = RichHandler(console=Console(stderr=True), show_path=False)
    formatter = logging.Formatter("%(message)s", datefmt="[%Y/%m/%d %H:%M:%S]")
    handler.setFormatter(formatter)
    _default_logger.addHandler(handler)


def write_logger_to_file(file, logger=None):
    if logger is None:
        logger = get_logger()
    _add_file_handler(file, logger)


def get_logger():
    if _default_logger is None:
        return logging.getLogger("vertexwork")
    else:
        return _default_logger
