import random

import numpy as np
import torch
from vertexwork.global_vars import env


def set_seed(seed):
    random.seed(seed)
    np.random.seed(seed)
    torch.manual_seed(seed)


def get_current_device():
    if env.device != "cpu" and torch.cuda.is_available():
        return torch.device(env.device)
    else:
        return torch.device("cpu")


def as_complex_tensor(values):
    return torch.as_tensor(values, dtype=torch.complex128, device=get_current_device())


def round_significant(value: float, digits: int = None) -> float:
    if digits is None:
        digits = env.significant_digits
    return float(f"{value:.{digits}g}")


def format_significant(value: float, digits: int = None) -> str:
    if digits is None:
        digits = env.significant_digits
    return f"{value:.{digits}g}"
