import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from vertexwork.exceptions import ParameterError
from vertexwork.global_vars import ALLOWED_FORMATS


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int = 4
    alpha: float = 0.0
    t: float = 0.5
    ell: float = 1.0
    t_min: float = 0.0
    t_max: float = 1.0
    t_steps: int = 201
    e_min: float = -30.0
    e_max: float = 90.0
    resolution: Optional[float] = None
    k: List[float] = field(default_factory=list)
    limit: bool = False
    out: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"n must satisfy n >= 2, got n={self.n}")
        if not self.ell > 0 or not math.isfinite(self.ell):
            raise ParameterError(f"ell must satisfy 0 < ell < inf, got ell={self.ell}")
        if not 0.0 <= self.t <= 1.0:
            raise ParameterError(f"t must satisfy 0 <= t <= 1, got t={self.t}")
        if not 0.0 <= self.t_min <= self.t_max <= 1.0:
            raise ParameterError(f"t grid must satisfy 0 <= t_min <= t_max <= 1, got [{self.t_min}, {self.t_max}]")
        if self.t_steps < 1:
            raise ParameterError(f"t_steps must satisfy t_steps >= 1, got t_steps={self.t_steps}")
        if not self.e_min < self.e_max:
            raise ParameterError(f"energy window must satisfy e_min < e_max, got [{self.e_min}, {self.e_max}]")
        if any(not k > 0 for k in self.k):
            raise ParameterError(f"every k must satisfy k > 0, got {self.k}")
        if self.format not in ALLOWED_FORMATS:
            raise ParameterError(f"format must be one of {ALLOWED_FORMATS}, got '{self.format}'")

    @classmethod
    def from_args(cls, args):
        return cls(
            command=args.command,
            n=args.n,
            alpha=args.alpha,
            t=args.t,
            ell=args.ell,
            t_min=args.t_min,
            t_max=args.t_max,
            t_steps=args.t_steps,
            e_min=args.e_min,
            e_max=args.e_max,
            resolution=args.resolution,
            k=list(args.k or []),
            limit=args.limit,
            out=args.out,
            format=args.format,
        )

    @property
    def t_grid(self):
        return np.linspace(self.t_min, self.t_max, self.t_steps).tolist()

    @property
    def e_range(self):
        return self.e_min, self.e_max

    def params(self):
        """Parameters echoed into JSON output."""
        return dict(n=self.n, alpha=self.alpha, t=self.t, ell=self.ell)
