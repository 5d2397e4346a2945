import math
from dataclasses import dataclass, replace
from typing import NamedTuple

from vertexwork.circulant import CouplingParams, gamma
from vertexwork.exceptions import ParameterError

# square lattice vertices have four edges
DEGREE = 4


@dataclass(frozen=True)
class LatticeParams:
    ell: float
    alpha: float
    t: float

    def __post_init__(self):
        if not self.ell > 0 or not math.isfinite(self.ell):
            raise ParameterError(f"ell must satisfy 0 < ell < inf, got ell={self.ell}")
        if not math.isfinite(self.alpha):
            raise ParameterError(f"alpha must be finite, got alpha={self.alpha}")
        if not 0.0 <= self.t <= 1.0:
            raise ParameterError(f"t must satisfy 0 <= t <= 1, got t={self.t}")

    @property
    def gamma(self):
        return gamma(DEGREE, self.alpha)

    @property
    def half_angle(self):
        """``(1 - t) gamma / 2``."""
        return (1.0 - self.t) * self.gamma / 2.0

    @property
    def quarter_angle(self):
        """``pi t / 4``."""
        return math.pi * self.t / 4.0

    def coupling(self):
        return CouplingParams(n=DEGREE, alpha=self.alpha, t=self.t)

    def with_t(self, t):
        return replace(self, t=t)


class BlochPhase(NamedTuple):
    theta1: float
    theta2: float

    @classmethod
    def wrapped(cls, theta1, theta2):
        """Quasimomenta reduced to ``[-pi, pi)``."""
        return cls(_wrap(theta1), _wrap(theta2))

    @property
    def cosines(self):
        return math.cos(self.theta1), math.cos(self.theta2)


def _wrap(theta):
    return (theta + math.pi) % (2.0 * math.pi) - math.pi


class VCoefficients(NamedTuple):
    v3: float
    v2: float
    v1: float
    v0: float

    def cubic(self, k):
        return ((self.v3 * k + self.v2) * k + self.v1) * k + self.v0


class ABCoefficients(NamedTuple):
    a: float
    b: float
