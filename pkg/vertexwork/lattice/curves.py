import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from vertexwork.global_vars import GENERAL, KIRCHHOFF, KRONIG_PENNEY, NEGATIVE, POSITIVE

from .conditions import negative_regime, positive_regime
from .params import LatticeParams


@dataclass(frozen=True)
class EdgeCurve:
    """One factor of the band conditions; band edges lie on its zeros."""

    id: str
    side: str
    regimes: Tuple[str, ...]
    rule: Callable

    def __call__(self, k, lp: LatticeParams):
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            return self.rule(np.asarray(k, dtype=np.float64), lp)


def _cot_half(lp):
    return 1.0 / math.tan(lp.half_angle)


def _cot_quarter(lp):
    return 1.0 / math.tan(lp.quarter_angle)


def _kronig_penney_value(k, lp):
    return np.cos(k * lp.ell) + math.tan(lp.gamma / 2.0) * np.sin(k * lp.ell) / k


def _kronig_penney_negative_value(kappa, lp):
    return np.cosh(kappa * lp.ell) + math.tan(lp.gamma / 2.0) * np.sinh(kappa * lp.ell) / kappa


POSITIVE_CURVES = (
    EdgeCurve("cotg_plus_tan", POSITIVE, (GENERAL,), lambda k, lp: _cot_half(lp) + np.tan(k * lp.ell / 2.0) / k),
    EdgeCurve(
        "cotg_minus_cot",
        POSITIVE,
        (GENERAL,),
        lambda k, lp: _cot_half(lp) - 1.0 / (np.tan(k * lp.ell / 2.0) * k),
    ),
    EdgeCurve(
        "cot2_minus_tan2",
        POSITIVE,
        (GENERAL, KIRCHHOFF),
        lambda k, lp: _cot_quarter(lp) ** 2 - (k * np.tan(k * lp.ell / 2.0)) ** 2,
    ),
    EdgeCurve(
        "cot2_minus_cot2",
        POSITIVE,
        (GENERAL, KIRCHHOFF),
        lambda k, lp: _cot_quarter(lp) ** 2 - (k / np.tan(k * lp.ell / 2.0)) ** 2,
    ),
    EdgeCurve("kcot_mix", POSITIVE, (GENERAL,), lambda k, lp: k * _cot_half(lp) / np.tan(k * lp.ell) + 1.0),
    EdgeCurve("kronig_penney_upper", POSITIVE, (KRONIG_PENNEY,), lambda k, lp: _kronig_penney_value(k, lp) - 1.0),
    EdgeCurve("kronig_penney_lower", POSITIVE, (KRONIG_PENNEY,), lambda k, lp: _kronig_penney_value(k, lp) + 1.0),
)

NEGATIVE_CURVES = (
    EdgeCurve("cotg_plus_tanh", NEGATIVE, (GENERAL,), lambda q, lp: _cot_half(lp) + np.tanh(q * lp.ell / 2.0) / q),
    EdgeCurve(
        "cotg_plus_coth",
        NEGATIVE,
        (GENERAL,),
        lambda q, lp: _cot_half(lp) + 1.0 / (np.tanh(q * lp.ell / 2.0) * q),
    ),
    EdgeCurve("cotg_plus_tanh_full", NEGATIVE, (GENERAL,), lambda q, lp: _cot_half(lp) + np.tanh(q * lp.ell) / q),
    EdgeCurve(
        "cot_minus_tanh",
        NEGATIVE,
        (GENERAL, KIRCHHOFF),
        lambda q, lp: _cot_quarter(lp) - q * np.tanh(q * lp.ell / 2.0),
    ),
    EdgeCurve(
        "cot_minus_coth",
        NEGATIVE,
        (GENERAL, KIRCHHOFF),
        lambda q, lp: _cot_quarter(lp) - q / np.tanh(q * lp.ell / 2.0),
    ),
    EdgeCurve("cot_minus_kappa", NEGATIVE, (GENERAL,), lambda q, lp: _cot_quarter(lp) - q),
    EdgeCurve(
        "kronig_penney_upper_neg",
        NEGATIVE,
        (KRONIG_PENNEY,),
        lambda q, lp: _kronig_penney_negative_value(q, lp) - 1.0,
    ),
    EdgeCurve(
        "kronig_penney_lower_neg",
        NEGATIVE,
        (KRONIG_PENNEY,),
        lambda q, lp: _kronig_penney_negative_value(q, lp) + 1.0,
    ),
)

CURVES = {curve.id: curve for curve in POSITIVE_CURVES + NEGATIVE_CURVES}


def get_curve(curve_id):
    return CURVES[curve_id]


def candidate_curves(side, lp: LatticeParams):
    """Curves that can bound a band on ``side`` for these parameters, in registry order."""
    if side == POSITIVE:
        regime, curves = positive_regime(lp), POSITIVE_CURVES
    else:
        regime, curves = negative_regime(lp), NEGATIVE_CURVES
    return [curve for curve in curves if regime in curve.regimes]
