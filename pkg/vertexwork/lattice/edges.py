import math
from typing import NamedTuple

import numpy as np
from vertexwork.exceptions import BracketError, ParameterError
from vertexwork.global_vars import (
    BAND_LEFT_GAP_RIGHT,
    BAND_RIGHT_GAP_LEFT,
    DIRICHLET_POINT,
    INTERIOR,
    POSITIVE,
    SCAN_RESOLUTION,
    env,
)
from vertexwork.utils import bisect, bisect_predicate, get_logger

from .conditions import membership_positive
from .curves import candidate_curves, get_curve
from .params import LatticeParams


def nearest_dirichlet_point(k, ell):
    m = max(1, int(round(k * ell / math.pi)))
    return m, m * math.pi / ell


def label_edge(k, side, lp: LatticeParams, window=None):
    """Name the factor function that vanishes at the band edge ``k``.

    A candidate qualifies when it changes sign across ``k +- window`` and the change is a root rather than a
    pole; the smallest ``|F(k)|`` wins. Positive-side edges at ``m pi / ell`` are Dirichlet points.
    """
    if window is None:
        window = env.edge_window * max(1.0, k)
    if side == POSITIVE and abs(nearest_dirichlet_point(k, lp.ell)[1] - k) <= window:
        return DIRICHLET_POINT

    lo, hi = max(k - window, 0.5 * k), k + window
    best, best_value = SCAN_RESOLUTION, math.inf
    for curve in candidate_curves(side, lp):
        f_lo, f_mid, f_hi = (float(curve(x, lp)) for x in (lo, k, hi))
        if not all(math.isfinite(f) for f in (f_lo, f_mid, f_hi)):
            continue
        if f_lo * f_hi > 0 or abs(f_mid) > abs(f_lo) + abs(f_hi):
            continue
        if abs(f_mid) < best_value:
            best, best_value = curve.id, abs(f_mid)
    if best == SCAN_RESOLUTION:
        get_logger().debug(f"no factor function vanishes at {side} edge {k!r}")
    return best


# branches of the factor curves


def _branch(curve_id, m, lp):
    if m < 1:
        raise ParameterError(f"m must satisfy m >= 1, got m={m}")
    unit = math.pi / lp.ell
    if curve_id == "cotg_plus_tan":
        if lp.gamma < 0:
            return max(0.0, (2 * m - 3) * unit), (2 * m - 1) * unit
        return (2 * m - 1) * unit, (2 * m + 1) * unit
    if curve_id == "cotg_minus_cot":
        if lp.gamma < 0:
            return (2 * m - 2) * unit, 2 * m * unit
        return 2 * m * unit, (2 * m + 2) * unit
    if curve_id in ("cot2_minus_tan2", "cot2_minus_cot2"):
        return (m - 1) * unit, m * unit
    raise ParameterError(f"no branch structure is known for curve '{curve_id}'")


def _limit_at_one(curve_id, m, lp):
    unit = math.pi / lp.ell
    return (2 * m - 1) * unit if curve_id == "cotg_plus_tan" else 2 * m * unit


def _root_on_branch(curve, m, lp):
    a, b = _branch(curve.id, m, lp)
    eps = 1e-13 * max(1.0, b)
    try:
        return bisect(lambda k: float(curve(k, lp)), a + eps, b - eps)
    except BracketError as e:
        raise BracketError(f"{curve.id} has no zero on branch {m} at t={lp.t}, gamma={lp.gamma}") from e


def trace_edge(curve, m, lp: LatticeParams):
    """Zero of ``curve`` on its ``m``-th branch at ``lp.t``."""
    if isinstance(curve, str):
        curve = get_curve(curve)
    if curve.id in ("cotg_plus_tan", "cotg_minus_cot"):
        if lp.gamma == 0.0:
            raise ParameterError(f"{curve.id} needs gamma != 0")
        if lp.t == 1.0:
            return _limit_at_one(curve.id, m, lp)
    return _root_on_branch(curve, m, lp)


# slopes of the edges at the ends of the interpolation


class EndpointSlopes(NamedTuple):
    curve: str
    m: int
    k_limit_zero: float
    dk_dt_zero: float
    k_limit_one: float
    dk_dt_one: float


def _partial_t(curve_id, t, lp):
    if curve_id in ("cotg_plus_tan", "cotg_minus_cot"):
        half = (1.0 - t) * lp.gamma / 2.0
        return (lp.gamma / 2.0) / math.sin(half) ** 2
    quarter = math.pi * t / 4.0
    return -(math.pi / 2.0) / math.tan(quarter) / math.sin(quarter) ** 2


def _partial_k(curve_id, k, lp):
    u = k * lp.ell / 2.0
    if curve_id == "cotg_plus_tan":
        return -math.tan(u) / k**2 + (lp.ell / 2.0) / (math.cos(u) ** 2 * k)
    if curve_id == "cotg_minus_cot":
        return 1.0 / (math.tan(u) * k**2) + (lp.ell / 2.0) / (math.sin(u) ** 2 * k)
    if curve_id == "cot2_minus_tan2":
        tan_u = math.tan(u)
        return -2.0 * k * tan_u * (tan_u + u / math.cos(u) ** 2)
    cot_u = 1.0 / math.tan(u)
    return -2.0 * k * cot_u * (cot_u - u / math.sin(u) ** 2)


def _implicit_slope(curve_id, t, k, lp):
    return -_partial_t(curve_id, t, lp) / _partial_k(curve_id, k, lp)


def _pole_end(curve_id, m, lp):
    # tan^2 has its poles at odd multiples of pi / ell, cot^2 at even ones
    unit = math.pi / lp.ell
    pole_parity = 1 if curve_id == "cot2_minus_tan2" else 0
    if m % 2 == pole_parity:
        return m * unit, -1.0
    if m == 1:
        raise BracketError(f"{curve_id} has no zero on branch 1 as t -> 0")
    return (m - 1) * unit, 1.0


def edge_slope_at_endpoints(curve, m, lp: LatticeParams):
    if isinstance(curve, str):
        curve = get_curve(curve)
    if curve.id in ("cotg_plus_tan", "cotg_minus_cot"):
        if lp.gamma == 0.0:
            raise ParameterError(f"{curve.id} needs gamma != 0; use the Kirchhoff curves for alpha = 0")
        k_one = _limit_at_one(curve.id, m, lp)
        slope_one = -lp.gamma / (lp.ell * k_one)
        k_zero = trace_edge(curve, m, lp.with_t(0.0))
        slope_zero = _implicit_slope(curve.id, 0.0, k_zero, lp)
    elif curve.id in ("cot2_minus_tan2", "cot2_minus_cot2"):
        k_zero, direction = _pole_end(curve.id, m, lp)
        slope_zero = direction * math.pi * k_zero / (2.0 * lp.ell)
        k_one = trace_edge(curve, m, lp.with_t(1.0))
        slope_one = _implicit_slope(curve.id, 1.0, k_one, lp)
    else:
        raise ParameterError(f"endpoint slopes are not defined for curve '{curve.id}'")
    return EndpointSlopes(curve.id, m, k_zero, slope_zero, k_one, slope_one)


# Kirchhoff landmarks


def flat_band_points(ell, m_max):
    """``(t, k)`` where a band of the Kirchhoff lattice shrinks to the point ``k = (m - 1/2) pi / ell``.

    The collapse happens where ``cot(pi t / 4) = k``, so momenta below 1 have no point with ``t <= 1``.
    """
    points = []
    for m in range(1, m_max + 1):
        k = (m - 0.5) * math.pi / ell
        if k >= 1.0:
            points.append(((4.0 / math.pi) * math.atan(1.0 / k), k))
    return points


def gap_width_asymptotic(m, t, ell, energy=False):
    if not 0.0 < t <= 1.0:
        raise ParameterError(f"t must satisfy 0 < t <= 1, got t={t}")
    cot_r = 1.0 / math.tan(math.pi * t / 4.0)
    if energy:
        return 8.0 / ell * cot_r
    return 4.0 / (m * math.pi) * cot_r


def zero_threshold(ell):
    return (4.0 / math.pi) * math.atan(ell / 2.0)


def zero_neighborhood_class(lp: LatticeParams, tol=None):
    if lp.alpha != 0.0:
        raise ParameterError(f"the zero neighbourhood classes need alpha = 0, got alpha={lp.alpha}")
    if tol is None:
        tol = env.zero_tol
    threshold = zero_threshold(lp.ell)
    if abs(lp.t - threshold) <= tol:
        return INTERIOR
    return BAND_RIGHT_GAP_LEFT if lp.t < threshold else BAND_LEFT_GAP_RIGHT


def _walk_to_band(predicate, start, step, limit):
    previous = start
    for j in range(1, int(math.ceil(abs(limit - start) / step)) + 1):
        q = start + math.copysign(j * step, limit - start)
        if (limit - q) * (limit - start) < 0:
            break
        if predicate(q):
            return bisect_predicate(predicate, q, previous)
        previous = q
    raise BracketError(f"no band between {start!r} and {limit!r}")


def gap_around_dirichlet_point(m, lp: LatticeParams, step=None):
    """``(k_lo, k_hi)`` of the gap that contains ``k = m pi / ell``; a side reached by a band ends at the point."""
    if m < 1:
        raise ParameterError(f"m must satisfy m >= 1, got m={m}")
    unit = math.pi / lp.ell
    if step is None:
        step = 1e-3 * unit
    k_m = m * unit
    predicate = lambda k: membership_positive(k, lp, dirichlet=False)  # noqa: E731
    below, above = k_m * (1.0 - env.edge_window), k_m * (1.0 + env.edge_window)
    k_lo = k_m if predicate(below) else _walk_to_band(predicate, below, step, k_m - unit)
    k_hi = k_m if predicate(above) else _walk_to_band(predicate, above, step, k_m + unit)
    return k_lo, k_hi


def gap_widths(ms, lp: LatticeParams, step=None):
    """Measured momentum widths of the gaps around the Dirichlet points ``m`` in ``ms``."""
    return np.array([np.subtract(*reversed(gap_around_dirichlet_point(m, lp, step))) for m in ms])
