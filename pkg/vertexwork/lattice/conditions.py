"""Pointwise band conditions of the square lattice.

Every predicate accepts a scalar or a numpy array of momenta (``k`` on the positive side, ``kappa`` with
``E = -kappa^2`` on the negative side) and returns a bool or a bool array of the same shape. Band edges are
closed. With ``dirichlet=True`` the infinitely degenerate eigenvalues ``k = m pi / ell`` are always included;
with ``dirichlet=False`` such a point is reported only when a band reaches it.
"""
import math

import numpy as np
from vertexwork.exceptions import ParameterError
from vertexwork.global_vars import GENERAL, KIRCHHOFF, KRONIG_PENNEY, env

from .params import ABCoefficients, BlochPhase, LatticeParams, VCoefficients


def _result(value):
    value = np.asarray(value)
    return bool(value) if value.ndim == 0 else value


def _sin_cos(phase):
    return np.clip(np.sin(phase), -1.0, 1.0), np.clip(np.cos(phase), -1.0, 1.0)


def _positive_momenta(k, name="k"):
    k = np.asarray(k, dtype=np.float64)
    if np.any(k <= 0):
        raise ParameterError(f"{name} must satisfy {name} > 0")
    return k


def positive_regime(lp: LatticeParams):
    if lp.t == 0.0:
        return KRONIG_PENNEY
    if lp.alpha == 0.0 or lp.t == 1.0:
        return KIRCHHOFF
    return GENERAL


def negative_regime(lp: LatticeParams):
    if lp.t == 0.0:
        return KRONIG_PENNEY
    if lp.alpha >= 0.0 or lp.t == 1.0:
        return KIRCHHOFF
    return GENERAL


# spectral cubic


def spectral_cubic(k, x, y, lp: LatticeParams):
    """``V3 k^3 + V2 k^2 + V1 k + V0`` at ``x = cos theta1``, ``y = cos theta2``."""
    k = np.asarray(k, dtype=np.float64)
    sh, ch = math.sin(lp.half_angle), math.cos(lp.half_angle)
    sr2, cr2 = math.sin(lp.quarter_angle) ** 2, math.cos(lp.quarter_angle) ** 2
    s, c = _sin_cos(k * lp.ell)
    v3 = -ch * sr2 * s * (x + y + 2.0 * c)
    v2 = 2.0 * sh * sr2 * (x + c) * (y + c)
    v1 = ch * cr2 * s * (x + y - 2.0 * c)
    v0 = -2.0 * sh * cr2 * s**2
    return ((v3 * k + v2) * k + v1) * k + v0


def v_coefficients(k, bp: BlochPhase, lp: LatticeParams):
    x, y = bp.cosines
    sh, ch = math.sin(lp.half_angle), math.cos(lp.half_angle)
    sr2, cr2 = math.sin(lp.quarter_angle) ** 2, math.cos(lp.quarter_angle) ** 2
    s, c = (float(v) for v in _sin_cos(k * lp.ell))
    return VCoefficients(
        v3=-ch * sr2 * s * (x + y + 2.0 * c),
        v2=2.0 * sh * sr2 * (x + c) * (y + c),
        v1=ch * cr2 * s * (x + y - 2.0 * c),
        v0=-2.0 * sh * cr2 * s**2,
    )


def spectral_cubic_imaginary(kappa, x, y, lp: LatticeParams):
    """The spectral cubic continued to ``k = i kappa``; it is real there."""
    kappa = np.asarray(kappa, dtype=np.float64)
    sh, ch = math.sin(lp.half_angle), math.cos(lp.half_angle)
    sr2, cr2 = math.sin(lp.quarter_angle) ** 2, math.cos(lp.quarter_angle) ** 2
    with np.errstate(over="ignore", invalid="ignore"):
        sinh, cosh = np.sinh(kappa * lp.ell), np.cosh(kappa * lp.ell)
        cubic = -ch * sr2 * sinh * (x + y + 2.0 * cosh) * kappa**3
        quadratic = -2.0 * sh * sr2 * (x + cosh) * (y + cosh) * kappa**2
        linear = -ch * cr2 * sinh * (x + y - 2.0 * cosh) * kappa
        constant = 2.0 * sh * cr2 * sinh**2
    return cubic + quadratic + linear + constant


# reduced condition  xy + A (x + y) + B = 0


def _check_reducible(k, lp):
    if not 0.0 < lp.t < 1.0 or lp.gamma == 0.0:
        raise ParameterError(f"the A/B reduction needs 0 < t < 1 and gamma != 0, got t={lp.t}, gamma={lp.gamma}")
    return _positive_momenta(k)


def _cot_half(lp):
    return 1.0 / math.tan(lp.half_angle)


def _cot2_quarter(lp):
    return 1.0 / math.tan(lp.quarter_angle) ** 2


def ab_coefficients(k, lp: LatticeParams):
    k = _check_reducible(k, lp)
    cot_h, cot2_r = _cot_half(lp), _cot2_quarter(lp)
    s, c = _sin_cos(k * lp.ell)
    a = -0.5 * cot_h * (k - cot2_r / k) * s + c
    b = -cot_h * (k + cot2_r / k) * c * s + c**2 - cot2_r / k**2 * s**2
    return ABCoefficients(a=a, b=b)


def ab_form(k, x, y, lp: LatticeParams):
    a, b = ab_coefficients(k, lp)
    return x * y + a * (x + y) + b


def rescaled_cubic(k, x, y, lp: LatticeParams):
    k = _check_reducible(k, lp)
    scale = 2.0 * math.sin(lp.half_angle) * math.sin(lp.quarter_angle) ** 2 * k**2
    return spectral_cubic(k, x, y, lp) / scale


def b_plus_one_minus_two_a(k, lp: LatticeParams):
    k = _check_reducible(k, lp)
    cot_h, cot2_r = _cot_half(lp), _cot2_quarter(lp)
    s, c = _sin_cos(k * lp.ell)
    tan_half = np.tan(k * lp.ell / 2.0)
    return -(s / k) * (1.0 + c) * (cot_h + tan_half / k) * (cot2_r - k**2 * tan_half**2)


def b_plus_one_plus_two_a(k, lp: LatticeParams):
    k = _check_reducible(k, lp)
    cot_h, cot2_r = _cot_half(lp), _cot2_quarter(lp)
    s, c = _sin_cos(k * lp.ell)
    cot_half = 1.0 / np.tan(k * lp.ell / 2.0)
    return (s / k) * (1.0 - c) * (cot_h - cot_half / k) * (cot2_r - k**2 * cot_half**2)


def b_minus_one(k, lp: LatticeParams):
    k = _check_reducible(k, lp)
    cot_h, cot2_r = _cot_half(lp), _cot2_quarter(lp)
    s, _ = _sin_cos(k * lp.ell)
    return -(s**2) * (k * cot_h / np.tan(k * lp.ell) + 1.0) * (cot2_r / k**2 + 1.0)


# Dirichlet points


def is_dirichlet_point(k, ell, tol=None):
    if tol is None:
        tol = env.dirichlet_tol
    ratio = np.asarray(k, dtype=np.float64) * ell / math.pi
    m = np.rint(ratio)
    return _result((m >= 1) & (np.abs(ratio - m) <= tol * np.maximum(m, 1.0)))


def _with_dirichlet(band, k, ell, dirichlet):
    k = np.asarray(k, dtype=np.float64)
    inside = np.asarray(band(k))
    at_point = np.asarray(is_dirichlet_point(k, ell))
    if dirichlet:
        return _result(inside | at_point)
    if np.any(at_point):
        # a Dirichlet point belongs to the band condition only as an end point of a band
        shift = env.edge_window * k
        reached = np.asarray(band(k - shift)) | np.asarray(band(k + shift))
        inside = np.where(at_point, reached, inside)
    return _result(inside)


# positive side


def _kronig_penney_value(k, lp):
    s, c = _sin_cos(k * lp.ell)
    return c + math.tan(lp.gamma / 2.0) * s / k


def _kronig_penney_raw(k, lp):
    return np.abs(_kronig_penney_value(k, lp)) <= 1.0


def _kirchhoff_raw(k, ell, t):
    if t == 0.0:
        return np.ones_like(k, dtype=bool)
    cot_r = 1.0 / math.tan(math.pi * t / 4.0)
    sn, h = (np.abs(v) for v in _sin_cos(k * ell / 2.0))
    # (k |tan| - cot)(k |cot| - cot) multiplied through by |sin cos| of the half phase
    return (k * sn - cot_r * h) * (k * h - cot_r * sn) >= 0.0


def _general_positive_raw(k, lp):
    cot_h, cot2_r = _cot_half(lp), _cot2_quarter(lp)
    sn, h = _sin_cos(k * lp.ell / 2.0)
    s, c = _sin_cos(k * lp.ell)
    f_tan = cot_h * h + sn / k
    g_tan = cot2_r * h**2 - k**2 * sn**2
    f_cot = cot_h * sn - h / k
    g_cot = cot2_r * sn**2 - k**2 * h**2

    # first alternative: (B + 1 - 2A)(B + 1 + 2A) <= 0
    first = sn * h * f_tan * g_tan * f_cot * g_cot >= 0.0
    # second alternative: B + 1 - 2A >= 0, B + 1 + 2A >= 0 and B <= 1
    lower = -(4.0 * sn / k) * f_tan * g_tan
    upper = (4.0 * h / k) * f_cot * g_cot
    excess = -(cot2_r / k**2 + 1.0) * s * (k * c * cot_h + s)
    second = (lower >= 0.0) & (upper >= 0.0) & (excess <= 0.0)
    return first | second


def kronig_penney_band(k, lp: LatticeParams, dirichlet=True):
    if lp.t != 0.0:
        raise ParameterError(f"the Kronig-Penney condition needs t = 0, got t={lp.t}")
    k = _positive_momenta(k)
    return _with_dirichlet(lambda q: _kronig_penney_raw(q, lp), k, lp.ell, dirichlet)


def membership_kirchhoff(k, lp: LatticeParams, dirichlet=True):
    if lp.alpha != 0.0:
        raise ParameterError(f"the Kirchhoff condition needs alpha = 0, got alpha={lp.alpha}")
    k = _positive_momenta(k)
    return _with_dirichlet(lambda q: _kirchhoff_raw(q, lp.ell, lp.t), k, lp.ell, dirichlet)


def positive_band_condition(lp: LatticeParams):
    """The raw vectorised band condition of the positive side, chosen by regime."""
    regime = positive_regime(lp)
    if regime == KRONIG_PENNEY:
        return lambda k: _kronig_penney_raw(k, lp)
    if regime == KIRCHHOFF:
        # at t = 1 the cubic does not depend on alpha
        return lambda k: _kirchhoff_raw(k, lp.ell, lp.t)
    return lambda k: _general_positive_raw(k, lp)


def membership_positive(k, lp: LatticeParams, dirichlet=True):
    k = _positive_momenta(k)
    return _with_dirichlet(positive_band_condition(lp), k, lp.ell, dirichlet)


# negative side


def _kronig_penney_negative_raw(kappa, lp):
    with np.errstate(over="ignore", invalid="ignore"):
        value = np.cosh(kappa * lp.ell) + math.tan(lp.gamma / 2.0) * np.sinh(kappa * lp.ell) / kappa
        return np.abs(value) <= 1.0


def _kirchhoff_negative_raw(kappa, ell, t):
    if t == 0.0:
        return np.zeros_like(kappa, dtype=bool)
    cot_r = 1.0 / math.tan(math.pi * t / 4.0)
    tanh_half = np.tanh(kappa * ell / 2.0)
    return (kappa * tanh_half <= cot_r) & (cot_r * tanh_half <= kappa)


def _negative_thresholds(kappa, lp):
    tanh_half = np.tanh(kappa * lp.ell / 2.0)
    tanh_full = np.tanh(kappa * lp.ell)
    a1, a2, a3 = tanh_half / kappa, 1.0 / (tanh_half * kappa), tanh_full / kappa
    b1, b2, b3 = kappa * tanh_half, kappa / tanh_half, kappa
    return (a1, a2, a3), (b1, b2, b3)


def negative_band_components(kappa, lp: LatticeParams):
    """The four alternatives of the negative band condition for ``gamma < 0``, ``0 < t < 1``."""
    if not 0.0 < lp.t < 1.0 or lp.gamma >= 0.0:
        raise ParameterError(f"negative band components need 0 < t < 1 and gamma < 0, got t={lp.t}")
    kappa = _positive_momenta(kappa, "kappa")
    p = -_cot_half(lp)
    z = 1.0 / math.tan(lp.quarter_angle)
    (a1, a2, a3), (b1, b2, b3) = _negative_thresholds(kappa, lp)
    return (
        (b1 <= z) & (z <= b2) & ((p <= a1) | (p >= a2)),
        (a1 <= p) & (p <= a2) & ((z <= b1) | (z >= b2)),
        (b1 <= z) & (z <= b3) & (a3 <= p) & (p <= a2),
        (b3 <= z) & (z <= b2) & (a1 <= p) & (p <= a3),
    )


def membership_kirchhoff_negative(kappa, lp: LatticeParams):
    if lp.alpha != 0.0:
        raise ParameterError(f"the Kirchhoff condition needs alpha = 0, got alpha={lp.alpha}")
    return _result(_kirchhoff_negative_raw(_positive_momenta(kappa, "kappa"), lp.ell, lp.t))


def kronig_penney_negative(kappa, lp: LatticeParams):
    if lp.t != 0.0:
        raise ParameterError(f"the Kronig-Penney condition needs t = 0, got t={lp.t}")
    return _result(_kronig_penney_negative_raw(_positive_momenta(kappa, "kappa"), lp))


def negative_band_condition(lp: LatticeParams):
    regime = negative_regime(lp)
    if regime == KRONIG_PENNEY:
        return lambda kappa: _kronig_penney_negative_raw(kappa, lp)
    if regime == KIRCHHOFF:
        # gamma > 0 leaves the negative spectrum of the Kirchhoff coupling unchanged
        return lambda kappa: _kirchhoff_negative_raw(kappa, lp.ell, lp.t)

    def general(kappa):
        first, second, third, fourth = negative_band_components(kappa, lp)
        return first | second | third | fourth

    return general


def membership_negative(kappa, lp: LatticeParams):
    kappa = _positive_momenta(kappa, "kappa")
    return _result(negative_band_condition(lp)(kappa))
