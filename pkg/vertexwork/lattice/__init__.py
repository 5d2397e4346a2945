from .conditions import (
    ab_coefficients,
    ab_form,
    b_minus_one,
    b_plus_one_minus_two_a,
    b_plus_one_plus_two_a,
    is_dirichlet_point,
    kronig_penney_band,
    kronig_penney_negative,
    membership_kirchhoff,
    membership_kirchhoff_negative,
    membership_negative,
    membership_positive,
    negative_band_components,
    negative_regime,
    positive_regime,
    rescaled_cubic,
    spectral_cubic,
    spectral_cubic_imaginary,
    v_coefficients,
)
from .curves import CURVES, NEGATIVE_CURVES, POSITIVE_CURVES, EdgeCurve, candidate_curves, get_curve
from .edges import (
    EndpointSlopes,
    edge_slope_at_endpoints,
    flat_band_points,
    gap_around_dirichlet_point,
    gap_width_asymptotic,
    gap_widths,
    label_edge,
    trace_edge,
    zero_neighborhood_class,
    zero_threshold,
)
from .oracle import corner_oracle, corner_oracle_grid, corner_oracle_negative, det_condition, det_prefactor
from .params import DEGREE, ABCoefficients, BlochPhase, LatticeParams, VCoefficients
from .scan import BandInterval, SpectralDiagram, build_diagram, default_resolution, scan_bands
