from .scattering import (
    SMatrix,
    high_energy_distance,
    high_energy_limit,
    n4_generator_entries,
    s_eigenvalues,
    s_matrix,
    s_matrix_circulant,
    s_matrix_general,
    unitarity_residual,
)
from .star import (
    CONTINUOUS_SPECTRUM,
    KAPPA0,
    LimitReport,
    StarSpectrum,
    branch_energies,
    branch_kappas,
    kappa1_label,
    limit_behavior,
    negative_eigenvalues,
    normalised_secular,
    secular_determinant,
    secular_residual,
    secular_roots,
    star_oracle_residuals,
)
