from check_scattering import (
    check_errors,
    check_general_matches_circulant,
    check_high_energy_limit,
    check_high_energy_rate,
    check_n4_closed_form,
    check_small_alpha_matrices,
    check_unitarity,
)
from check_star import (
    check_delta_star,
    check_divergence_at_zero,
    check_eigenvalue_counts,
    check_limits,
    check_oracle_residuals,
    check_secular_scan,
    check_small_alpha_is_kirchhoff_like,
)


def test_star():
    check_delta_star()
    check_eigenvalue_counts()
    check_oracle_residuals()
    check_secular_scan()
    check_limits()
    check_divergence_at_zero()
    check_small_alpha_is_kirchhoff_like()


def test_scattering():
    check_unitarity()
    check_general_matches_circulant()
    check_n4_closed_form()
    check_high_energy_limit()
    check_high_energy_rate()
    check_small_alpha_matrices()
    check_errors()


if __name__ == "__main__":
    test_star()
    test_scattering()
