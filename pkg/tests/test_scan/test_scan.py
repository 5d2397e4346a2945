from check_bands import (
    check_diagram,
    check_dirichlet_points_at_every_t,
    check_dirichlet_records,
    check_edges_on_curves,
    check_flat_band,
    check_general_bands,
    check_kirchhoff_bands,
    check_scan_errors,
    check_zero_crossing,
    check_zero_threshold_scan,
)
from check_edges import (
    check_coupling_independent_edges,
    check_endpoint_slopes,
    check_flat_bands,
    check_gap_asymptotics,
    check_label_edge,
    check_zero_threshold,
)


def test_edges():
    check_endpoint_slopes()
    check_coupling_independent_edges()
    check_label_edge()
    check_flat_bands()
    check_zero_threshold()
    check_gap_asymptotics()


def test_bands():
    check_kirchhoff_bands()
    check_dirichlet_records()
    check_general_bands()
    check_zero_crossing()
    check_zero_threshold_scan()
    check_dirichlet_points_at_every_t()
    check_edges_on_curves()
    check_flat_band()
    check_scan_errors()


def test_diagram():
    check_diagram()


if __name__ == "__main__":
    test_edges()
    test_bands()
    test_diagram()
