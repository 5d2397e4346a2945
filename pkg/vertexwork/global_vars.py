from typing import Optional

# edge provenance labels
DIRICHLET_POINT = "dirichlet-point"
SCAN_RESOLUTION = "scan-resolution"
RANGE_LIMIT = "range-limit"
ZERO_THRESHOLD = "zero-threshold"

# interval kinds
BAND = "band"
DIRICHLET = "dirichlet_point"

# spectral sides
POSITIVE = "positive"
NEGATIVE = "negative"

# band condition regimes
KRONIG_PENNEY = "kronig-penney"
KIRCHHOFF = "kirchhoff"
GENERAL = "general"

# zero neighbourhood classes
BAND_RIGHT_GAP_LEFT = "band_right_gap_left"
BAND_LEFT_GAP_RIGHT = "band_left_gap_right"
INTERIOR = "interior"

ALLOWED_FORMATS = ["csv", "json"]


class NumericsEnv(object):
    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __init__(self, *args, **kwargs):
        self.load(*args, **kwargs)

    def load(
        self,
        unitary_tol: float = 1e-12,
        roundtrip_tol: float = 1e-12,
        t_eps: float = 1e-9,
        edge_xtol: float = 1e-10,
        edge_window: float = 1e-9,
        zero_tol: float = 1e-12,
        dirichlet_tol: float = 1e-12,
        significant_digits: int = 12,
        num_workers: Optional[int] = None,
        device: str = "cpu",
    ):
        self.unitary_tol = unitary_tol
        self.roundtrip_tol = roundtrip_tol
        self.t_eps = t_eps
        self.edge_xtol = edge_xtol
        self.edge_window = edge_window
        self.zero_tol = zero_tol
        self.dirichlet_tol = dirichlet_tol
        self.significant_digits = significant_digits
        self.num_workers = num_workers
        self.device = device

    def save(self):
        return dict(
            unitary_tol=self.unitary_tol,
            roundtrip_tol=self.roundtrip_tol,
            t_eps=self.t_eps,
            edge_xtol=self.edge_xtol,
            edge_window=self.edge_window,
            zero_tol=self.zero_tol,
            dirichlet_tol=self.dirichlet_tol,
            significant_digits=self.significant_digits,
            num_workers=self.num_workers,
            device=self.device,
        )


env = NumericsEnv()
