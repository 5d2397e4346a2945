"""Band structure of the lattice over an energy window, for one ``t`` or a grid of them."""
import json
import math
from dataclasses import asdict, dataclass, field
from typing import List, Tuple

import numpy as np
import torch.multiprocessing as mp
from tqdm import tqdm
from vertexwork.exceptions import ParameterError
from vertexwork.global_vars import (
    BAND,
    DIRICHLET,
    DIRICHLET_POINT,
    KIRCHHOFF,
    NEGATIVE,
    POSITIVE,
    RANGE_LIMIT,
    ZERO_THRESHOLD,
    env,
)
from vertexwork.utils import bisect_predicate, get_logger

from .conditions import membership_negative, membership_positive, positive_regime
from .edges import label_edge
from .params import LatticeParams

# smallest momentum put on a scan grid
MOMENTUM_FLOOR = 1e-8


@dataclass(frozen=True)
class BandInterval:
    e_lo: float
    e_hi: float
    edge_lo: str
    edge_hi: str
    kind: str = BAND

    def __post_init__(self):
        if not self.e_lo <= self.e_hi:
            raise ParameterError(f"band interval needs e_lo <= e_hi, got [{self.e_lo}, {self.e_hi}]")

    def contains(self, energy):
        return self.e_lo <= energy <= self.e_hi


@dataclass
class SpectralDiagram:
    ell: float
    alpha: float
    e_range: Tuple[float, float]
    resolution: float
    t_grid: List[float] = field(default_factory=list)
    bands: List[List[BandInterval]] = field(default_factory=list)

    def to_rows(self):
        rows = []
        for t, intervals in zip(self.t_grid, self.bands):
            for b in intervals:
                rows.append((t, b.e_lo, b.e_hi, b.edge_lo, b.edge_hi, b.kind))
        return rows

    def to_json(self):
        payload = dict(
            params=dict(ell=self.ell, alpha=self.alpha, e_range=list(self.e_range), resolution=self.resolution),
            diagram=[
                dict(t=t, bands=[asdict(b) for b in intervals]) for t, intervals in zip(self.t_grid, self.bands)
            ],
        )
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text):
        payload = json.loads(text)
        params = payload["params"]
        return cls(
            ell=params["ell"],
            alpha=params["alpha"],
            e_range=tuple(params["e_range"]),
            resolution=params["resolution"],
            t_grid=[entry["t"] for entry in payload["diagram"]],
            bands=[[BandInterval(**b) for b in entry["bands"]] for entry in payload["diagram"]],
        )


def _coarsest_resolution(ell):
    return min(math.pi * ell, math.pi / ell) / 4.0


def default_resolution(ell):
    return min(1e-3 * math.pi / ell, _coarsest_resolution(ell))


def _check_resolution(resolution, ell):
    bound = _coarsest_resolution(ell)
    if not 0.0 < resolution <= bound:
        raise ParameterError(f"resolution must satisfy 0 < resolution <= {bound!r}, got resolution={resolution}")


def _check_range(e_range):
    e_min, e_max = (float(e) for e in e_range)
    if not (math.isfinite(e_min) and math.isfinite(e_max)) or e_min >= e_max:
        raise ParameterError(f"energy range must be finite with e_min < e_max, got [{e_min}, {e_max}]")
    return e_min, e_max


def _landmarks(lo, hi, lp):
    unit = math.pi / lp.ell
    points = [m * unit for m in range(max(1, math.ceil(lo / unit)), math.floor(hi / unit) + 1)]
    if positive_regime(lp) == KIRCHHOFF:
        points += [(m - 0.5) * unit for m in range(1, math.floor(hi / unit + 0.5) + 1)]
    return [p for p in points if lo <= p <= hi]


def _momentum_grid(lo, hi, resolution, landmarks=()):
    lo = max(lo, MOMENTUM_FLOOR)
    count = max(1, int(math.ceil((hi - lo) / resolution)))
    grid = np.concatenate([np.linspace(lo, hi, count + 1), np.asarray(landmarks, dtype=np.float64)])
    return np.unique(grid)


def _runs(inside):
    """``(first, last)`` index pairs of the maximal runs of ``True``."""
    padded = np.concatenate([[False], np.asarray(inside, dtype=bool), [False]])
    changes = np.flatnonzero(padded[1:] != padded[:-1])
    return list(zip(changes[0::2], changes[1::2] - 1))


def _scan_side(predicate, grid, side, lp, floor_label):
    """Momentum intervals ``(q_lo, q_hi, label_lo, label_hi)`` where ``predicate`` holds on ``grid``."""
    inside = np.asarray(predicate(grid))
    intervals = []
    for first, last in _runs(inside):
        if first == 0:
            q_lo, label_lo = grid[0], floor_label
        else:
            q_lo = bisect_predicate(predicate, grid[first], grid[first - 1])
            label_lo = label_edge(q_lo, side, lp)
        if last == len(grid) - 1:
            q_hi, label_hi = grid[-1], RANGE_LIMIT
        else:
            q_hi = bisect_predicate(predicate, grid[last], grid[last + 1])
            label_hi = label_edge(q_hi, side, lp)
        intervals.append((float(q_lo), float(q_hi), label_lo, label_hi))
    return intervals


def _snap(energy, label, bound, lp):
    if label == ZERO_THRESHOLD:
        return 0.0
    if label == RANGE_LIMIT:
        return bound
    if label == DIRICHLET_POINT:
        m = max(1, round(math.sqrt(energy) * lp.ell / math.pi))
        return (m * math.pi / lp.ell) ** 2
    return energy


def _positive_bands(lp, e_min, e_max, resolution):
    k_lo, k_hi = math.sqrt(max(e_min, 0.0)), math.sqrt(e_max)
    grid = _momentum_grid(k_lo, k_hi, resolution, _landmarks(k_lo, k_hi, lp))
    floor_label = ZERO_THRESHOLD if e_min <= 0.0 else RANGE_LIMIT
    get_logger().debug(f"positive scan at t={lp.t}: {len(grid)} momenta on [{k_lo}, {k_hi}]")

    bands = []
    predicate = lambda k: membership_positive(k, lp, dirichlet=False)  # noqa: E731
    for q_lo, q_hi, label_lo, label_hi in _scan_side(predicate, grid, POSITIVE, lp, floor_label):
        e_lo = _snap(q_lo**2, label_lo, max(e_min, 0.0), lp)
        e_hi = _snap(q_hi**2, label_hi, e_max, lp)
        bands.append(BandInterval(e_lo, e_hi, label_lo, label_hi))
    return bands


def _negative_bands(lp, e_min, e_max, resolution):
    q_lo, q_hi = math.sqrt(max(-e_max, 0.0)), math.sqrt(-e_min)
    grid = _momentum_grid(q_lo, q_hi, resolution)
    floor_label = ZERO_THRESHOLD if e_max >= 0.0 else RANGE_LIMIT
    get_logger().debug(f"negative scan at t={lp.t}: {len(grid)} momenta on [{q_lo}, {q_hi}]")

    bands = []
    predicate = lambda kappa: membership_negative(kappa, lp)  # noqa: E731
    # larger kappa is lower energy, so the labels of the two ends swap
    for kappa_lo, kappa_hi, label_near, label_far in _scan_side(predicate, grid, NEGATIVE, lp, floor_label):
        e_lo = _snap(-(kappa_hi**2), label_far, e_min, lp)
        e_hi = _snap(-(kappa_lo**2), label_near, min(e_max, 0.0), lp)
        bands.append(BandInterval(e_lo, e_hi, label_far, label_near))
    return bands


def _merge_at_zero(negative, positive):
    if negative and positive and negative[-1].edge_hi == ZERO_THRESHOLD and positive[0].edge_lo == ZERO_THRESHOLD:
        joined = BandInterval(negative[-1].e_lo, positive[0].e_hi, negative[-1].edge_lo, positive[0].edge_hi)
        return negative[:-1] + [joined] + positive[1:]
    return negative + positive


def _dirichlet_points(bands, lp, e_min, e_max):
    unit = math.pi / lp.ell
    points = []
    m = max(1, math.ceil(math.sqrt(max(e_min, 0.0)) / unit))
    while (m * unit) ** 2 <= e_max:
        energy = (m * unit) ** 2
        if energy >= e_min and not any(b.contains(energy) for b in bands):
            points.append(BandInterval(energy, energy, DIRICHLET_POINT, DIRICHLET_POINT, DIRICHLET))
        m += 1
    return points


def scan_bands(lp: LatticeParams, t, e_range, resolution=None):
    """Spectral bands at coupling parameter ``t`` inside ``e_range``, sorted by energy.

    ``lp.t`` is ignored. Energies are ``k^2`` above zero and ``-kappa^2`` below; Dirichlet points not covered by
    a band come out as zero-width intervals of kind ``dirichlet_point``.
    """
    lp = lp.with_t(float(t))
    e_min, e_max = _check_range(e_range)
    if resolution is None:
        resolution = default_resolution(lp.ell)
    _check_resolution(resolution, lp.ell)

    negative = _negative_bands(lp, e_min, e_max, resolution) if e_min < 0.0 else []
    positive = _positive_bands(lp, e_min, e_max, resolution) if e_max > 0.0 else []
    bands = _merge_at_zero(negative, positive)
    bands += _dirichlet_points(bands, lp, e_min, e_max)
    bands.sort(key=lambda b: (b.e_lo, b.e_hi))
    return bands


def _scan_task(task):
    numerics, index, lp, t, e_range, resolution = task
    # spawned workers start from the default numerics
    env.load(**numerics)
    return index, scan_bands(lp, t, e_range, resolution)


def _num_processes(num_tasks):
    workers = env.num_workers if env.num_workers is not None else mp.cpu_count()
    return max(1, min(workers, num_tasks))


def _run_tasks(tasks, processes):
    if processes == 1:
        yield from map(_scan_task, tasks)
        return
    with mp.get_context("spawn").Pool(processes=processes) as pool:
        yield from pool.imap_unordered(_scan_task, tasks)


def build_diagram(lp: LatticeParams, t_grid, e_range, resolution=None, progress=False):
    """Run :func:`scan_bands` for every ``t`` of ``t_grid`` on a process pool; rows keep the order of the grid."""
    t_grid = [float(t) for t in t_grid]
    if not t_grid:
        raise ParameterError("t grid must not be empty")
    if resolution is None:
        resolution = default_resolution(lp.ell)
    e_range = _check_range(e_range)

    numerics = env.save()
    tasks = [(numerics, i, lp, t, e_range, resolution) for i, t in enumerate(t_grid)]
    processes = _num_processes(len(tasks))
    bands = [None] * len(t_grid)
    for i, intervals in tqdm(_run_tasks(tasks, processes), total=len(tasks), desc="sweep", disable=not progress):
        bands[i] = intervals
    get_logger().debug(
        f"diagram over {len(t_grid)} values of t on {processes} processes: {sum(len(b) for b in bands)} intervals"
    )
    return SpectralDiagram(lp.ell, lp.alpha, e_range, resolution, t_grid, bands)
