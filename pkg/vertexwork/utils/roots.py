import numpy as np
from vertexwork.exceptions import BracketError
from vertexwork.global_vars import env

_MAX_BISECTIONS = 200


def bisect(func, lo, hi, xtol=None):
    """Root of ``func`` on ``[lo, hi]`` by bisection, to an absolute bracket width of ``xtol``."""
    if xtol is None:
        xtol = env.edge_xtol
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if not np.isfinite(f_lo) or not np.isfinite(f_hi) or np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(f"no sign change on [{lo!r}, {hi!r}]: f={f_lo!r}, {f_hi!r}")

    for _ in range(_MAX_BISECTIONS):
        if hi - lo <= xtol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_mid == 0:
            return mid
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bisect_predicate(predicate, inside, outside, xtol=None):
    """Locate the boundary between a point where ``predicate`` holds and one where it does not.

    Returns the last point known to satisfy the predicate, so the result always lies on the closed side.
    """
    if xtol is None:
        xtol = env.edge_xtol
    if not predicate(inside) or predicate(outside):
        raise BracketError(f"predicate does not change between {inside!r} and {outside!r}")

    for _ in range(_MAX_BISECTIONS):
        if abs(outside - inside) <= xtol:
            break
        mid = 0.5 * (inside + outside)
        if predicate(mid):
            inside = mid
        else:
            outside = mid
    return inside


def sign_change_brackets(grid, values):
    """Consecutive grid pairs across which ``values`` changes sign; exact zeros give degenerate pairs."""
    grid = np.asarray(grid)
    signs = np.sign(np.asarray(values))
    brackets = []
    for i in np.flatnonzero(signs == 0):
        brackets.append((grid[i], grid[i]))
    for i in np.flatnonzero(signs[:-1] * signs[1:] < 0):
        brackets.append((grid[i], grid[i + 1]))
    brackets.sort()
    return brackets


def scan_roots(func, grid, values=None, xtol=None):
    """All roots of ``func`` seen as sign changes on ``grid``, refined by bisection."""
    if values is None:
        values = [func(x) for x in grid]
    roots = []
    for lo, hi in sign_change_brackets(grid, values):
        roots.append(lo if lo == hi else bisect(func, lo, hi, xtol))
    return roots
