"""Deviation measures and probe points shared by the exact-path checks."""

import numpy as np

from fracsym.exceptions import DomainError

DEFAULT_WINDOW = (0.1, 1.0)


def relative_deviation(lhs: np.ndarray | float, rhs: np.ndarray | float) -> float:
    """max|lhs - rhs| / max(max|lhs|, max|rhs|); 0 when both sides vanish."""
    left = np.asarray(lhs, dtype=float)
    right = np.asarray(rhs, dtype=float)
    scale = max(float(np.max(np.abs(left), initial=0.0)), float(np.max(np.abs(right), initial=0.0)))
    if scale == 0.0:
        return 0.0
    return float(np.max(np.abs(left - right))) / scale


def probe_points(
    window: tuple[float, float] = DEFAULT_WINDOW, n: int = 9
) -> tuple[np.ndarray, np.ndarray]:
    """Tensor grid of n x n points in window x window, away from the axes."""
    lo, hi = window
    if not 0 < lo < hi:
        raise DomainError(f"probe window must satisfy 0 < lo < hi, got {window}")
    axis = np.linspace(lo, hi, n)
    x1, x2 = np.meshgrid(axis, axis)
    return x1, x2
