"""Error norms on an evaluation window, excluding reduced-accuracy nodes."""

import math
from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError, GridSizeError
from fracsym.fraccore.compare import DEFAULT_WINDOW
from fracsym.fraccore.grid import GridFunction1D, GridFunction2D


@dataclass(frozen=True)
class WindowErrors:
    max_abs: float
    max_rel: float
    rms: float
    nodes: int


def _reference_values(result: GridFunction1D | GridFunction2D, reference) -> np.ndarray:
    if isinstance(reference, GridFunction1D | GridFunction2D):
        values = np.asarray(reference.samples)
    elif callable(reference):
        if isinstance(result, GridFunction1D):
            values = np.asarray(reference(result.nodes), dtype=float)
        else:
            values = np.asarray(reference(*result.mesh()), dtype=float)
    else:
        values = np.asarray(reference, dtype=float)
    if values.shape != result.samples.shape:
        raise GridSizeError(
            f"reference of shape {values.shape} does not match result shape {result.samples.shape}"
        )
    return values


def evaluation_mask(
    result: GridFunction1D | GridFunction2D, window: tuple[float, float] = DEFAULT_WINDOW
) -> np.ndarray:
    if isinstance(result, GridFunction1D):
        mask = result.grid.window_mask(window)
    else:
        mask = result.window_mask(window)
    return mask & ~result.reduced_accuracy


def window_errors(
    result: GridFunction1D | GridFunction2D,
    reference,
    window: tuple[float, float] = DEFAULT_WINDOW,
) -> WindowErrors:
    """Compare `result` with a reference (grid function, array, or callable on node coordinates).

    `max_rel` is the largest pointwise relative error over window nodes where
    the reference is nonzero.
    """
    ref = _reference_values(result, reference)
    mask = evaluation_mask(result, window)
    if not mask.any():
        raise DomainError(f"no full-accuracy nodes inside window {window}")
    err = np.abs(np.asarray(result.samples)[mask] - ref[mask])
    ref_abs = np.abs(ref[mask])
    nonzero = ref_abs > 0
    max_rel = float(np.max(err[nonzero] / ref_abs[nonzero])) if nonzero.any() else float(np.max(err))
    return WindowErrors(
        max_abs=float(np.max(err)),
        max_rel=max_rel,
        rms=float(np.sqrt(np.mean(err**2))),
        nodes=int(mask.sum()),
    )


def observed_order(err_h: float, err_h2: float) -> float:
    """Convergence order from errors at steps h and h/2."""
    if err_h2 == 0.0:
        return math.inf
    return math.log2(err_h / err_h2)
