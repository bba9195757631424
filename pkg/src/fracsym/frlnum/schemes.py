"""Discretization weights for RL operators on uniform grids.

Both schemes are lower-triangular matrices applied with one matrix-vector
product per grid line, so a line's result does not depend on how lines are
distributed over workers.
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy import linalg, special

from fracsym.exceptions import DomainError


class SchemeKind(str, Enum):
    PRODUCT_TRAPEZOID = "pt"
    GRUNWALD_LETNIKOV = "gl"


@dataclass(frozen=True)
class FracOrder:
    """Order p >= 0 with its integer part [p] <= p < [p] + 1."""

    p: float

    def __post_init__(self) -> None:
        p = float(self.p)
        if not math.isfinite(p) or p < 0:
            raise DomainError(f"fractional order must be finite and non-negative, got {self.p}")
        object.__setattr__(self, "p", p)

    @property
    def floor_p(self) -> int:
        return math.floor(self.p)

    @property
    def is_integer(self) -> bool:
        return self.p.is_integer()

    @property
    def stencil(self) -> int:
        """Number of classical derivatives in the RL composition: [p] + 1, or p itself if integral."""
        return int(self.p) if self.is_integer else self.floor_p + 1


def as_order(p: "float | FracOrder") -> FracOrder:
    return p if isinstance(p, FracOrder) else FracOrder(p)


def _readonly(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=64)
def product_trapezoid_weights(mu: float, n: int) -> np.ndarray:
    """W with I^mu f(t_i) ~= h**mu * (W @ f)[i]; piecewise-linear product integration.

    Row i holds h-free weights a_{i,j} / Gamma(mu + 2); the terminal row is zero.
    """
    if not mu > 0:
        raise DomainError(f"integral order must be positive, got {mu}")
    e = mu + 1.0
    k = np.arange(1, n, dtype=float)
    first_column = np.zeros(n)
    first_column[0] = 1.0
    first_column[1:] = (k + 1.0) ** e - 2.0 * k**e + (k - 1.0) ** e
    weights = linalg.toeplitz(first_column, np.zeros(n))
    weights[1:, 0] = (k - 1.0) ** e - (k - e) * k**mu
    weights[0, :] = 0.0
    return _readonly(weights * special.rgamma(mu + 2.0))


@lru_cache(maxsize=64)
def grunwald_letnikov_weights(p: float, n: int) -> np.ndarray:
    """W with D^p f(t_i) ~= h**(-p) * (W @ f)[i], w_k = (-1)^k C(p, k) by recurrence."""
    ratios = 1.0 - (p + 1.0) / np.arange(1, n, dtype=float)
    coeffs = np.concatenate(([1.0], np.cumprod(ratios)))
    return _readonly(linalg.toeplitz(coeffs, np.zeros(n)))
