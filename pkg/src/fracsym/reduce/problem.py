"""The reduced problem: domain, power basis, normalization and collocation size."""

import math
from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError
from fracsym.fkdvb.params import FkdvbParams

DEFAULT_DOMAIN = (0.2, 2.0)
DEFAULT_BASIS = 10
DEFAULT_COLLOCATION = 24
DEFAULT_TOLERANCE = 1e-6
# share of the strip above gamma0 that a spread-out basis may cover
STRIP_FILL = 0.95


def admissible_strip(params: FkdvbParams) -> tuple[float, float]:
    """Open interval of basis exponents mu for which every operator in G[v] is defined.

    mu > -1 keeps D^q and D^r of v integrable; mu < q - r + r/p keeps the
    x2-exponent of the reconstructed u above -1 (the EK inner integral converges).
    """
    return (-1.0, params.q - params.r + params.r / params.p)


def leading_exponent(params: FkdvbParams) -> float:
    """Lowest exponent in the strip that D^r sends to zero, else the strip midpoint.

    D^r z^mu vanishes for mu = r - j, j = 1..[r] + 1; at the lowest of these
    the dispersive term cannot dominate G[v] as z -> 0.
    """
    lo, hi = admissible_strip(params)
    kernel = [params.r - j for j in range(1, math.floor(params.r) + 2)]
    inside = [mu for mu in kernel if lo < mu < hi]
    return min(inside) if inside else (lo + hi) / 2.0


def default_basis(params: FkdvbParams, size: int) -> tuple[float, float]:
    """(gamma0, delta) for the basis gamma0 + k * delta, k < size.

    delta = q follows the exponent steps of the nonlinearity; when that would
    carry the top exponent too close to the strip edge the basis is spread
    over STRIP_FILL of the room left above gamma0.
    """
    _, hi = admissible_strip(params)
    gamma0 = leading_exponent(params)
    if size == 1:
        return gamma0, params.q
    return gamma0, min(params.q, STRIP_FILL * (hi - gamma0) / (size - 1))


@dataclass(frozen=True)
class ReducedProblem:
    params: FkdvbParams
    z_min: float
    z_max: float
    gamma0: float
    delta: float
    size: int
    z_ref: float
    w0: float
    collocation: int
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self) -> None:
        if not (math.isfinite(self.z_min) and math.isfinite(self.z_max) and 0 < self.z_min < self.z_max):
            raise DomainError(f"reduced domain needs 0 < z_min < z_max, got [{self.z_min}, {self.z_max}]")
        if self.size < 1:
            raise DomainError(f"basis size must be at least 1, got {self.size}")
        if self.collocation < self.size:
            raise DomainError(
                f"collocation points ({self.collocation}) must be at least the basis size ({self.size})"
            )
        if self.collocation < 2:
            raise DomainError("at least 2 collocation points are needed")
        if not self.z_ref > 0:
            raise DomainError(f"normalization point must be positive, got {self.z_ref}")
        if not self.tolerance > 0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance}")
        lo, hi = admissible_strip(self.params)
        outside = [mu for mu in self.exponents if not lo < mu < hi]
        if outside:
            raise DomainError(f"basis exponents {outside} leave the admissible strip ({lo:g}, {hi:g})")

    @classmethod
    def build(
        cls,
        params: FkdvbParams,
        z_min: float = DEFAULT_DOMAIN[0],
        z_max: float = DEFAULT_DOMAIN[1],
        size: int = DEFAULT_BASIS,
        collocation: int = DEFAULT_COLLOCATION,
        z_ref: float | None = None,
        w0: float = 1.0,
        tolerance: float = DEFAULT_TOLERANCE,
    ) -> "ReducedProblem":
        """Problem with the default basis; z_ref defaults to the right end of the domain."""
        gamma0, delta = default_basis(params, size)
        return cls(
            params=params,
            z_min=z_min,
            z_max=z_max,
            gamma0=gamma0,
            delta=delta,
            size=size,
            z_ref=z_max if z_ref is None else z_ref,
            w0=w0,
            collocation=collocation,
            tolerance=tolerance,
        )

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(self.gamma0 + k * self.delta for k in range(self.size))

    @property
    def collocation_points(self) -> np.ndarray:
        """Chebyshev-Lobatto points on [z_min, z_max], ascending."""
        k = np.arange(self.collocation)
        nodes = -np.cos(np.pi * k / (self.collocation - 1))
        return (self.z_min + self.z_max) / 2.0 + (self.z_max - self.z_min) / 2.0 * nodes
