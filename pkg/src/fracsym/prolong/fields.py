"""Point vector fields v = xi1 d/dx1 + xi2 d/dx2 + phi d/du."""

import math
from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError, GridSizeError
from fracsym.fraccore.bivariate import BivariatePowerSum, check_axis
from fracsym.fraccore.grid import GridFunction2D


@dataclass(frozen=True)
class ScalingField:
    """xi1 = c1 * x1, xi2 = c2 * x2, phi = cu * u."""

    c1: float
    c2: float
    cu: float

    def __post_init__(self) -> None:
        for name in ("c1", "c2", "cu"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"field coefficient {name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_triple(cls, triple: tuple[float, float, float]) -> "ScalingField":
        return cls(*triple)

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.cu)

    @property
    def is_zero(self) -> bool:
        return self.triple == (0.0, 0.0, 0.0)

    def coefficient(self, axis: int) -> float:
        return self.c1 if check_axis(axis) == 1 else self.c2

    def as_power_sum_field(self) -> "PowerSumField":
        return PowerSumField(
            xi1=BivariatePowerSum.monomial(1.0, 0.0, self.c1),
            xi2=BivariatePowerSum.monomial(0.0, 1.0, self.c2),
            phi0=BivariatePowerSum.zero(),
            cu=self.cu,
        )


@dataclass(frozen=True)
class PowerSumField:
    """xi1(x), xi2(x) and phi = phi0(x) + cu * u, all as bivariate power sums in x."""

    xi1: BivariatePowerSum
    xi2: BivariatePowerSum
    phi0: BivariatePowerSum
    cu: float = 0.0

    def xi(self, axis: int) -> BivariatePowerSum:
        return self.xi1 if check_axis(axis) == 1 else self.xi2

    def phi(self, u: BivariatePowerSum) -> BivariatePowerSum:
        """phi along the surface u = u(x)."""
        return self.phi0 + u * self.cu


@dataclass(frozen=True)
class SampledField:
    """xi1, xi2 sampled on the grid of u, and phi sampled along the surface u(x)."""

    xi1: GridFunction2D
    xi2: GridFunction2D
    phi: GridFunction2D

    def __post_init__(self) -> None:
        grids = {(f.grid1, f.grid2) for f in (self.xi1, self.xi2, self.phi)}
        if len(grids) != 1:
            raise GridSizeError("sampled field components live on different grids")

    @classmethod
    def constant(cls, u: GridFunction2D, xi1: float, xi2: float, phi: float = 0.0) -> "SampledField":
        """Constant coefficients, e.g. the translations."""
        shape = u.shape
        return cls(
            u.with_samples(np.full(shape, float(xi1))),
            u.with_samples(np.full(shape, float(xi2))),
            u.with_samples(np.full(shape, float(phi))),
        )

    def xi(self, axis: int) -> GridFunction2D:
        return self.xi1 if check_axis(axis) == 1 else self.xi2

    def check_grid(self, u: GridFunction2D) -> None:
        if (self.xi1.grid1, self.xi1.grid2) != (u.grid1, u.grid2):
            raise GridSizeError("sampled field and u live on different grids")


@dataclass(frozen=True)
class MixedOrderSpec:
    """Outer order p on axis m applied after inner order q on axis 3 - m."""

    m: int
    p: float
    q: float

    def __post_init__(self) -> None:
        check_axis(self.m)
        for name in ("p", "q"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0:
                raise DomainError(f"mixed order {name} must be non-negative, got {value}")
            object.__setattr__(self, name, value)
        if self.p == 0 and self.q == 0:
            raise DomainError("mixed orders p and q cannot both be zero")

    @property
    def other(self) -> int:
        return 3 - self.m


Field = ScalingField | PowerSumField | SampledField
