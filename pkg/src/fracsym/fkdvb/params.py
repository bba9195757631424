"""Orders of the fractional KdV-Burgers equation

    D^p_{x2} u + u D^q_{x1} u + D^r_{x1} u = 0,   terminal 0 on both axes.
"""

import math
from dataclasses import dataclass
from enum import Enum

from fracsym.exceptions import DomainError


class Branch(str, Enum):
    DISTINCT = "q<r"
    EQUAL = "q=r"


@dataclass(frozen=True)
class FkdvbParams:
    """Orders p, q, r > 0 with q <= r; integer orders need allow_integer=True."""

    p: float
    q: float
    r: float
    allow_integer: bool = False

    def __post_init__(self) -> None:
        for name in ("p", "q", "r"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"order {name} must be positive and finite, got {value}")
            object.__setattr__(self, name, value)
        if self.q > self.r:
            raise DomainError(f"orders must satisfy q <= r, got q={self.q}, r={self.r}")
        if not self.allow_integer and self.integer_orders:
            raise DomainError(
                f"orders {', '.join(self.integer_orders)} are integers; "
                "p, q, r must be non-integer reals (pass allow_integer=True for the classical case)"
            )

    @property
    def integer_orders(self) -> tuple[str, ...]:
        return tuple(name for name in ("p", "q", "r") if getattr(self, name).is_integer())

    @property
    def orders(self) -> tuple[float, float, float]:
        return (self.p, self.q, self.r)

    @property
    def branch(self) -> Branch:
        return Branch.EQUAL if self.q == self.r else Branch.DISTINCT

    @property
    def equivariance_exponent(self) -> float:
        """s in R[u_lam] = lam^s R[u] o S_lam for the scaling group."""
        return self.p * self.q - 2.0 * self.p * self.r
