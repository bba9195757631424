"""Parameters (c, a, b) of the Erdelyi-Kober operators."""

import math
from dataclasses import dataclass

from fracsym.exceptions import DomainError


@dataclass(frozen=True)
class EKParams:
    c: float
    a: float
    b: float

    def __post_init__(self) -> None:
        for name in ("c", "a", "b"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"EK parameter {name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.a < 0:
            raise DomainError(f"EK order a must be non-negative, got {self.a}")
        if self.b == 0:
            raise DomainError("EK parameter b must be nonzero")

    @property
    def floor_a(self) -> int:
        return math.floor(self.a)

    def inner(self) -> "EKParams":
        """Parameters of the integral inside D^{c,a}_b: K^{c+a, [a]+1-a}_b."""
        return EKParams(self.c + self.a, self.floor_a + 1 - self.a, self.b)
