"""Generalized polynomials: finite sums of real powers c * t**mu.

The class is closed under the RL operators with terminal 0, which makes it
the exact oracle for every numerical scheme in the package.
"""

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

import numpy as np

from fracsym.exceptions import DomainError
from fracsym.fraccore.rules import (
    check_order,
    classical_derivative_rule,
    exponents_equal,
    rl_derivative_rule,
    rl_integral_rule,
)


@dataclass(frozen=True)
class PowerTerm:
    coeff: float
    exponent: float

    def __post_init__(self) -> None:
        coeff, exponent = float(self.coeff), float(self.exponent)
        if not math.isfinite(coeff):
            raise DomainError(f"power term coefficient must be finite, got {coeff}")
        if not math.isfinite(exponent):
            raise DomainError(f"power term exponent must be finite, got {exponent}")
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "exponent", exponent)


def _normalize(terms: Iterable[PowerTerm]) -> tuple[PowerTerm, ...]:
    merged: list[PowerTerm] = []
    for term in sorted(terms, key=lambda t: t.exponent):
        if merged and exponents_equal(merged[-1].exponent, term.exponent):
            last = merged.pop()
            term = PowerTerm(last.coeff + term.coeff, last.exponent)
        merged.append(term)
    return tuple(t for t in merged if t.coeff != 0.0)


def check_evaluation_points(t: np.ndarray, exponents: Iterable[float]) -> None:
    if np.any(t < 0):
        raise DomainError("power sums are only evaluated at non-negative points")
    if np.any(t == 0) and any(mu < 0 for mu in exponents):
        raise DomainError("negative exponent evaluated at t = 0")


@dataclass(frozen=True)
class GeneralizedPolynomial:
    terms: tuple[PowerTerm, ...] = ()
    variable: str = field(default="t", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _normalize(self.terms))

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[float, float]], variable: str = "t"
    ) -> "GeneralizedPolynomial":
        """Build from (coeff, exponent) pairs."""
        return cls(tuple(PowerTerm(c, mu) for c, mu in pairs), variable)

    @classmethod
    def monomial(cls, exponent: float, coeff: float = 1.0, variable: str = "t") -> "GeneralizedPolynomial":
        return cls((PowerTerm(coeff, exponent),), variable)

    @classmethod
    def constant(cls, value: float, variable: str = "t") -> "GeneralizedPolynomial":
        return cls.monomial(0.0, value, variable)

    @classmethod
    def zero(cls, variable: str = "t") -> "GeneralizedPolynomial":
        return cls((), variable)

    @property
    def exponents(self) -> tuple[float, ...]:
        return tuple(t.exponent for t in self.terms)

    @property
    def coefficients(self) -> tuple[float, ...]:
        return tuple(t.coeff for t in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def map_terms(self, rule: Callable[[float], tuple[float, float]]) -> "GeneralizedPolynomial":
        """Apply a termwise rule mu -> (factor, new_mu)."""
        mapped = []
        for term in self.terms:
            factor, exponent = rule(term.exponent)
            mapped.append(PowerTerm(term.coeff * factor, exponent))
        return GeneralizedPolynomial(tuple(mapped), self.variable)

    def scale_argument(self, lam: float) -> "GeneralizedPolynomial":
        """t -> f(lam * t) for lam > 0."""
        if not lam > 0:
            raise DomainError(f"argument scaling needs lam > 0, got {lam}")
        return self.map_terms(lambda mu: (lam**mu, mu))

    def shift_exponents(self, delta: float) -> "GeneralizedPolynomial":
        """t**delta * f(t)."""
        return self.map_terms(lambda mu: (1.0, mu + delta))

    def derivative(self, k: int = 1) -> "GeneralizedPolynomial":
        """Classical k-fold derivative."""
        return self.map_terms(lambda mu: classical_derivative_rule(mu, k))

    def __add__(self, other: "GeneralizedPolynomial") -> "GeneralizedPolynomial":
        if not isinstance(other, GeneralizedPolynomial):
            return NotImplemented
        return GeneralizedPolynomial(self.terms + other.terms, self.variable)

    def __neg__(self) -> "GeneralizedPolynomial":
        return self * -1.0

    def __sub__(self, other: "GeneralizedPolynomial") -> "GeneralizedPolynomial":
        if not isinstance(other, GeneralizedPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "GeneralizedPolynomial | float") -> "GeneralizedPolynomial":
        if isinstance(other, GeneralizedPolynomial):
            return gp_mul(self, other)
        if isinstance(other, int | float):
            return self.map_terms(lambda mu: (float(other), mu))
        return NotImplemented

    def __rmul__(self, other: float) -> "GeneralizedPolynomial":
        return self * other

    def __call__(self, t: float | np.ndarray) -> float | np.ndarray:
        return gp_eval(self, t)

    def __str__(self) -> str:
        from fracsym.fraccore.parsing import format_gp

        return format_gp(self)


def gp_rl_deriv(f: GeneralizedPolynomial, p: float) -> GeneralizedPolynomial:
    """RL derivative of order p >= 0 with terminal 0, exact termwise."""
    p = check_order(p)
    if p == 0:
        return f
    return f.map_terms(lambda mu: rl_derivative_rule(mu, p))


def gp_rl_integral(f: GeneralizedPolynomial, p: float) -> GeneralizedPolynomial:
    """RL integral of order p > 0 with terminal 0, exact termwise."""
    p = check_order(p, strictly_positive=True)
    return f.map_terms(lambda mu: rl_integral_rule(mu, p))


def gp_mul(f: GeneralizedPolynomial, g: GeneralizedPolynomial) -> GeneralizedPolynomial:
    products = [
        PowerTerm(a.coeff * b.coeff, a.exponent + b.exponent) for a in f.terms for b in g.terms
    ]
    return GeneralizedPolynomial(tuple(products), f.variable)


def gp_eval(f: GeneralizedPolynomial, t: float | np.ndarray) -> float | np.ndarray:
    points = np.asarray(t, dtype=float)
    check_evaluation_points(points, f.exponents)
    total = np.zeros_like(points)
    for term in f.terms:
        total = total + term.coeff * points**term.exponent
    return float(total) if total.ndim == 0 else total


def sample(f: GeneralizedPolynomial, grid, terminal_value: float | None = None):
    """Samples of f on the nodes of a UniformGrid1D.

    A singular value at the terminal node (negative exponent at t = 0) is a
    domain error unless `terminal_value` is given to stand in for it.
    """
    from fracsym.fraccore.grid import GridFunction1D

    nodes = grid.nodes
    if terminal_value is not None and nodes[0] == 0 and any(mu < 0 for mu in f.exponents):
        values = np.empty_like(nodes)
        values[1:] = gp_eval(f, nodes[1:])
        values[0] = terminal_value
        return GridFunction1D(grid, values)
    return GridFunction1D(grid, np.asarray(gp_eval(f, nodes), dtype=float))
