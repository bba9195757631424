"""Bivariate power sums c * x1**mu1 * x2**mu2 with axis-wise RL operators."""

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError
from fracsym.fraccore.polynomial import GeneralizedPolynomial, check_evaluation_points
from fracsym.fraccore.rules import (
    check_order,
    classical_derivative_rule,
    exponents_equal,
    rl_derivative_rule,
    rl_integral_rule,
)

AXES = (1, 2)


def check_axis(axis: int) -> int:
    if axis not in AXES:
        raise DomainError(f"axis must be 1 or 2, got {axis}")
    return axis


@dataclass(frozen=True)
class BivariateTerm:
    coeff: float
    mu1: float
    mu2: float

    def __post_init__(self) -> None:
        for name in ("coeff", "mu1", "mu2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"bivariate term {name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    def exponent(self, axis: int) -> float:
        return self.mu1 if axis == 1 else self.mu2


def _same_pair(a: BivariateTerm, b: BivariateTerm) -> bool:
    return exponents_equal(a.mu1, b.mu1) and exponents_equal(a.mu2, b.mu2)


def _normalize(terms: Iterable[BivariateTerm]) -> tuple[BivariateTerm, ...]:
    merged: list[BivariateTerm] = []
    for term in sorted(terms, key=lambda t: (t.mu1, t.mu2)):
        # sorting by mu1 first can separate pairs whose mu1 differ by rounding noise
        for i, kept in enumerate(merged):
            if _same_pair(kept, term):
                merged[i] = BivariateTerm(kept.coeff + term.coeff, kept.mu1, kept.mu2)
                break
        else:
            merged.append(term)
    return tuple(t for t in merged if t.coeff != 0.0)


@dataclass(frozen=True)
class BivariatePowerSum:
    terms: tuple[BivariateTerm, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _normalize(self.terms))

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[float, float, float]]) -> "BivariatePowerSum":
        """Build from (coeff, mu1, mu2) triples."""
        return cls(tuple(BivariateTerm(c, m1, m2) for c, m1, m2 in triples))

    @classmethod
    def monomial(cls, mu1: float, mu2: float, coeff: float = 1.0) -> "BivariatePowerSum":
        return cls((BivariateTerm(coeff, mu1, mu2),))

    @classmethod
    def zero(cls) -> "BivariatePowerSum":
        return cls(())

    @classmethod
    def from_gp(cls, f: GeneralizedPolynomial, axis: int) -> "BivariatePowerSum":
        """Embed a univariate power sum as a function of x1 or x2 alone."""
        check_axis(axis)
        if axis == 1:
            return cls(tuple(BivariateTerm(t.coeff, t.exponent, 0.0) for t in f.terms))
        return cls(tuple(BivariateTerm(t.coeff, 0.0, t.exponent) for t in f.terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def triples(self) -> tuple[tuple[float, float, float], ...]:
        return tuple((t.coeff, t.mu1, t.mu2) for t in self.terms)

    def exponents(self, axis: int) -> tuple[float, ...]:
        check_axis(axis)
        return tuple(t.exponent(axis) for t in self.terms)

    def map_axis(self, axis: int, rule: Callable[[float], tuple[float, float]]) -> "BivariatePowerSum":
        """Apply a termwise rule mu -> (factor, new_mu) to the exponents of one axis."""
        check_axis(axis)
        mapped = []
        for term in self.terms:
            factor, exponent = rule(term.exponent(axis))
            if axis == 1:
                mapped.append(BivariateTerm(term.coeff * factor, exponent, term.mu2))
            else:
                mapped.append(BivariateTerm(term.coeff * factor, term.mu1, exponent))
        return BivariatePowerSum(tuple(mapped))

    def rl_deriv(self, axis: int, p: float) -> "BivariatePowerSum":
        """Partial RL derivative of order p >= 0 in x_axis with terminal 0."""
        p = check_order(p)
        if p == 0:
            return self
        return self.map_axis(axis, lambda mu: rl_derivative_rule(mu, p))

    def rl_integral(self, axis: int, p: float) -> "BivariatePowerSum":
        p = check_order(p, strictly_positive=True)
        return self.map_axis(axis, lambda mu: rl_integral_rule(mu, p))

    def partial(self, axis: int, k: int = 1) -> "BivariatePowerSum":
        """Classical k-fold partial derivative."""
        return self.map_axis(axis, lambda mu: classical_derivative_rule(mu, k))

    def multiply_monomial(self, mu1: float, mu2: float, coeff: float = 1.0) -> "BivariatePowerSum":
        return BivariatePowerSum(
            tuple(BivariateTerm(t.coeff * coeff, t.mu1 + mu1, t.mu2 + mu2) for t in self.terms)
        )

    def scale_arguments(self, lam1: float, lam2: float) -> "BivariatePowerSum":
        """(x1, x2) -> u(lam1 * x1, lam2 * x2) for positive factors."""
        if not (lam1 > 0 and lam2 > 0):
            raise DomainError(f"argument scaling needs positive factors, got ({lam1}, {lam2})")
        return BivariatePowerSum(
            tuple(
                BivariateTerm(t.coeff * lam1**t.mu1 * lam2**t.mu2, t.mu1, t.mu2)
                for t in self.terms
            )
        )

    def restrict(self, axis: int, value: float) -> GeneralizedPolynomial:
        """Freeze x_axis at `value` and return the remaining univariate sum."""
        check_axis(axis)
        other = 2 if axis == 1 else 1
        check_evaluation_points(np.asarray(value, dtype=float), self.exponents(axis))
        return GeneralizedPolynomial.from_pairs(
            ((t.coeff * value ** t.exponent(axis), t.exponent(other)) for t in self.terms),
            variable=f"x{other}",
        )

    def evaluate(self, x1: float | np.ndarray, x2: float | np.ndarray) -> float | np.ndarray:
        a1, a2 = np.broadcast_arrays(np.asarray(x1, dtype=float), np.asarray(x2, dtype=float))
        check_evaluation_points(a1, self.exponents(1))
        check_evaluation_points(a2, self.exponents(2))
        total = np.zeros(a1.shape)
        for t in self.terms:
            total = total + t.coeff * a1**t.mu1 * a2**t.mu2
        return float(total) if total.ndim == 0 else total

    def __call__(self, x1: float | np.ndarray, x2: float | np.ndarray) -> float | np.ndarray:
        return self.evaluate(x1, x2)

    def __add__(self, other: "BivariatePowerSum") -> "BivariatePowerSum":
        if not isinstance(other, BivariatePowerSum):
            return NotImplemented
        return BivariatePowerSum(self.terms + other.terms)

    def __neg__(self) -> "BivariatePowerSum":
        return self * -1.0

    def __sub__(self, other: "BivariatePowerSum") -> "BivariatePowerSum":
        if not isinstance(other, BivariatePowerSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "BivariatePowerSum | float") -> "BivariatePowerSum":
        if isinstance(other, BivariatePowerSum):
            return BivariatePowerSum(
                tuple(
                    BivariateTerm(a.coeff * b.coeff, a.mu1 + b.mu1, a.mu2 + b.mu2)
                    for a in self.terms
                    for b in other.terms
                )
            )
        if isinstance(other, int | float):
            return BivariatePowerSum(
                tuple(BivariateTerm(t.coeff * other, t.mu1, t.mu2) for t in self.terms)
            )
        return NotImplemented

    def __rmul__(self, other: float) -> "BivariatePowerSum":
        return self * other

    def __str__(self) -> str:
        from fracsym.fraccore.parsing import format_bivariate

        return format_bivariate(self)
