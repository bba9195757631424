"""Termwise closed-form rules for power terms c * t**mu with lower terminal 0."""

import math

from fracsym.exceptions import DomainError
from fracsym.fraccore.gamma import falling_factorial, gamma_ratio, rising_factorial

EXPONENT_FLOOR = -1.0 + 1e-9
MERGE_RTOL = 1e-12


def exponents_equal(a: float, b: float) -> bool:
    return abs(a - b) <= MERGE_RTOL * max(1.0, abs(a))


def check_exponent(mu: float, operation: str) -> None:
    """RL operators with terminal 0 need an integrable kernel: mu > -1."""
    if not mu > EXPONENT_FLOOR:
        raise DomainError(
            f"{operation}: exponent {mu} is not above the integrability floor -1"
        )


def check_order(p: float, *, strictly_positive: bool = False) -> float:
    p = float(p)
    if not math.isfinite(p):
        raise DomainError(f"order must be finite, got {p}")
    if p < 0 or (strictly_positive and p == 0):
        bound = "positive" if strictly_positive else "non-negative"
        raise DomainError(f"order must be {bound}, got {p}")
    return p


def rl_derivative_rule(mu: float, p: float) -> tuple[float, float]:
    """Factor and new exponent of D^p t^mu = Gamma(mu+1)/Gamma(mu+1-p) t^(mu-p)."""
    check_exponent(mu, "RL derivative")
    p = float(p)
    if p.is_integer():
        k = int(p)
        return falling_factorial(mu, k), mu - k
    return gamma_ratio(mu + 1.0, mu + 1.0 - p), mu - p


def rl_integral_rule(mu: float, p: float) -> tuple[float, float]:
    """Factor and new exponent of I^p t^mu = Gamma(mu+1)/Gamma(mu+1+p) t^(mu+p)."""
    check_exponent(mu, "RL integral")
    p = float(p)
    if p.is_integer():
        return 1.0 / rising_factorial(mu + 1.0, int(p)), mu + p
    return gamma_ratio(mu + 1.0, mu + 1.0 + p), mu + p


def classical_derivative_rule(mu: float, k: int) -> tuple[float, float]:
    """k-fold classical derivative; no integrability requirement."""
    return falling_factorial(mu, k), mu - k
