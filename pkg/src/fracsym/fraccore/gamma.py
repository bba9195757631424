"""Gamma-function helpers with explicit pole handling.

``scipy.special`` evaluates Gamma with a Lanczos-type approximation plus the
reflection formula; ``rgamma`` returns exactly 0 at non-positive integers.
Arguments within a relative 1e-12 of a pole are snapped onto it so that
arithmetic noise such as ``0.5 + 1 - 1.5000000000000002`` still hits the pole.
"""

import math

from scipy import special

from fracsym.exceptions import DomainError

POLE_RTOL = 1e-12
_OVERFLOW_ARG = 150.0


def is_pole(x: float) -> bool:
    """True when Gamma has a pole at x (x a non-positive integer, up to POLE_RTOL)."""
    nearest = round(x)
    return nearest <= 0 and abs(x - nearest) <= POLE_RTOL * max(1.0, abs(x))


def rgamma(x: float) -> float:
    """1/Gamma(x), exactly 0 at the poles."""
    if is_pole(x):
        return 0.0
    return float(special.rgamma(x))


def gamma_ratio(num: float, den: float) -> float:
    """Gamma(num)/Gamma(den).

    A pole in the denominator gives 0. A pole in the numerator is a domain
    error unless the denominator also has one, in which case the limit
    Gamma(-n+d)/Gamma(-m+d) -> (-1)^(n-m) m!/n! as d -> 0 is returned.
    """
    if is_pole(num):
        if is_pole(den):
            n, m = -round(num), -round(den)
            return (-1.0) ** (n - m) * math.factorial(m) / math.factorial(n)
        raise DomainError(f"Gamma({num}) is a pole in the numerator of a Gamma ratio")
    if is_pole(den):
        return 0.0
    if max(abs(num), abs(den)) > _OVERFLOW_ARG:
        sign = float(special.gammasgn(num) * special.gammasgn(den))
        return sign * math.exp(float(special.gammaln(num) - special.gammaln(den)))
    return float(special.gamma(num)) * float(special.rgamma(den))


def falling_factorial(x: float, k: int) -> float:
    """x (x-1) ... (x-k+1); 1 for k == 0."""
    return math.prod(x - i for i in range(k))


def rising_factorial(x: float, k: int) -> float:
    """x (x+1) ... (x+k-1); 1 for k == 0."""
    return math.prod(x + i for i in range(k))


def binomial(p: float, n: int) -> float:
    """Generalized binomial coefficient C(p, n) for real p and integer n >= 0."""
    return falling_factorial(p, n) / math.factorial(n)
