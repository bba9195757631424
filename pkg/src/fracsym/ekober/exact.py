"""Erdelyi-Kober integral and differential operators on power sums.

On y**mu, with x = c - mu/b:

    K^{c,a}_b y**mu = Gamma(x) / Gamma(x + a) * y**mu
    D^{c,a}_b y**mu = prod_{j=0}^{[a]} (x + j) * Gamma(x + a) / Gamma(x + [a] + 1) * y**mu

The integral converges for x > 0; D needs its inner integral, x + a > 0.
Outside those strips the Gamma ratios are continued analytically when asked.
"""

from dataclasses import dataclass

from fracsym.ekober.params import EKParams
from fracsym.exceptions import DomainError
from fracsym.fraccore.gamma import gamma_ratio, is_pole, rising_factorial
from fracsym.fraccore.polynomial import GeneralizedPolynomial, PowerTerm
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class EKResult:
    """Exact image of a power sum.

    `continued` lists input exponents whose factor came from analytic
    continuation; `pole_zeros` those whose factor is an exact zero at a pole.
    """

    value: GeneralizedPolynomial
    continued: tuple[float, ...] = ()
    pole_zeros: tuple[float, ...] = ()

    @property
    def used_continuation(self) -> bool:
        return bool(self.continued)


def _apply(
    f: GeneralizedPolynomial,
    factor_of,
    strip_of,
    operation: str,
    continuation: bool,
) -> EKResult:
    terms, continued, pole_zeros = [], [], []
    for term in f.terms:
        mu = term.exponent
        if not strip_of(mu) > 0:
            if not continuation:
                raise DomainError(
                    f"{operation} diverges for the term {term.coeff:g}*y^{mu:g}; "
                    "pass continuation=True for the continued value"
                )
            continued.append(mu)
        factor = factor_of(mu)
        if factor == 0.0:
            pole_zeros.append(mu)
        terms.append(PowerTerm(term.coeff * factor, mu))
    if continued:
        logger.warning("%s continued analytically for exponents %s", operation, continued)
    return EKResult(GeneralizedPolynomial(tuple(terms), f.variable), tuple(continued), tuple(pole_zeros))


def ek_integral_gp(
    f: GeneralizedPolynomial, params: EKParams, continuation: bool = False
) -> EKResult:
    if params.a == 0:
        return EKResult(f)

    def factor(mu: float) -> float:
        x = params.c - mu / params.b
        return gamma_ratio(x, x + params.a)

    return _apply(
        f, factor, lambda mu: params.c - mu / params.b, "EK integral", continuation
    )


def ek_diff_gp(f: GeneralizedPolynomial, params: EKParams, continuation: bool = False) -> EKResult:
    n = params.floor_a + 1

    def factor(mu: float) -> float:
        x = params.c - mu / params.b
        if params.a.is_integer():
            return rising_factorial(x, int(params.a))
        if any(is_pole(x + j) for j in range(n)):
            return 0.0
        return rising_factorial(x, n) * gamma_ratio(x + params.a, x + n)

    return _apply(
        f,
        factor,
        lambda mu: params.c + params.a - mu / params.b,
        "EK derivative",
        continuation,
    )
