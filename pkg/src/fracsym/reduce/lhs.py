"""Left-hand side of the reduced equation

    G[v](z) = z^{q-r} D^{1-p,p}_{r/p}(z^{r-q} v) + v D^q v + D^r v,

and its consistency with the two-variable residual under the invariant ansatz
u = x2^{p(q-r)/r} v(x1 x2^{-p/r}).
"""

from dataclasses import dataclass

import numpy as np

from fracsym.ekober.exact import ek_diff_gp
from fracsym.ekober.params import EKParams
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fkdvb.residual import residual
from fracsym.fraccore.bivariate import BivariatePowerSum, BivariateTerm
from fracsym.fraccore.compare import DEFAULT_WINDOW, probe_points, relative_deviation
from fracsym.fraccore.polynomial import GeneralizedPolynomial, gp_eval, gp_mul, gp_rl_deriv


@dataclass(frozen=True)
class ReducedTerms:
    """The three contributions to G[v]; exponents whose EK factor was continued or hit a pole."""

    ek: GeneralizedPolynomial
    nonlinear: GeneralizedPolynomial
    dispersive: GeneralizedPolynomial
    continued: tuple[float, ...] = ()
    pole_zeros: tuple[float, ...] = ()

    @property
    def total(self) -> GeneralizedPolynomial:
        return self.ek + self.nonlinear + self.dispersive


def ek_parameters(params: FkdvbParams) -> EKParams:
    return EKParams(1.0 - params.p, params.p, params.r / params.p)


def reduced_terms(v: GeneralizedPolynomial, params: FkdvbParams) -> ReducedTerms:
    shift = params.r - params.q
    ek = ek_diff_gp(v.shift_exponents(shift), ek_parameters(params), continuation=True)
    return ReducedTerms(
        ek=ek.value.shift_exponents(-shift),
        nonlinear=gp_mul(v, gp_rl_deriv(v, params.q)),
        dispersive=gp_rl_deriv(v, params.r),
        continued=ek.continued,
        pole_zeros=ek.pole_zeros,
    )


def reduced_lhs(v: GeneralizedPolynomial, params: FkdvbParams) -> GeneralizedPolynomial:
    """G[v], exact on power sums."""
    return reduced_terms(v, params).total


def similarity_exponents(params: FkdvbParams) -> tuple[float, float]:
    """(p/r, p(q-r)/r): z = x1 x2^{-first}, u = x2^{second} v(z)."""
    return params.p / params.r, params.p * (params.q - params.r) / params.r


def invariant_solution(v: GeneralizedPolynomial, params: FkdvbParams) -> BivariatePowerSum:
    """u(x1, x2) = x2^{p(q-r)/r} v(x1 x2^{-p/r}) as a bivariate power sum."""
    a, b = similarity_exponents(params)
    return BivariatePowerSum(tuple(BivariateTerm(t.coeff, t.exponent, b - a * t.exponent) for t in v.terms))


@dataclass(frozen=True)
class ConsistencyReport:
    exponent: float
    deviation: float


def reduction_consistency(
    v: GeneralizedPolynomial,
    params: FkdvbParams,
    window: tuple[float, float] = DEFAULT_WINDOW,
    n: int = 9,
) -> ConsistencyReport:
    """Compare R[u_v](x1, x2) with x2^{(pq-2pr)/r} G[v](z) on probe points."""
    exponent = params.equivariance_exponent / params.r
    x1, x2 = probe_points(window, n)
    lhs = residual(invariant_solution(v, params), params).evaluate(x1, x2)
    a, _ = similarity_exponents(params)
    rhs = x2**exponent * np.asarray(gp_eval(reduced_lhs(v, params), x1 * x2 ** (-a)))
    return ConsistencyReport(exponent=exponent, deviation=relative_deviation(lhs, rhs))
