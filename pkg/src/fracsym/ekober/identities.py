"""Exact-path checks of the two relations behind the EK reduction.

Both functions evaluate each side through independent rules and return the
global relative deviation on a probe set away from the axes.
"""

import numpy as np

from fracsym.ekober.exact import ek_diff_gp
from fracsym.ekober.params import EKParams
from fracsym.exceptions import DomainError
from fracsym.fraccore.bivariate import BivariatePowerSum, BivariateTerm
from fracsym.fraccore.compare import DEFAULT_WINDOW, probe_points, relative_deviation
from fracsym.fraccore.polynomial import GeneralizedPolynomial, gp_eval, gp_rl_deriv
from fracsym.fraccore.rules import check_order


def compose_similarity(v: GeneralizedPolynomial, alpha: float) -> BivariatePowerSum:
    """(x1, x2) -> v(x1 * x2**(-alpha)) as a bivariate power sum."""
    return BivariatePowerSum(tuple(BivariateTerm(t.coeff, t.exponent, -alpha * t.exponent) for t in v.terms))


def ek_reduction_identity_check(
    v: GeneralizedPolynomial,
    p: float,
    alpha: float,
    window: tuple[float, float] = DEFAULT_WINDOW,
    n: int = 9,
) -> float:
    """Deviation between D^p_{x2} v(x1 x2^-alpha) and x2^-p (D^{1-p,p}_{1/alpha} v)(x1 x2^-alpha)."""
    p = check_order(p, strictly_positive=True)
    if not alpha > 0:
        raise DomainError(f"similarity exponent alpha must be positive, got {alpha}")
    x1, x2 = probe_points(window, n)
    lhs = compose_similarity(v, alpha).rl_deriv(2, p).evaluate(x1, x2)
    ek = ek_diff_gp(v, EKParams(1.0 - p, p, 1.0 / alpha)).value
    rhs = x2 ** (-p) * np.asarray(gp_eval(ek, x1 * x2 ** (-alpha)))
    return relative_deviation(lhs, rhs)


def scale_relation_check(
    f: GeneralizedPolynomial, p: float, lam: float, points: np.ndarray | None = None
) -> float:
    """Deviation between D^p_x [f(lam x)] and lam^p (D^p f)(lam x)."""
    if not lam > 0:
        raise DomainError(f"scale factor must be positive, got {lam}")
    t = np.linspace(*DEFAULT_WINDOW, 17) if points is None else np.asarray(points, dtype=float)
    if np.any(t <= 0):
        raise DomainError("scaling relation is checked at positive points only")
    lhs = gp_eval(gp_rl_deriv(f.scale_argument(lam), p), t)
    rhs = lam**p * np.asarray(gp_eval(gp_rl_deriv(f, p), lam * t))
    return relative_deviation(lhs, rhs)
