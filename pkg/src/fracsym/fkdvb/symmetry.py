"""Scaling symmetry of the fKdV-Burgers equation: generator, group action, invariants."""

import math
from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError
from fracsym.fkdvb.params import Branch, FkdvbParams
from fracsym.fkdvb.residual import residual
from fracsym.fraccore.bivariate import BivariatePowerSum
from fracsym.fraccore.compare import DEFAULT_WINDOW, probe_points, relative_deviation
from fracsym.fraccore.grid import GridFunction2D
from fracsym.prolong.determining import on_shell_coefficients
from fracsym.prolong.fields import ScalingField
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ScalingGenerator:
    """v = alpha x1 d/dx1 + beta x2 d/dx2 + gamma u d/du."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if (self.alpha, self.beta, self.gamma) == (0.0, 0.0, 0.0):
            raise DomainError("the zero field does not generate a group")

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    def as_field(self) -> ScalingField:
        return ScalingField(self.alpha, self.beta, self.gamma)

    def flow(self, lam: float, x1, x2, u=None):
        """Image of (x1, x2[, u]) under the group element lam = exp(eps)."""
        moved = (lam**self.alpha * np.asarray(x1), lam**self.beta * np.asarray(x2))
        return moved if u is None else (*moved, lam**self.gamma * np.asarray(u))


def solve_scaling(params: FkdvbParams) -> ScalingGenerator:
    """Null vector of the on-shell determining system, normalized to alpha = p.

    Column j of the system is the on-shell coefficient pair of the j-th unit
    scaling field, so the rows read (-q, p, 1) and (-r, p, 0).
    """
    units = (ScalingField(1.0, 0.0, 0.0), ScalingField(0.0, 1.0, 0.0), ScalingField(0.0, 0.0, 1.0))
    system = np.array([on_shell_coefficients(field, params) for field in units]).T
    null = np.cross(system[0], system[1])
    if null[0] == 0.0:
        raise DomainError(f"degenerate orders {params.orders}: no generator with alpha = p")
    null = null * (params.p / null[0])
    generator = ScalingGenerator(*(float(c) for c in null))
    if params.branch is Branch.EQUAL:
        generator = ScalingGenerator(generator.alpha, generator.beta, 0.0)
    logger.info("Scaling generator for %s: %s", params.orders, generator.triple)
    return generator


def group_action(
    u: BivariatePowerSum | GridFunction2D, lam: float, gen: ScalingGenerator
) -> BivariatePowerSum | GridFunction2D:
    """u_lam(x1, x2) = lam^gamma u(lam^-alpha x1, lam^-beta x2).

    A grid function is carried to the image grid: same samples times
    lam^gamma on nodes scaled by lam^alpha and lam^beta.
    """
    if not lam > 0:
        raise DomainError(f"group parameter must be positive, got {lam}")
    if isinstance(u, BivariatePowerSum):
        return u.scale_arguments(lam ** (-gen.alpha), lam ** (-gen.beta)) * lam**gen.gamma
    if isinstance(u, GridFunction2D):
        return GridFunction2D(
            u.grid1.scaled(lam**gen.alpha),
            u.grid2.scaled(lam**gen.beta),
            np.asarray(u.samples) * lam**gen.gamma,
            u.reduced_accuracy,
        )
    raise DomainError(f"u must be a bivariate power sum or a 2D grid function, got {type(u).__name__}")


@dataclass(frozen=True)
class EquivarianceReport:
    exponent: float
    deviation: float


def equivariance_check(
    u: BivariatePowerSum,
    params: FkdvbParams,
    lam: float,
    window: tuple[float, float] = DEFAULT_WINDOW,
    n: int = 9,
) -> EquivarianceReport:
    """Compare R[u_lam](x) with lam^s R[u](lam^-p x1, lam^-r x2), s = pq - 2pr."""
    gen = solve_scaling(params)
    s = params.equivariance_exponent
    x1, x2 = probe_points(window, n)
    lhs = residual(group_action(u, lam, gen), params).evaluate(x1, x2)
    rhs = lam**s * np.asarray(residual(u, params).evaluate(lam ** (-gen.alpha) * x1, lam ** (-gen.beta) * x2))
    return EquivarianceReport(exponent=s, deviation=relative_deviation(lhs, rhs))


def residual_flow_derivative(
    u: BivariatePowerSum,
    params: FkdvbParams,
    eps: float = 1e-4,
    points: tuple[np.ndarray, np.ndarray] | None = None,
) -> np.ndarray:
    """d/d eps of R[u_lam](g_lam x) at eps = 0, lam = exp(eps), by one Richardson-extrapolated central difference."""
    gen = solve_scaling(params)
    x1, x2 = probe_points() if points is None else points

    def moved_residual(step: float) -> np.ndarray:
        lam = math.exp(step)
        image = gen.flow(lam, x1, x2)
        return np.asarray(residual(group_action(u, lam, gen), params).evaluate(*image))

    def central(step: float) -> np.ndarray:
        return (moved_residual(step) - moved_residual(-step)) / (2.0 * step)

    return (4.0 * central(eps / 2.0) - central(eps)) / 3.0


@dataclass(frozen=True)
class Invariants:
    """z = x1 x2^z_exponent and w = u x2^w_exponent, constant along the group orbits."""

    z_exponent: float
    w_exponent: float

    def z(self, x1, x2):
        return np.asarray(x1) * np.asarray(x2) ** self.z_exponent

    def w(self, x1, x2, u):
        return np.asarray(u) * np.asarray(x2) ** self.w_exponent

    def describe(self) -> dict[str, str]:
        return {
            "z": f"x1*x2^({self.z_exponent:.12g})",
            "w": "u" if self.w_exponent == 0 else f"u*x2^({self.w_exponent:.12g})",
        }


def invariants(params: FkdvbParams) -> Invariants:
    gen = solve_scaling(params)
    return Invariants(z_exponent=-gen.alpha / gen.beta, w_exponent=-gen.gamma / gen.beta)


def flow_invariance_defect(
    params: FkdvbParams, lam: float, points: tuple[np.ndarray, np.ndarray] | None = None
) -> float:
    """max change of z and w along the flow, starting from u = 1 at each point."""
    gen = solve_scaling(params)
    inv = invariants(params)
    x1, x2 = probe_points() if points is None else points
    u = np.ones_like(x1)
    y1, y2, v = gen.flow(lam, x1, x2, u)
    return float(
        max(
            np.max(np.abs(inv.z(y1, y2) - inv.z(x1, x2))),
            np.max(np.abs(inv.w(y1, y2, v) - inv.w(x1, x2, u))),
        )
    )
