"""Back from v(z) to u(x1, x2), and numerical verification of R[u] on a grid."""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from fracsym.exceptions import DomainError
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fkdvb.residual import residual
from fracsym.fraccore.bivariate import BivariatePowerSum
from fracsym.fraccore.compare import DEFAULT_WINDOW
from fracsym.fraccore.grid import GridFunction2D, UniformGrid1D, mesh
from fracsym.fraccore.polynomial import GeneralizedPolynomial
from fracsym.frlnum.norms import evaluation_mask
from fracsym.frlnum.schemes import SchemeKind
from fracsym.reduce.lhs import invariant_solution
from fracsym.reduce.solver import ReducedSolutionCandidate
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)

Sampler = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _power_sum_sampler(u: BivariatePowerSum) -> Sampler:
    def sampler(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
        total = np.zeros(np.broadcast(x1, x2).shape)
        with np.errstate(divide="ignore", invalid="ignore"):
            for term in u.terms:
                total = total + term.coeff * np.power(x1, term.mu1) * np.power(x2, term.mu2)
        return total

    return sampler


def sample_on_grid(func: Sampler | BivariatePowerSum, grid1: UniformGrid1D, grid2: UniformGrid1D) -> GridFunction2D:
    """Sample func on the grid; non-finite values (singular terminal lines) become 0 and are flagged."""
    sampler = _power_sum_sampler(func) if isinstance(func, BivariatePowerSum) else func
    x1, x2 = mesh(grid1, grid2)
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.array(np.broadcast_to(sampler(x1, x2), x1.shape), dtype=float)
    singular = ~np.isfinite(values)
    if singular.any():
        logger.warning("Replaced %d singular samples on the terminal lines by 0", int(singular.sum()))
        values[singular] = 0.0
    return GridFunction2D(grid1, grid2, values, singular)


def _solution_of(candidate: ReducedSolutionCandidate | GeneralizedPolynomial) -> GeneralizedPolynomial:
    if isinstance(candidate, ReducedSolutionCandidate):
        if not candidate.converged:
            logger.warning(
                "Reconstructing from a non-converged candidate (max|G| = %.3e)", candidate.residual_norm
            )
        return candidate.solution
    if isinstance(candidate, GeneralizedPolynomial):
        return candidate
    raise DomainError(f"expected a solution candidate or a power sum in z, got {type(candidate).__name__}")


def reconstruct_exact(
    candidate: ReducedSolutionCandidate | GeneralizedPolynomial, params: FkdvbParams | None = None
) -> BivariatePowerSum:
    """u(x1, x2) = x2^{p(q-r)/r} v(x1 x2^{-p/r}) as a power sum."""
    if params is None:
        if not isinstance(candidate, ReducedSolutionCandidate):
            raise DomainError("params are required when reconstructing from a bare power sum")
        params = candidate.params
    return invariant_solution(_solution_of(candidate), params)


def reconstruct(
    candidate: ReducedSolutionCandidate | GeneralizedPolynomial,
    params: FkdvbParams | None,
    grid1: UniformGrid1D,
    grid2: UniformGrid1D,
) -> GridFunction2D:
    """Reconstructed u sampled on grid1 x grid2.

    For r > q the x2 exponents can be negative; the line x2 = 0 is then
    singular and its samples are set to 0 (flagged).
    """
    return sample_on_grid(reconstruct_exact(candidate, params), grid1, grid2)


@dataclass(frozen=True)
class VerificationReport:
    linf: float
    l2: float
    refined_linf: float | None = None
    refined_l2: float | None = None
    error_vs_exact: float | None = None
    refined_error_vs_exact: float | None = None

    @property
    def refinement_ratio(self) -> float | None:
        if self.refined_linf is None or self.refined_linf == 0:
            return None
        return self.linf / self.refined_linf

    @property
    def exact_ratio(self) -> float | None:
        if self.refined_error_vs_exact is None or self.refined_error_vs_exact == 0:
            return None
        return self.error_vs_exact / self.refined_error_vs_exact


def _exact_values(exact, x1: np.ndarray, x2: np.ndarray, params: FkdvbParams) -> np.ndarray:
    if isinstance(exact, BivariatePowerSum):
        return np.asarray(residual(exact, params).evaluate(x1, x2), dtype=float)
    return np.asarray(exact(x1, x2), dtype=float)


def _norms(
    u: GridFunction2D,
    params: FkdvbParams,
    window: tuple[float, float],
    exact,
    scheme: SchemeKind,
    n_workers: int | None,
) -> tuple[float, float, float | None]:
    res = residual(u, params, scheme, n_workers)
    mask = evaluation_mask(res, window)
    if not mask.any():
        raise DomainError(f"no full-accuracy nodes inside window {window}")
    values = np.asarray(res.samples)[mask]
    linf = float(np.max(np.abs(values)))
    l2 = float(np.sqrt(np.sum(values**2) * u.grid1.step * u.grid2.step))
    if exact is None:
        return linf, l2, None
    x1, x2 = u.mesh()
    error = np.abs(values - _exact_values(exact, x1[mask], x2[mask], params))
    return linf, l2, float(np.max(error))


def verify_2d(
    u: GridFunction2D | Sampler | BivariatePowerSum,
    params: FkdvbParams,
    grid1: UniformGrid1D | None = None,
    grid2: UniformGrid1D | None = None,
    window: tuple[float, float] = DEFAULT_WINDOW,
    exact: BivariatePowerSum | Sampler | None = None,
    scheme: SchemeKind = SchemeKind.PRODUCT_TRAPEZOID,
    n_workers: int | None = None,
) -> VerificationReport:
    """Numerical R[u] on the window, excluding flagged nodes.

    A sampler (or a power sum) is also evaluated on the grids with halved
    steps. `exact` is either the exact u, whose residual is taken in closed
    form, or a callable returning the exact residual.
    """
    if isinstance(u, GridFunction2D):
        linf, l2, err = _norms(u, params, window, exact, scheme, n_workers)
        return VerificationReport(linf=linf, l2=l2, error_vs_exact=err)
    if grid1 is None or grid2 is None:
        raise DomainError("grids are required to sample u")
    coarse = sample_on_grid(u, grid1, grid2)
    fine = sample_on_grid(u, grid1.refined(), grid2.refined())
    linf, l2, err = _norms(coarse, params, window, exact, scheme, n_workers)
    refined_linf, refined_l2, refined_err = _norms(fine, params, window, exact, scheme, n_workers)
    report = VerificationReport(
        linf=linf,
        l2=l2,
        refined_linf=refined_linf,
        refined_l2=refined_l2,
        error_vs_exact=err,
        refined_error_vs_exact=refined_err,
    )
    logger.info("Residual on the window: max %.3e (h), %.3e (h/2)", linf, refined_linf)
    return report
