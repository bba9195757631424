"""Collocation solve of the reduced equation G[v] = 0 on a power basis.

With v = sum_k c_k z^{gamma_k}, the collocated residual is bilinear in c:

    G(z_i) = (L c)_i + (Phi c)_i (Q c)_i,

where L carries the EK and D^r columns, Phi the basis values and Q the D^q
columns. A weighted row pins v(z_ref) = w0 and removes the trivial solution.
"""

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from fracsym.exceptions import FracsymError, InputFormatError, ReducedSolverError
from fracsym.fkdvb.params import FkdvbParams
from fracsym.fraccore.polynomial import GeneralizedPolynomial, PowerTerm, gp_eval, gp_rl_deriv
from fracsym.reduce.lhs import reduced_lhs, reduced_terms
from fracsym.reduce.problem import ReducedProblem
from fracsym.utils.logging import setup_logger

logger = setup_logger(__name__)

NORMALIZATION_WEIGHT = 1e3
INITIAL_DAMPING = 1e-3
DAMPING_UP = 10.0
DAMPING_DOWN = 0.3
MAX_ITERATIONS = 200
STEP_TOL = 1e-12
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class CollocationSystem:
    points: np.ndarray
    linear: np.ndarray
    values: np.ndarray
    q_derivs: np.ndarray
    ref_row: np.ndarray
    w0: float
    weight: float = NORMALIZATION_WEIGHT

    def residual(self, c: np.ndarray) -> np.ndarray:
        collocated = self.linear @ c + (self.values @ c) * (self.q_derivs @ c)
        return np.append(collocated, self.weight * (self.ref_row @ c - self.w0))

    def jacobian(self, c: np.ndarray) -> np.ndarray:
        collocated = (
            self.linear
            + (self.q_derivs @ c)[:, None] * self.values
            + (self.values @ c)[:, None] * self.q_derivs
        )
        return np.vstack([collocated, self.weight * self.ref_row])

    def objective(self, c: np.ndarray) -> float:
        r = self.residual(c)
        return 0.5 * float(r @ r)


def assemble_collocation(problem: ReducedProblem) -> CollocationSystem:
    z = problem.collocation_points
    linear, values, q_derivs = [], [], []
    for mu in problem.exponents:
        phi = GeneralizedPolynomial.monomial(mu, 1.0, "z")
        terms = reduced_terms(phi, problem.params)
        if terms.pole_zeros:
            logger.debug("EK factor vanishes at a pole for basis exponent %.6g", mu)
        linear.append(np.asarray(gp_eval(terms.ek + terms.dispersive, z), dtype=float))
        values.append(z**mu)
        q_derivs.append(np.asarray(gp_eval(gp_rl_deriv(phi, problem.params.q), z), dtype=float))
    return CollocationSystem(
        points=z,
        linear=np.column_stack(linear),
        values=np.column_stack(values),
        q_derivs=np.column_stack(q_derivs),
        ref_row=np.array([problem.z_ref**mu for mu in problem.exponents]),
        w0=problem.w0,
    )


def _equilibrated_condition(jac: np.ndarray) -> float:
    norms = np.linalg.norm(jac, axis=0)
    if np.any(norms == 0):
        return math.inf
    return float(np.linalg.cond(jac / norms))


@dataclass(frozen=True)
class ReducedSolutionCandidate:
    problem: ReducedProblem
    coefficients: tuple[float, ...]
    residual_norm: float
    iterations: int
    converged: bool
    objective_history: tuple[float, ...] = field(default=())
    condition_number: float = 0.0

    @property
    def params(self) -> FkdvbParams:
        return self.problem.params

    @property
    def exponents(self) -> tuple[float, ...]:
        return self.problem.exponents

    @property
    def solution(self) -> GeneralizedPolynomial:
        """v(z) as a power sum in z."""
        return GeneralizedPolynomial(
            tuple(PowerTerm(c, mu) for c, mu in zip(self.coefficients, self.exponents)), "z"
        )

    def to_record(self) -> dict[str, Any]:
        pb = self.problem
        return {
            "params": {"p": pb.params.p, "q": pb.params.q, "r": pb.params.r},
            "domain": [pb.z_min, pb.z_max],
            "basis": {"gamma0": pb.gamma0, "delta": pb.delta, "size": pb.size},
            "exponents": list(self.exponents),
            "normalization": {"z_ref": pb.z_ref, "w0": pb.w0},
            "collocation": pb.collocation,
            "tolerance": pb.tolerance,
            "coefficients": list(self.coefficients),
            "residual_norm": self.residual_norm,
            "iterations": self.iterations,
            "converged": self.converged,
            "objective_history": list(self.objective_history),
            "condition_number": self.condition_number,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "ReducedSolutionCandidate":
        """Inverse of to_record. Missing or mistyped fields raise InputFormatError."""
        try:
            params = FkdvbParams(**record["params"])
            problem = ReducedProblem(
                params=params,
                z_min=float(record["domain"][0]),
                z_max=float(record["domain"][1]),
                gamma0=float(record["basis"]["gamma0"]),
                delta=float(record["basis"]["delta"]),
                size=int(record["basis"]["size"]),
                z_ref=float(record["normalization"]["z_ref"]),
                w0=float(record["normalization"]["w0"]),
                collocation=int(record["collocation"]),
                tolerance=float(record["tolerance"]),
            )
            coefficients = tuple(float(c) for c in record["coefficients"])
            candidate = cls(
                problem=problem,
                coefficients=coefficients,
                residual_norm=float(record["residual_norm"]),
                iterations=int(record["iterations"]),
                converged=bool(record["converged"]),
                objective_history=tuple(float(x) for x in record.get("objective_history", ())),
                condition_number=float(record.get("condition_number", 0.0)),
            )
        except FracsymError:
            raise
        except KeyError as e:
            raise InputFormatError(f"candidate record misses field {e}") from e
        except (IndexError, TypeError, ValueError, AttributeError) as e:
            raise InputFormatError(f"malformed candidate record: {e}") from e
        if len(coefficients) != problem.size:
            raise InputFormatError(
                f"candidate record holds {len(coefficients)} coefficients for a basis of size {problem.size}"
            )
        return candidate


def _damped_step(jac: np.ndarray, res: np.ndarray, damping: float) -> np.ndarray:
    """Marquardt step from (J^T J + damping diag(J^T J)) s = -J^T r, solved in unit-column scaling."""
    scale = np.linalg.norm(jac, axis=0)
    if np.any(scale == 0):
        raise np.linalg.LinAlgError("Jacobian has a zero column")
    scaled = jac / scale
    normal = scaled.T @ scaled + damping * np.eye(jac.shape[1])
    return np.linalg.solve(normal, -(scaled.T @ res)) / scale


def _collocated_residual(problem: ReducedProblem, c: np.ndarray) -> float:
    v = GeneralizedPolynomial(tuple(PowerTerm(ck, mu) for ck, mu in zip(c, problem.exponents)), "z")
    g = np.asarray(gp_eval(reduced_lhs(v, problem.params), problem.collocation_points), dtype=float)
    return float(np.max(np.abs(g)))


def solve_reduced(problem: ReducedProblem, max_iterations: int = MAX_ITERATIONS) -> ReducedSolutionCandidate:
    """Levenberg-Marquardt on the collocated residual plus the normalization row.

    Convergence means max_i |G(z_i)| <= problem.tolerance. A rank-deficient
    starting Jacobian raises ReducedSolverError.
    """
    if problem.w0 == 0.0:
        logger.info("w0 = 0: the zero function solves the reduced equation")
        return ReducedSolutionCandidate(
            problem=problem,
            coefficients=(0.0,) * problem.size,
            residual_norm=0.0,
            iterations=0,
            converged=True,
            objective_history=(0.0,),
        )

    system = assemble_collocation(problem)
    # start from the leading term alone: v = w0 (z / z_ref)^gamma0
    c = np.zeros(problem.size)
    c[0] = problem.w0 / system.ref_row[0]

    condition = _equilibrated_condition(system.jacobian(c))
    if not condition <= CONDITION_LIMIT:
        raise ReducedSolverError(
            f"starting Jacobian is rank deficient for basis {problem.exponents}", condition
        )
    logger.debug("Starting Jacobian condition number %.3e", condition)

    damping = INITIAL_DAMPING
    objective = system.objective(c)
    history = [objective]
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        try:
            step = _damped_step(system.jacobian(c), system.residual(c), damping)
        except np.linalg.LinAlgError as e:
            raise ReducedSolverError(f"damped normal equations are singular: {e}", condition) from e
        trial = c + step
        trial_objective = system.objective(trial)
        if trial_objective < objective:
            c, objective = trial, trial_objective
            history.append(objective)
            damping *= DAMPING_DOWN
        else:
            damping *= DAMPING_UP
        if np.linalg.norm(step) <= STEP_TOL or objective == 0.0:
            break

    residual_norm = _collocated_residual(problem, c)
    converged = residual_norm <= problem.tolerance
    log = logger.info if converged else logger.warning
    log(
        "Reduced solve: %d iterations, max|G| = %.3e (tolerance %.1e)",
        iterations,
        residual_norm,
        problem.tolerance,
    )
    return ReducedSolutionCandidate(
        problem=problem,
        coefficients=tuple(float(x) for x in c),
        residual_norm=residual_norm,
        iterations=iterations,
        converged=converged,
        objective_history=tuple(history),
        condition_number=condition,
    )
