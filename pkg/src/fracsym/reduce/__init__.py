from fracsym.reduce.lhs import (
    ConsistencyReport,
    ReducedTerms,
    ek_parameters,
    invariant_solution,
    reduced_lhs,
    reduced_terms,
    reduction_consistency,
    similarity_exponents,
)
from fracsym.reduce.problem import ReducedProblem, admissible_strip, default_basis
from fracsym.reduce.reconstruct import (
    VerificationReport,
    reconstruct,
    reconstruct_exact,
    sample_on_grid,
    verify_2d,
)
from fracsym.reduce.solver import (
    CollocationSystem,
    ReducedSolutionCandidate,
    assemble_collocation,
    solve_reduced,
)

__all__ = [
    "CollocationSystem",
    "ConsistencyReport",
    "ReducedProblem",
    "ReducedSolutionCandidate",
    "ReducedTerms",
    "VerificationReport",
    "admissible_strip",
    "assemble_collocation",
    "default_basis",
    "ek_parameters",
    "invariant_solution",
    "reconstruct",
    "reconstruct_exact",
    "reduced_lhs",
    "reduced_terms",
    "reduction_consistency",
    "sample_on_grid",
    "similarity_exponents",
    "solve_reduced",
    "verify_2d",
]
