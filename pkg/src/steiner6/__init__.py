"""Exact admissibility checks for block-transitive Steiner 6-designs."""

from .cases import main_theorem_mismatches, run_full_suite
from .certificates import DiophantineSolution, EliminationCertificate
from .checker import check_certificate
from .design import DesignParams, block_count, check_bounds, divisibility_check, k_candidates_t6, lambda_s
from .groups import GroupSpec, catalog_for_degree, order_of
from .residual import SearchBounds, search_residual
from .solver import PslCaseInput, solve_psl_equation

__all__ = [
    "DesignParams", "DiophantineSolution", "EliminationCertificate", "GroupSpec", "PslCaseInput",
    "SearchBounds", "block_count", "catalog_for_degree", "check_bounds", "check_certificate",
    "divisibility_check", "k_candidates_t6", "lambda_s", "main_theorem_mismatches", "order_of",
    "run_full_suite", "search_residual", "solve_psl_equation",
]
