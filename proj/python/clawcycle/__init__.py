"""Claw and induced-cycle witnesses in hypercube vertex subsets."""

from ._core import (
    ClawcycleError,
    InsufficientCardinality,
    TheoremViolation,
    VertexSet,
    Claw,
    InducedCycle,
    ExtractionStep,
    ExtractionTrace,
    VerificationReport,
    ExtremalResult,
    adjacent,
    neighbors,
    split,
    embed,
    canonical_form,
    induced_degree,
    find_claw,
    find_induced_cycle,
    find_theorem_witness,
    check_witness,
    format_witness,
    find_witness_inductive,
    base_case_solve,
    base_case_solve_structured,
    parse_set,
    verify_theorem_exhaustive,
    verify_proposition_exhaustive,
    verify_case_claims,
    extremal_search,
    random_agreement_test,
)

__version__ = "0.1.0"
