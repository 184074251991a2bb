"""Numerical semigroups from concatenated arithmetic sequences."""

from ._core import (
    Error,
    Semigroup,
    apery,
    betti_elements,
    bresinsky_generators,
    eto_colength,
    factorizations,
    frobenius,
    gamma_s_generators,
    gamma_t_generators,
    gaps,
    genus,
    is_symmetric,
    minimal_generators,
    minimal_presentation_cardinality,
    run_cli,
    scan,
    unbounded_generators,
    verify_ed4_ideal,
    verify_family,
    verify_reduction_identities,
)

__all__ = [
    "Error",
    "Semigroup",
    "apery",
    "betti_elements",
    "bresinsky_generators",
    "eto_colength",
    "factorizations",
    "frobenius",
    "gamma_s_generators",
    "gamma_t_generators",
    "gaps",
    "genus",
    "is_symmetric",
    "minimal_generators",
    "minimal_presentation_cardinality",
    "run_cli",
    "scan",
    "unbounded_generators",
    "verify_ed4_ideal",
    "verify_family",
    "verify_reduction_identities",
]
