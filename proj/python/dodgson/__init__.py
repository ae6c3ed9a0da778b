"""Exact determinants by condensation, reference oracles and Hückel energy levels."""

from ._dodgson import (
    Error,
    FallbackRequired,
    NoConvergence,
    ParseError,
    condense,
    count_ratio,
    det,
    energy_levels,
    jacobi_check,
    secular_polynomial,
    symbolic_form,
)


def chain_edges(n_atoms):
    """Edges of the linear chain 0-1-...-(n_atoms-1)."""
    return [(i, i + 1) for i in range(n_atoms - 1)]


__all__ = [
    "Error",
    "FallbackRequired",
    "NoConvergence",
    "ParseError",
    "chain_edges",
    "condense",
    "count_ratio",
    "det",
    "energy_levels",
    "jacobi_check",
    "secular_polynomial",
    "symbolic_form",
]
