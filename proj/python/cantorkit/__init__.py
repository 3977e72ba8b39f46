"""Exact arithmetic on generalized Cantor sets.

Rational inputs accept ``int``, ``fractions.Fraction`` or ``"a/b"`` strings;
exact results come back as ``Fraction``.
"""

from ._cantor import (
    CantorSpec,
    CapacityError,
    DomainError,
    block_norm,
    containing_interval,
    deleted_length,
    endpoint_identity,
    gap_intervals,
    hausdorff_dimension,
    hausdorff_estimate,
    infinitesimal_from,
    lebesgue_measure,
    level_intervals,
    log_limit_diagnostics,
    membership,
    multiplicative_neighbours,
    na_distance,
    phi,
    phi_quotients,
    phi_staircase,
    quantize_valuation,
    scaling_identity,
    self_similarity_check,
    seminorm_check,
    valuation,
    valued_measure,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
