"""Generalized binomial coefficients [n k]_beta, their identities, generating functions and relatives."""

from __future__ import annotations

from .binomial import (
    IDENTITIES,
    RowSlice,
    binom_beta,
    binom_continuous,
    binom_half_exact,
    binom_via_gauss,
    half_row,
    identity_residual,
    identity_sides,
    row_via_pascal,
)
from .exact import ExactHalfValue
from .gamma_core import gamma, ln_gamma, reciprocal_gamma
from .genfunc import GenFuncPoint, phi
from .hypergeom import HypParams, ellipse_perimeter, gauss_at_one, hyp2f1
from .mittag import CaputoGrid, MLQuery, caputo_derivative, ml_envelopes, ml_square_cauchy, mittag_leffler
from .partial_sum import PartialSumPoint, finite_sum, phibar, row_sum
from .policy import (
    AccuracyError,
    DivergenceError,
    DomainError,
    QuadraturePolicy,
    SeriesOutcome,
    SeriesPolicy,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "CaputoGrid",
    "DivergenceError",
    "DomainError",
    "ExactHalfValue",
    "GenFuncPoint",
    "HypParams",
    "IDENTITIES",
    "MLQuery",
    "PartialSumPoint",
    "QuadraturePolicy",
    "RowSlice",
    "SeriesOutcome",
    "SeriesPolicy",
    "binom_beta",
    "binom_continuous",
    "binom_half_exact",
    "binom_via_gauss",
    "caputo_derivative",
    "ellipse_perimeter",
    "finite_sum",
    "gamma",
    "gauss_at_one",
    "half_row",
    "hyp2f1",
    "identity_residual",
    "identity_sides",
    "ln_gamma",
    "mittag_leffler",
    "ml_envelopes",
    "ml_square_cauchy",
    "phi",
    "phibar",
    "reciprocal_gamma",
    "row_sum",
    "row_via_pascal",
]
