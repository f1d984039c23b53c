"""Exact-arithmetic engine for standard graded Artinian algebras and
Lefschetz-property certification."""

from .algebra import (
    GradedAlgebra,
    HomogeneousElement,
    MonicPoly,
    check_symmetric_unimodal,
    monomial_complete_intersection,
    trivial_algebra,
)
from .certify import (
    LefschetzReport,
    MaximalRankReport,
    RankProfile,
    Verdict,
    certify_element,
    is_lefschetz,
    is_strong_lefschetz,
    maximal_rank_property,
    rank_profile,
    search_strong,
    search_weak,
)
from .fields import GF, QQ, Field, FieldMismatchError, binomial, is_prime
from .linalg import Matrix, anti_triangularize, cauchy_determinant

__all__ = [
    "GF",
    "QQ",
    "Field",
    "FieldMismatchError",
    "GradedAlgebra",
    "HomogeneousElement",
    "LefschetzReport",
    "Matrix",
    "MaximalRankReport",
    "MonicPoly",
    "RankProfile",
    "Verdict",
    "anti_triangularize",
    "binomial",
    "cauchy_determinant",
    "certify_element",
    "check_symmetric_unimodal",
    "is_lefschetz",
    "is_prime",
    "is_strong_lefschetz",
    "maximal_rank_property",
    "monomial_complete_intersection",
    "rank_profile",
    "search_strong",
    "search_weak",
    "trivial_algebra",
]

__version__ = "0.1.0"
