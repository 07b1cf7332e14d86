"""Finitely presented groups and their finite quotients."""

from .finite import (
    DEFAULT_MAX_ORDER,
    FiniteGroupTable,
    build_catalog_group,
    catalog_group,
    catalog_ids,
    catalog_order,
    catalog_version,
    default_catalog,
)
from .presentation import Presentation, abelianization, free_reduce, invert, parse_presentation
from .quotients import (
    EpiCount,
    FingerprintDiff,
    QuotientFingerprint,
    compare_fingerprints,
    epimorphism_count,
    find_epimorphism,
    has_epimorphism,
    quotient_fingerprint,
    verify_homomorphism,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "EpiCount",
    "FiniteGroupTable",
    "FingerprintDiff",
    "Presentation",
    "QuotientFingerprint",
    "abelianization",
    "build_catalog_group",
    "catalog_group",
    "catalog_ids",
    "catalog_order",
    "catalog_version",
    "compare_fingerprints",
    "default_catalog",
    "epimorphism_count",
    "find_epimorphism",
    "free_reduce",
    "has_epimorphism",
    "invert",
    "parse_presentation",
    "quotient_fingerprint",
    "verify_homomorphism",
]
