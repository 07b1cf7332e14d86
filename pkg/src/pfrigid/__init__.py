"""Exact invariants of free-by-cyclic groups F_2 x| Z and their monodromies."""

__version__ = "0.1.0"

from .errors import (
    BadModulus,
    CatalogMismatch,
    InfiniteFamily,
    NotUnimodular,
    ParseError,
    PfError,
    UnknownGenerator,
    UnsupportedParameter,
)
from .gl2z import (
    ConjVerdict,
    Kind,
    LocalConjReport,
    Mat2Z,
    MatClass,
    classify,
    enumerate_classes,
    is_conjugate_mod,
    is_conjugate_z,
    local_conjugacy,
    nielsen_decompose,
    power,
)
from .mapping_torus import (
    B1OneIdentity,
    Compatibility,
    Fingerprint,
    b1_profile,
    completion_compatible,
    fingerprint,
    h1,
    identify_b1_one,
    presentation_of,
)
from .zlinalg import HomologySummary, IntMatrix, SnfResult, cokernel_invariants, smith_normal_form
