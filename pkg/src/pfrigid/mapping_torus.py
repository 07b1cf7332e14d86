"""Invariants of the free-by-cyclic groups G_phi = F_2 x|_phi Z.

phi acts on H_1(F_2) = Z^2 with columns as images: phi_*(a) abelianizes to
a^{a11} b^{a21} and phi_*(b) to a^{a12} b^{a22}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .fpgroups.presentation import Presentation, free_reduce, invert
from .gl2z import I2, Kind, MatClass, Mat2Z, classify, nielsen_decompose, require_unimodular
from .zlinalg import HomologySummary, cokernel_invariants

DEFAULT_DEPTH = 12


def h1(phi: Mat2Z) -> HomologySummary:
    """H_1(G_phi) = Z + Z^2 / (phi - I)Z^2."""
    require_unimodular(phi)
    coker = cokernel_invariants((phi - I2).to_intmatrix())
    return HomologySummary(1 + coker.b1, coker.torsion)


def b1_profile(phi: Mat2Z, depth: int = DEFAULT_DEPTH) -> tuple[int, ...]:
    """b_1 of G_{phi^r} for r = 1..depth."""
    if depth < 1:
        raise ValueError(f"profile depth must be positive, got {depth}")
    require_unimodular(phi)
    out = []
    p = phi
    for _ in range(depth):
        out.append(h1(p).b1)
        p = p @ phi
    return tuple(out)


@dataclass(frozen=True)
class Fingerprint:
    det: int
    trace: int
    h1: HomologySummary
    mat_class: MatClass
    b1_profile: tuple[int, ...]


def fingerprint(phi: Mat2Z, depth: int = DEFAULT_DEPTH) -> Fingerprint:
    if depth < DEFAULT_DEPTH:
        raise ValueError(f"fingerprint needs profile depth >= {DEFAULT_DEPTH}, got {depth}")
    require_unimodular(phi)
    return Fingerprint(phi.det, phi.trace, h1(phi), classify(phi), b1_profile(phi, depth))


@dataclass(frozen=True)
class Compatibility:
    """Outcome of comparing two monodromies by necessary conditions.

    ``reasons`` lists the failed conditions; when it is empty the groups are
    merely not separated by these invariants, which is not a proof that the
    profinite completions agree.
    """

    reasons: tuple[str, ...] = ()

    @property
    def compatible(self) -> bool:
        return not self.reasons

    def __str__(self):
        return "compatible" if self.compatible else "distinguished: " + ", ".join(self.reasons)


def completion_compatible(phi: Mat2Z, psi: Mat2Z, depth: int = DEFAULT_DEPTH) -> Compatibility:
    f, g = fingerprint(phi, depth), fingerprint(psi, depth)
    reasons = []
    if f.h1 != g.h1:
        reasons.append("h1")
    if f.mat_class.kind != g.mat_class.kind:
        reasons.append("kind")
    # the remaining conditions need b1 = 1 on one side
    if 1 in (f.h1.b1, g.h1.b1):
        if f.det != g.det:
            reasons.append("det")
        if f.b1_profile != g.b1_profile:
            reasons.append("b1_profile")
    # G_psi = G_{psi^-1} and tr(psi^-1) = det(psi) tr(psi), so the trace is
    # only pinned down up to sign when a determinant is -1
    if Kind.HYPERBOLIC in (f.mat_class.kind, g.mat_class.kind):
        same = abs(f.trace) == abs(g.trace) if -1 in (f.det, g.det) else f.trace == g.trace
        if not same:
            reasons.append("trace")
    return Compatibility(tuple(reasons))


class B1OneIdentity(str, enum.Enum):
    FIGURE_EIGHT = "figure-eight"
    TREFOIL = "trefoil"
    GIESEKING = "gieseking"
    NOT_B1_ONE = "not-b1-one"


_B1_ONE = {
    (3, 1): B1OneIdentity.FIGURE_EIGHT,
    (1, 1): B1OneIdentity.TREFOIL,
    (1, -1): B1OneIdentity.GIESEKING,
}


def identify_b1_one(phi: Mat2Z) -> B1OneIdentity:
    """Name the monodromy class when H_1(G_phi) is exactly Z.

    Matching is on (trace, det) of phi itself. The inverse of the Gieseking
    monodromy, with (trace, det) = (-1, -1), also has H_1 = Z and the same
    group, but is reported as NOT_B1_ONE; pass ``phi.inverse()`` to catch it.
    """
    if h1(phi) != HomologySummary(1):
        return B1OneIdentity.NOT_B1_ONE
    return _B1_ONE.get((phi.trace, phi.det), B1OneIdentity.NOT_B1_ONE)


# -- presentations ------------------------------------------------------------

A, B, T = 1, 2, 3
# Automorphisms of F(a, b) lifting the Nielsen matrices.
_LIFTS = {
    "R": {A: (A,), B: (B, A)},
    "L": {A: (A, B), B: (B,)},
    "S": {A: (B,), B: (A,)},
    "E": {A: (A,), B: (-B,)},
}


def _apply(aut, word):
    out = []
    for x in word:
        out.extend(aut[x] if x > 0 else invert(aut[-x]))
    return free_reduce(out)


def automorphism_images(phi: Mat2Z) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Words phi_*(a), phi_*(b) of an automorphism of F(a, b) lifting phi."""
    word = nielsen_decompose(phi)
    images = []
    for gen in (A, B):
        w = (gen,)
        for letter in reversed(word):
            w = _apply(_LIFTS[letter], w)
        images.append(w)
    return images[0], images[1]


def presentation_of(phi: Mat2Z) -> Presentation:
    """<a, b, t | t a T = phi_*(a), t b T = phi_*(b)>."""
    pa, pb = automorphism_images(phi)
    return Presentation(("a", "b", "t"), (((T, A, -T), pa), ((T, B, -T), pb)))
