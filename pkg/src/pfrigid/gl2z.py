"""Conjugacy theory of GL(2, Z).

Matrices are written ``Mat2Z(a11, a12, a21, a22)``.  The text form used by
the command line and fixtures is ``"a11,a12;a21,a22"``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Optional

from .errors import BadModulus, InfiniteFamily, NotUnimodular, ParseError
from .forms import Form, reduced_forms, represent_unit
from .zlinalg import IntMatrix, integer_kernel, smith_normal_form


@dataclass(frozen=True, order=True)
class Mat2Z:
    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def identity(cls) -> Mat2Z:
        return cls(1, 0, 0, 1)

    @classmethod
    def parse(cls, text: str) -> Mat2Z:
        m = _MAT_RE.fullmatch(text)
        if m is None:
            raise ParseError(f"bad matrix {text!r}, expected 'a11,a12;a21,a22'")
        return cls(*(int(g) for g in m.groups()))

    def __str__(self):
        return f"{self.a11},{self.a12};{self.a21},{self.a22}"

    def tuple(self) -> tuple[int, int, int, int]:
        return (self.a11, self.a12, self.a21, self.a22)

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def trace(self) -> int:
        return self.a11 + self.a22

    @property
    def height(self) -> int:
        return max(abs(x) for x in self.tuple())

    def is_scalar(self) -> bool:
        return self.a12 == 0 and self.a21 == 0 and self.a11 == self.a22

    def __matmul__(self, o: Mat2Z) -> Mat2Z:
        return Mat2Z(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )

    def __add__(self, o: Mat2Z) -> Mat2Z:
        return Mat2Z(*(x + y for x, y in zip(self.tuple(), o.tuple())))

    def __sub__(self, o: Mat2Z) -> Mat2Z:
        return Mat2Z(*(x - y for x, y in zip(self.tuple(), o.tuple())))

    def scale(self, k: int) -> Mat2Z:
        return Mat2Z(*(k * x for x in self.tuple()))

    def mod(self, m: int) -> Mat2Z:
        return Mat2Z(*(x % m for x in self.tuple()))

    def inverse(self) -> Mat2Z:
        d = require_unimodular(self)
        return Mat2Z(d * self.a22, -d * self.a12, -d * self.a21, d * self.a11)

    def to_intmatrix(self) -> IntMatrix:
        return IntMatrix(2, 2, self.tuple())


_INT = r"\s*([+-]?\d+)\s*"
_MAT_RE = re.compile(f"{_INT},{_INT};{_INT},{_INT}")

I2 = Mat2Z(1, 0, 0, 1)
R = Mat2Z(1, 1, 0, 1)
L = Mat2Z(1, 0, 1, 1)
S = Mat2Z(0, 1, 1, 0)
E = Mat2Z(1, 0, 0, -1)
NIELSEN = {"R": R, "L": L, "S": S, "E": E}


def require_unimodular(phi: Mat2Z) -> int:
    d = phi.det
    if d not in (1, -1):
        raise NotUnimodular(f"det({phi}) = {d}, expected +1 or -1")
    return d


# -- classification -----------------------------------------------------------


class Kind(str, enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class MatClass:
    kind: Kind
    order: Optional[int] = None

    def __str__(self):
        if self.kind is Kind.ELLIPTIC:
            return f"elliptic(order {self.order})"
        return self.kind.value


def classify(phi: Mat2Z) -> MatClass:
    d = require_unimodular(phi)
    t = phi.trace
    if d == -1:
        return MatClass(Kind.ELLIPTIC, 2) if t == 0 else MatClass(Kind.HYPERBOLIC)
    if phi.is_scalar() or abs(t) <= 1:
        p, k = phi, 1
        while p != I2:
            p, k = p @ phi, k + 1
            assert k <= 6
        return MatClass(Kind.ELLIPTIC, k)
    if abs(t) == 2:
        return MatClass(Kind.PARABOLIC)
    return MatClass(Kind.HYPERBOLIC)


def power(phi: Mat2Z, r: int) -> Mat2Z:
    if r < 0:
        phi, r = phi.inverse(), -r
    out = I2
    while r:
        if r & 1:
            out = out @ phi
        phi = phi @ phi
        r >>= 1
    return out


# -- conjugacy over Z ---------------------------------------------------------


@dataclass(frozen=True)
class ConjVerdict:
    conjugate: bool
    witness: Optional[Mat2Z] = None

    def __bool__(self):
        return self.conjugate


def _intertwiner_matrix(phi: Mat2Z, psi: Mat2Z) -> IntMatrix:
    # Linear map X -> X phi - psi X on vec(X) = (x11, x12, x21, x22).
    f = ((phi.a11, phi.a12), (phi.a21, phi.a22))
    g = ((psi.a11, psi.a12), (psi.a21, psi.a22))
    rows = []
    for i, j in product(range(2), repeat=2):
        row = [0] * 4
        for k in range(2):
            row[2 * i + k] += f[k][j]
            row[2 * k + j] -= g[i][k]
        rows.append(row)
    return IntMatrix.from_rows(rows)


def intertwiner_lattice(phi: Mat2Z, psi: Mat2Z) -> list[Mat2Z]:
    """A Z-basis of {X in M_2(Z) : X phi = psi X}."""
    return [Mat2Z(*v) for v in integer_kernel(_intertwiner_matrix(phi, psi))]


def det_form(P: Mat2Z, Q: Mat2Z) -> Form:
    """The binary quadratic form (x, y) -> det(xP + yQ)."""
    return Form(P.det, (P + Q).det - P.det - Q.det, Q.det)


def is_conjugate_z(phi: Mat2Z, psi: Mat2Z) -> ConjVerdict:
    """Decide whether g phi g^-1 = psi for some g in GL(2, Z)."""
    require_unimodular(phi)
    require_unimodular(psi)
    if phi == psi:
        return ConjVerdict(True, I2)
    if phi.trace != psi.trace or phi.det != psi.det:
        return ConjVerdict(False)
    if phi.is_scalar() or psi.is_scalar():
        return ConjVerdict(False)
    # Non-scalar with a common characteristic polynomial: the rational
    # intertwiners form a 2-dimensional space.
    basis = intertwiner_lattice(phi, psi)
    assert len(basis) == 2, basis
    P, Q = basis
    sol = represent_unit(det_form(P, Q))
    if sol is None:
        return ConjVerdict(False)
    X = P.scale(sol[0]) + Q.scale(sol[1])
    assert X.det in (1, -1) and X @ phi == psi @ X
    return ConjVerdict(True, X)


# -- conjugacy modulo m -------------------------------------------------------


def _factor(m: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def _conj_prime_power(phi: Mat2Z, psi: Mat2Z, p: int, q: int) -> Optional[Mat2Z]:
    # Solutions of X phi = psi X (mod q) are V-combinations y with
    # d_i y_i = 0 (mod q), where U K V = diag(d) is the Smith form.
    snf = smith_normal_form(_intertwiner_matrix(phi, psi))
    vt = snf.v.transpose().to_rows()
    gens = []
    for d, col in zip(snf.diagonal, vt):
        step = q // gcd(d, q)
        if step % q:
            gens.append(Mat2Z(*(step * x for x in col)).mod(q))
    # det restricted to the solution space is a quadratic polynomial over
    # F_p in len(gens) variables; if it is not identically zero it is
    # nonzero somewhere on {0,1,2}^k, and for p = 2 that grid is all of F_2^k.
    for coeffs in product(range(3), repeat=len(gens)):
        X = Mat2Z(0, 0, 0, 0)
        for c, G in zip(coeffs, gens):
            X = X + G.scale(c)
        if X.det % p:
            return X.mod(q)
    return None


def is_conjugate_mod(phi: Mat2Z, psi: Mat2Z, m: int) -> ConjVerdict:
    """Decide conjugacy of the reductions of phi and psi in GL(2, Z/m)."""
    if m < 2:
        raise BadModulus(f"modulus must be at least 2, got {m}")
    if (phi.trace - psi.trace) % m or (phi.det - psi.det) % m:
        return ConjVerdict(False)
    parts = []
    for p, k in _factor(m):
        q = p**k
        X = _conj_prime_power(phi, psi, p, q)
        if X is None:
            return ConjVerdict(False)
        parts.append((q, X))
    # CRT-glue the prime-power witnesses
    out = [0, 0, 0, 0]
    for q, X in parts:
        rest = m // q
        lift = rest * pow(rest, -1, q)
        for i, x in enumerate(X.tuple()):
            out[i] += x * lift
    W = Mat2Z(*(x % m for x in out))
    assert gcd(W.det, m) == 1 and (W @ phi).mod(m) == (psi @ W).mod(m)
    return ConjVerdict(True, W)


@dataclass(frozen=True)
class LocalConjReport:
    modulus_bound: int
    failures: tuple[int, ...]

    @property
    def all_pass(self) -> bool:
        return not self.failures


def local_conjugacy(phi: Mat2Z, psi: Mat2Z, bound: int) -> LocalConjReport:
    if bound < 2:
        raise BadModulus(f"modulus bound must be at least 2, got {bound}")
    fails = tuple(m for m in range(2, bound + 1) if not is_conjugate_mod(phi, psi, m))
    return LocalConjReport(bound, fails)


# -- census of classes with given trace and determinant ------------------------


def form_content(phi: Mat2Z) -> int:
    """gcd(a21, a22 - a11, a12), a conjugacy invariant."""
    return gcd(gcd(phi.a21, phi.a22 - phi.a11), phi.a12)


def matrix_of_form(f: Form, trace: int) -> Mat2Z:
    # inverse of phi -> (a21, a22 - a11, -a12), which has discriminant tr^2 - 4 det
    return Mat2Z((trace - f.b) // 2, -f.c, f.a, (trace + f.b) // 2)


def matrices_of_height(trace: int, det: int, h: int) -> list[Mat2Z]:
    """All matrices of max-norm exactly h with the given trace and det, sorted."""
    out = set()
    for a in range(-h, h + 1):
        dd = trace - a
        if abs(dd) > h:
            continue
        bc = a * dd - det
        if bc == 0:
            for x in range(-h, h + 1):
                out.add(Mat2Z(a, x, 0, dd))
                out.add(Mat2Z(a, 0, x, dd))
            continue
        b = 1
        while b <= h:
            if bc % b == 0 and abs(bc // b) <= h:
                out.add(Mat2Z(a, b, bc // b, dd))
                out.add(Mat2Z(a, -b, -bc // b, dd))
            b += 1
    return sorted(m for m in out if m.height == h)


def _class_index(phi: Mat2Z, reps: list[Mat2Z]) -> Optional[int]:
    c = form_content(phi)
    for i, rep in enumerate(reps):
        if form_content(rep) == c and is_conjugate_z(phi, rep):
            return i
    return None


def canonical_representatives(reps: list[Mat2Z]) -> list[Mat2Z]:
    """Replace each class representative by its canonical conjugate.

    The canonical conjugate minimises (max |entry|, a11, a12, a21, a22).
    All reps must share trace and det and be pairwise non-conjugate.
    """
    if not reps:
        return []
    t, d = reps[0].trace, reps[0].det
    best: list[Optional[Mat2Z]] = [None] * len(reps)
    h = 0
    while any(b is None for b in best):
        for cand in matrices_of_height(t, d, h):
            i = _class_index(cand, reps)
            if i is not None and best[i] is None:
                best[i] = cand
        h += 1
    return best


def canonical_representative(phi: Mat2Z) -> Mat2Z:
    return canonical_representatives([phi])[0]


_FINITE_CLASSES = {
    (0, 1): [Mat2Z(0, -1, 1, 0)],
    (1, 1): [Mat2Z(1, -1, 1, 0)],
    (-1, 1): [Mat2Z(-1, -1, 1, 0)],
    (0, -1): [Mat2Z(1, 0, 0, -1), Mat2Z(0, 1, 1, 0)],
}


def enumerate_classes(trace: int, det: int) -> list[Mat2Z]:
    """Canonical representatives of the GL(2, Z)-classes with this trace and det."""
    if det not in (1, -1):
        raise NotUnimodular(f"det must be +1 or -1, got {det}")
    if det == 1 and abs(trace) == 2:
        sign = "" if trace > 0 else "-"
        raise InfiniteFamily(
            f"trace {trace}, det 1: {sign}I and {sign}(1 n; 0 1) for each n > 0, "
            "one class each"
        )
    if (trace, det) in _FINITE_CLASSES:
        candidates = _FINITE_CLASSES[(trace, det)]
    else:
        D = trace * trace - 4 * det
        candidates = [matrix_of_form(f, trace) for f in reduced_forms(D)]
    reps: list[Mat2Z] = []
    for m in candidates:
        if _class_index(m, reps) is None:
            reps.append(m)
    return sorted(canonical_representatives(reps), key=lambda m: (m.height, m))


# -- Nielsen words ------------------------------------------------------------

_SIGNED = {("R", 1): "R", ("R", -1): "ERE", ("L", 1): "L", ("L", -1): "ELE"}
_DIAG = {(1, 1): "", (1, -1): "E", (-1, 1): "SES", (-1, -1): "SESE"}


def nielsen_decompose(phi: Mat2Z) -> tuple[str, ...]:
    """A word in R, L, S, E whose product is phi."""
    require_unimodular(phi)
    a, b, c, d = phi.tuple()
    letters = []
    while a and c:
        same = (a > 0) == (c > 0)
        e = 1 if same else -1
        if abs(a) > abs(c) or (abs(a) == abs(c) and abs(b) >= abs(d)):
            a, b = a - e * c, b - e * d
            letters.append(_SIGNED["R", e])
        else:
            c, d = c - e * a, d - e * b
            letters.append(_SIGNED["L", e])
    if a == 0:
        letters.append("S")
        a, b, c, d = c, d, a, b
    # now phi = word * [[a, b], [0, d]] with a, d = +-1
    k = b * d
    letters.append(_SIGNED["R", 1 if k > 0 else -1] * abs(k))
    letters.append(_DIAG[a, d])
    word: list[str] = []
    for ch in "".join(letters):
        if word and word[-1] == ch and ch in "SE":
            word.pop()
        else:
            word.append(ch)
    return tuple(word)


def word_product(word) -> Mat2Z:
    out = I2
    for ch in word:
        out = out @ NIELSEN[ch]
    return out
