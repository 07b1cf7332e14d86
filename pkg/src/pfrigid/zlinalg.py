"""Exact integer linear algebra: Smith normal form and cokernels.

All arithmetic uses Python integers, so there is no overflow however large
the intermediate entries become.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows) -> IntMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(zip(*self.to_rows())) if self.rows else IntMatrix(self.cols, 0, ())

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a = self.to_rows()
        bt = other.transpose().to_rows() if other.cols else []
        out = tuple(
            sum(x * y for x, y in zip(row, col)) for row in a for col in bt
        )
        return IntMatrix(self.rows, other.cols, out)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.to_rows())

    def __str__(self):
        return "\n".join(" ".join(f"{x:>4}" for x in r) for r in self.to_rows())


@dataclass(frozen=True)
class SnfResult:
    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return self.d.diagonal()


@dataclass(frozen=True)
class HomologySummary:
    """A finitely generated abelian group Z^b1 + Z/t1 + ... + Z/tk, t1 | t2 | ..."""

    b1: int
    torsion: tuple[int, ...] = ()

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    def __str__(self):
        parts = []
        if self.b1:
            parts.append("Z" if self.b1 == 1 else f"Z^{self.b1}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _identity_rows(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Return d, u, v with u @ a @ v == d, u and v unimodular.

    The diagonal of d is non-negative with each entry dividing the next and
    zeros last.  Pivots are the entry of least absolute value in the active
    block, first in row-then-column order, so u and v are reproducible.
    """
    if a.rows < 1 or a.cols < 1:
        raise ValueError("smith_normal_form needs at least one row and one column")
    m, n = a.rows, a.cols
    A = a.to_rows()
    U = _identity_rows(m)
    V = _identity_rows(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = A[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    add_row(i, t, -q)
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(j, t, -q)
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
        if best is None:
            break
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    return SnfResult(IntMatrix.from_rows(A), IntMatrix.from_rows(U), IntMatrix.from_rows(V))


def invariant_factors(a: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    return [x for x in smith_normal_form(a).diagonal if x]


def cokernel_invariants(a: IntMatrix) -> HomologySummary:
    """Structure of Z^rows / (column span of a)."""
    diag = smith_normal_form(a).diagonal
    rank = sum(1 for x in diag if x)
    return HomologySummary(a.rows - rank, tuple(x for x in diag if x > 1))


def integer_kernel(a: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of the saturated lattice {x in Z^cols : a x = 0}."""
    res = smith_normal_form(a)
    rank = sum(1 for x in res.diagonal if x)
    vt = res.v.transpose().to_rows()
    return [tuple(vt[j]) for j in range(rank, a.cols)]
