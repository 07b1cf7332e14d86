import itertools
import random

import numpy as np
import pytest

from pfrigid.gl2z import E, L, Mat2Z, R, S
from pfrigid.zlinalg import IntMatrix

FIG8 = Mat2Z(2, 1, 1, 1)
TREFOIL = Mat2Z(1, -1, 1, 0)
GIESEKING = Mat2Z(1, 1, 1, 0)
LOCAL_PAIR = (Mat2Z(188, 275, 121, 177), Mat2Z(188, 11, 3025, 177))

PI_TEXT = "x y | y x Y x y = x y X y x"
TREFOIL_TEXT = "a b | a a = b b b"


def unimodular_sweep(lo=-3, hi=3):
    """Every matrix in GL(2, Z) with entries in [lo, hi]."""
    out = []
    for t in itertools.product(range(lo, hi + 1), repeat=4):
        m = Mat2Z(*t)
        if m.det in (1, -1):
            out.append(m)
    return out


def random_nielsen_product(rng, max_len=8):
    g = Mat2Z(1, 0, 0, 1)
    for _ in range(rng.randint(0, max_len)):
        g = g @ rng.choice((R, L, S, E, R.inverse(), L.inverse()))
    return g


def random_unimodular_intmatrix(rng, n, steps=12):
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n > 1 and rng.random() < 0.8:
            q = rng.randint(-3, 3)
            rows[i] = [x + q * y for x, y in zip(rows[i], rows[j])]
        else:
            rows[i] = [-x for x in rows[i]]
    return IntMatrix.from_rows(rows)


class BruteConjugacy:
    """Conjugator search over GL(2, Z) matrices with entries bounded by `bound`."""

    def __init__(self, bound=6):
        r = np.arange(-bound, bound + 1)
        G = np.array(list(itertools.product(r, repeat=4)), dtype=np.int64)
        det = G[:, 0] * G[:, 3] - G[:, 1] * G[:, 2]
        self.G = G[(det == 1) | (det == -1)]
        d = self.G[:, 0] * self.G[:, 3] - self.G[:, 1] * self.G[:, 2]
        self.Ginv = np.stack([d * self.G[:, 3], -d * self.G[:, 1], -d * self.G[:, 2], d * self.G[:, 0]], 1)

    @staticmethod
    def _mul(A, B):
        return np.stack([
            A[:, 0] * B[:, 0] + A[:, 1] * B[:, 2],
            A[:, 0] * B[:, 1] + A[:, 1] * B[:, 3],
            A[:, 2] * B[:, 0] + A[:, 3] * B[:, 2],
            A[:, 2] * B[:, 1] + A[:, 3] * B[:, 3],
        ], 1)

    def orbit(self, phi):
        P = np.broadcast_to(np.array(phi.tuple(), dtype=np.int64), self.G.shape)
        return set(map(tuple, self._mul(self._mul(self.G, P), self.Ginv).tolist()))


@pytest.fixture(scope="session")
def brute_conj():
    return BruteConjugacy(6)


@pytest.fixture
def rng():
    return random.Random(20240611)
