"""Integral binary quadratic forms f(x, y) = a x^2 + b xy + c y^2.

Only what the conjugacy machinery needs: deciding whether a form takes
the value +1 or -1 (with a witness), and listing reduced indefinite forms
of a given discriminant.  Everything is exact; square roots are only ever
taken with math.isqrt.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple, Optional


class Form(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


# -- indefinite forms ---------------------------------------------------------


def is_reduced(f: Form) -> bool:
    """|sqrt(D) - 2|a|| < b < sqrt(D) for a form of positive non-square D."""
    a, b, _ = f
    D = f.disc
    if b <= 0 or b * b >= D:
        return False
    two_a = 2 * abs(a)
    if (two_a + b) ** 2 <= D:
        return False
    return two_a - b <= 0 or (two_a - b) ** 2 < D


def rho(f: Form) -> tuple[Form, int]:
    """One reduction step; returns (f o [[0,-1],[1,s]], s)."""
    a, b, c = f
    D = f.disc
    m = 2 * abs(c)
    if c * c > D:
        r = (-b) % m
        if r > abs(c):
            r -= m
    else:
        s0 = isqrt(D)
        r = s0 - ((s0 + b) % m)
    s = (r + b) // (2 * c)
    return Form(c, r, (r * r - D) // (4 * c)), s


def reduction_cycle(f: Form):
    """Yield (g, M) along the reduction orbit of f, with g = f o M.

    The walk first reaches a reduced form and then goes once around its
    cycle, stopping when the first reduced form recurs.
    """
    M = (1, 0, 0, 1)
    g = f
    yield g, M
    while not is_reduced(g):
        g, s = rho(g)
        M = (M[1], -M[0] + s * M[1], M[3], -M[2] + s * M[3])
        yield g, M
    start = g
    while True:
        g, s = rho(g)
        M = (M[1], -M[0] + s * M[1], M[3], -M[2] + s * M[3])
        if g == start:
            return
        yield g, M


def reduced_forms(D: int) -> list[Form]:
    """All reduced forms of positive non-square discriminant D (any content)."""
    if D <= 0 or is_square(D):
        raise ValueError(f"discriminant {D} is not positive non-square")
    out = []
    for b in range(1, isqrt(D) + 1):
        if (b - D) % 2 or b * b >= D:
            continue
        ac = (b * b - D) // 4
        for d in _divisors(ac):
            for a in (d, -d):
                f = Form(a, b, ac // a)
                if is_reduced(f):
                    out.append(f)
    return sorted(set(out))


# -- representing +1 or -1 ----------------------------------------------------


def _unit_indefinite(f: Form) -> Optional[tuple[int, int]]:
    # A primitive form of discriminant D > 4 properly representing m with
    # |m| < sqrt(D)/2 has m as the leading coefficient of some reduced form
    # in its cycle, so walking the cycle decides +-1.
    for g, M in reduction_cycle(f):
        if g.a in (1, -1):
            return M[0], M[2]
        if g.c in (1, -1):
            return M[1], M[3]
    return None


def _unit_definite(f: Form) -> Optional[tuple[int, int]]:
    a, b, _ = f
    negD = -f.disc
    n = 1 if a > 0 else -1
    # 4an = (2ax + by)^2 + |D| y^2
    N = 4 * a * n
    ymax = isqrt(N // negD)
    for y in range(-ymax, ymax + 1):
        rest = N - negD * y * y
        if not is_square(rest):
            continue
        w = isqrt(rest)
        for ww in (w, -w):
            num = ww - b * y
            if num % (2 * a) == 0:
                return num // (2 * a), y
    return None


def _solve_square(f: Form, n: int) -> Optional[tuple[int, int]]:
    a, b, c = f
    if a == 0 and c == 0:
        return (1, n * b) if b in (1, -1) else None
    if a == 0:
        sol = _solve_square(Form(c, b, a), n)
        return None if sol is None else (sol[1], sol[0])
    s = isqrt(f.disc)
    N = 4 * a * n
    if s > 0:
        # 4an = (2ax + (b-s)y)(2ax + (b+s)y)
        for d in _divisors(N):
            for u in (d, -d):
                v = N // u
                if (v - u) % (2 * s):
                    continue
                y = (v - u) // (2 * s)
                num = u - (b - s) * y
                if num % (2 * a) == 0:
                    return num // (2 * a), y
        return None
    # zero discriminant: 4an = (2ax + by)^2
    if not is_square(N):
        return None
    w = isqrt(N)
    g, p, q = _ext_gcd(2 * a, b)
    if w % g:
        return None
    x, y = p * (w // g), q * (w // g)
    return (x, y) if f(x, y) == n else None


def represent_unit(f: Form) -> Optional[tuple[int, int]]:
    """Return (x, y) with f(x, y) in {1, -1}, or None if no such pair exists."""
    if f.content != 1:
        return None
    D = f.disc
    if D < 0:
        sol = _unit_definite(f)
    elif is_square(D):
        sol = _solve_square(f, 1) or _solve_square(f, -1)
    else:
        sol = _unit_indefinite(f)
    if sol is not None:
        assert f(*sol) in (1, -1), (f, sol)
    return sol
