"""Finite permutation groups with full multiplication tables, and the catalog."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from ..errors import UnsupportedParameter

CATALOG_SCHEMA = "pfrigid-catalog-1"
DEFAULT_MAX_ORDER = 60
PSL2_PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    """A finite group given by permutation generators.

    Elements are permutations of range(degree) in lexicographic order, so the
    identity has index 0.  ``table[i, j]`` is the index of ``elements[i] *
    elements[j]``, where p * q applies p first, then q.
    """

    name: str
    degree: int
    elements: tuple[tuple[int, ...], ...]
    table: np.ndarray = field(repr=False)
    inverse: np.ndarray = field(repr=False)
    generator_indices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def generated_order(self, images) -> int:
        """Order of the subgroup generated by the given element indices."""
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        gens = np.unique(np.asarray(images, dtype=np.int64))
        count = 1
        while frontier.size:
            nxt = np.unique(self.table[frontier][:, gens].ravel())
            nxt = nxt[~seen[nxt]]
            seen[nxt] = True
            count += nxt.size
            frontier = nxt
        return count

    def generates(self, images) -> bool:
        return self.generated_order(images) == self.order

    def conjugacy_class_reps(self) -> list[int]:
        """Least element index of each conjugacy class, increasing."""
        reps = []
        done = np.zeros(self.order, dtype=bool)
        g = np.arange(self.order)
        for x in range(self.order):
            if done[x]:
                continue
            reps.append(x)
            # g^-1 x g for all g
            done[self.table[self.table[self.inverse[g], x], g]] = True
        return reps

    @classmethod
    def from_permutations(cls, name: str, degree: int, gens) -> FiniteGroupTable:
        gens = [tuple(int(x) for x in g) for g in gens]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of {degree} points")
        ident = tuple(range(degree))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[x] for x in p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        elements = tuple(sorted(seen))
        E = np.array(elements, dtype=np.int64).reshape(len(elements), degree)
        # Shortest prefix of point images that separates the elements; its
        # base-`degree` code is then sorted like the elements themselves.
        k = 1
        while len({e[:k] for e in elements}) < len(elements):
            k += 1
        if max(degree, 2) ** k >= 2**62:
            raise ValueError(f"{name}: permutation codes do not fit in 64 bits")
        base = np.int64(max(degree, 2)) ** np.arange(k - 1, -1, -1, dtype=np.int64)
        codes = E[:, :k] @ base
        # (p * q)[x] = q[p[x]]; row i is E[:, E[i]]
        table = np.empty((len(E), len(E)), dtype=np.int64)
        for i in range(len(E)):
            table[i] = np.searchsorted(codes, E[:, E[i][:k]] @ base)
        inverse = np.argmax(table == 0, axis=1)
        index = {p: i for i, p in enumerate(elements)}
        grp = cls(name, degree, elements, table, inverse, tuple(index[g] for g in gens))
        grp._check()
        return grp

    def _check(self):
        n = self.order
        t = self.table
        assert self.elements[0] == tuple(range(self.degree)), self.name
        assert (t[0] == np.arange(n)).all() and (t[:, 0] == np.arange(n)).all()
        assert (t[np.arange(n), self.inverse] == 0).all()
        for row in t:
            assert len(np.unique(row)) == n

    def __repr__(self):
        return f"FiniteGroupTable({self.name!r}, order={self.order})"


# -- catalog ------------------------------------------------------------------


def family_order(family: str, param: int) -> int:
    if family == "cyclic":
        return param
    if family == "dihedral":
        return param
    if family == "symmetric":
        return factorial(param)
    if family == "alternating":
        return factorial(param) // 2
    if family == "psl2":
        p = param
        return p * (p * p - 1) // (2 if p > 2 else 1)
    raise UnsupportedParameter(f"unknown group family {family!r}")


def parse_group_id(text: str) -> tuple[str, int]:
    family, sep, param = text.partition(":")
    if not sep or not param.strip().lstrip("-").isdigit():
        raise UnsupportedParameter(f"expected FAMILY:PARAM, got {text!r}")
    return family.strip(), int(param)


def _check_param(family: str, n: int):
    ok = {
        "cyclic": 1 <= n <= 5000,
        "dihedral": 4 <= n <= 5000 and n % 2 == 0,
        "symmetric": 1 <= n <= 6,
        "alternating": 3 <= n <= 6,
        "psl2": n in PSL2_PRIMES,
    }
    if family not in ok:
        raise UnsupportedParameter(f"unknown group family {family!r}")
    if not ok[family]:
        raise UnsupportedParameter(f"unsupported parameter {family}:{n}")


def _psl2_generators(p: int):
    # action on the projective line {0..p-1, oo=p}
    def act(a, b, c, d):
        perm = []
        for x in range(p + 1):
            if x == p:
                num, den = a, c
            else:
                num, den = (a * x + b) % p, (c * x + d) % p
            perm.append(p if den % p == 0 else num * pow(den, -1, p) % p)
        return perm

    return [act(1, 1, 0, 1), act(0, p - 1, 1, 0)]


def build_catalog_group(family, param: int | None = None) -> FiniteGroupTable:
    """Build e.g. ``build_catalog_group("dihedral", 10)`` or ``("dihedral:10")``."""
    if param is None:
        family, param = parse_group_id(family)
    _check_param(family, param)
    n = param
    name = f"{family}:{n}"
    if family == "cyclic":
        gens, deg = [[(i + 1) % n for i in range(n)]], n
    elif family == "dihedral":
        k = n // 2
        if k == 2:
            gens, deg = [[1, 0, 3, 2], [2, 3, 0, 1]], 4
        else:
            gens, deg = [[(i + 1) % k for i in range(k)], [(-i) % k for i in range(k)]], k
    elif family == "symmetric":
        deg = n
        gens = [[(i + 1) % n for i in range(n)]]
        if n > 2:
            gens.append([1, 0] + list(range(2, n)))
    elif family == "alternating":
        deg = n
        # 3-cycles (0 1 k) generate A_n
        gens = []
        for k in range(2, n):
            g = list(range(n))
            g[0], g[1], g[k] = 1, k, 0
            gens.append(g)
    else:
        gens, deg = _psl2_generators(n), n + 1
    grp = FiniteGroupTable.from_permutations(name, deg, gens)
    expected = family_order(family, n)
    if grp.order != expected:
        raise AssertionError(f"{name}: built order {grp.order}, expected {expected}")
    return grp


# Members isomorphic to an earlier-listed group are left out so that
# catalog ids can stand for isomorphism classes.
_EXCLUDED = {
    "dihedral:6",  # symmetric:3
    "psl2:2",  # symmetric:3
    "psl2:3",  # alternating:4
    "psl2:5",  # alternating:5
}


def catalog_ids(max_order: int = DEFAULT_MAX_ORDER) -> list[str]:
    """Default catalog ids with order <= max_order, sorted by (order, id)."""
    ids = [f"cyclic:{n}" for n in range(2, min(max_order, 5000) + 1)]
    ids += [f"dihedral:{n}" for n in range(4, min(max_order, 5000) + 1, 2)]
    ids += [f"symmetric:{k}" for k in range(3, 7)]
    ids += [f"alternating:{k}" for k in range(4, 7)]
    ids += [f"psl2:{p}" for p in PSL2_PRIMES]
    ids = [i for i in ids if i not in _EXCLUDED and catalog_order(i) <= max_order]
    return sorted(ids, key=catalog_sort_key)


def catalog_order(group_id: str) -> int:
    return family_order(*parse_group_id(group_id))


def catalog_sort_key(group_id: str):
    return (catalog_order(group_id), group_id)


def catalog_version(max_order: int = DEFAULT_MAX_ORDER) -> str:
    return f"{CATALOG_SCHEMA}/max-order={max_order}"


def max_order_from_env(default: int = DEFAULT_MAX_ORDER) -> int:
    raw = os.environ.get("PF_CATALOG_MAX")
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UnsupportedParameter(f"PF_CATALOG_MAX={raw!r} is not an integer") from None
    if value < 1:
        raise UnsupportedParameter(f"PF_CATALOG_MAX must be positive, got {value}")
    return value


_CACHE: dict[str, FiniteGroupTable] = {}


def catalog_group(group_id: str) -> FiniteGroupTable:
    grp = _CACHE.get(group_id)
    if grp is None:
        grp = _CACHE[group_id] = build_catalog_group(group_id)
    return grp


def default_catalog(max_order: int = DEFAULT_MAX_ORDER) -> list[FiniteGroupTable]:
    return [catalog_group(i) for i in catalog_ids(max_order)]
