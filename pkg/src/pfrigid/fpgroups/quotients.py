"""Epimorphisms onto finite groups and finite-quotient fingerprints."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import CatalogMismatch
from .finite import (
    DEFAULT_MAX_ORDER,
    FiniteGroupTable,
    catalog_group,
    catalog_ids,
    catalog_order,
    catalog_sort_key,
    catalog_version,
)
from .presentation import Presentation

# Largest block of image tuples evaluated in one vectorised pass.
VECTOR_CAP = 1 << 18


@dataclass(frozen=True)
class EpiCount:
    count: int
    witnesses: tuple[tuple[int, ...], ...] = ()
    exhaustive: bool = True


def _plan(p: Presentation, order: int):
    n = len(p.generators)
    v = 0
    while v < n and order ** (v + 1) <= VECTOR_CAP:
        v += 1
    v = max(v, 1) if n else 0
    split = n - v
    # relators checkable once generators 0..k-1 are fixed, for k <= split
    early: dict[int, list] = {}
    late = []
    for w in p.relators:
        if not w:
            continue
        top = max(abs(x) for x in w)
        if top <= split:
            early.setdefault(top, []).append(w)
        else:
            late.append(w)
    return split, early, late


def _eval_scalar(g: FiniteGroupTable, word, images) -> int:
    cur = 0
    for x in word:
        img = images[x - 1] if x > 0 else int(g.inverse[images[-x - 1]])
        cur = int(g.table[cur, img])
    return cur


def _search(p: Presentation, g: FiniteGroupTable, first_only: bool, max_witnesses: int | None):
    n = len(p.generators)
    N = g.order
    if n == 0:
        ok = N == 1 and all(not w for w in p.relators)
        return EpiCount(int(ok), ((),) if ok else ())
    split, early, late = _plan(p, N)
    v = n - split
    # Conjugating a homomorphism keeps it surjective, so when only existence
    # matters the first generator may be taken up to conjugacy.
    first_choices = g.conjugacy_class_reps() if first_only else list(range(N))

    grids = []
    for k in range(v):
        axis = np.asarray(first_choices if split == 0 and k == 0 else range(N))
        grids.append(axis)
    mesh = [m.ravel() for m in np.meshgrid(*grids, indexing="ij")]
    mesh_inv = [g.inverse[m] for m in mesh]

    count = 0
    witnesses: list[tuple[int, ...]] = []

    def leaf(prefix):
        nonlocal count
        mask = np.ones(mesh[0].size, dtype=bool)
        for w in late:
            cur = np.zeros(mesh[0].size, dtype=np.int64)
            for x in w:
                i = abs(x) - 1
                if i < split:
                    img = prefix[i] if x > 0 else int(g.inverse[prefix[i]])
                else:
                    img = mesh[i - split] if x > 0 else mesh_inv[i - split]
                cur = g.table[cur, img]
            mask &= cur == 0
        for idx in np.flatnonzero(mask):
            images = tuple(prefix) + tuple(int(m[idx]) for m in mesh)
            if not g.generates(images):
                continue
            count += 1
            if max_witnesses is None or len(witnesses) < max_witnesses:
                witnesses.append(images)
            if first_only:
                return True
        return False

    def descend(prefix):
        k = len(prefix)
        if k == split:
            return leaf(prefix)
        choices = first_choices if k == 0 else range(N)
        for x in choices:
            nxt = prefix + [x]
            if all(_eval_scalar(g, w, nxt) == 0 for w in early.get(k + 1, ())):
                if descend(nxt):
                    return True
        return False

    descend([])
    return EpiCount(count, tuple(witnesses), exhaustive=not first_only)


def epimorphism_count(p: Presentation, g: FiniteGroupTable, max_witnesses: int | None = None) -> EpiCount:
    """Count surjective homomorphisms p -> g as raw maps.

    Witnesses are image tuples (element indices of g, one per generator of p)
    in lexicographic order.
    """
    return _search(p, g, first_only=False, max_witnesses=max_witnesses)


def find_epimorphism(p: Presentation, g: FiniteGroupTable):
    """Return the images of one epimorphism p -> g, or None."""
    res = _search(p, g, first_only=True, max_witnesses=1)
    return res.witnesses[0] if res.witnesses else None


def has_epimorphism(p: Presentation, g: FiniteGroupTable) -> bool:
    return find_epimorphism(p, g) is not None


def verify_homomorphism(p: Presentation, g: FiniteGroupTable, images) -> bool:
    return all(_eval_scalar(g, w, images) == 0 for w in p.relators)


# -- fingerprints -------------------------------------------------------------


@dataclass(frozen=True)
class QuotientFingerprint:
    catalog_ids: tuple[str, ...]
    catalog_version: str


@dataclass(frozen=True)
class FingerprintDiff:
    only_first: tuple[str, ...]
    only_second: tuple[str, ...]
    catalog_version: str
    difference: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        both = sorted(self.only_first + self.only_second, key=catalog_sort_key)
        object.__setattr__(self, "difference", tuple(both))

    @property
    def distinguished(self) -> bool:
        return bool(self.difference)

    @property
    def min_order(self) -> int | None:
        return catalog_order(self.difference[0]) if self.difference else None


def _has_epi_by_id(args):
    p, gid = args
    return has_epimorphism(p, catalog_group(gid))


def quotient_fingerprint(p: Presentation, catalog=None, *, version: str | None = None,
                         max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1) -> QuotientFingerprint:
    """The catalog members that are quotients of p.

    ``catalog`` is a sequence of FiniteGroupTable; when omitted the default
    catalog up to ``max_order`` is used.
    """
    if catalog is None:
        ids = catalog_ids(max_order)
        version = catalog_version(max_order)
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                flags = list(pool.map(_has_epi_by_id, [(p, i) for i in ids]))
        else:
            flags = [has_epimorphism(p, catalog_group(i)) for i in ids]
        hits = [i for i, f in zip(ids, flags) if f]
    else:
        hits = [grp.name for grp in catalog if has_epimorphism(p, grp)]
        if version is None:
            version = "custom:" + ",".join(grp.name for grp in catalog)
    return QuotientFingerprint(tuple(hits), version)


def compare_fingerprints(f1: QuotientFingerprint, f2: QuotientFingerprint) -> FingerprintDiff:
    if f1.catalog_version != f2.catalog_version:
        raise CatalogMismatch(f"{f1.catalog_version!r} != {f2.catalog_version!r}")
    s1, s2 = set(f1.catalog_ids), set(f2.catalog_ids)
    return FingerprintDiff(
        tuple(sorted(s1 - s2, key=catalog_sort_key)),
        tuple(sorted(s2 - s1, key=catalog_sort_key)),
        f1.catalog_version,
    )
