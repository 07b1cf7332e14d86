"""Finite presentations.

Text grammar::

    gens | word (= word)? (, word (= word)?)*

Generators are single lowercase letters; a relator word is a run of
letters, lowercase for a generator and uppercase for its inverse, spaces
optional.  ``u = v`` stands for the relator u v^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, UnknownGenerator
from ..zlinalg import HomologySummary, IntMatrix, cokernel_invariants

# A word is a tuple of nonzero ints: +(i+1) is generator i, -(i+1) its inverse.
Word = tuple


def free_reduce(word) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(word) -> Word:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...] = ()

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise ValueError(f"repeated generator in {self.generators}")
        for g in self.generators:
            if len(g) != 1 or not g.islower():
                raise ValueError(f"generator names are single lowercase letters, got {g!r}")
        rels = []
        for lhs, rhs in self.relations:
            for x in lhs + rhs:
                if x == 0 or abs(x) > n:
                    raise UnknownGenerator(f"letter index {x} outside 1..{n}")
            rels.append((free_reduce(lhs), free_reduce(rhs)))
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def from_relators(cls, generators, relators) -> Presentation:
        return cls(tuple(generators), tuple((tuple(w), ()) for w in relators))

    @property
    def relators(self) -> tuple[Word, ...]:
        return tuple(free_reduce(l + invert(r)) for l, r in self.relations)

    def format_word(self, word) -> str:
        return " ".join(
            self.generators[x - 1] if x > 0 else self.generators[-x - 1].upper()
            for x in word
        )

    def __str__(self):
        rels = []
        for lhs, rhs in self.relations:
            s = self.format_word(lhs)
            if rhs:
                s += " = " + self.format_word(rhs)
            rels.append(s)
        head = " ".join(self.generators)
        return f"{head} | {', '.join(rels)}" if rels else f"{head} |"


def _parse_word(text: str, offset: int, index: dict[str, int]) -> Word:
    word = []
    for k, ch in enumerate(text):
        if ch.isspace():
            continue
        if not ch.isalpha() or not ch.isascii():
            raise ParseError(f"unexpected character {ch!r}", offset + k)
        i = index.get(ch.lower())
        if i is None:
            raise UnknownGenerator(f"undeclared generator {ch.lower()!r}", offset + k)
        word.append(i + 1 if ch.islower() else -(i + 1))
    if not word:
        raise ParseError("empty relator word", offset + len(text))
    return tuple(word)


def parse_presentation(text: str) -> Presentation:
    bar = text.find("|")
    if bar < 0:
        raise ParseError("missing '|' between generators and relators", len(text))
    gens = []
    pos = 0
    for tok in text[:bar].split():
        pos = text.index(tok, pos)
        if len(tok) != 1 or not tok.isalpha() or not tok.islower() or not tok.isascii():
            raise ParseError(f"bad generator name {tok!r}", pos)
        if tok in gens:
            raise ParseError(f"generator {tok!r} declared twice", pos)
        gens.append(tok)
        pos += len(tok)
    index = {g: i for i, g in enumerate(gens)}

    body = text[bar + 1:]
    relations = []
    if body.strip():
        start = bar + 1
        for chunk in body.split(","):
            sides = chunk.split("=")
            if len(sides) > 2:
                raise ParseError("more than one '=' in a relation", start + len(sides[0]) + len(sides[1]) + 1)
            lhs = _parse_word(sides[0], start, index)
            rhs = _parse_word(sides[1], start + len(sides[0]) + 1, index) if len(sides) == 2 else ()
            relations.append((lhs, rhs))
            start += len(chunk) + 1
    return Presentation(tuple(gens), tuple(relations))


def relation_matrix(p: Presentation) -> IntMatrix:
    """Exponent sums: one column per relator, one row per generator."""
    n = len(p.generators)
    cols = []
    for w in p.relators:
        v = [0] * n
        for x in w:
            v[abs(x) - 1] += 1 if x > 0 else -1
        cols.append(v)
    return IntMatrix.from_rows(zip(*cols)) if cols else IntMatrix(n, 0, ())


def abelianization(p: Presentation) -> HomologySummary:
    n = len(p.generators)
    m = relation_matrix(p)
    if n == 0:
        return HomologySummary(0)
    if m.cols == 0:
        return HomologySummary(n)
    return cokernel_invariants(m)
