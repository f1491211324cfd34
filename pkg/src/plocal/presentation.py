"""Finite presentations and Todd-Coxeter coset enumeration.

The enumerator keeps a union-find over coset labels and a neighbor table
per live coset (one slot per directed generator), processes each coset
against every relator, and merges on coincidences.  Enumeration is bounded
by a row limit: a table that closes yields Finite(index); hitting the
limit yields Inconclusive, never a claim of infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CAPS
from .errors import GroupParseError


@dataclass(frozen=True)
class Presentation:
    """Generator symbols plus relator words.

    A word is a tuple of nonzero ints: +k means generator k-1, -k its
    inverse."""

    generators: tuple
    relators: tuple

    def __post_init__(self):
        n = len(self.generators)
        for w in self.relators:
            for a in w:
                if a == 0 or abs(a) > n:
                    raise GroupParseError(f"relator letter {a} out of range")

    def __repr__(self):
        return f"<Presentation {len(self.generators)} gens, {len(self.relators)} relators>"


@dataclass(frozen=True)
class EnumerationResult:
    status: str          # "finite" | "inconclusive"
    index: int | None
    rows_allocated: int

    @property
    def closed(self):
        return self.status == "finite"


def _encode(word, nd):
    out = []
    for a in word:
        d = 2 * (a - 1) if a > 0 else 2 * (-a - 1) + 1
        if d >= nd:
            raise GroupParseError(f"letter {a} out of range")
        out.append(d)
    return tuple(out)


def coset_enumeration(pres: Presentation, subgroup_words=(), limit=None) -> EnumerationResult:
    """Enumerate cosets of ⟨subgroup_words⟩ in the presented group."""
    if limit is None:
        limit = DEFAULT_CAPS.coset_rows
    if limit < 1:
        raise GroupParseError("limit must be >= 1")
    nd = 2 * len(pres.generators)
    rels = [_encode(w, nd) for w in pres.relators if w]
    subs = [_encode(w, nd) for w in subgroup_words if w]

    labels = [0]
    rows = [[-1] * nd]

    def find(c):
        while True:
            p = labels[c]
            if p == c:
                return c
            labels[c] = labels[p]
            c = labels[p]

    def unify(a, b):
        stack = [(a, b)]
        while stack:
            c1, c2 = stack.pop()
            c1 = find(c1)
            c2 = find(c2)
            if c1 == c2:
                continue
            if c1 > c2:
                c1, c2 = c2, c1
            labels[c2] = c1
            r1 = rows[c1]
            r2 = rows[c2]
            for d in range(nd):
                n = r2[d]
                if n == -1:
                    continue
                m = r1[d]
                if m == -1:
                    r1[d] = n
                else:
                    stack.append((m, n))

    def follow(v, word):
        c = find(v)
        for d in word:
            r = rows[c]
            n = r[d]
            if n == -1:
                n = len(labels)
                labels.append(n)
                rows.append([-1] * nd)
                r[d] = n
                rows[n][d ^ 1] = c
                c = n
            else:
                c = find(n)
        return c

    for w in subs:
        unify(0, follow(0, w))

    i = 0
    while i < len(labels):
        if len(labels) > limit:
            return EnumerationResult("inconclusive", None, len(labels))
        if find(i) != i:
            i += 1
            continue
        for rel in rels:
            unify(i, follow(i, rel))
            if find(i) != i:
                break
        if find(i) == i:
            r = rows[i]
            for d in range(nd):
                if r[d] == -1:
                    n = len(labels)
                    labels.append(n)
                    rows.append([-1] * nd)
                    r[d] = n
                    rows[n][d ^ 1] = i
        i += 1

    index = sum(1 for j in range(len(labels)) if find(j) == j)
    return EnumerationResult("finite", index, len(labels))
