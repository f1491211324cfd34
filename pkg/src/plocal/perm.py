"""Permutations of {1..n}, stored as tuples of 0-based images.

A permutation on degree n is the tuple (p(0), ..., p(n-1)).  Tuples keep
products, hashing and ordering cheap, which is what every enumeration in
this package lives on.  All text I/O uses 1-based disjoint cycle notation
with whitespace-separated points, fixed points omitted, e.g. "(1 2 3)(4 5)".
"""

from .errors import GroupParseError

Perm = tuple  # tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def pmul(a: Perm, b: Perm) -> Perm:
    """Product a*b acting as (a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def pinv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def conj(g: Perm, x: Perm) -> Perm:
    """Conjugate g x g^-1."""
    gi = pinv(g)
    return tuple(g[x[gi[p]]] for p in range(len(g)))


def porder(a: Perm) -> int:
    n = 1
    p = a
    e = identity(len(a))
    while p != e:
        p = pmul(p, a)
        n += 1
    return n


def is_perm(images, degree: int) -> bool:
    return len(images) == degree and sorted(images) == list(range(degree))


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based disjoint-cycle notation, e.g. "(1 2 3)(4 5)" or "()"."""
    s = text.strip()
    if s in ("()", "", "e", "id"):
        return identity(degree)
    if not (s.startswith("(") and s.endswith(")")):
        raise GroupParseError(f"bad cycle notation: {text!r}")
    images = list(range(degree))
    seen = set()
    for body in s[1:-1].split(")("):
        pts = body.replace(",", " ").split()
        try:
            cyc = [int(t) - 1 for t in pts]
        except ValueError:
            raise GroupParseError(f"bad point in cycle: {text!r}")
        if len(cyc) < 2:
            raise GroupParseError(f"cycle of length < 2 in {text!r}")
        for p in cyc:
            if not 0 <= p < degree:
                raise GroupParseError(f"point {p + 1} out of range 1..{degree}")
            if p in seen:
                raise GroupParseError(f"point {p + 1} repeated in {text!r}")
            seen.add(p)
        for i, p in enumerate(cyc):
            images[p] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def cycle_string(p: Perm) -> str:
    """Inverse of parse_cycles; identity renders as "()"."""
    parts = []
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "()"
