"""Recognition of small groups of Lie type against a fixed catalog.

Recognition is fingerprint-based (order, simplicity of the derived
subgroup, center, element-order statistics), never general: a returned
label certifies catalog membership, while None only means "unrecognized".
The catalog covers the rank-one groups L2(q) for q in {2,3,4,5,7,8,9} and
U3(3), the rank-two groups L3(2), L3(3), Sp4(2)', Sp4(2), U3(3)=G2(2)',
G2(2), plus central products of two rank-one members for the disconnected
(digon) case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import PermGroup, symmetric


@dataclass(frozen=True)
class LieTypeLabel:
    name: str       # e.g. "L2(2)", "Sp4(2)'", "G2(2)"
    family: str     # Coxeter family of the defining diagram: A1, A2, C2, G2
    rank: int       # Lie rank (1 or 2)
    q: int          # field size
    gon: int | None = None   # m for rank two: 3, 4, 6, 8

    def __repr__(self):
        return f"<LieType {self.name} rank {self.rank} char-split>"


@lru_cache(maxsize=None)
def _s6_order_histogram():
    return tuple(sorted(symmetric(6).element_order_histogram().items()))


def identify_lie_type(G: PermGroup, p: int) -> LieTypeLabel | None:
    """Catalog lookup for G at characteristic p; None means unrecognized."""
    n = G.order
    if n == 6:
        if p == 2 and not G.is_abelian():
            return LieTypeLabel("L2(2)", "A1", 1, 2)
        return None
    if n == 12:
        if p == 3 and G.core_p(3).order == 1:
            return LieTypeLabel("L2(3)", "A1", 1, 3)
        return None
    if n == 60 and G.is_simple():
        if p == 2:
            return LieTypeLabel("L2(4)", "A1", 1, 4)
        if p == 5:
            return LieTypeLabel("L2(5)", "A1", 1, 5)
        return None
    if n == 168 and G.is_simple():
        if p == 2:
            return LieTypeLabel("L3(2)", "A2", 2, 2, gon=3)
        if p == 7:
            return LieTypeLabel("L2(7)", "A1", 1, 7)
        return None
    if n == 360 and G.is_simple():
        if p == 2:
            return LieTypeLabel("Sp4(2)'", "C2", 2, 2, gon=4)
        if p == 3:
            return LieTypeLabel("L2(9)", "A1", 1, 9)
        return None
    if n == 504 and G.is_simple():
        if p == 2:
            return LieTypeLabel("L2(8)", "A1", 1, 8)
        return None
    if n == 720:
        if (p == 2 and G.center().order == 1
                and tuple(sorted(G.element_order_histogram().items())) == _s6_order_histogram()):
            return LieTypeLabel("Sp4(2)", "C2", 2, 2, gon=4)
        return None
    if n == 5616 and G.is_simple():
        if p == 3:
            return LieTypeLabel("L3(3)", "A2", 2, 3, gon=3)
        return None
    if n == 6048 and G.is_simple():
        if p == 2:
            return LieTypeLabel("G2(2)'", "G2", 2, 2, gon=6)
        if p == 3:
            return LieTypeLabel("U3(3)", "A1", 1, 3)
        return None
    if n == 12096:
        D = G.derived_subgroup()
        if p == 2 and G.center().order == 1 and D.order == 6048 and D.is_simple():
            return LieTypeLabel("G2(2)", "G2", 2, 2, gon=6)
        return None
    return None


def identify_rank_one_product(G: PermGroup, p: int):
    """Central product of two rank-one catalog members, or None.

    Searches pairs of normal subgroups N1 N2 = G with [N1, N2] = 1 whose
    quotients by the shared central intersection are rank-one Lie type."""
    from .perm import pmul
    try:
        lattice = G.subgroups()
    except Exception:
        return None
    normals = [H for H in lattice
               if 1 < H.order < G.order and G.is_normal(H)]
    for i, N1 in enumerate(normals):
        for N2 in normals[i:]:
            if N1.order * N2.order < G.order:
                continue
            inter = N1.element_set & N2.element_set
            if N1.order * N2.order != G.order * len(inter):
                continue
            if not all(pmul(a, b) == pmul(b, a)
                       for a in N1.generators for b in N2.generators):
                continue
            Z = G.subgroup(elements=inter)
            if not all(pmul(a, z) == pmul(z, a)
                       for a in G.generators for z in Z.element_set):
                continue
            parts = []
            for N in (N1, N2):
                if Z.order == 1:
                    label = identify_lie_type(N, p)
                else:
                    label = identify_lie_type(N.quotient_action(N.subgroup(
                        elements=Z.element_set)).group, p)
                parts.append(label)
            if all(lb is not None and lb.rank == 1 for lb in parts):
                return (parts[0], parts[1])
    return None
