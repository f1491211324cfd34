"""Group-core tests.

Derived expected values are frozen from independent oracles which are kept
here: subset-closure enumeration for small lattices, and plain elementwise
scans for transporters, cores and Sylow data.
"""

from itertools import combinations

import pytest

from plocal.errors import CapExceeded, NotNormal
from plocal.groups import (GroupMap, alternating, cyclic, dihedral,
                           direct_product, isomorphism, p_part,
                           strongly_p_embedded_exists, symmetric)
from plocal.perm import conj, identity, parse_cycles, pinv, pmul, porder, cycle_string


# -- independent oracles ----------------------------------------------------


def subgroup_count_by_subsets(G):
    """Count subgroups by enumerating all subsets containing the identity.
    Only usable for tiny groups; independent of the lattice algorithm."""
    els = [g for g in G.elements if g != G.identity]
    count = 0
    for r in range(len(els) + 1):
        for combo in combinations(els, r):
            sub = set(combo) | {G.identity}
            if all(pmul(a, b) in sub for a in sub for b in sub):
                count += 1
    return count


def transporter_by_scan(G, P, Q):
    return [g for g in G.elements
            if all(conj(g, x) in Q.element_set for x in P.element_set)]


# -- elements ----------------------------------------------------------------


def test_element_counts():
    assert symmetric(4).order == 24
    assert cyclic(1).order == 1
    assert alternating(7).order == 2520


def test_cycle_parse_roundtrip():
    g = parse_cycles("(1 2 3)(4 5)", 6)
    assert cycle_string(g) == "(1 2 3)(4 5)"
    assert porder(g) == 6
    assert parse_cycles("()", 4) == identity(4)


def test_closure_cap():
    from plocal.config import Caps
    from plocal.groups import PermGroup
    with pytest.raises(CapExceeded):
        PermGroup(7, alternating(7).generators, caps=Caps(enumeration=100))


# -- subgroup lattice ---------------------------------------------------------


def test_d8_has_ten_subgroups():
    D8 = dihedral(4)
    assert subgroup_count_by_subsets(D8) == 10  # oracle
    assert len(D8.subgroups()) == 10


def test_c2_has_two_subgroups():
    assert len(cyclic(2).subgroups()) == 2


def test_s4_sylow2_class_has_size_three():
    S4 = symmetric(4)
    order8 = [H for H in S4.subgroups() if H.order == 8]
    assert len(order8) == 3
    # all conjugate, by direct scan
    P = order8[0]
    for Q in order8[1:]:
        assert any(frozenset(conj(g, x) for x in P.element_set) == Q.element_set
                   for g in S4.elements)


# -- Sylow / cores -------------------------------------------------------------


def test_sylow_s4():
    S4 = symmetric(4)
    P = S4.sylow(2)
    assert P.order == 8
    assert isomorphism(dihedral(4), P) is not None


def test_sylow_trivial_when_p_does_not_divide():
    assert cyclic(3).sylow(2).order == 1


def test_sylow_a7_is_dihedral_of_order_8():
    A7 = alternating(7)
    P = A7.sylow(2)
    assert P.order == 8 == p_part(A7.order, 2)
    assert isomorphism(dihedral(4), P) is not None


def test_sylow_order_is_exact_p_part_on_corpus():
    for G in [symmetric(4), symmetric(5), alternating(5), alternating(6)]:
        for p in (2, 3, 5):
            assert G.sylow(p).order == p_part(G.order, p)


def test_transporter_examples():
    S3 = symmetric(3)
    P = S3.subgroup([parse_cycles("(1 2)", 3)])
    Q = S3.subgroup([parse_cycles("(1 3)", 3)])
    t = S3.transporter(P, Q)
    assert t == transporter_by_scan(S3, P, Q)
    assert parse_cycles("(2 3)", 3) in t
    # trivial P: transporter is all of G
    assert S3.transporter(S3.trivial_subgroup(), Q) == list(S3.elements)


def test_normalizer_of_normal_klein_four_is_s4():
    S4 = symmetric(4)
    V = S4.subgroup([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    assert S4.normalizer(V).order == 24


def test_core_and_residual():
    S4 = symmetric(4)
    V = S4.core_p(2)
    assert V.order == 4
    # oracle: intersection of the three order-8 subgroups of the lattice
    order8 = [H.element_set for H in S4.subgroups() if H.order == 8]
    inter = set(order8[0])
    for s in order8[1:]:
        inter &= s
    assert V.element_set == frozenset(inter)
    assert S4.residual_pprime(2).order == 24
    assert symmetric(3).core_p(2).order == 1


def test_pprime_reduced_pconstrained():
    assert symmetric(4).is_pprime_reduced_pconstrained(2)
    assert not symmetric(3).is_pprime_reduced_pconstrained(2)
    assert symmetric(3).is_pprime_reduced_pconstrained(3)


def test_core_in_every_sylow_and_residual_normal():
    for G, p in [(symmetric(4), 2), (symmetric(5), 2), (alternating(6), 3)]:
        O = G.core_p(p)
        for syl in G.sylow_class(p):
            assert O.element_set <= syl
        R = G.residual_pprime(p)
        assert G.is_normal(R)
        assert (G.order // R.order) % p != 0


# -- quotients ------------------------------------------------------------------


def test_quotient_s4_by_v4_is_s3():
    S4 = symmetric(4)
    V = S4.core_p(2)
    qa = S4.quotient_action(V)
    assert qa.group.order == 6
    assert isomorphism(symmetric(3), qa.group) is not None


def test_quotient_by_self_is_trivial():
    S4 = symmetric(4)
    assert S4.quotient_action(S4.full_subgroup()).group.order == 1


def test_quotient_d8_by_center_is_klein():
    D8 = dihedral(4)
    qa = D8.quotient_action(D8.center())
    assert qa.group.order == 4
    assert qa.group.is_abelian()
    assert all(porder(g) <= 2 for g in qa.group.elements)


def test_quotient_requires_normal():
    S4 = symmetric(4)
    H = S4.subgroup([parse_cycles("(1 2)", 4)])
    with pytest.raises(NotNormal):
        S4.quotient_action(H)


def test_quotient_kernel_is_exactly_n():
    S4 = symmetric(4)
    V = S4.core_p(2)
    qa = S4.quotient_action(V)
    kernel = [g for g in S4.elements if qa.project(g) == qa.group.identity]
    assert frozenset(kernel) == V.element_set


# -- isomorphism -----------------------------------------------------------------


def test_isomorphism_d8_vs_sylow():
    S4 = symmetric(4)
    f = isomorphism(dihedral(4), S4.sylow(2))
    assert f is not None and f.is_homomorphism() and f.is_injective()


def test_isomorphism_identity_pin():
    S4 = symmetric(4)
    pin = GroupMap.inclusion(S4.full_subgroup(), S4)
    f = isomorphism(S4, S4, pinned=pin)
    assert f is not None
    assert all(f(x) == x for x in S4.elements)


def test_isomorphism_c4_vs_klein_is_none():
    V = symmetric(4).core_p(2)
    assert isomorphism(cyclic(4), V) is None


def test_isomorphism_composes_to_identity():
    S4 = symmetric(4)
    P = S4.sylow(2)
    f = isomorphism(dihedral(4), P)
    g = f.inverse()
    assert all(g(f(x)) == x for x in dihedral(4).elements)


# -- misc ops ---------------------------------------------------------------------


def test_strongly_p_embedded():
    assert strongly_p_embedded_exists(symmetric(3), 2)
    assert not strongly_p_embedded_exists(cyclic(2), 2)
    assert not strongly_p_embedded_exists(symmetric(4), 2)


def test_product_set_equals():
    S3S3, el, er = direct_product(symmetric(3), symmetric(3))
    t = parse_cycles("(1 2)", 3)
    A = S3S3.subgroup([el(g) for g in symmetric(3).generators] + [er(t)])
    B = S3S3.subgroup([er(g) for g in symmetric(3).generators] + [el(t)])
    assert A.order == 12 and B.order == 12
    assert len(A.element_set & B.element_set) == 4
    assert S3S3.product_set_equals(A, B)
    assert S3S3.product_set_equals(S3S3.full_subgroup(), S3S3.full_subgroup())
    S4 = symmetric(4)
    P = S4.sylow(2)
    assert not S4.product_set_equals(P, P)


def test_overgroups_interval():
    S4 = symmetric(4)
    P = S4.sylow(2)
    over = S4.overgroups(P)
    assert [H.order for H in over] == [8, 24]
    # matches a filter of the full lattice
    from_lattice = [H for H in S4.subgroups() if P.element_set <= H.element_set]
    assert sorted(H.element_set for H in over) == sorted(H.element_set for H in from_lattice)


def test_p_subgroups_match_lattice_filter():
    S4 = symmetric(4)
    via_p = {H.element_set for H in S4.p_subgroups(2)}
    via_lattice = {H.element_set for H in S4.subgroups()
                   if H.order == p_part(H.order, 2)}
    assert via_p == via_lattice


def test_conjugacy_classes_of_elements():
    S4 = symmetric(4)
    sizes = sorted(len(c) for c in S4.conjugacy_classes())
    assert sizes == [1, 3, 6, 6, 8]


def test_is_simple():
    assert alternating(5).is_simple()
    assert not symmetric(4).is_simple()
    assert not cyclic(1).is_simple()
