"""Finite permutation groups and the elementary group theory the rest of
the package consumes.

Everything is exact and exhaustive at desk scale: element sets are closed
explicitly, subgroup lattices are enumerated, and all searches run in a
fixed deterministic order (elements sorted as image tuples, subgroups by
(order, sorted element list)) so that witnesses are reproducible.
"""

from __future__ import annotations

import json
from collections import Counter

from .config import Caps, DEFAULT_CAPS
from .errors import CapExceeded, GroupParseError, NotNormal
from .perm import Perm, conj, cycle_string, identity, parse_cycles, pinv, pmul, porder


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def greedy_generators(elements, degree):
    """A small deterministic generating set for a known element set."""
    e = identity(degree)
    gens = []
    current = {e}
    for g in sorted(elements):
        if g not in current:
            gens.append(g)
            current = mulclose(gens, seed=current)
            if len(current) == len(elements):
                break
    return gens


def mulclose(gens, seed=None, cap=None):
    """Closure of `seed` (a subgroup's element set, or {e}) under the
    generators.  Returns a set of perms."""
    gens = [g for g in gens if g != identity(len(g))] if gens else []
    if seed is None:
        degree = len(gens[0])
        els = {identity(degree)}
    else:
        els = set(seed)
    bdy = list(els)
    while bdy:
        new = []
        for g in gens:
            for x in bdy:
                y = pmul(g, x)
                if y not in els:
                    els.add(y)
                    new.append(y)
                    if cap is not None and len(els) > cap:
                        raise CapExceeded(f"closure passed cap {cap}")
        bdy = new
    return els


class PermGroup:
    """A finite group of permutations of {1..degree}, with its element set
    enumerated and cached at construction."""

    def __init__(self, degree, generators, elements=None, name=None,
                 caps: Caps = DEFAULT_CAPS):
        self.degree = degree
        self.caps = caps
        e = identity(degree)
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise GroupParseError(f"not a permutation of degree {degree}: {g}")
            if g != e and g not in gens:
                gens.append(g)
        self.generators = tuple(sorted(gens))
        if elements is None:
            elements = mulclose(self.generators, seed={e}, cap=caps.enumeration)
        self.element_set = frozenset(elements)
        self.elements = tuple(sorted(self.element_set))
        self.order = len(self.elements)
        if not self.generators and self.order > 1:
            self.generators = tuple(sorted(greedy_generators(self.element_set, degree)))
        self.name = name
        self._hash = hash((degree, self.element_set))
        self._subgroup_cache = None

    # -- basics ---------------------------------------------------------

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.element_set

    def __eq__(self, other):
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self.element_set == other.element_set)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        nm = self.name or "PermGroup"
        return f"<{nm} deg={self.degree} order={self.order}>"

    @property
    def identity(self):
        return identity(self.degree)

    def is_trivial(self):
        return self.order == 1

    def is_abelian(self):
        gs = self.generators
        return all(pmul(a, b) == pmul(b, a) for a in gs for b in gs)

    def gens_json(self):
        return [cycle_string(g) for g in self.generators] or ["()"]

    # -- subgroup construction ------------------------------------------

    def subgroup(self, generators=(), elements=None, name=None) -> "Subgroup":
        if elements is None:
            elements = mulclose([tuple(g) for g in generators],
                                seed={self.identity}, cap=self.order)
        elements = frozenset(elements)
        if not elements <= self.element_set:
            raise GroupParseError("subgroup elements not inside the ambient group")
        return Subgroup(self, generators, elements, name=name)

    def trivial_subgroup(self):
        return self.subgroup(elements={self.identity}, name="1")

    def full_subgroup(self):
        return self.subgroup(generators=self.generators,
                             elements=self.element_set, name=self.name)

    def conjugate_subgroup(self, H: "Subgroup", g: Perm) -> "Subgroup":
        els = frozenset(conj(g, x) for x in H.element_set)
        return self.subgroup(generators=[conj(g, x) for x in H.generators],
                             elements=els)

    def generated_subgroup(self, *parts) -> "Subgroup":
        """Subgroup generated by subgroups and/or single permutations."""
        gens = []
        for p in parts:
            if isinstance(p, PermGroup):
                gens.extend(p.generators)
            else:
                gens.append(tuple(p))
        return self.subgroup(generators=gens)

    # -- element-level utilities ----------------------------------------

    def element_order_histogram(self):
        return Counter(porder(g) for g in self.elements)

    def p_elements(self, p):
        return [g for g in self.elements
                if g != self.identity and is_p_power(porder(g), p)]

    def conjugacy_classes(self):
        """Element conjugacy classes, each a sorted tuple, sorted by
        (class of identity first, then min element)."""
        seen = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            bdy = [g]
            while bdy:
                x = bdy.pop()
                for s in self.generators:
                    y = conj(s, x)
                    if y not in orbit:
                        orbit.add(y)
                        bdy.append(y)
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return classes

    def center(self) -> "Subgroup":
        els = [g for g in self.elements
               if all(pmul(g, s) == pmul(s, g) for s in self.generators)]
        return self.subgroup(elements=els, name="Z")

    def derived_subgroup(self) -> "Subgroup":
        comms = set()
        for a in self.generators:
            for b in self.generators:
                comms.add(pmul(pmul(a, b), pmul(pinv(a), pinv(b))))
        H = self.subgroup(generators=comms)
        return self.normal_closure(H)

    def normal_closure(self, H: "Subgroup") -> "Subgroup":
        els = set(H.element_set)
        gens = list(H.generators)
        changed = True
        while changed:
            changed = False
            for s in self.generators:
                for x in list(gens):
                    y = conj(s, x)
                    if y not in els:
                        gens.append(y)
                        els = mulclose(gens, seed=els, cap=self.order)
                        changed = True
        return self.subgroup(generators=gens, elements=els)

    def is_normal(self, H: "Subgroup") -> bool:
        return all(conj(s, x) in H.element_set
                   for s in self.generators for x in H.generators)

    def is_simple(self) -> bool:
        if self.order == 1:
            return False
        for cls in self.conjugacy_classes():
            g = cls[0]
            if g == self.identity:
                continue
            if self.normal_closure(self.subgroup(generators=[g])).order != self.order:
                return False
        return True

    # -- transporters and friends ---------------------------------------

    def transporter(self, P: "Subgroup", Q: "Subgroup"):
        """N_G(P,Q) = elements g with gPg^-1 <= Q, as a sorted list."""
        qset = Q.element_set
        pgens = P.generators or (self.identity,)
        return [g for g in self.elements
                if all(conj(g, x) in qset for x in pgens)]

    def normalizer(self, P: "Subgroup") -> "Subgroup":
        pset = P.element_set
        pgens = P.generators or (self.identity,)
        els = [g for g in self.elements if all(conj(g, x) in pset for x in pgens)]
        return self.subgroup(elements=els)

    def centralizer(self, P: "Subgroup") -> "Subgroup":
        pgens = P.generators or (self.identity,)
        els = [g for g in self.elements
               if all(pmul(g, x) == pmul(x, g) for x in pgens)]
        return self.subgroup(elements=els)

    def are_conjugate(self, P: "Subgroup", Q: "Subgroup"):
        """A g with gPg^-1 = Q, or None."""
        if P.order != Q.order:
            return None
        qset = Q.element_set
        pgens = P.generators or (self.identity,)
        for g in self.elements:
            if all(conj(g, x) in qset for x in pgens):
                return g
        return None

    # -- Sylow theory -----------------------------------------------------

    def sylow(self, p: int) -> "Subgroup":
        """A Sylow p-subgroup, grown by normalizer extension; certified by
        its order being the exact p-part of |G|."""
        target = p_part(self.order, p)
        P = self.trivial_subgroup()
        while P.order < target:
            N = self.normalizer(P)
            step = None
            for g in N.elements:
                if g not in P.element_set and is_p_power(porder(g), p):
                    step = g
                    break
            assert step is not None, "normalizer growth must supply a p-element"
            P = self.subgroup(generators=list(P.generators) + [step])
        assert P.order == target
        return P

    def sylow_class(self, p: int):
        """All conjugates of sylow(p), as a list of frozensets."""
        S = self.sylow(p)
        orbit = {S.element_set}
        bdy = [S.element_set]
        while bdy:
            els = bdy.pop()
            for g in self.generators:
                img = frozenset(conj(g, x) for x in els)
                if img not in orbit:
                    orbit.add(img)
                    bdy.append(img)
        return sorted(orbit, key=lambda s: sorted(s))

    def core_p(self, p: int) -> "Subgroup":
        """O_p(G): intersection of all Sylow p-subgroups."""
        sylows = self.sylow_class(p)
        core = set(sylows[0])
        for s in sylows[1:]:
            core &= s
        H = self.subgroup(elements=core)
        assert self.is_normal(H)
        return H

    def residual_pprime(self, p: int) -> "Subgroup":
        """O^{p'}(G): the subgroup generated by all Sylow p-subgroups,
        i.e. the normal closure of one of them."""
        H = self.normal_closure(self.sylow(p))
        assert self.is_normal(H) and (self.order // H.order) % p != 0
        return H

    def is_pprime_reduced_pconstrained(self, p: int) -> bool:
        Q = self.core_p(p)
        return self.centralizer(Q).element_set <= Q.element_set

    # -- quotients --------------------------------------------------------

    def quotient_action(self, N: "Subgroup") -> "QuotientAction":
        if not self.is_normal(N):
            raise NotNormal(f"subgroup of order {N.order} is not normal")
        return QuotientAction(self, N)

    # -- products ---------------------------------------------------------

    def product_set(self, A: "Subgroup", B: "Subgroup"):
        return {pmul(a, b) for a in A.element_set for b in B.element_set}

    def product_set_equals(self, A: "Subgroup", B: "Subgroup") -> bool:
        """Does AB = G as a set?  Decided by |A||B|/|A n B| with the
        containment check."""
        inter = A.element_set & B.element_set
        if A.order * B.order != self.order * len(inter):
            return False
        return self.product_set(A, B) == set(self.element_set)

    # -- subgroup lattice ---------------------------------------------------

    def subgroups(self):
        """The full subgroup lattice, by breadth-first cyclic extension,
        sorted by (order, element list).  Cached."""
        if self._subgroup_cache is not None:
            return self._subgroup_cache
        if self.order > self.caps.lattice:
            raise CapExceeded(f"|G|={self.order} over lattice cap {self.caps.lattice}")
        cyclic_reps = {}
        for g in self.elements:
            if g == self.identity:
                continue
            C = frozenset(mulclose([g], seed={self.identity}))
            cyclic_reps.setdefault(C, g)
        found = {frozenset({self.identity}): self.trivial_subgroup()}
        frontier = list(found.values())
        while frontier:
            new = []
            for H in frontier:
                for C, g in cyclic_reps.items():
                    if g in H.element_set:
                        continue
                    els = frozenset(mulclose(list(H.generators) + [g],
                                             seed=H.element_set, cap=self.order))
                    if els not in found:
                        K = Subgroup(self, list(H.generators) + [g], els)
                        found[els] = K
                        new.append(K)
            frontier = new
        lattice = sorted(found.values(), key=lambda h: (h.order, h.elements))
        self._subgroup_cache = lattice
        return lattice

    def subgroup_conjugacy_classes(self):
        """Partition of subgroups() into conjugacy classes (lists of
        subgroups, class rep first in canonical order)."""
        lattice = self.subgroups()
        index = {H.element_set: i for i, H in enumerate(lattice)}
        unseen = set(range(len(lattice)))
        classes = []
        for i, H in enumerate(lattice):
            if i not in unseen:
                continue
            orbit = {i}
            bdy = [H.element_set]
            while bdy:
                els = bdy.pop()
                for g in self.generators:
                    img = frozenset(conj(g, x) for x in els)
                    j = index[img]
                    if j not in orbit:
                        orbit.add(j)
                        bdy.append(frozenset(img))
            unseen -= orbit
            classes.append([lattice[j] for j in sorted(orbit)])
        return classes

    def overgroups(self, H: "Subgroup"):
        """All K with H <= K <= G, by extension over H-double-coset
        representatives (⟨H,g⟩ depends only on HgH)."""
        found = {H.element_set: H}
        frontier = [H]
        while frontier:
            new = []
            for K in frontier:
                covered = set(K.element_set)
                kelems = K.elements
                for g in self.elements:
                    if g in covered:
                        continue
                    kg = [pmul(k, g) for k in kelems]
                    for x in kg:
                        for k2 in kelems:
                            covered.add(pmul(x, k2))
                    els = frozenset(mulclose(list(K.generators) + [g],
                                             seed=K.element_set, cap=self.order))
                    if els not in found:
                        L = Subgroup(self, list(K.generators) + [g], els)
                        found[els] = L
                        new.append(L)
            frontier = new
        return sorted(found.values(), key=lambda h: (h.order, h.elements))

    def p_subgroups(self, p: int):
        """All p-subgroups (including the trivial one), by extension with
        p-elements; exact but only sensible at desk scale."""
        pels = self.p_elements(p)
        bound = p_part(self.order, p)
        found = {frozenset({self.identity}): self.trivial_subgroup()}
        frontier = list(found.values())
        while frontier:
            new = []
            for H in frontier:
                if H.order == bound:
                    continue
                for g in pels:
                    if g in H.element_set:
                        continue
                    els = mulclose(list(H.generators) + [g],
                                   seed=H.element_set, cap=self.order)
                    if len(els) > bound or not is_p_power(len(els), p):
                        continue
                    els = frozenset(els)
                    if els not in found:
                        K = Subgroup(self, list(H.generators) + [g], els)
                        found[els] = K
                        new.append(K)
            frontier = new
        return sorted(found.values(), key=lambda h: (h.order, h.elements))

    def p_subgroup_class_reps(self, p: int):
        """One representative per conjugacy class of p-subgroups."""
        subs = self.p_subgroups(p)
        index = {H.element_set: i for i, H in enumerate(subs)}
        unseen = set(range(len(subs)))
        reps = []
        for i, H in enumerate(subs):
            if i not in unseen:
                continue
            orbit = {i}
            bdy = [H.element_set]
            while bdy:
                els = bdy.pop()
                for g in self.generators:
                    img = frozenset(conj(g, x) for x in els)
                    j = index[img]
                    if j not in orbit:
                        orbit.add(j)
                        bdy.append(img)
            unseen -= orbit
            reps.append(H)
        return reps


class Subgroup(PermGroup):
    """A subgroup of a fixed ambient PermGroup; it is itself a PermGroup."""

    def __init__(self, ambient: PermGroup, generators, elements, name=None):
        self.ambient = ambient
        super().__init__(ambient.degree, generators, elements=elements,
                         name=name, caps=ambient.caps)

    def __repr__(self):
        nm = self.name or "Subgroup"
        return f"<{nm} order={self.order} of {self.ambient!r}>"


class QuotientAction:
    """Faithful permutation action of G/N on the left cosets of N.

    Cosets are ordered by their minimal element, so the quotient group and
    all projections are reproducible.
    """

    def __init__(self, G: PermGroup, N: Subgroup):
        self.G = G
        self.N = N
        nels = sorted(N.element_set)
        coset_of = {}
        reps = []
        for g in G.elements:
            if g in coset_of:
                continue
            idx = len(reps)
            reps.append(g)
            for n in nels:
                coset_of[pmul(g, n)] = idx
        self.reps = reps
        self.coset_of = coset_of
        gen_perms = [self.project(g) for g in G.generators]
        self.group = PermGroup(len(reps), gen_perms, caps=G.caps)
        assert self.group.order * N.order == G.order
        # kernel of the action is exactly N
        assert all(self.project(n) == self.group.identity for n in N.generators)

    def project(self, g: Perm) -> Perm:
        return tuple(self.coset_of[pmul(g, r)] for r in self.reps)

    def preimage_subgroup(self, K: PermGroup) -> Subgroup:
        """Full preimage in G of a subgroup K of the quotient group."""
        kset = K.element_set
        els = [g for g in self.G.elements if self.project(g) in kset]
        return self.G.subgroup(elements=els)


# -- maps ----------------------------------------------------------------


class GroupMap:
    """A total map between two permutation groups, stored element-by-element.

    Used both for abstract isomorphisms (possibly across different ambient
    groups and degrees) and for fusion-system morphisms.
    """

    __slots__ = ("source", "target", "mapping", "_key")

    def __init__(self, source: PermGroup, target: PermGroup, mapping: dict):
        self.source = source
        self.target = target
        self.mapping = mapping
        self._key = (source.element_set, target.element_set,
                     tuple(mapping[x] for x in source.elements))

    def __call__(self, x: Perm) -> Perm:
        return self.mapping[x]

    def __eq__(self, other):
        return isinstance(other, GroupMap) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (f"<GroupMap {self.source.order}->{self.target.order} "
                f"{[cycle_string(g) for g in self.source.generators]} |-> "
                f"{[cycle_string(self.mapping[g]) for g in self.source.generators]}>")

    @classmethod
    def inclusion(cls, P: PermGroup, Q: PermGroup):
        return cls(P, Q, {x: x for x in P.elements})

    @classmethod
    def conjugation(cls, P: PermGroup, Q: PermGroup, g: Perm):
        return cls(P, Q, {x: conj(g, x) for x in P.elements})

    def is_homomorphism(self) -> bool:
        m = self.mapping
        els = self.source.elements
        if set(m) != set(els):
            return False
        if any(y not in self.target.element_set for y in m.values()):
            return False
        return all(m[pmul(a, b)] == pmul(m[a], m[b]) for a in els for b in els)

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)

    def image_elements(self):
        return frozenset(self.mapping.values())

    def image_subgroup(self, ambient: PermGroup | None = None) -> Subgroup:
        amb = ambient or getattr(self.target, "ambient", self.target)
        return amb.subgroup(elements=self.image_elements())

    def restrict(self, P: PermGroup) -> "GroupMap":
        assert P.element_set <= self.source.element_set
        return GroupMap(P, self.target, {x: self.mapping[x] for x in P.elements})

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other."""
        assert other.image_elements() <= self.source.element_set
        return GroupMap(other.source, self.target,
                        {x: self.mapping[y] for x, y in other.mapping.items()})

    def inverse(self) -> "GroupMap":
        assert self.is_injective() and len(self.mapping) == self.target.order
        return GroupMap(self.target, self.source,
                        {y: x for x, y in self.mapping.items()})


def _close_partial_hom(G: PermGroup, H: PermGroup, pairs):
    """Close generator assignments into a homomorphism on the subgroup the
    pairs generate.  Returns the mapping dict (possibly partial on G), or
    None on a multiplicativity conflict."""
    m = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for g, h in pairs:
                y = pmul(x, g)
                img = pmul(m[x], h)
                if y in m:
                    if m[y] != img:
                        return None
                else:
                    m[y] = img
                    new.append(y)
        frontier = new
    return m


def isomorphism(G: PermGroup, H: PermGroup, pinned: GroupMap | None = None):
    """An isomorphism G -> H extending `pinned`, or None.

    Deterministic backtracking over generator images, pruned by element
    order statistics, derived-subgroup order and center order.
    """
    if G.order != H.order:
        return None
    if G.order > G.caps.isomorphism:
        raise CapExceeded(f"|G|={G.order} over isomorphism cap")
    if G.element_order_histogram() != H.element_order_histogram():
        return None
    if G.center().order != H.center().order:
        return None
    if G.derived_subgroup().order != H.derived_subgroup().order:
        return None

    fixed_pairs = []
    current = {G.identity}
    if pinned is not None:
        if not (pinned.is_homomorphism() and pinned.is_injective()):
            raise GroupParseError("pinned assignment is not a monomorphism")
        fixed_pairs = [(x, pinned.mapping[x]) for x in pinned.source.generators]
        current = mulclose([x for x, _ in fixed_pairs], seed=current)
    gen_seq = []
    for g in G.elements:
        if g not in current:
            gen_seq.append(g)
            current = mulclose([g], seed=current)
    if len(current) != G.order:
        raise AssertionError("generating sequence failed to close")

    by_order = {}
    for h in H.elements:
        by_order.setdefault(porder(h), []).append(h)

    def extend(i, pairs):
        if i == len(gen_seq):
            m = _close_partial_hom(G, H, pairs or [(G.identity, H.identity)])
            if m is not None and len(m) == G.order and len(set(m.values())) == G.order:
                return GroupMap(G, H, m)
            return None
        g = gen_seq[i]
        for h in by_order.get(porder(g), ()):
            trial = pairs + [(g, h)]
            m = _close_partial_hom(G, H, trial)
            if m is None or len(set(m.values())) != len(m):
                continue
            got = extend(i + 1, trial)
            if got is not None:
                return got
        return None

    return extend(0, fixed_pairs)


def strongly_p_embedded_subgroup(X: PermGroup, p: int):
    """A strongly p-embedded subgroup M < X, or None.

    M must contain a full Sylow p-subgroup Q != 1 of X with gQg^-1 n Q = 1
    for every g in X outside M.  Decided by a direct scan over the subgroup
    lattice of X.
    """
    target = p_part(X.order, p)
    if target == 1:
        return None
    e = X.identity
    for M in X.subgroups():
        if M.order == X.order or M.order % target != 0:
            continue
        Q = M.sylow(p)
        if Q.order != target:
            continue
        qset = Q.element_set
        ok = True
        for g in X.elements:
            if g in M.element_set:
                continue
            meet = {x for x in qset if conj(g, x) in qset}
            if meet != {e}:
                ok = False
                break
        if ok:
            return M
    return None


def strongly_p_embedded_exists(X: PermGroup, p: int) -> bool:
    return strongly_p_embedded_subgroup(X, p) is not None


def regular_perm_group(items, mul):
    """Realize an abstract finite group (given as a list of hashable
    elements with a multiplication callable) as a PermGroup via its regular
    action.  Returns (group, to_perm) with to_perm a dict item -> Perm."""
    items = list(items)
    index = {x: i for i, x in enumerate(items)}
    n = len(items)
    to_perm = {}
    for x in items:
        to_perm[x] = tuple(index[mul(x, y)] for y in items)
    group = PermGroup(n, list(to_perm.values()),
                      elements=set(to_perm.values()))
    assert group.order == n
    return group, to_perm


# -- standard constructions ----------------------------------------------


def symmetric(n: int, name=None) -> PermGroup:
    if n <= 1:
        return PermGroup(max(n, 1), [], name=name or f"S{n}")
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens, name=name or f"S{n}")


def alternating(n: int, name=None) -> PermGroup:
    if n <= 2:
        return PermGroup(max(n, 1), [], name=name or f"A{n}")
    gens = [parse_cycles("(1 2 3)", n)]
    if n > 3:
        if n % 2 == 1:
            gens.append(tuple(list(range(1, n)) + [0]))
        else:
            gens.append(tuple([0] + list(range(2, n)) + [1]))
    return PermGroup(n, gens, name=name or f"A{n}")


def cyclic(n: int, name=None) -> PermGroup:
    if n == 1:
        return PermGroup(1, [], name=name or "C1")
    return PermGroup(n, [tuple(list(range(1, n)) + [0])], name=name or f"C{n}")


def dihedral(n: int, name=None) -> PermGroup:
    """Dihedral group of order 2n on n points."""
    rot = tuple(list(range(1, n)) + [0])
    flip = tuple((n - i) % n for i in range(n))
    return PermGroup(n, [rot, flip], name=name or f"D{2 * n}")


def direct_product(G: PermGroup, H: PermGroup, name=None):
    """(product group, embed_left, embed_right) on disjoint point sets."""
    d = G.degree + H.degree

    def left(g):
        return tuple(g) + tuple(x + G.degree for x in range(H.degree))

    def right(h):
        return tuple(range(G.degree)) + tuple(x + G.degree for x in h)

    gens = [left(g) for g in G.generators] + [right(h) for h in H.generators]
    P = PermGroup(d, gens, name=name)
    return P, left, right


# -- group files -----------------------------------------------------------


def group_from_dict(data: dict, name=None, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    try:
        degree = int(data["degree"])
        raw = data["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupParseError(f"bad group definition: {exc}")
    if degree < 1:
        raise GroupParseError("degree must be positive")
    gens = [parse_cycles(s, degree) for s in raw]
    return PermGroup(degree, gens, name=name or data.get("name"), caps=caps)


def load_group_file(path, caps: Caps = DEFAULT_CAPS) -> PermGroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise GroupParseError(f"cannot read group file {path}: {exc}")
    return group_from_dict(data, caps=caps)


def group_to_dict(G: PermGroup) -> dict:
    return {"degree": G.degree, "generators": G.gens_json()}
