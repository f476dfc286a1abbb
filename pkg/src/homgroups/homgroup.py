"""Finite Hom-groups given by tables, their morphisms and Hom-subgroups.

Elements are the integers ``0..order-1``.  A :class:`HomGroup` only checks
that its tables are well shaped; whether they satisfy the Hom-group axioms
is decided by :func:`verify_hom_group`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .reports import AxiomReport, ShapeError


@dataclass(frozen=True)
class HomGroup:
    order: int
    mul: tuple
    alpha: tuple
    inv: tuple
    unit: int

    def __post_init__(self):
        n = self.order
        if not isinstance(n, int) or n < 1:
            raise ShapeError(f"order must be a positive integer, got {n!r}")
        mul = tuple(tuple(r) for r in self.mul)
        if len(mul) != n or any(len(r) != n for r in mul):
            raise ShapeError(f"mul must be {n}x{n}")
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "inv", tuple(self.inv))
        for name, table in (("alpha", self.alpha), ("inv", self.inv)):
            if len(table) != n:
                raise ShapeError(f"{name} must have length {n}")
        entries = [x for r in mul for x in r] + list(self.alpha) + list(self.inv) + [self.unit]
        for x in entries:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise ShapeError(f"table entry {x!r} out of range 0..{n - 1}")

    @property
    def elements(self):
        return range(self.order)

    def m(self, g, h):
        return self.mul[g][h]

    def alpha_power(self, g, k):
        a = self.alpha
        for _ in range(k):
            g = a[g]
        return g

    def alpha_map(self, t):
        a = self.alpha
        return tuple(a[g] for g in t)

    def is_identity_twist(self):
        return all(self.alpha[g] == g for g in self.elements)

    def is_commutative(self):
        mul = self.mul
        return all(mul[g][h] == mul[h][g] for g in self.elements for h in self.elements)

    @classmethod
    def from_group(cls, order, mul, inv, unit):
        """An ordinary group, i.e. a Hom-group with identity twist."""
        return cls(order, mul, tuple(range(order)), inv, unit)


def verify_hom_group(G: HomGroup, bound: int | None = None) -> AxiomReport:
    """Check every instance of every Hom-group axiom.

    ``bound`` caps the search for the Hom-invertibility exponent; it
    defaults to the order, which is always enough.
    """
    n, mul, a, inv, e = G.order, G.mul, G.alpha, G.inv, G.unit
    rep = AxiomReport("hom_group")
    R = range(n)
    for g, h, k in product(R, R, R):
        lhs, rhs = mul[a[g]][mul[h][k]], mul[mul[g][h]][a[k]]
        if lhs != rhs:
            rep.add("hom_associativity", (g, h, k), lhs, rhs)
    for g, k in product(R, R):
        lhs, rhs = a[mul[g][k]], mul[a[g]][a[k]]
        if lhs != rhs:
            rep.add("alpha_multiplicative", (g, k), lhs, rhs)
    for g in R:
        if mul[g][e] != a[g]:
            rep.add("unitality_right", (g,), mul[g][e], a[g])
        if mul[e][g] != a[g]:
            rep.add("unitality_left", (g,), mul[e][g], a[g])
    if a[e] != e:
        rep.add("alpha_unit", (e,), a[e], e)
    for g, h in product(R, R):
        lhs, rhs = inv[mul[g][h]], mul[inv[h]][inv[g]]
        if lhs != rhs:
            rep.add("inverse_antimorphism", (g, h), lhs, rhs)
    k_max = n if bound is None else bound
    for g in R:
        if _invertibility_index(G, g, k_max) is None:
            rep.add("hom_invertibility", (g,), (mul[g][inv[g]], mul[inv[g]][g]), e)
    return rep


def _invertibility_index(G, g, k_max):
    x, y = G.mul[g][G.inv[g]], G.mul[G.inv[g]][g]
    for k in range(k_max + 1):
        if x == G.unit and y == G.unit:
            return k
        x, y = G.alpha[x], G.alpha[y]
    return None


class InvertibilityError(RuntimeError):
    pass


def invertibility_profile(G: HomGroup) -> tuple:
    """Smallest ``k >= 0`` with ``alpha^k(g g^-1) = alpha^k(g^-1 g) = 1``, per element."""
    out = []
    for g in G.elements:
        k = _invertibility_index(G, g, G.order)
        if k is None:
            raise InvertibilityError(f"no invertibility exponent <= {G.order} for element {g}")
        out.append(k)
    return tuple(out)


class NotHomomorphism(ValueError):
    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def check_group(G: HomGroup) -> AxiomReport:
    """Ordinary group axioms (identity twist) for the input of :func:`twist_group`."""
    rep = verify_hom_group(G)
    if not G.is_identity_twist():
        rep.add("identity_twist", (), G.alpha, tuple(G.elements))
    return rep


def twist_group(group: HomGroup, endo) -> HomGroup:
    """The twisted Hom-group with product ``alpha(gh)`` and twist ``alpha``."""
    rep = check_group(group)
    if rep.violations:
        raise ValueError(f"not an associative group: {rep.axioms()}")
    endo = tuple(endo)
    if len(endo) != group.order or any(not 0 <= x < group.order for x in endo):
        raise ShapeError("endomorphism table has the wrong shape")
    mul = group.mul
    for g, h in product(group.elements, group.elements):
        if endo[mul[g][h]] != mul[endo[g]][endo[h]]:
            raise NotHomomorphism(f"endo({g}*{h}) != endo({g})*endo({h})", (g, h))
    new_mul = tuple(tuple(endo[mul[g][h]] for h in group.elements) for g in group.elements)
    return HomGroup(group.order, new_mul, endo, group.inv, group.unit)


def enumerate_morphisms(G: HomGroup, H: HomGroup):
    """All Hom-group morphisms ``G -> H`` in lexicographic order of their tables.

    Backtracking over element images; every constraint is checked as soon
    as all of its elements have been assigned.
    """
    n = G.order
    gm, hm, ga, ha = G.mul, H.mul, G.alpha, H.alpha
    # constraints that become checkable once element i is assigned
    pending = [[] for _ in range(n)]
    for g, k in product(range(n), range(n)):
        pending[max(g, k, gm[g][k])].append(("mul", g, k))
    for g in range(n):
        pending[max(g, ga[g])].append(("alpha", g, None))
    f = [None] * n
    out = []

    def ok(i):
        for kind, g, k in pending[i]:
            if kind == "mul":
                if f[gm[g][k]] != hm[f[g]][f[k]]:
                    return False
            elif ha[f[g]] != f[ga[g]]:
                return False
        return True

    def rec(i):
        if i == n:
            out.append(tuple(f))
            return
        for x in range(H.order):
            f[i] = x
            if ok(i):
                rec(i + 1)
        f[i] = None

    rec(0)
    return out


def enumerate_endomorphisms(group: HomGroup):
    """Endomorphism tables of an ordinary group, lexicographically ordered."""
    return enumerate_morphisms(group, group)


@dataclass(frozen=True)
class HomGroupMorphism:
    source: HomGroup
    target: HomGroup
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.source.order:
            raise ShapeError("morphism table length must equal source order")
        if any(not 0 <= x < self.target.order for x in self.map):
            raise ShapeError("morphism image out of range")

    def __call__(self, g):
        return self.map[g]

    def compose(self, other: "HomGroupMorphism") -> "HomGroupMorphism":
        """``self ∘ other``."""
        if other.target != self.source:
            raise ValueError("morphisms are not composable")
        return HomGroupMorphism(other.source, self.target, tuple(self.map[x] for x in other.map))

    @property
    def unit_preserving(self):
        return self.map[self.source.unit] == self.target.unit


def verify_morphism(f, G: HomGroup, H: HomGroup) -> AxiomReport:
    f = tuple(f)
    if len(f) != G.order or any(not isinstance(x, int) or not 0 <= x < H.order for x in f):
        raise ShapeError("morphism table does not match the groups")
    rep = AxiomReport("morphism")
    for g in G.elements:
        lhs, rhs = H.alpha[f[g]], f[G.alpha[g]]
        if lhs != rhs:
            rep.add("twist_compatible", (g,), lhs, rhs)
    for g, k in product(G.elements, G.elements):
        lhs, rhs = f[G.mul[g][k]], H.mul[f[g]][f[k]]
        if lhs != rhs:
            rep.add("multiplicative", (g, k), lhs, rhs)
    rep.info["unit_preserving"] = f[G.unit] == H.unit
    return rep


def unit_image_property(f: HomGroupMorphism):
    """Return ``(n, holds)`` where n is the invertibility index of ``f(1)``
    and ``holds`` says ``beta^(n+2)(f(1)) = 1``."""
    H = f.target
    u = f(f.source.unit)
    n = _invertibility_index(H, u, H.order)
    if n is None:
        return None, False
    return n, H.alpha_power(u, n + 2) == H.unit


def check_hom_subgroup(G: HomGroup, S):
    """Decide whether ``S`` is a Hom-subgroup; returns ``(ok, witness)``."""
    S = sorted(set(S))
    if not S:
        raise ValueError("empty subset")
    Sset = set(S)
    if G.unit not in Sset:
        return False, ("unit", G.unit)
    for g in S:
        if G.alpha[g] not in Sset:
            return False, ("alpha", g, G.alpha[g])
        if G.inv[g] not in Sset:
            return False, ("inv", g, G.inv[g])
        for h in S:
            if G.mul[g][h] not in Sset:
                return False, ("mul", g, h, G.mul[g][h])
    sub = restrict(G, S)
    rep = verify_hom_group(sub)
    if rep.violations:
        v = rep.violations[0]
        return False, (v.axiom,) + tuple(S[i] for i in v.witness)
    return True, None


def restrict(G: HomGroup, S) -> HomGroup:
    """Induced structure on a closed subset, relabelled ``0..len(S)-1`` in sorted order."""
    S = sorted(set(S))
    idx = {g: i for i, g in enumerate(S)}
    mul = [[idx[G.mul[g][h]] for h in S] for g in S]
    return HomGroup(len(S), mul, [idx[G.alpha[g]] for g in S], [idx[G.inv[g]] for g in S],
                    idx[G.unit])


def kernel_of_morphism(f: HomGroupMorphism):
    """``(kernel, certified)``; ``certified`` is None when ``f(1) != 1``."""
    H = f.target
    ker = tuple(g for g in f.source.elements if f(g) == H.unit)
    if not f.unit_preserving:
        return ker, None
    ok, _ = check_hom_subgroup(f.source, ker)
    return ker, ok


def find_isomorphism(G: HomGroup, H: HomGroup):
    """A bijective morphism ``G -> H`` as a table, or None."""
    if G.order != H.order:
        return None
    n = G.order
    f = [None] * n
    used = [False] * n

    def consistent(i):
        for g in range(i + 1):
            for k in range(i + 1):
                gk = G.mul[g][k]
                if gk <= i and f[gk] != H.mul[f[g]][f[k]]:
                    return False
            ag = G.alpha[g]
            if ag <= i and f[ag] != H.alpha[f[g]]:
                return False
        return True

    def rec(i):
        if i == n:
            return True
        for x in range(n):
            if used[x]:
                continue
            if i == G.unit and x != H.unit:
                continue
            f[i], used[x] = x, True
            if consistent(i) and rec(i + 1):
                return True
            f[i], used[x] = None, False
        return False

    return tuple(f) if rec(0) else None
