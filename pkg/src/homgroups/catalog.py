"""Small groups by Cayley table and the corpus of twisted Hom-groups built from them."""

from __future__ import annotations

from itertools import permutations

from .homgroup import HomGroup, enumerate_endomorphisms, twist_group


def cyclic_group(n: int) -> HomGroup:
    mul = [[(g + h) % n for h in range(n)] for g in range(n)]
    return HomGroup.from_group(n, mul, [(-g) % n for g in range(n)], 0)


def klein_four_group() -> HomGroup:
    mul = [[g ^ h for h in range(4)] for g in range(4)]
    return HomGroup.from_group(4, mul, list(range(4)), 0)


def symmetric_group(k: int) -> HomGroup:
    """Permutations of ``range(k)`` in lexicographic order; ``(g*h)(x) = g(h(x))``."""
    perms = list(permutations(range(k)))
    idx = {p: i for i, p in enumerate(perms)}
    mul = [[idx[tuple(g[h[x]] for x in range(k))] for h in perms] for g in perms]
    inv = []
    for g in perms:
        q = [0] * k
        for x, y in enumerate(g):
            q[y] = x
        inv.append(idx[tuple(q)])
    return HomGroup.from_group(len(perms), mul, inv, idx[tuple(range(k))])


def trivial_group() -> HomGroup:
    return cyclic_group(1)


def cyclic_twist(n: int, c: int) -> HomGroup:
    """Cyclic group of order n twisted by ``x -> c*x``."""
    return twist_group(cyclic_group(n), [(c * x) % n for x in range(n)])


def small_groups(max_order: int = 6):
    """Named groups (one per isomorphism class) up to order 6."""
    out = []
    for n in range(1, min(max_order, 6) + 1):
        out.append((f"C{n}", cyclic_group(n)))
        if n == 4:
            out.append(("V4", klein_four_group()))
        if n == 6:
            out.append(("S3", symmetric_group(3)))
    return out


def twisted_corpus(max_order: int = 4):
    """Every twisted Hom-group ``G_alpha`` for the small groups up to ``max_order``.

    Names look like ``C4[0,2,0,2]`` (the endomorphism table in brackets).
    """
    out = []
    for name, G in small_groups(max_order):
        for endo in enumerate_endomorphisms(G):
            out.append((f"{name}[{','.join(map(str, endo))}]", twist_group(G, endo)))
    return out
