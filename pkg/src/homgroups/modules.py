"""Coefficient modules over a Hom-group.

Conventions: the left action ``g.m`` is ``left_action[g] @ m`` and the right
action ``m.g`` is ``right_action[g] @ m``, so ``(m.h).g`` is
``right_action[g] @ right_action[h] @ m``.  With these conventions every
module axiom is a plain matrix identity.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

from .homgroup import HomGroup
from .linalg import Field, Matrix, inverse
from .reports import AxiomReport, HypothesisUnmet, ShapeError

FLAVORS = ("dual_left", "dual_right", "left", "right", "bimodule", "dual_bimodule")

_NEEDS = {
    "dual_left": (True, False),
    "dual_right": (False, True),
    "left": (True, False),
    "right": (False, True),
    "bimodule": (True, True),
    "dual_bimodule": (True, True),
}


@dataclass(frozen=True)
class ActionModule:
    dim: int
    field: Field
    beta: Matrix
    flavor: str
    left_action: tuple | None = None
    right_action: tuple | None = None

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        d = self.dim
        if self.beta.shape != (d, d):
            raise ShapeError(f"beta must be {d}x{d}")
        for name in ("left_action", "right_action"):
            fam = getattr(self, name)
            if fam is None:
                continue
            fam = tuple(fam)
            object.__setattr__(self, name, fam)
            for m in fam:
                if m.shape != (d, d) or m.field != self.field:
                    raise ShapeError(f"{name} matrices must be {d}x{d} over {self.field}")
        need_left, need_right = _NEEDS[self.flavor]
        if need_left and self.left_action is None:
            raise ValueError(f"flavor {self.flavor} needs a left action")
        if need_right and self.right_action is None:
            raise ValueError(f"flavor {self.flavor} needs a right action")

    def as_flavor(self, flavor):
        """Same data, read as another flavor (e.g. a bimodule as a right module)."""
        need_left, need_right = _NEEDS[flavor]
        return replace(self, flavor=flavor,
                       left_action=self.left_action if need_left else None,
                       right_action=self.right_action if need_right else None)

    def conjugate(self, P: Matrix) -> "ActionModule":
        """Change of basis ``X -> P X P^-1`` applied to every structure matrix."""
        Pi = inverse(P)

        def c(X):
            return P @ X @ Pi

        return ActionModule(
            self.dim, self.field, c(self.beta), self.flavor,
            None if self.left_action is None else tuple(map(c, self.left_action)),
            None if self.right_action is None else tuple(map(c, self.right_action)))


def _check_family_length(G, M):
    for fam in (M.left_action, M.right_action):
        if fam is not None and len(fam) != G.order:
            raise ShapeError(f"action family has {len(fam)} entries, group has order {G.order}")


def _left_identities(G, M, dual, rep):
    rho, beta, a, mul = M.left_action, M.beta, G.alpha, G.mul
    for g, h in product(G.elements, G.elements):
        if dual:
            lhs, rhs = rho[g] @ rho[a[h]], beta @ rho[mul[g][h]]
        else:
            lhs, rhs = rho[mul[g][h]] @ beta, rho[a[g]] @ rho[h]
        if lhs != rhs:
            rep.add("dual_left" if dual else "left", (g, h), lhs, rhs)
    if rho[G.unit] != beta:
        rep.add("left_unit", (G.unit,), rho[G.unit], beta)


def _right_identities(G, M, dual, rep):
    sig, beta, a, mul = M.right_action, M.beta, G.alpha, G.mul
    for g, h in product(G.elements, G.elements):
        if dual:
            lhs, rhs = sig[g] @ sig[a[h]], beta @ sig[mul[h][g]]
        else:
            lhs, rhs = sig[mul[g][h]] @ beta, sig[a[h]] @ sig[g]
        if lhs != rhs:
            rep.add("dual_right" if dual else "right", (g, h), lhs, rhs)
    if sig[G.unit] != beta:
        rep.add("right_unit", (G.unit,), sig[G.unit], beta)


def left_equivariance_witness(G, M):
    """First ``g`` with ``rho(alpha g) beta != beta rho(g)``, or None."""
    rho, beta = M.left_action, M.beta
    for g in G.elements:
        if rho[G.alpha[g]] @ beta != beta @ rho[g]:
            return g
    return None


def right_equivariance_witness(G, M):
    """First ``g`` with ``sigma(alpha g) beta != beta sigma(g)``, or None."""
    sig, beta = M.right_action, M.beta
    for g in G.elements:
        if sig[G.alpha[g]] @ beta != beta @ sig[g]:
            return g
    return None


def verify_module(G: HomGroup, M: ActionModule) -> AxiomReport:
    """Exhaustively check the axioms of ``M.flavor`` over ``G``.

    Also records the two beta-equivariance flags (``info``), which gate the
    homology builders and the Hochschild reductions.
    """
    _check_family_length(G, M)
    rep = AxiomReport(f"module:{M.flavor}")
    fl = M.flavor
    if fl in ("dual_left", "dual_bimodule"):
        _left_identities(G, M, True, rep)
    if fl in ("dual_right", "dual_bimodule"):
        _right_identities(G, M, True, rep)
    if fl in ("left", "bimodule"):
        _left_identities(G, M, False, rep)
    if fl in ("right", "bimodule"):
        _right_identities(G, M, False, rep)
    rho, sig, a = M.left_action, M.right_action, G.alpha
    if fl == "bimodule":
        for g, k in product(G.elements, G.elements):
            lhs, rhs = rho[a[g]] @ sig[k], sig[a[k]] @ rho[g]
            if lhs != rhs:
                rep.add("bimodule", (g, k), lhs, rhs)
    if fl == "dual_bimodule":
        # a.(v.alpha(b)) = (alpha(a).v).b -- the compatibility the Hochschild
        # cofaces need; the other ordering is only recorded
        literal = True
        for g, k in product(G.elements, G.elements):
            lhs, rhs = rho[g] @ sig[a[k]], sig[k] @ rho[a[g]]
            if lhs != rhs:
                rep.add("dual_bimodule", (g, k), lhs, rhs)
            if rho[a[g]] @ sig[k] != sig[a[k]] @ rho[g]:
                literal = False
        rep.info["twisted_bimodule_identity"] = literal
    if rho is not None:
        w = left_equivariance_witness(G, M)
        rep.info["left_beta_equivariant"] = w is None
        if w is not None:
            rep.info["left_equivariance_witness"] = w
    if sig is not None:
        w = right_equivariance_witness(G, M)
        rep.info["right_beta_equivariant"] = w is None
        if w is not None:
            rep.info["right_equivariance_witness"] = w
    return rep


def _require(G, M, flavors):
    if M.flavor not in flavors:
        raise ValueError(f"expected a {' or '.join(flavors)} module, got {M.flavor}")
    rep = verify_module(G, M)
    if rep.violations:
        raise ValueError(f"module fails {M.flavor} axioms: {rep.axioms()}")
    return rep


# ---------------------------------------------------------------------------
# constructions


def scalar_module(G: HomGroup, field: Field, c=1, flavor="dual_left", dim=1) -> ActionModule:
    """Every structure map equal to ``c`` times the identity.

    Satisfies the axioms of every flavor and both equivariances; ``c = 1``
    is the trivial module.
    """
    X = Matrix.scalar(dim, c, field)
    need_left, need_right = _NEEDS[flavor]
    fam = tuple(X for _ in G.elements)
    return ActionModule(dim, field, X, flavor, fam if need_left else None,
                        fam if need_right else None)


def trivial_module(G, field, flavor="dual_left"):
    return scalar_module(G, field, 1, flavor)


def _perm(n, field, f):
    """Matrix sending basis vector e_h to e_{f(h)}."""
    return Matrix.from_triplets(n, n, field, [(f(h), h, 1) for h in range(n)])


def regular_bimodule(G: HomGroup, field: Field) -> ActionModule:
    """The Hom-group algebra as a bimodule over G by multiplication, beta = alpha."""
    n, mul = G.order, G.mul
    rho = tuple(_perm(n, field, lambda h, g=g: mul[g][h]) for g in G.elements)
    sig = tuple(_perm(n, field, lambda h, g=g: mul[h][g]) for g in G.elements)
    beta = _perm(n, field, lambda h: G.alpha[h])
    return ActionModule(n, field, beta, "bimodule", rho, sig)


def regular_dual_bimodule(G: HomGroup, field: Field) -> ActionModule:
    """``(KG)*`` with ``(g.f)(m) = f(m.g)`` and ``(f.g)(m) = f(g.m)``."""
    return linear_dual(G, regular_bimodule(G, field))


def linear_dual(G: HomGroup, M: ActionModule) -> ActionModule:
    """Algebraic dual with transposed structure maps.

    right -> dual_left, left -> dual_right, bimodule -> dual_bimodule.
    """
    target = {"right": "dual_left", "left": "dual_right", "bimodule": "dual_bimodule"}
    _require(G, M, tuple(target))
    T = lambda fam: None if fam is None else tuple(X.transpose() for X in fam)  # noqa: E731
    # the right action of M becomes the left action of M* and vice versa
    return ActionModule(M.dim, M.field, M.beta.transpose(), target[M.flavor],
                        T(M.right_action), T(M.left_action))


def _swap_by_inverse(G, fam):
    return tuple(fam[G.inv[g]] for g in G.elements)


def dual_right_to_dual_left(G, M):
    """Left action ``g.m := m.g^-1``."""
    _require(G, M, ("dual_right",))
    return ActionModule(M.dim, M.field, M.beta, "dual_left",
                        _swap_by_inverse(G, M.right_action), None)


def dual_left_to_dual_right(G, M):
    """Right action ``m.g := g^-1.m``."""
    _require(G, M, ("dual_left",))
    return ActionModule(M.dim, M.field, M.beta, "dual_right", None,
                        _swap_by_inverse(G, M.left_action))


def right_module_to_left(G, M):
    _require(G, M, ("right",))
    return ActionModule(M.dim, M.field, M.beta, "left", _swap_by_inverse(G, M.right_action), None)


def left_module_to_right(G, M):
    _require(G, M, ("left",))
    return ActionModule(M.dim, M.field, M.beta, "right", None, _swap_by_inverse(G, M.left_action))


def trivialize_right_action(G, M):
    """Dual bimodule with the given left action and right action ``m.g = beta(m)``.

    Requires left beta-equivariance, the hypothesis of the cohomological
    Hochschild reduction.
    """
    _require(G, M, ("dual_left",))
    w = left_equivariance_witness(G, M)
    if w is not None:
        raise HypothesisUnmet(f"rho(alpha({w})) beta != beta rho({w})", (w,))
    return ActionModule(M.dim, M.field, M.beta, "dual_bimodule", M.left_action,
                        tuple(M.beta for _ in G.elements))


def trivialize_left_action(G, M):
    """Bimodule with the given right action and left action ``g.m = beta(m)``.

    Requires right beta-equivariance, the hypothesis of the homological
    Hochschild reduction.
    """
    _require(G, M, ("right",))
    w = right_equivariance_witness(G, M)
    if w is not None:
        raise HypothesisUnmet(f"sigma(alpha({w})) beta != beta sigma({w})", (w,))
    return ActionModule(M.dim, M.field, M.beta, "bimodule",
                        tuple(M.beta for _ in G.elements), M.right_action)


def direct_sum(M: ActionModule, N: ActionModule) -> ActionModule:
    if M.flavor != N.flavor or M.field != N.field:
        raise ValueError("direct sum needs matching flavor and field")

    def ds(a, b):
        return None if a is None else tuple(x.block_diag(y) for x, y in zip(a, b))

    return ActionModule(M.dim + N.dim, M.field, M.beta.block_diag(N.beta), M.flavor,
                        ds(M.left_action, N.left_action), ds(M.right_action, N.right_action))
