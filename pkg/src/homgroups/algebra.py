"""Hom-algebras by structure constants, the Hom-group algebra and its commutator."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .homgroup import HomGroup
from .linalg import Field, Matrix
from .modules import ActionModule
from .reports import AxiomReport, ShapeError


@dataclass(frozen=True)
class HomAlgebra:
    """``constants[i][j]`` is the coordinate column of ``e_i e_j``."""

    dim: int
    field: Field
    constants: tuple
    alpha: Matrix
    unit: tuple

    def __post_init__(self):
        d, red = self.dim, self.field.reduce
        c = tuple(tuple(tuple(red(x) for x in col) for col in row) for row in self.constants)
        if len(c) != d or any(len(r) != d or any(len(col) != d for col in r) for r in c):
            raise ShapeError(f"structure constants must be {d}x{d}x{d}")
        object.__setattr__(self, "constants", c)
        if self.alpha.shape != (d, d):
            raise ShapeError(f"alpha must be {d}x{d}")
        u = tuple(red(x) for x in self.unit)
        if len(u) != d:
            raise ShapeError(f"unit must have length {d}")
        object.__setattr__(self, "unit", u)

    def basis(self, i):
        z = [self.field.zero] * self.dim
        z[i] = self.field.one
        return tuple(z)

    def multiply(self, x, y):
        red, d = self.field.reduce, self.dim
        out = [0] * d
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                for k, c in enumerate(self.constants[i][j]):
                    if c != 0:
                        out[k] += ab * c
        return tuple(red(v) for v in out)

    def twist(self, x):
        return tuple(self.alpha.apply(list(x)))

    def add(self, *vs, signs=None):
        signs = signs or [1] * len(vs)
        red = self.field.reduce
        return tuple(red(sum(s * v[k] for s, v in zip(signs, vs))) for k in range(self.dim))

    def is_zero(self, x):
        return all(v == 0 for v in x)


def group_algebra(G: HomGroup, field: Field) -> HomAlgebra:
    """Basis indexed by G with ``e_g e_h = e_{gh}`` and alpha extended linearly."""
    n = G.order
    z, o = field.zero, field.one

    def e(k):
        v = [z] * n
        v[k] = o
        return tuple(v)

    constants = tuple(tuple(e(G.mul[g][h]) for h in range(n)) for g in range(n))
    alpha = Matrix.from_triplets(n, n, field, [(G.alpha[h], h, 1) for h in range(n)])
    return HomAlgebra(n, field, constants, alpha, e(G.unit))


def verify_hom_algebra(A: HomAlgebra) -> AxiomReport:
    rep = AxiomReport("hom_algebra")
    d = range(A.dim)
    E = [A.basis(i) for i in d]
    aE = [A.twist(x) for x in E]
    prod2 = {(i, j): A.multiply(E[i], E[j]) for i in d for j in d}
    for i, j, k in product(d, d, d):
        lhs = A.multiply(aE[i], prod2[j, k])
        rhs = A.multiply(prod2[i, j], aE[k])
        if lhs != rhs:
            rep.add("hom_associativity", (i, j, k), lhs, rhs)
    for i, j in product(d, d):
        lhs, rhs = A.twist(prod2[i, j]), A.multiply(aE[i], aE[j])
        if lhs != rhs:
            rep.add("alpha_multiplicative", (i, j), lhs, rhs)
    for i in d:
        r, l = A.multiply(E[i], A.unit), A.multiply(A.unit, E[i])
        if r != aE[i]:
            rep.add("unitality_right", (i,), r, aE[i])
        if l != aE[i]:
            rep.add("unitality_left", (i,), l, aE[i])
    if A.twist(A.unit) != A.unit:
        rep.add("alpha_unit", (), A.twist(A.unit), A.unit)
    return rep


def associativity_probe(A: HomAlgebra):
    """First basis triple with ``(e_i e_j) e_k != e_i (e_j e_k)``, or None."""
    for i, j, k in product(range(A.dim), repeat=3):
        x, y, z = A.basis(i), A.basis(j), A.basis(k)
        if A.multiply(A.multiply(x, y), z) != A.multiply(x, A.multiply(y, z)):
            return (i, j, k)
    return None


def hom_inverse_of_basis(G: HomGroup, field: Field, c, g):
    """Hom-inverse of ``c e_g`` in KG: returns ``(c^-1, g^-1, k)`` with k the least
    exponent such that ``alpha^k(x x^-1) = alpha^k(x^-1 x) = 1``."""
    c = field.reduce(c)
    if c == 0:
        raise ZeroDivisionError("zero has no Hom-inverse")
    A = group_algebra(G, field)
    ci, gi = field.inv(c), G.inv[g]
    x = tuple(c if h == g else field.zero for h in G.elements)
    y = tuple(ci if h == gi else field.zero for h in G.elements)
    xy, yx = A.multiply(x, y), A.multiply(y, x)
    for k in range(G.order + 1):
        if xy == A.unit and yx == A.unit:
            return ci, gi, k
        xy, yx = A.twist(xy), A.twist(yx)
    raise RuntimeError(f"no Hom-inverse exponent found for element {g}")


@dataclass(frozen=True)
class BracketTable:
    brackets: tuple  # brackets[i][j] = coordinates of [e_i, e_j]


def commutator_bracket(A: HomAlgebra):
    """Commutator bracket plus the Hom-Lie certificate.

    Returns ``(table, holds, failures)`` where failures lists basis triples
    breaking antisymmetry or the twisted Jacobi identity.
    """
    d = range(A.dim)
    E = [A.basis(i) for i in d]
    br = tuple(tuple(A.add(A.multiply(E[i], E[j]), A.multiply(E[j], E[i]), signs=[1, -1])
                     for j in d) for i in d)
    failures = []
    neg = lambda v: tuple(A.field.reduce(-x) for x in v)  # noqa: E731
    for i, j in product(d, d):
        if br[i][j] != neg(br[j][i]):
            failures.append(("antisymmetry", i, j))

    def bracket(x, y):
        return A.add(A.multiply(x, y), A.multiply(y, x), signs=[1, -1])

    aE = [A.twist(x) for x in E]
    for i, j, k in product(d, d, d):
        total = A.add(bracket(aE[i], br[j][k]), bracket(aE[j], br[k][i]), bracket(aE[k], br[i][j]))
        if not A.is_zero(total):
            failures.append(("hom_jacobi", i, j, k))
    return BracketTable(br), not failures, failures


# ---------------------------------------------------------------------------
# modules over a Hom-algebra (action matrices indexed by basis vectors)


def act(family, x):
    """Linear extension of a basis-indexed action family to the vector ``x``."""
    out = None
    for k, c in enumerate(x):
        if c == 0:
            continue
        term = family[k].scale(c)
        out = term if out is None else out + term
    if out is None:
        d = family[0].nrows
        return Matrix.zeros(d, d, family[0].field)
    return out


def verify_algebra_module(A: HomAlgebra, M: ActionModule) -> AxiomReport:
    """Axioms of a (dual) bimodule over a Hom-algebra, on basis elements.

    dual_bimodule: ``a.(alpha(b).v) = beta((ab).v)``,
    ``(v.alpha(a)).b = beta(v.(ab))`` and ``a.(v.alpha(b)) = (alpha(a).v).b``.
    bimodule: ``(ab).beta(v) = alpha(a).(b.v)``, ``beta(v).(ab) = (v.a).alpha(b)``,
    ``alpha(a).(v.b) = (a.v).alpha(b)`` plus the two beta-equivariances
    recorded in ``info``.
    """
    if M.flavor not in ("dual_bimodule", "bimodule"):
        raise ValueError("algebra modules must be bimodule or dual_bimodule")
    for fam in (M.left_action, M.right_action):
        if len(fam) != A.dim:
            raise ShapeError("action family length must equal algebra dimension")
    rep = AxiomReport(f"algebra_module:{M.flavor}")
    rho, sig, beta = M.left_action, M.right_action, M.beta
    d = range(A.dim)
    E = [A.basis(i) for i in d]
    aE = [A.twist(x) for x in E]
    arho = [act(rho, x) for x in aE]
    asig = [act(sig, x) for x in aE]
    for a, b in product(d, d):
        ab = A.multiply(E[a], E[b])
        if M.flavor == "dual_bimodule":
            checks = [
                ("dual_left", rho[a] @ arho[b], beta @ act(rho, ab)),
                ("dual_right", sig[b] @ asig[a], beta @ act(sig, ab)),
                ("dual_bimodule", rho[a] @ asig[b], sig[b] @ arho[a]),
            ]
        else:
            checks = [
                ("left", act(rho, ab) @ beta, arho[a] @ rho[b]),
                ("right", act(sig, ab) @ beta, asig[b] @ sig[a]),
                ("bimodule", arho[a] @ sig[b], asig[b] @ rho[a]),
            ]
        for name, lhs, rhs in checks:
            if lhs != rhs:
                rep.add(name, (a, b), lhs, rhs)
    rep.info["left_beta_equivariant"] = all(arho[a] @ beta == beta @ rho[a] for a in d)
    rep.info["right_beta_equivariant"] = all(asig[a] @ beta == beta @ sig[a] for a in d)
    return rep
