"""(Co)face matrices of the Hom-group and Hom-Hochschild (co)simplicial modules.

Coordinates of C^n(G, M) (and of C_n(G, M)) are pairs ``(t, a)`` with ``t`` a
tuple in G^n, enumerated lexicographically, and ``a`` a basis index of M;
the flat index is ``index(t) * dim M + a`` (tuple-major).

Face indexing always follows the (co)simplicial identities
``δ_i δ_j = δ_j δ_{i-1}`` (j < i) and ``d_i d_j = d_{j-1} d_i`` (i < j).
For the dual-right cochains and the left-module chains this puts the face
that drops the first argument at index 0 and the face that acts with the
last argument at the top index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .algebra import HomAlgebra, verify_algebra_module
from .homgroup import HomGroup
from .linalg import Field, Matrix, sum_matrices
from .modules import (ActionModule, left_equivariance_witness, right_equivariance_witness,
                      verify_module)
from .reports import HypothesisUnmet


class ComplexError(RuntimeError):
    """Composite of consecutive differentials is not zero."""


def tuples(order: int, n: int):
    return list(product(range(order), repeat=n))


def tuple_index(t, order: int) -> int:
    i = 0
    for x in t:
        i = i * order + x
    return i


@dataclass(frozen=True)
class FaceFamily:
    """A graded family of (co)face matrices, built lazily per degree."""

    direction: str  # "cochain" or "chain"
    field: Field
    dim: Callable[[int], int]
    faces: Callable[[int], list]
    name: str = ""


# ---------------------------------------------------------------------------
# group builders


def _coface_matrix(G, d, n, field, rule):
    """Rows of block t (in G^{n+1}) are ``X @ (block s)`` where ``rule(t) = (s, X)``."""
    order = G.order
    rows = []
    for t in tuples(order, n + 1):
        s, X = rule(t)
        base = tuple_index(s, order) * d
        for a in range(d):
            rows.append({base + b: x for b, x in X.rows[a].items()})
    return Matrix(d * order ** (n + 1), d * order ** n, field, rows)


def _face_matrix(G, d, n, field, rule):
    """Column block t (in G^n) is sent to ``X`` placed at row block s."""
    order = G.order
    red = field.reduce
    rows = [{} for _ in range(d * order ** (n - 1))]
    for t in tuples(order, n):
        s, X = rule(t)
        base_r = tuple_index(s, order) * d
        base_c = tuple_index(t, order) * d
        for b in range(d):
            row = rows[base_r + b]
            for a, x in X.rows[b].items():
                y = red(row.get(base_c + a, 0) + x)
                if y != 0:
                    row[base_c + a] = y
                else:
                    row.pop(base_c + a, None)
    return Matrix(len(rows), d * order ** n, field, rows)


def _inner(G, t, i):
    """``(alpha t_1, ..., t_i t_{i+1}, ..., alpha t_k)`` with 1-based i."""
    a = G.alpha
    return (tuple(a[x] for x in t[:i - 1]) + (G.mul[t[i - 1]][t[i]],)
            + tuple(a[x] for x in t[i + 1:]))


def _require_flavor(G, M, flavors):
    if M.flavor not in flavors:
        raise ValueError(f"builder needs a {'/'.join(flavors)} module, got {M.flavor}")
    rep = verify_module(G, M)
    if rep.violations:
        raise ValueError(f"module fails {M.flavor} axioms: {rep.axioms()}")


def group_cochain_cofaces(G: HomGroup, M: ActionModule, n: int):
    """Cofaces ``C^n(G, M) -> C^{n+1}(G, M)`` for a dual left module.

    δ_0 φ(g) = g_1·φ(αg_2, ..., αg_{n+1}); δ_i applies β after multiplying
    g_i g_{i+1} and twisting the rest; δ_{n+1} drops g_{n+1} and applies β.
    """
    rho, beta, a = M.left_action, M.beta, G.alpha
    out = [_coface_matrix(G, M.dim, n, M.field,
                          lambda t: (tuple(a[x] for x in t[1:]), rho[t[0]]))]
    for i in range(1, n + 1):
        out.append(_coface_matrix(G, M.dim, n, M.field, lambda t, i=i: (_inner(G, t, i), beta)))
    out.append(_coface_matrix(G, M.dim, n, M.field,
                              lambda t: (tuple(a[x] for x in t[:n]), beta)))
    return out


def group_cochain_cofaces_right(G: HomGroup, M: ActionModule, n: int):
    """Cofaces for a dual right module.

    Index 0 drops g_1 and applies β; index n+1 acts on the right with g_{n+1}.
    """
    sig, beta, a = M.right_action, M.beta, G.alpha
    out = [_coface_matrix(G, M.dim, n, M.field,
                          lambda t: (tuple(a[x] for x in t[1:]), beta))]
    for i in range(1, n + 1):
        out.append(_coface_matrix(G, M.dim, n, M.field, lambda t, i=i: (_inner(G, t, i), beta)))
    out.append(_coface_matrix(G, M.dim, n, M.field,
                              lambda t: (tuple(a[x] for x in t[:n]), sig[t[n]])))
    return out


def group_chain_faces(G: HomGroup, M: ActionModule, n: int):
    """Faces ``C_n(G, M) -> C_{n-1}(G, M)`` for a right module (n >= 1).

    d_0(m, g) = (m·g_1, αg_2, ...); d_i multiplies g_i g_{i+1};
    d_n drops g_n.  Inner and last faces apply β to m.
    """
    sig, beta, a = M.right_action, M.beta, G.alpha
    out = [_face_matrix(G, M.dim, n, M.field, lambda t: (tuple(a[x] for x in t[1:]), sig[t[0]]))]
    for i in range(1, n):
        out.append(_face_matrix(G, M.dim, n, M.field, lambda t, i=i: (_inner(G, t, i), beta)))
    out.append(_face_matrix(G, M.dim, n, M.field, lambda t: (tuple(a[x] for x in t[:n - 1]), beta)))
    return out


def group_chain_faces_left(G: HomGroup, M: ActionModule, n: int):
    """Faces for a left module, coefficient in the last slot.

    Index 0 drops g_1; index n acts with g_n on m.
    """
    rho, beta, a = M.left_action, M.beta, G.alpha
    out = [_face_matrix(G, M.dim, n, M.field, lambda t: (tuple(a[x] for x in t[1:]), beta))]
    for i in range(1, n):
        out.append(_face_matrix(G, M.dim, n, M.field, lambda t, i=i: (_inner(G, t, i), beta)))
    out.append(_face_matrix(G, M.dim, n, M.field,
                            lambda t: (tuple(a[x] for x in t[:n - 1]), rho[t[n - 1]])))
    return out


def dual_left_family(G, M) -> FaceFamily:
    _require_flavor(G, M, ("dual_left", "dual_bimodule"))
    return FaceFamily("cochain", M.field, lambda n: M.dim * G.order ** n,
                      lambda n: group_cochain_cofaces(G, M, n), "group/dual_left")


def dual_right_family(G, M) -> FaceFamily:
    _require_flavor(G, M, ("dual_right", "dual_bimodule"))
    return FaceFamily("cochain", M.field, lambda n: M.dim * G.order ** n,
                      lambda n: group_cochain_cofaces_right(G, M, n), "group/dual_right")


def _require_equivariance(G, M, flavors, side):
    """Hypothesis check, done before the axiom check so a failure names its witness."""
    if M.flavor not in flavors:
        raise ValueError(f"builder needs a {'/'.join(flavors)} module, got {M.flavor}")
    fam = M.right_action if side == "right" else M.left_action
    if len(fam) != G.order:
        raise ValueError("action family length must equal the group order")
    if side == "right":
        w = right_equivariance_witness(G, M)
        msg = f"beta(m.g) != beta(m).alpha(g) at g={w}"
    else:
        w = left_equivariance_witness(G, M)
        msg = f"beta(g.m) != alpha(g).beta(m) at g={w}"
    if w is not None:
        raise HypothesisUnmet(msg, (w,))
    _require_flavor(G, M, flavors)


def right_family(G, M) -> FaceFamily:
    _require_equivariance(G, M, ("right", "bimodule"), "right")
    return FaceFamily("chain", M.field, lambda n: M.dim * G.order ** n,
                      lambda n: group_chain_faces(G, M, n), "group/right")


def left_family(G, M) -> FaceFamily:
    _require_equivariance(G, M, ("left", "bimodule"), "left")
    return FaceFamily("chain", M.field, lambda n: M.dim * G.order ** n,
                      lambda n: group_chain_faces_left(G, M, n), "group/left")


# ---------------------------------------------------------------------------
# Hom-Hochschild builders (structure constants, multilinear expansion)


def _expand(args):
    """Expand a tensor product of coordinate vectors into ``[(coef, tuple)]``."""
    terms = [(1, ())]
    for v in args:
        support = [(k, c) for k, c in enumerate(v) if c != 0]
        terms = [(coef * c, t + (k,)) for coef, t in terms for k, c in support]
    return terms


def _algebra_coface(A, M, n, rule):
    """``rule(t) = (args, X)``: row block t is ``X @ φ(args)`` expanded multilinearly."""
    d, order = M.dim, A.dim
    red = A.field.reduce
    rows = []
    for t in tuples(order, n + 1):
        args, X = rule(t)
        block = [{} for _ in range(d)]
        for coef, s in _expand(args):
            base = tuple_index(s, order) * d
            for a in range(d):
                row = block[a]
                for b, x in X.rows[a].items():
                    row[base + b] = row.get(base + b, 0) + coef * x
        for row in block:
            rows.append({j: y for j, x in row.items() if (y := red(x)) != 0})
    return Matrix(d * order ** (n + 1), d * order ** n, A.field, rows)


def _algebra_face(A, M, n, rule):
    """``rule(t) = (args, X)``: ``(v, e_t) -> X v ⊗ args`` expanded multilinearly."""
    d, order = M.dim, A.dim
    red = A.field.reduce
    acc = [{} for _ in range(d * order ** (n - 1))]
    for t in tuples(order, n):
        args, X = rule(t)
        base_c = tuple_index(t, order) * d
        for coef, s in _expand(args):
            base_r = tuple_index(s, order) * d
            for b in range(d):
                row = acc[base_r + b]
                for a, x in X.rows[b].items():
                    row[base_c + a] = row.get(base_c + a, 0) + coef * x
    rows = [{j: y for j, x in row.items() if (y := red(x)) != 0} for row in acc]
    return Matrix(len(rows), d * order ** n, A.field, rows)


def _act_basis_family(family, x):
    out = None
    for k, c in enumerate(x):
        if c != 0:
            term = family[k].scale(c)
            out = term if out is None else out + term
    return out if out is not None else family[0].scale(0)


def hochschild_cofaces(A: HomAlgebra, M: ActionModule, n: int):
    """Hom-Hochschild cofaces on ``C^n(A, M)`` for a dual bimodule M.

    d_0 φ(a) = a_1·φ(αa_2, ...); d_i = β φ(..., a_i a_{i+1}, ...);
    d_{n+1} φ(a) = φ(αa_1, ..., αa_n)·a_{n+1}.
    """
    E = [A.basis(i) for i in range(A.dim)]
    aE = [A.twist(x) for x in E]
    rho, sig, beta = M.left_action, M.right_action, M.beta
    out = [_algebra_coface(A, M, n, lambda t: ([aE[x] for x in t[1:]], rho[t[0]]))]
    for i in range(1, n + 1):
        def rule(t, i=i):
            args = ([aE[x] for x in t[:i - 1]] + [A.multiply(E[t[i - 1]], E[t[i]])]
                    + [aE[x] for x in t[i + 1:]])
            return args, beta
        out.append(_algebra_coface(A, M, n, rule))
    out.append(_algebra_coface(A, M, n, lambda t: ([aE[x] for x in t[:n]], sig[t[n]])))
    return out


def hochschild_faces(A: HomAlgebra, M: ActionModule, n: int):
    """Hom-Hochschild faces on ``C_n(A, M) = M ⊗ A^{⊗n}`` for a bimodule M (n >= 1)."""
    E = [A.basis(i) for i in range(A.dim)]
    aE = [A.twist(x) for x in E]
    rho, sig, beta = M.left_action, M.right_action, M.beta
    out = [_algebra_face(A, M, n, lambda t: ([aE[x] for x in t[1:]], sig[t[0]]))]
    for i in range(1, n):
        def rule(t, i=i):
            args = ([aE[x] for x in t[:i - 1]] + [A.multiply(E[t[i - 1]], E[t[i]])]
                    + [aE[x] for x in t[i + 1:]])
            return args, beta
        out.append(_algebra_face(A, M, n, rule))
    out.append(_algebra_face(A, M, n, lambda t: ([aE[x] for x in t[:n - 1]], rho[t[n - 1]])))
    return out


def hochschild_cochain_family(A, M) -> FaceFamily:
    if M.flavor != "dual_bimodule":
        raise ValueError(f"Hochschild cochains need a dual_bimodule, got {M.flavor}")
    rep = verify_algebra_module(A, M)
    if rep.violations:
        raise ValueError(f"not a dual bimodule over the algebra: {rep.axioms()}")
    return FaceFamily("cochain", M.field, lambda n: M.dim * A.dim ** n,
                      lambda n: hochschild_cofaces(A, M, n), "hochschild/cochain")


def hochschild_chain_family(A, M) -> FaceFamily:
    if M.flavor != "bimodule":
        raise ValueError(f"Hochschild chains need a bimodule, got {M.flavor}")
    rep = verify_algebra_module(A, M)
    if rep.violations:
        raise ValueError(f"not a bimodule over the algebra: {rep.axioms()}")
    for side in ("right", "left"):
        if not rep.info[f"{side}_beta_equivariant"]:
            raise HypothesisUnmet(f"{side} beta-equivariance fails", (side,))
    return FaceFamily("chain", M.field, lambda n: M.dim * A.dim ** n,
                      lambda n: hochschild_faces(A, M, n), "hochschild/chain")


# ---------------------------------------------------------------------------
# (KG)* in the translated picture: cochains are functions on G^{n+1}


def kg_dual_cofaces(G: HomGroup, field: Field, n: int):
    """Cofaces on functions ``φ(g_0, ..., g_n)`` with values in the field.

    δ_0 φ = φ(g_0 g_1, αg_2, ...), δ_i = φ(αg_0, ..., g_i g_{i+1}, ...),
    δ_{n+1} φ = φ(g_{n+1} g_0, αg_1, ..., αg_n).
    """
    a, mul, order = G.alpha, G.mul, G.order
    one = field.one

    def build(rule):
        rows = [{tuple_index(rule(t), order): one} for t in tuples(order, n + 2)]
        return Matrix(order ** (n + 2), order ** (n + 1), field, rows)

    out = [build(lambda t: (mul[t[0]][t[1]],) + tuple(a[x] for x in t[2:]))]
    for i in range(1, n + 1):
        out.append(build(lambda t, i=i: tuple(a[x] for x in t[:i]) + (mul[t[i]][t[i + 1]],)
                         + tuple(a[x] for x in t[i + 2:])))
    out.append(build(lambda t: (mul[t[n + 1]][t[0]],) + tuple(a[x] for x in t[1:n + 1])))
    return out


def kg_dual_family(G, field) -> FaceFamily:
    return FaceFamily("cochain", field, lambda n: G.order ** (n + 1),
                      lambda n: kg_dual_cofaces(G, field, n), "kg_dual/translated")


def kg_translation(G: HomGroup, n: int, field: Field) -> Matrix:
    """Permutation from C^n(G, (KG)*) coordinates ``(t, g_0)`` to ``(g_0, t)``."""
    order = G.order
    rows = [{} for _ in range(order ** (n + 1))]
    for t in tuples(order, n):
        for g0 in range(order):
            rows[tuple_index((g0,) + t, order)][tuple_index(t, order) * order + g0] = field.one
    return Matrix(len(rows), len(rows), field, rows)


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class ComplexWindow:
    """Degrees 0..N of a (co)chain complex.

    Cochain: ``maps[n] = b_n : C^n -> C^{n+1}`` for n < N.
    Chain: ``maps[n] = ∂_{n+1} : C_{n+1} -> C_n`` for n < N.
    """

    direction: str
    field: Field
    dims: tuple
    maps: tuple
    faces: tuple = ()

    def __post_init__(self):
        if self.direction not in ("cochain", "chain"):
            raise ValueError(f"bad direction {self.direction!r}")
        if len(self.maps) != len(self.dims) - 1:
            raise ValueError("a window with N+1 dimensions needs N maps")
        for n, m in enumerate(self.maps):
            want = ((self.dims[n + 1], self.dims[n]) if self.direction == "cochain"
                    else (self.dims[n], self.dims[n + 1]))
            if m.shape != want:
                raise ValueError(f"map {n} has shape {m.shape}, expected {want}")

    @property
    def max_degree(self):
        return len(self.dims) - 1

    def outgoing(self, n):
        """Differential leaving degree n."""
        if self.direction == "cochain":
            return self.maps[n]
        if n == 0:
            return Matrix.zeros(0, self.dims[0], self.field)
        return self.maps[n - 1]

    def incoming(self, n):
        """Differential arriving in degree n, or None at the open end."""
        if self.direction == "cochain":
            return self.maps[n - 1] if n > 0 else None
        return self.maps[n]

    def differential(self, n):
        """b_n for cochains, ∂_n for chains."""
        return self.maps[n] if self.direction == "cochain" else self.maps[n - 1]

    def composites_vanish(self):
        return all((self.maps[k + 1] @ self.maps[k]).is_zero() if self.direction == "cochain"
                   else (self.maps[k] @ self.maps[k + 1]).is_zero()
                   for k in range(len(self.maps) - 1))


def alternating_sum(faces):
    return sum_matrices(faces, [(-1) ** i for i in range(len(faces))])


def assemble_window(family: FaceFamily, max_degree: int, keep_faces=False) -> ComplexWindow:
    """Alternating-sum (co)boundaries of ``family`` in degrees 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    N = max_degree
    dims = tuple(family.dim(n) for n in range(N + 1))
    if family.direction == "cochain":
        face_lists = [family.faces(n) for n in range(N)]
    else:
        face_lists = [family.faces(n) for n in range(1, N + 1)]
    maps = tuple(alternating_sum(f) for f in face_lists)
    W = ComplexWindow(family.direction, family.field, dims, maps,
                      tuple(map(tuple, face_lists)) if keep_faces else ())
    if not W.composites_vanish():
        raise ComplexError(f"{family.name}: consecutive differentials do not compose to zero")
    return W
