"""Matrix-level certificates for the comparison theorems, special cocycles and functoriality."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import group_algebra
from .complexes import (ComplexWindow, FaceFamily, assemble_window, dual_left_family,
                        dual_right_family, hochschild_chain_family, hochschild_cochain_family,
                        kg_dual_family, left_family, right_family, tuple_index, tuples)
from .homgroup import HomGroup, HomGroupMorphism
from .linalg import (QQ, Field, Matrix, betti_numbers, homology_of_window, image_basis,
                     kernel_basis, rank, subspace_contains, subspace_equal)
from .modules import (ActionModule, dual_right_to_dual_left, regular_bimodule,
                      right_equivariance_witness, right_module_to_left, trivialize_left_action,
                      trivialize_right_action, verify_module)
from .reports import HypothesisUnmet, _plain


@dataclass
class Certificate:
    theorem: str
    instance: object
    status: str  # certified | hypothesis_unmet | failed
    witness: object = None
    details: dict = dc_field(default_factory=dict)

    @property
    def certified(self):
        return self.status == "certified"

    def to_doc(self):
        doc = {"theorem": self.theorem, "instance": _plain(self.instance), "status": self.status}
        if self.witness is not None:
            doc["witness"] = _plain(self.witness)
        if self.details:
            doc["details"] = _plain(self.details)
        return doc


# ---------------------------------------------------------------------------
# (co)simplicial identities


def simplicial_failures(family: FaceFamily, max_n: int = 3):
    """Failing ``(i, j, n)`` among all composable identities with faces up to degree max_n.

    Cochain: ``δ_i δ_j = δ_j δ_{i-1}`` for ``j < i``, composites starting in C^n.
    Chain: ``d_i d_j = d_{j-1} d_i`` for ``i < j``, composites starting in C_n.
    """
    bad = []
    if family.direction == "cochain":
        for n in range(max_n):
            A, B = family.faces(n), family.faces(n + 1)
            for i in range(len(B)):
                for j in range(i):
                    if B[i] @ A[j] != B[j] @ A[i - 1]:
                        bad.append((i, j, n))
    else:
        for n in range(2, max_n + 1):
            A, B = family.faces(n), family.faces(n - 1)
            for i in range(len(A)):
                for j in range(i + 1, len(A)):
                    if B[i] @ A[j] != B[j - 1] @ A[i]:
                        bad.append((i, j, n))
    return bad


def check_simplicial_identities(family: FaceFamily, max_n: int = 3, instance=None) -> Certificate:
    bad = simplicial_failures(family, max_n)
    kind = "cosimplicial" if family.direction == "cochain" else "simplicial"
    return Certificate(f"{kind}_identities", instance or family.name,
                       "failed" if bad else "certified", bad or None, {"max_n": max_n})


# ---------------------------------------------------------------------------
# transport maps between windows


@dataclass
class TransportMap:
    """Degreewise maps ``maps[n]: source.dims[n] -> target.dims[n]``."""

    source: ComplexWindow
    target: ComplexWindow
    maps: tuple
    chain_map: bool
    invertible: tuple
    facewise: bool | None = None

    @property
    def isomorphism(self):
        return self.chain_map and all(self.invertible)


def commutes(source: ComplexWindow, target: ComplexWindow, maps) -> bool:
    for k in range(source.max_degree):
        if source.direction == "cochain":
            ok = maps[k + 1] @ source.maps[k] == target.maps[k] @ maps[k]
        else:
            ok = maps[k] @ source.maps[k] == target.maps[k] @ maps[k + 1]
        if not ok:
            return False
    return True


def make_transport(source, target, maps, facewise=None) -> TransportMap:
    if source.direction != target.direction or source.max_degree != target.max_degree:
        raise ValueError("transport needs windows of the same direction and length")
    for n, F in enumerate(maps):
        if F.shape != (target.dims[n], source.dims[n]):
            raise ValueError(f"map in degree {n} has shape {F.shape}")
    inv = tuple(F.nrows == F.ncols and rank(F) == F.nrows for F in maps)
    return TransportMap(source, target, tuple(maps), commutes(source, target, maps), inv, facewise)


def check_induced_containment(T: TransportMap) -> bool:
    """Cycles go to cycles and boundaries into boundaries, degree by degree."""
    S, W = T.source, T.target
    for n in range(S.max_degree):
        h = homology_of_window(S, n)
        F = T.maps[n]
        out = W.outgoing(n)
        for z in h.cycles:
            if any(x != 0 for x in out.apply(F.apply(list(z)))):
                return False
        inc = W.incoming(n)
        images = [F.apply(list(b)) for b in h.boundaries]
        if images:
            big = image_basis(inc) if inc is not None else []
            if not subspace_contains(W.field, big, images, W.dims[n]):
                return False
    return True


# ---------------------------------------------------------------------------
# inverse transport


def reversal_matrix(G: HomGroup, d: int, n: int, field: Field, sign: int = 1) -> Matrix:
    """Permutation ``(t, a) -> (g_n^-1, ..., g_1^-1, a)`` on d·|G|^n coordinates."""
    order, inv = G.order, G.inv
    rows = [{} for _ in range(d * order ** n)]
    c = field.reduce(sign)
    for t in tuples(order, n):
        s = tuple(inv[x] for x in reversed(t))
        src, dst = tuple_index(t, order) * d, tuple_index(s, order) * d
        for a in range(d):
            rows[dst + a][src + a] = c
    return Matrix(len(rows), len(rows), field, rows)


def _transport_sign(n):
    return -1 if (n * (n + 1) // 2) % 2 else 1


def inverse_transport_iso(G: HomGroup, M: ActionModule, variant: str = "cochain",
                          max_degree: int = 3) -> TransportMap:
    """Tuple reversal with inverses between the windows of M and of its transport.

    cochain: dual right M to the dual left module ``g.m = m.g^-1``;
    chain: right M to the left module ``g.m = m.g^-1``.  Reversal swaps
    face i with face (top - i), so the degree-n map carries the sign
    ``(-1)^(n(n+1)/2)`` to commute with the alternating sums.
    """
    N = max_degree
    if variant == "cochain":
        Mt = dual_right_to_dual_left(G, M)
        fs, ft = dual_right_family(G, M), dual_left_family(G, Mt)
    elif variant == "chain":
        w = right_equivariance_witness(G, M) if M.flavor == "right" else None
        if w is not None:
            raise HypothesisUnmet(f"beta(m.g) != beta(m).alpha(g) at g={w}", (w,))
        Mt = right_module_to_left(G, M)
        fs, ft = right_family(G, M), left_family(G, Mt)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    S, T = assemble_window(fs, N), assemble_window(ft, N)
    d, F = M.dim, M.field
    maps = [reversal_matrix(G, d, n, F, _transport_sign(n)) for n in range(N + 1)]
    plain = [reversal_matrix(G, d, n, F) for n in range(N + 1)]
    facewise = True
    if variant == "cochain":
        for n in range(N):
            A, B = fs.faces(n), ft.faces(n)
            top = n + 1
            facewise &= all(plain[n + 1] @ A[i] == B[top - i] @ plain[n] for i in range(top + 1))
    else:
        for n in range(1, N + 1):
            A, B = fs.faces(n), ft.faces(n)
            facewise &= all(plain[n - 1] @ A[i] == B[n - i] @ plain[n] for i in range(n + 1))
    return make_transport(S, T, maps, facewise)


def transport_certificate(G, M, variant="cochain", max_degree=3, instance=None) -> Certificate:
    name = f"inverse_transport/{variant}"
    try:
        T = inverse_transport_iso(G, M, variant, max_degree)
    except HypothesisUnmet as e:
        return Certificate(name, instance, "hypothesis_unmet", e.witness, {"reason": str(e)})
    bs, bt = betti_numbers(T.source), betti_numbers(T.target)
    ok = T.isomorphism and T.facewise and bs == bt
    details = {"chain_map": T.chain_map, "invertible": all(T.invertible),
               "facewise": T.facewise, "betti_source": bs, "betti_target": bt}
    return Certificate(name, instance, "certified" if ok else "failed", None, details)


# ---------------------------------------------------------------------------
# Hochschild reduction


def hochschild_reduction(G: HomGroup, M: ActionModule, variant: str = "cochain",
                         max_degree: int = 3, instance=None) -> Certificate:
    """Compare group (co)faces of M with Hom-Hochschild (co)faces of KG entrywise.

    cochain: M dual left, left beta-equivariant; M~ has right action beta.
    chain: M right, right beta-equivariant; M~ has left action beta.
    Raises HypothesisUnmet when the equivariance fails.
    """
    N = max_degree
    A = group_algebra(G, M.field)
    if variant == "cochain":
        Mt = trivialize_right_action(G, M)
        fg, fh = dual_left_family(G, M), hochschild_cochain_family(A, Mt)
    elif variant == "chain":
        Mt = trivialize_left_action(G, M)
        fg, fh = right_family(G, M), hochschild_chain_family(A, Mt)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    Wg = assemble_window(fg, N, keep_faces=True)
    Wh = assemble_window(fh, N, keep_faces=True)
    witness = None
    for k, (fa, fb) in enumerate(zip(Wg.faces, Wh.faces)):
        n = k if variant == "cochain" else k + 1
        for i, (x, y) in enumerate(zip(fa, fb)):
            if x.triplets() != y.triplets():
                witness = witness or ("face", n, i)
        if Wg.maps[k].triplets() != Wh.maps[k].triplets():
            witness = witness or ("differential", n)
    bg, bh = betti_numbers(Wg), betti_numbers(Wh)
    status = "certified" if witness is None and bg == bh else "failed"
    return Certificate(f"hochschild_reduction/{variant}", instance, status, witness,
                       {"betti_group": bg, "betti_hochschild": bh, "max_degree": N})


def run_certificate(fn, *args, **kwargs) -> Certificate:
    """Call a certificate builder, turning HypothesisUnmet into a certificate."""
    try:
        return fn(*args, **kwargs)
    except HypothesisUnmet as e:
        name = getattr(fn, "__name__", "certificate")
        variant = kwargs.get("variant", args[2] if len(args) > 2 else None)
        theorem = f"{name}/{variant}" if variant else name
        return Certificate(theorem, kwargs.get("instance"), "hypothesis_unmet", e.witness,
                           {"reason": str(e)})


# ---------------------------------------------------------------------------
# special cocycles


@dataclass
class CocycleComparison:
    kind: str
    direct: list  # basis of the directly assembled solution space
    generic: list  # basis computed from the generic window
    matches: bool
    dimension: int
    extra: dict = dc_field(default_factory=dict)


def _h0_conditions(G, M):
    """Rows of ``sigma(g) - beta`` for all g, stacked."""
    blocks = [M.right_action[g] - M.beta for g in G.elements]
    rows = [r for B in blocks for r in B.rows]
    return Matrix(len(rows), M.dim, M.field, rows)


def _h1_conditions(G, M):
    """``beta f(gh) - f(alpha g).h - beta f(alpha h) = 0`` on f in C^1."""
    d, F = M.dim, M.field
    sig, beta, a, mul = M.right_action, M.beta, G.alpha, G.mul
    trip = []
    for g in G.elements:
        for h in G.elements:
            r0 = (g * G.order + h) * d
            for row in range(d):
                for col, x in beta.rows[row].items():
                    trip.append((r0 + row, mul[g][h] * d + col, x))
                    trip.append((r0 + row, a[h] * d + col, -x))
                for col, x in sig[h].rows[row].items():
                    trip.append((r0 + row, a[g] * d + col, -x))
    return Matrix.from_triplets(d * G.order ** 2, d * G.order, F, trip)


def _h1_coboundaries(G, M):
    """``phi_m(g) = m.g - beta(m)`` for m over a basis of M."""
    d = M.dim
    out = []
    for b in range(d):
        e = [M.field.zero] * d
        e[b] = M.field.one
        vec = []
        for g in G.elements:
            vec.extend(x - y for x, y in zip(M.right_action[g].apply(e), M.beta.apply(e)))
        out.append([M.field.reduce(x) for x in vec])
    return out


def _trace_conditions(G, field):
    trip = []
    r = 0
    for g in G.elements:
        for h in G.elements:
            gh, hg = G.mul[g][h], G.mul[h][g]
            if gh != hg:
                trip += [(r, gh, 1), (r, hg, -1)]
                r += 1
    return Matrix.from_triplets(r, G.order, field, trip)


def special_cocycles(G: HomGroup, M: ActionModule | None, kind: str,
                     field: Field | None = None) -> CocycleComparison:
    """Directly assembled cocycle space versus the generic window kernel.

    H0_invariants and H1_crossed use a dual right module; trace uses the
    translated (KG)* picture and only needs ``field``.
    """
    if kind == "trace":
        F = field if field is not None else M.field
        W = assemble_window(kg_dual_family(G, F), 1)
        direct = kernel_basis(_trace_conditions(G, F))
        generic = kernel_basis(W.maps[0])
        return CocycleComparison(kind, direct, generic, subspace_equal(F, direct, generic, G.order),
                                 len(direct))
    if M is None or M.flavor != "dual_right":
        raise ValueError(f"{kind} needs a dual_right module")
    rep = verify_module(G, M)
    if rep.violations:
        raise ValueError(f"module fails dual_right axioms: {rep.axioms()}")
    W = assemble_window(dual_right_family(G, M), 2)
    F = M.field
    if kind == "H0_invariants":
        direct = kernel_basis(_h0_conditions(G, M))
        generic = kernel_basis(W.maps[0])
        return CocycleComparison(kind, direct, generic, subspace_equal(F, direct, generic, M.dim),
                                 len(direct))
    if kind == "H1_crossed":
        n1 = M.dim * G.order
        direct = kernel_basis(_h1_conditions(G, M))
        generic = kernel_basis(W.maps[1])
        cob = _h1_coboundaries(G, M)
        gen_cob = image_basis(W.maps[0])
        cob_ok = subspace_equal(F, cob, gen_cob, n1) if cob or gen_cob else True
        matches = subspace_equal(F, direct, generic, n1) and cob_ok
        return CocycleComparison(kind, direct, generic, matches, len(direct),
                                 {"coboundaries_match": cob_ok,
                                  "betti_1": len(direct) - len(gen_cob)})
    raise ValueError(f"unknown kind {kind!r}")


def cocycle_certificate(G, M, kind, field=None, instance=None) -> Certificate:
    try:
        c = special_cocycles(G, M, kind, field)
    except HypothesisUnmet as e:
        return Certificate(f"special_cocycles/{kind}", instance, "hypothesis_unmet", e.witness)
    details = {"dimension": c.dimension, **c.extra}
    return Certificate(f"special_cocycles/{kind}", instance,
                       "certified" if c.matches else "failed", None, details)


# ---------------------------------------------------------------------------
# functoriality


def pullback_matrix(f: HomGroupMorphism, n: int, field: Field) -> Matrix:
    """``(F phi)(g_0..g_n) = phi(f(g_0)..f(g_n))`` on functions of n+1 arguments."""
    G, H = f.source, f.target
    rows = [{tuple_index(tuple(f.map[x] for x in t), H.order): field.one}
            for t in tuples(G.order, n + 1)]
    return Matrix(G.order ** (n + 1), H.order ** (n + 1), field, rows)


def pushforward_matrix(f: HomGroupMorphism, n: int, field: Field) -> Matrix:
    """``(g_1..g_n; e_{g_0}) -> (f(g_1)..f(g_n); e_{f(g_0)})`` on C_n(G, KG)."""
    G, H = f.source, f.target
    trip = []
    for t in tuples(G.order, n):
        s = tuple(f.map[x] for x in t)
        for g0 in G.elements:
            trip.append((tuple_index(s, H.order) * H.order + f.map[g0],
                         tuple_index(t, G.order) * G.order + g0, 1))
    return Matrix.from_triplets(H.order ** (n + 1), G.order ** (n + 1), field, trip)


def functorial_map(f: HomGroupMorphism, variant: str = "cochain_kgdual",
                   max_degree: int = 3, field: Field | None = None) -> TransportMap:
    """Pullback on the (KG)* cochains or pushforward on the KG chains, with face checks."""
    F = field or QQ
    G, H = f.source, f.target
    N = max_degree
    if variant == "cochain_kgdual":
        fs, ft = kg_dual_family(H, F), kg_dual_family(G, F)
        maps = [pullback_matrix(f, n, F) for n in range(N + 1)]
        facewise = all(Bt @ maps[n] == maps[n + 1] @ Bs
                       for n in range(N) for Bs, Bt in zip(fs.faces(n), ft.faces(n)))
    elif variant == "chain_kg":
        fs = right_family(G, regular_bimodule(G, F).as_flavor("right"))
        ft = right_family(H, regular_bimodule(H, F).as_flavor("right"))
        maps = [pushforward_matrix(f, n, F) for n in range(N + 1)]
        facewise = all(Dt @ maps[n] == maps[n - 1] @ Ds
                       for n in range(1, N + 1) for Ds, Dt in zip(fs.faces(n), ft.faces(n)))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return make_transport(assemble_window(fs, N), assemble_window(ft, N), maps, facewise)


def functoriality_certificate(f, variant, max_degree=3, field=None, instance=None) -> Certificate:
    T = functorial_map(f, variant, max_degree, field)
    ok = T.chain_map and T.facewise and check_induced_containment(T)
    return Certificate(f"functoriality/{variant}", instance, "certified" if ok else "failed",
                       None, {"chain_map": T.chain_map, "facewise": T.facewise})
