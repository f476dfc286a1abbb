from itertools import product

import pytest

from homgroups.catalog import cyclic_group, cyclic_twist, symmetric_group, trivial_group
from homgroups.complexes import FaceFamily, assemble_window, dual_left_family, right_family
from homgroups.homgroup import HomGroupMorphism, enumerate_morphisms
from homgroups.linalg import GF, QQ, Matrix, betti_numbers
from homgroups.modules import (ActionModule, regular_bimodule, regular_dual_bimodule,
                               scalar_module, trivial_module)
from homgroups.reports import HypothesisUnmet
from homgroups.theorems import (check_induced_containment, check_simplicial_identities,
                                cocycle_certificate, functorial_map, functoriality_certificate,
                                hochschild_reduction, inverse_transport_iso, make_transport,
                                pullback_matrix, pushforward_matrix, reversal_matrix,
                                run_certificate, special_cocycles, transport_certificate)

from oracles import trace_classes


def test_simplicial_certificates(z3, c2):
    cert = check_simplicial_identities(dual_left_family(z3, trivial_module(z3, QQ)), 3)
    assert cert.certified and cert.theorem == "cosimplicial_identities"
    cert = check_simplicial_identities(right_family(c2, trivial_module(c2, QQ, "right")), 3)
    assert cert.certified and cert.theorem == "simplicial_identities"


def test_sign_flipped_coface_reports_1_0(c2):
    good = dual_left_family(c2, trivial_module(c2, QQ))

    def faces(n):
        out = list(good.faces(n))
        if n == 1:
            out[1] = out[1].scale(-1)
        return out

    cert = check_simplicial_identities(FaceFamily("cochain", QQ, good.dim, faces), 3)
    assert cert.status == "failed"
    # δ_1 δ_0 = δ_0 δ_0 on C^0 breaks once δ_1 on C^1 is negated
    assert (1, 0, 0) in cert.witness
    assert all(n in (0, 1) for _, _, n in cert.witness)


def test_trivial_transport_is_reversal(z3):
    M = trivial_module(z3, QQ, "dual_right")
    T = inverse_transport_iso(z3, M, "cochain", 3)
    assert T.isomorphism and T.facewise
    for n, F in enumerate(T.maps):
        plain = reversal_matrix(z3, 1, n, QQ)
        assert F in (plain, plain.scale(-1))
        assert all(len(r) == 1 for r in plain.rows)


def test_scaled_transport_gf5(z3):
    cert = transport_certificate(z3, scalar_module(z3, GF(5), 2, "dual_right"), "cochain", 2)
    assert cert.certified
    assert cert.details["betti_source"] == cert.details["betti_target"]


def test_transport_sweep(corpus4):
    for name, G in corpus4:
        for F in (QQ, GF(3)):
            for M in (trivial_module(G, F, "dual_right"), scalar_module(G, F, 2, "dual_right"),
                      regular_dual_bimodule(G, F).as_flavor("dual_right")):
                assert transport_certificate(G, M, "cochain", 3).certified, name
            R = regular_bimodule(G, F).as_flavor("right")
            assert transport_certificate(G, R, "chain", 3).certified, name


def test_transport_chain_hypothesis_unmet():
    G = cyclic_twist(3, 2)
    one = Matrix.identity(1, QQ)
    sig = tuple(Matrix.scalar(1, c, QQ) for c in (1, 2, 3))
    M = ActionModule(1, QQ, one, "right", None, sig)
    cert = transport_certificate(G, M, "chain", 2)
    assert cert.status == "hypothesis_unmet" and cert.witness is not None


def test_transport_preserves_cycles_and_boundaries(z4):
    T = inverse_transport_iso(z4, regular_dual_bimodule(z4, GF(3)).as_flavor("dual_right"))
    assert check_induced_containment(T)


def test_non_chain_map_is_flagged(z3):
    W = assemble_window(dual_left_family(z3, trivial_module(z3, QQ)), 2)
    maps = [Matrix.identity(d, QQ) for d in W.dims]
    maps[1] = Matrix.zeros(W.dims[1], W.dims[1], QQ)
    T = make_transport(W, W, maps)
    assert not T.chain_map and not T.isomorphism


def test_hochschild_reduction_trivial(corpus4):
    for name, G in corpus4:
        assert hochschild_reduction(G, trivial_module(G, QQ), "cochain", 3).certified, name
        assert hochschild_reduction(G, trivial_module(G, QQ, "right"), "chain", 3).certified, name


def test_hochschild_reduction_scaled_z3(z3):
    for variant, flavor in (("cochain", "dual_left"), ("chain", "right")):
        cert = hochschild_reduction(z3, scalar_module(z3, GF(5), 3, flavor), variant, 3)
        assert cert.certified
        assert cert.details["betti_group"] == cert.details["betti_hochschild"]


def test_hochschild_reduction_refuses_nonequivariant():
    G = cyclic_twist(4, 2)
    M = regular_dual_bimodule(G, QQ).as_flavor("dual_left")
    with pytest.raises(HypothesisUnmet):
        hochschild_reduction(G, M, "cochain", 2)
    cert = run_certificate(hochschild_reduction, G, M, "cochain", 2)
    assert cert.status == "hypothesis_unmet"
    assert cert.theorem == "hochschild_reduction/cochain"


def test_h0_h1_trivial(z3):
    M = trivial_module(z3, QQ, "dual_right")
    h0 = special_cocycles(z3, M, "H0_invariants")
    assert h0.matches and h0.dimension == 1
    h1 = special_cocycles(z3, M, "H1_crossed")
    assert h1.matches and h1.extra["coboundaries_match"]


def test_h0_c2_gf2(c2):
    M = trivial_module(c2, GF(2), "dual_right")
    h0 = special_cocycles(c2, M, "H0_invariants")
    W = assemble_window(dual_left_family(c2, trivial_module(c2, GF(2))), 2)
    assert h0.matches and h0.dimension == 1 == betti_numbers(W)[0]


def test_cocycles_need_dual_right(z3):
    with pytest.raises(ValueError):
        special_cocycles(z3, trivial_module(z3, QQ), "H0_invariants")
    with pytest.raises(ValueError):
        special_cocycles(z3, trivial_module(z3, QQ, "dual_right"), "H7")


def test_cocycle_sweep(corpus4):
    for name, G in corpus4:
        for M in (scalar_module(G, GF(5), 2, "dual_right"),
                  regular_dual_bimodule(G, GF(3)).as_flavor("dual_right")):
            for kind in ("H0_invariants", "H1_crossed"):
                assert cocycle_certificate(G, M, kind).certified, (name, kind)


def test_trace_dimension(z3, corpus6):
    assert special_cocycles(z3, None, "trace", QQ).dimension == 3
    for name, G in corpus6:
        c = special_cocycles(G, None, "trace", QQ)
        assert c.matches and c.dimension == trace_classes(G.mul), name
    s3 = special_cocycles(symmetric_group(3), None, "trace", QQ)
    assert s3.dimension == 3  # conjugacy classes


def test_functorial_identity(z3):
    f = HomGroupMorphism(z3, z3, tuple(z3.elements))
    T = functorial_map(f, "cochain_kgdual", 3)
    assert all(F == Matrix.identity(F.nrows, QQ) for F in T.maps)
    assert T.chain_map


def test_functorial_alpha_and_mod2(z3):
    cases = [HomGroupMorphism(z3, z3, z3.alpha),
             HomGroupMorphism(cyclic_group(4), cyclic_group(2), (0, 1, 0, 1))]
    for f in cases:
        for variant in ("cochain_kgdual", "chain_kg"):
            assert functoriality_certificate(f, variant, 3).certified


def test_functorial_sweep(corpus4):
    n = 0
    for (_, G), (_, H) in product(corpus4[:6], corpus4[:6]):
        for m in enumerate_morphisms(G, H):
            f = HomGroupMorphism(G, H, m)
            assert functoriality_certificate(f, "cochain_kgdual", 2).certified
            n += 1
    assert n > 10


def test_pullback_respects_composition():
    C4, C2 = cyclic_group(4), cyclic_group(2)
    g = HomGroupMorphism(C4, C4, (0, 3, 2, 1))
    f = HomGroupMorphism(C4, C2, (0, 1, 0, 1))
    fg = HomGroupMorphism(C4, C2, tuple(f.map[g.map[x]] for x in C4.elements))
    for n in range(3):
        assert pullback_matrix(fg, n, QQ) == pullback_matrix(g, n, QQ) @ pullback_matrix(f, n, QQ)
        assert pushforward_matrix(fg, n, QQ) == \
            pushforward_matrix(f, n, QQ) @ pushforward_matrix(g, n, QQ)


def test_certificate_document(z3):
    cert = transport_certificate(z3, trivial_module(z3, QQ, "dual_right"), "cochain", 2,
                                 instance="z3")
    doc = cert.to_doc()
    assert doc["status"] == "certified" and doc["instance"] == "z3"
    assert set(doc) >= {"theorem", "instance", "status"}


def test_trivial_group_everything():
    T = trivial_group()
    assert transport_certificate(T, trivial_module(T, QQ, "dual_right")).certified
    assert hochschild_reduction(T, trivial_module(T, QQ), "cochain").certified
    assert special_cocycles(T, None, "trace", QQ).dimension == 1
