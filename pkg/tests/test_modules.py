import random

import pytest
from hypothesis import given, settings, strategies as st

from homgroups.catalog import cyclic_group, cyclic_twist, trivial_group, twisted_corpus
from homgroups.linalg import GF, QQ, Matrix, rank
from homgroups.modules import (FLAVORS, ActionModule, direct_sum, dual_left_to_dual_right,
                               dual_right_to_dual_left, left_module_to_right, linear_dual,
                               regular_bimodule, regular_dual_bimodule, right_module_to_left,
                               scalar_module, trivial_module, trivialize_left_action,
                               trivialize_right_action, verify_module)
from homgroups.reports import HypothesisUnmet, ShapeError

CORPUS = twisted_corpus(4)


def random_module(G, field, flavor, rng, dim=2):
    """Conjugated direct sum of scalar modules: random but always valid."""
    M = scalar_module(G, field, rng.randrange(1, 5), flavor)
    for _ in range(dim - 1):
        M = direct_sum(M, scalar_module(G, field, rng.randrange(0, 5), flavor))
    while True:
        P = Matrix.from_dense(field, [[rng.randrange(5) for _ in range(dim)] for _ in range(dim)])
        if rank(P) == dim:
            return M.conjugate(P)


def test_trivial_and_scaled_modules_satisfy_everything():
    G = cyclic_twist(3, 2)
    for flavor in FLAVORS:
        for M in (trivial_module(G, QQ, flavor), scalar_module(G, GF(5), 2, flavor)):
            rep = verify_module(G, M)
            assert rep.ok, (flavor, rep.axioms())


def test_scaled_identity_values():
    G = cyclic_twist(3, 2)
    M = scalar_module(G, GF(5), 2)
    rho = M.left_action
    assert (rho[1] @ rho[G.alpha[2]]).to_dense() == [[4]]
    assert (M.beta @ rho[G.mul[1][2]]).to_dense() == [[4]]


def test_regular_bimodule_all_flavors(corpus6):
    for name, G in corpus6:
        M = regular_bimodule(G, QQ)
        assert verify_module(G, M).ok, name
        for flavor in ("left", "right"):
            assert verify_module(G, M.as_flavor(flavor)).ok, (name, flavor)
        info = verify_module(G, M).info
        assert info["left_beta_equivariant"] and info["right_beta_equivariant"]


def test_regular_bimodule_small_cases():
    T = trivial_group()
    M = regular_bimodule(T, QQ)
    assert M.dim == 1 and M.beta.to_dense() == [[1]]
    C3 = cyclic_group(3)
    R = regular_bimodule(C3, QQ)
    # alpha = id: ordinary group algebra, rho(g) rho(h) = rho(gh)
    for g in C3.elements:
        for h in C3.elements:
            assert R.left_action[g] @ R.left_action[h] == R.left_action[C3.mul[g][h]]


def test_regular_dual_is_dual_bimodule(corpus6):
    literal_failures = []
    for name, G in corpus6:
        rep = verify_module(G, regular_dual_bimodule(G, GF(3)))
        assert rep.ok, (name, rep.axioms())
        if not rep.info["twisted_bimodule_identity"]:
            literal_failures.append(name)
    assert "C4[0,2,0,2]" in literal_failures


def test_missing_action_is_rejected():
    G = cyclic_group(2)
    with pytest.raises(ValueError):
        ActionModule(1, QQ, Matrix.identity(1, QQ), "dual_left")
    with pytest.raises(ValueError):
        ActionModule(1, QQ, Matrix.identity(1, QQ), "wobbly", (Matrix.identity(1, QQ),) * 2)
    with pytest.raises(ShapeError):
        ActionModule(2, QQ, Matrix.identity(1, QQ), "dual_left", (Matrix.identity(1, QQ),) * 2)
    bad = ActionModule(1, QQ, Matrix.identity(1, QQ), "dual_left", (Matrix.identity(1, QQ),) * 3)
    with pytest.raises(ShapeError):
        verify_module(G, bad)


def test_violations_carry_witnesses():
    G = cyclic_group(2)
    one, two = Matrix.scalar(1, 1, QQ), Matrix.scalar(1, 2, QQ)
    M = ActionModule(1, QQ, one, "dual_left", (one, two))
    rep = verify_module(G, M)
    assert not rep.ok
    assert all(len(v.witness) in (1, 2) for v in rep.violations)
    assert "dual_left" in rep.axioms()


def test_dual_transport(corpus4):
    for name, G in corpus4:
        for M in (trivial_module(G, QQ, "dual_right"), scalar_module(G, GF(5), 2, "dual_right"),
                  regular_dual_bimodule(G, QQ).as_flavor("dual_right")):
            L = dual_right_to_dual_left(G, M)
            assert verify_module(G, L).ok, name
            back = dual_left_to_dual_right(G, L)
            assert back.right_action == M.right_action and back.beta == M.beta


def test_transport_of_trivial_is_trivial():
    G = cyclic_twist(3, 2)
    M = scalar_module(G, GF(5), 2, "dual_right")
    L = dual_right_to_dual_left(G, M)
    assert L.left_action == M.right_action


def test_right_to_left_transport(corpus4):
    for name, G in corpus4:
        M = regular_bimodule(G, QQ).as_flavor("right")
        L = right_module_to_left(G, M)
        assert verify_module(G, L).ok, name
        assert left_module_to_right(G, L).right_action == M.right_action


def test_linear_dual_examples(corpus4):
    for name, G in corpus4:
        assert linear_dual(G, trivial_module(G, QQ, "right")) == trivial_module(G, QQ, "dual_left")
        D = linear_dual(G, regular_bimodule(G, QQ).as_flavor("right"))
        assert D.flavor == "dual_left" and verify_module(G, D).ok, name


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(CORPUS) - 1), st.integers(0, 10 ** 6))
def test_linear_dual_of_random_right_module(gi, seed):
    _, G = CORPUS[gi]
    M = random_module(G, GF(3), "right", random.Random(seed))
    assert verify_module(G, M).ok
    assert verify_module(G, linear_dual(G, M)).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(CORPUS) - 1), st.integers(0, 10 ** 6))
def test_beta_intertwines_twisted_actions(gi, seed):
    _, G = CORPUS[gi]
    rng = random.Random(seed)
    L = random_module(G, GF(3), "dual_left", rng)
    R = random_module(G, GF(3), "dual_right", rng)
    for g in G.elements:
        assert L.left_action[g] @ L.beta == L.beta @ L.left_action[G.alpha[g]]
        assert R.beta @ R.right_action[G.alpha[g]] == R.right_action[g] @ R.beta


def test_beta_intertwines_regular_duals(corpus6):
    for _, G in corpus6:
        D = regular_dual_bimodule(G, QQ)
        for g in G.elements:
            assert D.left_action[g] @ D.beta == D.beta @ D.left_action[G.alpha[g]]
            assert D.beta @ D.right_action[G.alpha[g]] == D.right_action[g] @ D.beta


def test_trivialize_right_action():
    G = cyclic_twist(3, 2)
    for M in (trivial_module(G, QQ), scalar_module(G, GF(5), 3)):
        B = trivialize_right_action(G, M)
        assert B.flavor == "dual_bimodule" and verify_module(G, B).ok


def test_trivialize_right_action_sweep(corpus4):
    unmet = 0
    for name, G in corpus4:
        M = regular_dual_bimodule(G, QQ).as_flavor("dual_left")
        if verify_module(G, M).info["left_beta_equivariant"]:
            assert verify_module(G, trivialize_right_action(G, M)).ok, name
        else:
            with pytest.raises(HypothesisUnmet) as e:
                trivialize_right_action(G, M)
            g = e.value.witness[0]
            assert M.left_action[G.alpha[g]] @ M.beta != M.beta @ M.left_action[g]
            unmet += 1
    assert unmet > 0


def test_trivialize_left_action(corpus4):
    for _, G in corpus4:
        B = trivialize_left_action(G, regular_bimodule(G, QQ).as_flavor("right"))
        assert verify_module(G, B).ok


def test_identity_twist_is_representation():
    G = cyclic_group(3)
    M = regular_dual_bimodule(G, QQ).as_flavor("dual_left")
    for g in G.elements:
        for h in G.elements:
            assert M.left_action[g] @ M.left_action[h] == M.left_action[G.mul[g][h]]


def test_flavor_preconditions():
    G = cyclic_twist(3, 2)
    with pytest.raises(ValueError):
        dual_right_to_dual_left(G, trivial_module(G, QQ, "dual_left"))
    with pytest.raises(ValueError):
        linear_dual(G, trivial_module(G, QQ, "dual_left"))


def test_linear_dual_generate_and_check():
    """Random 2x2 candidates over GF(3) on Z/2 (both twists); keep the verified ones."""
    from itertools import product as iproduct

    F = GF(3)
    rng = random.Random(11)
    mats = [Matrix.from_dense(F, [[a, b], [c, d]]) for a, b, c, d in iproduct(range(3), repeat=4)]
    found = 0
    for G in (cyclic_group(2), cyclic_twist(2, 0)):
        for _ in range(3000):
            beta, s1 = rng.choice(mats), rng.choice(mats)
            M = ActionModule(2, F, beta, "right", None, (beta, s1))
            if not verify_module(G, M).ok:
                continue
            found += 1
            assert verify_module(G, linear_dual(G, M)).ok
    assert found >= 20
