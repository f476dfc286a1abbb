import json

import pytest

from homgroups.algebra import group_algebra
from homgroups.catalog import symmetric_group
from homgroups.complexes import assemble_window, dual_left_family, right_family
from homgroups.documents import (DocumentError, algebra_to_doc, doc_kind, dumps, homgroup_to_doc,
                                 load_json, module_to_doc, parse_algebra, parse_group_endo,
                                 parse_homgroup, parse_module, parse_window, window_to_doc)
from homgroups.linalg import GF, QQ, betti_numbers
from homgroups.modules import regular_bimodule, regular_dual_bimodule, scalar_module


def roundtrip(doc):
    return json.loads(dumps(doc))


def test_homgroup_roundtrip(corpus4):
    for _, G in corpus4:
        doc = roundtrip(homgroup_to_doc(G))
        assert doc_kind(doc) == "homgroup"
        assert parse_homgroup(doc) == G


def test_plain_group_without_twist():
    doc = homgroup_to_doc(symmetric_group(3))
    del doc["alpha"]
    assert parse_homgroup(doc, twist_optional=True) == symmetric_group(3)
    with pytest.raises(DocumentError):
        parse_homgroup(doc)


def test_group_endo_document(samples):
    G, endo = parse_group_endo(load_json(samples / "z3_endo.json"))
    assert G.order == 3 and endo == [0, 2, 1]


def test_module_roundtrip(z3):
    for M in (scalar_module(z3, GF(5), 2, "dual_right"), regular_bimodule(z3, QQ),
              regular_dual_bimodule(z3, GF(7)).as_flavor("dual_left")):
        doc = roundtrip(module_to_doc(M))
        assert doc_kind(doc) == "module"
        assert parse_module(doc) == M


def test_rational_scalars_as_strings(z3):
    M = scalar_module(z3, QQ, 1, "dual_left")
    doc = module_to_doc(M)
    doc["beta"] = [["2/4"]]
    assert parse_module(doc).beta.to_dense()[0][0] * 2 == 1


def test_algebra_roundtrip(z3):
    A = group_algebra(z3, QQ)
    doc = roundtrip(algebra_to_doc(A))
    assert doc_kind(doc) == "algebra"
    assert parse_algebra(doc) == A


def test_window_roundtrip(z3):
    for W in (assemble_window(dual_left_family(z3, scalar_module(z3, GF(5), 2)), 3),
              assemble_window(right_family(z3, regular_bimodule(z3, QQ).as_flavor("right")), 2)):
        doc = roundtrip(window_to_doc(W))
        assert doc_kind(doc) == "window"
        V = parse_window(doc)
        assert V == W
        assert betti_numbers(V) == betti_numbers(W)


def test_window_triplets_sorted(z3):
    doc = window_to_doc(assemble_window(dual_left_family(z3, scalar_module(z3, QQ, 1)), 2))
    for trip in doc["differentials"]:
        keys = [(r, c) for r, c, _ in trip]
        assert keys == sorted(keys)


@pytest.mark.parametrize("doc", [
    [],
    {"what": 1},
    {"order": 2, "mul": [[0, 1], [1, 0]], "alpha": [0, 1], "inv": [0, 1]},
    {"order": 2, "mul": [[0, 1], [1, 0]], "alpha": [0, 1.5], "inv": [0, 1], "unit": 0},
    {"order": 2, "mul": [[0, 1], [1, 2]], "alpha": [0, 1], "inv": [0, 1], "unit": 0},
    {"order": 2, "mul": "table", "alpha": [0, 1], "inv": [0, 1], "unit": 0},
])
def test_malformed_homgroups(doc):
    with pytest.raises(DocumentError):
        kind = doc_kind(doc)
        assert kind == "homgroup"
        parse_homgroup(doc)


@pytest.mark.parametrize("patch", [
    {"field": "gf:4"},
    {"field": "reals"},
    {"beta": [[1, 0]]},
    {"beta": [["x"]]},
    {"flavor": "sideways"},
    {"right_action": [[[1]], [[1, 2]], [[1]]]},
])
def test_malformed_modules(z3, patch):
    doc = module_to_doc(scalar_module(z3, QQ, 1, "dual_right"))
    doc.update(patch)
    with pytest.raises(DocumentError):
        parse_module(doc)


def test_malformed_windows():
    good = {"direction": "cochain", "field": "rational", "dims": [1, 1],
            "differentials": [[[0, 0, "1"]]]}
    assert parse_window(good).maps[0].to_dense() == [[1]]
    for patch in ({"dims": [1, 1, 1]}, {"differentials": [[[3, 0, 1]]]},
                  {"differentials": [[[0, 0]]]}, {"direction": "up"}):
        with pytest.raises(DocumentError):
            parse_window({**good, **patch})


def test_load_json_errors(tmp_path, samples):
    with pytest.raises(DocumentError):
        load_json(samples / "malformed.json")
    with pytest.raises(DocumentError):
        load_json(tmp_path / "missing.json")


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
