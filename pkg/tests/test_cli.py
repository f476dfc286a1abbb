import json

import pytest

from homgroups.cli import main
from homgroups.documents import dumps, homgroup_to_doc, module_to_doc
from homgroups.catalog import cyclic_group
from homgroups.linalg import QQ
from homgroups.modules import regular_bimodule


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_exit_codes(capsys, samples):
    assert run(capsys, "verify", samples / "z3_twisted.json")[0] == 0
    code, out, _ = run(capsys, "verify", samples / "z3_bad_unit.json")
    assert code == 1
    assert json.loads(out)["reports"][0]["violations"]
    assert run(capsys, "verify", samples / "malformed.json")[0] == 2
    assert run(capsys, "verify", samples / "does_not_exist.json")[0] == 2


def test_verify_module_after_group(capsys, samples):
    code, out, _ = run(capsys, "verify", samples / "z3_twisted.json",
                       samples / "z3_scaled_gf5_dual_right.json")
    assert code == 0
    assert [r["ok"] for r in json.loads(out)["reports"]] == [True, True]


def test_cohomology_c2_gf2(capsys, samples):
    code, out, _ = run(capsys, "cohomology", samples / "c2.json", "--field", "gf:2",
                       "--max-degree", 5)
    assert code == 0
    assert json.loads(out)["betti"] == [1, 1, 1, 1, 1]


def test_cohomology_trivial_group(capsys, samples):
    code, out, _ = run(capsys, "cohomology", samples / "trivial_homgroup.json")
    assert code == 0 and json.loads(out)["betti"] == [1, 0, 0]


def test_homology_nonequivariant_exits_3(capsys, samples):
    code, _, err = run(capsys, "homology", samples / "z3_twisted.json",
                       samples / "z3_nonequivariant_right.json")
    assert code == 3
    assert "witness" in err


def test_bad_field_and_degree(capsys, samples):
    assert run(capsys, "cohomology", samples / "c2.json", "--field", "gf:4")[0] == 2
    assert run(capsys, "cohomology", samples / "c2.json", "--max-degree", -1)[0] == 2


def test_twist_and_enumerate(capsys, samples):
    code, out, _ = run(capsys, "twist", samples / "z3_endo.json")
    assert code == 0
    assert json.loads(out)["homgroup"]["alpha"] == [0, 2, 1]
    code, out, _ = run(capsys, "enumerate", samples / "c2.json")
    assert code == 0
    assert json.loads(out)["morphisms"] == [[0, 0], [0, 1]]
    code, out, _ = run(capsys, "enumerate", samples / "c2.json", "--target",
                       samples / "z4_twisted.json")
    # f(1) must be fixed by the doubling twist and square to f(0) = 0
    assert json.loads(out)["morphisms"] == [[0, 0]]


def test_theorems_bundle(capsys, samples):
    code, out, _ = run(capsys, "theorems", samples / "z3_twisted.json",
                       samples / "z3_scaled_gf5_dual_right.json", "--which", "transport,trace")
    assert code == 0
    certs = json.loads(out)["certificates"]
    assert all(c["status"] == "certified" for c in certs)
    trace = [c for c in certs if c["theorem"].endswith("trace")][0]
    assert trace["details"]["dimension"] == 3


def test_theorems_unmet_policy(capsys, samples):
    args = ("theorems", samples / "z4_twisted.json", samples / "z4_kg_dual_left.json",
            "--which", "hochschild")
    code, out, _ = run(capsys, *args)
    assert code == 3
    assert json.loads(out)["certificates"][0]["status"] == "hypothesis_unmet"
    assert run(capsys, *args, "--allow-unmet")[0] == 0


def test_hochschild_command(capsys, tmp_path):
    G = cyclic_group(3)
    g, m = tmp_path / "g.json", tmp_path / "m.json"
    g.write_text(dumps(homgroup_to_doc(G)))
    m.write_text(dumps(module_to_doc(regular_bimodule(G, QQ))))
    code, out, _ = run(capsys, "hochschild", g, m, "--max-degree", 2)
    assert code == 0
    assert json.loads(out)["betti"][0] == 3  # centre of Q[C3]


def test_export_and_reimport(capsys, samples, tmp_path):
    w = tmp_path / "w.json"
    code, out, _ = run(capsys, "cohomology", samples / "z3_twisted.json",
                       samples / "z3_scaled_gf5_dual_right.json", "--export-window", w)
    assert code == 0
    betti = json.loads(out)["betti"]
    code, out2, _ = run(capsys, "cohomology", "--from-window", w)
    assert code == 0 and json.loads(out2)["betti"] == betti


def test_table_format(capsys, samples):
    code, out, _ = run(capsys, "cohomology", samples / "c2.json", "--format", "table")
    assert code == 0 and not out.lstrip().startswith("{")


def test_repeat_runs_are_identical(capsys, samples):
    args = ("theorems", samples / "z3_twisted.json", samples / "z3_scaled_gf5_dual_right.json")
    first = run(capsys, *args)
    assert run(capsys, *args) == first


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit):
        main(["frobnicate"])
