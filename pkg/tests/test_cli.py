"""End-to-end tests for the command line interface."""

import json

from biqknot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_color_count_t24_over_z(capsys):
    code, out, _ = run(capsys, "color", "count", "torus2:4", "linear:4,3,0,1,2")
    assert code == 0
    assert out.strip() == "16"


def test_color_count_builtin_knot(capsys):
    code, out, _ = run(capsys, "color", "count", "knot:9_24", "dihedral:9")
    assert code == 0
    assert out.strip() == "81"


def test_color_list_table(capsys):
    code, out, _ = run(capsys, "color", "list", "torus2:1", "dihedral:3", "--table")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0\t1"
    assert lines[1:] == ["1\t1", "2\t2", "3\t3"]


def test_color_matrix(capsys):
    code, out, _ = run(capsys, "--format", "json", "color", "matrix", "torus2:4",
                       "4", "3", "0", "1", "2")
    assert code == 0
    data = json.loads(out)
    assert data["solutions"] == 16
    assert data["cols"] == 8
    assert len(data["rows"]) == 8


def test_color_usage_error(capsys):
    code, _, err = run(capsys, "color", "matrix", "torus2:4", "4")
    assert code == 2
    assert "usage error" in err


def test_algebra_dihedral_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "algebra", "dihedral", "9")
    assert code == 0
    f = tmp_path / "r9.biq"
    f.write_text(out)
    code, out2, _ = run(capsys, "algebra", "validate", str(f))
    assert code == 0
    assert "valid" in out2


def test_algebra_validate_bad_table(tmp_path, capsys):
    f = tmp_path / "bad.biq"
    f.write_text("2\n1 1\n2 2\n\n1 2\n2 1\n")
    code, out, _ = run(capsys, "algebra", "validate", str(f))
    assert code == 1
    assert "bijection" in out or "diagonal" in out


def test_algebra_endos_count(tmp_path, capsys):
    code, out, _ = run(capsys, "algebra", "dihedral", "6")
    f = tmp_path / "r6.biq"
    f.write_text(out)
    code, out, _ = run(capsys, "algebra", "endos", str(f))
    assert code == 0
    assert len(out.strip().splitlines()) == 36


def test_diagram_gen_and_strands(capsys):
    code, out, _ = run(capsys, "diagram", "gen", "torus2", "3")
    assert code == 0
    assert out == "X+ 0 1 3 2\nX+ 2 3 5 4\nX+ 4 5 1 0\n"
    code, out, _ = run(capsys, "--format", "json", "diagram", "strands", "torus2:3")
    assert code == 0
    assert len(json.loads(out)["strands"]) == 3


def test_diagram_validate_error(tmp_path, capsys):
    f = tmp_path / "bad.pd"
    f.write_text("X+ 0 1 2 0\n")
    code, out, _ = run(capsys, "diagram", "validate", str(f))
    assert code == 1
    assert "invalid" in out


def test_diagram_sum(tmp_path, capsys):
    code, out, _ = run(capsys, "diagram", "gen", "torus2", "3")
    f = tmp_path / "t3.pd"
    f.write_text(out)
    code, out, _ = run(capsys, "diagram", "sum", str(f), "0", str(f), "0")
    assert code == 0
    assert len(out.strip().splitlines()) == 6
    f2 = tmp_path / "granny.pd"
    f2.write_text(out)
    code, out, _ = run(capsys, "color", "count", str(f2), "dihedral:3")
    assert out.strip() == "27"


def test_quiver_indeg(capsys):
    code, out, _ = run(capsys, "quiver", "indeg", "knot:9_24", "dihedral:9",
                       "--endo", "3,6,9,3,6,9,3,6,9")
    assert code == 0
    assert out.strip() == "9u^9 + 72"


def test_quiver_iso_via_dumps(tmp_path, capsys):
    for name, d in (("a", "torus2:4"), ("b", "chain:3")):
        code, out, _ = run(capsys, "--format", "json", "quiver", "build", d,
                           "dihedral:4", "--endo", "2,4,2,4")
        assert code == 0
        (tmp_path / f"{name}.json").write_text(out)
    code, out, _ = run(capsys, "quiver", "iso", str(tmp_path / "a.json"),
                       str(tmp_path / "b.json"))
    assert code == 0
    assert out.strip() == "not isomorphic"


def test_bridge_seeds(capsys):
    code, out, _ = run(capsys, "bridge", "seeds", "torus2:3")
    assert code == 0
    assert "min seeds: 2" in out


def test_bridge_lower(capsys):
    code, out, _ = run(capsys, "bridge", "lower", "torus2:3", "--alg", "dihedral:3")
    assert code == 0
    assert "b1 >= 2" in out


def test_enhance_colgroup(capsys):
    code, out, _ = run(capsys, "enhance", "colgroup", "knot:6_1", "dihedral:9")
    assert code == 0
    assert out.strip() == "54u^18 + 18u^6 + 9u^2"


def test_enhance_rejects_biquandle(capsys):
    code, _, err = run(capsys, "enhance", "colgroup", "torus2:4", "linear:4,3,0,1,2")
    assert code == 1
    assert "quandle" in err


def test_knots_list_and_show(capsys):
    code, out, _ = run(capsys, "knots", "list")
    assert code == 0
    assert "9_24" in out
    code, out, _ = run(capsys, "knots", "show", "3_1")
    assert code == 0
    assert out == "X+ 0 1 3 2\nX+ 2 3 5 4\nX+ 4 5 1 0\n"


def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2


def test_unknown_knot_exits_1(capsys):
    code, _, err = run(capsys, "color", "count", "knot:10_139", "dihedral:3")
    assert code == 1


def test_repro_single_item(capsys):
    code, out, _ = run(capsys, "repro", "--item", "04-chain-counts")
    assert code == 0
    assert "PASS 04-chain-counts" in out


def test_repro_json_is_stable(capsys):
    code1, out1, _ = run(capsys, "--format", "json", "repro",
                         "--item", "11-bridge-machinery")
    code2, out2, _ = run(capsys, "--format", "json", "repro",
                         "--item", "11-bridge-machinery")
    assert code1 == code2 == 0
    assert out1 == out2


def test_repro_known_failure_exits_1(capsys):
    code, out, _ = run(capsys, "repro", "--item", "01-algebra-validation")
    assert code == 1
    assert "FAIL 01-algebra-validation" in out
    assert "note:" in out
