import json
from pathlib import Path

import pytest

from stpack import serialize as ser
from stpack.cli import main
from stpack.decomposition import verify_decomposition
from stpack.fixtures import GRAPH_FIXTURES, MATROID_FIXTURES

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURE_DIR / f"{name}.json")


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_fixture_files_match_builders():
    for name, build in GRAPH_FIXTURES.items():
        obj = json.loads(Path(fixture_path(name)).read_text())
        assert ser.graph_from_obj(obj) == build()
    for name, build in MATROID_FIXTURES.items():
        obj = json.loads(Path(fixture_path(name)).read_text())
        loaded = ser.matroid_from_obj(obj)
        reference = build()
        assert loaded.ground == reference.ground
        assert ser.matroid_to_obj(loaded) == ser.matroid_to_obj(reference)


def test_analyze_fig1(capsys):
    code, out = run_cli(capsys, "analyze", fixture_path("FIG1"))
    assert code == 0
    report = json.loads(out)
    assert report["lambda"] == 2
    assert report["sigma"] == 2
    assert report["max_stp"] is True
    assert report["classes"]["2"] == "REDUCIBLE"


def test_analyze_c5_and_petersen(capsys):
    code, out = run_cli(capsys, "analyze", fixture_path("C5"))
    assert code == 0
    report = json.loads(out)
    assert (report["lambda"], report["sigma"], report["max_stp"]) == (2, 1, False)

    code, out = run_cli(capsys, "analyze", fixture_path("PETERSEN"))
    assert code == 0
    report = json.loads(out)
    assert (report["lambda"], report["sigma"], report["max_stp"]) == (3, 1, False)


def test_analyze_disconnected_graph(tmp_path, capsys):
    path = tmp_path / "two_parts.json"
    path.write_text(
        json.dumps(
            {
                "vertices": [1, 2, 3, 4],
                "edges": [
                    {"id": 0, "u": 1, "v": 2},
                    {"id": 1, "u": 3, "v": 4},
                ],
            }
        )
    )
    code, out = run_cli(capsys, "analyze", str(path))
    assert code == 1
    assert json.loads(out)["error"] == "disconnected"


def test_analyze_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _ = run_cli(capsys, "analyze", str(path))
    assert code == 2


def test_decompose_fig4_roundtrip(capsys):
    code, out = run_cli(capsys, "decompose", fixture_path("FIG4"))
    assert code == 0
    obj = json.loads(out)
    assert len(obj["irreducible_leaves"]) == 4
    reparsed = ser.decomposition_from_obj(obj)
    from stpack.fixtures import fig4

    assert verify_decomposition(fig4(), reparsed)


def test_decompose_fig3r_chain_shape(capsys):
    code, out = run_cli(capsys, "decompose", fixture_path("FIG3R"))
    assert code == 0
    obj = json.loads(out)
    root = next(n for n in obj["nodes"] if n["id"] == obj["root"])
    assert len(root["children"]) == 2


def test_decompose_c5_exits_1_with_certificate(capsys):
    code, out = run_cli(capsys, "decompose", fixture_path("C5"))
    assert code == 1
    obj = json.loads(out)
    assert obj["error"] == "not max-STP"
    cert = obj["certificate"]
    assert cert["cross_edges"] < cert["bound"]


def test_decompose_writes_dot(tmp_path, capsys):
    code, _ = run_cli(
        capsys, "decompose", fixture_path("FIG4"), "--dot", str(tmp_path / "dots")
    )
    assert code == 0
    names = sorted(p.name for p in (tmp_path / "dots").iterdir())
    assert "R.dot" in names
    assert sum(n.startswith("t_tree_") for n in names) == 2
    assert (tmp_path / "dots" / "R.dot").read_text().startswith("digraph")


def test_pack_command(capsys):
    code, out = run_cli(capsys, "pack", fixture_path("FIG1"), "--k", "2")
    assert code == 0
    assert len(json.loads(out)["packing"]) == 2
    code, out = run_cli(capsys, "pack", fixture_path("C5"), "--k", "2")
    assert code == 1
    assert json.loads(out)["certificate"] is not None


def test_cuts_command(capsys):
    code, out = run_cli(capsys, "cuts", fixture_path("FIG3L"))
    assert code == 0
    obj = json.loads(out)
    assert obj["lambda"] == 2
    assert len(obj["cuts"]) == 2
    assert obj["method"] == "packing-scan"
    code, out = run_cli(capsys, "cuts", fixture_path("K4"))
    assert code == 0
    assert json.loads(out)["method"] == "brute-force"


def test_matroid_analyze_fig1(capsys):
    code, out = run_cli(capsys, "matroid", "analyze", fixture_path("M_FIG1"))
    assert code == 0
    obj = json.loads(out)
    assert obj["sigma"] == 2 and obj["lambda"] == 2
    assert obj["max_bp"] is True
    assert len(obj["min_cocircuits"]) == 1
    assert obj["connected"] is True


def test_matroid_analyze_transversal_disconnected(capsys):
    code, out = run_cli(capsys, "matroid", "analyze", fixture_path("TRANSVERSAL_3x2"))
    assert code == 0
    obj = json.loads(out)
    assert obj["sigma"] == 2 and obj["lambda"] == 2
    assert obj["connected"] is False
    assert obj["crux"] == {"delta": 0, "elements": []}
    assert obj["notes"]
    code, _ = run_cli(capsys, "matroid", "decompose", fixture_path("TRANSVERSAL_3x2"))
    assert code == 1


def test_matroid_analyze_fano(capsys):
    code, out = run_cli(capsys, "matroid", "analyze", fixture_path("FANO"))
    assert code == 0
    obj = json.loads(out)
    assert obj["sigma"] == 2 and obj["lambda"] == 4
    assert obj["max_bp"] is False


def test_matroid_decompose_fig1(capsys):
    code, out = run_cli(capsys, "matroid", "decompose", fixture_path("M_FIG1"))
    assert code == 0
    obj = json.loads(out)
    assert len(obj["irreducible_leaves"]) == 2


def test_matroid_decompose_u13_terminal(capsys):
    code, out = run_cli(capsys, "matroid", "decompose", fixture_path("U_1_3"))
    assert code == 0
    obj = json.loads(out)
    assert len(obj["nodes"]) == 1
    assert obj["nodes"][0]["parallel_class_terminal"] is True


def test_ubb_verify_and_simulate(capsys):
    code, out = run_cli(capsys, "ubb", "verify", fixture_path("FIG1"), "--t", "1")
    assert code == 0
    assert json.loads(out)["ok"] is True

    code, out = run_cli(
        capsys, "ubb", "simulate", fixture_path("FIG1"),
        "--t", "1", "--trials", "100", "--seed", "7",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["survivals"] == 100


def test_ubb_t_too_large_is_input_error(capsys):
    code, _ = run_cli(capsys, "ubb", "verify", fixture_path("FIG1"), "--t", "14")
    assert code == 2


def test_ubb_budget_exceeded_exit(capsys):
    code, _ = run_cli(
        capsys, "ubb", "verify", fixture_path("FIG1"), "--t", "1", "--budget", "3"
    )
    assert code == 3


def test_identical_invocations_byte_identical(capsys):
    _, first = run_cli(capsys, "decompose", fixture_path("FIG4"))
    _, second = run_cli(capsys, "decompose", fixture_path("FIG4"))
    assert first == second
    _, s1 = run_cli(
        capsys, "ubb", "simulate", fixture_path("FIG1"), "--trials", "50", "--seed", "9"
    )
    _, s2 = run_cli(
        capsys, "ubb", "simulate", fixture_path("FIG1"), "--trials", "50", "--seed", "9"
    )
    assert s1 == s2


def test_json_out_writes_same_bytes(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    _, stdout = run_cli(
        capsys, "analyze", fixture_path("FIG1"), "--json-out", str(out_path)
    )
    assert out_path.read_text() == stdout
