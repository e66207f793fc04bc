import json

import pytest

from acyclic_lab import config
from acyclic_lab.cli import EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_YES, main
from acyclic_lab.colouring.model import Colouring
from acyclic_lab.colouring.verify import is_acyclic_colouring
from acyclic_lab.graph.core import complete_bipartite, cycle_graph
from acyclic_lab.graph.dimacs import read_dimacs
from acyclic_lab.harness.io import read_colouring, write_colouring


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def _read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def test_gen_gd(tmp_path):
    stem = str(tmp_path / "gd5")
    assert main(["gen", "gd", "--d", "5", "-o", stem]) == EXIT_YES
    g = read_dimacs(stem + ".col")
    assert (g.vertex_count, g.edge_count) == (12, 30)
    meta = _read_json(stem + ".meta.json")
    assert meta["parameters"] == {"d": 5}
    assert meta["canonical_colouring"]["k"] == 4
    assert _read_json(stem + ".manifest.json")["command"] == "gen gd"


def test_gen_chain_and_exception(tmp_path):
    assert main(["gen", "chain", "--k", "3", "--t", "2", "-o", str(tmp_path / "chain")]) == EXIT_YES
    assert read_dimacs(str(tmp_path / "chain.col")).vertex_count == 10
    assert main(["gen", "exception", "--name", "q3", "-o", str(tmp_path / "q3")]) == EXIT_YES
    assert read_dimacs(str(tmp_path / "q3.col")).edge_count == 12


def test_gen_missing_option_is_a_usage_error(tmp_path, capsys):
    assert main(["gen", "gd", "-o", str(tmp_path / "x")]) == EXIT_USAGE
    assert "--d" in capsys.readouterr().err


def test_bad_arguments_exit_with_usage_code():
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["reduce", "c9", "named:k3"])
    assert exc.value.code == EXIT_USAGE


def test_reduce_writes_provenance(tmp_path):
    stem = str(tmp_path / "cc")
    assert main(["reduce", "cc", "named:k3", "--k", "3", "-o", stem]) == EXIT_YES
    assert read_dimacs(stem + ".col").vertex_count == 12
    meta = _read_json(stem + ".meta.json")
    assert meta["construction"] == "cc"
    assert len(meta["provenance"]) == 12
    manifest = _read_json(stem + ".manifest.json")
    assert manifest["outcome"]["claims"] == ["2-degenerate", "bipartite"]


def test_reduce_precondition_failure(tmp_path, capsys):
    assert main(["reduce", "c6", "named:k4", "-o", str(tmp_path / "j")]) == EXIT_USAGE
    assert "universal vertex" in capsys.readouterr().err


def test_reduce_regular_needs_d(tmp_path):
    assert main(["reduce", "c3", "named:p3", "--k", "3", "-o", str(tmp_path / "r")]) == EXIT_USAGE
    assert main(["reduce", "c3", "named:p3", "--k", "3", "--d", "3", "-o", str(tmp_path / "r")]) == EXIT_YES


def test_solve_decisions(tmp_path, capsys):
    assert main(["solve", "named:c4", "--k", "2"]) == EXIT_NO
    assert _json(capsys)["verdict"] == "no"
    witness = str(tmp_path / "c4.colouring")
    assert main(["solve", "named:c4", "--k", "3", "-o", witness]) == EXIT_YES
    assert _json(capsys)["verdict"] == "yes"
    assert is_acyclic_colouring(cycle_graph(4), read_colouring(witness))


def test_solve_chromatic_mode(capsys):
    assert main(["solve", "named:k4", "--k", "3", "--chromatic"]) == EXIT_NO
    assert _json(capsys)["kind"] == "chromatic"


def test_solve_number(capsys):
    assert main(["solve", "named:k2,3", "--number"]) == EXIT_YES
    assert _json(capsys)["number"] == 3


def test_solve_budget_exhaustion(capsys):
    assert main(["solve", "named:petersen", "--k", "3", "--nodes", "1"]) == EXIT_UNKNOWN
    assert _json(capsys)["verdict"] == "unknown"


def test_solve_missing_file(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "none.col"), "--k", "3"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_count_classes(capsys):
    assert main(["count", "named:p3", "--k", "3", "--kind", "proper", "--representatives"]) == EXIT_YES
    out = _json(capsys)
    assert out["count"] == 2
    assert out["representatives"] == [[0, 1, 0], [0, 1, 2]]


def test_count_overflow(capsys):
    assert main(["count", "named:c6", "--k", "3", "--cap", "2"]) == EXIT_UNKNOWN
    assert "overflow" in _json(capsys)


def test_count_another(tmp_path, capsys):
    path = str(tmp_path / "f.txt")
    write_colouring(path, Colouring.of(3, [1, 2, 0, 0, 0]))
    assert main(["count", "named:k2,3", "--another", path]) == EXIT_NO
    assert _json(capsys)["another"] is None
    write_colouring(path, Colouring.of(3, [0, 1, 2, 0, 1, 2]))
    assert main(["count", "named:c6", "--another", path]) == EXIT_YES
    assert _json(capsys)["another"] is not None


def test_verify_regimes(tmp_path, capsys):
    stem = str(tmp_path / "regimes")
    assert main(["verify", "regimes", "--json", "--quiet", "-o", stem]) == EXIT_YES
    report = _json(capsys)
    assert report["suite"] == "regimes"
    assert _read_json(stem + ".manifest.json")["outcome"] == {"boundaries": "pass"}


def test_verify_seconds_leave_config_alone(tmp_path):
    stem = str(tmp_path / "regimes")
    before = config.SUITE_CASE_SECONDS
    assert main(["verify", "regimes", "--quiet", "--seconds", "5", "-o", stem]) == EXIT_YES
    assert config.SUITE_CASE_SECONDS == before
    assert _read_json(stem + ".manifest.json")["parameters"]["case_seconds"] == 5.0


def test_bound_for_a_graph(capsys):
    assert main(["bound", "named:k4", "--mad"]) == EXIT_YES
    out = _json(capsys)
    assert out["bounds"]["density_bound"] == "5/2"
    assert out["implied_minimum"] == 3


def test_bound_regimes(capsys):
    assert main(["bound", "--k", "4", "--d", "5"]) == EXIT_YES
    out = _json(capsys)
    assert out["regime"] == "candidate_npc"
    assert out["npc_degree_bound"] == 20
    assert main(["bound", "--k", "3", "--d", "4", "--max-degree"]) == EXIT_YES
    assert _json(capsys)["regime"] == "candidate_npc"


def test_bound_needs_something(capsys):
    assert main(["bound"]) == EXIT_USAGE


def test_named_graph_roundtrip_through_gen(tmp_path):
    assert main(["gen", "named", "--name", "k2,3", "-o", str(tmp_path / "k23")]) == EXIT_YES
    assert read_dimacs(str(tmp_path / "k23.col")) == complete_bipartite(2, 3)
