import hashlib
import json

import pytest

from prymfiber.formats.graph_json import graph_to_dict
from prymfiber.main import EXIT_DOMAIN, EXIT_INPUT, EXIT_OK, run

from conftest import banana, chain_of_bananas


@pytest.fixture
def graph_file(tmp_path):
    def write(data, name="graph.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    monkeypatch.setenv("PRYM_CONFIG_PATH", str(tmp_path / "no-config.yaml"))
    for name in ("PRYM_CYCLE_CAP", "PRYM_MONODROMY_CAP", "PRYM_T"):
        monkeypatch.delenv(name, raising=False)


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert code == EXIT_OK, out
    return json.loads(out)


def test_fiber_on_banana(capsys, graph_file):
    report = _run_json(capsys, ["fiber", graph_file(graph_to_dict(banana(5, (1, 1))))])
    assert report["L_prym"] == [1, 4, 16]
    assert report["length"] == "4096"
    assert report["g"] == 6


def test_fiber_inline_json(capsys):
    report = _run_json(capsys, ["fiber", "--json", json.dumps(graph_to_dict(chain_of_bananas()))])
    assert report["L_spin"] == [4, 8, 16]


def test_spin(capsys, graph_file):
    report = _run_json(capsys, ["spin", graph_file(graph_to_dict(banana(5)))])
    assert report == {"g": 4, "b1": 4, "L_spin": [2, 8, 16], "contains_one": False}


def test_check_on_tree(capsys, graph_file):
    tree = {
        "vertices": [{"id": "a", "genus": 1}, {"id": "b", "genus": 2}],
        "edges": [{"id": "n", "ends": ["a", "b"]}],
    }
    report = _run_json(capsys, ["check", graph_file(tree)])
    assert report["all_passed"]
    assert report["fiber_reduced"]
    assert report["etale_point"]
    assert report["corollary"] is None


def test_unstable_graph_exits_1(capsys, graph_file):
    bad = {"vertices": [{"id": "v", "genus": 0}], "edges": [{"id": "l", "ends": ["v", "v"]}]}
    assert run(["fiber", graph_file(bad)]) == EXIT_DOMAIN
    assert capsys.readouterr().out == ""


def test_parse_errors_exit_2(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    assert run(["fiber", str(broken)]) == EXIT_INPUT
    assert run(["fiber", str(tmp_path / "missing.json")]) == EXIT_INPUT
    assert run(["fiber", "--json", '{"vertices": 3}']) == EXIT_INPUT


@pytest.mark.parametrize(
    "document",
    [
        {"vertices": [{"id": "v", "genus": 2}], "edges": [{"id": "e", "ends": [["v"], "v"]}]},
        {"graph": {"vertices": [{"id": "v", "genus": 2}], "edges": []}, "sigma": [{"id": "e"}]},
        {"graph": {"vertices": [{"id": "v", "genus": 2}], "edges": []}, "monodromy": {"twist": {"e": {}}}},
    ],
)
def test_mistyped_ids_exit_2(capsys, document):
    assert run(["fiber", "--json", json.dumps(document)]) == EXIT_INPUT
    assert capsys.readouterr().out == ""


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as exc:
        run(["fiber", "--bogus"])
    assert exc.value.code == 2


def test_subcommand_required():
    with pytest.raises(SystemExit):
        run([])


def test_degrees_with_sigma_override(capsys, graph_file):
    path = graph_file(graph_to_dict(banana(2, (1, 1))))
    report = _run_json(capsys, ["degrees", path, "--sigma", "e1,e2"])
    assert report["degrees"] == {"u": 19, "v": 19, "E[e1]": 1, "E[e2]": 1}
    assert report["basic_inequality"] and report["closed_orbit"]
    cert = next(c for c in report["certificates"] if c["subcurve"] == ["u"])
    assert cert["m_Y"] == "19"


def test_degrees_bad_t(graph_file):
    assert run(["degrees", graph_file(graph_to_dict(banana(2, (1, 1)))), "--t", "9"]) == EXIT_DOMAIN


def test_degrees_not_eulerian(graph_file):
    assert run(["degrees", graph_file(graph_to_dict(banana(2, (1, 1)))), "--sigma", "e1"]) == EXIT_DOMAIN


def test_cover_from_document(capsys, graph_file):
    doc = {"graph": graph_to_dict(banana(2, (1, 1))), "sigma": ["e1", "e2"]}
    report = _run_json(capsys, ["cover", graph_file(doc)])
    assert len(report["covers"]) == 1
    cover = report["covers"][0]
    assert cover["admissible"] and cover["genus"] == 5
    assert cover["fixed_edges"] == ["e1", "e2"]
    assert report["census"]["monodromy_data"] == 1


def test_cover_with_explicit_monodromy(capsys, graph_file):
    doc = {
        "graph": graph_to_dict(banana(2, (1, 1))),
        "monodromy": {"split": {"u": "connected", "v": "connected"}},
    }
    report = _run_json(capsys, ["cover", graph_file(doc)])
    assert len(report["covers"]) == 1
    assert "census" not in report


def test_cover_dot(capsys, graph_file):
    doc = {"graph": graph_to_dict(banana(2, (1, 1))), "sigma": ["e1", "e2"]}
    assert run(["cover", graph_file(doc), "--format", "dot"]) == EXIT_OK
    assert capsys.readouterr().out.count("(fixed)") == 2


def test_export_dot(capsys, graph_file):
    assert run(["export-dot", graph_file(graph_to_dict(banana(5))), "--sigma", "e1,e2"]) == EXIT_OK
    assert capsys.readouterr().out.count("dashed") == 2


def test_json_only_commands_reject_dot(graph_file):
    assert run(["fiber", graph_file(graph_to_dict(banana(5))), "--format", "dot"]) == EXIT_INPUT


def test_out_file(tmp_path, capsys, graph_file):
    target = tmp_path / "report.json"
    assert run(["fiber", graph_file(graph_to_dict(banana(5))), "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["length"] == "256"


def test_search_graph_lines(capsys):
    assert run(["search", "--max-vertices", "2", "--max-edges", "2", "--max-genus-per-vertex", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert all("canonical" in json.loads(line) for line in lines)


def test_search_collisions(capsys):
    argv = ["search", "--mode", "collisions", "--max-vertices", "3", "--max-edges", "6", "--max-genus-per-vertex", "0"]
    assert run(argv) == EXIT_OK
    pairs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert any(
        p["L_prym"] == [1, 4, 16] and {tuple(p["first_L_spin"]), tuple(p["second_L_spin"])} == {(2, 8, 16), (4, 8, 16)}
        for p in pairs
    )


def test_search_corollary_summary(capsys):
    argv = ["search", "--mode", "corollary", "--max-vertices", "2", "--max-edges", "4", "--max-genus-per-vertex", "1"]
    assert run(argv) == EXIT_OK
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert lines[-1]["summary"]["counterexamples"] == 0


def test_search_space_too_large():
    assert run(["search", "--max-vertices", "8", "--max-edges", "14"]) == EXIT_DOMAIN


def test_runs_are_byte_identical(capsys, graph_file):
    digests = set()
    path = graph_file(graph_to_dict(chain_of_bananas()))
    for _ in range(2):
        for command in ("fiber", "spin", "check", "export-dot"):
            assert run([command, path]) == EXIT_OK
        digests.add(hashlib.sha256(capsys.readouterr().out.encode()).hexdigest())
    assert len(digests) == 1
