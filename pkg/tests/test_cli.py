import io
import json

import pytest

from hog.cli import main
from hog.core import standard_cycle
from hog.io import graph_to_dict


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps(graph_to_dict(standard_cycle(3))))
    return str(path)


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.json"
    path.write_text(
        json.dumps({"nodes": ["u", "v"], "arcs": [{"id": "a", "src": "u", "tgt": "v"}]})
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_scc_text(capsys, c3_file):
    code, out, _ = run(capsys, "scc", c3_file)
    assert code == 0
    assert "component 0: x0 x1 x2" in out


def test_euler_json(capsys, c3_file):
    code, out, _ = run(capsys, "euler", c3_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["eulerian"] is True


def test_euler_construct_on_path_fails_with_exit_1(capsys, p2_file):
    code, _, err = run(capsys, "euler", p2_file, "--construct")
    assert code == 1
    assert "error" in err


def test_postman_not_strongly_connected(capsys, p2_file):
    code, _, err = run(capsys, "postman", p2_file)
    assert code == 1
    assert "strongly connected" in err


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "scc", str(bad))
    assert code == 2
    assert "error" in err


def test_dangling_arc_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"nodes": ["x"], "arcs": [{"id": "a", "src": "x", "tgt": "y"}]}))
    code, _, _ = run(capsys, "scc", str(bad))
    assert code == 2


def test_missing_file_exit_2(capsys):
    code, _, _ = run(capsys, "scc", "/nonexistent/graph.json")
    assert code == 2


def test_cofibrant_json_pipes_into_scc(capsys, monkeypatch, c3_file):
    code, out, _ = run(capsys, "cofibrant", c3_file, "--json")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out2, _ = run(capsys, "scc", "-")
    assert code == 0
    assert "component 0: x0 x1 x2" in out2


def test_edgelist_parsing(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("# a comment\nx y first\ny x\n\nx y  # trailing comment\n")
    code, out, _ = run(capsys, "scc", str(path))
    assert code == 0
    assert "component 0: x y" in out


def test_hom_count_matches_trace(capsys, c3_file):
    code, out, _ = run(capsys, "hom-count", c3_file, "6")
    assert code == 0
    assert out.splitlines() == ["0 3", "1 0", "2 0", "3 3", "4 0", "5 0", "6 3"]
    code, out_enum, _ = run(capsys, "hom-count", c3_file, "6", "--enumerate")
    assert code == 0
    assert out_enum == out


def test_hom_cap_env(capsys, monkeypatch, tmp_path):
    path = tmp_path / "loops.json"
    path.write_text(
        json.dumps(
            {
                "nodes": ["x"],
                "arcs": [{"id": f"a{i}", "src": "x", "tgt": "x"} for i in range(4)],
            }
        )
    )
    monkeypatch.setenv("HOG_HOM_CAP", "10")
    code, _, err = run(capsys, "hom-count", str(path), "8", "--enumerate")
    assert code == 1
    assert "10" in err


def test_weq_false_exits_zero(capsys, tmp_path, p2_file):
    dot = tmp_path / "dot.json"
    dot.write_text(json.dumps({"nodes": ["z"], "arcs": []}))
    morphism = tmp_path / "f.json"
    morphism.write_text(json.dumps({"nodes": {"u": "z", "v": "z"}, "arcs": {"a": None}}))
    # collapsing the arc needs an arc image; the only valid collapse has none,
    # so supply the legal morphism to the dot graph with a loop instead
    loop = tmp_path / "loop.json"
    loop.write_text(
        json.dumps({"nodes": ["z"], "arcs": [{"id": "l", "src": "z", "tgt": "z"}]})
    )
    morphism.write_text(json.dumps({"nodes": {"u": "z", "v": "z"}, "arcs": {"a": "l"}}))
    code, out, _ = run(capsys, "weq", p2_file, str(loop), str(morphism))
    assert code == 0
    assert "weak_equivalence: false" in out
    assert "witness" in out


def test_weq_oracle_lines(capsys, tmp_path, c3_file):
    ident = tmp_path / "ident.json"
    ident.write_text(
        json.dumps(
            {
                "nodes": {f"x{i}": f"x{i}" for i in range(3)},
                "arcs": {f"a{i}": f"a{i}" for i in range(3)},
            }
        )
    )
    code, out, _ = run(capsys, "weq", c3_file, c3_file, str(ident), "--oracle", "4")
    assert code == 0
    assert "weak_equivalence: true" in out
    assert "oracle n=3: 3 vs 3 bijective" in out


def test_invalid_morphism_exit_2(capsys, tmp_path, c3_file):
    bad = tmp_path / "bad_f.json"
    bad.write_text(json.dumps({"nodes": {"x0": "x0"}, "arcs": {}}))
    code, _, _ = run(capsys, "weq", c3_file, c3_file, str(bad))
    assert code == 2


def test_glue_and_surgery_commands(capsys, tmp_path, c3_file):
    code, out, _ = run(capsys, "glue-nodes", c3_file, "x0", "x2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["graph"]["nodes"]) == 2

    code, out, _ = run(capsys, "attach-cycle", c3_file, "x0", "2", "--json")
    assert code == 0
    assert len(json.loads(out)["graph"]["arcs"]) == 5

    parallel = tmp_path / "parallel.json"
    parallel.write_text(
        json.dumps(
            {
                "nodes": ["x", "y"],
                "arcs": [
                    {"id": "a", "src": "x", "tgt": "y"},
                    {"id": "b", "src": "x", "tgt": "y"},
                ],
            }
        )
    )
    code, out, _ = run(capsys, "glue-paths", str(parallel), "a", "b", "--json")
    assert code == 0
    assert len(json.loads(out)["graph"]["arcs"]) == 1


def test_decompose_command(capsys, tmp_path, c3_file):
    chain = tmp_path / "chain.json"
    chain.write_text(json.dumps({"coefficients": {"a0": 1, "a1": 1, "a2": 1}}))
    code, out, _ = run(capsys, "decompose", c3_file, str(chain))
    assert code == 0
    assert "cycle 0 (x1): a0 a1 a2" in out


def test_homology_command(capsys, c3_file):
    code, out, _ = run(capsys, "homology", c3_file, "--max-coeff", "1")
    assert code == 0
    assert "h1_rank: 1" in out
    assert "positive 0: a0:1 a1:1 a2:1" in out


def test_reflexive_roundtrip(capsys, monkeypatch, c3_file):
    code, out, _ = run(capsys, "reflexive", "add", c3_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["graph"]["degeneracies"]) == 3
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out2, _ = run(capsys, "reflexive", "strip", "-", "--json")
    assert code == 0
    assert len(json.loads(out2)["graph"]["arcs"]) == 3


def test_reflexive_weq_command(capsys, tmp_path):
    from hog.io import reflexive_to_dict
    from hog.reflexive import add_degeneracies
    from hog.core import standard_path

    arc_r = add_degeneracies(standard_path(2))
    dot_r = add_degeneracies(standard_cycle(0))
    a_path = tmp_path / "ar.json"
    d_path = tmp_path / "dr.json"
    f_path = tmp_path / "f.json"
    a_path.write_text(json.dumps(reflexive_to_dict(arc_r)))
    d_path.write_text(json.dumps(reflexive_to_dict(dot_r)))
    f_path.write_text(
        json.dumps(
            {
                "nodes": {"x0": "x0", "x1": "x0"},
                "arcs": {"a0": "loop_x0", "loop_x0": "loop_x0", "loop_x1": "loop_x0"},
            }
        )
    )
    code, out, _ = run(capsys, "reflexive", "weq", str(a_path), str(d_path), str(f_path))
    assert code == 0
    assert "weak_equivalence: false" in out


def test_pagerank_json(capsys, c3_file):
    code, out, _ = run(capsys, "pagerank", c3_file, "--json", "--report")
    assert code == 0
    payload = json.loads(out)
    assert sum(payload["scores"].values()) == pytest.approx(1.0)
    assert payload["report"]["irreducible"] is True


def test_outputs_are_deterministic(capsys, c3_file):
    _, first, _ = run(capsys, "homology", c3_file, "--json")
    _, second, _ = run(capsys, "homology", c3_file, "--json")
    assert first == second
