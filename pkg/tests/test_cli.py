import json

from wilfgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_table(capsys):
    code, out, _ = run(capsys, "info", "--gens", "2,3")
    assert code == 0
    assert "W(S)     0" in out
    assert "Wilf holds: yes" in out


def test_info_json_figure(capsys):
    code, out, _ = run(capsys, "info", "--gens", "12,13,14,15,17,19,20,21",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 12
    assert len(data["P"]) == 8
    assert data["W"] == data["W_apery"]
    assert data["P_ge_m_over_3"] is True
    assert data["X"] == [13, 14, 15, 17, 19, 20, 21, 28, 30, 34, 35]


def test_info_degenerate(capsys):
    code, out, _ = run(capsys, "info", "--gens", "1")
    assert code == 0
    assert "Wilf holds: yes" in out


def test_info_parse_error(capsys):
    code, _, err = run(capsys, "info", "--gens", "2,x")
    assert code == 1
    assert "position" in err


def test_info_non_coprime(capsys):
    code, _, err = run(capsys, "info", "--gens", "4,6")
    assert code == 1


def test_truncated_flag(capsys):
    code, out, _ = run(capsys, "info", "--gens", "15,16,18,22", "--trunc",
                       "30", "--format", "json")
    assert code == 0
    assert json.loads(out)["c"] == 30


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "--gens", "12,13,14,15,17,19,20,21",
                       "--format", "dot")
    assert code == 0
    assert '"14" -- "14"' in out     # loop as self-edge
    assert out.count("--") == 10


def test_graph_med_notice(capsys):
    code, out, _ = run(capsys, "graph", "--gens", "4,5,6,7")
    assert code == 0
    assert "empty graph" in out
    assert "maximal embedding dimension" in out


def test_graph_summary(capsys):
    # loop at 17 plus the disjoint edges (13,21), (14,20), (15,19) touch all 7
    code, out, _ = run(capsys, "graph", "--gens", "12,13,14,15,17,19,20,21")
    assert code == 0
    assert "vm k = 7" in out
    assert "lambda = 3" in out
    assert "nu = 7" in out


def test_graph_json_roundtrip_to_realize(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--gens", "5,7,9", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "realize", "--graph", str(path), "--format",
                       "json")
    assert code == 0
    cert = json.loads(out)
    assert cert["verified"] is True

    # the same JSON is accepted by the synthetic analysis mode
    code, out, _ = run(capsys, "graph", "--graph", str(path))
    assert code == 0


def test_graph_requires_one_source(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"vertices": [0], "edges": [], "loops": [0]}')
    code, _, err = run(capsys, "graph", "--gens", "2,3", "--graph", str(path))
    assert code == 1
    code, _, err = run(capsys, "graph")
    assert code == 1


def test_missing_graph_file_is_io_error(capsys):
    code, _, err = run(capsys, "graph", "--graph", "/nonexistent/g.json")
    assert code == 3


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus-max", "8", "--format",
                       "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "g,n_g,gamma_g,wilf_violations,frac_P_ge_m3"
    rows = {int(line.split(",")[0]): line.split(",") for line in lines[1:]}
    assert rows[1][1] == "1"
    assert rows[7][1] == "39"
    assert rows[8][1] == "67"


def test_enumerate_classes_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus-max", "7", "--classes",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["7"]["gamma_g"] == 11
    assert sum(c["count"] for c in data["7"]["classes"].values()) == 39


def test_enumerate_worker_flag(capsys):
    code_a, out_a, _ = run(capsys, "enumerate", "--genus-max", "9",
                           "--classes", "--format", "csv")
    code_b, out_b, _ = run(capsys, "enumerate", "--genus-max", "9",
                           "--classes", "--format", "csv", "--workers", "2")
    assert code_a == code_b == 0
    assert out_a == out_b


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--genus-max", "31")
    assert code == 1
    assert "capped" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--genus-max", "6")
    assert code == 0
    assert "Wilf violations: 0" in out
    assert "failures" in out


def test_verify_empty_run(capsys):
    # genus bound 0 covers only the full set of nonnegative integers
    code, out, _ = run(capsys, "verify", "--genus-max", "0")
    assert code == 0
    assert "semigroups up to genus 0: 1" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--genus-max", "5", "--format",
                       "json")
    assert code == 0
    data = json.loads(out)
    assert data["wilf_violations"] == 0
    assert data["invariant_failures"] == []
    assert data["bucket_covered"] == data["semigroups"]


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "--n", "5", "--k", "4")
    assert code == 0
    assert "max edges = 10" in out
    code, out, _ = run(capsys, "extremal", "--n", "5", "--k", "4", "--lambda",
                       "2")
    assert code == 0
    assert "max edges = 9" in out


def test_extremal_dot_output(capsys, tmp_path):
    outdir = tmp_path / "witnesses"
    code, _, _ = run(capsys, "extremal", "--n", "4", "--k", "2", "--format",
                     "dot", "--out", str(outdir))
    assert code == 0
    files = sorted(outdir.glob("witness_*.dot"))
    assert files
    assert "graph G {" in files[0].read_text()


def test_extremal_infeasible(capsys):
    code, _, err = run(capsys, "extremal", "--n", "3", "--k", "7")
    assert code == 1


def test_out_file(capsys, tmp_path):
    path = tmp_path / "info.json"
    code, out, _ = run(capsys, "info", "--gens", "2,3", "--format", "json",
                       "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["m"] == 2


def test_unknown_command(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1
