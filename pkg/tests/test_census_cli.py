import json

import pytest

from modcomp import census as cen
from modcomp.cli import main
from modcomp.errors import SizeGuardError
from modcomp.graph import format_edge_list, named_graph, parse_edge_list
from modcomp.recognize import verify_module_sequence


@pytest.fixture
def graph_file(tmp_path):
    def write(name: str) -> str:
        path = tmp_path / f"{name}.txt"
        path.write_text(format_edge_list(named_graph(name)))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# --- census ---------------------------------------------------------------


def test_census_four_vertices():
    report = cen.run_census(cen.CensusConfig(n_min=4, n_max=4))
    assert report["graphs"] == 64
    assert report["class_counts"]["moduleComposed"] == 64
    assert report["total_violations"] == 0
    assert report["recognize_vs_bruteforce"] == {"compared": 64, "disagreements": 0, "examples": []}


def test_census_up_to_five_has_no_hhds_violation():
    report = cen.run_census(cen.CensusConfig(n_min=1, n_max=5))
    by_name = {imp["name"]: imp for imp in report["implications"]}
    assert by_name["mc=>hhdsFree"]["violations"] == 0
    assert by_name["mc=>hhdsFree"]["checked"] == report["class_counts"]["moduleComposed"]
    assert report["total_violations"] == 0


def test_bipartite_census_equivalence():
    cfg = cen.CensusConfig(n_min=1, n_max=6, family="bipartite", classes=("bipartite", "hhdgFree"))
    report = cen.run_census(cfg)
    counts = report["class_counts"]
    assert counts["bipartite"] == report["graphs"]
    assert counts["moduleComposed"] == counts["hhdgFree"]
    assert report["total_violations"] == 0


def test_cograph_census_flags_vacuous_direction():
    cfg = cen.CensusConfig(n_min=1, n_max=6, family="cograph", classes=("cograph", "co2C4free"))
    report = cen.run_census(cfg)
    by_name = {imp["name"]: imp for imp in report["implications"]}
    assert report["class_counts"]["moduleComposed"] == report["class_counts"]["co2C4free"] == report["graphs"]
    # co-2C4 has eight vertices, so nothing here can contradict either direction
    assert by_name["cograph&mc=>co2C4free"]["vacuous"]
    assert by_name["cograph&co2C4free=>mc"]["vacuous"]
    assert report["sequence_checks"]["cograph"] == {"checked": report["graphs"], "failed": 0}


def test_report_is_deterministic_across_jobs():
    cfg = cen.CensusConfig(mode="random", n_min=5, n_max=8, count=300, seed=4)
    one = cen.report_json(cen.run_census(cfg, chunk_size=50))
    again = cen.report_json(cen.run_census(cfg, chunk_size=50))
    cfg2 = cen.CensusConfig(mode="random", n_min=5, n_max=8, count=300, seed=4, jobs=2)
    parallel = cen.report_json(cen.run_census(cfg2, chunk_size=50)).replace('"jobs": 2', '"jobs": 1')
    assert one == again == parallel
    report = json.loads(one)
    assert report["format_version"] == cen.FORMAT_VERSION
    assert report["graphs"] == 300
    assert report["recognize_vs_bruteforce"]["disagreements"] == 0


def test_seed_changes_the_sample():
    a = list(cen.iter_graphs(cen.CensusConfig(mode="random", n_min=6, n_max=6, count=50, seed=1)))
    b = list(cen.iter_graphs(cen.CensusConfig(mode="random", n_min=6, n_max=6, count=50, seed=2)))
    assert len(a) == len(b) == 50 and a != b


def test_config_guards():
    with pytest.raises(SizeGuardError):
        cen.CensusConfig(n_min=1, n_max=8).validate()
    with pytest.raises(SizeGuardError):
        cen.CensusConfig(mode="random", n_min=5, n_max=10, count=1, classes=("perfect",)).validate()
    # left to the default, classes whose guard is too small are dropped rather than fatal
    assert "perfect" not in cen.CensusConfig(mode="random", n_min=5, n_max=10, count=1).resolved_classes()
    cen.CensusConfig(mode="random", n_min=5, n_max=10, count=1, classes=("hhdFree",)).validate()
    with pytest.raises(ValueError):
        cen.CensusConfig(mode="sideways").validate()
    with pytest.raises(ValueError):
        cen.CensusConfig(mode="random", count=1, p=1.5).validate()


def test_counterexamples_are_stored_and_reverified():
    # a deliberately false claim: every graph is bipartite
    fake = cen.Implication("mc=>bipartite", "not a theorem", ("moduleComposed",), ("bipartite",))
    record = {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
    assert cen.recheck_counterexample(record, fake)
    assert not cen.recheck_counterexample({"n": 3, "edges": [[0, 1]]}, fake)


# --- CLI ------------------------------------------------------------------


def test_cli_recognize_house_says_no(capsys, graph_file):
    code, out, _ = run(capsys, "recognize", graph_file("house"))
    assert code == 1 and out.startswith("NO")


def test_cli_recognize_gem_then_verify(capsys, graph_file):
    path = graph_file("gem")
    code, out, _ = run(capsys, "recognize", path, "--json")
    assert code == 0
    seq = json.loads(out)["sequence"]
    assert len(seq) == 5
    code, out, _ = run(capsys, "verify", path, " ".join(map(str, seq)))
    assert code == 0 and out.startswith("valid")
    code, _, _ = run(capsys, "verify", path, "0", "1", "2", "3", "4", "--independent")
    assert code == 1


def test_cli_verify_rejects_bad_sequences(capsys, graph_file):
    code, _, err = run(capsys, "verify", graph_file("gem"), "0 1 2")
    assert code == 2 and "permutation" in err
    code, _, _ = run(capsys, "verify", graph_file("gem"), "a b")
    assert code == 2


def test_cli_bdh_and_lexbfs(capsys, graph_file):
    code, out, _ = run(capsys, "bdh", graph_file("domino"))
    assert code == 1
    code, out, _ = run(capsys, "bdh", graph_file("C4"), "--json")
    assert code == 0 and json.loads(out)["sequence"][0] == 0
    code, out, _ = run(capsys, "lexbfs", graph_file("P4"), "0")
    assert code == 0 and out.split() == ["0", "1", "2", "3"]
    code, _, _ = run(capsys, "lexbfs", graph_file("P4"), "9")
    assert code == 2


def test_cli_classify(capsys, graph_file, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "classify", graph_file("C5"), "--out", str(out_path))
    assert code == 0 and "perfect" in out
    data = json.loads(out_path.read_text())
    assert data["classes"]["perfect"]["member"] is False
    assert data["classes"]["moduleComposed"]["member"] is False
    code, out, _ = run(capsys, "classify", graph_file("C5"), "--classes", "holeFree", "--json")
    assert set(json.loads(out)["classes"]) == {"holeFree", "moduleComposed"}


def test_cli_size_guard_exit_code(capsys, tmp_path):
    path = tmp_path / "big.txt"
    path.write_text(format_edge_list(named_graph("C", 12)))
    code, _, err = run(capsys, "classify", str(path), "--classes", "perfect")
    assert code == 3 and "perfect" in err
    code, _, _ = run(capsys, "census", "--exhaustive", "8")
    assert code == 3


def test_cli_parse_errors(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n0 0\n")
    code, _, err = run(capsys, "recognize", str(path))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "recognize", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run(capsys, "census")
    assert code == 2


def test_cli_generate(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "house")
    assert code == 0 and parse_edge_list(out) == named_graph("house")
    code, out, _ = run(capsys, "generate", "--random", "module-composed", "--n", "12", "--seed", "5")
    g = parse_edge_list(out)
    seq = [int(t) for t in out.splitlines()[0].split(":")[1].split()]
    assert verify_module_sequence(g, seq)
    target = tmp_path / "bdh.txt"
    code, _, _ = run(capsys, "generate", "--random", "bdh", "--n", "30", "--out", str(target))
    assert code == 0
    code, _, _ = run(capsys, "bdh", str(target))
    assert code == 0
    code, _, _ = run(capsys, "generate")
    assert code == 2


def test_cli_census(capsys, tmp_path):
    out_path = tmp_path / "census.json"
    code, out, _ = run(capsys, "census", "--exhaustive", "4", "--out", str(out_path))
    assert code == 0
    assert "64 labeled graphs" in out and "module-composed: 64" in out
    report = json.loads(out_path.read_text())
    assert report["graphs"] == 64 and report["class_counts"]["moduleComposed"] == 64
    code, out, _ = run(capsys, "census", "--random", "40", "--n", "5..7", "--seed", "3", "--json",
                       "--classes", "hhdFree,perfect")
    assert code == 0 and json.loads(out)["graphs"] == 40
    code, _, _ = run(capsys, "census", "--random", "5", "--n", "7..5")
    assert code == 2
