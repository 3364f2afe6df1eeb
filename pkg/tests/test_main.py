import json

import pytest

from stanley_reisner_toolkit.complex_core import parse_src, parse_src_documents
from stanley_reisner_toolkit.main import main

FOUR_CYCLE = "n 4\n1 2\n2 3\n3 4\n1 4\n"


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "c4.src"
    path.write_text(FOUR_CYCLE)
    return path


def run(capsys, *argv):
    code = main(["-l", "error", *argv])
    return code, capsys.readouterr().out


def test_analyze_text(capsys, cycle_file):
    code, out = run(capsys, "analyze", str(cycle_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=4 d=2 c=2 e=4 facets=4"
    assert "indeg=2 rt=2 mu=2 bight=2" in lines[1]
    assert lines[-1] == "CM=yes buchsbaum=yes hypersurface=no reg=2"


def test_analyze_json_over_rationals(capsys):
    code, out = run(capsys, "analyze", "--facets", "1 2; 3 4", "--field", "q", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["invariants"]["mu"] == 4
    assert report["ring"]["field"] == "QQ"
    assert report["ring"]["is_cm"] is False
    assert report["ring"]["is_buchsbaum"] is True
    assert report["betti"]["regularity"] == 1


def test_analyze_reports_the_reisner_witness(capsys):
    code, out = run(capsys, "analyze", "--facets", "1 2 4; 1 3 4; 1 3 5; 2 3 5; 2 4 5")
    assert code == 0
    assert "Reisner witness: link of [] has h~1 != 0" in out


def test_dual(capsys, cycle_file, tmp_path):
    target = tmp_path / "dual.src"
    code, _ = run(capsys, "dual", str(cycle_file), "-o", str(target))
    assert code == 0
    assert parse_src(target.read_text()).facet_lists() == [[1, 3], [2, 4]]


def test_dual_of_full_simplex_is_a_usage_error(capsys):
    code, _ = run(capsys, "dual", "--facets", "1 2 3")
    assert code == 4


def test_enumerate_count(capsys):
    code, out = run(capsys, "enumerate", "--n", "4", "--count")
    assert (code, out) == (0, "114\n")
    code, out = run(capsys, "enumerate", "--n", "4", "--up-to-iso", "--count")
    assert (code, out) == (0, "20\n")


def test_enumerate_documents(capsys):
    code, out = run(capsys, "enumerate", "--n", "3", "--dim-ring", "2", "--pure")
    assert code == 0
    complexes = parse_src_documents(out)
    assert len(complexes) == 4
    assert all(cx.is_pure and cx.dim_ring == 2 for cx in complexes)


def test_enumerate_json(capsys):
    code, out = run(capsys, "enumerate", "--n", "3", "--dim-ring", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"n": 3, "facets": [[1, 2, 3]]}]


def test_enumerate_guard_exit_code(capsys):
    code, _ = run(capsys, "enumerate", "--n", "8", "--count")
    assert code == 3


def test_conflicting_purity_flags(capsys):
    code, _ = run(capsys, "enumerate", "--n", "3", "--pure", "--impure")
    assert code == 4


def test_verify_pass(capsys):
    code, out = run(capsys, "verify", "lem-hyper", "--n-max", "4")
    assert code == 0
    assert "result    PASS" in out


def test_verify_json_with_fields(capsys):
    code, out = run(capsys, "verify", "thm-main1", "--n-max", "3", "--fields", "2,q", "--format", "json")
    assert code == 0
    assert json.loads(out)["fields"] == ["GF(2)", "QQ"]


def test_verify_unknown_claim(capsys):
    code, _ = run(capsys, "verify", "thm-missing")
    assert code == 4


def test_verify_guard_is_skipped(capsys):
    code, out = run(capsys, "verify", "rem-turan", "--n-max", "5", "--d-max", "2", "--max-turan-sets", "5")
    assert code == 3
    assert "SKIPPED" in out


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.src"
    bad.write_text("n 3\n1 9\n")
    code, _ = run(capsys, "analyze", str(bad))
    assert code == 2


def test_missing_file(capsys, tmp_path):
    code, _ = run(capsys, "analyze", str(tmp_path / "nope.src"))
    assert code == 4


def test_claims_listing(capsys):
    code, out = run(capsys, "claims", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 22
    assert rows[0]["claim_id"] == "thm-main1"


def test_reproduce_subset(capsys):
    code, out = run(capsys, "reproduce", "--claims", "lem-hyper,ex-notlin", "--fields", "2")
    assert code == 0
    assert "2 claims: 2 PASS, 0 COUNTEREXAMPLE, 0 SKIPPED" in out


def test_reproduce_json(capsys):
    code, out = run(capsys, "reproduce", "--claims", "ex-notlin", "--format", "json")
    assert code == 0
    summary = json.loads(out)
    assert summary["passed"] == 1
    assert summary["rows"][0]["claim_id"] == "ex-notlin"


def test_example(capsys):
    code, out = run(capsys, "example", "thm-sample", "--param", "c=2", "--param", "d=3", "--param", "e=5")
    assert code == 0
    assert parse_src(out).multiplicity == 5


def test_example_bad_parameter(capsys):
    code, _ = run(capsys, "example", "notlin", "--param", "d=x")
    assert code == 4


def test_yaml_config(capsys, tmp_path, cycle_file):
    config = tmp_path / "config.yaml"
    config.write_text("field: '3'\nformat: json\n")
    code, out = run(capsys, "analyze", str(cycle_file), "-y", str(config))
    assert code == 0
    assert json.loads(out)["homology"]["field"]["characteristic"] == 3


def test_argparse_errors_exit_with_usage_code():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate"])
    assert exc.value.code == 4
