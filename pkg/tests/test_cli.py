import json

import pytest

from mubar.checks import golden_dir
from mubar.cli import EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_VERIFY, RunConfig, UsageError, main
from mubar.linkfile import component_count, read_link

G = golden_dir()


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def report(path):
    data = json.loads(path.read_text())
    data.pop("timestamp")
    return data


def test_compute_br(capsys, tmp_path):
    code, out, _ = run(capsys, "compute", G / "br.braid", "--max-len", 3, "--output", tmp_path / "r.json")
    assert code == EXIT_OK and "length 3, mu(123) = 1" in out
    data = report(tmp_path / "r.json")
    assert data["table"]["summary"]["first_nonvanishing_length"] == 3
    assert data["obstructions"]["excluded_solvable_from"] == 0
    assert data["linking_numbers"] == {"12": 0, "13": 0, "23": 0}


def test_output_is_deterministic(capsys, tmp_path):
    for name in ("a", "b"):
        run(capsys, "compute", G / "bd-hopf.pd", "--max-len", 4, "--output", tmp_path / name)
    assert report(tmp_path / "a") == report(tmp_path / "b")


def test_index_queries(capsys):
    code, out, _ = run(capsys, "compute", G / "whitehead.pd", "--index", "1122", "--index", "1,2,1,2")
    assert code == EXIT_OK
    assert "mu(1122) = -1" in out and "mu(1212) = 2" in out


def test_orientation(capsys):
    code, out, _ = run(capsys, "compute", G / "hopf.pd", "--index", "12", "--orientation", "+-")
    assert code == EXIT_OK and "mu(12) = -1" in out
    assert run(capsys, "compute", G / "hopf.pd", "--orientation", "+")[0] == EXIT_PARSE


def test_budget_exit(capsys, tmp_path):
    code, _, _ = run(capsys, "op", "bing", "--times", 2, G / "br.braid", "--output", tmp_path / "bd2.pd")
    assert code == EXIT_OK and read_link(tmp_path / "bd2.pd").m == 12
    code, _, err = run(capsys, "compute", tmp_path / "bd2.pd", "--max-len", 12)
    assert code == EXIT_BUDGET and "budget" in err


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.pd"
    bad.write_text('{"type": "pd", "components": [[1, 2]], "crossings": [[1, 2, 3, 4, 1]]}')
    assert run(capsys, "compute", bad)[0] == EXIT_PARSE
    assert run(capsys, "compute", tmp_path / "missing.pd")[0] == EXIT_PARSE
    assert run(capsys, "compute", G / "br.braid", "--index", "1x")[0] == EXIT_PARSE
    assert run(capsys, "compute", G / "br.braid", "--index", "14")[0] == EXIT_PARSE
    assert run(capsys, "compute", G / "br.braid", "--max-len", 1)[0] == EXIT_PARSE


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


@pytest.mark.parametrize("argv, m", [
    (["op", "whitehead", "-t", "3"], 2),
    (["op", "commutator"], 3),
    (["op", "stack", G / "br.braid", G / "br.braid"], 3),
    (["op", "bing", G / "hopf.pd", "--target", "1"], 3),
])
def test_operators(capsys, tmp_path, argv, m):
    code, _, _ = run(capsys, *argv, "--output", tmp_path / "out")
    assert code == EXIT_OK and component_count(read_link(tmp_path / "out")) == m


def test_operator_misuse(capsys):
    assert run(capsys, "op", "stack", G / "hopf.pd")[0] == EXIT_PARSE
    assert run(capsys, "op", "bing", G / "hopf.pd", "--times", 2, "--target", 1)[0] == EXIT_PARSE
    assert run(capsys, "op", "twirl")[0] == EXIT_PARSE


def test_whitehead_to_stdout(capsys):
    code, out, _ = run(capsys, "op", "whitehead", "-t", "1")
    assert code == EXIT_OK and json.loads(out)["type"] == "pd"


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", "br", "--only", "lcs")
    assert code == EXIT_OK and "PASS" in out and "3/3 ok" in out


def test_verify_reports_known_failure(capsys):
    code, out, _ = run(capsys, "verify", "--only", "commutator")
    assert code == EXIT_OK and "XFAIL" in out


def test_verify_unknown_name(capsys):
    assert run(capsys, "verify", "--only", "zzz")[0] == EXIT_PARSE


def test_config_validation():
    with pytest.raises(UsageError):
        RunConfig(max_len=1)
    with pytest.raises(UsageError):
        RunConfig(budget=0)
    assert EXIT_VERIFY == 1
