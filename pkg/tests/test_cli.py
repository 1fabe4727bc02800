import json
import subprocess
import sys

import pytest

from amdesigns.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_am_golay_json(capsys):
    code, out, _ = call(capsys, "am", "--code", "ext_golay_24_12", "--json")
    assert code == 0
    assert json.loads(out)["t_values"] == [5]


def test_am_verify(capsys):
    code, out, _ = call(capsys, "am", "--code", "ext_hamming_8_4", "--json", "--verify")
    assert code == 0
    assert json.loads(out)["verification"]["all_confirmed"] is True


def test_lemma(capsys):
    code, out, _ = call(capsys, "lemma", "--degree", "4", "--nmax", "100000", "--json")
    assert code == 0
    assert json.loads(out)["solutions"] == [[0, 0], [1, 0], [2, 1], [3, 2], [4, 3], [5, 4], [10, 8]]


def test_domain_error_exit(capsys):
    code, _, err = call(capsys, "criterion", "--case", "five", "--n", "15", "--d1", "2", "--d2", "4", "--t", "1", "--w", "0")
    assert code == 1
    assert "even n" in err


def test_usage_errors(capsys):
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "am", "--code", "e8", "--nope")[0] == 2
    assert call(capsys)[0] == 2


def test_unknown_code_is_domain_error(capsys):
    assert call(capsys, "code", "--code", "nosuch")[0] == 1


def test_code_from_file(capsys, tmp_path):
    path = tmp_path / "rep.txt"
    path.write_text("# repetition\n111\n")
    code, out, _ = call(capsys, "code", "--code", f"@{path}", "--json")
    assert code == 0
    assert json.loads(out)["weight_distribution"] == ["1", "0", "0", "1"]
    assert call(capsys, "code", "--code", f"@{tmp_path / 'missing'}")[0] == 1


def test_json_is_deterministic(capsys):
    argv = ("criterion", "--case", "four", "--n", "16", "--d1", "4", "--d2", "6", "--t", "2", "--w-max", "5", "--json")
    first = call(capsys, *argv)[1]
    second = call(capsys, *argv)[1]
    assert first == second
    data = json.loads(first)
    assert [z["w"] for z in data["zeros"]] == [2, 4, 5]


def test_scan_output_independent_of_threads(capsys):
    one = call(capsys, "scan", "--case", "five", "--nmax", "30", "--threads", "1")
    many = call(capsys, "scan", "--case", "five", "--nmax", "30", "--threads", "3")
    assert one[0] == many[0] == 0
    assert one[1] == many[1]
    assert json.loads(one[1].splitlines()[-1])["summary"]["feasible"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("macwilliams", "--code", "rm(1,4)", "--check", "--json"),
        ("harm", "--n", "5", "--h", "2", "--full", "--json"),
        ("design", "--code", "ext_hamming_8_4", "--weight", "4", "--t", "3", "--method", "harmonic", "--json"),
        ("delta-s", "--code", "ext_hamming_8_4", "--t-max", "4", "--json"),
        ("zdual", "--case", "four", "--n", "16", "--d1", "4", "--d2", "6", "--t", "2", "--json"),
        ("conjecture", "--ell", "4", "--n", "16", "--weights", "4", "6", "--json"),
    ],
)
def test_subcommands_emit_json(capsys, argv):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    json.loads(out)


def test_manifest(capsys):
    code, out, _ = call(capsys, "--manifest")
    data = json.loads(out)
    assert code == 0 and "feasibility_record" in data["schemas"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "amdesigns", "code", "--code", "repetition_5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[5,1,5]" in proc.stdout
