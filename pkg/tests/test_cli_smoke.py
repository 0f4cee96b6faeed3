import json
import subprocess
import sys


def run(*args, expect=0) -> str:
    proc = subprocess.run(
        [sys.executable, "-m", "pkcheck.cli", *args],
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
    )
    assert proc.returncode == expect, proc.stderr.decode()
    return proc.stdout.decode()


def test_gen_and_check(tmp_path):
    path = tmp_path / "b3.json"
    run("gen", "bm", "3", "--weights", "uniform", "--out", str(path))
    data = json.loads(path.read_text())
    assert len(data["hyperplanes"]) == 9
    assert set(data["weights"]) == {"1/3"}
    report = json.loads(run("check", str(path)))
    assert report["verdict"] is True
    assert report["quadratic"]["values"][0]["Q"] == "0"


def test_gen_is_canonical(tmp_path):
    path = tmp_path / "a4.json"
    run("gen", "braid", "4", "--weights", "braid:1/4,1/4,1/4,1/4", "--out", str(path))
    assert run("gen", "braid", "4", "--weights", "braid:1/4,1/4,1/4,1/4") == path.read_text()


def test_check_negative_and_bad_input(tmp_path):
    path = tmp_path / "generic.json"
    run("gen", "generic", "2", "4", "--seed", "3", "--weights", "3/4,3/4,3/4,3/4",
        "--out", str(path))
    report = json.loads(run("check", str(path), expect=1))
    assert report["verdict"] is False
    assert report["quadratic"]["values"][0]["Q"] == "-3/8"

    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "hyperplanes": [[1, 0, 0]], "weights": ["x"]}')
    run("check", str(bad), expect=2)
    run("gen", "braid", "2", expect=2)


def test_lattice_report(tmp_path):
    path = tmp_path / "a5.json"
    run("gen", "braid", "5", "--out", str(path))
    report = json.loads(run("lattice", str(path)))
    assert report["delta2"] == 16
    assert report["irreducible_per_rank"] == {"1": 10, "2": 10, "3": 5, "4": 1}
    text = run("lattice", str(path), "--format", "text")
    assert "Flats" in text


def test_lattice_localization(tmp_path):
    path = tmp_path / "a5.json"
    run("gen", "braid", "5", "--out", str(path))
    report = json.loads(run("lattice", str(path), "--flat", "0,1,2"))
    assert report["localization"]["arrangement"]["dim"] == 1


def test_verify(tmp_path):
    path = tmp_path / "seven.json"
    run("gen", "seven-lines", "--weights", "seven:1/3,1/3,1/3", "--out", str(path))
    report = json.loads(run("verify", str(path), "--trials", "3", "--cy"))
    assert report["passed"] is True
    assert set(report["suites"]) == {"oracle", "eta", "omega", "parch2"}
    assert len(report["suites"]["eta"]) == 4
    assert all(t["opposite_sign_disagreements"] == [] for t in report["suites"]["parch2"])
    assert all("opposite_sign_disagreements" not in t for t in report["suites"]["omega"])
    text = run("verify", str(path), "--oracle", "--format", "text")
    assert "presentation oracle" in text


def test_verify_rejects_reducible(tmp_path):
    path = tmp_path / "coords.json"
    path.write_text('{"dim": 2, "hyperplanes": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}')
    run("verify", str(path), "--oracle", expect=2)


def test_check_report_is_byte_identical(tmp_path):
    path = tmp_path / "a5.json"
    run("gen", "braid", "5", "--weights", "braid:1/5,1/5,1/5,1/5,1/5", "--out", str(path))
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    run("check", str(path), "--out", str(first))
    run("check", str(path), "--out", str(second))
    assert first.read_bytes() == second.read_bytes()
    text = run("check", str(path), "--format", "text")
    assert run("check", str(path), "--format", "text") == text


def test_out_in_missing_directory_is_bad_input(tmp_path):
    path = tmp_path / "b3.json"
    run("gen", "bm", "3", "--weights", "uniform", "--out", str(path))
    missing = tmp_path / "nowhere" / "report.json"
    run("check", str(path), "--out", str(missing), expect=2)
    run("gen", "bm", "3", "--out", str(missing), expect=2)
    assert not missing.parent.exists()
