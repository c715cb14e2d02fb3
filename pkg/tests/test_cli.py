from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from twistrep.cli import main, parse_ring
from twistrep.rings import Cyclotomic, Laurent


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_fibdim_golden(capsys):
    code, report, err = run(capsys, "fibdim", "--genus", "2", "--punctures", "0")
    assert code == 0
    assert report["result"]["dim"] == 5
    assert "= 5" in err


def test_verify_jones_b6(capsys):
    code, report, _ = run(capsys, "verify", "--rep", "jones", "--pres", "B6", "--mode", "exact")
    assert code == 0 and report["passed"]
    assert len(report["result"]["relators"]) == 10


def test_verify_failure_exit_code(capsys):
    code, report, err = run(capsys, "verify", "--rep", "jones", "--pres", "Gamma06", "--mode", "exact")
    assert code == 1 and not report["passed"]
    assert "FAIL" in err and "h6" in err


def test_verify_projective_at_tenth_root(capsys):
    code, report, _ = run(capsys, "verify", "--rep", "jones", "--pres", "Gamma06", "--mode", "projective", "--ring", "cyc:10")
    assert code == 0


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--rep", "nope", "--pres", "B6")[0] == 2
    assert run(capsys, "verify", "--rep", "jones", "--pres", "nope")[0] == 2
    assert run(capsys, "enumerate", "--rep", "jones", "--ring", "cyc:x")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_enumerate_and_cap(capsys, monkeypatch):
    code, report, _ = run(capsys, "enumerate", "--rep", "burau3-hecke", "--ring", "cyc:10")
    assert code == 0
    r = report["result"]
    assert (r["linear_order"], r["scalar_order"], r["projective_order"]) == (600, 10, 60)
    monkeypatch.setenv("TWISTREP_CAP", "10")
    assert run(capsys, "enumerate", "--rep", "burau3-hecke", "--ring", "cyc:10")[0] == 3


def test_signature(capsys):
    code, report, _ = run(capsys, "signature", "--rep", "burau4", "--ring", "cyc:10@3/10")
    assert code == 0
    assert report["result"]["solution_dim"] == 1
    assert report["result"]["signatures"][0][0]["signature"] in ([3, 0], [0, 3])


def test_weil(capsys):
    code, report, _ = run(capsys, "weil", "--g", "1", "--k", "2", "--check", "sl2-relations", "--check", "unitary")
    assert code == 0
    assert report["result"]["sl2_relations"]["S^4"]["in_R8"]
    assert all(report["result"]["unitary"].values())


def test_fox(capsys):
    code, report, _ = run(capsys, "fox", "--rank", "2", "--word", "1 2 -1")
    assert code == 0
    assert report["result"]["derivatives"]["x2"] == "+1*x1"
    code, report, _ = run(capsys, "fox", "--rank", "2", "--braid", "1")
    assert report["result"]["automorphism"] == [[1, 2, -1], [1]]


def test_rep_dump_and_induce(capsys, tmp_path):
    code = main(["rep", "dump", "--name", "burau4"])
    out, _ = capsys.readouterr()
    assert code == 0
    beta = tmp_path / "b4.json"
    beta.write_text(out)
    target = tmp_path / "induced.json"
    code, report, _ = run(capsys, "induce", "--local-system", "pure", "--beta", str(beta), "--out", str(target))
    assert code == 0 and report["result"]["dim"] == 9
    induced = json.loads(target.read_text())
    assert induced["group"] == "braid(3)"


def test_paper_suite_subset(capsys):
    code, report, err = run(capsys, "paper-suite", "--only", "1,2")
    assert code == 0
    assert [r["criterion"] for r in report["result"]] == [1, 2]
    assert "seconds" not in report["result"][0]
    assert "criterion  1 PASS" in err


def test_reports_are_byte_stable(capsys):
    main(["verify", "--rep", "burau4", "--pres", "Gamma12", "--mode", "auto"])
    a = capsys.readouterr().out
    main(["verify", "--rep", "burau4", "--pres", "Gamma12", "--mode", "auto"])
    b = capsys.readouterr().out
    assert a == b


def test_parse_ring():
    assert parse_ring("laurent") == (Laurent(), None)
    ring, emb = parse_ring("cyc:10@3/10")
    assert ring == Cyclotomic(10) and str(emb) == "3/10"


@pytest.mark.skipif(shutil.which("twistrep") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["twistrep", "fibdim", "--genus", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == {"dim": 5, "genus": 2, "punctures": 0}
