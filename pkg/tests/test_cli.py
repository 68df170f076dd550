import json
import subprocess
import sys

import pytest

from indideal.cli import main
from indideal.ideal import Monomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert out.count("\n") == 1
    return code, json.loads(out)


def test_poly_path(capsys):
    assert run_json(capsys, "poly", "--family", "path:3") == (0, {"coeffs": [1, 3, 1], "alpha": 2})


def test_poly_complete(capsys):
    assert run_json(capsys, "poly", "--family", "complete:4") == (0, {"coeffs": [1, 4], "alpha": 1})


def test_poly_missing_file(capsys):
    code, out, err = run(capsys, "poly", "--edges", "missing.txt")
    assert code == 2 and out == "" and "error" in err


def test_poly_from_edge_file(capsys, tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text("# five-cycle\n5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    assert run_json(capsys, "poly", "--edges", str(f)) == (0, {"coeffs": [1, 5, 5], "alpha": 2})


def test_bad_edge_file_is_input_error(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3\n1 4\n")
    code, _, err = run(capsys, "poly", "--edges", str(f))
    assert code == 2 and "line 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["poly"],
        ["poly", "--family", "path:3", "--edges", "x"],
        ["poly", "--family", "star:3"],
        ["poly", "--family", "cyclepow:3:3"],
        ["nonsense"],
    ],
)
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_invariants_path(capsys):
    code, d = run_json(capsys, "invariants", "--family", "path:3")
    assert code == 0
    assert d["betti"] == [5, 5, 1]
    assert (d["projdim_quotient"], d["regularity"], d["krull_dim"], d["cohen_macaulay"]) == (3, 3, 4, False)
    assert d["dual_linear_resolution"] is False
    assert list(d) == [
        "betti", "projdim_quotient", "regularity", "krull_dim",
        "cohen_macaulay", "primes", "dual_gens", "dual_linear_resolution",
    ]


def test_invariants_complete(capsys):
    _, d = run_json(capsys, "invariants", "--family", "complete:3")
    assert d["cohen_macaulay"] is True and d["projdim_quotient"] == 2
    assert d["dual_linear_resolution"] is True


def test_invariants_centipede(capsys):
    _, d = run_json(capsys, "invariants", "--family", "centipede:1")
    assert (d["regularity"], d["krull_dim"]) == (2, 2)


def test_invariants_undecided(capsys):
    _, d = run_json(capsys, "invariants", "--family", "cyclepow:9:3", "--dual-budget", "5")
    assert d["dual_linear_resolution"] == "undecided"


def test_generators(capsys):
    expected = {"generators": ["t1*t2", "s1*t2", "s2*t1"], "set_sizes": [0, 1, 1]}
    assert run_json(capsys, "generators", "--family", "path:2") == (0, expected)
    assert run_json(capsys, "generators", "--family", "complete:2") == (0, expected)


def test_generators_plain(capsys):
    code, out, _ = run(capsys, "generators", "--family", "path:3", "--format", "plain")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5 and lines[0].split()[0] == "t1*t2*t3"


def test_generators_cap(capsys):
    code, out, err = run(capsys, "generators", "--family", "path:10", "--max-gens", "50")
    assert code == 3 and out == "" and "max-gens" in err


def test_generators_round_trip(capsys):
    _, d = run_json(capsys, "generators", "--family", "cycle:6")
    assert [str(Monomial.parse(g)) for g in d["generators"]] == d["generators"]


def statuses(d):
    return {c["check"]: c["status"] for c in d["checks"]}


def test_verify_path(capsys):
    code, d = run_json(capsys, "verify", "--family", "path:3", "--checks", "quotients,primdec,betti")
    assert code == 0 and d["ok"]
    assert statuses(d) == {"quotients": "pass", "primdec": "pass", "betti": "pass"}


def test_verify_cycle_quotients(capsys):
    code, d = run_json(capsys, "verify", "--family", "cycle:5", "--checks", "quotients")
    assert code == 0 and statuses(d) == {"quotients": "pass"}


def test_verify_dual(capsys):
    code, d = run_json(capsys, "verify", "--family", "path:3", "--checks", "dual")
    assert code == 0
    (check,) = d["checks"]
    assert check["status"] == "pass" and check["dual_linear_resolution"] is False


def test_verify_over_cap_is_skipped(capsys):
    code, d = run_json(capsys, "verify", "--family", "path:8", "--checks", "primdec,betti,quotients")
    assert code == 0
    assert statuses(d) == {"primdec": "skipped: over cap", "betti": "skipped: over cap", "quotients": "pass"}


def test_verify_cap_override(capsys):
    code, d = run_json(capsys, "verify", "--family", "path:2", "--checks", "primdec", "--max-verify-vertices", "1")
    assert statuses(d) == {"primdec": "skipped: over cap"}


def test_verify_unknown_check(capsys):
    assert run(capsys, "verify", "--family", "path:3", "--checks", "bogus")[0] == 2


def test_verify_timing_flag(capsys):
    _, d = run_json(capsys, "verify", "--family", "path:3", "--checks", "quotients", "--timing")
    assert d["checks"][0]["seconds"] >= 0


def test_verify_undecided_is_not_failure(capsys):
    code, d = run_json(
        capsys, "verify", "--family", "cycle:5", "--checks", "dual", "--dual-budget", "2"
    )
    assert code == 0 and statuses(d) == {"dual": "undecided"}


def test_verify_failure_exit_code(capsys, monkeypatch):
    import indideal.cli as cli

    monkeypatch.setattr(cli, "betti_numbers", lambda poly: [0])
    code, d = run_json(capsys, "verify", "--family", "path:2", "--checks", "betti")
    assert code == 1 and not d["ok"]


@pytest.mark.parametrize("cmd", ["poly", "invariants", "generators", "verify"])
def test_deterministic_subprocess(cmd):
    argv = [sys.executable, "-m", "indideal", cmd, "--family", "cyclepow:7:2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
