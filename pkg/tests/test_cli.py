import json
import subprocess
import sys

from pathlib import Path

import pytest

from flowknots.cli import main

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def run_cli(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *args):
    code, out, err = run_cli(capsys, "--json", *args)
    assert code == 0, err
    return json.loads(out)


def test_fixture_trefoil(capsys):
    r = run_json(capsys, "fixture", "dyadic_trefoil")
    assert {"ca = ab", "bc = ca", "ab = bc"} == set(r["relations"])
    assert r["homsS3"] == 12 and r["verdict"] == "not-free-at-stage"
    assert "crossing" in r["conventions"] and "branchLine" in r["conventions"]


def test_fixture_fibonacci(capsys):
    r = run_json(capsys, "fixture", "fibonacci_unknotted")
    assert r["verdict"] == "certified-free"
    assert r["simplifiedInclusion"] == "a1 -> aab, b1 -> ab"
    assert r["automorphism"] is True and r["duality"] is True


def test_fixture_thue_morse(capsys):
    assert run_json(capsys, "fixture", "thue_morse_simplified")["imageRank"] == 1


def test_unknown_fixture_exit_2(capsys):
    code, _, err = run_cli(capsys, "fixture", "figure_eight")
    assert code == 2 and "unknown fixture" in err


def test_expansion_dyadic(capsys):
    r = run_json(capsys, "expansion", f"{DATA}/dyadic.json")
    assert r["cechH1"]["group"] == "Z[1/2]" and r["cechH1"]["primes"] == {"2": "inf"}
    assert r["stableKnotGroup"] is None


def test_expansion_sturmian(capsys):
    r = run_json(capsys, "expansion", f"{DATA}/sturmian_123.json")
    assert r["stableKnotGroup"] == "<a1, b1 | >"
    assert r["cechH1"]["stableRank"] == 2 and all(r["duality"])


def test_expansion_depth_zero(capsys):
    r = run_json(capsys, "expansion", f"{DATA}/dyadic.json", "--depth", "0")
    assert r["presentations"] == ["<x | >"] and r["maps"] == []


def test_expansion_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(capsys, "expansion", str(bad))[0] == 2
    assert run_cli(capsys, "expansion", str(tmp_path / "missing.json"))[0] == 2
    incons = tmp_path / "incons.json"
    incons.write_text(json.dumps({"ranks": [1, 1], "bondings": [{"images": ["00"]}],
                                  "stages": ["fibonacci_unknotted"]}))
    assert run_cli(capsys, "expansion", str(incons))[0] == 3
    assert run_cli(capsys, "expansion", f"{DATA}/dyadic.json", "--depth", "9")[0] == 2


def test_sturmian_compare(capsys):
    r = run_json(capsys, "sturmian", "1", "1", "1", "--compare", "2", "1", "1")
    assert r["tailsEquivalent"] is True and r["stableKnotGroup"] == "<a1, b1 | >"
    assert run_json(capsys, "sturmian", "1", "--compare", "2")["tailsEquivalent"] is False


def test_sigma_w(capsys):
    r = run_json(capsys, "sigma-w", "01")
    assert r["images"] == ["000100", "001000"] and r["mu"] == 2 and r["returnTime"] == 6
    assert run_cli(capsys, "sigma-w", "012")[0] == 2


def test_certificate(capsys):
    r = run_json(capsys, "certificate", "--sub", f"{DATA}/fibonacci_sub.json", "-m", "3")
    g = [row["genusLB"] for row in r["rows"]]
    assert r["complete"] and len(g) == 3 and g == sorted(set(g))
    r = run_json(capsys, "certificate", "--cf", "1,1,1", "-m", "5", "--budget", "40")
    assert len(r["rows"]) == 5
    assert len(run_json(capsys, "certificate", "--cf", "1", "-m", "1")["rows"]) == 1


def test_certificate_partial_exit_0(capsys):
    r = run_json(capsys, "certificate", "--cf", "1", "-m", "40", "--budget", "2")
    assert r["complete"] is False


def test_homs(capsys):
    assert run_json(capsys, "homs", f"{DATA}/trefoil.json", "--target", "s3")["count"] == 12
    r = run_json(capsys, "homs", f"{DATA}/trefoil.json", "--target", "z/6")
    assert r["count"] == r["predictedFromAbelianization"] == 6
    assert run_cli(capsys, "homs", f"{DATA}/trefoil.json", "--target", "s7")[0] == 2


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sturmian", "0"])
    assert exc.value.code == 2


@pytest.mark.parametrize("args", [["fixture", "fibonacci_trefoil"], ["expansion", f"{DATA}/sturmian_123.json"],
                                  ["certificate", "--cf", "2,1", "-m", "4"]])
def test_json_byte_identical(capsys, args):
    a = run_cli(capsys, "--json", *args)[1]
    b = run_cli(capsys, "--json", *args)[1]
    assert a == b


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "flowknots", "fixture", "dyadic_unknotted"],
                         capture_output=True, text=True, check=True).stdout
    assert "inclusion: x -> aa" in out
