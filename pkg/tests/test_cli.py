import json
import subprocess
import sys

import pytest

from monogenic.cli import main
from monogenic.polynomial import CliffordPolynomial
from monogenic.seedparse import SeedSyntaxError, parse_seed
from monogenic.spherical import random_homogeneous, random_monogenic


def test_parse_examples():
    assert parse_seed("z").coefficients == (0, 1)
    assert parse_seed("3*z^4 - z + 1/2").coefficients == (0.5, -1, 0, 0, 3)
    assert parse_seed("  2 z^2+z^2 ").coefficients == (0, 0, 3)
    assert parse_seed("-z + 7").coefficients == (7, -1)
    assert parse_seed("z - z").coefficients == ()


@pytest.mark.parametrize("text,offset", [("z^", 2), ("3*", 2), ("z + ", 4), ("1/0", 2), ("z z", 2), ("", 0)])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(SeedSyntaxError) as info:
        parse_seed(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


@pytest.mark.parametrize("text", ["2i*z", "z + i", "3j"])
def test_complex_coefficients_rejected(text):
    with pytest.raises(SeedSyntaxError, match="complex"):
        parse_seed(text)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_transform_z_squared(capsys):
    code, out, _ = run(capsys, "transform", "--m", "3", "--k", "0", "--seed", "z^2")
    assert code == 0
    report = json.loads(out)
    assert report["monogenic"] is True
    assert CliffordPolynomial.from_json(report["output"]) == CliffordPolynomial.constant(3, -4)


def test_transform_higher_order(capsys):
    code, out, _ = run(capsys, "transform", "--m", "3", "--p", "0", "--random-pk", "1", "--seed", "z^5 - 2*z^4")
    assert code == 0
    assert json.loads(out)["config"] == {"m": 3, "k": 1, "p": 0}
    # a holomorphic seed is p-holomorphic for every p
    code, out, _ = run(capsys, "transform", "--m", "3", "--p", "1", "--seed", "z^6")
    assert code == 0
    assert json.loads(out)["paths_agree"] is True


def test_verify_radial_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "lemma21", "--m", "3", "--trials", "50")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["suites"][0]["cases"] == 50 * 4 * 4
    assert "lemma21" in err


def test_fischer_non_homogeneous_exits_2(tmp_path, capsys):
    p = CliffordPolynomial.variable(3, 1) ** 2 + CliffordPolynomial.variable(3, 2)
    path = tmp_path / "p.cpoly.json"
    path.write_text(json.dumps(p.to_json()))
    code, out, err = run(capsys, "fischer", "--m", "3", "--k", "2", "--in", str(path))
    assert code == 2
    assert out == ""
    assert "homogeneous" in err


def test_fischer_and_ck_extend(tmp_path, capsys):
    p = random_homogeneous(2, 3, 4)
    path = tmp_path / "p.cpoly.json"
    path.write_text(json.dumps(p.to_json()))
    code, out, _ = run(capsys, "fischer", "--m", "3", "--k", "2", "--in", str(path))
    assert code == 0
    assert len(json.loads(out)["components"]) == 3
    code, out, _ = run(capsys, "ck-extend", "--m", "3", "--in", str(path))
    assert code == 0
    assert CliffordPolynomial.from_json(json.loads(out)).at_x0_zero() == p


def test_transform_axial(tmp_path, capsys):
    code, out, _ = run(capsys, "transform-axial", "--m", "3", "--random-pk", "1", "--seed", "z^4")
    assert code == 0
    data = json.loads(out)
    assert data["paths_agree"] is True and data["monogenic"] is True
    Q = CliffordPolynomial.variable(3, 0).scale(3) + CliffordPolynomial.vector_variable(3)
    path = tmp_path / "q.cpoly.json"
    path.write_text(json.dumps(Q.to_json()))
    code, out, _ = run(capsys, "transform-axial", "--m", "3", "--in", str(path), "--seed", "z")
    assert code == 0


def test_lemma_check_command(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"parity": "odd", "terms": [{"x0": 1, "r": 3, "coeff": "2/3"}]}))
    code, out, _ = run(capsys, "lemma-check", "--m", "5", "--n", "2", "--in", str(path), "--random-pk", "1")
    assert code == 0
    data = json.loads(out)
    assert data["variant"] == "omega" and all(data["checks"].values())


@pytest.mark.parametrize(
    "argv",
    [
        ["transform", "--m", "4", "--seed", "z^2"],
        ["transform", "--m", "3", "--seed", "z^"],
        ["transform", "--m", "3", "--seed", "z", "--in", "/nonexistent.json"],
        ["transform", "--m", "3", "--seed", "z", "--k", "2"],
        ["fischer", "--m", "3", "--k", "2"],
        ["no-such-command"],
        ["transform-axial", "--m", "3", "--seed", "z"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_verification_failure_exits_1(tmp_path, capsys, monkeypatch):
    from monogenic import cli

    monkeypatch.setattr(cli, "is_monogenic", lambda p: False)
    path = tmp_path / "g.cpoly.json"
    path.write_text(json.dumps(CliffordPolynomial.variable(3, 1).to_json()))
    code, out, _ = run(capsys, "ck-extend", "--m", "3", "--in", str(path))
    assert code == 1
    assert out  # report still emitted


def test_json_round_trip_random():
    for seed in range(20):
        p = random_homogeneous(seed % 4, 3 + 2 * (seed % 2), seed)
        q = p + random_monogenic(seed % 3, p.m, seed).poly.scale(seed) * CliffordPolynomial.variable(p.m, 0)
        text = json.dumps(q.to_json())
        assert CliffordPolynomial.from_json(json.loads(text)) == q
        assert json.dumps(CliffordPolynomial.from_json(json.loads(text)).to_json()) == text


def test_repeated_invocations_byte_identical():
    argv = [sys.executable, "-m", "monogenic", "transform", "--m", "5", "--random-pk", "2", "--seed", "z^7 + 1/3*z^2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first
