"""Command-line interface: determinism, exit codes, file round trips."""

import json

import numpy as np
import pytest

from lpmink import cli, geometry as geo


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_constants_csv(capsys):
    code, out, _ = run(["constants", "--p", "2", "--n", "3"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "name,computed,expected,deviation"
    table = {row.split(",")[0]: row.split(",")[1:] for row in lines[1:]}
    moment_row = table["moment+(standard_simplex)(e1)"]
    assert float(moment_row[0]) == pytest.approx(1 / 60, rel=1e-12)
    assert float(moment_row[2]) <= 1e-12


def test_constants_json_n2(capsys):
    code, out, _ = run(["constants", "--p", "2", "--n", "2", "--format", "json"], capsys)
    assert code == 0
    rows = {r["name"]: r for r in json.loads(out)}
    assert rows["origin_face+(standard_simplex)(e1)"]["computed"] == pytest.approx(0.5)
    assert rows["support_min+(upper_right_triangle)(e1+e2)"]["computed"] == pytest.approx(1.0)
    combined = rows["(support-origin_face+support_min-origin_face_min)+(standard_simplex)(e1)"]
    assert combined["expected"] == 0.5 and combined["deviation"] <= 1e-15


def test_eval_deterministic_and_homogeneous(tmp_path, capsys):
    body_path = tmp_path / "body.json"
    geo.save_body(geo.standard_simplex(3), body_path)
    argv = ["eval", "--operator", "moment+", "--body", str(body_path),
            "--p", "2", "--dirs", "5", "--seed", "9"]
    code_a, out_a, _ = run(argv, capsys)
    code_b, out_b, _ = run(argv, capsys)
    assert code_a == code_b == 0
    assert out_a == out_b  # byte-identical for identical configuration


def test_eval_with_direction_file(tmp_path, capsys):
    body_path = tmp_path / "body.json"
    geo.save_body(geo.standard_simplex(3), body_path)
    dirs_path = tmp_path / "dirs.json"
    dirs_path.write_text(json.dumps([[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [2.0, 0.0, 0.0]]))
    code, out, _ = run(
        ["eval", "--operator", "moment+", "--body", str(body_path),
         "--p", "2", "--dirs-file", str(dirs_path)],
        capsys,
    )
    assert code == 0
    rows = [line.split(",") for line in out.strip().split("\n")[1:]]
    assert float(rows[0][3]) == pytest.approx(1 / 60, rel=1e-12)
    assert float(rows[1][3]) == 0.0
    assert float(rows[2][3]) == pytest.approx(2**2 / 60, rel=1e-12)  # homogeneity


def test_eval_round_trip_identical_values(tmp_path, capsys):
    rng = np.random.default_rng(3)
    verts = rng.uniform(-1, 1, (4, 3))
    body = geo.Body(3, verts, ((0, 1, 2, 3),))
    path_a = tmp_path / "a.json"
    geo.save_body(body, path_a)
    loaded = geo.load_body(path_a)
    path_b = tmp_path / "b.json"
    geo.save_body(loaded, path_b)
    argv = lambda p: ["eval", "--operator", "moment_gap+", "--body", str(p),
                      "--p", "2.5", "--dirs", "7", "--seed", "1"]
    _, out_a, _ = run(argv(path_a), capsys)
    _, out_b, _ = run(argv(path_b), capsys)
    assert out_a == out_b


def test_verify_exit_codes(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run(
        ["verify", "--suite", "functional", "--n", "3", "--p", "2",
         "--seed", "1", "--tol", "1e-8", "--out", str(out_path)],
        capsys,
    )
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["passed"] is True
    assert all(r["passed"] for r in payload["reports"])
    # zero tolerance: floating point is inexact, worst case is serialized
    code, _, _ = run(
        ["verify", "--suite", "functional", "--n", "3", "--p", "2",
         "--seed", "1", "--tol", "0", "--out", str(out_path)],
        capsys,
    )
    assert code == 1
    payload = json.loads(out_path.read_text())
    failing = [r for r in payload["reports"] if not r["passed"]]
    assert failing and "direction" in failing[0]["worst_case"]


def test_verify_projection_suite(capsys):
    code, out, _ = run(
        ["verify", "--suite", "projection", "--n", "3", "--p", "2", "--seed", "2"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "projection" and payload["passed"]


def test_fit_builtin(capsys):
    code, out, _ = run(
        ["fit", "--builtin", "moment-", "--n", "3", "--p", "2", "--seed", "3"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    coeffs = payload["coefficients"]
    assert coeffs[1] == pytest.approx(1.0, abs=1e-8)
    assert max(abs(c) for i, c in enumerate(coeffs) if i != 1) <= 1e-8
    assert payload["warnings"] == []


def test_fit_coefficient_file(tmp_path, capsys):
    spec = {"domain": "Kn", "coefficients": [1.0, 2.0, 0.0, 0.0, 3.0, 0.0]}
    coeffs_path = tmp_path / "coeffs.json"
    coeffs_path.write_text(json.dumps(spec))
    code, out, _ = run(
        ["fit", "--coeffs", str(coeffs_path), "--n", "3", "--p", "2", "--seed", "3"], capsys
    )
    assert code == 0
    got = json.loads(out)["coefficients"]
    np.testing.assert_allclose(got, spec["coefficients"], atol=1e-6)


def test_fit_kno_requires_origin(tmp_path, capsys):
    bodies_dir = tmp_path / "bodies"
    bodies_dir.mkdir()
    geo.save_body(geo.translate(geo.standard_simplex(3), [4.0, 4.0, 4.0]), bodies_dir / "b.json")
    code, _, err = run(
        ["fit", "--builtin", "moment+", "--domain", "Kno", "--bodies", str(bodies_dir),
         "--n", "3", "--p", "2"],
        capsys,
    )
    assert code == 2
    assert "origin" in err


def test_demo_discontinuity(capsys):
    code, out, _ = run(["demo-discontinuity", "--p", "2", "--epsilons", "0.1,0.01"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "epsilon,value_hp,hausdorff"
    assert [float(x) for x in lines[1].split(",")][1] == 1.0
    assert lines[-1].startswith("limit,0")
    hausdorffs = [float(line.split(",")[2]) for line in lines[1:-1]]
    assert hausdorffs == sorted(hausdorffs, reverse=True)


def test_p_at_most_one_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["constants", "--p", "1.0", "--n", "3"])
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert "greater than 1" in err


def test_fit_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["fit", "--builtin", "a", "--coeffs", "b", "--n", "3", "--p", "2"])
    assert info.value.code == 2


def test_unknown_operator_is_error(tmp_path, capsys):
    body_path = tmp_path / "body.json"
    geo.save_body(geo.standard_simplex(3), body_path)
    code, _, err = run(
        ["eval", "--operator", "bogus+", "--body", str(body_path), "--p", "2"], capsys
    )
    assert code == 2 and "bogus" in err
