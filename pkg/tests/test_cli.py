import json
import subprocess
import sys

import pytest

from bcontact import modelfile, zoo

RUN = [sys.executable, "-m", "bcontact.cli"]


def run_cli(*args):
    return subprocess.run(
        RUN + list(args), capture_output=True, text=True, timeout=600
    )


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("models")
    paths = {}
    for name in ("abelian3", "solv3-f4", "dim5-tr", "x-solv3-f9"):
        p = root / f"{name}.json"
        modelfile.save_path(str(p), zoo.builtin(name).doc())
        paths[name] = str(p)
    bad = zoo.builtin("abelian3").doc()
    bad["eta"] = ["0", "0", "2"]
    bad["name"] = "bad-eta"
    p = root / "bad-eta.json"
    modelfile.save_path(str(p), bad)
    paths["bad-eta"] = str(p)
    p = root / "broken.json"
    p.write_text("{not json")
    paths["broken"] = str(p)
    return paths


def test_validate_ok(files):
    proc = run_cli("validate", files["abelian3"])
    assert proc.returncode == 0
    assert "ok" in proc.stdout


def test_validate_names_failed_identity(files):
    proc = run_cli("validate", files["bad-eta"])
    assert proc.returncode == 1
    assert "eta(xi) = 1" in proc.stdout
    assert "FAIL" in proc.stdout


def test_parse_error_exit_code(files):
    proc = run_cli("validate", files["broken"])
    assert proc.returncode == 2
    assert "input error" in proc.stderr


def test_missing_file_exit_code(tmp_path):
    proc = run_cli("classify", str(tmp_path / "nope.json"))
    assert proc.returncode == 2


def test_classify_text(files):
    proc = run_cli("classify", files["solv3-f4"])
    assert proc.returncode == 0
    assert "F4: yes" in proc.stdout
    assert "U2: yes" in proc.stdout
    assert "U1: no" in proc.stdout


def test_classify_json_both_metrics(files):
    g = json.loads(run_cli("classify", files["solv3-f4"], "--json").stdout)
    gt = json.loads(
        run_cli("classify", files["solv3-f4"], "--metric", "gtilde", "--json").stdout
    )
    assert g["metric"] == "g" and gt["metric"] == "gtilde"
    # the Reeb vector is parallel for neither metric on this entry, and the
    # partner flags mirror each other across the two reports
    assert g["membership"]["U1"] == gt["membership"]["U1_assoc"]
    assert g["membership"]["U1_assoc"] == gt["membership"]["U1"]
    assert gt["membership"]["F4"] is True
    assert g["scalars"]["theta(xi)"] == "2"


def test_classify_flat_model_all_yes(files):
    payload = json.loads(run_cli("classify", files["abelian3"], "--json").stdout)
    assert all(payload["membership"].values())


def test_verify_single_model_passes(files):
    proc = run_cli("verify", files["abelian3"])
    assert proc.returncode == 0
    assert "FAIL" not in proc.stdout
    assert "structure-axioms" in proc.stdout


def test_verify_float_mode(files):
    proc = run_cli("verify", files["solv3-f4"], "--mode", "float", "--eps", "1e-9")
    assert proc.returncode == 0, proc.stdout + proc.stderr


def test_verify_reports_failure_with_check_name(files):
    proc = run_cli("verify", files["bad-eta"])
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout
    assert "structure-axioms" in proc.stdout


def test_verify_boundary_model_names_failing_equivalences(files):
    proc = run_cli("verify", files["x-solv3-f9"])
    assert proc.returncode == 1
    failing = [l for l in proc.stdout.splitlines() if l.split(": ", 1)[-1].startswith("FAIL")]
    assert any("reeb-parallel-transfer" in l for l in failing)
    assert any("svk-pair-coincide-iff-u2" in l for l in failing)


def test_verify_json_output(files):
    proc = run_cli("verify", files["abelian3"], "--json")
    payload = json.loads(proc.stdout)
    assert payload["passed"] is True
    assert any(r["check"] == "shape-trace-identity" for r in payload["results"])


def test_verify_without_target_is_input_error():
    proc = run_cli("verify")
    assert proc.returncode == 2


def test_curvature_scalars_and_plane(files):
    proc = run_cli("curvature", files["dim5-tr"], "--plane", "0,1")
    assert proc.returncode == 0
    assert "tau[g]" in proc.stdout
    assert "phi-totally-real" in proc.stdout


def test_curvature_plane_vectors(files):
    proc = run_cli(
        "curvature", files["dim5-tr"], "--plane-vectors", "1,0,0,0,0;0,0,0,0,1"
    )
    assert proc.returncode == 0
    assert "xi-section" in proc.stdout
    # the svk sectional curvature of a Reeb section vanishes
    assert "k_svk[g] = 0" in proc.stdout


def test_curvature_degenerate_plane_named(files):
    proc = run_cli("curvature", files["dim5-tr"], "--plane", "0,0")
    assert proc.returncode == 2  # ill-formed plane spec
    proc = run_cli("curvature", files["abelian3"], "--plane-vectors", "1,0,0;2,0,0")
    assert proc.returncode == 1
    assert "degenerate" in proc.stderr


def test_report_summary(files):
    proc = run_cli("report", files["solv3-f4"])
    assert proc.returncode == 0
    assert "classes[g]" in proc.stdout
    assert "F4" in proc.stdout


def test_report_json(files):
    payload = json.loads(run_cli("report", files["solv3-f4"], "--json").stdout)
    assert payload["valid"] is True
    assert payload["classification"]["g"]["membership"]["F4"] is True
