import json

import pytest

sasaki_audit = pytest.importorskip("sasaki_audit")


def test_fixture_detect():
    inst = sasaki_audit.fixture("hyp")
    out, code = sasaki_audit.detect(inst)
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == "0"
    assert data["beta"] == "-2"
    assert data["kind"] == "beta_kenmotsu"


def test_fixture_soliton_solve():
    inst = sasaki_audit.fixture("hyp")
    out, code = sasaki_audit.soliton_solve(inst)
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "solved"
    assert data["lambda"] == "-2"
    assert data["mu"] == "-2"
    assert data["class"] == "shrinking"
    assert all(c["holds"] for c in data["identities"])


def test_soliton_check_exit_codes():
    inst = sasaki_audit.fixture("hyp")
    _, ok = sasaki_audit.soliton_check(inst, "-2", "-2")
    assert ok == 0
    _, bad = sasaki_audit.soliton_check(inst, "0", "0")
    assert bad == 1


def test_manifest_round_trip():
    manifest = {
        "dimension": 3,
        "brackets": [
            {"i": 1, "j": 3, "coeffs": ["-2", "0", "0"]},
            {"i": 2, "j": 3, "coeffs": ["0", "-2", "0"]},
        ],
        "phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]],
        "xi": 3,
    }
    inst = sasaki_audit.from_manifest(json.dumps(manifest))
    out, code = sasaki_audit.geometry(inst)
    assert code == 0
    assert json.loads(out)["r"] == "-24"


def test_bad_manifest_raises():
    with pytest.raises(ValueError):
        sasaki_audit.from_manifest("{}")


def test_theorem_reports_deterministic():
    inst = sasaki_audit.fixture("hyp")
    out1, code1 = sasaki_audit.theorems(inst)
    out2, code2 = sasaki_audit.theorems(inst)
    assert out1 == out2
    assert code1 == code2 == 1  # the instance carries exact findings
    reports = json.loads(out1)["reports"]
    assert len(reports) == 17
    by_id = {r["id"]: r for r in reports}
    t81 = by_id["T8.1"]
    assert t81["hypothesis_holds"] is True
    assert t81["conclusion_holds"] is False
    assert t81["witness"]["r"] == "-24"
    assert t81["witness"]["predicted_r"] == "-28"


def test_su2_family():
    inst = sasaki_audit.fixture("su2(1)")
    out, code = sasaki_audit.soliton_solve(inst)
    assert code == 0
    data = json.loads(out)
    assert (data["lambda"], data["mu"]) == ("1", "0")
    assert data["class"] == "expanding"
