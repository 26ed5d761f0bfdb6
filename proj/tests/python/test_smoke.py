from pathlib import Path

import pytest

import taucrest

DATA = Path(__file__).resolve().parents[2] / "data"


def test_verify_dual_configuration():
    r = taucrest.verify(DATA / "a2_dual.alg")
    assert r["schema"] == taucrest.REPORT_SCHEMA
    assert r["all_verified"] is True
    assert len(r["Lambda"]["support_tau_tilting"]) == 6
    forms = [s["form"] for s in r["Lambda"]["support_tau_tilting"]]
    assert forms.count("neither") == 1


def test_examples_cover_both_builtins():
    reports = taucrest.examples()
    assert set(reports) == {"a2_dual", "a2_lower_triangular"}
    assert all(r["all_verified"] for r in reports.values())
    assert "triangular_table" in reports["a2_lower_triangular"]


def test_classify_from_text_and_overrides():
    text = taucrest.builtin_input("a2_dual")
    r = taucrest.classify(text, text=True, max_dim=3, seed=9)
    assert r["max_dim"] == 3 and r["seed"] == 9
    assert len(r["A"]["tau_rigid"]) == 3


def test_deterministic():
    assert taucrest.verify(DATA / "a2_dual.alg") == taucrest.verify(DATA / "a2_dual.alg", parallel=True)


def test_analyze_module():
    r = taucrest.analyze(DATA / "a2_dual_module.alg")
    assert r["command"] == "analyze"


def test_errors():
    with pytest.raises(taucrest.InputError, match="cannot open"):
        taucrest.verify(DATA / "missing.alg")
    with pytest.raises(ValueError):
        taucrest.verify(DATA / "a2_dual.alg", field=4)
