"""The check catalog: registry shape, selection, statuses, and report
emission."""

import json
import re

import pytest

from voalab import paperlab
from voalab.paperlab import (
    CheckResult, CheckSpec, DEFAULT_CONFIG, Report, all_checks, emit_report,
    get_check, run_checks,
)

EXPECTED_FINDINGS = {
    "lemma-4.4-gram-normalization",
    "lemma-4.5-c3",
    "thm-4.7-c-print",
}

CRITERIA = tuple("criterion-%d" % k for k in range(1, 11))


def test_registry_shape():
    checks = all_checks()
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids)) == 86
    for c in checks:
        assert re.fullmatch(r"[A-Za-z0-9.-]+", c.id), c.id
        assert c.description
        assert c.cost in ("fast", "heavy")
        assert callable(c.thunk)
        for t in c.tags:
            assert t in CRITERIA, (c.id, t)
    assert {c.id for c in checks if c.finding} == EXPECTED_FINDINGS


def test_every_check_is_tagged_except_meta():
    for c in all_checks():
        if c.id == "meta-paper-map":
            assert not c.tags
        else:
            assert c.tags, c.id


def test_get_check():
    c = get_check("lemma-3.8-u9-norm")
    assert c.id == "lemma-3.8-u9-norm"
    with pytest.raises(KeyError):
        get_check("no-such-check")


def test_locator_coverage():
    spec = get_check("meta-paper-map")
    computed, expected = spec.thunk(dict(DEFAULT_CONFIG))
    assert computed == expected == ()


def test_selection_semantics():
    rep = run_checks(selection=["lemma-3.8-u9-norm"])
    assert [c.id for c in rep.checks] == ["lemma-3.8-u9-norm"]
    assert rep.summary == {"total": 1, "pass": 1, "finding": 0, "fail": 0}

    rep2 = run_checks(selection=[])
    assert rep2.checks == []
    assert rep2.summary == {"total": 0, "pass": 0, "finding": 0, "fail": 0}

    with pytest.raises(ValueError):
        run_checks(selection=["nope-unknown"])

    rep3 = run_checks(selection=["criterion-1"])
    assert len(rep3.checks) == 12
    assert all(c.status == "pass" for c in rep3.checks)

    rep4 = run_checks(selection=["criterion-1", "lemma-3.6-E3E"])
    assert len(rep4.checks) == 12


def test_results_sorted_by_id():
    rep = run_checks(selection=["criterion-1"])
    ids = [c.id for c in rep.checks]
    assert ids == sorted(ids)


def test_finding_status_and_payload():
    rep = run_checks(selection=["thm-4.7-c-print"])
    res = rep.checks[0]
    assert res.status == "finding"
    assert res.computed == "(1/2, 1/4, 1/8)"
    assert res.expected == "(2, 4, 8)"
    assert res.ms >= 0


def test_fail_path_and_error_capture():
    ok = CheckSpec("tmp-equal", "equal", "catalog", lambda cfg: (1, 1))
    bad = CheckSpec("tmp-differ", "differ", "catalog", lambda cfg: (1, 2))

    def boom(cfg):
        raise RuntimeError("exploded")

    err = CheckSpec("tmp-error", "raises", "catalog", boom)
    assert paperlab._run_one(ok, dict(DEFAULT_CONFIG)).status == "pass"
    res = paperlab._run_one(bad, dict(DEFAULT_CONFIG))
    assert res.status == "fail"
    res2 = paperlab._run_one(err, dict(DEFAULT_CONFIG))
    assert res2.status == "fail"
    assert "RuntimeError" in res2.computed
    assert "exploded" in res2.computed


def test_parallel_matches_serial():
    serial = run_checks(selection=["criterion-1"], jobs=1)
    parallel = run_checks(selection=["criterion-1"], jobs=4)
    assert [(c.id, c.status, c.computed) for c in serial.checks] == \
        [(c.id, c.status, c.computed) for c in parallel.checks]


def test_config_defaults_and_copy():
    rep = run_checks(selection=[])
    assert rep.config == DEFAULT_CONFIG
    assert rep.config is not DEFAULT_CONFIG


def test_render_scalars():
    render = paperlab._render
    assert render(True) == "True"
    assert render(False) == "False"
    assert render(7) == "7"
    assert render(None) == "none"
    from fractions import Fraction
    assert render(Fraction(-3, 7)) == "-3/7"
    assert render((1, Fraction(1, 2))) == "(1, 1/2)"
    assert render({"b": 2, "a": 1}) == "{a: 1, b: 2}"


def test_emit_report_json():
    rep = run_checks(selection=["lemma-3.8-u9-norm", "thm-4.7-c-print"])
    raw = emit_report(rep, fmt="json")
    assert isinstance(raw, bytes)
    doc = json.loads(raw.decode("utf-8"))
    assert set(doc) == {"version", "config", "checks", "summary"}
    assert doc["version"] == paperlab.VERSION
    assert doc["summary"] == {"total": 2, "pass": 1, "finding": 1, "fail": 0}
    by_id = {c["id"]: c for c in doc["checks"]}
    assert set(by_id) == {"lemma-3.8-u9-norm", "thm-4.7-c-print"}
    assert by_id["lemma-3.8-u9-norm"]["computed"] == "5400"
    for c in doc["checks"]:
        assert set(c) == {"id", "status", "computed", "expected", "ms"}


def test_emit_report_text():
    rep = run_checks(selection=["lemma-3.8-u9-norm"])
    raw = emit_report(rep, fmt="text")
    text = raw.decode("utf-8")
    lines = text.splitlines()
    assert any("lemma-3.8-u9-norm" in ln and "pass" in ln for ln in lines)
    assert lines[-1] == "checks: 1  pass: 1  finding: 0  fail: 0"
    with pytest.raises(ValueError):
        emit_report(rep, fmt="yaml")


def test_reports_are_deterministic_up_to_timing():
    sel = ["lemma-3.6-E3E", "lemma-3.6-J2J"]
    a = emit_report(run_checks(selection=sel), fmt="json").decode()
    b = emit_report(run_checks(selection=sel), fmt="json").decode()
    scrub = lambda s: re.sub(r'"ms": [0-9.]+', '"ms": 0', s)
    assert scrub(a) == scrub(b)


def test_report_and_result_types():
    rep = run_checks(selection=["lemma-3.6-E3E"])
    assert isinstance(rep, Report)
    assert isinstance(rep.checks[0], CheckResult)
    assert rep.version == paperlab.VERSION
