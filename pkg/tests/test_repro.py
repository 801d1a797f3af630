import pytest

from coxex.repro import (SYM5_TABLE, ReproResult, run_d12, run_example,
                         run_sym5, run_sym7)


def test_sym5_table_reproduces():
    res = run_sym5()
    assert res.ok, res.diffs
    assert res.details["excess"] == 0
    assert len(res.details["members"]) == 6


def test_d12_reproduces():
    res = run_d12()
    assert res.ok, res.diffs
    assert res.details["candidate_coset"] == 44
    assert res.details["excess"] == 46
    assert res.details["parabolic_excess"] == 60
    assert res.details["gap"] == 14


def test_sym7_gap_reproduces():
    res = run_sym7()
    assert res.ok, res.diffs
    assert res.details["niw_size"] < res.details["positive_roots"]


def test_run_example_dispatch():
    assert run_example("sym5-table").example == "sym5-table"
    with pytest.raises(ValueError):
        run_example("nope")


def test_diff_machinery_catches_mutations(monkeypatch):
    # corrupt one golden cell and make sure the repro reports a diff
    mutated = dict(SYM5_TABLE)
    mutated["(+2 +3)"] = {"e1-e2"}
    monkeypatch.setattr("coxex.repro.SYM5_TABLE", mutated)
    res = run_sym5()
    assert not res.ok
    assert any("(+2 +3)" in d for d in res.diffs)


def test_repro_result_json():
    doc = ReproResult("x", True, [], {"k": 1}).to_json_dict()
    assert doc == {"example": "x", "ok": True, "diffs": [], "details": {"k": 1}}
