import json

import pytest

from motivic.cli import main
from motivic.suites import (SuiteContext, SuiteResult, emit_report,
                            run_suite)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_epoly_text(capsys):
    code, out, _ = run(capsys, "epoly", "cone(grass(2,6))")
    assert code == 0
    assert out.strip() == \
        "-(x*y)^2 - (x*y)^4 + (x*y)^5 + (x*y)^7 + (x*y)^9"


def test_epoly_json_with_trace_and_eval(capsys):
    code, out, _ = run(capsys, "epoly", "affine(3) * cone(grass(2,6))",
                       "--format", "json", "--trace", "--at", "2", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["expr"] == "affine(3) * cone(grass(2,6))"
    assert payload["dimension"] == 12
    assert payload["euler"] == "1"  # constant coefficients, cone has chi 1
    assert payload["value_at"]["value"] == "5216"
    assert any("cone" in s["rule"] for s in payload["trace"])


def test_epoly_rational_evaluation(capsys):
    code, out, _ = run(capsys, "epoly", "torus", "--format", "json",
                       "--at", "1/2", "1/3")
    assert code == 0
    assert json.loads(out)["value_at"]["value"] == "-5/6"


def test_epoly_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "epoly", "nosuch(3)")
    assert code == 2
    assert "unknown space" in err


def test_count_rank_json(capsys):
    code, out, _ = run(capsys, "count", "rank", "--n", "2", "--p", "2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == {"0": 1, "2": 35, "4": 28}
    assert payload["enumeration_size"] == 64


def test_count_fibre_json(capsys):
    code, out, _ = run(capsys, "count", "pfaffian-fibre", "--n", "3",
                       "--p", "2", "--value", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["observed"] == 13888
    assert payload["enumeration_size"] == 32768


def test_count_cap_refusal_exit_3(capsys):
    code, _, err = run(capsys, "count", "rank", "--n", "3", "--p", "5")
    assert code == 3
    assert "exceeds cap" in err


def test_count_nonprime_exit_2(capsys):
    code, _, err = run(capsys, "count", "rank", "--n", "2", "--p", "4")
    assert code == 2
    assert "prime" in err


def test_verify_dt(capsys):
    code, out, _ = run(capsys, "verify", "dt", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "dt"
    assert payload["summary"]["passed"] == payload["summary"]["total"]


def test_verify_unknown_suite_exit_2(capsys):
    code = main(["verify", "nosuch"])
    assert code == 2


def test_verify_suite_flag_only_for_katz(capsys):
    code, _, err = run(capsys, "verify", "dt", "--suite", "pfaffian")
    assert code == 2
    code, out, _ = run(capsys, "verify", "katz", "--suite", "pfaffian",
                       "--p", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"]
    assert all("rank" not in c["description"] for c in payload["checks"])
    assert all(c["pass"] for c in payload["checks"])
    code, _, err = run(capsys, "verify", "katz", "--suite", "bogus",
                       "--p", "2")
    assert code == 2


def test_verify_katz_impossible_cap_exit_3(capsys):
    code, _, err = run(capsys, "verify", "katz", "--p", "2", "--cap", "10")
    assert code == 3
    assert "exceeds the cap" in err


def test_hilb4_total(capsys):
    code, out, _ = run(capsys, "hilb4", "total")
    assert code == 0
    assert out.strip() == ("(x*y)^6 + (x*y)^7 + 3*(x*y)^8 + 3*(x*y)^9 "
                           "+ 3*(x*y)^10 + (x*y)^11 + (x*y)^12")
    code, out, _ = run(capsys, "hilb4", "total", "--format", "json")
    payload = json.loads(out)
    assert payload["match"] is True and payload["euler"] == "13"


def test_hilb4_strata(capsys):
    code, out, _ = run(capsys, "hilb4", "strata", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [s["label"] for s in payload["strata"]] == \
        ["V4", "L4", "P4minusL4"]
    assert all(s["match"] for s in payload["strata"])
    assert all(s["citation"] for s in payload["strata"])
    assert payload["match"] is True
    # three stratum rows plus the total row in text form
    code, out, _ = run(capsys, "hilb4", "strata")
    assert len(out.strip().splitlines()) == 4


def test_dt_count(capsys):
    code, out, _ = run(capsys, "dt", "count", "--m", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"m": 4, "plane_partitions": 13,
                       "macmahon_coefficient": 13, "hilb4_euler": 13,
                       "match": True}
    code, out, _ = run(capsys, "dt", "count", "--m", "6", "--format", "json")
    assert json.loads(out)["plane_partitions"] == 48


def test_dt_cap_exit_3(capsys):
    code, _, err = run(capsys, "dt", "count", "--m", "40")
    assert code == 3


def test_goettsche(capsys):
    code, out, _ = run(capsys, "goettsche", "--n", "4")
    assert code == 0
    assert out.strip() == "(x*y)^5 + 2*(x*y)^6 + (x*y)^7 + (x*y)^8"


def test_report_subset(capsys):
    code, out, _ = run(capsys, "report", "--suites", "dt,mhm",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [s["suite"] for s in payload["suites"]] == ["dt", "mhm"]
    assert payload["summary"]["passed"] == payload["summary"]["total"]
    code, _, err = run(capsys, "report", "--suites", "dt,nosuch")
    assert code == 2


def test_usage_error_exit_2(capsys):
    assert main(["count", "rank", "--n", "2"]) == 2  # missing --p
    assert main(["bogusverb"]) == 2
    assert main([]) == 2
    assert main(["hilb4", "total", "--bogus"]) == 2  # unknown flag rejected


def test_emit_report_empty():
    assert json.loads(emit_report([], "json")) == \
        {"summary": {"total": 0, "passed": 0}}
    empty = SuiteResult(suite="x", checks=[])
    assert json.loads(emit_report([empty], "json"))["summary"] == \
        {"total": 0, "passed": 0}


def test_failing_suite_exit_1(capsys, monkeypatch):
    import motivic.suites as suites

    def broken(ctx):
        from motivic.suites import _check
        return [_check("forced failure", "none", 1, 2)]

    monkeypatch.setitem(suites.SUITES, "selftest", broken)
    code, out, _ = run(capsys, "verify", "selftest")
    assert code == 1
    assert "[FAIL]" in out and "expected: 1" in out


def test_json_reports_byte_identical_across_runs(capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "mhm", "--format", "json")
        outs.add(out)
    assert len(outs) == 1


def test_katz_byte_identical_across_worker_counts(capsys):
    outs = set()
    for w in ("1", "2", "8"):
        code, out, _ = run(capsys, "verify", "katz", "--p", "2",
                           "--workers", w, "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_suite_text_report_format(capsys):
    code, out, _ = run(capsys, "verify", "mhm")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("[PASS]") for line in lines[:-2])
    assert lines[-1].startswith("total:")


def test_run_suite_context_defaults():
    res = run_suite("hilb4", SuiteContext())
    assert res.passed
    with pytest.raises(KeyError):
        run_suite("nosuch")
