import json

import pytest

from bei.graphs import Graph, graph_from_spec
from bei.series import series_complete, series_cycle, series_line, series_tree
from bei.verify import (
    SUITE_NAMES,
    CaseResult,
    SuiteReport,
    VerifyConfig,
    any_budget_failure,
    closed_form_series,
    reports_to_json_dict,
    run_all,
    run_suite,
    verify_aux_series,
    verify_colon_identities,
    verify_decomposition,
    verify_h_vector_symmetry,
    verify_pendant_invariance,
    verify_series,
    verify_sop_cycle,
)


def test_closed_form_dispatch():
    assert closed_form_series(graph_from_spec("line:4")) == series_line(4)
    assert closed_form_series(graph_from_spec("cycle:5")) == series_cycle(5)
    assert closed_form_series(graph_from_spec("complete:3")) == series_complete(3)
    assert closed_form_series(graph_from_spec("tree1:6")) == series_tree(1, 6)
    assert closed_form_series(graph_from_spec("tree2:7")) == series_tree(2, 7)
    # a spider with three long arms is still the kind-1 closed form
    spider = Graph(7, frozenset({(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)}))
    assert closed_form_series(spider) == series_tree(1, 7)
    with pytest.raises(ValueError):
        closed_form_series(graph_from_spec("star:4"))


def test_series_suite():
    report = verify_series("tree1:4", "cycle:4", "complete:3")
    assert report.passed and len(report.cases) == 3
    assert all(c.passed for c in report.cases)


def test_decomposition_suite():
    report = verify_decomposition("line:3", "cycle:4", "complete:3")
    assert report.passed and len(report.cases) == 6


def test_colon_suite_small():
    report = verify_colon_identities((4,))
    assert report.passed and len(report.cases) == 5


def test_colon_suite_n3_is_informative():
    report = verify_colon_identities((3,))
    assert all(not c.gating for c in report.cases)
    assert report.passed  # no gating cases fail; cases exist
    packed = report.to_json_dict()
    assert all(c.get("informative") for c in packed["cases"])


def test_sop_suite():
    report = verify_sop_cycle((3, 4))
    assert report.passed and len(report.cases) == 4


def test_aux_suite():
    report = verify_aux_series((4,))
    assert report.passed and len(report.cases) == 4


def test_pendant_suite_checks_every_leaf():
    report = verify_pendant_invariance("tree1:4")
    assert report.passed and len(report.cases) == 3  # three leaves
    assert all(c.expected == series_tree(1, 5).text() for c in report.cases)
    report = verify_pendant_invariance("line:3")
    assert report.passed and len(report.cases) == 2  # two ends
    assert all(c.expected == series_line(4).text() for c in report.cases)


def test_pendant_respects_nmax():
    report = verify_pendant_invariance("tree1:4", n_max=4)
    assert not report.cases


def test_hvector_suite():
    report = verify_h_vector_symmetry(range(4, 17))
    assert report.passed and len(report.cases) == 13


def test_empty_report_fails():
    assert not SuiteReport("empty").passed


def test_gating_failure_fails_suite():
    report = SuiteReport("demo", [
        CaseResult("a", "1", "1", True, 0.1),
        CaseResult("b", "1", "2", False, 0.1),
    ])
    assert not report.passed
    report.cases[1].gating = False
    assert report.passed  # informative failures do not gate


def test_budget_failures_reported_not_raised():
    report = verify_colon_identities((4,), budget=1)
    assert not report.passed
    assert any("budget-exceeded" in c.note for c in report.cases)
    assert any_budget_failure([report])

    report = verify_series("cycle:4", budget=0)
    assert not report.passed and any_budget_failure([report])

    report = verify_pendant_invariance("tree1:4", budget=0)
    assert not report.passed and any_budget_failure([report])


def test_run_all_quick_config():
    config = VerifyConfig(
        series_instances=("line:2", "complete:3", "cycle:3"),
        decomposition_instances=("line:3",),
        colon_ns=(3,),
        sop_ns=(3,),
        aux_ns=(4,),
        pendant_bases=("line:3",),
        hvector_ns=(4, 5),
    )
    reports, passed = run_all(config)
    assert passed
    names = [r.suite for r in reports]
    assert set(names) == {"series", "decomposition", "colon", "sop", "aux",
                          "pendant", "hvector"}
    packed = reports_to_json_dict(reports, passed)
    json.loads(json.dumps(packed))
    assert packed["pass"] is True
    for suite in packed["suites"]:
        assert set(suite) == {"suite", "cases", "pass"}
        for case in suite["cases"]:
            assert {"instance", "pass", "expected", "actual", "ms"} <= set(case)


def test_clamp_drops_oversized_instances():
    config = VerifyConfig().clamp(3)
    assert all(graph_from_spec(s).n <= 3 for s in config.series_instances)
    assert config.aux_ns == ()
    assert config.colon_ns == (3,)
    reports, passed = run_all(config)
    assert passed  # suites with no instances are skipped, not failed
    assert "aux" not in [r.suite for r in reports]


def test_run_suite_rejects_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope", VerifyConfig())
    assert set(SUITE_NAMES) == {"series", "decomposition", "colon", "sop",
                                "aux", "pendant", "hvector"}


def test_suites_are_deterministic():
    a = verify_sop_cycle((3,))
    b = verify_sop_cycle((3,))
    assert [(c.instance, c.passed) for c in a.cases] == \
        [(c.instance, c.passed) for c in b.cases]
