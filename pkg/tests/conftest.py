from functools import lru_cache

import pytest
from hypothesis import strategies as st

from treeavoid.classify import ClassifyOptions, classify_patterns
from treeavoid.trees import LEAF, MAryTree, enumerate_trees
from treeavoid.words import parse_wordset, tree_to_wordset

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): an acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    number, text = report.user_properties and dict(report.user_properties).get("criterion") or (None, None)
    if number is not None:
        _criteria[number] = (text, report.outcome, report.duration)


@pytest.fixture(autouse=True)
def _record_criterion(request):
    mark = request.node.get_closest_marker("acceptance")
    if mark is not None:
        request.node.user_properties.append(("criterion", tuple(mark.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        text, outcome, duration = _criteria[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {text} ({duration:.1f}s)")


def W(text, m=3):
    return parse_wordset(text, m)


def ternary_patterns(*sizes):
    return [tree_to_wordset(T) for L in sizes for T in enumerate_trees(3, L)]


def trees(m=3, max_leaves=24):
    """Hypothesis strategy for m-ary tree nodes of bounded depth."""
    return st.recursive(st.just(LEAF), lambda kids: st.tuples(*[kids] * m), max_leaves=max_leaves).map(
        lambda node: MAryTree(m, node))


@lru_cache(maxsize=None)
def cached_report(m, L, N, method="auto", fit=True, reflection=False):
    """Reports are expensive at L = 9; share them across test modules."""
    opts = ClassifyOptions(method=method, fit_equations=fit, reflection_reduced=reflection)
    return classify_patterns(m, L, N, opts)
