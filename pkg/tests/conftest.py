import re

import pytest

CRITERIA = {
    1: "semantics conformance",
    2: "pruned vs unpruned exact search",
    3: "hitting set to LTL(F,or) threshold 2k",
    4: "set cover to LTL(X,and) threshold",
    5: "greedy LTL(X,and) approximation",
    6: "hitting set to LTL(F,and), unbounded alphabet",
    7: "fixed-alphabet constructions",
    8: "LTL(F,and) characterization and forest formulas",
    9: "degenerate learners vs exact search",
    10: "padding for X fragments",
}

_NAME = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m:
        return
    crit = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(crit, []).append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(CRITERIA):
        runs = _outcomes.get(crit)
        if not runs:
            continue
        failed = [name for name, out in runs if out != "passed"]
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {crit:2d} {verdict}  {CRITERIA[crit]}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        tr.write_line(line)


@pytest.fixture
def tmp_sample(tmp_path):
    def make(text, name="s.txt"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return p
    return make
