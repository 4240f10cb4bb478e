import pytest
from hypothesis import strategies as st

from elenas.core import LEAF, ElenaWord, Tree

_criteria: list[tuple[str, bool]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        _criteria.append((marker.args[0], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")


trees = st.recursive(
    st.just(LEAF),
    lambda children: st.lists(children, max_size=4).map(lambda cs: Tree(tuple(cs))),
    max_leaves=25,
)

words = st.lists(st.lists(st.integers(1, 7), max_size=4), max_size=7).map(
    lambda bs: ElenaWord(tuple(tuple(b) for b in bs))
)
