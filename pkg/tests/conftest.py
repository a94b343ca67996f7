import pytest

from raagcomm.combinatorics import Graph, clique_complex

ACCEPTANCE_LINES = []


@pytest.fixture
def pentagon():
    return Graph.cycle(5)


@pytest.fixture
def chordal_pentagon():
    return Graph(5, Graph.cycle(5).edges | {(2, 5), (2, 4)})


@pytest.fixture
def pentagon_complex(pentagon):
    return clique_complex(pentagon)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)
