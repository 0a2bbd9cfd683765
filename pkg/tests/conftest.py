import pytest

from simplexgraph import graph as gr
from simplexgraph.simplex import universe
from simplexgraph.verifier import Context

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def u3():
    return universe(3)


@pytest.fixture(scope="session")
def u4():
    return universe(4)


@pytest.fixture(scope="session")
def u5():
    return universe(5)


@pytest.fixture(scope="session")
def g3(u3):
    return gr.build_graph(u3)


@pytest.fixture(scope="session")
def g4(u4):
    return gr.build_graph(u4)


@pytest.fixture(scope="session")
def g5(u5):
    return gr.build_graph(u5)


@pytest.fixture(scope="session")
def ctx():
    return Context()


@pytest.fixture(scope="session")
def base(ctx):
    return ctx.base


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
