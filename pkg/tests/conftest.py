import io
import sys

import pytest
from hypothesis import strategies as st

from skewlap.digraph import Digraph
from skewlap.families import directed_cycle, directed_path


@st.composite
def oriented_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    states = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    arcs = [(i, j) if s == 1 else (j, i) for (i, j), s in zip(pairs, states) if s]
    return Digraph(n, tuple(arcs))


@pytest.fixture
def p4():
    return directed_path(4)


@pytest.fixture
def c4():
    return directed_cycle(4)


@pytest.fixture
def run_cli(capsys, monkeypatch):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    from skewlap.cli import main

    def _run(*argv, stdin=None):
        if stdin is not None:
            monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
        out, err = capsys.readouterr()
        return code, out, err

    return _run


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
