"""Shared fixtures: acceptance summary reporting and oracle helpers."""

import pytest

import networkx as nx

from gensplit import Graph


class AcceptanceLog:
    """Collects one line per acceptance criterion for the final summary."""

    def __init__(self):
        self.lines = []

    def record(self, number: int, passed: bool, detail: str) -> None:
        status = "PASS" if passed else "FAIL"
        self.lines.append(f"ACCEPTANCE {number}: {status} - {detail}")


_LOG = AcceptanceLog()


@pytest.fixture(scope="session")
def acceptance_log() -> AcceptanceLog:
    return _LOG


def pytest_terminal_summary(terminalreporter):
    if _LOG.lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LOG.lines):
            terminalreporter.write_line(line)


def to_networkx(g: Graph) -> "nx.Graph":
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges())
    return out


def from_networkx(nxg) -> Graph:
    from gensplit import build

    mapping = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
    return build(len(mapping), ((mapping[u], mapping[v]) for u, v in nxg.edges()))
