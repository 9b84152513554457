import itertools

import networkx as nx
import pytest

from rainbowalg.graph import Graph, generate


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    return h


def naive_rainbow_connected(g: Graph, colors) -> bool:
    """Independent check: any simple path (no length bound) with distinct colors."""
    h = to_nx(g)
    for u, v in itertools.combinations(range(1, g.n + 1), 2):
        found = False
        for path in nx.all_simple_paths(h, u, v):
            cs = [colors[g.edge_index(a, b) - 1] for a, b in zip(path, path[1:])]
            if len(set(cs)) == len(cs):
                found = True
                break
        if not found:
            return False
    return True


def naive_rc(g: Graph) -> int:
    k = 1
    while True:
        if any(naive_rainbow_connected(g, c) for c in itertools.product(range(k), repeat=g.m)):
            return k
        k += 1


@pytest.fixture
def star3():
    return generate("star", 3)


@pytest.fixture
def c5():
    return generate("cycle", 5)


@pytest.fixture
def k3():
    return generate("complete", 3)


@pytest.fixture
def p3():
    return generate("path", 3)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
