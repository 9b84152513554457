import itertools
import math

import networkx as nx
import pytest

from rainbowalg.errors import (
    DimacsError,
    DuplicateEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from rainbowalg.graph import (
    Graph,
    diameter,
    generate,
    non_adjacent_pairs,
    parse_dimacs,
    simple_paths,
    to_dimacs,
)
from rainbowalg.corpus import atlas_graphs, named_families

from conftest import to_nx


def test_parse_triangle():
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == Graph(3, ((1, 2), (2, 3), (1, 3)))
    assert g.edge_index(3, 1) == 3


def test_parse_star_with_comments():
    g = parse_dimacs("c a star\np edge 4 3\ne 1 2\n\ne 1 3\ne 4 1\n")
    assert g.n == 4 and g.edges == ((1, 2), (1, 3), (1, 4))
    assert g.neighbors(1) == [2, 3, 4]


@pytest.mark.parametrize("text, exc", [
    ("p edge 2 1\ne 1 1\n", SelfLoopError),
    ("p edge 2 1\ne 1 3\n", VertexOutOfRangeError),
    ("p edge 3 2\ne 1 2\ne 2 1\n", DuplicateEdgeError),
    ("p edge x 1\ne 1 2\n", MalformedHeaderError),
    ("p graph 2 1\ne 1 2\n", MalformedHeaderError),
    ("e 1 2\n", MalformedHeaderError),
    ("p edge 3 2\ne 1 2\n", MalformedHeaderError),
    ("p edge 3 1\ne 1\n", DimacsError),
    ("p edge 3 1\nq 1 2\n", DimacsError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_dimacs(text)


def test_parse_error_types_are_distinct():
    kinds = {SelfLoopError, VertexOutOfRangeError, DuplicateEdgeError, MalformedHeaderError}
    assert len(kinds) == 4
    assert all(issubclass(k, DimacsError) for k in kinds)


def test_graph_invariants_enforced():
    with pytest.raises(SelfLoopError):
        Graph(2, ((1, 1),))
    with pytest.raises(DuplicateEdgeError):
        Graph(2, ((1, 2), (2, 1)))


@pytest.mark.parametrize("name, g", atlas_graphs(5) + named_families(6))
def test_dimacs_and_json_round_trip(name, g):
    assert parse_dimacs(to_dimacs(g, comment=name)) == g
    assert Graph.from_json(g.to_json()) == g


def test_generate_families():
    star = generate("star", 3)
    assert (star.n, star.edges) == (4, ((1, 2), (1, 3), (1, 4)))
    assert generate("complete", 3).edges == ((1, 2), (1, 3), (2, 3))
    c5 = generate("cycle", 5)
    assert c5.m == 5 and c5.edges[-1] == (1, 5)
    assert generate("path", 4).edges == ((1, 2), (2, 3), (3, 4))
    w = generate("wheel", 4)
    assert w.n == 5 and w.m == 8
    with pytest.raises(ValueError):
        generate("cycle", 2)
    with pytest.raises(ValueError):
        generate("hypercube", 3)


def test_diameter():
    assert diameter(generate("complete", 3)) == 1
    assert diameter(generate("cycle", 5)) == 2
    assert diameter(Graph(2)) == math.inf
    assert diameter(Graph(1)) == 0


@pytest.mark.parametrize("name, g", [x for x in atlas_graphs(6) if nx.is_connected(to_nx(x[1]))][::7])
def test_diameter_matches_networkx(name, g):
    assert diameter(g) == nx.diameter(to_nx(g))


def test_simple_paths_examples(star3, c5):
    (p,) = simple_paths(star3, 2, 3, 2)
    assert p.vertices == (2, 1, 3) and p.edge_indices == (1, 2)
    assert [q.vertices for q in simple_paths(c5, 1, 3, 2)] == [(1, 2, 3)]
    paths = simple_paths(c5, 1, 3, 3)
    assert sorted(len(q) for q in paths) == [2, 3]


@pytest.mark.parametrize("name, g", atlas_graphs(5, 2) + named_families(6))
def test_simple_paths_against_networkx(name, g):
    h = to_nx(g)
    for u, v in itertools.permutations(range(1, g.n + 1), 2):
        for max_len in (1, 2, 3):
            ours = simple_paths(g, u, v, max_len)
            theirs = sorted(tuple(p) for p in nx.all_simple_paths(h, u, v, cutoff=max_len))
            assert [p.vertices for p in ours] == theirs
            for p in ours:
                assert len(set(p.vertices)) == len(p.vertices)
                assert p.edge_indices == tuple(g.edge_index(a, b) for a, b in zip(p.vertices, p.vertices[1:]))


@pytest.mark.parametrize("name, g", [x for x in atlas_graphs(6, 2) if nx.is_connected(to_nx(x[1]))][::5])
def test_paths_exist_within_diameter(name, g):
    d = diameter(g)
    assert all(simple_paths(g, u, v, d) for u, v in itertools.combinations(range(1, g.n + 1), 2))


def test_simple_paths_preconditions(c5):
    with pytest.raises(ValueError):
        simple_paths(c5, 1, 1, 2)
    with pytest.raises(ValueError):
        simple_paths(c5, 1, 2, 0)
    assert simple_paths(Graph(3, ((1, 2),)), 1, 3, 2) == []


def test_non_adjacent_pairs(k3, star3, c5):
    assert non_adjacent_pairs(k3) == []
    assert non_adjacent_pairs(star3) == [(2, 3), (2, 4), (3, 4)]
    assert len(non_adjacent_pairs(c5)) == math.comb(5, 2) - 5
