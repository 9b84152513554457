import itertools
import math

import pytest

from rainbowalg.corpus import atlas_graphs, rainbow_corpus
from rainbowalg.encoders import encode_rc2
from rainbowalg.errors import BudgetExceededError, DisconnectedGraphError
from rainbowalg.graph import Graph, generate, is_connected
from rainbowalg.oracle import (
    EdgeColoring,
    chromatic_feasible,
    count_solutions,
    find_rainbow_coloring,
    rainbow_connected,
    rc_at_most,
    rc_exact,
    solve_bruteforce,
    stable_set_count,
)

from conftest import naive_rainbow_connected, naive_rc


def test_rainbow_connected_examples(k3, star3):
    assert rainbow_connected(k3, EdgeColoring((0, 0, 0), 1))
    assert not rainbow_connected(star3, EdgeColoring((0, 0, 1), 2))
    c4 = generate("cycle", 4)
    assert rainbow_connected(c4, EdgeColoring((0, 1, 0, 1), 2))
    assert not rainbow_connected(c4, EdgeColoring((0, 0, 1, 1), 2))
    with pytest.raises(DisconnectedGraphError):
        rainbow_connected(Graph(3, ((1, 2),)), (0,), 1)
    with pytest.raises(ValueError):
        EdgeColoring((0, 2), 2)


def test_rc_exact_examples(k3, star3, c5):
    assert rc_exact(k3) == 1
    assert rc_exact(star3) == 3
    assert rc_exact(c5) == 3
    assert rc_exact(Graph(1)) == 0


def test_rc_at_most_examples(c5):
    assert not rc_at_most(c5, 2)
    assert rc_at_most(generate("cycle", 4), 2)
    assert rc_at_most(generate("complete", 5), 1)
    assert find_rainbow_coloring(generate("cycle", 4), 2) == (0, 0, 0, 1)


@pytest.mark.parametrize("name, g", [x for x in atlas_graphs(5, 2) if is_connected(x[1])])
def test_rc_exact_matches_naive(name, g):
    rc = rc_exact(g)
    assert rc == naive_rc(g)
    assert rc_at_most(g, rc) and (rc == 1 or not rc_at_most(g, rc - 1))
    coloring = find_rainbow_coloring(g, rc)
    assert naive_rainbow_connected(g, coloring)


def test_known_rc_values():
    # rc(C_n) = ceil(n/2) for n >= 4, rc(K_{1,n}) = n, rc(P_n) = n - 1
    for n in range(4, 8):
        assert rc_exact(generate("cycle", n)) == math.ceil(n / 2)
    for n in range(2, 6):
        assert rc_exact(generate("star", n)) == n
        assert rc_exact(generate("path", n + 1)) == n


def test_chromatic_examples(k3, c5):
    assert not chromatic_feasible(k3, 2)
    assert chromatic_feasible(k3, 3)
    assert not chromatic_feasible(c5, 2)
    assert chromatic_feasible(c5, 3)
    assert chromatic_feasible(Graph(0), 1)


def test_stable_set_examples(p3, k3):
    assert stable_set_count(p3, 2) == 1
    assert stable_set_count(k3, 2) == 0
    assert stable_set_count(Graph(4), 2) == 6
    assert stable_set_count(Graph(4), 0) == 1


def test_solve_bruteforce_examples(star3, c5):
    assert solve_bruteforce(encode_rc2(star3)) is None
    assert solve_bruteforce(encode_rc2(c5)) is None
    c4 = generate("cycle", 4)
    pt = solve_bruteforce(encode_rc2(c4))
    assert pt == (0, 0, 0, 1)
    assert encode_rc2(c4).is_satisfied_by(pt)
    expected = sum(naive_rainbow_connected(c4, c) for c in itertools.product((0, 1), repeat=4))
    assert count_solutions(encode_rc2(c4)) == expected


def test_solve_bruteforce_per_variable_domain(c5):
    sys_ = encode_rc2(generate("cycle", 4))
    assert solve_bruteforce(sys_, [[1], [1], [0, 1], [0, 1]]) == (1, 1, 0, 1)
    with pytest.raises(ValueError):
        solve_bruteforce(sys_, [[0, 1]] * 3)


def test_budgets(c5):
    with pytest.raises(BudgetExceededError):
        solve_bruteforce(encode_rc2(c5), budget=10)
    with pytest.raises(BudgetExceededError):
        rc_exact(generate("star", 5), budget=10)
    with pytest.raises(BudgetExceededError):
        chromatic_feasible(c5, 3, budget=100)
    with pytest.raises(BudgetExceededError):
        stable_set_count(c5, 2, budget=8)


@pytest.mark.parametrize("name, g", rainbow_corpus(5))
def test_rc2_feasibility_equivalence(name, g):
    assert (solve_bruteforce(encode_rc2(g)) is not None) == rc_at_most(g, 2)
