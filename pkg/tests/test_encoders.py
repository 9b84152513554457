import itertools

import numpy as np
import pytest

from rainbowalg.corpus import atlas_graphs, rainbow_corpus
from rainbowalg.encoders import (
    encode,
    encode_rc2,
    encode_rck,
    encode_stable_set,
    encode_vertex_coloring,
    field_for_k,
    path_count,
)
from rainbowalg.errors import BudgetExceededError, DiameterGateError, DisconnectedGraphError, FieldError
from rainbowalg.graph import Graph, generate
from rainbowalg.oracle import chromatic_feasible, count_solutions, stable_set_count
from rainbowalg.poly import GF, QQ, Polynomial, is_prime, roots_of_unity

from conftest import naive_rainbow_connected


def _xs(field, n):
    return Polynomial.variables(field, n)


def test_vertex_coloring_k2_triangle(k3):
    sys_ = encode_vertex_coloring(k3, 2, GF(3))
    x = _xs(GF(3), 3)
    assert sys_.polys == tuple([xi ** 2 - 1 for xi in x] + [x[0] + x[1], x[0] + x[2], x[1] + x[2]])
    assert sys_.var_meaning == "vertices"


def test_vertex_coloring_k1_single_vertex():
    sys_ = encode_vertex_coloring(Graph(1), 1, QQ)
    assert sys_.polys == (Polynomial.var(1, QQ, 1) - 1,)


def test_vertex_coloring_c5_k3(c5):
    sys_ = encode_vertex_coloring(c5, 3, GF(7))
    x = _xs(GF(7), 5)
    assert sys_.polys[:5] == tuple(xi ** 3 - 1 for xi in x)
    assert sys_.polys[5] == x[0] ** 2 + x[0] * x[1] + x[1] ** 2
    assert len(sys_) == 10


def test_vertex_coloring_rejects_field_without_roots(k3):
    with pytest.raises(FieldError):
        encode_vertex_coloring(k3, 3, GF(5))


def test_stable_set_p3(p3):
    sys_ = encode_stable_set(p3, 2, QQ)
    x = _xs(QQ, 3)
    assert sys_.polys == tuple([xi ** 2 - xi for xi in x] + [x[0] * x[1], x[1] * x[2], x[0] + x[1] + x[2] - 2])


def test_stable_set_empty_graph_feasible():
    sys_ = encode_stable_set(Graph(2), 2, QQ)
    assert len(sys_) == 3 and sys_.is_satisfied_by((1, 1))


def test_stable_set_field_check(k3):
    with pytest.raises(FieldError):
        encode_stable_set(k3, 2, GF(3))
    assert encode_stable_set(k3, 2).field == GF(5)


def test_rc2_star_matches_worked_example(star3):
    sys_ = encode_rc2(star3)
    x = _xs(GF(2), 3)
    assert sys_.polys == (x[0] + x[1] + 1, x[0] + x[2] + 1, x[1] + x[2] + 1)
    assert sys_.field == GF(2) and sys_.var_meaning == "edges"


def test_rc2_complete_is_empty():
    for n in range(2, 6):
        assert len(encode_rc2(generate("complete", n))) == 0


def test_rc2_c5_single_factors(c5):
    sys_ = encode_rc2(c5)
    assert len(sys_) == 5
    assert all(f.degree == 1 and len(f) == 3 for f in sys_.polys)


def test_rc2_gates():
    with pytest.raises(DiameterGateError, match="rc > 2 by diameter"):
        encode_rc2(generate("path", 4))
    with pytest.raises(DisconnectedGraphError):
        encode_rc2(Graph(3, ((1, 2),)))


def test_rck_c5_k2(c5):
    sys_ = encode_rck(c5, 2)
    x = _xs(GF(3), 5)
    assert sys_.field == GF(3)
    assert sys_.polys[:5] == tuple(xi ** 2 - 1 for xi in x)
    # pair (1,3): the single 2-path uses e1, e2
    assert sys_.polys[5] == (x[0] + x[1]) ** 2
    assert len(sys_) == 10


def test_rck_triangle_only_edge_equations(k3):
    for k in (2, 3, 4):
        assert len(encode_rck(k3, k)) == 3


def test_rck_p4_k3():
    g = generate("path", 4)
    sys_ = encode_rck(g, 3)
    x = _xs(GF(7), 3)
    h = lambda a, b: (a ** 2 + a * b + b ** 2) ** 3
    # pairs (1,3), (1,4), (2,4)
    assert sys_.polys[4] == h(x[0], x[1]) + h(x[0], x[2]) + h(x[1], x[2])
    assert sys_.polys[3] == h(x[0], x[1])


def test_rck_gates_and_field():
    with pytest.raises(DiameterGateError):
        encode_rck(generate("cycle", 6), 2)
    with pytest.raises(ValueError):
        encode_rck(generate("cycle", 5), 1)
    with pytest.raises(FieldError):
        encode_rck(generate("cycle", 5), 3, GF(5))
    with pytest.raises(FieldError):
        encode_rck(generate("cycle", 5), 4, GF(5))  # 5 = 1 mod 4 but 5 <= 4*3/2
    assert encode_rck(generate("cycle", 5), 3, GF(13)).field == GF(13)


def test_rck_path_cap():
    with pytest.raises(BudgetExceededError):
        encode_rck(generate("cycle", 6), 3, path_cap=5)
    assert path_count(generate("cycle", 6), 3) == 6 + 3 * 2


def _naive_field_for_k(k):
    return min(p for p in range(2, 1000) if is_prime(p) and p % k == 1 and p > k * (k - 1) / 2)


@pytest.mark.parametrize("k, p", [(2, 3), (3, 7), (4, 13)])
def test_field_for_k(k, p):
    assert field_for_k(k) == p == _naive_field_for_k(k)


@pytest.mark.parametrize("k", range(2, 12))
def test_field_for_k_scan(k):
    assert field_for_k(k) == _naive_field_for_k(k)


def test_encode_dispatch(star3):
    assert encode("rc2", star3) == encode_rc2(star3)
    with pytest.raises(FieldError):
        encode("rc2", star3, field=GF(3))
    with pytest.raises(ValueError):
        encode("vcolor", star3)
    with pytest.raises(ValueError):
        encode("hamilton", star3, 2)


@pytest.mark.parametrize("name, g", rainbow_corpus(5))
def test_rc2_solution_correspondence(name, g):
    """Every GF(2) point solves the system iff its 2-coloring is rainbow connecting."""
    sys_ = encode_rc2(g)
    for pt in itertools.product((0, 1), repeat=g.m):
        assert sys_.is_satisfied_by(pt) == naive_rainbow_connected(g, pt)


SMALL_K3 = [("C5", generate("cycle", 5)), ("P4", generate("path", 4)), ("K1,3", generate("star", 3)),
            ("C4", generate("cycle", 4)), ("K4-e", Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))))]


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("name, g", SMALL_K3)
def test_rck_roots_of_unity_correspondence(name, g, k):
    try:
        sys_ = encode_rck(g, k)
    except DiameterGateError:
        pytest.skip("diameter exceeds k")
    roots = roots_of_unity(sys_.field.char, k)
    for colors in itertools.product(range(k), repeat=g.m):
        pt = [roots[c] for c in colors]
        assert sys_.is_satisfied_by(pt) == naive_rainbow_connected(g, colors)


@pytest.mark.parametrize("name, g", atlas_graphs(5))
def test_vertex_coloring_restricted_feasibility(name, g):
    for k in (2, 3):
        sys_ = encode_vertex_coloring(g, k)
        roots = roots_of_unity(sys_.field.char, k)
        feasible = count_solutions(sys_, roots) > 0
        assert feasible == chromatic_feasible(g, k)


@pytest.mark.parametrize("name, g", atlas_graphs(5))
def test_stable_set_solution_count(name, g):
    for k in range(0, g.n + 1):
        assert count_solutions(encode_stable_set(g, k), [0, 1]) == stable_set_count(g, k)
