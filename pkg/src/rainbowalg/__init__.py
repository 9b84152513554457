"""Algebraic decision procedures for graph coloring, stable sets and rainbow
connectivity, with brute-force oracles to cross-check every verdict."""

from .encoders import encode, encode_rc2, encode_rck, encode_stable_set, encode_vertex_coloring, field_for_k
from .graph import Graph, Path, diameter, generate, non_adjacent_pairs, parse_dimacs, simple_paths, to_dimacs
from .membership import MembershipVerdict, graph_polynomial, path_polynomial, rc2_membership, triple_basis
from .nulla import (
    Certificate,
    SearchOutcome,
    certificate_at_degree,
    default_degree_bound,
    search_certificate,
    verify_certificate,
)
from .poly import GF, QQ, Field, MonomialOrder, Polynomial, PolySystem, divide, leading_term, root_of_unity

__version__ = "0.1.0"
