from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from indideal.graph import (
    FamilySpec,
    Graph,
    build_family,
    complete_graph,
    empty_graph,
    mask_to_vertices,
    path_graph,
)
from indideal.indep import (
    IndependencePolynomial,
    centipede_coefficients,
    cycle_power_coefficients,
    enumerate_independent_sets,
    independence_number,
    independence_polynomial,
    path_coefficients,
)

from conftest import brute_coefficients, brute_independent_sets, random_graphs


def sets_of(g):
    return [tuple(mask_to_vertices(s)) for s in enumerate_independent_sets(g)]


def test_enumerate_p3_order():
    assert sets_of(path_graph(3)) == [(), (1,), (2,), (3,), (1, 3)]


def test_enumerate_k3():
    assert sets_of(complete_graph(3)) == [(), (1,), (2,), (3,)]


def test_enumerate_edgeless():
    assert sets_of(empty_graph(2)) == [(), (1,), (2,), (1, 2)]


def test_enumerate_lex_within_size():
    # 1..5 edgeless: pairs come in itertools order, i.e. {1,2}, {1,3}, ..., {4,5}
    pairs = [s for s in sets_of(empty_graph(5)) if len(s) == 2]
    assert pairs == list(combinations(range(1, 6), 2))


@pytest.mark.parametrize("g", random_graphs(60, (1, 9), seed=1))
def test_enumeration_matches_brute_force(g):
    # brute force lists by size then itertools (lex) order: the same normative order
    assert sets_of(g) == brute_independent_sets(g)


@pytest.mark.parametrize(
    "g, coeffs",
    [
        (path_graph(3), [1, 3, 1]),
        (build_family(FamilySpec("cycle", 5)), [1, 5, 5]),
        (complete_graph(6), [1, 6]),
        (build_family(FamilySpec("centipede", 2)), [1, 4, 3]),
        (build_family(FamilySpec("cyclepow", 10, 2)), [1, 10, 25, 10]),
        (empty_graph(4), [1, 4, 6, 4, 1]),
    ],
)
def test_independence_polynomial_examples(g, coeffs):
    assert list(independence_polynomial(g)) == coeffs


@pytest.mark.parametrize("g", random_graphs(80, (1, 12), seed=2))
def test_polynomial_matches_enumeration(g):
    poly = independence_polynomial(g)
    assert list(poly) == brute_coefficients(g)
    assert poly(1) == sum(1 for _ in enumerate_independent_sets(g))
    assert poly.degree == independence_number(g)
    assert poly[0] == 1 and poly[1] == g.n


def test_independence_number_examples():
    assert independence_number(path_graph(3)) == 2
    assert independence_number(complete_graph(5)) == 1
    assert independence_number(empty_graph(4)) == 4


def test_polynomial_large_sparse():
    # 60-vertex path: far too many sets to enumerate, counted by the recurrence
    assert list(independence_polynomial(path_graph(60))) == list(path_coefficients(60))


def test_polynomial_rejects_bad_coeffs():
    with pytest.raises(ValueError):
        IndependencePolynomial((2, 1))
    with pytest.raises(ValueError):
        IndependencePolynomial((1, 0, 1))


@pytest.mark.parametrize(
    "n, coeffs", [(1, [1, 1]), (3, [1, 3, 1]), (5, [1, 5, 6, 1]), (4, [1, 4, 3])]
)
def test_path_coefficients(n, coeffs):
    assert list(path_coefficients(n)) == coeffs


@pytest.mark.parametrize("n, coeffs", [(1, [1, 2]), (2, [1, 4, 3]), (3, [1, 6, 10, 5])])
def test_centipede_coefficients(n, coeffs):
    assert list(centipede_coefficients(n)) == coeffs


@pytest.mark.parametrize("n", range(1, 8))
def test_centipede_degree_is_n(n):
    g = build_family(FamilySpec("centipede", n))
    assert independence_number(g) == n == centipede_coefficients(n).degree
    assert list(centipede_coefficients(n)) == brute_coefficients(g)


@pytest.mark.parametrize(
    "n, d, coeffs",
    [(5, 1, [1, 5, 5]), (10, 2, [1, 10, 25, 10]), (12, 3, [1, 12, 30, 4]), (6, 1, [1, 6, 9, 2])],
)
def test_cycle_power_coefficients(n, d, coeffs):
    assert list(cycle_power_coefficients(n, d)) == coeffs


@pytest.mark.parametrize("d", range(1, 5))
def test_cycle_power_small_n_is_complete(d):
    # d + 1 <= n <= 2d + 1: every pair within cyclic distance d
    for n in range(d + 1, 2 * d + 2):
        assert list(cycle_power_coefficients(n, d)) == [1, n]


@pytest.mark.parametrize("bad", [0, -3])
def test_formula_argument_errors(bad):
    with pytest.raises(ValueError):
        path_coefficients(bad)
    with pytest.raises(ValueError):
        centipede_coefficients(bad)
    with pytest.raises(ValueError):
        cycle_power_coefficients(2, 2)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 10), data=st.data())
def test_polynomial_multiplicative_on_disjoint_union(n, data):
    bits = data.draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = list(combinations(range(1, n + 1), 2))
    g = Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
    doubled = Graph.from_edges(2 * n, [e for e in g.edges()] + [(u + n, v + n) for u, v in g.edges()])
    p = list(independence_polynomial(g))
    sq = [0] * (2 * len(p) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(p):
            sq[i + j] += a * b
    assert list(independence_polynomial(doubled)) == sq
