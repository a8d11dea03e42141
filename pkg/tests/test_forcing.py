from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from matchforce.corona import corona_product
from matchforce.forcing import (
    complement_upper_bound,
    incidence_matrix,
    is_global_forcing_set,
    log2_lower_bound,
    phi_exact,
    phi_greedy,
)
from matchforce.graph import complete, complete_bipartite, empty, path
from matchforce.matchings import BudgetExceededError, maximal_matching_masks

from oracles import brute_min_forcing, projections_distinct, small_instances


def y_graph():
    return corona_product(complete(2), complete(2)).graph


class TestIncidenceMatrix:
    def test_k3_is_the_identity(self):
        mat = incidence_matrix(complete(3))
        assert (mat.t, mat.m) == (3, 3)
        assert mat.rows == (0b001, 0b010, 0b100)

    def test_p4_rows(self):
        mat = incidence_matrix(path(4))
        assert mat.rows == (0b101, 0b010)

    def test_k2_single_row(self):
        assert incidence_matrix(complete(2)).rows == (0b1,)

    def test_rows_are_distinct_maximal_matchings(self):
        g = y_graph()
        mat = incidence_matrix(g)
        assert len(set(mat.rows)) == mat.t
        assert mat.rows == tuple(maximal_matching_masks(g))

    def test_column(self):
        mat = incidence_matrix(complete(3))
        assert [mat.column(j) for j in range(3)] == [0b001, 0b010, 0b100]
        with pytest.raises(IndexError):
            mat.column(3)


class TestVerification:
    def test_k3_pairs(self):
        k3 = complete(3)
        assert is_global_forcing_set(k3, {0, 1})
        assert not is_global_forcing_set(k3, {0})  # {e1} and {e2} both project to {}
        assert not is_global_forcing_set(k3, set())

    def test_p4_any_single_edge_works(self):
        p4 = path(4)
        for e in range(3):
            assert is_global_forcing_set(p4, {e})

    def test_single_matching_graphs_accept_the_empty_set(self):
        assert is_global_forcing_set(complete(2), set())
        assert is_global_forcing_set(empty(3), set())

    def test_bad_index(self):
        with pytest.raises(IndexError):
            is_global_forcing_set(complete(3), {7})

    def test_supersets_of_forcing_sets_are_forcing(self):
        g = y_graph()
        base = set(phi_exact(g).edges)
        for extra in combinations(set(range(g.m)) - base, 2):
            assert is_global_forcing_set(g, base | set(extra))


class TestBounds:
    def test_log2_lower_bound(self):
        assert log2_lower_bound(y_graph()) == 4
        assert log2_lower_bound(complete(3)) == 2
        assert log2_lower_bound(complete(2)) == 0

    def test_complement_upper_bound(self):
        assert complement_upper_bound(y_graph()) == 4  # 7 - 3
        assert complement_upper_bound(complete(3)) == 2
        assert complement_upper_bound(path(4)) == 1


class TestGreedy:
    def test_k3(self):
        result = phi_greedy(complete(3))
        assert result.size == 2
        assert not result.optimal
        assert is_global_forcing_set(complete(3), result.edges)
        # exhaustive check: no single edge suffices
        rows = list(incidence_matrix(complete(3)).rows)
        assert not any(projections_distinct(rows, 1 << j) for j in range(3))

    def test_p4(self):
        assert phi_greedy(path(4)).size == 1

    def test_k2_empty(self):
        result = phi_greedy(complete(2))
        assert (result.size, result.edges) == (0, ())

    def test_greedy_result_always_verifies(self):
        for _, g in small_instances(max_edges=8):
            result = phi_greedy(g)
            assert is_global_forcing_set(g, result.edges)


class TestExact:
    def test_named_values(self):
        assert phi_exact(complete(3)).size == 2
        assert phi_exact(y_graph()).size == 4
        assert phi_exact(complete(4)).size == 2

    def test_k3_witness_is_lexicographically_smallest(self):
        result = phi_exact(complete(3))
        assert result.edges == (0, 1)
        assert result.optimal

    def test_trivial_graphs(self):
        for g in (complete(2), empty(3), empty(1)):
            result = phi_exact(g)
            assert (result.size, result.edges, result.optimal) == (0, (), True)

    def test_determinism(self):
        g = corona_product(path(3), complete(2)).graph
        assert phi_exact(g) == phi_exact(g)

    def test_node_limit_degrades_to_verified_upper_bound(self):
        g = y_graph()
        result = phi_exact(g, node_limit=1)
        assert not result.optimal
        assert is_global_forcing_set(g, result.edges)
        assert result.size >= phi_exact(g).size

    def test_edge_cap_is_enforced(self):
        with pytest.raises(BudgetExceededError):
            phi_exact(complete(4), max_edges=5)

    def test_enumeration_budget_propagates(self):
        with pytest.raises(BudgetExceededError):
            phi_exact(complete(4), budget=2)


EXACT_INSTANCES = small_instances(max_edges=8)
EXACT_IDS = [name for name, _ in EXACT_INSTANCES]


@pytest.mark.parametrize("name,graph", EXACT_INSTANCES, ids=EXACT_IDS)
def test_exact_equals_exhaustive_search(name, graph):
    rows = maximal_matching_masks(graph)
    size, witness = brute_min_forcing(graph, rows)
    result = phi_exact(graph)
    assert result.optimal
    assert result.size == size
    assert result.edges == witness  # lexicographically smallest optimum
    assert is_global_forcing_set(graph, result.edges)


@pytest.mark.parametrize("name,graph", EXACT_INSTANCES, ids=EXACT_IDS)
def test_bound_sandwich(name, graph):
    exact = phi_exact(graph)
    assert log2_lower_bound(graph) <= exact.size
    assert exact.size <= phi_greedy(graph).size
    assert exact.size <= complement_upper_bound(graph)


class TestClosedForms:
    @pytest.mark.parametrize("k,expected", [(1, 0), (2, 2)])
    def test_even_complete(self, k, expected):
        assert phi_exact(complete(2 * k)).size == (2 * k - 2) ** 2 // 2 == expected

    @pytest.mark.parametrize("k,expected", [(1, 0), (2, 1), (3, 4)])
    def test_balanced_bipartite(self, k, expected):
        assert phi_exact(complete_bipartite(k, k)).size == (k - 1) ** 2 == expected


@given(st.sampled_from([g for _, g in small_instances(max_edges=7)]), st.data())
@settings(max_examples=40, deadline=None)
def test_random_supersets_of_optimum_still_force(g, data):
    base = set(phi_exact(g).edges)
    extra = data.draw(
        st.sets(st.integers(min_value=0, max_value=max(g.m - 1, 0)), max_size=4)
        if g.m
        else st.just(set())
    )
    assert is_global_forcing_set(g, base | extra)
