from __future__ import annotations

import pytest

from matchforce.forcing import is_global_forcing_set, phi_exact
from matchforce.graph import Graph, complete, path
from matchforce.ilp import (
    SolutionFormatError,
    build_model,
    export_lp,
    import_solution,
)

from oracles import small_instances

K3_LP = """Minimize
 obj: x1 + x2 + x3
Subject To
 c1_2: x1 + x2 >= 1
 c1_3: x1 + x3 >= 1
 c2_3: x2 + x3 >= 1
Binary
 x1
 x2
 x3
End
"""

K2_LP = """Minimize
 obj: x1
Subject To
Binary
 x1
End
"""


class TestBuildModel:
    def test_k3(self):
        model = build_model(complete(3))
        assert model.num_edges == 3
        assert [c.columns for c in model.constraints] == [(0, 1), (0, 2), (1, 2)]
        assert [c.label for c in model.constraints] == [(0, 1), (0, 2), (1, 2)]

    def test_k2_has_no_constraints(self):
        model = build_model(complete(2))
        assert (model.num_edges, model.constraints) == (1, ())

    def test_p4_single_constraint_over_all_columns(self):
        model = build_model(path(4))
        assert len(model.constraints) == 1
        assert model.constraints[0].columns == (0, 1, 2)

    def test_every_constraint_has_a_term(self):
        for _, g in small_instances(max_edges=8):
            for constraint in build_model(g).constraints:
                assert constraint.columns

    def test_dedup_merges_identical_supports(self):
        two_triangles = Graph(
            n=6, edges=((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3))
        )
        full = build_model(two_triangles, dedup=False)
        deduped = build_model(two_triangles, dedup=True)
        # 9 maximal matchings -> 36 pairs, but pairs agreeing on one triangle
        # share supports: 3 + 3 + 9 distinct supports survive
        assert len(full.constraints) == 36
        assert len(deduped.constraints) == 15
        assert sum(len(c.pairs) for c in deduped.constraints) == 36
        supports = [c.columns for c in deduped.constraints]
        assert len(set(supports)) == len(supports)
        for constraint in deduped.constraints:
            assert constraint.label == min(constraint.pairs)

    @pytest.mark.parametrize("dedup", [True, False])
    def test_feasibility_matches_forcing_predicate(self, dedup):
        for _, g in small_instances(max_edges=8):
            model = build_model(g, dedup=dedup)
            for mask in range(1 << g.m):
                edges = [j for j in range(g.m) if mask >> j & 1]
                assert model.satisfied_by(mask) == is_global_forcing_set(g, edges)


class TestExport:
    def test_k3_golden(self):
        assert export_lp(build_model(complete(3))) == K3_LP

    def test_k2_golden_empty_subject_to(self):
        assert export_lp(build_model(complete(2))) == K2_LP

    def test_y_objective_has_seven_terms(self):
        from matchforce.corona import corona_product

        y = corona_product(complete(2), complete(2)).graph
        text = export_lp(build_model(y))
        obj = next(line for line in text.splitlines() if line.startswith(" obj:"))
        assert obj.count("x") == 7


class TestImport:
    def test_k3_reference_solution(self):
        edges, objective = import_solution("x1 1\nx2 1\nx3 0\n", complete(3))
        assert (edges, objective) == ((0, 1), 2)
        assert is_global_forcing_set(complete(3), edges)

    def test_empty_text_defaults_to_zero(self):
        assert import_solution("", complete(2)) == ((), 0)

    def test_tolerance_rounds_near_integers(self):
        edges, objective = import_solution("x1 0.9999999\n", complete(3))
        assert (edges, objective) == ((0,), 1)

    def test_fractional_value_rejected(self):
        with pytest.raises(SolutionFormatError, match="not binary"):
            import_solution("x1 0.5\n", complete(3))

    def test_non_binary_integer_rejected(self):
        with pytest.raises(SolutionFormatError, match="not binary"):
            import_solution("x1 2\n", complete(3))

    def test_unknown_variable_rejected(self):
        with pytest.raises(SolutionFormatError, match="out of range"):
            import_solution("x9 1\n", complete(3))
        with pytest.raises(SolutionFormatError, match="unknown variable"):
            import_solution("y1 1\n", complete(3))

    def test_duplicate_assignment_rejected(self):
        with pytest.raises(SolutionFormatError, match="duplicate"):
            import_solution("x1 1\nx1 0\n", complete(3))

    def test_malformed_line_rejected(self):
        with pytest.raises(SolutionFormatError, match="expected"):
            import_solution("x1\n", complete(3))


def _exhaustive_optimum(model) -> int:
    best = model.num_edges
    for mask in range(1 << model.num_edges):
        if mask.bit_count() < best and model.satisfied_by(mask):
            best = mask.bit_count()
    return best


SMALL = small_instances(max_edges=8)


@pytest.mark.parametrize("name,graph", SMALL, ids=[n for n, _ in SMALL])
def test_model_optimum_equals_exact_forcing_number(name, graph):
    model = build_model(graph)
    assert _exhaustive_optimum(model) == phi_exact(graph).size


@pytest.mark.parametrize("name,graph", SMALL, ids=[n for n, _ in SMALL])
def test_dedup_preserves_the_feasible_set(name, graph):
    full = build_model(graph, dedup=False)
    deduped = build_model(graph, dedup=True)
    for mask in range(1 << graph.m):
        assert full.satisfied_by(mask) == deduped.satisfied_by(mask)
