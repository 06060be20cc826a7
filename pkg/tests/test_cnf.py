import random

import pytest

from indpoly import (
    CapacityError,
    CnfFormula,
    FormulaError,
    count_is_of_size,
    count_sat,
    count_sat_via_independent_sets,
    count_x3sat,
    parse_dimacs,
    reduce_to_x3sat,
    reduction_report,
    x3sat_to_graph,
)
from indpoly.verify import (
    canonical_3cnf_formulas,
    gadget_extension_count,
    random_3cnf,
    random_x3sat,
)


class TestCnfFormula:
    def test_basic_construction(self):
        f = CnfFormula(3, [[1, 2, 3]])
        assert f.variable_count == 3
        assert f.clauses == ((1, 2, 3),)

    def test_drops_duplicate_literals(self):
        f = CnfFormula(2, [[1, 1, 2]])
        assert f.clauses == ((1, 2),)

    def test_keeps_complementary_pair(self):
        f = CnfFormula(2, [[1, -1, 2]])
        assert f.clauses == ((1, -1, 2),)

    def test_rejects_empty_clause(self):
        with pytest.raises(FormulaError):
            CnfFormula(2, [[]])

    def test_rejects_out_of_range(self):
        with pytest.raises(FormulaError):
            CnfFormula(2, [[1, 3]])

    def test_rejects_zero_literal(self):
        with pytest.raises(FormulaError):
            CnfFormula(2, [[1, 0]])

    def test_unused_variable_count(self):
        f = CnfFormula(5, [[1, 2]])
        assert f.unused_variable_count() == 3

    def test_dimacs_round_trip(self):
        f = CnfFormula(4, [[1, -2], [3, 4, -1]])
        assert parse_dimacs(f.to_dimacs()) == f


class TestParseDimacs:
    def test_single_clause(self):
        f = parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        assert f.variable_count == 3
        assert f.clauses == ((1, 2, 3),)

    def test_two_clauses(self):
        f = parse_dimacs("p cnf 4 2\n1 -2 0\n3 4 0\n")
        assert f.clauses == ((1, -2), (3, 4))

    def test_comments_and_multiline_clause(self):
        f = parse_dimacs("c header comment\np cnf 3 1\n1 2\n3 0\n")
        assert f.clauses == ((1, 2, 3),)

    def test_literal_out_of_range_names_line(self):
        with pytest.raises(FormulaError, match="line 2"):
            parse_dimacs("p cnf 2 1\n1 3 0\n")

    def test_missing_terminator_names_line(self):
        with pytest.raises(FormulaError, match="terminating 0"):
            parse_dimacs("p cnf 2 1\n1 2\n")

    @pytest.mark.parametrize(
        "bad",
        [
            "p cnf 2\n1 0\n",
            "1 2 0\n",
            "p cnf 2 1\nx y 0\n",
            "p cnf 2 2\n1 0\n",
            "p cnf 2 1\n0\n",
            "p cnf 1 1\np cnf 1 1\n1 0\n",
        ],
    )
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormulaError):
            parse_dimacs(bad)


class TestCountSat:
    def test_single_wide_clause(self):
        assert count_sat(parse_dimacs("p cnf 3 1\n1 2 3 0\n")) == 7

    def test_empty_formula_counts_all(self):
        assert count_sat(CnfFormula(2, [])) == 4

    def test_contradiction(self):
        assert count_sat(CnfFormula(1, [[1], [-1]])) == 0

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            count_sat(CnfFormula(30, [[1]]), max_variables=24)

    def test_against_python_enumeration(self):
        rng = random.Random(21)
        for _ in range(30):
            f = random_3cnf(rng, rng.randint(1, 6), rng.randint(0, 4))
            brute = 0
            for bits in range(1 << f.variable_count):
                assignment = [bool(bits >> (v - 1) & 1) for v in range(1, f.variable_count + 1)]
                if all(
                    any(assignment[abs(l) - 1] == (l > 0) for l in clause)
                    for clause in f.clauses
                ):
                    brute += 1
            assert count_sat(f) == brute


class TestCountX3Sat:
    def test_exactly_one_of_three(self):
        assert count_x3sat(parse_dimacs("p cnf 3 1\n1 2 3 0\n")) == 3

    def test_two_clause_contradiction(self):
        assert count_x3sat(parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n")) == 0

    def test_shared_variable(self):
        assert count_x3sat(parse_dimacs("p cnf 3 2\n1 2 0\n1 3 0\n")) == 2

    def test_rejects_bad_width(self):
        with pytest.raises(FormulaError):
            count_x3sat(CnfFormula(3, [[1]]))
        with pytest.raises(FormulaError):
            count_x3sat(CnfFormula(4, [[1, 2, 3, 4]]))

    def test_against_python_enumeration(self):
        rng = random.Random(22)
        for _ in range(30):
            f = random_x3sat(rng, max_total_width=10)
            brute = 0
            for bits in range(1 << f.variable_count):
                assignment = [bool(bits >> (v - 1) & 1) for v in range(1, f.variable_count + 1)]
                if all(
                    sum(assignment[abs(l) - 1] == (l > 0) for l in clause) == 1
                    for clause in f.clauses
                ):
                    brute += 1
            assert count_x3sat(f) == brute


class TestGadget:
    def test_all_corners(self):
        for a in (False, True):
            for b in (False, True):
                for c in (False, True):
                    expected = 1 if (a or b or c) else 0
                    assert gadget_extension_count(a, b, c) == expected

    def test_degenerate_pluggings(self):
        for a in (False, True):
            for b in (False, True):
                assert gadget_extension_count(a, b, b) == (1 if a or b else 0)
            assert gadget_extension_count(a, a, a) == (1 if a else 0)


class TestReduceToX3Sat:
    def test_size_laws(self):
        f = parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        r = reduce_to_x3sat(f)
        assert len(r.clauses) == 5
        assert r.variable_count == 9
        assert all(len(c) in (2, 3) for c in r.clauses)

    def test_single_clause_count(self):
        f = parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        assert count_x3sat(reduce_to_x3sat(f)) == 7

    def test_empty_formula(self):
        f = CnfFormula(2, [])
        r = reduce_to_x3sat(f)
        assert r == CnfFormula(2, [])
        assert count_x3sat(r) == count_sat(f) == 4

    def test_rejects_wide_clause(self):
        with pytest.raises(FormulaError):
            reduce_to_x3sat(CnfFormula(4, [[1, 2, 3, 4]]))

    def test_parsimony_exhaustive_small(self):
        for f in canonical_3cnf_formulas(2, 1):
            assert count_sat(f) == count_x3sat(reduce_to_x3sat(f))

    def test_parsimony_with_complementary_pair(self):
        f = CnfFormula(2, [[1, -1, 2]])
        assert count_sat(f) == 4
        assert count_x3sat(reduce_to_x3sat(f)) == 4

    def test_parsimony_width_one_and_two(self):
        for clauses, n in [([[1]], 1), ([[1, -2]], 2), ([[-1], [1, 2]], 2)]:
            f = CnfFormula(n, clauses)
            assert count_sat(f) == count_x3sat(reduce_to_x3sat(f))


class TestX3SatToGraph:
    def test_single_triangle(self):
        f = parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        g, target, multiplier = x3sat_to_graph(f)
        assert (g.n, target, multiplier) == (3, 1, 1)
        assert g.edge_count == 3
        assert count_is_of_size(g, target) == 3

    def test_k4_instance(self):
        f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n")
        g, target, multiplier = x3sat_to_graph(f)
        assert (g.n, target, multiplier) == (4, 2, 1)
        assert g.edge_count == 6
        assert count_is_of_size(g, target) == 0

    def test_shared_positive_literal(self):
        f = parse_dimacs("p cnf 3 2\n1 2 0\n1 3 0\n")
        g, target, multiplier = x3sat_to_graph(f)
        assert (g.n, target) == (4, 2)
        assert set(g.edges) == {(0, 1), (2, 3), (0, 3), (1, 2)}
        assert count_is_of_size(g, target) == 2

    def test_labels_carried(self):
        f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n")
        g, _, _ = x3sat_to_graph(f)
        assert g.labels == {0: 1, 1: -2, 2: 3}

    def test_multiplier_counts_unused_variables(self):
        f = CnfFormula(5, [[1, 2]])
        _, _, multiplier = x3sat_to_graph(f)
        assert multiplier == 8

    def test_cliques_vertex_disjoint_and_cover(self):
        rng = random.Random(23)
        for _ in range(20):
            f = random_x3sat(rng, max_total_width=12)
            g, target, _ = x3sat_to_graph(f)
            assert g.n == sum(len(c) for c in f.clauses)
            assert target == len(f.clauses)
            offset = 0
            for clause in f.clauses:
                members = list(range(offset, offset + len(clause)))
                for i in members:
                    for j in members:
                        if i < j:
                            assert g.has_edge(i, j)
                offset += len(clause)

    def test_bijection_random(self):
        rng = random.Random(24)
        for _ in range(40):
            f = random_x3sat(rng, max_total_width=12)
            g, target, multiplier = x3sat_to_graph(f)
            assert count_x3sat(f) == multiplier * count_is_of_size(g, target)

    def test_rejects_complementary_pair_in_clause(self):
        with pytest.raises(FormulaError):
            x3sat_to_graph(CnfFormula(2, [[1, -1]]))

    def test_rejects_bad_width(self):
        with pytest.raises(FormulaError):
            x3sat_to_graph(CnfFormula(3, [[1]]))


class TestEndToEnd:
    def test_single_clause(self):
        f = parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        assert count_sat_via_independent_sets(f) == 7

    def test_empty_formula_multiplier(self):
        assert count_sat_via_independent_sets(CnfFormula(2, [])) == 4

    def test_contradiction(self):
        assert count_sat_via_independent_sets(CnfFormula(1, [[1], [-1]])) == 0

    def test_report_record(self):
        f = parse_dimacs("p cnf 3 1\n1 2 3 0\n")
        report = reduction_report(f)
        assert report == {
            "clauses_in": 1,
            "clauses_out": 5,
            "vars_in": 3,
            "vars_out": 9,
            "vertices": 14,
            "target_size": 5,
            "multiplier": 1,
        }

    def test_random_formulas(self):
        rng = random.Random(25)
        for _ in range(25):
            f = random_3cnf(rng, rng.randint(1, 4), rng.randint(0, 2))
            assert count_sat_via_independent_sets(f) == count_sat(f)
