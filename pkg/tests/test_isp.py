import random
from fractions import Fraction

import pytest

from indpoly import (
    CapacityError,
    DomainError,
    Graph,
    Polynomial,
    complete_graph,
    count_is_of_size,
    count_is_of_size_by_enumeration,
    cycle_graph,
    edgeless_graph,
    isp_coeffs,
    isp_coeffs_by_enumeration,
    isp_eval,
    isp_multivariate,
    k_clone,
    path_graph,
)
from indpoly.verify import all_graphs, random_graph


class TestPolynomial:
    def test_trims_trailing_zeros(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
        assert Polynomial([0, 0]).coeffs == (Fraction(0),)

    def test_degree_and_coefficient(self):
        p = Polynomial([1, 4, 3])
        assert p.degree == 2
        assert p.coefficient(1) == 4
        assert p.coefficient(9) == 0
        with pytest.raises(DomainError):
            p.coefficient(-1)

    def test_evaluate_horner(self):
        p = Polynomial([1, 4, 3])
        assert p.evaluate(2) == 21
        assert p.evaluate(Fraction(-1, 2)) == Fraction(-1, 4)

    def test_arithmetic(self):
        p = Polynomial([1, 1])
        q = Polynomial([2, 0, 1])
        assert p + q == Polynomial([3, 1, 1])
        assert p * q == Polynomial([2, 2, 1, 1])
        assert 3 * p == Polynomial([3, 3])

    def test_json_shape(self):
        assert Polynomial([1, 3]).to_json_dict() == {"coeffs": ["1/1", "3/1"]}


class TestIspCoeffs:
    def test_triangle(self):
        assert isp_coeffs(complete_graph(3)) == Polynomial([1, 3])

    def test_edgeless_pair(self):
        assert isp_coeffs(edgeless_graph(2)) == Polynomial([1, 2, 1])

    def test_p4(self):
        assert isp_coeffs(path_graph(4)) == Polynomial([1, 4, 3])

    def test_empty_graph(self):
        assert isp_coeffs(Graph(0)) == Polynomial([1])

    def test_agrees_with_enumeration_exhaustively(self):
        for n in range(0, 5):
            for g in all_graphs(n):
                assert isp_coeffs(g) == isp_coeffs_by_enumeration(g)

    def test_agrees_with_enumeration_random(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_graph(rng, rng.randint(5, 9), rng.random())
            assert isp_coeffs(g) == isp_coeffs_by_enumeration(g)

    def test_coefficient_sanity_invariants(self):
        rng = random.Random(14)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 7))
            poly = isp_coeffs(g)
            assert poly.coefficient(0) == 1
            assert poly.coefficient(1) == g.n
            total = sum(poly.coeffs)
            assert total == isp_eval(g, 1)
            for c in poly.coeffs:
                assert c.denominator == 1 and c >= 0

    def test_max_degree_truncation(self):
        g = path_graph(6)
        full = isp_coeffs(g)
        capped = isp_coeffs(g, max_degree=1)
        assert capped.coefficient(0) == full.coefficient(0)
        assert capped.coefficient(1) == full.coefficient(1)
        assert capped.degree <= 1

    def test_enumeration_capacity_error(self):
        with pytest.raises(CapacityError):
            isp_coeffs_by_enumeration(edgeless_graph(25), max_vertices=20)


class TestIspEval:
    def test_p4_at_2(self):
        assert isp_eval(path_graph(4), 2) == 21

    def test_any_graph_at_zero(self):
        rng = random.Random(15)
        for _ in range(10):
            assert isp_eval(random_graph(rng, rng.randint(0, 6)), 0) == 1

    def test_triangle_at_one_counts_sets(self):
        assert isp_eval(complete_graph(3), 1) == 4

    def test_matches_horner_on_coefficients(self):
        rng = random.Random(16)
        points = [Fraction(2), Fraction(1, 2), Fraction(-1, 5), Fraction(-3), Fraction(7, 3)]
        for _ in range(25):
            g = random_graph(rng, rng.randint(0, 7))
            poly = isp_coeffs(g)
            for x in points:
                assert isp_eval(g, x) == poly.evaluate(x)

    def test_handles_large_pendant_structure(self):
        # 120 vertices, tiny 2-core: must stay fast and exact
        g = path_graph(120)
        value = isp_eval(g, Fraction(1, 3))
        assert value == isp_coeffs(g).evaluate(Fraction(1, 3))


class TestIspMultivariate:
    def test_k2_weights(self):
        assert isp_multivariate(complete_graph(2), {0: 2, 1: 3}) == 6

    def test_single_vertex(self):
        assert isp_multivariate(Graph(1), {0: 5}) == 6

    def test_p3_unit_weights(self):
        assert isp_multivariate(path_graph(3), {0: 1, 1: 1, 2: 1}) == 5

    def test_uniform_matches_eval(self):
        rng = random.Random(17)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 6))
            x = Fraction(rng.randint(-3, 5), rng.randint(1, 4))
            weights = {v: x for v in range(g.n)}
            assert isp_multivariate(g, weights) == isp_eval(g, x)

    def test_requires_total_weights(self):
        with pytest.raises(DomainError):
            isp_multivariate(complete_graph(2), {0: 1})

    def test_capacity(self):
        with pytest.raises(CapacityError):
            isp_multivariate(edgeless_graph(21), {v: 1 for v in range(21)}, max_vertices=20)


class TestCountIsOfSize:
    def test_p4_pairs(self):
        assert count_is_of_size(path_graph(4), 2) == 3

    def test_size_zero_is_one(self):
        rng = random.Random(18)
        for _ in range(10):
            assert count_is_of_size(random_graph(rng, rng.randint(0, 6)), 0) == 1

    def test_triangle_singletons(self):
        assert count_is_of_size(complete_graph(3), 1) == 3

    def test_oversized_is_zero(self):
        assert count_is_of_size(complete_graph(3), 4) == 0

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            count_is_of_size(complete_graph(3), -1)

    def test_both_routes_agree(self):
        rng = random.Random(19)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 8))
            k = rng.randint(0, g.n + 1) if g.n else 0
            assert count_is_of_size(g, k) == count_is_of_size_by_enumeration(g, k)


class TestDefinitionalIdentitySmoke:
    """Small smoke versions of the shift identities; the acceptance suite
    runs the full regimes."""

    def test_k_clone_identity(self):
        g = cycle_graph(4)
        for k in (1, 2, 3):
            for x in (Fraction(2), Fraction(-1, 5)):
                assert isp_eval(k_clone(g, k), x) == isp_eval(g, (1 + x) ** k - 1)

    def test_c4_known_polynomial(self):
        assert isp_coeffs(cycle_graph(4)) == Polynomial([1, 4, 2])
