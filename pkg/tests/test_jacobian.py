import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import connected_graphs
from graphsemigroups import graph as gc
from graphsemigroups import jacobian_group as jg
from graphsemigroups.divisors import DivisorClass
from graphsemigroups.errors import BadDegree, EnumerationCapExceeded, NotEffective


def _is_diagonal_chain(S):
    n = len(S)
    if any(S[i][j] != 0 for i in range(n) for j in range(n) if i != j):
        return False
    diag = [S[i][i] for i in range(n)]
    return all(d >= 0 for d in diag) and all(
        diag[i + 1] % diag[i] == 0 for i in range(n - 1) if diag[i] != 0
    )


class TestSmithNormalForm:
    def test_small(self):
        S, U, V = jg.smith_normal_form(((2, 4), (6, 8)))
        assert S == ((2, 0), (0, 4))
        assert jg.matmul(jg.matmul(U, ((2, 4), (6, 8))), V) == S

    @given(st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
    ))
    def test_random_matrices(self, M):
        M = tuple(tuple(r) for r in M)
        S, U, V = jg.smith_normal_form(M)
        assert jg.matmul(jg.matmul(U, M), V) == S
        assert _is_diagonal_chain(S)
        assert abs(oracles.determinant(U)) == 1 and abs(oracles.determinant(V)) == 1
        prod = 1
        for i in range(len(S)):
            prod *= S[i][i]
        assert prod == abs(oracles.determinant(M))


class TestJacobian:
    @pytest.mark.parametrize("k", range(3, 9))
    def test_cycles(self, k):
        jac = jg.jacobian(gc.cycle(k).graph)
        assert jac.invariant_factors == (k,) and jac.order == k

    @pytest.mark.parametrize("n", range(2, 9))
    def test_trees(self, n):
        for fam in (gc.path(n), gc.star(n), gc.random_tree(n, seed=3 * n)):
            jac = jg.jacobian(fam.graph)
            assert jac.invariant_factors == () and jac.order == 1

    def test_k4(self):
        g = gc.complete(4).graph
        assert oracles.spanning_tree_count(g) == 16
        jac = jg.jacobian(g)
        assert jac.order == 16 and jac.invariant_factors == (4, 4)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_complete(self, n):
        # Cayley: n^(n-2) spanning trees, group (Z/n)^(n-2)
        assert jg.jacobian(gc.complete(n).graph).invariant_factors == (n,) * (n - 2)

    def test_wheel(self):
        g = gc.wheel(4).graph
        assert oracles.spanning_tree_count(g) == 45
        assert jg.jacobian(g).invariant_factors == (3, 15)

    def test_to_json(self):
        assert jg.jacobian(gc.cycle(5).graph, q=2).to_json() == {"factors": [5], "order": 5, "base_vertex": 2}

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_order_is_matrix_tree_determinant(self, g):
        det = oracles.determinant(jg.reduced_laplacian(g, 0))
        assert jg.jacobian(g).order == det

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_order_is_spanning_tree_count(self, g):
        assert jg.jacobian(g).order == oracles.spanning_tree_count(g)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=7))
    def test_base_independent(self, g):
        first = jg.jacobian(g, 0).invariant_factors
        assert all(jg.jacobian(g, q).invariant_factors == first for q in range(g.n))


class TestAbelJacobi:
    def test_c4_identifies_opposite_pairs(self, c4):
        a = jg.abel_jacobi(c4, 0, 2, (0, 1, 0, 1))
        b = jg.abel_jacobi(c4, 0, 2, (2, 0, 0, 0))
        assert a == b

    def test_returns_class(self, c4):
        cls = jg.abel_jacobi(c4, 0, 1, (0, 1, 0, 0))
        assert isinstance(cls, DivisorClass) and sum(cls.representative) == 0

    def test_rejects(self, c4):
        with pytest.raises(NotEffective):
            jg.abel_jacobi(c4, 0, 1, (2, -1, 0, 0))
        with pytest.raises(BadDegree):
            jg.abel_jacobi(c4, 0, 2, (0, 1, 0, 0))

    def test_examples(self, c4):
        assert jg.abel_jacobi_injective(c4, 0, 1)
        assert not jg.abel_jacobi_injective(c4, 0, 2)
        assert jg.abel_jacobi_injective(gc.complete(4).graph, 0, 2)

    def test_trees_not_injective(self):
        assert not jg.abel_jacobi_injective(gc.path(3).graph, 0, 1)

    def test_cap(self, c4):
        with pytest.raises(EnumerationCapExceeded):
            jg.abel_jacobi_injective(c4, 0, 3, cap=5)

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=6), st.integers(1, 3), st.data())
    def test_injective_iff_edge_connectivity(self, g, k, data):
        P = data.draw(st.integers(0, g.n - 1))
        assert jg.abel_jacobi_injective(g, P, k) == (gc.edge_connectivity(g) >= k + 1)
