import networkx as nx
import pytest

from matroidpairs.matroids.connectivity import (
    SeparationKind,
    find_separation,
    is_3connected,
    is_44S_connected,
    is_ifc,
    is_internally_4connected,
    lambda_value,
)
from matroidpairs.matroids.gf2 import popcount
from matroidpairs.matroids.zoo import (
    complete_graph,
    direct_sum,
    fano,
    graph_matroid,
    parse_name,
    wheel,
)


class TestThreeConnectivity:
    def test_small_3connected_matroids(self):
        assert is_3connected(complete_graph(4))
        assert is_3connected(fano())
        assert is_3connected(wheel(4))

    def test_parallel_pair_breaks_3connectivity(self):
        k4 = complete_graph(4)
        assert not is_3connected(k4.extend(k4.columns[0], "p"))

    def test_direct_sum_is_disconnected(self):
        both = direct_sum(complete_graph(4), complete_graph(4))
        assert not is_3connected(both)
        separation = find_separation(both, 1)
        assert separation is not None
        assert separation.lambda_value == 0
        assert separation.kind == SeparationKind.ONE_SEP
        assert lambda_value(both, separation.side) == 0


class TestInternalFourConnectivity:
    @pytest.mark.parametrize(
        "graph", [nx.complete_graph(4), nx.complete_graph(5), nx.complete_bipartite_graph(3, 3)]
    )
    def test_internally_4connected_graphs(self, graph):
        matroid = graph_matroid(graph)
        assert is_ifc(matroid)
        assert is_44S_connected(matroid)

    def test_wheel_has_a_big_3separation(self):
        w4 = wheel(4)
        assert not is_internally_4connected(w4)
        assert not is_ifc(w4)
        separation = find_separation(w4, 3)
        assert separation is not None
        assert separation.lambda_value <= 2

    def test_small_matroids_have_no_big_3separation(self):
        assert find_separation(complete_graph(4), 3) is None
        assert is_ifc(fano())

    def test_disconnected_matroid_is_not_44S(self):
        assert not is_44S_connected(direct_sum(fano(), fano()))

    def test_separation_order_checked(self):
        with pytest.raises(ValueError):
            find_separation(fano(), 4)


class TestFourFourSConnectivity:
    def test_big_fans_on_both_sides(self):
        w5 = wheel(5)
        assert is_3connected(w5)
        assert not is_44S_connected(w5)
        fan = w5.subset(["x0", "y0", "x1", "y1", "x2"])
        assert popcount(fan) == 5
        assert lambda_value(w5, fan) == 2

    def test_augmented_wheel_deletion(self):
        assert is_44S_connected(parse_name("A6*").delete([1]))

    def test_four_element_fans_are_allowed(self):
        w4 = wheel(4)
        assert not is_ifc(w4)
        assert is_44S_connected(w4)


@pytest.fixture(scope="module")
def catalogue_members(small_catalogue) -> list:
    return [matroid for n in range(6, 11) for _, _, matroid in small_catalogue.members(n)]


class TestCatalogueConnectivity:
    def test_lambda_is_self_dual(self, small_catalogue):
        for n in range(6, 9):
            for _, _, matroid in small_catalogue.members(n):
                dual = matroid.dual()
                for mask in range(1 << matroid.size):
                    assert lambda_value(matroid, mask) == lambda_value(dual, mask)

    def test_predicates_are_self_dual(self, catalogue_members):
        for matroid in catalogue_members:
            dual = matroid.dual()
            assert is_ifc(dual) == is_ifc(matroid)
            assert is_44S_connected(dual) == is_44S_connected(matroid)

    def test_predicates_are_nested(self, catalogue_members):
        assert len(catalogue_members) == 38
        for matroid in catalogue_members:
            assert is_3connected(matroid)
            if is_ifc(matroid):
                assert is_44S_connected(matroid)
            if is_44S_connected(matroid):
                assert is_3connected(matroid)
