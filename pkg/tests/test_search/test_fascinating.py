import pytest

from matroidpairs.config import load_expected_counts
from matroidpairs.generation import Catalogue, filter_ifc
from matroidpairs.matroids.zoo import complete_graph, fano, identify, parse_name
from matroidpairs.search import (
    build_target_minor_matrix,
    build_targets,
    generate_interesting,
    is_fascinating,
    small_fascinating_pairs,
)
from matroidpairs.search.fascinating import has_ifc_between
from matroidpairs.search.targets import TARGET_COUNT


@pytest.fixture(scope="module")
def ifc_11(catalogue_11, small_ifc) -> Catalogue:
    ifc = Catalogue(dict(small_ifc.cells), set(small_ifc.completed))
    filter_ifc(catalogue_11, ifc, 11)
    return ifc


class TestFascinating:
    def test_k5_over_k4(self):
        assert is_fascinating(complete_graph(5), complete_graph(4))

    def test_small_gap_is_never_fascinating(self):
        assert not is_fascinating(fano(), complete_graph(4))

    def test_single_element_deletion_in_between(self):
        p = parse_name("P")
        assert has_ifc_between(p, complete_graph(4), p.rows - 3, p.size - 6)
        assert not is_fascinating(p, complete_graph(4))

    def test_needs_the_minor(self):
        assert not is_fascinating(parse_name("K33"), fano())

    @pytest.mark.slow
    def test_every_small_pair(self):
        for record in small_fascinating_pairs():
            assert is_fascinating(record.big, record.small)


class TestInteresting:
    def test_quartic_ladder_over_k4(self, small_ifc):
        found = generate_interesting(parse_name("QML7"), parse_name("K33"), small_ifc)
        assert [identify(matroid) for matroid in found] == ["K4"]


@pytest.mark.slow
class TestTargets:
    def test_target_count(self, ifc_11):
        assert len(build_targets(ifc_11)) == TARGET_COUNT

    def test_counts_of_the_ifc_cells(self, ifc_11):
        assert ifc_11.counts(11) == load_expected_counts().ifc[11]

    def test_matrix_rows(self, ifc_11):
        targets = build_targets(ifc_11)
        matrix = build_target_minor_matrix(ifc_11, targets, sizes=[11])
        for r in range(8):
            assert len(matrix.bits[(11, r)]) == len(ifc_11.cell(11, r))
        for i, member in enumerate(ifc_11.cell(11, 5)):
            for j in matrix.indices(11, 5, i):
                assert targets[j].size < member.size
                assert member.has_minor(targets[j])
