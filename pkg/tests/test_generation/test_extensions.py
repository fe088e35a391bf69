import pytest

from matroidpairs.config import load_expected_counts
from matroidpairs.errors import GenerationOrderError, UnsupportedSizeError
from matroidpairs.generation import (
    Catalogue,
    cosimple_coextensions,
    filter_ifc,
    populate,
    simple_extensions,
)
from matroidpairs.matroids.connectivity import is_3connected
from matroidpairs.matroids.core import BinaryMatroid
from matroidpairs.matroids.isomorphism import is_isomorphic
from matroidpairs.matroids.zoo import complete_graph, fano, parse_name, wheel
from matroidpairs.utils.pool import WorkerPool


@pytest.fixture(scope="module")
def expected():
    return load_expected_counts()


class TestSingleElementSteps:
    def test_k4_has_one_simple_extension(self):
        extensions = simple_extensions(complete_graph(4))
        assert len(extensions) == 1
        assert is_isomorphic(extensions[0], fano())

    def test_k4_has_one_cosimple_coextension(self):
        coextensions = cosimple_coextensions(complete_graph(4))
        assert len(coextensions) == 1
        assert is_isomorphic(coextensions[0], fano().dual())

    def test_fano_is_saturated(self):
        assert simple_extensions(fano()) == []

    def test_extensions_are_distinct(self):
        extensions = simple_extensions(parse_name("K33"))
        for i, first in enumerate(extensions):
            for second in extensions[i + 1 :]:
                assert not is_isomorphic(first, second)


class TestPopulate:
    def test_counts_match_published_values(self, small_catalogue, expected):
        for n in range(6, 11):
            assert small_catalogue.counts(n) == expected.populate[n]

    def test_members_are_3connected(self, small_catalogue):
        for n in range(6, 11):
            assert all(is_3connected(matroid) for _, _, matroid in small_catalogue.members(n))

    def test_wheels_are_present(self, small_catalogue):
        assert any(is_isomorphic(m, wheel(4)) for m in small_catalogue.cell(8, 4))
        assert any(is_isomorphic(m, wheel(5)) for m in small_catalogue.cell(10, 5))

    def test_order_is_deterministic(self, small_catalogue):
        rebuilt = Catalogue.seeded()
        for n in range(7, 10):
            populate(rebuilt, n)
        assert rebuilt.cells[(9, 4)] == small_catalogue.cells[(9, 4)]
        assert rebuilt.cells[(9, 5)] == small_catalogue.cells[(9, 5)]

    def test_sizes_must_follow_in_order(self):
        with pytest.raises(GenerationOrderError):
            populate(Catalogue.seeded(), 8)

    def test_completed_size_rejected(self, catalogue_copy):
        with pytest.raises(GenerationOrderError):
            populate(catalogue_copy, 9)

    def test_size_range(self):
        with pytest.raises(UnsupportedSizeError):
            populate(Catalogue.seeded(), 16)

    @pytest.mark.slow
    def test_size_eleven(self, catalogue_11, expected):
        assert catalogue_11.counts(11) == expected.populate[11]


class TestFilterIfc:
    def test_counts_match_published_values(self, small_ifc, expected):
        for n in range(6, 11):
            assert small_ifc.counts(n) == expected.ifc[n]

    def test_keeps_catalogue_order(self, small_catalogue, small_ifc):
        positions = [small_catalogue.cell(10, 5).index(m) for m in small_ifc.cell(10, 5)]
        assert positions == sorted(positions)

    def test_requires_a_completed_size(self, small_catalogue):
        with pytest.raises(GenerationOrderError):
            filter_ifc(small_catalogue, Catalogue(), 12)


def reductions(matroid: BinaryMatroid):
    for label in matroid.labels:
        yield matroid.delete([label])
        yield matroid.contract([label])


class TestCompleteness:
    def test_every_member_reduces_into_the_previous_size(self, small_catalogue):
        def catalogued(minor: BinaryMatroid) -> bool:
            cell = small_catalogue.cell(minor.size, minor.rows)
            return is_3connected(minor) and any(is_isomorphic(minor, m) for m in cell)

        for n in range(7, 11):
            for _, _, matroid in small_catalogue.members(n):
                if n % 2 == 0 and is_isomorphic(matroid, wheel(n // 2)):
                    continue
                assert any(catalogued(minor) for minor in reductions(matroid))

    def test_output_is_independent_of_jobs(self, temp_dir):
        paths = []
        for jobs in (1, 2):
            catalogue = Catalogue.seeded()
            with WorkerPool(jobs) as pool:
                for n in range(7, 11):
                    populate(catalogue, n, pool.map)
            path = temp_dir / f"catalogue_{jobs}.mcat"
            catalogue.save(path)
            paths.append(path)
        assert paths[0].read_bytes() == paths[1].read_bytes()
