import hashlib

import pytest

from matroidpairs.config import get_config_path
from matroidpairs.errors import (
    NonBinaryUniformError,
    NotATriangleError,
    UnknownMatroidError,
    UnsupportedSizeError,
)
from matroidpairs.matroids.connectivity import is_3connected
from matroidpairs.matroids.core import MAX_ELEMENTS
from matroidpairs.matroids.isomorphism import is_isomorphic
from matroidpairs.matroids.zoo import (
    complete_graph,
    delta_y,
    edge_label,
    fano,
    fixture_names,
    identify,
    mobius_extension,
    parse_name,
    pg_complement,
    theorem_graph_pairs,
    triadic_mobius,
    uniform_binary,
    wheel,
)

NAMED_MATRICES_SHA256 = "b3ccb65a02d651cedfc69308e9c434f93879a3ea94516d028d74d51b623cc5bc"


class TestNamedMatroids:
    @pytest.mark.parametrize(
        "name,size,rank",
        [
            ("K5", 10, 4),
            ("K33", 9, 5),
            ("Q3", 12, 7),
            ("O", 12, 5),
            ("QML7", 14, 6),
            ("CML10", 15, 9),
            ("M7", 15, 7),
            ("Upsilon8", 15, 8),
            ("Delta4", 10, 4),
            ("Delta5", 13, 5),
            ("P", 11, 4),
            ("R", 11, 5),
            ("A6", 14, 8),
        ],
    )
    def test_size_and_rank(self, name, size, rank):
        matroid = parse_name(name)
        assert (matroid.size, matroid.rows) == (size, rank)

    def test_dual_suffix(self):
        dual = parse_name("K5*")
        assert (dual.size, dual.rows) == (10, 6)

    def test_fixture_file_is_pinned(self):
        data = (get_config_path() / "named_matrices.json").read_bytes()
        assert hashlib.sha256(data).hexdigest() == NAMED_MATRICES_SHA256

    def test_every_fixture_loads(self):
        for name in fixture_names():
            matroid = parse_name(name)
            assert 0 < matroid.size <= MAX_ELEMENTS

    def test_aliases_share_a_matrix(self):
        assert parse_name("P") == parse_name("B")

    def test_wheel_labels(self):
        w4 = wheel(4)
        assert w4.labels[:4] == ("x0", "x1", "x2", "x3")
        assert w4.is_triangle(["x0", "y0", "x1"])
        assert w4.is_triad(["y3", "x0", "y0"])

    def test_edge_label(self):
        assert edge_label(3, 1) == "13"
        assert edge_label(2, 11, wide=True) == "2-11"


class TestMobiusFamilies:
    def test_small_triadic_mobius_is_dual_fano(self):
        assert is_isomorphic(triadic_mobius(4), fano().dual())

    def test_extension_fixture_matches_construction(self):
        assert is_isomorphic(parse_name("M7"), mobius_extension(7))

    def test_triangular_mobius_minus_gamma(self):
        reduced = parse_name("Delta4").delete(["g"])
        assert is_isomorphic(reduced, parse_name("K33*"))

    def test_odd_triadic_rank_rejected(self):
        with pytest.raises(ValueError):
            triadic_mobius(5)


class TestOperations:
    def test_single_element_deletion_of_p(self):
        assert is_isomorphic(parse_name("P").delete([10]), complete_graph(5))

    def test_delta_y_of_p_is_r(self):
        assert is_isomorphic(delta_y(parse_name("P"), (4, 9, 10)), parse_name("R"))

    def test_delta_y_needs_a_triangle(self):
        with pytest.raises(NotATriangleError):
            delta_y(complete_graph(4), ("01", "02", "13"))

    @pytest.mark.parametrize("name,missing", [("K4", 1), ("K5", 5), ("P", 4), ("Delta4", 5)])
    def test_projective_complement_sizes(self, name, missing):
        assert pg_complement(parse_name(name)).size == missing

    def test_complement_of_k5_is_a_circuit(self):
        assert is_isomorphic(pg_complement(complete_graph(5)), uniform_binary(4, 5))

    def test_uniform_matroids(self):
        assert uniform_binary(3, 4).is_circuit(uniform_binary(3, 4).ground)
        assert uniform_binary(0, 3).loops() == 0b111
        with pytest.raises(NonBinaryUniformError):
            parse_name("U24")


class TestNames:
    @pytest.mark.parametrize("text", ["Nope", "K6", "X12"])
    def test_unknown_names(self, text):
        with pytest.raises(UnknownMatroidError):
            parse_name(text)

    def test_unsupported_wheel(self):
        with pytest.raises(UnsupportedSizeError):
            parse_name("Wheel9")

    def test_identify(self):
        assert identify(complete_graph(4)) == "K4"
        assert identify(wheel(3)) == "K4"
        assert identify(fano().dual()) == "F7*"
        assert identify(wheel(4)) == "Wheel4"
        assert identify(parse_name("K5*")) == "K5*"
        assert identify(uniform_binary(3, 4)) is None

    def test_theorem_pairs(self):
        pairs = theorem_graph_pairs()
        assert len(pairs) == 12
        assert [pair for pair in pairs if pair[2] == "interesting"] == [
            ("QML7", "K4", "interesting")
        ]
        for big, small, _ in pairs:
            assert is_3connected(parse_name(big))
            assert parse_name(big).has_minor(parse_name(small))
