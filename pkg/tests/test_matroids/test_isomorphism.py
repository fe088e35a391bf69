import random
from itertools import permutations

from matroidpairs.matroids.core import BinaryMatroid
from matroidpairs.matroids.isomorphism import dedupe, fingerprint, is_isomorphic, quick_invariant
from matroidpairs.matroids.zoo import complete_graph, fano, wheel


def brute_isomorphic(first: BinaryMatroid, second: BinaryMatroid) -> bool:
    """Try every bijection of the ground sets against the full rank tables."""
    if first.size != second.size:
        return False
    n = first.size
    first_table, second_table = first.rank_table(), second.rank_table()
    for order in permutations(range(n)):
        if all(
            first_table[mask]
            == second_table[sum(1 << order[i] for i in range(n) if (mask >> i) & 1)]
            for mask in range(1 << n)
        ):
            return True
    return False


class TestIsomorphism:
    def test_wheel_three_is_k4(self):
        assert is_isomorphic(wheel(3), complete_graph(4))

    def test_fano_is_not_its_dual(self):
        assert not is_isomorphic(fano(), fano().dual())

    def test_permutation_invariance(self):
        shuffled = fano().permute([3, 0, 6, 1, 5, 2, 4])
        assert is_isomorphic(shuffled, fano())
        assert fingerprint(shuffled) == fingerprint(fano())
        assert quick_invariant(shuffled) == quick_invariant(fano())

    def test_agrees_with_all_bijections(self):
        rng = random.Random(11)
        for _ in range(25):
            first = BinaryMatroid.from_columns([rng.randrange(0, 8) for _ in range(6)])
            second = BinaryMatroid.from_columns([rng.randrange(0, 8) for _ in range(6)])
            assert is_isomorphic(first, second) == brute_isomorphic(first, second)
            order = list(range(6))
            rng.shuffle(order)
            assert is_isomorphic(first, first.permute(order))

    def test_dedupe_keeps_one_per_class(self):
        classes = dedupe([fano(), complete_graph(4), fano().permute([6, 5, 4, 3, 2, 1, 0])])
        assert len(classes) == 2
        assert sorted(member.size for member in classes) == [6, 7]


class TestCatalogueDuality:
    def test_catalogue_is_closed_under_duality(self, small_catalogue):
        for n in range(6, 11):
            counts = small_catalogue.counts(n)
            for r, _, matroid in small_catalogue.members(n):
                assert counts[r] == counts[n - r]
                dual = matroid.dual()
                prints = {fingerprint(member) for member in small_catalogue.cell(n, n - r)}
                assert fingerprint(dual) in prints
                assert any(is_isomorphic(dual, m) for m in small_catalogue.cell(n, n - r))
