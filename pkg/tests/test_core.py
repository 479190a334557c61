from collections import Counter

import pytest
from hypothesis import given, strategies as st

from nilorbits.core import (
    ComponentLabel,
    DataIntegrityError,
    DynkinDiagram,
    InputError,
    LieType,
    Partition,
    SubsetJ,
    classify_subdiagram,
    conjugate_heights,
    dynkin_diagram,
    gcd_of_set,
    partitions_of,
    syt_count,
)


@st.composite
def partition_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bins)
    return Partition(tuple(sorted(counts.values(), reverse=True)))


def brute_force_syt(parts):
    """Count standard fillings by placing 1..m at row ends, rows staying column-strict."""
    total = sum(parts)

    def rec(fill):
        placed = sum(fill)
        if placed == total:
            return 1
        found = 0
        for r in range(len(parts)):
            c = fill[r]
            if c < parts[r] and (r == 0 or fill[r - 1] > c):
                fill[r] += 1
                found += rec(fill)
                fill[r] -= 1
        return found

    return rec([0] * len(parts))


class TestPartition:
    def test_normalizes_on_construction(self):
        assert Partition((1, 3, 2)).parts == (3, 2, 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(InputError):
            Partition((3, 0))
        with pytest.raises(InputError):
            Partition((-1,))

    def test_empty_partition(self):
        p = Partition(())
        assert p.total == 0
        assert not p.very_even

    def test_very_even(self):
        assert Partition((4, 4, 2, 2)).very_even
        assert not Partition((4, 4, 2)).very_even
        assert not Partition((3, 3)).very_even

    def test_rather_odd(self):
        assert Partition((3, 2, 2)).rather_odd
        assert not Partition((3, 3, 1, 1)).rather_odd
        # a very even partition is trivially rather odd
        assert Partition((4, 4)).rather_odd

    def test_gcd(self):
        assert Partition((2, 2, 2)).gcd() == 2
        assert Partition((3, 3, 1)).gcd() == 1


class TestSubsetJ:
    def test_sorts(self):
        assert SubsetJ((4, 2)).elements == (2, 4)

    def test_rejects_duplicates(self):
        with pytest.raises(InputError):
            SubsetJ((2, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(InputError):
            SubsetJ((0, 1))


class TestLieType:
    def test_exceptional_rank_fixed(self):
        assert LieType.of("E6").rank == 6
        with pytest.raises(InputError):
            LieType("E7", 6)

    def test_rank_floors(self):
        with pytest.raises(InputError):
            LieType("D", 2)
        with pytest.raises(InputError):
            LieType("B", 1)
        assert LieType("A", 1).matrix_dimension == 2

    def test_matrix_dimensions(self):
        assert LieType("B", 3).matrix_dimension == 7
        assert LieType("C", 3).matrix_dimension == 6
        assert LieType("D", 4).matrix_dimension == 8

    def test_center_orders(self):
        assert LieType("A", 5).center_order == 6
        assert LieType("D", 4).center_order == 4
        assert LieType.of("E6").center_order == 3
        assert LieType.of("G2").center_order == 1


class TestGcdOfSet:
    def test_examples(self):
        assert gcd_of_set({2, 4}, 6) == 2
        assert gcd_of_set(set(), 7) == 7
        assert gcd_of_set({2, 4}, 5) == 1

    def test_rejects_bad_extra(self):
        with pytest.raises(InputError):
            gcd_of_set({2}, 0)


class TestConjugateHeights:
    def test_two_column_tail_shape(self):
        assert conjugate_heights(Partition((3, 3, 1))) == [3, 2, 2]

    def test_single_row(self):
        assert conjugate_heights(Partition((5,))) == [1, 1, 1, 1, 1]

    def test_direct_count(self):
        # parts >= 1: three of them; parts >= 2: two
        assert conjugate_heights(Partition((2, 2, 1))) == [3, 2]

    @given(partition_strategy())
    def test_sum_and_involution(self, p):
        heights = conjugate_heights(p)
        assert sum(heights) == p.total
        assert p.conjugate().conjugate() == p

    def test_exhaustive_small(self):
        for total in range(0, 11):
            for p in partitions_of(total):
                assert sum(conjugate_heights(p)) == p.total
                assert p.conjugate().conjugate() == p


class TestSytCount:
    def test_frozen_values(self):
        # brute force: 5 fillings of the 2+2+1 staircase, 21 of 3+3+1
        assert syt_count(Partition((2, 2, 1))) == 5
        assert syt_count(Partition((3, 3, 1))) == 21
        assert syt_count(Partition((6,))) == 1

    def test_against_brute_force(self):
        for total in range(1, 8):
            for p in partitions_of(total):
                assert syt_count(p) == brute_force_syt(p.parts), p

    def test_conjugate_symmetry(self):
        for total in range(1, 11):
            for p in partitions_of(total):
                assert syt_count(p) == syt_count(p.conjugate())


class TestPartitionsOf:
    def test_counts(self):
        assert sum(1 for _ in partitions_of(8)) == 22
        assert sum(1 for _ in partitions_of(9)) == 30

    def test_zero(self):
        assert list(partitions_of(0)) == [Partition(())]

    @given(st.integers(min_value=1, max_value=12))
    def test_all_sum_correctly(self, n):
        for p in partitions_of(n):
            assert p.total == n


class TestDynkinDiagram:
    def test_e6_edges(self):
        d = dynkin_diagram(LieType.of("E6"))
        assert d.edges == frozenset({(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)})

    def test_e7_edges(self):
        d = dynkin_diagram(LieType.of("E7"))
        assert d.edges == frozenset({(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)})

    def test_a_path(self):
        d = dynkin_diagram(LieType("A", 4))
        assert d.edges == frozenset({(1, 2), (2, 3), (3, 4)})

    def test_rejects_cycle(self):
        with pytest.raises(InputError):
            DynkinDiagram((1, 2, 3), frozenset({(1, 2), (2, 3), (1, 3)}))

    def test_rejects_disconnected(self):
        with pytest.raises(InputError):
            DynkinDiagram((1, 2, 3, 4), frozenset({(1, 2), (3, 4), (1, 2)}))


class TestComponentLabel:
    def test_render_collapses_multiplicities(self):
        lbl = ComponentLabel((("A", 2), ("A", 2)))
        assert lbl.render() == "2A_2"

    def test_render_sorts_by_rank(self):
        lbl = ComponentLabel((("A", 1), ("A", 3), ("A", 2)))
        assert lbl.render() == "A_3 + A_2 + A_1"

    def test_trivial(self):
        assert ComponentLabel(()).render() == "Triv."

    def test_equality_is_multiset(self):
        assert ComponentLabel((("A", 1), ("D", 4))) == ComponentLabel((("D", 4), ("A", 1)))


class TestClassifySubdiagram:
    def test_e6_two_a2(self):
        d = dynkin_diagram(LieType.of("E6"))
        assert classify_subdiagram(d, {1, 3, 5, 6}).render() == "2A_2"

    def test_e7_a3_a2_a1(self):
        d = dynkin_diagram(LieType.of("E7"))
        kept = {1, 2, 3, 5, 6, 7}  # complement of {4}
        assert classify_subdiagram(d, kept).render() == "A_3 + A_2 + A_1"

    def test_empty_is_trivial(self):
        d = dynkin_diagram(LieType.of("E6"))
        assert classify_subdiagram(d, set()).render() == "Triv."

    def test_pinned_e7_rows(self):
        d = dynkin_diagram(LieType.of("E7"))
        assert classify_subdiagram(d, {1, 2, 3, 4, 5, 6}).render() == "E_6"
        assert classify_subdiagram(d, {2, 3, 4, 5, 6, 7}).render() == "D_6"

    def test_d4_arms(self):
        d = dynkin_diagram(LieType.of("E7"))
        assert classify_subdiagram(d, {2, 3, 4, 5}).render() == "D_4"

    def test_full_e8(self):
        d = dynkin_diagram(LieType.of("E8"))
        assert classify_subdiagram(d, set(range(1, 9))).render() == "E_8"

    def test_all_subsets_terminate(self):
        for family in ("E6", "E7"):
            t = LieType.of(family)
            d = dynkin_diagram(t)
            nodes = set(range(1, t.rank + 1))
            for mask in range(1 << t.rank):
                kept = {i + 1 for i in range(t.rank) if mask >> i & 1}
                classify_subdiagram(d, nodes - kept)

    def test_rejects_unknown_nodes(self):
        d = dynkin_diagram(LieType.of("E6"))
        with pytest.raises(InputError):
            classify_subdiagram(d, {9})
