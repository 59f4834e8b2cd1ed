import pytest

from tldiag.shapes import (
    Partition, SkewShape, StandardTableau, TLPath, content, add_box_covers,
    standard_tableaux, tl_paths, tableau_to_path, path_to_tableau,
    tl_level_vertices, hecke_level_vertices, two_row_from_path_data,
)


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        assert Partition((3, 2, 0, 0)).parts == (3, 2)

    def test_contains(self):
        assert Partition((4, 2)).contains(Partition((3, 1)))
        assert not Partition((4, 2)).contains(Partition((5,)))

    def test_boxes(self):
        assert Partition((2, 1)).boxes() == [(1, 1), (1, 2), (2, 1)]


class TestContent:
    def test_corner(self):
        assert content((1, 1)) == 0

    def test_pictured_grid(self):
        # the (5,5,3,3,1,1) content grid: (6,1) -> -5 and (1,5) -> 4
        assert content((6, 1)) == -5
        assert content((1, 5)) == 4

    def test_one_based(self):
        with pytest.raises(ValueError):
            content((0, 1))


class TestAddBox:
    def test_single_row(self):
        assert [p.parts for p in add_box_covers(Partition((1,)), 2)] \
            == [(2,), (1, 1)]

    def test_monotonicity_blocks(self):
        assert [p.parts for p in add_box_covers(Partition((3, 3)), 2)] == [(4, 3)]

    def test_pictured_level(self):
        assert [p.parts for p in add_box_covers(Partition((4, 2)), 2)] \
            == [(5, 2), (4, 3)]


class TestTableaux:
    def test_empty_shape(self):
        shape = SkewShape(Partition((2, 1)), Partition((2, 1)))
        assert len(standard_tableaux(shape)) == 1

    def test_counts_hook_free(self):
        # straight shapes with known tableau counts
        assert len(standard_tableaux(SkewShape(Partition((2, 1)), Partition(())))) == 2
        assert len(standard_tableaux(SkewShape(Partition((2, 2)), Partition(())))) == 2
        assert len(standard_tableaux(SkewShape(Partition((3, 2)), Partition(())))) == 5

    def test_row_column_increase_enforced(self):
        shape = SkewShape(Partition((2, 1)), Partition(()))
        with pytest.raises(ValueError):
            StandardTableau(shape, ((( 1, 1), 2), ((1, 2), 1), ((2, 1), 3)))

    def test_branching_recursion(self):
        # tableau count of lambda/mu = sum over one-box-smaller nu
        for mu_parts in ((), (1,), (2, 1)):
            mu = Partition(mu_parts)
            for level in range(1, 6):
                for shape in hecke_level_vertices(mu_parts, level, 3):
                    if shape.size() > 8:
                        continue
                    total = 0
                    for prev in hecke_level_vertices(mu_parts, level - 1, 3):
                        if (shape.outer.size() - prev.outer.size() == 1
                                and shape.outer.contains(prev.outer)):
                            total += len(standard_tableaux(prev))
                    assert total == len(standard_tableaux(shape))


class TestPaths:
    def test_validation(self):
        with pytest.raises(ValueError):
            TLPath((0, 2))
        with pytest.raises(ValueError):
            TLPath((1, 0, -1))

    def test_count_from_three(self):
        assert len(tl_paths(3, 3)) == 4

    def test_level_vertices(self):
        assert tl_level_vertices(3, 1) == [4, 2]
        assert tl_level_vertices(0, 4) == [4, 2, 0]
        for p0 in range(0, 4):
            for k in range(0, 11):
                expected = sorted({p.end for p in tl_paths(p0, k)}, reverse=True)
                assert tl_level_vertices(p0, k) == expected

    def test_two_row_from_path_data(self):
        assert two_row_from_path_data(3, 7).parts == (5, 2)
        with pytest.raises(ValueError):
            two_row_from_path_data(3, 6)


class TestBijection:
    def test_three_step_example(self):
        # mu = (3,3,3,2)-style data restricted to two rows: start label 3;
        # 1 placed in row 1, then 2 and 3 in row 2 gives path 3,4,3,2
        mu = Partition((5, 2))
        shape = SkewShape(Partition((6, 4)), mu)
        entries = (((1, 6), 1), ((2, 3), 2), ((2, 4), 3))
        t = StandardTableau(shape, entries)
        assert tableau_to_path(t).steps == (3, 4, 3, 2)

    def test_round_trip(self):
        for p0 in range(0, 4):
            m = p0 + 4
            for k in range(1, 9):
                for p in tl_paths(p0, k):
                    t = path_to_tableau(p, m)
                    assert tableau_to_path(t) == p

    def test_counts_match(self):
        for p0 in range(0, 3):
            m = p0 + 2
            mu = two_row_from_path_data(p0, m)
            for k in range(1, 9):
                for label in tl_level_vertices(p0, k):
                    lam = Partition((mu.row(1) + (k + label - p0) // 2,
                                     mu.row(2) + (k - label + p0) // 2))
                    n_paths = sum(1 for p in tl_paths(p0, k) if p.end == label)
                    n_tab = len(standard_tableaux(SkewShape(lam, mu)))
                    assert n_paths == n_tab

    def test_non_two_row_rejected(self):
        shape = SkewShape(Partition((2, 1, 1)), Partition(()))
        t = standard_tableaux(shape)[0]
        with pytest.raises(ValueError):
            tableau_to_path(t)
