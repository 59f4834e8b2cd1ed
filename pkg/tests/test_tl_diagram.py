import itertools

import pytest

from tldiag.tl_diagram import (
    TLDiagram, TOP, BOT, identity, e_diagram, compose, enumerate_diagrams,
    cycle_type, as_interval_composition, d_gamma, catalan, SetPartition,
    EnumerationBoundError,
)

T, B = TOP, BOT


def D(k, *pairs):
    return TLDiagram(k, pairs)


class TestConstruction:
    def test_crossing_rejected(self):
        with pytest.raises(ValueError):
            D(2, ((T, 1), (B, 2)), ((T, 2), (B, 1)))

    def test_double_use_rejected(self):
        with pytest.raises(ValueError):
            D(2, ((T, 1), (T, 2)), ((T, 1), (B, 1)), ((B, 1), (B, 2)))

    def test_canonical_text(self):
        d = e_diagram(1, 4)
        assert str(d) == "k=4: (T1,T2)(T3,B3)(T4,B4)(B1,B2)"


class TestCompose:
    def test_e_squared(self):
        d, loops = compose(e_diagram(1, 2), e_diagram(1, 2))
        assert d == e_diagram(1, 2) and loops == 1

    def test_identity_neutral(self):
        for d in enumerate_diagrams(4):
            prod, loops = compose(identity(4), d)
            assert prod == d and loops == 0
            prod, loops = compose(d, identity(4))
            assert prod == d and loops == 0

    def test_seven_dot_pictured_product(self):
        # Two 7-dot diagrams and their product with one removed loop.
        d1 = D(7, ((T, 1), (T, 2)), ((T, 4), (T, 7)), ((T, 5), (T, 6)),
               ((B, 2), (B, 5)), ((B, 3), (B, 4)), ((B, 6), (B, 7)),
               ((T, 3), (B, 1)))
        d2 = D(7, ((T, 3), (T, 4)), ((T, 5), (T, 6)), ((B, 1), (B, 2)),
               ((B, 5), (B, 6)), ((T, 1), (B, 3)), ((T, 2), (B, 4)),
               ((T, 7), (B, 7)))
        expected = D(7, ((T, 1), (T, 2)), ((T, 4), (T, 7)), ((T, 5), (T, 6)),
                     ((B, 1), (B, 2)), ((B, 5), (B, 6)), ((B, 4), (B, 7)),
                     ((T, 3), (B, 3)))
        prod, loops = compose(d1, d2)
        assert prod == expected and loops == 1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity(2), identity(3))

    def test_associativity_with_loops(self):
        for k in (2, 3, 4):
            diagrams = enumerate_diagrams(k)
            for d1, d2, d3 in itertools.islice(
                    itertools.product(diagrams, repeat=3), 0, None):
                p12, l12 = compose(d1, d2)
                left, l3 = compose(p12, d3)
                p23, l23 = compose(d2, d3)
                right, l1 = compose(d1, p23)
                assert left == right
                assert l12 + l3 == l23 + l1

    def test_products_stay_valid(self):
        for k in (2, 3, 4, 5):
            diagrams = enumerate_diagrams(k)
            for d1, d2 in itertools.product(diagrams, repeat=2):
                prod, _ = compose(d1, d2)
                # construction re-runs the planarity and matching checks
                TLDiagram(k, prod.edges)


class TestEnumeration:
    def test_counts(self):
        assert [len(enumerate_diagrams(k)) for k in range(1, 7)] == [1, 2, 5, 14, 42, 132]

    def test_catalan_agrees(self):
        for k in range(1, 9):
            assert catalan(k) == len(enumerate_diagrams(k, kmax=10))

    def test_bound(self):
        with pytest.raises(EnumerationBoundError):
            enumerate_diagrams(7, kmax=6)

    def test_no_duplicates(self):
        for k in range(1, 7):
            diagrams = enumerate_diagrams(k)
            assert len(set(diagrams)) == len(diagrams)


class TestCycleType:
    def test_twelve_dot_pictured_example(self):
        d = D(12,
              ((T, 1), (T, 2)), ((T, 3), (T, 4)), ((T, 7), (T, 8)),
              ((T, 9), (T, 12)), ((T, 10), (T, 11)),
              ((B, 2), (B, 3)), ((B, 4), (B, 5)), ((B, 6), (B, 7)),
              ((B, 9), (B, 10)), ((B, 11), (B, 12)),
              ((T, 5), (B, 1)), ((T, 6), (B, 8)))
        assert as_interval_composition(cycle_type(d)) == (5, 3, 4)

    def test_identity(self):
        ct = cycle_type(identity(5))
        assert all(len(b) == 1 for b in ct.blocks)
        assert as_interval_composition(ct) == (1, 1, 1, 1, 1)

    def test_non_interval(self):
        d = D(4, ((T, 1), (T, 4)), ((T, 2), (T, 3)),
              ((B, 1), (B, 4)), ((B, 2), (B, 3)))
        ct = cycle_type(d)
        assert ct.blocks == frozenset({frozenset({1, 4}), frozenset({2, 3})})
        assert as_interval_composition(ct) is None

    def test_set_partition_validation(self):
        with pytest.raises(ValueError):
            SetPartition(3, frozenset({frozenset({1, 2})}))


class TestDGamma:
    def test_d31(self):
        members = d_gamma((3, 1), 4)
        expected = {
            D(4, ((T, 1), (B, 3)), ((T, 2), (T, 3)), ((T, 4), (B, 4)),
              ((B, 1), (B, 2))),
            D(4, ((T, 1), (T, 2)), ((T, 3), (B, 1)), ((T, 4), (B, 4)),
              ((B, 2), (B, 3))),
        }
        assert set(members) == expected

    def test_all_ones(self):
        assert d_gamma((1, 1, 1, 1), 4) == [identity(4)]

    def test_d22(self):
        members = d_gamma((2, 2), 4)
        assert members == [D(4, ((T, 1), (T, 2)), ((T, 3), (T, 4)),
                             ((B, 1), (B, 2)), ((B, 3), (B, 4)))]

    def test_padding(self):
        assert {as_interval_composition(cycle_type(d)) for d in d_gamma((2,), 4)} \
            == {(2, 1, 1)}

    def test_size_error(self):
        with pytest.raises(ValueError):
            d_gamma((3, 2), 4)

    def test_partition_of_basis(self):
        # interval classes are disjoint; with the non-interval types they cover.
        for k in (2, 3, 4, 5):
            seen = set()
            total = 0
            comps = set()
            for d in enumerate_diagrams(k):
                comp = as_interval_composition(cycle_type(d))
                if comp is not None:
                    comps.add(comp)
            for comp in comps:
                members = d_gamma(comp, k)
                assert not (set(members) & seen)
                seen.update(members)
                total += len(members)
            rest = [d for d in enumerate_diagrams(k)
                    if as_interval_composition(cycle_type(d)) is None]
            assert total + len(rest) == catalan(k)


class TestRelations:
    def test_tl_presentation(self):
        for k in (3, 4, 5):
            for i in range(1, k):
                for j in range(1, k):
                    ei, ej = e_diagram(i, k), e_diagram(j, k)
                    if abs(i - j) == 1:
                        step1, l1 = compose(ei, ej)
                        step2, l2 = compose(step1, ei)
                        assert step2 == ei and l1 + l2 == 0
                    elif i != j:
                        a, la = compose(ei, ej)
                        b, lb = compose(ej, ei)
                        assert a == b and la == lb == 0
