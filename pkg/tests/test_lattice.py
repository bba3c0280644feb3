import itertools

import pytest

from gtkey.gtcore import validate_pattern, weight
from gtkey.lattice import count_points, enumerate_points, gt_spec, skew_spec
from oracles import grid_filter_patterns, ssyt_fillings


def test_full_polytope_counts():
    assert count_points(gt_spec((2, 1, 0, 0))) == 20
    assert count_points(gt_spec((0, 0, 0))) == 1
    assert count_points(gt_spec((1, 0)), 3) == 4


def test_weight_filtered_count_against_ssyt_oracle():
    assert count_points(gt_spec((2, 1, 0), weight=(1, 1, 1))) == 2
    assert len(ssyt_fillings((2, 1), 3, content=(1, 1, 1))) == 2
    for lam in [(2, 1, 0), (3, 1, 0), (2, 2, 1)]:
        for content in itertools.product(range(4), repeat=3):
            if sum(content) != sum(lam):
                continue
            expected = len(ssyt_fillings(lam, 3, content=content))
            assert count_points(gt_spec(lam, weight=content)) == expected


def test_unfiltered_count_against_ssyt_oracle():
    for lam in [(2, 1, 0), (3, 2, 0), (2, 2, 2)]:
        assert count_points(gt_spec(lam)) == len(ssyt_fillings(lam, 3))


def test_table_row_221_dilation():
    assert count_points(skew_spec((2, 2, 1)), 2) == 6


def test_enumeration_matches_grid_filter_oracle():
    for lam in [(2, 1, 0), (2, 2, 1), (3, 1, 0, 0)]:
        pts = [p.rows for p in enumerate_points(gt_spec(lam))]
        assert sorted(pts) == grid_filter_patterns(lam)
        assert len(set(pts)) == len(pts)


def test_enumeration_canonical_order():
    pts = list(enumerate_points(gt_spec((2, 1, 0, 0))))
    keys = [p.flat() for p in pts]
    assert keys == sorted(keys)
    pts = list(enumerate_points(skew_spec((2, 2, 1), (1,))))
    keys = [p.flat() for p in pts]
    assert keys == sorted(keys)


def test_enumeration_is_deterministic():
    a = [p.rows for p in enumerate_points(gt_spec((3, 2, 1)))]
    b = [p.rows for p in enumerate_points(gt_spec((3, 2, 1)))]
    assert a == b


def test_all_points_valid_and_counted():
    for spec in [
        gt_spec((3, 2, 0)),
        skew_spec((2, 2, 1), (2, 1)),
        gt_spec((2, 2, 0), weight=(2, 1, 1)),
        skew_spec((2, 1, 0), (1,), weight=(1, 0, 1)),
    ]:
        pts = list(enumerate_points(spec))
        assert all(validate_pattern(p) for p in pts)
        assert len(pts) == count_points(spec)
        if spec.weight is not None:
            assert all(weight(p) == spec.weight for p in pts)


def test_dilation_identity():
    for lam in [(2, 1, 0), (3, 1, 1), (2, 2, 1, 0)]:
        for k in range(4):
            scaled = tuple(k * x for x in lam)
            assert count_points(gt_spec(lam), k) == count_points(gt_spec(scaled))


def test_weight_counts_partition_the_polytope():
    for lam in [(2, 1, 0), (3, 2, 1), (2, 2, 1, 0)]:
        n = len(lam)
        total = count_points(gt_spec(lam))
        by_weight = 0
        for w in itertools.product(range(sum(lam) + 1), repeat=n):
            if sum(w) == sum(lam):
                by_weight += count_points(gt_spec(lam, weight=w))
        assert by_weight == total


def test_empty_weight_filter():
    assert count_points(gt_spec((2, 0), weight=(0, 1))) == 0  # wrong total
    assert count_points(gt_spec((2, 2), weight=(1, 3))) == 0  # infeasible
    assert list(enumerate_points(gt_spec((2, 2), weight=(1, 3)))) == []


def test_skew_requires_containment():
    with pytest.raises(ValueError):
        skew_spec((2, 1), (3,))


def test_skew_counts_match_skew_tableaux():
    # shape (2,2,1)/(2,1): two disconnected boxes, entries <= 3 -> 9 fillings
    assert count_points(skew_spec((2, 2, 1), (2, 1))) == 9
    # skew with mu=0 equals the straight count
    assert count_points(skew_spec((3, 2, 1))) == count_points(gt_spec((3, 2, 1)))


def test_zero_dilation_single_point():
    for spec in [gt_spec((3, 1, 0)), skew_spec((2, 1), (1,)), gt_spec((2, 1, 0), weight=(1, 1, 1))]:
        assert count_points(spec, 0) == 1
        pts = list(enumerate_points(spec, 0))
        assert len(pts) == 1
        assert all(x == 0 for row in pts[0].rows for x in row)


def test_n1_cases():
    assert count_points(gt_spec((5,))) == 1
    assert count_points(skew_spec((3, 2), (3, 1), n=1)) == 1
    assert count_points(skew_spec((3, 2), (1, 0), n=1)) == 0  # needs mu_1 >= lambda_2


def test_skew_with_more_values_than_columns():
    # one-row shape (2), entries <= 3: multichoose = 6 fillings
    assert count_points(skew_spec((2,), (), n=3)) == 6
    assert count_points(skew_spec((2,), (1,), n=3)) == 3


def test_equalities_restrict_enumeration():
    spec = gt_spec((4, 3, 3, 2))
    cells = frozenset({(2, 2), (3, 1), (3, 2), (3, 3)})
    pts = list(enumerate_points(spec, equalities=cells))
    assert [p.rows for p in pts] == [
        ((3,), (3, 3), (4, 3, 3), (4, 3, 3, 2)),
        ((3,), (4, 3), (4, 3, 3), (4, 3, 3, 2)),
        ((4,), (4, 3), (4, 3, 3), (4, 3, 3, 2)),
    ]
    assert count_points(spec, equalities=cells) == 3
