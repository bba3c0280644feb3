import itertools
from fractions import Fraction

import pytest

from gtkey import ehrhart, lattice
from gtkey.combinat import avoids_pattern, catalan
from gtkey.ehrhart import (
    EhrhartResult,
    ResultCache,
    UniPoly,
    binomial_poly,
    determinant_formula,
    ehrhart_gt_product,
    ehrhart_of,
    faulhaber_face,
    faulhaber_sum,
    flag_match,
    flag_sequences,
    gt_object,
    gt_weight_object,
    interpolate,
    key_complex_object,
    kogan_face_object,
    poly_det,
    scan,
    skew_object,
    skew_weight_object,
)
from gtkey.kogan import KoganFace


def test_unipoly_basics():
    p = UniPoly((1, 2, 1))
    assert p(3) == 16
    assert str(p) == "k^2 + 2*k + 1"
    assert UniPoly((0, 0)).is_zero()
    q = UniPoly((Fraction(1, 2), -1))
    assert str(q) == "-k + 1/2"
    assert (p * q)(5) == p(5) * q(5)
    assert UniPoly.from_coeff_strings(p.coeff_strings()) == p


def test_interpolate_fixtures():
    assert interpolate([(0, 1), (1, 4), (2, 9)]) == UniPoly((1, 2, 1))
    assert interpolate([(0, 1)]) == UniPoly((1,))
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        interpolate([])


def test_interpolate_recovers_high_degree():
    poly = UniPoly((Fraction(1, 3), 0, -2, 5, Fraction(7, 2)))
    samples = [(k, poly(k)) for k in range(10)]
    assert interpolate(samples) == poly


def test_product_formula():
    assert ehrhart_gt_product((0, 0, 0)) == UniPoly((1,))
    assert ehrhart_gt_product((1, 0)) == UniPoly((1, 1))
    # (a+b,a,0) at a=b=1 gives (k+1)^3
    assert ehrhart_gt_product((2, 1, 0)) == UniPoly((1, 3, 3, 1))


def test_product_formula_matches_interpolation():
    for lam in [(2, 1, 0), (3, 1, 1), (2, 2, 1, 0), (3, 2, 1, 0)]:
        result = ehrhart_of(gt_object(lam))
        assert result.valid
        assert result.poly == ehrhart_gt_product(lam)


def test_skew_fixture_row():
    result = ehrhart_of(skew_object((3, 2, 1), (2, 1)))
    eighth = Fraction(1, 8)
    assert result.poly == UniPoly(
        (1, Fraction(9, 2), Fraction(33, 4), Fraction(63, 8), Fraction(33, 8), Fraction(9, 8), eighth)
    )
    assert result.valid and result.nonneg


def test_key_complex_object():
    result = ehrhart_of(key_complex_object((3, 2, 0), (2, 1, 3)))
    assert result.poly == UniPoly((1, 1))
    assert result.degree_bound == 1
    result = ehrhart_of(key_complex_object((2, 1, 0), (3, 2, 1)))
    assert result.poly == ehrhart_gt_product((2, 1, 0))


def test_gt_weight_object_interpolation():
    result = ehrhart_of(gt_weight_object((2, 1), (1, 1, 1)))
    assert result.poly == UniPoly((1, 1))
    assert result.samples[0] == (0, 1)
    assert result.valid


def test_skew_weight_object_interpolation():
    # two disconnected boxes with one entry each of two chosen values
    result = ehrhart_of(skew_weight_object((2, 2, 1), (2, 1), (1, 1, 0)))
    assert result.valid and result.nonneg
    assert result.poly(1) == lattice.count_points(
        lattice.skew_spec((2, 2, 1), (2, 1), weight=(1, 1, 0))
    )


def test_kogan_face_object():
    face = KoganFace(4, frozenset({(2, 2), (3, 1), (3, 2), (3, 3)}))
    result = ehrhart_of(kogan_face_object((4, 3, 3, 2), face))
    assert result.valid and result.nonneg
    assert result.poly(1) == 3


def test_empty_weight_object_reports_zero_poly():
    result = ehrhart_of(gt_weight_object((1, 1), (2, 0)))
    assert result.empty
    assert result.poly.is_zero()
    assert result.valid


def test_constant_term_is_one_for_nonempty():
    objs = [
        gt_object((3, 1, 0)),
        skew_object((2, 2, 1), (1,)),
        gt_weight_object((2, 1, 0), (1, 1, 1)),
        key_complex_object((2, 1, 0), (3, 1, 2)),
    ]
    for obj in objs:
        result = ehrhart_of(obj)
        assert not result.empty
        assert result.samples[0] == (0, 1)
        assert result.poly(0) == 1


def test_binomial_poly():
    assert binomial_poly(UniPoly((4,)), 2) == UniPoly((6,))
    assert binomial_poly(UniPoly((0, 1)), 0) == UniPoly((1,))
    assert binomial_poly(UniPoly((0, 1)), -1).is_zero()
    # choose(k+1, 2) = k(k+1)/2 + ... evaluate a few points
    p = binomial_poly(UniPoly((1, 1)), 2)
    assert [p(k) for k in range(5)] == [0, 1, 3, 6, 10]


def test_poly_det():
    one = UniPoly((1,))
    k = UniPoly((0, 1))
    matrix = [[one, k], [k, one]]
    assert poly_det(matrix) == one - k * k


def test_determinant_trivial_flag():
    for lam in [(2, 1, 0), (3, 2, 0), (4, 2, 1, 0)]:
        assert determinant_formula(lam, tuple(range(1, len(lam) + 1))) == UniPoly((1,))


def test_determinant_flag_validation():
    with pytest.raises(ValueError):
        determinant_formula((2, 1, 0), (2, 1, 3))  # not nondecreasing
    with pytest.raises(ValueError):
        determinant_formula((2, 1, 0), (1, 1, 3))  # b_2 < 2
    with pytest.raises(ValueError):
        determinant_formula((2, 1, 0), (1, 2, 4))  # above n


def test_flag_sequences_catalan():
    for n in range(1, 6):
        flags = flag_sequences(n)
        assert len(flags) == catalan(n)
        assert len(set(flags)) == len(flags)


def test_flag_match_s3():
    for lam in [(2, 1, 0), (3, 1, 0), (3, 2, 0)]:
        matches = {}
        for sigma in itertools.permutations((1, 2, 3)):
            if not avoids_pattern(sigma, (2, 3, 1)):
                continue
            flag = flag_match(lam, sigma)
            assert flag is not None
            matches[sigma] = flag
        assert len(matches) == 5
    # flags are distinct whenever the five polynomials are distinct
    for lam in [(3, 1, 0), (3, 2, 0)]:
        flags = [
            flag_match(lam, s)
            for s in itertools.permutations((1, 2, 3))
            if avoids_pattern(s, (2, 3, 1))
        ]
        assert len(set(flags)) == 5


def test_flag_match_rejects_231_containing():
    with pytest.raises(ValueError):
        flag_match((2, 1, 0), (2, 3, 1))


def test_faulhaber():
    assert faulhaber_face(0) == UniPoly((1, 1))
    assert faulhaber_face(1) == UniPoly((1, Fraction(3, 2), Fraction(1, 2)))
    for ell in range(6):
        assert faulhaber_face(ell).nonneg()
    f20 = faulhaber_face(20)
    assert not f20.nonneg()
    for ell in range(21):
        f = faulhaber_face(ell)
        assert all(f(k) == faulhaber_sum(ell, k) for k in range(6))


def test_scan_smoke():
    report = scan("stretched_kostka", {"max_size": 3, "max_rows": 3})
    assert report.status == 0
    assert report.entries
    report = scan("skew_gt", {"max_shape": (2, 1)})
    assert report.status == 0
    report = scan("key_complex", {"n": 3, "max_part": 2})
    assert report.status == 0
    with pytest.raises(ValueError):
        scan("nonsense", {})


def test_result_json_round_trip():
    result = ehrhart_of(gt_object((2, 1, 0)))
    again = EhrhartResult.from_json(result.to_json())
    assert again.poly == result.poly
    assert again.samples == result.samples
    assert again.valid == result.valid


def test_cache_round_trip(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = ResultCache(path)
    obj = gt_object((3, 2, 1))
    first = ehrhart_of(obj, cache=cache)
    # a fresh cache instance reads the stored line and skips recounting
    calls = []
    counting = ehrhart.CountedObject(
        obj.desc, lambda k: calls.append(k) or 10**9, obj.bound
    )
    cache2 = ResultCache(path)
    hit = ehrhart_of(counting, cache=cache2)
    assert not calls
    assert hit.poly == first.poly


def test_degree_bound_override():
    result = ehrhart_of(gt_object((2, 1, 0)), degree_bound=5)
    assert result.poly == ehrhart_gt_product((2, 1, 0))
    with pytest.raises(ValueError):
        ehrhart_of(gt_object((2, 1, 0)), degree_bound=-1)


def test_underestimated_degree_bound_is_flagged_not_wrong():
    result = ehrhart_of(gt_object((3, 2, 1)), degree_bound=1)
    assert not result.valid


def test_product_formula_full_sweep():
    # interpolation agrees with the closed product for every shape in the
    # (3,...,3) boxes, n <= 4; the longest-element key complex is the same
    from gtkey.combinat import longest_element, partitions_in_box

    for n in range(1, 5):
        for lam in partitions_in_box((3,) * n):
            expected = ehrhart_gt_product(lam)
            assert ehrhart_of(gt_object(lam)).poly == expected
            assert ehrhart_of(key_complex_object(lam, longest_element(n))).poly == expected


def test_key_ehrhart_positive_in_shape_variables():
    # expand the closed forms as polynomials in (a, b, k): every coefficient
    # is non-negative, the variable-positivity refinement of the scan
    from gtkey import verify
    from gtkey.polyops import MultiPoly

    rows = verify._load("key_ehrhart_table_s3.json")["rows"]
    a_var = MultiPoly.variable(1, 3)
    b_var = MultiPoly.variable(2, 3)
    k_var = MultiPoly.variable(3, 3)
    for row in rows:
        poly = MultiPoly.constant(3, Fraction(row["scale"]))
        for f in row["factors"]:
            factor = MultiPoly.constant(3, f["c"]) + (
                (a_var * f["a"] + b_var * f["b"]) * k_var
            )
            poly = poly * factor
        assert all(c > 0 for c in poly.terms.values()), row["sigma"]
