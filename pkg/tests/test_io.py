import pytest

from diffgoppa.code import CodeSpec, Divisor, LocalData, build_code
from diffgoppa.curve import CurvePoint, curve_make
from diffgoppa.errors import InputError
from diffgoppa.field import field_make
from diffgoppa.io import (
    curve_from_json,
    curve_to_json,
    element_from_json,
    element_to_json,
    field_from_json,
    field_to_json,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    matrix_to_pretty,
    point_from_json,
    point_to_json,
    series_from_json,
    spec_from_json,
    spec_to_json,
    taylor_from_json,
    taylor_to_json,
)
from diffgoppa.matrix import FqMatrix
from diffgoppa.series import TruncatedSeries
from diffgoppa.taylor import TaylorElement

F5 = field_make(5)
F4 = field_make(2, 2)
P1_5 = curve_make(F5, "p1")
E511 = curve_make(F5, "elliptic", 1, 1)


def test_element_round_trip_prime():
    e = F5.element(3)
    assert element_to_json(e) == 3
    assert element_from_json(F5, 3) == e


def test_element_round_trip_extension():
    e = F4.element([1, 1])
    v = element_to_json(e)
    assert isinstance(v, list)
    assert element_from_json(F4, v) == e


def test_field_round_trip():
    assert field_from_json(field_to_json(F5)) is F5 or \
        field_from_json(field_to_json(F5)).order == 5
    F = field_from_json(field_to_json(F4))
    assert (F.p, F.m) == (2, 2)


def test_field_missing_p():
    with pytest.raises(InputError):
        field_from_json({})


def test_curve_round_trip():
    assert curve_from_json(F5, curve_to_json(P1_5)).kind == "p1"
    E = curve_from_json(F5, curve_to_json(E511))
    assert E.kind == "elliptic" and E.A == F5.one() and E.B == F5.one()


def test_curve_unknown_kind():
    with pytest.raises(InputError):
        curve_from_json(F5, {"kind": "hyperelliptic"})


def test_point_round_trip():
    pts = [CurvePoint.infinity(),
           CurvePoint.affine(F5.element(2)),
           CurvePoint.affine(F5.element(0), F5.element(1))]
    for p in pts:
        assert point_from_json(F5, point_to_json(p)) == p


def test_point_bad_shape():
    with pytest.raises(InputError):
        point_from_json(F5, [1, 2, 3])


def test_spec_round_trip_with_local_and_gamma():
    unit = TruncatedSeries(F5, [2, 1])
    rep = TruncatedSeries(F5, [0, 1])
    spec = CodeSpec(
        F5, P1_5, 2,
        Divisor(((CurvePoint.infinity(), 2),
                 (CurvePoint.affine(F5.element(1)), 1))),
        (LocalData(unit, rep), LocalData(TruncatedSeries.one(F5, 2),
                                         TruncatedSeries.identity(F5, 2))),
        FqMatrix.from_rows(F5, [[1, 0], [0, 1]]))
    back = spec_from_json(spec_to_json(spec))
    assert back.k == spec.k
    assert back.divisor.points == spec.divisor.points
    assert back.local_data()[0].unit.coeffs == unit.coeffs
    assert back.gamma == spec.gamma
    assert build_code(back).generator == build_code(spec).generator


def test_spec_missing_fields():
    with pytest.raises(InputError):
        spec_from_json({"field": {"p": 5}})
    with pytest.raises(InputError):
        spec_from_json([1, 2])


def test_spec_local_count_mismatch():
    obj = {"field": {"p": 5}, "curve": {"kind": "p1"}, "k": 1,
           "divisor": [{"point": "inf", "mult": 2}],
           "local": [{"unit": [1, 0]}, {"unit": [1, 0]}]}
    with pytest.raises(InputError):
        spec_from_json(obj)


def test_matrix_round_trip_and_csv():
    M = FqMatrix.from_rows(F5, [[1, 2, 3], [0, 4, 1]])
    back = matrix_from_json(None, matrix_to_json(M))
    assert back == M
    assert matrix_to_csv(M) == "1,2,3\n0,4,1\n"


def test_matrix_pretty_blocks():
    M = FqMatrix.from_rows(F5, [[1, 2, 3], [0, 4, 1]])
    assert matrix_to_pretty(M, (2, 1)) == "1 2 | 3\n0 4 | 1\n"
    assert matrix_to_pretty(M) == "1 2 3\n0 4 1\n"


def test_matrix_missing_rows():
    with pytest.raises(InputError):
        matrix_from_json(F5, {})


def test_series_plain_list():
    ts = series_from_json(F5, [1, 2])
    assert ts == TruncatedSeries(F5, [1, 2])


def test_taylor_round_trip():
    g = TaylorElement(TruncatedSeries(F5, [2, 1]), TruncatedSeries(F5, [0, 3]))
    back = taylor_from_json(F5, taylor_to_json(g))
    assert back.a == g.a and back.sigma == g.sigma
