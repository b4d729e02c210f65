from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotgenus.errors import ZeroPolynomialError
from knotgenus.laurent import (
    LaurentPoly,
    alexander_from_blocks,
    breadth,
    det_poly_matrix,
    equal_up_to_units,
    normalize,
    seifert_pencil,
)
from knotgenus.seifert_matrix import int_det

t = LaurentPoly.t()
one = LaurentPoly.constant(1)
TREFOIL = t**2 - t + 1
FIGURE_EIGHT = t**2 - 3 * t + 1

laurent = st.dictionaries(st.integers(-5, 5), st.integers(-20, 20), max_size=5).map(LaurentPoly)
nonzero = laurent.filter(bool)


def test_zero_has_no_stored_terms():
    assert LaurentPoly({3: 0, 1: 0}).coeffs == {}
    assert (t - t).is_zero()


def test_breadth_examples():
    assert breadth(TREFOIL) == 2
    assert breadth(one) == 0
    assert breadth(LaurentPoly({-3: 2, 4: -7})) == 7
    with pytest.raises(ZeroPolynomialError):
        breadth(LaurentPoly())


def test_normalize_examples():
    assert normalize(-(t ** -1) + 1 - t) == TREFOIL
    assert normalize(one) == one
    assert normalize(LaurentPoly({5: -3})) == LaurentPoly.constant(3)


def test_equal_up_to_units_examples():
    assert equal_up_to_units(TREFOIL, -(t ** -1) + 1 - t)
    assert equal_up_to_units(one, t)
    assert not equal_up_to_units(TREFOIL, FIGURE_EIGHT)


def test_pencil_determinant_examples():
    assert equal_up_to_units(det_poly_matrix(seifert_pencil([[1, -1], [0, 1]])), TREFOIL)
    assert det_poly_matrix(seifert_pencil([])) == one
    assert det_poly_matrix(seifert_pencil([[1, -1], [0, -1]])) == -(t**2) + 3 * t - 1


def test_block_product_examples():
    assert equal_up_to_units(alexander_from_blocks([[[1, -1], [0, 1]]]), TREFOIL)
    assert alexander_from_blocks([]) == one
    granny = alexander_from_blocks([[[1, -1], [0, 1]], [[1, -1], [0, 1]]])
    assert equal_up_to_units(granny, TREFOIL**2)


def test_string_form():
    assert str(TREFOIL) == "1 - 1*t + 1*t^2"
    assert str(LaurentPoly({-2: -3, 0: 1})) == "-3*t^-2 + 1"
    assert str(LaurentPoly()) == "0"


def test_evaluation_with_negative_powers():
    assert (t ** -1 + 1)(2) == pytest.approx(1.5)
    assert TREFOIL(1) == 1


@given(laurent, laurent, laurent)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
    assert f - f == LaurentPoly()


@given(laurent)
def test_string_round_trip(f):
    assert LaurentPoly.parse(str(f)) == f


@given(laurent)
def test_json_round_trip(f):
    assert LaurentPoly.from_json(f.to_json()) == f


@given(nonzero, nonzero)
def test_breadth_is_additive(f, g):
    assert breadth(f * g) == breadth(f) + breadth(g)


@given(nonzero, st.integers(-6, 6), st.sampled_from([1, -1]))
def test_normalize_absorbs_units(f, k, sign):
    assert normalize(f.shift(k) * sign) == normalize(f)
    assert normalize(normalize(f)) == normalize(f)


def _cofactor(m):
    if not m:
        return one
    total = LaurentPoly()
    for j, entry in enumerate(m[0]):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = entry * _cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 4).flatmap(
    lambda n: st.lists(st.lists(
        st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(LaurentPoly),
        min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_cofactor_expansion(backend, m):
    assert det_poly_matrix(m) == _cofactor(m)


int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=150, deadline=None)
@given(int_matrices)
def test_pencil_at_one_is_a_square(backend, v):
    f = det_poly_matrix(seifert_pencil(v))
    n = len(v)
    skew = [[v[i][j] - v[j][i] for j in range(n)] for i in range(n)]
    value = f(1)
    assert value == int_det(skew)
    assert value >= 0 and math.isqrt(value) ** 2 == value
    if n % 2:
        assert value == 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 4, 6]).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_breadth_detects_invertibility(v):
    f = det_poly_matrix(seifert_pencil(v))
    if int_det(v) != 0:
        assert breadth(f) == len(v)
    else:
        assert f.is_zero() or breadth(f) < len(v)


def test_degree_bound():
    f = det_poly_matrix(seifert_pencil([[2, 3, 1], [0, 1, -4], [5, 5, 5]]))
    assert f.is_zero() or (f.min_degree >= 0 and f.max_degree <= 3)


def test_singular_example():
    f = det_poly_matrix(seifert_pencil([[1, 2], [2, 4]]))
    assert f.is_zero() or breadth(f) < 2
    assert det_poly_matrix(seifert_pencil([[0, 0], [0, 0]])).is_zero()
