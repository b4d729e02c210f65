"""Both elimination backends against naive oracles written here."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def naive_mul(p, q):
    out = [0] * (len(p) + len(q))
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def naive_add(p, q):
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def leibniz_det(m):
    """Sum over permutations; only used on tiny matrices."""
    n = len(m)
    total = []
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = [1]
        for i in range(n):
            term = naive_mul(term, m[i][perm[i]])
        if inversions % 2:
            term = [-x for x in term]
        total = naive_add(total, term)
    return total


def fraction_rank(m):
    a = [[Fraction(x) for x in row] for row in m]
    rank, cols = 0, len(a[0]) if a else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


polys = st.lists(st.integers(-4, 4), max_size=3).map(_trim)


def square(elements, max_n=4):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)
    )


@settings(max_examples=150, deadline=None)
@given(square(polys))
def test_poly_det_matches_leibniz(backend, m):
    expected = leibniz_det(m) if m else [1]
    assert backend.poly_det([[list(p) for p in row] for row in m]) == expected


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_poly_mul_matches_convolution(backend, p, q):
    assert backend.poly_mul(p, q) == naive_mul(p, q)


@settings(max_examples=150, deadline=None)
@given(polys, polys.filter(bool))
def test_exact_division_inverts_multiplication(backend, p, q):
    assert backend.poly_exact_div(naive_mul(p, q), q) == p


def test_inexact_division_raises(backend):
    with pytest.raises(ArithmeticError):
        backend.poly_exact_div([1, 0, 1], [1, 1])


@settings(max_examples=150, deadline=None)
@given(square(st.integers(-6, 6), max_n=5))
def test_int_det_and_rank(backend, m):
    as_polys = [[_trim([x]) for x in row] for row in m]
    expected = leibniz_det(as_polys) if m else [1]
    assert backend.int_det([row[:] for row in m]) == (expected[0] if expected else 0)
    assert backend.int_rank([row[:] for row in m]) == (fraction_rank(m) if m else 0)


def test_empty_and_zero_column(backend):
    assert backend.poly_det([]) == [1]
    assert backend.poly_det([[[], [1]], [[], [2]]]) == []
    assert backend.int_det([]) == 1


def test_backend_selection_env(monkeypatch):
    import importlib

    from knotgenus import kernels

    monkeypatch.setenv("KNOTGENUS_PURE_PYTHON", "1")
    try:
        assert importlib.reload(kernels).BACKEND == "python"
    finally:
        monkeypatch.delenv("KNOTGENUS_PURE_PYTHON")
        importlib.reload(kernels)
