"""Pure-Python fraction-free elimination kernels.

Polynomials are dense coefficient lists, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  All arithmetic is on
Python integers, so results are exact at any size.

The compiled module ``_ckernel`` exports the same functions with the same
semantics; ``knotgenus.kernels`` picks one at import time.
"""

from __future__ import annotations


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_sub(a: list, b: list) -> list:
    if len(a) < len(b):
        out = a + [0] * (len(b) - len(a))
    else:
        out = list(a)
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def poly_exact_div(num: list, den: list) -> list:
    """Quotient ``num / den`` in Z[t]; raises ArithmeticError if inexact."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return []
    rem = list(num)
    dn = len(den) - 1
    lead = den[-1]
    qlen = len(rem) - dn
    if qlen <= 0:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + dn]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[k] = q
        for j in range(dn + 1):
            rem[k + j] -= q * den[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def poly_det(rows: list) -> list:
    """Determinant of a square matrix of dense polynomials (Bareiss).

    The input is not modified.  An empty matrix has determinant ``[1]``.
    """
    n = len(rows)
    if n == 0:
        return [1]
    m = [[list(e) for e in row] for row in rows]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(pivot, row_i[j]), poly_mul(lead, row_k[j]))
                row_i[j] = poly_exact_div(num, prev)
            row_i[k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    if sign < 0:
        det = [-c for c in det]
    return det


def int_det(rows: list) -> int:
    """Exact integer determinant by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - lead * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact integer division")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def int_rank(rows: list) -> int:
    """Rank over Q of an integer matrix (fraction-free row reduction)."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            if f:
                m[i] = [p[col] * x - f * y for x, y in zip(m[i], p)]
        rank += 1
        if rank == nrows:
            break
    return rank
