# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free elimination kernels.

Same contract as ``knotgenus._pykernel``: dense coefficient lists, lowest
degree first, no trailing zeros.  Coefficients stay Python integers; the
gain comes from typed loop indices and the fused cross-multiply/divide step
in ``poly_det``.
"""


cdef list _trim(list p):
    cdef Py_ssize_t n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    if n != len(p):
        del p[n:]
    return p


cpdef list poly_mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef object x
    cdef list out
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x == 0:
            continue
        for j in range(lb):
            out[i + j] = out[i + j] + x * b[j]
    return _trim(out)


cpdef list poly_sub(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    cdef list out
    if la < lb:
        out = a + [0] * (lb - la)
    else:
        out = list(a)
    for i in range(lb):
        out[i] = out[i] - b[i]
    return _trim(out)


cpdef list poly_exact_div(list num, list den):
    cdef Py_ssize_t dn, qlen, k, j
    cdef object lead, c, q, r
    cdef list rem, quot
    if len(den) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) == 0:
        return []
    rem = list(num)
    dn = len(den) - 1
    lead = den[dn]
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
            rem[k + j] = rem[k + j] - q * den[j]
    for k in range(len(rem)):
        if rem[k] != 0:
            raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


cdef list _cross_div(list p, list x, list l, list y, list prev):
    # (p*x - l*y) / prev in a single buffer
    cdef Py_ssize_t lp = len(p), lx = len(x), ll = len(l), ly = len(y)
    cdef Py_ssize_t n1 = 0, n2 = 0, n, i, j
    cdef object c
    cdef list acc
    if lp and lx:
        n1 = lp + lx - 1
    if ll and ly:
        n2 = ll + ly - 1
    n = n1 if n1 > n2 else n2
    if n == 0:
        return []
    acc = [0] * n
    if n1:
        for i in range(lp):
            c = p[i]
            if c == 0:
                continue
            for j in range(lx):
                acc[i + j] = acc[i + j] + c * x[j]
    if n2:
        for i in range(ll):
            c = l[i]
            if c == 0:
                continue
            for j in range(ly):
                acc[i + j] = acc[i + j] - c * y[j]
    _trim(acc)
    if len(prev) == 1 and prev[0] == 1:
        return acc
    return poly_exact_div(acc, prev)


cpdef list poly_det(list rows):
    cdef Py_ssize_t n = len(rows), k, i, j
    cdef int sign = 1
    cdef list m, prev, pivot, row_k, row_i, lead, det
    if n == 0:
        return [1]
    m = [[list(e) for e in row] for row in rows]
    prev = [1]
    for k in range(n - 1):
        if len(<list>(<list>m[k])[k]) == 0:
            for i in range(k + 1, n):
                if len(<list>(<list>m[i])[k]) != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        row_k = <list>m[k]
        pivot = <list>row_k[k]
        for i in range(k + 1, n):
            row_i = <list>m[i]
            lead = <list>row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _cross_div(pivot, <list>row_i[j], lead, <list>row_k[j], prev)
            row_i[k] = []
        prev = pivot
    det = <list>(<list>m[n - 1])[n - 1]
    if sign < 0:
        det = [-c for c in det]
    return det


cpdef object int_det(list rows):
    cdef Py_ssize_t n = len(rows), k, i, j
    cdef int sign = 1
    cdef object prev, pivot, lead, num, q, r
    cdef list m, row_k, row_i
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    prev = 1
    for k in range(n - 1):
        if (<list>m[k])[k] == 0:
            for i in range(k + 1, n):
                if (<list>m[i])[k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = <list>m[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - lead * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact integer division")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * (<list>m[n - 1])[n - 1]


cpdef int int_rank(list rows):
    cdef Py_ssize_t nrows, ncols, col, i
    cdef int rank = 0
    cdef object f, pc
    cdef list m, p
    m = [list(row) for row in rows]
    if not m:
        return 0
    nrows = len(m)
    ncols = len(<list>m[0])
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if (<list>m[i])[col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = <list>m[rank]
        pc = p[col]
        for i in range(rank + 1, nrows):
            f = (<list>m[i])[col]
            if f:
                m[i] = [pc * x - f * y for x, y in zip(<list>m[i], p)]
        rank += 1
        if rank == nrows:
            break
    return rank
