"""Exact integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import ConsistencyError, ZeroPolynomialError

__all__ = [
    "LaurentPoly",
    "breadth",
    "normalize",
    "equal_up_to_units",
    "det_poly_matrix",
    "alexander_from_blocks",
    "seifert_pencil",
]


class LaurentPoly:
    """An element of Z[t, 1/t], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so the zero polynomial is the empty
    mapping.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        terms = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    terms[int(e)] = int(c)
        self._terms = terms

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def from_dense(cls, coeffs: Sequence[int], shift: int = 0) -> "LaurentPoly":
        return cls({i + shift: c for i, c in enumerate(coeffs) if c})

    def to_dense(self) -> tuple[int, list[int]]:
        """Return ``(shift, coeffs)`` with ``self = t**shift * sum(coeffs[i] t**i)``."""
        if not self._terms:
            return 0, []
        lo, hi = self.min_degree, self.max_degree
        out = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return lo, out

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree")
        return max(self._terms)

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly()
        s1, d1 = self.to_dense()
        s2, d2 = other.to_dense()
        return LaurentPoly.from_dense(kernels.poly_mul(d1, d2), s1 + s2)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial is not a unit")
            return LaurentPoly({e * n: c ** (-n)})
        out = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __call__(self, x):
        """Evaluate at ``x``; negative exponents use exact rationals."""
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * x**e
            else:
                total += c * Fraction(1, 1) / Fraction(x) ** (-e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def reflect(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, pairs: Iterable[Sequence[int]]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = f"{mag}"
            elif e == 1:
                body = f"{mag}*t"
            else:
                body = f"{mag}*t^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*t(?:\s*\^\s*(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``; also reads table forms such as ``1-t+ t^2`` or ``2t^-1``."""
        text = text.strip()
        out: dict[int, int] = {}
        pos = 0
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            sign, mag, var, exp = m.groups()
            if not mag and not var:
                raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
            e = (int(exp) if exp is not None else 1) if var else 0
            c = (int(mag) if mag else 1) * (-1 if sign == "-" else 1)
            out[e] = out.get(e, 0) + c
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        if not out and text != "0":
            raise ValueError("empty polynomial")
        return cls(out)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def breadth(f: LaurentPoly) -> int:
    """Span of exponents, max minus min.  Undefined for zero."""
    if f.is_zero():
        raise ZeroPolynomialError("breadth of the zero polynomial is undefined")
    return f.max_degree - f.min_degree


def normalize(f: LaurentPoly) -> LaurentPoly:
    """Representative of ``f`` up to ``±t^k``: lowest exponent 0, lowest coefficient positive."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    lo = f.min_degree
    g = f.shift(-lo)
    return -g if g[0] < 0 else g


def equal_up_to_units(f: LaurentPoly, g: LaurentPoly) -> bool:
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return normalize(f) == normalize(g)


def det_poly_matrix(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    Each row is first multiplied by the power of ``t`` that clears its
    negative exponents, so elimination runs in Z[t]; the shift is undone at
    the end.
    """
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(1)
    total_shift = 0
    dense_rows = []
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
        nonzero = [p for p in row if not p.is_zero()]
        if not nonzero:
            return LaurentPoly()
        lo = min(p.min_degree for p in nonzero)
        total_shift += lo
        dense_rows.append([_dense_from(p, lo) for p in row])
    try:
        det = kernels.poly_det(dense_rows)
    except ArithmeticError as exc:
        raise ConsistencyError(f"fraction-free elimination lost exactness: {exc}") from exc
    return LaurentPoly.from_dense(det, total_shift)


def _dense_from(p: LaurentPoly, lo: int) -> list[int]:
    if p.is_zero():
        return []
    shift, coeffs = p.to_dense()
    return [0] * (shift - lo) + coeffs


def seifert_pencil(v: Sequence[Sequence[int]]) -> list[list[LaurentPoly]]:
    """The matrix ``V - t V^T`` with Laurent-polynomial entries."""
    n = len(v)
    return [
        [LaurentPoly({0: v[i][j], 1: -v[j][i]}) for j in range(n)]
        for i in range(n)
    ]


def alexander_from_blocks(blocks) -> LaurentPoly:
    """``det(V - t V^T)`` for a Seifert matrix organised in blocks.

    ``blocks`` is either an object carrying the assembled matrix as ``.V``
    (a ``BlockSeifertMatrix``), whose coupling between blocks is included,
    or a plain iterable of square matrices taken as the diagonal blocks of
    a block-diagonal matrix.  No blocks gives 1.
    """
    full = getattr(blocks, "V", None)
    if full is not None:
        return det_poly_matrix(seifert_pencil(full))
    out = LaurentPoly.constant(1)
    for v in blocks:
        if not len(v):
            continue
        out = out * det_poly_matrix(seifert_pencil(v))
    return out
