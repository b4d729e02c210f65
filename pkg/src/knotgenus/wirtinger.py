"""Alexander polynomial from the Wirtinger presentation by Fox calculus.

This is an independent check on the Seifert-matrix pipeline.  It reads the
PD tuples directly and shares nothing with the Seifert modules except the
Laurent-polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import PlanarDiagram
from .errors import ConsistencyError, NotAKnotError
from .laurent import LaurentPoly, det_poly_matrix, normalize

__all__ = [
    "Relation",
    "WirtingerPresentation",
    "wirtinger_from_pd",
    "fox_alexander_matrix",
    "alexander_minor",
    "alexander_via_fox",
]


@dataclass(frozen=True)
class Relation:
    """``out = over^e in over^-e`` with ``e = sign``."""

    over: int
    in_: int
    out: int
    sign: int


@dataclass(frozen=True)
class WirtingerPresentation:
    generators: int
    relations: tuple[Relation, ...]


def wirtinger_from_pd(d: PlanarDiagram) -> WirtingerPresentation:
    if d.component_count != 1:
        raise NotAKnotError("the Fox-calculus oracle handles knots only")
    codes = d.tuples()
    c = len(codes)
    if c == 0:
        raise ValueError("the zero-crossing unknot has no Wirtinger relations")
    n_arcs = 2 * c

    # strands: arcs glued across over-passages
    root = list(range(n_arcs + 1))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for _, b, _, d_ in codes:
        rb, rd = find(b), find(d_)
        if rb != rd:
            root[max(rb, rd)] = min(rb, rd)
    reps = sorted({find(k) for k in range(1, n_arcs + 1)})
    gen = {r: i for i, r in enumerate(reps)}

    relations = []
    for a, b, cc, d_ in codes:
        # knot arcs are labelled 1..2c in order, so d follows b iff d == b % 2c + 1
        sign = 1 if d_ == b % n_arcs + 1 else -1
        relations.append(
            Relation(over=gen[find(b)], in_=gen[find(a)], out=gen[find(cc)], sign=sign)
        )
    return WirtingerPresentation(generators=len(reps), relations=tuple(relations))


def fox_alexander_matrix(w: WirtingerPresentation) -> list[list[LaurentPoly]]:
    """Abelianized Fox Jacobian, one row per relation.

    For ``r = out over in^-1 over^-1`` the row is
    ``out: 1, over: t - 1, in: -t``; for ``r = out over^-1 in^-1 over`` it is
    ``out: 1, over: t^-1 - 1, in: -t^-1``.
    """
    t = LaurentPoly.t()
    one = LaurentPoly.constant(1)
    t_inv = LaurentPoly.monomial(1, -1)
    rows = []
    for rel in w.relations:
        row = [LaurentPoly() for _ in range(w.generators)]
        if rel.sign > 0:
            entries = ((rel.out, one), (rel.over, t - 1), (rel.in_, -t))
        else:
            entries = ((rel.out, one), (rel.over, t_inv - 1), (rel.in_, -t_inv))
        for g, val in entries:
            row[g] = row[g] + val
        rows.append(row)
    return rows


def alexander_minor(m: list[list[LaurentPoly]], row: int, col: int) -> LaurentPoly:
    sub = [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(m) if i != row]
    return det_poly_matrix(sub)


def alexander_via_fox(d: PlanarDiagram) -> LaurentPoly:
    """Normalized Alexander polynomial: last row and column deleted."""
    if d.component_count != 1:
        raise NotAKnotError("the Fox-calculus oracle handles knots only")
    if d.crossing_count == 0:
        return LaurentPoly.constant(1)
    m = fox_alexander_matrix(wirtinger_from_pd(d))
    n = len(m)
    delta = alexander_minor(m, n - 1, n - 1)
    if delta.is_zero():
        raise ConsistencyError(f"{d.name}: Alexander minor vanished; malformed presentation")
    return normalize(delta)
