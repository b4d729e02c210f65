"""Planar-diagram (PD) codes: parsing, validation, orientation and signs.

Conventions
-----------
A crossing ``X(a, b, c, d)`` lists its four arc labels starting from the
incoming under-strand and going around the crossing; the under-strand runs
``a -> c``.  Each component is oriented by increasing arc labels, cyclically.
The over-strand runs either ``b -> d`` or ``d -> b``.

The crossing sign is +1 exactly when the over-strand runs ``b -> d``.  This
is the rule that gives the bundled right-handed trefoil
``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`` writhe +3; ``test_diagram`` pins it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import PDSyntaxError, PDValidationError

__all__ = [
    "CrossingPD",
    "PlanarDiagram",
    "parse_pd_line",
    "serialize_pd",
    "crossing_sign",
    "writhe",
    "is_alternating",
    "mirror",
    "braid_closure",
]

UNDER_IN, OVER_1, UNDER_OUT, OVER_2 = 0, 1, 2, 3


@dataclass(frozen=True)
class CrossingPD:
    arcs: tuple[int, int, int, int]
    id: int


@dataclass(frozen=True)
class PlanarDiagram:
    """A validated, oriented, connected PD code.

    Build with :meth:`from_codes` or :func:`parse_pd_line`; the derived
    fields are filled in by validation.
    """

    crossings: tuple[CrossingPD, ...]
    name: str = ""
    components: tuple[tuple[int, ...], ...] = field(default=((1,),), compare=False)
    # slot (1 or 3) holding the incoming over-arc, per crossing
    over_in: tuple[int, ...] = field(default=(), compare=False)

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def is_knot(self) -> bool:
        return self.component_count == 1

    def tuples(self) -> list[tuple[int, int, int, int]]:
        return [x.arcs for x in self.crossings]

    @classmethod
    def from_codes(
        cls, codes: Iterable[Sequence[int]], name: str = ""
    ) -> "PlanarDiagram":
        tuples = [tuple(int(v) for v in code) for code in codes]
        for t in tuples:
            if len(t) != 4:
                raise PDValidationError("crossing-arity", f"crossing {t} does not have 4 arcs")
        components, over_in = _validate(tuples)
        crossings = tuple(CrossingPD(arcs=t, id=i) for i, t in enumerate(tuples))
        return cls(crossings=crossings, name=name, components=components, over_in=over_in)


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _validate(tuples):
    c = len(tuples)
    if c == 0:
        return ((),), ()
    n_arcs = 2 * c
    for i, t in enumerate(tuples):
        if len(set(t)) != 4:
            raise PDValidationError(
                "distinct-arcs", f"crossing {i} X{t} repeats an arc label"
            )
        for label in t:
            if not 1 <= label <= n_arcs:
                raise PDValidationError(
                    "arc-range", f"crossing {i} has label {label} outside 1..{n_arcs}"
                )
    counts: dict[int, int] = {}
    for t in tuples:
        for label in t:
            counts[label] = counts.get(label, 0) + 1
    for label in range(1, n_arcs + 1):
        k = counts.get(label, 0)
        if k != 2:
            raise PDValidationError(
                "arc-twice", f"arc {label} occurs {k} times (expected exactly 2)"
            )

    crossing_dsu = _DSU(range(c))
    first_seen: dict[int, int] = {}
    for i, t in enumerate(tuples):
        for label in t:
            if label in first_seen:
                crossing_dsu.union(first_seen[label], i)
            else:
                first_seen[label] = i
    if len({crossing_dsu.find(i) for i in range(c)}) != 1:
        raise PDValidationError("connected", "diagram is disconnected")

    arc_dsu = _DSU(range(1, n_arcs + 1))
    for a, b, cc, d in tuples:
        arc_dsu.union(a, cc)
        arc_dsu.union(b, d)
    groups: dict[int, list[int]] = {}
    for label in range(1, n_arcs + 1):
        groups.setdefault(arc_dsu.find(label), []).append(label)
    components = tuple(tuple(sorted(g)) for g in sorted(groups.values()))
    succ = {}
    for comp in components:
        for k, label in enumerate(comp):
            succ[label] = comp[(k + 1) % len(comp)]

    for i, (a, b, cc, d) in enumerate(tuples):
        if succ[a] != cc:
            raise PDValidationError(
                "arc-successor",
                f"crossing {i}: under-strand {a} -> {cc} does not follow label order",
            )

    # Over-strand direction.  Ambiguous only on 2-arc components, where the
    # arc whose head is already known elsewhere settles it.
    head: dict[int, int] = {}
    for i, (a, _, _, _) in enumerate(tuples):
        head[a] = i
    over_in = [0] * c
    pending = []
    for i, (a, b, cc, d) in enumerate(tuples):
        fwd = succ[b] == d
        bwd = succ[d] == b
        if fwd and not bwd:
            over_in[i] = OVER_1
        elif bwd and not fwd:
            over_in[i] = OVER_2
        elif fwd and bwd:
            pending.append(i)
        else:
            raise PDValidationError(
                "arc-successor",
                f"crossing {i}: over-strand {b}, {d} are not consecutive arcs",
            )
        if over_in[i]:
            head[tuples[i][over_in[i]]] = i
    for i in pending:
        b, d = tuples[i][OVER_1], tuples[i][OVER_2]
        if b in head and head[b] != i:
            over_in[i] = OVER_2
        elif d in head and head[d] != i:
            over_in[i] = OVER_1
        else:
            over_in[i] = OVER_1 if b < d else OVER_2
        head[tuples[i][over_in[i]]] = i
    return components, tuple(over_in)


_HEADER = re.compile(r"\s*(\S+)\s+PD:")
_CROSSING = re.compile(r"\s*X\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pd_line(line: str) -> PlanarDiagram:
    """Parse ``NAME PD: X(a,b,c,d) ...`` into a validated diagram."""
    m = _HEADER.match(line)
    if not m:
        raise PDSyntaxError("expected 'NAME PD:' header", column=1)
    name = m.group(1)
    pos = m.end()
    codes = []
    while True:
        while pos < len(line) and line[pos].isspace():
            pos += 1
        if pos >= len(line):
            break
        cm = _CROSSING.match(line, pos)
        if not cm:
            snippet = line[pos : pos + 12]
            raise PDSyntaxError(f"expected X(a,b,c,d), found {snippet!r}", column=pos + 1)
        codes.append(tuple(int(g) for g in cm.groups()))
        pos = cm.end()
    return PlanarDiagram.from_codes(codes, name=name)


def serialize_pd(d: PlanarDiagram) -> str:
    body = " ".join("X({},{},{},{})".format(*x.arcs) for x in d.crossings)
    name = d.name or "unnamed"
    return f"{name} PD: {body}".rstrip()


def crossing_sign(d: PlanarDiagram, i: int) -> int:
    return 1 if d.over_in[i] == OVER_1 else -1


def writhe(d: PlanarDiagram) -> int:
    return sum(crossing_sign(d, i) for i in range(d.crossing_count))


def _passages(d: PlanarDiagram) -> dict[int, bool]:
    """Map each arc to True if its head is an over-passage."""
    out = {}
    for i, x in enumerate(d.crossings):
        out[x.arcs[UNDER_IN]] = False
        out[x.arcs[d.over_in[i]]] = True
    return out


def is_alternating(d: PlanarDiagram) -> bool:
    if d.crossing_count == 0:
        return True
    over = _passages(d)
    for comp in d.components:
        seq = [over[label] for label in comp]
        for k in range(len(seq)):
            if seq[k] == seq[k - 1]:
                return False
    return True


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Switch over and under at every crossing, keeping the projection."""
    codes = []
    for i, x in enumerate(d.crossings):
        a, b, c, e = x.arcs
        if d.over_in[i] == OVER_1:
            codes.append((b, c, e, a))
        else:
            codes.append((e, a, b, c))
    return PlanarDiagram.from_codes(codes, name=d.name)


def braid_closure(word: Sequence[int], name: str = "") -> PlanarDiagram:
    """PD code of the closure of a braid word.

    Generator ``k`` crosses strand positions ``k`` and ``k+1`` (1-based);
    ``k > 0`` yields a crossing of sign +1 and ``-k`` one of sign -1.
    """
    word = [int(g) for g in word]
    if not word:
        return PlanarDiagram.from_codes([], name=name)
    if any(g == 0 for g in word):
        raise ValueError("braid generators are nonzero integers")
    width = max(abs(g) for g in word) + 1
    touching: dict[int, list[int]] = {p: [] for p in range(width)}
    for k, g in enumerate(word):
        touching[abs(g) - 1].append(k)
        touching[abs(g)].append(k)
    if any(not ks for ks in touching.values()):
        raise PDValidationError("connected", "braid closure is disconnected")

    # slots: (crossing, 'in'/'out', 'L'/'R')
    def exit_of(k, side_in):
        return "R" if side_in == "L" else "L"

    def next_entry(k, side_out):
        pos = abs(word[k]) - 1 + (1 if side_out == "R" else 0)
        ks = touching[pos]
        j = ks[(ks.index(k) + 1) % len(ks)]
        return j, ("L" if pos == abs(word[j]) - 1 else "R")

    arc_of: dict[tuple[int, str, str], int] = {}
    label = 0
    for k0 in range(len(word)):
        for side0 in ("L", "R"):
            if (k0, "in", side0) in arc_of:
                continue
            # walk a component starting at this entry slot
            k, side = k0, side0
            while True:
                out_side = exit_of(k, side)
                nk, nside = next_entry(k, out_side)
                label += 1
                arc_of[(k, "out", out_side)] = label
                arc_of[(nk, "in", nside)] = label
                k, side = nk, nside
                if (k, side) == (k0, side0):
                    break
    codes = []
    for k, g in enumerate(word):
        in_l, in_r = arc_of[(k, "in", "L")], arc_of[(k, "in", "R")]
        out_l, out_r = arc_of[(k, "out", "L")], arc_of[(k, "out", "R")]
        if g > 0:
            codes.append((in_l, in_r, out_r, out_l))
        else:
            codes.append((in_r, out_r, out_l, in_l))
    return PlanarDiagram.from_codes(codes, name=name)
