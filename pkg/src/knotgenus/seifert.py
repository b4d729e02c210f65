"""Seifert's algorithm on PD codes: circles, Seifert graph, blocks.

The Seifert graph has one vertex per Seifert circle and one signed edge per
crossing.  Each vertex also carries the cyclic order in which its circle
meets crossings when travelled in its own direction; that rotation system is
what the intersection form needs later.

Murasugi-sum factors are identified with the biconnected blocks of the
Seifert graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (
    OVER_1,
    OVER_2,
    UNDER_IN,
    UNDER_OUT,
    PlanarDiagram,
    crossing_sign,
    is_alternating,
)
from .errors import NotAKnotError

__all__ = [
    "SeifertCircle",
    "SeifertEdge",
    "SeifertGraph",
    "Block",
    "BlockDecomposition",
    "seifert_smooth",
    "build_seifert_graph",
    "betti_first",
    "genus_of_surface",
    "block_decompose",
    "classify_diagram",
]


@dataclass(frozen=True)
class SeifertCircle:
    """A circle of the Seifert state.

    ``visits`` lists ``(arc, crossing, slot)`` in the circle's direction,
    where ``slot`` is the position of ``arc`` in the crossing it runs into.
    """

    id: int
    visits: tuple[tuple[int, int, int], ...]

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(v[0] for v in self.visits)

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(v[1] for v in self.visits)


@dataclass(frozen=True)
class SeifertEdge:
    crossing: int
    u: int  # smaller circle id
    v: int
    sign: int
    left: int  # the end circle lying to the left of the other, seen along it

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u

    def side_of(self, w: int) -> str:
        """Side of circle ``w`` on which this band's other circle lies."""
        return "left" if self.other(w) == self.left else "right"


@dataclass(frozen=True)
class SeifertGraph:
    vertices: tuple[int, ...]
    edges: tuple[SeifertEdge, ...]  # indexed by crossing id
    rotation: dict  # vertex -> tuple of crossing ids in circle order

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"crossing": e.crossing, "ends": [e.u, e.v], "sign": e.sign, "left": e.left}
                for e in self.edges
            ],
            "rotation": {str(v): list(self.rotation[v]) for v in self.vertices},
        }


@dataclass(frozen=True)
class Block:
    edges: tuple[int, ...]  # crossing ids, ascending
    vertices: tuple[int, ...]
    uniform_sign: int | None

    @property
    def is_special_alternating(self) -> bool:
        return self.uniform_sign is not None

    @property
    def betti(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1

    def to_json(self) -> dict:
        return {
            "edges": list(self.edges),
            "vertices": list(self.vertices),
            "uniform_sign": self.uniform_sign,
            "is_special_alternating": self.is_special_alternating,
            "betti": self.betti,
        }


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]  # ordered by smallest crossing id
    cut_vertices: frozenset

    def to_json(self) -> dict:
        return {
            "blocks": [b.to_json() for b in self.blocks],
            "cut_vertices": sorted(self.cut_vertices),
        }


def _next_arc(d: PlanarDiagram) -> dict[int, tuple[int, int, int]]:
    """Orientation-respecting smoothing: arc -> (crossing, slot, next arc)."""
    out = {}
    for i, x in enumerate(d.crossings):
        arcs = x.arcs
        o_in = d.over_in[i]
        o_out = OVER_2 if o_in == OVER_1 else OVER_1
        out[arcs[UNDER_IN]] = (i, UNDER_IN, arcs[o_out])
        out[arcs[o_in]] = (i, o_in, arcs[UNDER_OUT])
    return out


def seifert_smooth(d: PlanarDiagram) -> list[SeifertCircle]:
    if d.crossing_count == 0:
        return [SeifertCircle(id=0, visits=())]
    step = _next_arc(d)
    seen: set[int] = set()
    circles = []
    for start in range(1, d.arc_count + 1):
        if start in seen:
            continue
        visits = []
        arc = start
        while arc not in seen:
            seen.add(arc)
            crossing, slot, nxt = step[arc]
            visits.append((arc, crossing, slot))
            arc = nxt
        circles.append(SeifertCircle(id=len(circles), visits=tuple(visits)))
    return circles


def build_seifert_graph(d: PlanarDiagram) -> SeifertGraph:
    circles = seifert_smooth(d)
    circle_of = {arc: c.id for c in circles for arc in c.arcs}
    edges = []
    for i, x in enumerate(d.crossings):
        a = circle_of[x.arcs[UNDER_IN]]
        b = circle_of[x.arcs[d.over_in[i]]]
        if a == b:
            raise AssertionError(f"crossing {i} joins circle {a} to itself")
        # Smoothing leaves the two circles side by side.  Reading slots
        # counterclockwise, an over-strand entering at slot 4 puts the
        # over-circle on the left of the under-circle.
        left = b if d.over_in[i] == OVER_2 else a
        edges.append(
            SeifertEdge(crossing=i, u=min(a, b), v=max(a, b), sign=crossing_sign(d, i), left=left)
        )
    rotation = {c.id: c.crossings for c in circles}
    return SeifertGraph(
        vertices=tuple(c.id for c in circles), edges=tuple(edges), rotation=rotation
    )


def betti_first(g: SeifertGraph) -> int:
    return len(g.edges) - len(g.vertices) + 1


def genus_of_surface(d: PlanarDiagram) -> int:
    """Genus of the Seifert-algorithm surface of a knot diagram."""
    if not d.is_knot():
        raise NotAKnotError(
            f"{d.name or 'diagram'} has {d.component_count} components; "
            "genus is defined here for knots only, use betti_first for links"
        )
    b = betti_first(build_seifert_graph(d))
    g = Fraction(b, 2)
    if g.denominator != 1:
        raise AssertionError(f"odd first Betti number {b} for a knot")
    return int(g)


def _biconnected_edge_sets(g: SeifertGraph) -> list[set[int]]:
    # Iterative Hopcroft-Tarjan keyed on edge ids, so parallel edges count.
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.u].append((e.v, e.crossing))
        adj[e.v].append((e.u, e.crossing))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[set[int]] = []
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = 0
        counter = 1
        edge_stack: list[int] = []
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == via:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(eid)
                    stack.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    edge_stack.append(eid)
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp = set()
                    while True:
                        eid = edge_stack.pop()
                        comp.add(eid)
                        if eid == via:
                            break
                    out.append(comp)
    return out


def block_decompose(g: SeifertGraph) -> BlockDecomposition:
    blocks = []
    membership: dict[int, int] = {}
    for comp in _biconnected_edge_sets(g):
        edges = tuple(sorted(comp))
        verts = sorted({g.edges[e].u for e in edges} | {g.edges[e].v for e in edges})
        signs = {g.edges[e].sign for e in edges}
        blocks.append(
            Block(
                edges=edges,
                vertices=tuple(verts),
                uniform_sign=signs.pop() if len(signs) == 1 else None,
            )
        )
        for v in verts:
            membership[v] = membership.get(v, 0) + 1
    blocks.sort(key=lambda b: b.edges[0])
    cut = frozenset(v for v, k in membership.items() if k > 1)
    return BlockDecomposition(blocks=tuple(blocks), cut_vertices=cut)


def classify_diagram(d: PlanarDiagram) -> dict:
    dec = block_decompose(build_seifert_graph(d))
    return {
        "alternating": is_alternating(d),
        "homogeneous": all(b.uniform_sign is not None for b in dec.blocks),
        "special": len(dec.blocks) <= 1,
        "blocks": [
            {"edges": list(b.edges), "uniform_sign": b.uniform_sign,
             "is_special_alternating": b.is_special_alternating}
            for b in dec.blocks
        ],
    }
