"""Integer Seifert matrices for the blocks of a Seifert graph.

For a block with a chosen cycle basis, ``V + V^T`` is the symmetric form
``S``, which is local to the crossing bands, and ``V - V^T`` is the
intersection form ``J`` of the basis curves on the surface.  So
``V = (S + J) / 2``.

Blocks meeting at a cut circle are Murasugi summands, so in a suitable
block order the full matrix is block upper triangular.  The off-diagonal
coupling does not change ``det V`` but it does change ``det(V - tV^T)``,
whose lower-left block is ``-t`` times the transposed coupling; so it is
built too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .diagram import PlanarDiagram
from .errors import ConsistencyError
from .seifert import Block, BlockDecomposition, SeifertGraph, block_decompose, build_seifert_graph

__all__ = [
    "signature",
    "CycleBasis",
    "BlockMatrix",
    "BlockSeifertMatrix",
    "cycle_basis",
    "symmetric_form",
    "intersection_form",
    "seifert_matrix_block",
    "block_seifert_matrix",
    "is_invertible",
    "definiteness",
    "int_det",
    "int_rank",
]

Matrix = list[list[int]]
# One step of a closed walk: (crossing id, tail vertex, head vertex).
Step = tuple[int, int, int]


@dataclass(frozen=True)
class CycleBasis:
    tree: tuple[int, ...]
    cycles: tuple[tuple[Step, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)


def cycle_basis(block: Block, g: SeifertGraph) -> CycleBasis:
    """Fundamental cycles of the smallest-crossing-id spanning tree.

    Each cycle starts by crossing its non-tree edge from the lower vertex id
    to the higher one and returns along the tree path.
    """
    if block.betti == 0:
        return CycleBasis(tree=block.edges, cycles=())
    parent = {v: v for v in block.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree, chords = [], []
    for eid in block.edges:  # ascending crossing id
        e = g.edges[eid]
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            chords.append(eid)
        else:
            parent[ru] = rv
            tree.append(eid)

    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in block.vertices}
    for eid in tree:
        e = g.edges[eid]
        adj[e.u].append((e.v, eid))
        adj[e.v].append((e.u, eid))

    def tree_path(src: int, dst: int) -> list[Step]:
        prev: dict[int, tuple[int, int]] = {src: (src, -1)}
        todo = [src]
        while todo:
            x = todo.pop()
            for y, eid in sorted(adj[x], key=lambda p: p[1]):
                if y not in prev:
                    prev[y] = (x, eid)
                    todo.append(y)
        path = []
        y = dst
        while y != src:
            x, eid = prev[y]
            path.append((eid, x, y))
            y = x
        return path[::-1]

    cycles = []
    for eid in chords:
        e = g.edges[eid]
        cycles.append(tuple([(eid, e.u, e.v)] + tree_path(e.v, e.u)))
    return CycleBasis(tree=tuple(tree), cycles=tuple(cycles))


def symmetric_form(basis: CycleBasis, g: SeifertGraph) -> Matrix:
    """``S_ij`` = sum over shared bands of sign times relative direction."""
    m = len(basis)
    directed = [{eid: tail for eid, tail, _ in cyc} for cyc in basis.cycles]
    s = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            total = 0
            for eid, tail in directed[i].items():
                other = directed[j].get(eid)
                if other is not None:
                    total += g.edges[eid].sign * (1 if other == tail else -1)
            s[i][j] = s[j][i] = total
    return s


def _chords(cycles: Sequence[Sequence[Step]], g: SeifertGraph) -> dict[int, list]:
    """Per vertex: ``(cycle, start, end)`` boundary positions of each chord.

    Positions are ``(rotation index, sub-position)``.  Strands sharing a
    band are ordered by cycle index, ascending along the boundary at the
    band's lower-id end and descending at the other end, which is how one
    ordering across an oriented band reads from the two attached disks.
    """
    rot_index = {v: {c: k for k, c in enumerate(g.rotation[v])} for v in g.vertices}

    def position(eid: int, vertex: int, k: int) -> tuple[int, int]:
        sub = k if vertex == g.edges[eid].u else -k
        return (rot_index[vertex][eid], sub)

    out: dict[int, list] = {}
    for k, cyc in enumerate(cycles):
        n = len(cyc)
        for idx in range(n):
            eid_in, _, vertex = cyc[idx]
            eid_out, tail, _ = cyc[(idx + 1) % n]
            assert tail == vertex
            out.setdefault(vertex, []).append(
                (k, position(eid_in, vertex, k), position(eid_out, vertex, k))
            )
    return out


def _crossing_sign(p1, p2, q1, q2) -> int:
    """Sign of chord p1->p2 meeting chord q1->q2 in an oriented disk.

    Positions increase along the boundary orientation.  Returns 0 when the
    chords do not interleave.
    """
    lo, hi = (p1, p2) if p1 < p2 else (p2, p1)
    if (lo < q1 < hi) == (lo < q2 < hi):
        return 0
    # going around from p1: is q1 met before p2?
    if p2 > p1:
        q1_first = p1 < q1 < p2
    else:
        q1_first = q1 > p1 or q1 < p2
    return 1 if q1_first else -1


def intersection_form(cycles, g: SeifertGraph) -> Matrix:
    """Algebraic intersection numbers of closed walks on the surface.

    ``cycles`` is a :class:`CycleBasis` or any sequence of closed walks;
    walks from different blocks may be mixed.
    """
    if isinstance(cycles, CycleBasis):
        cycles = cycles.cycles
    m = len(cycles)
    j = [[0] * m for _ in range(m)]
    for chords in _chords(cycles, g).values():
        for a in range(len(chords)):
            ka, p1, p2 = chords[a]
            for b in range(a + 1, len(chords)):
                kb, q1, q2 = chords[b]
                if ka == kb:
                    continue
                s = _crossing_sign(p1, p2, q1, q2)
                if s:
                    j[ka][kb] += s
                    j[kb][ka] -= s
    return j


@dataclass(frozen=True)
class BlockMatrix:
    block: Block
    basis: CycleBasis
    S: Matrix
    J: Matrix
    V: Matrix

    @property
    def size(self) -> int:
        return len(self.V)

    def to_json(self) -> dict:
        det = int_det(self.V)
        return {
            "edges": list(self.block.edges),
            "uniform_sign": self.block.uniform_sign,
            "size": self.size,
            "V": self.V,
            "S": self.S,
            "J": self.J,
            "det": det,
            "definiteness": definiteness(self.S),
        }


def seifert_matrix_block(block: Block, g: SeifertGraph) -> BlockMatrix:
    basis = cycle_basis(block, g)
    s = symmetric_form(basis, g)
    j = intersection_form(basis, g)
    m = len(basis)
    v = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            total = s[a][b] + j[a][b]
            if total % 2:
                raise ConsistencyError(
                    f"parity mismatch in block {block.edges}: S[{a}][{b}]={s[a][b]}, "
                    f"J[{a}][{b}]={j[a][b]}"
                )
            v[a][b] = total // 2
    return BlockMatrix(block=block, basis=basis, S=s, J=j, V=v)


@dataclass(frozen=True)
class BlockSeifertMatrix:
    """Seifert matrix of a diagram's surface, organised by Seifert-graph block.

    ``blocks`` holds the diagonal blocks in block order (smallest crossing
    id first); bridge blocks contribute empty matrices and are kept for
    reporting.  ``V`` is the full matrix on the concatenated block bases,
    including the coupling between blocks that meet at a cut vertex.
    ``order`` is a permutation of block indices under which ``V`` is block
    upper triangular.
    """

    blocks: tuple[BlockMatrix, ...]
    V: Matrix
    order: tuple[int, ...]

    def __iter__(self) -> Iterator[Matrix]:
        return iter(b.V for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        return len(self.V)

    def offsets(self) -> list[int]:
        out, k = [], 0
        for b in self.blocks:
            out.append(k)
            k += b.size
        return out

    def triangular(self) -> Matrix:
        """``V`` with its basis permuted into ``order``."""
        offs = self.offsets()
        perm = [offs[b] + i for b in self.order for i in range(self.blocks[b].size)]
        return [[self.V[r][c] for c in perm] for r in perm]

    def lower_left_is_zero(self) -> bool:
        """True when every block below the diagonal of ``triangular()`` vanishes."""
        offs = self.offsets()
        for x, bx in enumerate(self.order):
            for by in self.order[:x]:
                for r in range(self.blocks[bx].size):
                    for c in range(self.blocks[by].size):
                        if self.V[offs[bx] + r][offs[by] + c]:
                            return False
        return True


def _block_sides(block: Block, g: SeifertGraph) -> dict[int, str]:
    """Side ('left'/'right') of each of the block's circles the block lies on."""
    out: dict[int, str] = {}
    for eid in block.edges:
        e = g.edges[eid]
        for w in (e.u, e.v):
            side = e.side_of(w)
            if out.setdefault(w, side) != side:
                raise ConsistencyError(
                    f"block {block.edges} lies on both sides of circle {w}"
                )
    return out


def block_seifert_matrix(
    d: PlanarDiagram,
    g: SeifertGraph | None = None,
    dec: BlockDecomposition | None = None,
) -> BlockSeifertMatrix:
    """Build every block matrix and the coupling between blocks.

    Two blocks meeting at a cut circle on opposite sides are a Murasugi
    sum there: linking of a right-side curve with the pushoff of a
    left-side curve vanishes, so ``V[left][right] = 0`` and the transpose
    entry equals the intersection number.  Curves in blocks that share no
    circle, or sit on the same side of it, are disjoint on the surface and
    link trivially.
    """
    if g is None:
        g = build_seifert_graph(d)
    if dec is None:
        dec = block_decompose(g)
    blocks = tuple(seifert_matrix_block(b, g) for b in dec.blocks)
    owner: list[int] = []
    cycles: list[tuple[Step, ...]] = []
    for k, bm in enumerate(blocks):
        owner.extend([k] * bm.size)
        cycles.extend(bm.basis.cycles)
    n = len(cycles)
    v = [[0] * n for _ in range(n)]
    offs = 0
    for bm in blocks:
        for r in range(bm.size):
            v[offs + r][offs : offs + bm.size] = bm.V[r]
        offs += bm.size

    sides = [_block_sides(b, g) for b in dec.blocks]
    before: dict[int, set[int]] = {k: set() for k in range(len(blocks))}
    j = intersection_form(cycles, g) if n else []
    for r in range(n):
        for c in range(n):
            p, q = owner[r], owner[c]
            if p == q or j[r][c] == 0:
                continue
            shared = set(sides[p]) & set(sides[q])
            if len(shared) != 1:
                raise ConsistencyError(f"curves {r}, {c} meet without a shared cut circle")
            (w,) = shared
            if sides[p][w] == sides[q][w]:
                raise ConsistencyError(
                    f"curves {r}, {c} cross at circle {w} from the same side"
                )
            if sides[p][w] == "right":
                v[r][c] = j[r][c]
                before[p].add(q)
    return BlockSeifertMatrix(blocks=blocks, V=v, order=_topo_order(before))


def _topo_order(after: dict[int, set[int]]) -> tuple[int, ...]:
    """Order blocks so each comes before the blocks in ``after[k]``.

    ``after[p]`` holds blocks whose columns are nonzero in rows of ``p``;
    putting ``p`` first keeps them above the diagonal.  Ties go to the
    smaller block index.
    """
    import heapq

    indeg = {k: 0 for k in after}
    for k, succ in after.items():
        for q in succ:
            indeg[q] += 1
    heap = [k for k, x in indeg.items() if x == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        k = heapq.heappop(heap)
        out.append(k)
        for q in sorted(after[k]):
            indeg[q] -= 1
            if indeg[q] == 0:
                heapq.heappush(heap, q)
    if len(out) != len(after):
        raise ConsistencyError("block coupling has a cycle; no triangular order")
    return tuple(out)


def int_det(m: Sequence[Sequence[int]]) -> int:
    return kernels.int_det([list(r) for r in m])


def int_rank(m: Sequence[Sequence[int]]) -> int:
    return kernels.int_rank([list(r) for r in m])


def is_invertible(v) -> tuple[bool, list[int]]:
    """Invertibility of a block-triangular matrix from its diagonal blocks.

    Accepts a :class:`BlockSeifertMatrix` or any iterable of square integer
    matrices.  Returns the verdict and each block determinant.
    """
    dets = [int_det(b) for b in v]
    return all(x != 0 for x in dets), dets


def definiteness(s: Sequence[Sequence[int]]) -> str:
    """Classify a symmetric integer matrix by its leading principal minors.

    Returns one of ``positive-definite``, ``negative-definite``,
    ``indefinite`` or ``degenerate`` (zero determinant).  The empty matrix
    is degenerate by convention of having no directions to be definite on.
    """
    n = len(s)
    if n == 0 or int_det(s) == 0:
        return "degenerate"
    minors = [int_det([row[:k] for row in s[:k]]) for k in range(1, n + 1)]
    if all(x > 0 for x in minors):
        return "positive-definite"
    if all((x < 0) if k % 2 == 0 else (x > 0) for k, x in enumerate(minors)):
        return "negative-definite"
    return "indefinite"


def signature(s: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix, by exact congruence diagonalisation."""
    from fractions import Fraction

    a = [[Fraction(x) for x in row] for row in s]
    n = len(a)
    total = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if off is None:
                break
            i, j = off
            # add row/col j to row/col i; the new diagonal entry is 2 a_ij
            for r in range(n):
                a[i][r] += a[j][r]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        a[k], a[piv] = a[piv], a[k]
        for row in a:
            row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        total += 1 if p > 0 else -1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for r in range(k, n):
                    a[i][r] -= f * a[k][r]
        for i in range(k + 1, n):
            a[k][i] = 0
            a[i][k] = 0
        k += 1
    return total
