"""Per-diagram invariant reports and mechanical theorem checks.

Verdict ids name what is checked:

``alternating-genus``
    alternating knot diagram: breadth equals twice the Seifert-surface genus
``homogeneous-genus``
    every Seifert block has uniform sign: same equality
``definite-blocks``
    a uniform-sign block has definite symmetrised form of the block's sign,
    and an invertible Seifert matrix
``block-invertibility``
    breadth equals the first Betti number iff every block matrix is
    invertible
``breadth-invertible`` / ``breadth-singular``
    random invertible matrices give full breadth, singular ones do not
``breadth-bound``
    breadth never exceeds twice the Seifert-surface genus
``genus-gap``
    half the breadth is strictly below a cited genus value

A verdict is ``not-applicable`` exactly when its hypothesis fails, and the
failed hypothesis is named in ``details``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .diagram import PlanarDiagram, is_alternating, writhe
from .errors import OracleMismatchError
from .laurent import (
    LaurentPoly,
    alexander_from_blocks,
    breadth,
    det_poly_matrix,
    normalize,
    seifert_pencil,
)
from .seifert import betti_first, block_decompose, build_seifert_graph
from .seifert_matrix import (
    BlockSeifertMatrix,
    block_seifert_matrix,
    definiteness,
    int_det,
    signature,
)
from .wirtinger import alexander_via_fox

__all__ = [
    "BlockReport",
    "InvariantReport",
    "TheoremVerdict",
    "analyze",
    "check_genus_equality",
    "check_definite_blocks",
    "check_block_invertibility",
    "check_breadth_bound",
    "check_genus_gap",
    "check_breadth_inv",
    "verdicts_for",
    "PASS",
    "FAIL",
    "NOT_APPLICABLE",
]

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "not-applicable"


@dataclass(frozen=True)
class BlockReport:
    edges: tuple[int, ...]
    size: int
    uniform_sign: int | None
    det: int
    definiteness: str

    def to_json(self) -> dict:
        return {
            "edges": list(self.edges),
            "size": self.size,
            "uniform_sign": self.uniform_sign,
            "det": self.det,
            "definiteness": self.definiteness,
        }


@dataclass(frozen=True)
class InvariantReport:
    name: str
    crossings: int
    circles: int
    components: int
    betti: int
    genus_F: int | None
    writhe: int
    alternating: bool
    homogeneous: bool
    special: bool
    blocks: tuple[BlockReport, ...]
    alexander: LaurentPoly
    signature: int
    matrix: BlockSeifertMatrix | None = field(default=None, compare=False, repr=False)

    @property
    def breadth(self) -> int | None:
        return None if self.alexander.is_zero() else breadth(self.alexander)

    @property
    def genus_lower(self) -> float | None:
        b = self.breadth
        return None if b is None else b / 2

    @property
    def genus_upper(self) -> int | None:
        return self.genus_F

    @property
    def genus_determined(self) -> bool:
        return self.genus_F is not None and self.breadth == 2 * self.genus_F

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "crossings": self.crossings,
            "circles": self.circles,
            "components": self.components,
            "betti": self.betti,
            "genus_F": self.genus_F,
            "writhe": self.writhe,
            "alternating": self.alternating,
            "homogeneous": self.homogeneous,
            "special": self.special,
            "blocks": [b.to_json() for b in self.blocks],
            "alexander": str(self.alexander),
            "breadth": self.breadth,
            "signature": self.signature,
            "genus_lower": self.genus_lower,
            "genus_upper": self.genus_upper,
            "genus_determined": self.genus_determined,
        }


@dataclass(frozen=True)
class TheoremVerdict:
    diagram: str
    theorem: str
    status: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram,
            "theorem": self.theorem,
            "status": self.status,
            "details": self.details,
        }


def analyze(d: PlanarDiagram) -> InvariantReport:
    """Every invariant of one diagram, with the Alexander polynomial cross-checked.

    For a knot the block polynomial must agree with the Fox-calculus oracle
    up to units; disagreement raises :class:`OracleMismatchError`.  Links are
    not cross-checked and carry no genus.
    """
    g = build_seifert_graph(d)
    dec = block_decompose(g)
    bsm = block_seifert_matrix(d, g, dec)
    raw = alexander_from_blocks(bsm)
    if d.is_knot():
        fox = alexander_via_fox(d)
        if raw.is_zero() or normalize(raw) != fox:
            raise OracleMismatchError(d.name, raw, fox)
        alex = fox
    else:
        alex = normalize(raw) if not raw.is_zero() else raw
    betti = betti_first(g)
    blocks = tuple(
        BlockReport(
            edges=bm.block.edges,
            size=bm.size,
            uniform_sign=bm.block.uniform_sign,
            det=int_det(bm.V),
            definiteness=definiteness(bm.S),
        )
        for bm in bsm.blocks
    )
    sym = [[a + b for a, b in zip(row, col)] for row, col in zip(bsm.V, zip(*bsm.V))]
    return InvariantReport(
        name=d.name,
        crossings=d.crossing_count,
        circles=len(g.vertices),
        components=d.component_count,
        betti=betti,
        genus_F=betti // 2 if d.is_knot() else None,
        writhe=writhe(d),
        alternating=is_alternating(d),
        homogeneous=all(b.uniform_sign is not None for b in dec.blocks),
        special=len(dec.blocks) <= 1,
        blocks=blocks,
        alexander=alex,
        signature=signature(sym),
        matrix=bsm,
    )


def _genus_equality(r: InvariantReport, theorem: str, hypothesis: bool, name: str) -> TheoremVerdict:
    if not hypothesis:
        return TheoremVerdict(r.name, theorem, NOT_APPLICABLE, {"failed_hypothesis": name})
    if r.genus_F is None:
        return TheoremVerdict(
            r.name, theorem, NOT_APPLICABLE, {"failed_hypothesis": "knot (single component)"}
        )
    details = {"breadth": r.breadth, "genus_F": r.genus_F}
    bad_blocks = [b.edges for b in r.blocks if b.size and b.det == 0]
    if bad_blocks:
        details["singular_blocks"] = [list(e) for e in bad_blocks]
    ok = r.breadth == 2 * r.genus_F and not bad_blocks
    return TheoremVerdict(r.name, theorem, PASS if ok else FAIL, details)


def check_genus_equality(r: InvariantReport) -> list[TheoremVerdict]:
    """Genus equality for alternating and for homogeneous diagrams.

    Returns two verdicts, ``alternating-genus`` and ``homogeneous-genus``.
    Both also require every nonempty block matrix to be invertible.
    """
    return [
        _genus_equality(r, "alternating-genus", r.alternating, "alternating diagram"),
        _genus_equality(
            r, "homogeneous-genus", r.homogeneous, "homogeneous diagram (uniform-sign blocks)"
        ),
    ]


def check_definite_blocks(r: InvariantReport) -> TheoremVerdict:
    relevant = [b for b in r.blocks if b.uniform_sign is not None and b.size > 0]
    if not relevant:
        return TheoremVerdict(
            r.name, "definite-blocks", NOT_APPLICABLE,
            {"failed_hypothesis": "a uniform-sign block with a cycle"},
        )
    want = {1: "positive-definite", -1: "negative-definite"}
    bad = [
        {"edges": list(b.edges), "sign": b.uniform_sign,
         "definiteness": b.definiteness, "det": b.det}
        for b in relevant
        if b.definiteness != want[b.uniform_sign] or b.det == 0
    ]
    return TheoremVerdict(
        r.name, "definite-blocks", FAIL if bad else PASS,
        {"blocks_checked": len(relevant), **({"counterexamples": bad} if bad else {})},
    )


def _pencil_breadth(v: Sequence[Sequence[int]]) -> int | None:
    f = det_poly_matrix(seifert_pencil(v))
    return None if f.is_zero() else breadth(f)


def check_block_invertibility(
    d: PlanarDiagram | InvariantReport | None = None,
    matrices: Sequence[Sequence[Sequence[int]]] | None = None,
    name: str = "",
) -> TheoremVerdict:
    """Full breadth iff every Murasugi factor has an invertible Seifert matrix.

    Pass a diagram (or its report) or, with ``matrices``, an explicit list
    of factor matrices assembled block-diagonally.  The zero polynomial
    counts as breadth below the size.
    """
    if matrices is not None:
        mats = [list(map(list, m)) for m in matrices]
        size = sum(len(m) for m in mats)
        full = [[0] * size for _ in range(size)]
        k = 0
        for m in mats:
            for i, row in enumerate(m):
                full[k + i][k : k + len(m)] = row
            k += len(m)
        dets = [int_det(m) for m in mats]
        br = _pencil_breadth(full)
        label = name or "matrices"
    else:
        r = d if isinstance(d, InvariantReport) else analyze(d)
        dets = [b.det for b in r.blocks if b.size]
        br, size, label = r.breadth, r.betti, r.name
    full_breadth = br is not None and br == size
    invertible = all(x != 0 for x in dets)
    return TheoremVerdict(
        label, "block-invertibility", PASS if full_breadth == invertible else FAIL,
        {"breadth": br, "size": size, "block_dets": dets,
         "full_breadth": full_breadth, "all_invertible": invertible},
    )


def check_breadth_bound(r: InvariantReport) -> TheoremVerdict:
    if r.genus_F is None:
        return TheoremVerdict(
            r.name, "breadth-bound", NOT_APPLICABLE, {"failed_hypothesis": "knot (single component)"}
        )
    ok = r.breadth is not None and r.breadth <= 2 * r.genus_F
    return TheoremVerdict(
        r.name, "breadth-bound", PASS if ok else FAIL, {"breadth": r.breadth, "genus_F": r.genus_F}
    )


def check_genus_gap(r: InvariantReport, cited_genus: int | None) -> TheoremVerdict:
    if cited_genus is None:
        return TheoremVerdict(
            r.name, "genus-gap", NOT_APPLICABLE, {"failed_hypothesis": "cited genus annotation"}
        )
    ok = r.breadth is not None and r.breadth < 2 * cited_genus
    return TheoremVerdict(
        r.name, "genus-gap", PASS if ok else FAIL,
        {"breadth": r.breadth, "genus_cited": cited_genus, "genus_F": r.genus_F},
    )


def verdicts_for(r: InvariantReport, cited_genus: int | None = None) -> list[TheoremVerdict]:
    out = check_genus_equality(r)
    out.append(check_definite_blocks(r))
    out.append(check_block_invertibility(r))
    out.append(check_breadth_bound(r))
    out.append(check_genus_gap(r, cited_genus))
    return out


def _random_matrix(rng: random.Random, n: int) -> list[list[int]]:
    return [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]


def _random_singular(rng: random.Random, n: int) -> list[list[int]]:
    m = _random_matrix(rng, n)
    target = rng.randrange(n)
    weights = [rng.randint(-2, 2) if i != target else 0 for i in range(n)]
    m[target] = [sum(w * m[i][c] for i, w in enumerate(weights)) for c in range(n)]
    return m


def check_breadth_inv(
    trials: int, seed: int, singular_trials: int | None = None
) -> list[TheoremVerdict]:
    """Random-matrix check that breadth detects invertibility.

    ``trials`` invertible samples must give breadth equal to the size, and
    ``singular_trials`` (default ``max(1, 2 * trials // 5)``) singular ones
    must not.  Sizes cycle through 2, 4, 6, 8.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if singular_trials is None:
        singular_trials = max(1, 2 * trials // 5)
    rng = random.Random(seed)
    sizes = (2, 4, 6, 8)

    bad_inv = []
    for k in range(trials):
        n = sizes[k % len(sizes)]
        while True:
            v = _random_matrix(rng, n)
            if int_det(v) != 0:
                break
        br = _pencil_breadth(v)
        if br != n:
            bad_inv.append({"V": v, "breadth": br})

    bad_sing = []
    zero_count = 0
    for k in range(singular_trials):
        n = sizes[k % len(sizes)]
        v = _random_singular(rng, n)
        if int_det(v) != 0:
            raise AssertionError("constructed matrix is not singular")
        br = _pencil_breadth(v)
        if br is None:
            zero_count += 1
        elif br >= n:
            bad_sing.append({"V": v, "breadth": br})

    return [
        TheoremVerdict(
            "random", "breadth-invertible", FAIL if bad_inv else PASS,
            {"seed": seed, "samples": trials, **({"counterexamples": bad_inv[:5]} if bad_inv else {})},
        ),
        TheoremVerdict(
            "random", "breadth-singular", FAIL if bad_sing else PASS,
            {"seed": seed, "samples": singular_trials, "zero_polynomial": zero_count,
             **({"counterexamples": bad_sing[:5]} if bad_sing else {})},
        ),
    ]
