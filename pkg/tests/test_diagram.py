from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import all_knot_entries, diagrams
from knotgenus.diagram import (
    PlanarDiagram,
    braid_closure,
    crossing_sign,
    is_alternating,
    mirror,
    parse_pd_line,
    serialize_pd,
    writhe,
)
from knotgenus.errors import PDSyntaxError, PDValidationError

TREFOIL = "trefoil PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
MIRROR_TREFOIL = "mirror PD: X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"

KNOTS = [e.diagram() for e in all_knot_entries()]
LINKS = diagrams("links.pd")


def test_trefoil_parses_as_one_component():
    d = parse_pd_line(TREFOIL)
    assert d.name == "trefoil"
    assert d.crossing_count == 3
    assert d.component_count == 1


def test_unknot():
    d = parse_pd_line("unknot PD:")
    assert d.crossing_count == 0
    assert d.component_count == 1
    assert writhe(d) == 0
    assert is_alternating(d)


def test_sign_calibration():
    d = parse_pd_line(TREFOIL)
    assert [crossing_sign(d, i) for i in range(3)] == [1, 1, 1]
    assert writhe(d) == 3
    m = parse_pd_line(MIRROR_TREFOIL)
    assert [crossing_sign(m, i) for i in range(3)] == [-1, -1, -1]


@pytest.mark.parametrize(
    "line, invariant",
    [
        ("bad PD: X(1,1,2,3)", "distinct-arcs"),
        ("bad PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)", "arc-range"),
        ("bad PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,2)", "distinct-arcs"),
        ("bad PD: X(1,4,2,5) X(3,6,4,1) X(6,2,5,3)", "arc-successor"),
        ("bad PD: X(1,4,2,6) X(3,5,4,1) X(5,2,6,3)", "arc-successor"),
    ],
)
def test_validation_errors(line, invariant):
    with pytest.raises(PDValidationError) as info:
        parse_pd_line(line)
    assert info.value.invariant == invariant


def test_arc_must_occur_twice():
    with pytest.raises(PDValidationError) as info:
        PlanarDiagram.from_codes([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 1)])
    assert info.value.invariant == "arc-twice"


def test_disconnected_rejected():
    # two separate Hopf-like pieces cannot be written with 1..2c labels that
    # pass the other checks, so use two copies of a valid 2-crossing link
    hopf = braid_closure([1, 1]).tuples()
    shifted = [tuple(x + 4 for x in code) for code in hopf]
    with pytest.raises(PDValidationError) as info:
        PlanarDiagram.from_codes(hopf + shifted)
    assert info.value.invariant == "connected"


@pytest.mark.parametrize(
    "line, column",
    [
        ("no header here", 1),
        ("k PD: X(1,2,3)", 7),
        ("k PD: X(1,4,2,5) junk", 18),
    ],
)
def test_syntax_errors_report_columns(line, column):
    with pytest.raises(PDSyntaxError) as info:
        parse_pd_line(line)
    assert info.value.column == column


def test_alternation_examples():
    assert is_alternating(parse_pd_line(TREFOIL))
    assert not is_alternating(braid_closure([1, 2] * 4))


@pytest.mark.parametrize("d", KNOTS + LINKS, ids=lambda d: d.name)
def test_serialize_round_trip(d):
    again = parse_pd_line(serialize_pd(d))
    assert again == d
    assert again.over_in == d.over_in
    assert again.components == d.components


@pytest.mark.parametrize("d", KNOTS + LINKS, ids=lambda d: d.name)
def test_mirror_negates_signs(d):
    m = mirror(d)
    assert [crossing_sign(m, i) for i in range(d.crossing_count)] == [
        -crossing_sign(d, i) for i in range(d.crossing_count)
    ]
    assert is_alternating(m) == is_alternating(d)
    assert mirror(m) == d


def _relabel(d: PlanarDiagram, shift: int) -> PlanarDiagram:
    n = d.arc_count
    return PlanarDiagram.from_codes(
        [tuple((a - 1 + shift) % n + 1 for a in code) for code in d.tuples()], name=d.name
    )


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([d for d in KNOTS if d.crossing_count]), st.integers(0, 40))
def test_sign_invariant_under_cyclic_relabel(d, shift):
    r = _relabel(d, shift % d.arc_count)
    assert [crossing_sign(r, i) for i in range(d.crossing_count)] == [
        crossing_sign(d, i) for i in range(d.crossing_count)
    ]


braid_words = st.integers(2, 4).flatmap(
    lambda n: st.lists(
        st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g])), min_size=2, max_size=12
    )
)


@settings(max_examples=100, deadline=None)
@given(braid_words)
def test_braid_closure_signs(word):
    try:
        d = braid_closure(word, name="b")
    except PDValidationError:
        return
    assert writhe(d) == sum(1 if g > 0 else -1 for g in word)
    assert parse_pd_line(serialize_pd(d)) == d


def test_braid_closure_components():
    assert braid_closure([1, 1]).component_count == 2
    assert braid_closure([1, -2] * 3).component_count == 3
    assert braid_closure([1, 1, 1]).is_knot()
