"""Fixture loading shared by the test modules."""

from __future__ import annotations

from pathlib import Path

from knotgenus.fixtures import FixtureEntry, load_fixture

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def entries(name: str) -> list[FixtureEntry]:
    out = load_fixture(FIXTURES / name)
    bad = [e for e in out if not isinstance(e, FixtureEntry)]
    assert not bad, bad
    return out


def diagrams(name: str):
    return [e.diagram() for e in entries(name)]


KNOT_FIXTURES = (
    "basic.pd",
    "knots_upto9.pd",
    "alternating_3to8.pd",
    "eleven_crossing.pd",
    "homogeneous.pd",
)


def all_knot_entries() -> list[FixtureEntry]:
    return [e for f in KNOT_FIXTURES for e in entries(f)]
