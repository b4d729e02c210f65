"""Fixture files: PD lines with optional ``@ key=value`` annotations, and matrix files."""

from __future__ import annotations

import json
import shlex
from dataclasses import dataclass, field
from typing import Iterator

from .diagram import PlanarDiagram, parse_pd_line

__all__ = [
    "FixtureEntry",
    "FixtureError",
    "MatrixEntry",
    "read_fixture_lines",
    "load_fixture",
    "read_matrix_lines",
    "load_matrices",
]


@dataclass(frozen=True)
class FixtureEntry:
    line_no: int
    name: str
    pd_line: str
    annotations: dict = field(default_factory=dict)

    def diagram(self) -> PlanarDiagram:
        return parse_pd_line(self.pd_line)

    @property
    def genus_cited(self) -> int | None:
        g = self.annotations.get("genus_cited")
        return None if g is None else int(g)

    @property
    def source(self) -> str | None:
        return self.annotations.get("source")


@dataclass(frozen=True)
class FixtureError:
    line_no: int
    text: str
    error: str

    def to_json(self) -> dict:
        return {"line": self.line_no, "error": self.error, "text": self.text}


@dataclass(frozen=True)
class MatrixEntry:
    line_no: int
    name: str
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError(f"{self.name}: matrix is not square")


def _split_annotations(line: str) -> tuple[str, dict]:
    if "@" not in line:
        return line.rstrip(), {}
    body, _, tail = line.partition("@")
    notes = {}
    for tok in shlex.split(tail):
        key, eq, value = tok.partition("=")
        if not eq or not key:
            raise ValueError(f"annotation {tok!r} is not key=value")
        notes[key] = value
    return body.rstrip(), notes


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def read_fixture_lines(text: str) -> Iterator[FixtureEntry | FixtureError]:
    """Entries in file order; a bad line yields a :class:`FixtureError` and reading goes on.

    Only the header and annotation syntax is checked here; PD validation
    happens when :meth:`FixtureEntry.diagram` is called.
    """
    for no, line in _content_lines(text):
        try:
            body, notes = _split_annotations(line)
        except ValueError as exc:
            yield FixtureError(no, line, str(exc))
            continue
        name, sep, _ = body.partition(" PD:")
        if not sep or not name.strip():
            yield FixtureError(no, line, "expected 'NAME PD:' header")
            continue
        yield FixtureEntry(no, name.strip(), body, notes)


def load_fixture(path) -> list[FixtureEntry | FixtureError]:
    with open(path, encoding="utf-8") as fh:
        return list(read_fixture_lines(fh.read()))


def read_matrix_lines(text: str) -> Iterator[MatrixEntry | FixtureError]:
    for no, line in _content_lines(text):
        name, sep, rest = line.partition(":")
        try:
            if not sep:
                raise ValueError("expected 'NAME: [[...]]'")
            rows = json.loads(rest)
            if not isinstance(rows, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows
            ):
                raise ValueError("matrix must be a list of integer rows")
            yield MatrixEntry(no, name.strip(), tuple(tuple(r) for r in rows))
        except ValueError as exc:
            yield FixtureError(no, line, str(exc))


def load_matrices(path) -> list[MatrixEntry | FixtureError]:
    with open(path, encoding="utf-8") as fh:
        return list(read_matrix_lines(fh.read()))
