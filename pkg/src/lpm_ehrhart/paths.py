"""Cell-level NE paths and admissible Delannoy paths through a skew shape.

Paths run from the lower-left cell to the upper-right cell through cell
centres.  Steps are ``N`` (up a row), ``E`` (right a column) and ``D`` (both at
once).  A diagonal step crosses the corner shared by four cells and is
admissible exactly when that whole 2x2 box lies in the shape; N and E steps
between two cells of the shape are always admissible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .posets import RibbonShape
from .shapes import Cell, ShapeError, SkewShape, connected

_MOVES = {"N": (-1, 0), "D": (-1, 1), "E": (0, 1)}
STEP_ORDER = "NDE"


def _step(a: Cell, b: Cell) -> str:
    delta = (b[0] - a[0], b[1] - a[1])
    for name, d in _MOVES.items():
        if d == delta:
            return name
    raise ValueError(f"{a} -> {b} is not an N, E or D step")


def diagonal_box(a: Cell) -> tuple[Cell, Cell, Cell, Cell]:
    """The four cells around the corner crossed by a diagonal step out of ``a``."""
    i, j = a
    return ((i, j), (i - 1, j), (i, j + 1), (i - 1, j + 1))


@dataclass(frozen=True, eq=False)
class DelannoyPath:
    cells: tuple[Cell, ...]

    def __post_init__(self):
        cells = tuple(tuple(c) for c in self.cells)
        if not cells:
            raise ValueError("empty path")
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "word", "".join(_step(a, b) for a, b in zip(cells, cells[1:])))

    @classmethod
    def from_word(cls, start: Cell, word: str):
        cells = [start]
        for ch in word:
            di, dj = _MOVES[ch]
            cells.append((cells[-1][0] + di, cells[-1][1] + dj))
        return cls(tuple(cells))

    # NE paths compare equal to the diagonal-free Delannoy path on the same cells
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DelannoyPath):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    @property
    def diagonals(self) -> int:
        return self.word.count("D")

    @property
    def sign(self) -> int:
        return -1 if self.diagonals % 2 else 1

    def is_ne(self) -> bool:
        return "D" not in self.word

    def to_json(self) -> dict:
        return {"word": self.word, "cells": [list(c) for c in self.cells]}

    def __str__(self) -> str:
        return self.word or "."


class NEPath(DelannoyPath):
    """A Delannoy path without diagonal steps."""

    def __post_init__(self):
        super().__post_init__()
        if "D" in self.word:
            raise ValueError("NE path may not contain diagonal steps")


def is_admissible(d: DelannoyPath, s: SkewShape) -> bool:
    if d.cells[0] != s.start_cell or d.cells[-1] != s.end_cell:
        return False
    if not all(c in s for c in d.cells):
        return False
    return all(
        all(b in s for b in diagonal_box(a))
        for a, ch in zip(d.cells, d.word)
        if ch == "D"
    )


def _require_connected(s: SkewShape) -> None:
    if not connected(s):
        raise ShapeError(f"shape {s} is not connected")


def _walk(s: SkewShape, steps: str) -> Iterator[str]:
    end = s.end_cell
    word: list[str] = []

    def rec(cell: Cell) -> Iterator[str]:
        if cell == end:
            yield "".join(word)
            return
        for ch in steps:
            di, dj = _MOVES[ch]
            nxt = (cell[0] + di, cell[1] + dj)
            if nxt not in s:
                continue
            if ch == "D" and not all(b in s for b in diagonal_box(cell)):
                continue
            word.append(ch)
            yield from rec(nxt)
            word.pop()

    yield from rec(s.start_cell)


def enumerate_ne_paths(s: SkewShape) -> list[NEPath]:
    """NE paths in lexicographic order of their step words (N < E)."""
    _require_connected(s)
    return [NEPath.from_word(s.start_cell, w) for w in _walk(s, "NE")]


def enumerate_delannoy(s: SkewShape) -> list[DelannoyPath]:
    """Admissible Delannoy paths in lexicographic order (N < D < E)."""
    _require_connected(s)
    return [DelannoyPath.from_word(s.start_cell, w) for w in _walk(s, STEP_ORDER)]


def gamma_min(s: SkewShape) -> NEPath:
    """The east-greedy NE path; row i holds columns nu_i < j <= lambda_i."""
    _require_connected(s)
    ell = s.rows
    nu = [s.lam[i + 1] - 1 for i in range(ell - 1)] + [s.mu[-1]]
    cells = []
    for i in range(ell, 0, -1):
        cells.extend((i, j) for j in range(nu[i - 1] + 1, s.lam[i - 1] + 1))
    return NEPath(tuple(cells))


def peaks(p: DelannoyPath) -> frozenset[Cell]:
    """Cells entered by an N step and left by an E step."""
    return frozenset(
        p.cells[k]
        for k in range(1, len(p.cells) - 1)
        if p.word[k - 1] == "N" and p.word[k] == "E"
    )


def high_peaks(p: NEPath, s: SkewShape) -> frozenset[Cell]:
    """Peaks whose south-east diagonal neighbour lies in the shape."""
    return frozenset(c for c in peaks(p) if (c[0] + 1, c[1] + 1) in s)


def high_peaks_by_min(p: NEPath, s: SkewShape) -> frozenset[Cell]:
    """Peaks of ``p`` that are not peaks of the minimum path."""
    return peaks(p) - peaks(gamma_min(s))


@dataclass(frozen=True)
class MarkedPath:
    path: NEPath
    marks: frozenset[Cell]

    def __post_init__(self):
        marks = frozenset(tuple(c) for c in self.marks)
        object.__setattr__(self, "marks", marks)
        stray = marks - peaks(self.path)
        if stray:
            raise ValueError(f"marks {sorted(stray)} are not peaks of the path")


def insert_diagonals(m: MarkedPath, s: SkewShape) -> DelannoyPath:
    """Fuse each marked high peak's N/E pair into a single diagonal step."""
    stray = m.marks - high_peaks(m.path, s)
    if stray:
        raise ValueError(f"marks {sorted(stray)} are not high peaks")
    return DelannoyPath(tuple(c for c in m.path.cells if c not in m.marks))


def extract_marks(d: DelannoyPath) -> MarkedPath:
    """Inverse of :func:`insert_diagonals`: split each diagonal through its peak cell."""
    cells: list[Cell] = [d.cells[0]]
    marks = []
    for a, b, ch in zip(d.cells, d.cells[1:], d.word):
        if ch == "D":
            peak = (a[0] - 1, a[1])
            cells.append(peak)
            marks.append(peak)
        cells.append(b)
    return MarkedPath(NEPath(tuple(cells)), frozenset(marks))


def marked_paths(p: NEPath, s: SkewShape) -> Iterator[MarkedPath]:
    hp = sorted(high_peaks(p, s))
    for r in range(len(hp) + 1):
        for subset in combinations(hp, r):
            yield MarkedPath(p, frozenset(subset))


def ribbon_of(d: DelannoyPath) -> RibbonShape:
    """Cells of the path, cut into components at each diagonal step."""
    comps: list[list[Cell]] = [[d.cells[0]]]
    for b, ch in zip(d.cells[1:], d.word):
        if ch == "D":
            comps.append([b])
        else:
            comps[-1].append(b)
    return RibbonShape(tuple(tuple(c) for c in comps))


def ribbon_of_path(p: DelannoyPath | Iterable[Cell]) -> RibbonShape:
    cells = p.cells if isinstance(p, DelannoyPath) else p
    return RibbonShape.from_cells(cells)
