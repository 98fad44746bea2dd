"""Ribbons viewed as fence posets, and their bounded plane partitions.

A plane partition of a ribbon is a filling that weakly decreases to the right
along rows and downward along columns.  The matching partial order puts a
cell above its right neighbour and above the cell beneath it, so the cells
holding the largest entry always form an order filter.

``PP(r; t)`` counts fillings with entries in ``0..t`` and the order polynomial
is ``Omega(r; t) = PP(r; t - 1)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import accumulate, combinations_with_replacement
from typing import Iterable

from .algebra import ONE, Polynomial, interpolate
from .shapes import Cell


def _step(a: Cell, b: Cell) -> str | None:
    if b == (a[0] - 1, a[1]):
        return "N"
    if b == (a[0], a[1] + 1):
        return "E"
    return None


@dataclass(frozen=True)
class RibbonShape:
    """A possibly disconnected border strip, as ordered connected components."""

    components: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(tuple(c) for c in comp) for comp in self.components if comp)
        for comp in comps:
            for a, b in zip(comp, comp[1:]):
                if _step(a, b) is None:
                    raise ValueError(f"cells {a} and {b} are not joined by an N or E step")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "RibbonShape":
        """Split a set of ribbon cells into components in path order."""
        ordered = sorted(set(cells), key=lambda c: (-c[0], c[1]))
        comps: list[list[Cell]] = []
        for c in ordered:
            if comps and _step(comps[-1][-1], c) is not None:
                comps[-1].append(c)
            else:
                comps.append([c])
        return cls(tuple(tuple(comp) for comp in comps))

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(c for comp in self.components for c in comp)

    @property
    def num_cells(self) -> int:
        return sum(len(comp) for comp in self.components)

    def __len__(self) -> int:
        return self.num_cells

    def words(self) -> list[str]:
        return [component_word(comp) for comp in self.components]

    def signature(self) -> str:
        return ribbon_signature(self)

    def to_json(self) -> dict:
        return {
            "components": [[list(c) for c in comp] for comp in self.components],
            "signature": self.signature(),
        }


def component_word(comp: tuple[Cell, ...]) -> str:
    return "".join(_step(a, b) for a, b in zip(comp, comp[1:]))


def ribbon_signature(r: RibbonShape) -> str:
    """Canonical cache key: sorted turn words, ``-`` for a single cell."""
    return "|".join(sorted(w or "-" for w in r.words()))


@dataclass(frozen=True)
class FencePoset:
    """Cover relations of a ribbon's cells; ``upper[c]`` are the covers above ``c``."""

    ribbon: RibbonShape

    @cached_property
    def upper(self) -> dict[Cell, tuple[Cell, ...]]:
        up: dict[Cell, list[Cell]] = {c: [] for c in self.ribbon.cells}
        for a, b in self._covers:
            up[a].append(b)
        return {c: tuple(v) for c, v in up.items()}

    @cached_property
    def lower(self) -> dict[Cell, tuple[Cell, ...]]:
        down: dict[Cell, list[Cell]] = {c: [] for c in self.ribbon.cells}
        for a, b in self._covers:
            down[b].append(a)
        return {c: tuple(v) for c, v in down.items()}

    @cached_property
    def _covers(self) -> list[tuple[Cell, Cell]]:
        """Pairs ``(smaller, larger)``."""
        out = []
        for comp in self.ribbon.components:
            for a, b in zip(comp, comp[1:]):
                # east: a is left of b so a >= b; north: b sits above a so b >= a
                out.append((b, a) if _step(a, b) == "E" else (a, b))
        return out

    @property
    def elements(self) -> frozenset[Cell]:
        return self.ribbon.cells

    def is_filter(self, cells: Iterable[Cell]) -> bool:
        cells = set(cells)
        return all(u in cells for c in cells for u in self.upper[c])

    def is_ideal(self, cells: Iterable[Cell]) -> bool:
        cells = set(cells)
        return all(d in cells for c in cells for d in self.lower[c])


def ideal_generated_by(p: FencePoset, gens: Iterable[Cell]) -> frozenset[Cell]:
    gens = set(gens)
    if not gens <= p.elements:
        raise ValueError("generators are not elements of the poset")
    seen = set(gens)
    stack = list(gens)
    while stack:
        c = stack.pop()
        for d in p.lower[c]:
            if d not in seen:
                seen.add(d)
                stack.append(d)
    return frozenset(seen)


def enumerate_filters(p: FencePoset, allowed: Iterable[Cell] | None = None) -> list[frozenset[Cell]]:
    """All order filters of ``p`` contained in ``allowed`` (default: everything)."""
    allowed = p.elements if allowed is None else frozenset(allowed)
    order = [c for comp in p.ribbon.components for c in comp]
    out: list[frozenset[Cell]] = []
    chosen: list[Cell] = []
    inside: set[Cell] = set()
    position = {c: i for i, c in enumerate(order)}

    # covers only join consecutive cells of a component, so each choice is
    # checked against the already-decided neighbours
    def ok(c: Cell, take: bool) -> bool:
        decided = lambda x: x in position and position[x] < position[c]  # noqa: E731
        for u in p.upper[c]:
            if decided(u) and take and u not in inside:
                return False
        for d in p.lower[c]:
            if decided(d) and not take and d in inside:
                return False
        return True

    def walk(idx: int) -> None:
        if idx == len(order):
            out.append(frozenset(chosen))
            return
        c = order[idx]
        if ok(c, False):
            walk(idx + 1)
        if c in allowed and ok(c, True):
            chosen.append(c)
            inside.add(c)
            walk(idx + 1)
            inside.discard(c)
            chosen.pop()

    walk(0)
    return out


def remove_filter(r: RibbonShape, F: Iterable[Cell]) -> RibbonShape:
    F = frozenset(F)
    poset = FencePoset(r)
    if not F <= r.cells:
        raise ValueError("filter contains cells outside the ribbon")
    if not poset.is_filter(F):
        raise ValueError("cell set is not upward closed")
    return RibbonShape.from_cells(r.cells - F)


def _fence_count(word: str, t: int) -> int:
    """Fillings of one fence component with entries ``0..t``."""
    counts = [1] * (t + 1)
    for step in word:
        prefix = list(accumulate(counts))
        if step == "E":
            # next value <= current
            counts = [prefix[t] - (prefix[v - 1] if v else 0) for v in range(t + 1)]
        else:
            # next value >= current
            counts = prefix
    return sum(counts)


def pp_count(r: RibbonShape, t: int) -> int:
    """Plane partitions of ``r`` with entries ``0..t`` by a transfer DP per fence."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    total = 1
    for w in r.words():
        total *= _fence_count(w, t)
    return total


def pp_count_columns(cells: Iterable[Cell], t: int) -> int:
    """Independent count of fillings by sweeping column profiles left to right.

    Works for any cell set, constraining only horizontally or vertically
    adjacent cells.
    """
    cols: dict[int, list[int]] = defaultdict(list)
    for i, j in cells:
        cols[j].append(i)
    # states: profile of the previous column (row -> value) with multiplicity
    states: dict[tuple[tuple[int, int], ...], int] = {(): 1}
    prev_col = None
    for j in sorted(cols):
        rows = sorted(cols[j])
        runs = _contiguous_runs(rows)
        new_states: dict[tuple[tuple[int, int], ...], int] = defaultdict(int)
        for prof, mult in states.items():
            left = dict(prof) if prev_col == j - 1 else {}
            for fill in _column_fillings(runs, t):
                if all(left[i] >= v for i, v in fill.items() if i in left):
                    new_states[tuple(sorted(fill.items()))] += mult
        states = new_states
        prev_col = j
    return sum(states.values())


def _contiguous_runs(rows: list[int]) -> list[list[int]]:
    runs: list[list[int]] = []
    for i in rows:
        if runs and runs[-1][-1] == i - 1:
            runs[-1].append(i)
        else:
            runs.append([i])
    return runs


def _column_fillings(runs: list[list[int]], t: int):
    def rec(idx: int, acc: dict[int, int]):
        if idx == len(runs):
            yield dict(acc)
            return
        run = runs[idx]
        # weakly decreasing downward == nondecreasing sequence read bottom-up
        for vals in combinations_with_replacement(range(t + 1), len(run)):
            for i, v in zip(reversed(run), vals):
                acc[i] = v
            yield from rec(idx + 1, acc)
        for i in run:
            acc.pop(i, None)

    yield from rec(0, {})


@lru_cache(maxsize=None)
def _fence_polynomial(word: str) -> Polynomial:
    size = len(word) + 1
    return interpolate([(t, _fence_count(word, t)) for t in range(size + 1)])


def pp_polynomial(r: RibbonShape) -> Polynomial:
    """The polynomial ``t -> PP(r; t)`` (memoized per fence component)."""
    out = ONE
    for w in r.words():
        out = out * _fence_polynomial(w)
    return out


@lru_cache(maxsize=None)
def _fence_order_polynomial(word: str) -> Polynomial:
    return _fence_polynomial(word).shift(-1)


def order_polynomial(r: RibbonShape) -> Polynomial:
    """``Omega(r; t) = PP(r; t - 1)``; the empty ribbon gives 1."""
    out = ONE
    for w in r.words():
        out = out * _fence_order_polynomial(w)
    return out
