"""Skew shapes and the lattice path matroids they encode.

Cells are ``(i, j)`` with rows ``i`` counted from the top and columns ``j``
from the left, both starting at 1 (English notation).  A shape with ``l`` rows
and ``lambda_1`` columns sits in a ``k x (n - k)`` box with ``k = l`` and
``n = l + lambda_1``; its lattice path pair runs from ``(0, 0)`` to
``(n - k, k)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Cell = tuple[int, int]

_LITERAL = re.compile(r"^\s*([0-9,]+)\s*(?:/\s*([0-9,]+)\s*)?$")


class ShapeError(ValueError):
    """Raised for malformed or invalid shapes and path pairs."""


@dataclass(frozen=True)
class SkewShape:
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        mu = tuple(int(x) for x in self.mu)
        if not lam:
            raise ShapeError("lambda must have at least one part")
        if len(mu) > len(lam):
            raise ShapeError(f"mu {mu} is not contained in lambda {lam}")
        mu = mu + (0,) * (len(lam) - len(mu))
        if any(x <= 0 for x in lam):
            raise ShapeError(f"lambda parts must be positive: {lam}")
        if any(x < 0 for x in mu):
            raise ShapeError(f"mu parts must be nonnegative: {mu}")
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ShapeError(f"lambda is not weakly decreasing: {lam}")
        if any(a < b for a, b in zip(mu, mu[1:])):
            raise ShapeError(f"mu is not weakly decreasing: {mu}")
        for i, (a, b) in enumerate(zip(lam, mu), start=1):
            if b > a:
                raise ShapeError(f"mu is not contained in lambda at row {i}")
            if b == a:
                raise ShapeError(f"row {i} of {format_parts(lam)}/{format_parts(mu)} is empty")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def rows(self) -> int:
        return len(self.lam)

    @property
    def width(self) -> int:
        return self.lam[0]

    @property
    def rank(self) -> int:
        return self.rows

    @property
    def size(self) -> int:
        """Ground-set size ``n`` of the encoded matroid."""
        return self.rows + self.width

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i, (a, b) in enumerate(zip(self.lam, self.mu), start=1)
            for j in range(b + 1, a + 1)
        )

    @property
    def num_cells(self) -> int:
        return sum(a - b for a, b in zip(self.lam, self.mu))

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= self.rows and self.mu[i - 1] < j <= self.lam[i - 1]

    @property
    def start_cell(self) -> Cell:
        """Lower-leftmost cell."""
        return (self.rows, self.mu[-1] + 1)

    @property
    def end_cell(self) -> Cell:
        """Upper-rightmost cell."""
        return (1, self.lam[0])

    def is_connected(self) -> bool:
        return connected(self)

    def rotate(self) -> "SkewShape":
        """Rotate by 180 degrees inside the ``rows x lambda_1`` box."""
        w = self.width
        lam = tuple(w - m for m in reversed(self.mu))
        mu = tuple(w - x for x in reversed(self.lam))
        return SkewShape(lam, mu)

    def contains_shape(self, other: "SkewShape") -> bool:
        return other.cells <= self.cells

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        return cls(tuple(data["lambda"]), tuple(data.get("mu", ())))

    def __str__(self) -> str:
        mu = list(self.mu)
        while mu and mu[-1] == 0:
            mu.pop()
        if not mu:
            return format_parts(self.lam)
        return f"{format_parts(self.lam)}/{format_parts(mu)}"


def format_parts(parts: Iterable[int]) -> str:
    parts = list(parts)
    if any(p > 9 for p in parts):
        return ",".join(str(p) for p in parts)
    return "".join(str(p) for p in parts)


def _parse_parts(text: str) -> tuple[int, ...]:
    if "," in text:
        pieces = [p for p in text.split(",")]
        if pieces and pieces[-1] == "":
            pieces.pop()
        if not pieces or any(p == "" for p in pieces):
            raise ShapeError(f"malformed part list {text!r}")
        return tuple(int(p) for p in pieces)
    return tuple(int(ch) for ch in text)


def parse_shape(text: str) -> SkewShape:
    """Parse ``"433/1"``, ``"5,5,5,3,3/4,3,1"`` or a bare ``lambda``."""
    m = _LITERAL.match(text)
    if not m:
        raise ShapeError(f"malformed shape literal {text!r}")
    lam = _parse_parts(m.group(1))
    mu = _parse_parts(m.group(2)) if m.group(2) is not None else ()
    return SkewShape(lam, mu)


def rectangle(rows: int, cols: int) -> SkewShape:
    return SkewShape((cols,) * rows, ())


def connected(s: SkewShape) -> bool:
    """Consecutive rows share at least one column."""
    return all(s.mu[i] < s.lam[i + 1] for i in range(s.rows - 1))


@dataclass(frozen=True)
class LatticePathPair:
    """Lower and upper lattice paths, given by the positions of their N steps."""

    n: int
    k: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        lower = tuple(sorted(self.lower))
        upper = tuple(sorted(self.upper))
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if not 0 <= self.k <= self.n:
            raise ShapeError(f"rank {self.k} out of range for n={self.n}")
        for name, s in (("lower", lower), ("upper", upper)):
            if len(s) != self.k or len(set(s)) != self.k:
                raise ShapeError(f"{name} path must have {self.k} distinct N steps")
            if s and (s[0] < 1 or s[-1] > self.n):
                raise ShapeError(f"{name} path positions must lie in 1..{self.n}")
        if not lies_below(lower, upper, self.n):
            raise ShapeError("lower path does not lie below upper path")

    def prefix_bounds(self) -> list[tuple[int, int]]:
        """``(|s(L) & [m]|, |s(U) & [m]|)`` for m = 1..n."""
        lo = hi = 0
        lower, upper = set(self.lower), set(self.upper)
        out = []
        for m in range(1, self.n + 1):
            lo += m in lower
            hi += m in upper
            out.append((lo, hi))
        return out

    def reversed(self) -> "LatticePathPair":
        """Relabel the ground set by ``i -> n + 1 - i``."""
        flip = lambda s: tuple(sorted(self.n + 1 - x for x in s))  # noqa: E731
        # reversing a path turns the lower path into the upper one
        return LatticePathPair(self.n, self.k, flip(self.upper), flip(self.lower))


def lies_below(lower: Iterable[int], upper: Iterable[int], n: int) -> bool:
    lower, upper = set(lower), set(upper)
    if len(lower) != len(upper):
        raise ShapeError("paths have different numbers of N steps")
    if (lower and max(lower) > n) or (upper and max(upper) > n):
        raise ShapeError(f"N-step positions exceed n={n}")
    lo = hi = 0
    for m in range(1, n + 1):
        lo += m in lower
        hi += m in upper
        if lo > hi:
            return False
    return True


def shape_to_paths(s: SkewShape) -> LatticePathPair:
    k = s.rows
    # y-th N step (from the bottom) borders row k - y + 1
    upper = [s.mu[k - y] + y for y in range(1, k + 1)]
    lower = [s.lam[k - y] + y for y in range(1, k + 1)]
    return LatticePathPair(s.size, k, tuple(lower), tuple(upper))


def paths_to_shape(p: LatticePathPair) -> SkewShape:
    """Region between the two paths; fails if it has an empty row."""
    k = p.k
    if k == 0:
        raise ShapeError("rank-0 pair has no rows")
    lam = [0] * k
    mu = [0] * k
    for y in range(1, k + 1):
        lam[k - y] = p.lower[y - 1] - y
        mu[k - y] = p.upper[y - 1] - y
    return SkewShape(tuple(lam), tuple(mu))


def enumerate_bases(p: LatticePathPair) -> list[tuple[int, ...]]:
    """All N-step sets of lattice paths between the lower and upper path."""
    bounds = p.prefix_bounds()
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def walk(m: int, count: int) -> None:
        if m == p.n:
            if count == p.k:
                out.append(tuple(chosen))
            return
        lo, hi = bounds[m]
        # step m+1 is N
        if lo <= count + 1 <= hi:
            chosen.append(m + 1)
            walk(m + 1, count + 1)
            chosen.pop()
        if lo <= count <= hi:
            walk(m + 1, count)

    walk(0, 0)
    return sorted(out)
