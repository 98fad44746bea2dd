"""Ehrhart polynomials of lattice path matroid base polytopes.

Four independent routes are provided:

* ``ehr_oracle`` counts lattice points of dilates and interpolates.  The base
  polytope is described only by its prefix-sum inequalities
  ``t*|s(L) & [m]| <= x_1 + ... + x_m <= t*|s(U) & [m]|`` with
  ``0 <= x_j <= t`` and total ``t*k``.  The constraint matrix has the
  consecutive-ones property, hence is totally unimodular, so the system cuts
  out an integral polytope whose 0/1 points are exactly the bases.
* ``ehr_signed`` sums snake polynomials over admissible Delannoy paths with
  sign ``(-1)^diagonals``.
* ``ehr_grouped`` groups that sum by underlying NE path (marked high peaks).
* ``ehr_positive`` replaces each group with a sum of order polynomials over
  order filters, every summand having nonnegative coefficients.

Only the Ehrhart polynomial is wired up here, but the snake-subdivision
identities hold for any valuative invariant; a different invariant would plug
in where ``ehr_snake`` is called.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

from .algebra import ZERO, Polynomial, coeffwise_leq, has_nonnegative_coeffs, interpolate
from .paths import (
    DelannoyPath,
    MarkedPath,
    NEPath,
    enumerate_delannoy,
    enumerate_ne_paths,
    gamma_min,
    high_peaks,
    insert_diagonals,
    ribbon_of,
    ribbon_of_path,
)
from .posets import (
    FencePoset,
    RibbonShape,
    enumerate_filters,
    ideal_generated_by,
    order_polynomial,
    pp_polynomial,
    remove_filter,
)
from .shapes import LatticePathPair, ShapeError, SkewShape, connected, rectangle, shape_to_paths


class PositivityError(ArithmeticError):
    """A summand of the positive formula had a negative coefficient."""


def lattice_points(p: LatticePathPair, t: int) -> int:
    """Number of integer points in the ``t``-th dilate of the base polytope."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    bounds = p.prefix_bounds()
    ways = {0: 1}
    for lo, hi in bounds:
        lo, hi = lo * t, hi * t
        nxt: dict[int, int] = {}
        for total, w in ways.items():
            for x in range(max(0, lo - total), min(t, hi - total) + 1):
                nxt[total + x] = nxt.get(total + x, 0) + w
        ways = nxt
    return ways.get(p.k * t, 0)


def _require_connected(s: SkewShape) -> None:
    if not connected(s):
        raise ShapeError(f"shape {s} is not connected")


def ehr_oracle(s: SkewShape) -> Polynomial:
    _require_connected(s)
    p = shape_to_paths(s)
    return interpolate([(t, lattice_points(p, t)) for t in range(p.n)])


def ehr_snake(d: DelannoyPath) -> Polynomial:
    return pp_polynomial(ribbon_of(d))


def ehr_signed(s: SkewShape) -> Polynomial:
    _require_connected(s)
    total = ZERO
    for d in enumerate_delannoy(s):
        total = total + ehr_snake(d) * d.sign
    return total


def ehr_pm(gamma: NEPath, s: SkewShape) -> Polynomial:
    """Signed sum over subsets of high peaks turned into diagonals."""
    hp = sorted(high_peaks(gamma, s))
    total = ZERO
    for r in range(len(hp) + 1):
        for subset in combinations(hp, r):
            d = insert_diagonals(MarkedPath(gamma, frozenset(subset)), s)
            total = total + ehr_snake(d) * (-1) ** r
    return total


def positive_strips(gamma: NEPath, s: SkewShape) -> list[tuple[frozenset, RibbonShape]]:
    """Filters ``F`` avoiding the ideal of the high peaks, with ``gamma \\ F``."""
    ribbon = ribbon_of_path(gamma)
    poset = FencePoset(ribbon)
    blocked = ideal_generated_by(poset, high_peaks(gamma, s))
    allowed = ribbon.cells - blocked
    return [(F, remove_filter(ribbon, F)) for F in enumerate_filters(poset, allowed)]


def ehr_pm_filters(gamma: NEPath, s: SkewShape) -> Polynomial:
    total = ZERO
    for _, strip in positive_strips(gamma, s):
        total = total + order_polynomial(strip)
    return total


def ehr_grouped(s: SkewShape) -> Polynomial:
    _require_connected(s)
    total = ZERO
    for gamma in enumerate_ne_paths(s):
        total = total + ehr_pm(gamma, s)
    return total


@dataclass
class Witness:
    path: NEPath
    high_peaks: frozenset
    strips: list[RibbonShape]
    ehr_pm: Polynomial
    is_min: bool = False

    @property
    def filter_count(self) -> int:
        return len(self.strips)

    def to_json(self) -> dict:
        return {
            "path": self.path.word,
            "is_min": self.is_min,
            "high_peaks": [list(c) for c in sorted(self.high_peaks)],
            "filter_count": self.filter_count,
            "strips": [r.signature() for r in self.strips],
            "ehr_pm": self.ehr_pm.coeff_strings(),
        }


@dataclass
class EhrhartReport:
    shape: SkewShape
    by_oracle: Polynomial
    by_signed: Polynomial
    by_grouped: Polynomial
    by_positive: Polynomial
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.by_oracle == self.by_signed == self.by_grouped == self.by_positive

    @property
    def positive(self) -> bool:
        p = self.by_positive
        return not p.is_zero() and all(c > 0 for c in p.coeffs) and p.coeff(0) == 1

    def polynomials(self) -> dict[str, Polynomial]:
        return {
            "oracle": self.by_oracle,
            "signed": self.by_signed,
            "grouped": self.by_grouped,
            "positive": self.by_positive,
        }

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "literal": str(self.shape),
            "by_oracle": self.by_oracle.coeff_strings(),
            "by_signed": self.by_signed.coeff_strings(),
            "by_grouped": self.by_grouped.coeff_strings(),
            "by_positive": self.by_positive.coeff_strings(),
            "agree": self.agree,
            "positive": self.positive,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def positive_decomposition(s: SkewShape) -> tuple[Polynomial, list[Witness]]:
    """The positive formula and its per-path breakdown."""
    _require_connected(s)
    g_min = gamma_min(s)
    total = ZERO
    witnesses = []
    for gamma in enumerate_ne_paths(s):
        if gamma == g_min:
            strips = [ribbon_of_path(gamma)]
            term = order_polynomial(strips[0]).shift(1)
            summands = [term]
        else:
            strips = [strip for _, strip in positive_strips(gamma, s)]
            summands = [order_polynomial(strip) for strip in strips]
            term = sum(summands, ZERO)
        for q in summands:
            if not has_nonnegative_coeffs(q):
                raise PositivityError(f"negative coefficient in summand {q} for path {gamma.word}")
        witnesses.append(Witness(gamma, high_peaks(gamma, s), strips, term, gamma == g_min))
        total = total + term
    return total, witnesses


def ehr_positive(s: SkewShape) -> EhrhartReport:
    by_positive, witnesses = positive_decomposition(s)
    return EhrhartReport(
        shape=s,
        by_oracle=ehr_oracle(s),
        by_signed=ehr_signed(s),
        by_grouped=ehr_grouped(s),
        by_positive=by_positive,
        witnesses=witnesses,
    )


def same_box(a: SkewShape, b: SkewShape) -> bool:
    return a.rows == b.rows and a.width == b.width and a.mu[-1] == b.mu[-1]


def compare_shapes(inner: SkewShape, outer: SkewShape) -> bool:
    """Coefficient-wise comparison of the Ehrhart polynomials of nested shapes."""
    if not same_box(inner, outer):
        raise ShapeError(f"{inner} and {outer} do not fill a common bounding box")
    if not outer.contains_shape(inner):
        raise ShapeError(f"{inner} is not contained in {outer}")
    _require_connected(inner)
    _require_connected(outer)
    a, _ = positive_decomposition(inner)
    b, _ = positive_decomposition(outer)
    return coeffwise_leq(a, b)


def uniform_decomposition(k: int, n: int) -> list[tuple[str, list[Polynomial]]]:
    """Per-path summands of the hypersimplex formula, minimum path first.

    Each non-minimal path contributes ``Omega(gamma(i, j); t)`` where
    ``gamma(i, j)`` drops ``i`` of its initial east cells and ``j`` of its
    final north cells.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    width = n - k
    n_east, n_north = width - 1, k - 1
    start = (k, 1)
    g_min = "E" * n_east + "N" * n_north
    out = [(g_min, [order_polynomial(_ribbon_from_word(start, g_min)).shift(1)])]
    for north_pos in combinations(range(n_east + n_north), n_north):
        word = "".join("N" if i in north_pos else "E" for i in range(n_east + n_north))
        if word == g_min:
            continue
        lead_e = len(word) - len(word.lstrip("E"))
        tail_n = len(word) - len(word.rstrip("N"))
        cells = _ribbon_from_word(start, word).components[0]
        terms = [
            order_polynomial(RibbonShape((cells[i:len(cells) - j],)))
            for i in range(lead_e + 1)
            for j in range(tail_n + 1)
        ]
        out.append((word, terms))
    return out


def _ribbon_from_word(start, word: str) -> RibbonShape:
    cells = [start]
    for ch in word:
        i, j = cells[-1]
        cells.append((i - 1, j) if ch == "N" else (i, j + 1))
    return RibbonShape((tuple(cells),))


def ehr_uniform(k: int, n: int) -> Polynomial:
    total = ZERO
    for _, terms in uniform_decomposition(k, n):
        total = total + sum(terms, ZERO)
    return total


def hypersimplex(k: int, n: int) -> SkewShape:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    return rectangle(k, n - k)


def normalized_leading(p: Polynomial) -> Fraction:
    """``deg! * leading coefficient`` (the normalized volume)."""
    return p.leading * factorial(p.degree)


__all__ = [
    "EhrhartReport",
    "PositivityError",
    "Witness",
    "compare_shapes",
    "ehr_grouped",
    "ehr_oracle",
    "ehr_pm",
    "ehr_pm_filters",
    "ehr_positive",
    "ehr_signed",
    "ehr_snake",
    "ehr_uniform",
    "hypersimplex",
    "lattice_points",
    "normalized_leading",
    "positive_decomposition",
    "positive_strips",
    "uniform_decomposition",
]
