"""Desk-scale certification sweep over small skew shapes."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .algebra import Polynomial, coeffwise_leq
from .ehrhart import ehr_pm, ehr_pm_filters, ehr_positive
from .paths import (
    enumerate_delannoy,
    enumerate_ne_paths,
    extract_marks,
    gamma_min,
    high_peaks,
    high_peaks_by_min,
    insert_diagonals,
    marked_paths,
    ribbon_of,
)
from .posets import RibbonShape, pp_count, pp_count_columns
from .shapes import SkewShape, enumerate_bases, rectangle, shape_to_paths

log = logging.getLogger(__name__)


def _partitions(max_part: int, length: int, min_part: int = 1):
    """Weakly decreasing tuples of exactly ``length`` parts in ``[min_part, max_part]``."""
    if length == 0:
        yield ()
        return
    for first in range(max_part, min_part - 1, -1):
        for rest in _partitions(first, length - 1, min_part):
            yield (first,) + rest


def sweep_shapes(max_rows: int, max_cols: int) -> list[SkewShape]:
    """Connected skew shapes filling an ``r x c`` box with ``r <= max_rows``, ``c <= max_cols``.

    Only shapes without empty columns are listed (``mu`` ends in 0 and
    ``lambda_1`` is the box width), so every shape is a loopless, coloopless
    connected matroid.
    """
    out = []
    for rows in range(1, max_rows + 1):
        for lam in _partitions(max_cols, rows):
            for mu_head in _partitions(max_cols, rows - 1, min_part=0):
                mu = mu_head + (0,)
                if any(m >= l for m, l in zip(mu, lam)):
                    continue
                if any(mu[i] >= lam[i + 1] for i in range(rows - 1)):
                    continue
                out.append(SkewShape(lam, mu))
    return sorted(out, key=lambda s: (s.rows, s.width, s.num_cells, s.lam, s.mu))


def rectangles_up_to(n_max: int) -> list[SkewShape]:
    return [rectangle(k, n - k) for n in range(2, n_max + 1) for k in range(1, n)]


@dataclass
class ShapeCheck:
    shape: SkewShape
    polynomial: Polynomial
    checks: dict[str, bool] = field(default_factory=dict)
    ribbons: dict[str, RibbonShape] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL " + ",".join(self.failures)
        return f"{str(self.shape):<14} n={self.shape.size:<2} {self.polynomial}  {status}"


def check_shape(s: SkewShape) -> ShapeCheck:
    """Run every per-shape check; never raises on a failed check.

    The ribbons met along the way are returned for the plane-partition
    cross-check, which :func:`run_verify` runs once per distinct ribbon.
    """
    report = ehr_positive(s)
    poly = report.by_positive
    n = s.size
    c: dict[str, bool] = {}
    c["four_way_agreement"] = report.agree
    c["positive_coefficients"] = all(x > 0 for x in poly.coeffs)
    c["constant_term_one"] = poly.coeff(0) == 1
    c["degree_n_minus_1"] = poly.degree == n - 1
    c["value_at_1_is_basis_count"] = poly(1) == len(enumerate_bases(shape_to_paths(s)))

    ne = enumerate_ne_paths(s)
    dels = enumerate_delannoy(s)
    g_min = gamma_min(s)
    c["gamma_min_is_east_greedy"] = bool(ne) and ne[-1] == g_min and not high_peaks(g_min, s)
    c["high_peak_criteria_agree"] = all(high_peaks(p, s) == high_peaks_by_min(p, s) for p in ne)
    c["delannoy_count_identity"] = len(dels) == sum(2 ** len(high_peaks(p, s)) for p in ne)

    images = []
    forward = True
    for p in ne:
        for m in marked_paths(p, s):
            d = insert_diagonals(m, s)
            images.append(d)
            forward &= extract_marks(d) == m
    c["bijection_marked_to_delannoy"] = forward and sorted(images, key=str) == sorted(dels, key=str)
    c["bijection_delannoy_to_marked"] = all(insert_diagonals(extract_marks(d), s) == d for d in dels)
    c["ribbon_components"] = all(len(ribbon_of(d).components) == d.diagonals + 1 for d in dels)

    c["per_path_filter_form"] = all(
        ehr_pm(p, s) == ehr_pm_filters(p, s) for p in ne if p != g_min
    )
    c["rotation_invariance"] = ehr_positive(s.rotate()).by_positive == poly

    ribbons = {ribbon_of(d).signature(): ribbon_of(d) for d in dels}
    for w in report.witnesses:
        for strip in w.strips:
            ribbons.setdefault(strip.signature(), strip)
    return ShapeCheck(s, poly, c, ribbons)


def check_pp_oracles(ribbons: dict[str, RibbonShape], max_t: int) -> list[str]:
    """Signatures whose fence DP and column-profile counts disagree for some ``t <= max_t``."""
    return [
        sig
        for sig, r in sorted(ribbons.items())
        if any(pp_count(r, t) != pp_count_columns(r.cells, t) for t in range(max_t + 1))
    ]


def nested_pairs(shapes: list[SkewShape]) -> list[tuple[SkewShape, SkewShape]]:
    """Pairs ``inner != outer`` with ``inner`` contained in ``outer`` in the same box."""
    by_box: dict[tuple[int, int], list[SkewShape]] = {}
    for s in shapes:
        by_box.setdefault((s.rows, s.width), []).append(s)
    out = []
    for group in by_box.values():
        for a, b in combinations(group, 2):
            if b.contains_shape(a):
                out.append((a, b))
            elif a.contains_shape(b):
                out.append((b, a))
    return out


@dataclass
class VerifyResult:
    results: list[ShapeCheck]
    nested: list[tuple[SkewShape, SkewShape, bool]]
    pp_checked: int = 0
    pp_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            all(r.ok for r in self.results)
            and all(ok for _, _, ok in self.nested)
            and not self.pp_failures
        )

    def failures(self) -> list[str]:
        out = [f"{r.shape}: {name}" for r in self.results for name in r.failures]
        out += [f"{a} <= {b}: monotonicity" for a, b, ok in self.nested if not ok]
        out += [f"ribbon {sig}: pp_two_oracles" for sig in self.pp_failures]
        return out


def run_verify(
    max_rows: int,
    max_cols: int,
    max_t: int = 6,
    jobs: int = 1,
    extra: list[SkewShape] | None = None,
) -> VerifyResult:
    if min(max_rows, max_cols) < 1 or max_t < 0:
        raise ValueError("bounds must be positive")
    shapes = sweep_shapes(max_rows, max_cols)
    seen = set(shapes)
    for s in extra or ():
        if s not in seen:
            shapes.append(s)
            seen.add(s)
    log.info("verifying %d shapes", len(shapes))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_shape, shapes, chunksize=4))
    else:
        results = [check_shape(s) for s in shapes]
    polys = {r.shape: r.polynomial for r in results}
    nested = [(a, b, coeffwise_leq(polys[a], polys[b])) for a, b in nested_pairs(shapes)]
    ribbons: dict[str, RibbonShape] = {}
    for r in results:
        for sig, rib in r.ribbons.items():
            ribbons.setdefault(sig, rib)
    pp_failures = check_pp_oracles(ribbons, max_t)
    return VerifyResult(results, nested, len(ribbons), pp_failures)


def eulerian_bruteforce(m: int, descents: int) -> int:
    """Permutations of ``1..m`` with exactly ``descents`` descents, by enumeration."""
    return sum(
        1
        for perm in permutations(range(m))
        if sum(perm[i] > perm[i + 1] for i in range(m - 1)) == descents
    )


def lattice_points_bruteforce(s: SkewShape, t: int) -> int:
    """Lattice points of the dilated base polytope by scanning ``{0..t}^n``."""
    p = shape_to_paths(s)
    bounds = p.prefix_bounds()
    count = 0
    for x in product(range(t + 1), repeat=p.n):
        total = 0
        for xi, (lo, hi) in zip(x, bounds):
            total += xi
            if not lo * t <= total <= hi * t:
                break
        else:
            count += total == p.k * t
    return count


__all__ = [
    "ShapeCheck",
    "VerifyResult",
    "check_pp_oracles",
    "check_shape",
    "eulerian_bruteforce",
    "lattice_points_bruteforce",
    "nested_pairs",
    "rectangles_up_to",
    "run_verify",
    "sweep_shapes",
]
