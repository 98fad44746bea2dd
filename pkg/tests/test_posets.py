from fractions import Fraction
from itertools import chain, combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lpm_ehrhart.algebra import ONE, T, has_nonnegative_coeffs
from lpm_ehrhart.ehrhart import positive_strips
from lpm_ehrhart.paths import enumerate_ne_paths, high_peaks, ribbon_of_path
from lpm_ehrhart.posets import (
    FencePoset,
    RibbonShape,
    enumerate_filters,
    ideal_generated_by,
    order_polynomial,
    pp_count,
    pp_count_columns,
    pp_polynomial,
    remove_filter,
    ribbon_signature,
)
from lpm_ehrhart.shapes import parse_shape
from golden import GAMMA_3_SUMMANDS, GROUPED_TABLE_433_1

S = parse_shape("433/1")
words = st.text(alphabet="NE", max_size=6)


def ribbon(word: str, start=(7, 1)) -> RibbonShape:
    cells = [start]
    for ch in word:
        i, j = cells[-1]
        cells.append((i - 1, j) if ch == "N" else (i, j + 1))
    return RibbonShape((tuple(cells),))


def brute_force_pp(cells, t: int) -> int:
    """Enumerate every filling and check the row/column inequalities directly."""
    cells = sorted(cells)
    count = 0
    for vals in product(range(t + 1), repeat=len(cells)):
        f = dict(zip(cells, vals))
        if all(
            f[(i, j)] >= f.get((i, j + 1), -1) and f[(i, j)] >= f.get((i + 1, j), -1)
            for i, j in cells
        ):
            count += 1
    return count


def brute_force_filters(p: FencePoset):
    elems = sorted(p.elements)
    subsets = chain.from_iterable(combinations(elems, r) for r in range(len(elems) + 1))
    return {frozenset(x) for x in subsets if p.is_filter(x)}


def test_pp_small():
    assert pp_polynomial(RibbonShape(())) == ONE
    assert pp_polynomial(ribbon("")) == T + 1
    assert pp_polynomial(ribbon("E")) == (T + 1) * (T + 2) * Fraction(1, 2)
    assert pp_polynomial(ribbon("N")) == (T + 1) * (T + 2) * Fraction(1, 2)
    assert pp_count(ribbon("EN"), 1) == 5


def test_order_polynomial_of_21():
    # the shape 21 is the fence "NE" read from its lower-left cell
    r = RibbonShape.from_cells(parse_shape("21").cells)
    assert order_polynomial(r) == T * (T + 1) * (2 * T + 1) * Fraction(1, 6)


def test_gamma_min_row_at_shifted_argument():
    gm = GROUPED_TABLE_433_1[0]
    r = RibbonShape.from_cells(gm[1])
    assert order_polynomial(r).shift(1) == gm[3] == pp_polynomial(r)


def test_from_cells_splits_components():
    r = RibbonShape.from_cells({(3, 1), (2, 1), (1, 3), (1, 4)})
    assert r.components == (((3, 1), (2, 1)), ((1, 3), (1, 4)))
    assert ribbon_signature(r) == "E|N"
    assert ribbon_signature(RibbonShape.from_cells({(1, 1), (3, 3)})) == "-|-"


def test_ribbon_rejects_bad_steps():
    with pytest.raises(ValueError):
        RibbonShape((((2, 1), (1, 2)),))


@given(words, st.integers(0, 4))
def test_pp_counters_agree_with_brute_force(word, t):
    r = ribbon(word)
    n = pp_count(r, t)
    assert n == pp_count_columns(r.cells, t)
    if len(r.cells) <= 5:
        assert n == brute_force_pp(r.cells, t)
    assert pp_polynomial(r)(t) == n


@given(words, words, st.integers(0, 4))
def test_multiplicative_over_components(a, b, t):
    r = RibbonShape(ribbon(a, (7, 1)).components + ribbon(b, (20, 20)).components)
    assert pp_count(r, t) == pp_count(ribbon(a), t) * pp_count(ribbon(b), t)
    assert pp_count_columns(r.cells, t) == pp_count(r, t)


@given(words)
def test_order_polynomial_is_shift(word):
    r = ribbon(word)
    assert order_polynomial(r) == pp_polynomial(r).shift(-1)
    assert order_polynomial(r)(0) == 0
    assert has_nonnegative_coeffs(pp_polynomial(r))


@given(words)
def test_filters_match_brute_force(word):
    p = FencePoset(ribbon(word))
    got = enumerate_filters(p)
    assert len(got) == len(set(got))
    assert set(got) == brute_force_filters(p)
    for F in got:
        assert p.is_ideal(p.elements - F)


@given(words)
def test_grouping_identity(word):
    # classifying fillings with entries 1..t+1 by the cells holding t+1
    r = ribbon(word)
    total = sum((order_polynomial(remove_filter(r, F)) for F in enumerate_filters(FencePoset(r))), 0 * T)
    assert total == order_polynomial(r).shift(1)


def test_ideal_generated_by():
    p = FencePoset(ribbon("EN"))
    assert ideal_generated_by(p, []) == frozenset()
    # cells (7,1) -> (7,2) -> (6,2); (7,1) sits above (7,2), (6,2) above (7,2)
    assert ideal_generated_by(p, [(7, 1)]) == {(7, 1), (7, 2)}
    assert ideal_generated_by(p, [(6, 2)]) == {(6, 2), (7, 2)}
    with pytest.raises(ValueError):
        ideal_generated_by(p, [(1, 1)])


def test_enumerate_filters_empty_region():
    p = FencePoset(ribbon("ENE"))
    assert enumerate_filters(p, frozenset()) == [frozenset()]


def test_remove_filter_errors():
    r = ribbon("EN")
    with pytest.raises(ValueError):
        remove_filter(r, {(7, 2)})
    with pytest.raises(ValueError):
        remove_filter(r, {(1, 1)})
    assert remove_filter(r, {(6, 2)}).cells == {(7, 1), (7, 2)}


def test_gamma_5_ideal_covers_the_path():
    # both high peaks of gamma_5 generate an ideal containing every cell, so
    # the only admissible filter is the empty one
    gamma = next(p for p in enumerate_ne_paths(S) if frozenset(p.cells) == GROUPED_TABLE_433_1[4][1])
    r = ribbon_of_path(gamma)
    ideal = ideal_generated_by(FencePoset(r), high_peaks(gamma, S))
    assert ideal == r.cells
    assert enumerate_filters(FencePoset(r), r.cells - ideal) == [frozenset()]


def test_gamma_3_strips():
    gamma = next(p for p in enumerate_ne_paths(S) if frozenset(p.cells) == GROUPED_TABLE_433_1[2][1])
    strips = positive_strips(gamma, S)
    assert sorted(len(strip.cells) for _, strip in strips) == [4, 5, 6]
    assert sorted(map(str, (order_polynomial(strip) for _, strip in strips))) == sorted(
        map(str, GAMMA_3_SUMMANDS)
    )
