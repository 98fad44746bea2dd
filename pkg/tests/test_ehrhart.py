from collections import Counter

import pytest

from lpm_ehrhart.algebra import T, coeffwise_leq
from lpm_ehrhart.ehrhart import (
    compare_shapes,
    ehr_grouped,
    ehr_oracle,
    ehr_pm,
    ehr_pm_filters,
    ehr_positive,
    ehr_signed,
    ehr_uniform,
    hypersimplex,
    lattice_points,
    normalized_leading,
    positive_decomposition,
    uniform_decomposition,
)
from lpm_ehrhart.paths import enumerate_delannoy, enumerate_ne_paths, gamma_min, ribbon_of
from lpm_ehrhart.posets import pp_polynomial
from lpm_ehrhart.shapes import ShapeError, parse_shape, rectangle, shape_to_paths
from lpm_ehrhart.verify import eulerian_bruteforce, lattice_points_bruteforce, sweep_shapes
from golden import GROUPED_TABLE_433_1, TOTAL_433_1, U24, U36, U36_GROUPS

S = parse_shape("433/1")


@pytest.mark.parametrize("s", sweep_shapes(2, 3) + [parse_shape("32/1"), parse_shape("222")], ids=str)
@pytest.mark.parametrize("t", [0, 1, 2])
def test_lattice_points_against_scan(s, t):
    assert lattice_points(shape_to_paths(s), t) == lattice_points_bruteforce(s, t)


def test_lattice_points_small():
    p = shape_to_paths(parse_shape("22"))
    assert [lattice_points(p, t) for t in range(4)] == [1, 6, 19, 44]
    with pytest.raises(ValueError):
        lattice_points(p, -1)


def test_single_cell():
    s = parse_shape("1")
    for method in (ehr_oracle, ehr_signed, ehr_grouped):
        assert method(s) == T + 1
    assert positive_decomposition(s)[0] == T + 1


def test_all_methods_433_1():
    assert ehr_oracle(S) == TOTAL_433_1
    assert ehr_signed(S) == TOTAL_433_1
    assert ehr_grouped(S) == TOTAL_433_1
    report = ehr_positive(S)
    assert report.by_positive == TOTAL_433_1
    assert report.agree and report.positive
    assert TOTAL_433_1(1) == 29


def test_grouped_rows_433_1():
    by_cells = {frozenset(g.cells): g for g in enumerate_ne_paths(S)}
    g_min = gamma_min(S)
    for _, cells, _, poly, _ in GROUPED_TABLE_433_1:
        g = by_cells[cells]
        assert ehr_pm(g, S) == poly
        if g != g_min:
            assert ehr_pm_filters(g, S) == poly


def test_witness_filter_counts_433_1():
    _, witnesses = positive_decomposition(S)
    by_cells = {frozenset(w.path.cells): w for w in witnesses}
    counts = [by_cells[cells].filter_count for _, cells, _, _, _ in GROUPED_TABLE_433_1]
    assert counts == [1, 6, 3, 2, 1]
    assert [w.is_min for w in witnesses].count(True) == 1


def test_ten_element_shape_agrees():
    s = parse_shape("55533/431")
    report = ehr_positive(s)
    assert report.agree and report.positive
    assert report.by_oracle.degree == shape_to_paths(s).n - 1


RIBBONS = [s for s in sweep_shapes(4, 4) if s.num_cells == s.rows + s.width - 1]


@pytest.mark.parametrize("s", RIBBONS, ids=str)
def test_snake_identity(s):
    # a ribbon has a single path, through every cell, and its plane-partition
    # polynomial is the Ehrhart polynomial of the snake matroid
    (d,) = enumerate_delannoy(s)
    assert ehr_oracle(s) == pp_polynomial(ribbon_of(d))


def test_disconnected_rejected():
    for method in (ehr_oracle, ehr_signed, ehr_grouped):
        with pytest.raises(ShapeError):
            method(parse_shape("21/1"))


def test_compare_shapes():
    assert compare_shapes(parse_shape("22/1"), parse_shape("22"))
    assert compare_shapes(S, parse_shape("433"))
    assert compare_shapes(S, S)


def test_compare_shapes_errors():
    with pytest.raises(ShapeError):
        compare_shapes(parse_shape("22"), parse_shape("22/1"))
    with pytest.raises(ShapeError):
        compare_shapes(parse_shape("22"), parse_shape("333"))
    with pytest.raises(ShapeError):
        compare_shapes(parse_shape("21/1"), parse_shape("22"))


def test_ehr_uniform_examples():
    assert ehr_uniform(2, 4) == U24
    assert ehr_uniform(3, 6) == U36
    assert ehr_uniform(1, 2) == T + 1
    totals = [sum(terms, 0 * T) for _, terms in uniform_decomposition(3, 6)]
    assert Counter(map(str, totals)) == Counter(map(str, U36_GROUPS))
    assert totals[0] == U36_GROUPS[0]


@pytest.mark.parametrize("k, n", [(0, 3), (3, 3), (4, 3)])
def test_ehr_uniform_errors(k, n):
    with pytest.raises(ValueError):
        ehr_uniform(k, n)
    with pytest.raises(ValueError):
        hypersimplex(k, n)


@pytest.mark.parametrize("k, n", [(k, n) for n in range(2, 7) for k in range(1, n)])
def test_uniform_matches_rectangle(k, n):
    assert ehr_uniform(k, n) == ehr_oracle(rectangle(k, n - k)) == ehr_oracle(hypersimplex(k, n))


def test_normalized_leading():
    assert normalized_leading(U24) == 4 == eulerian_bruteforce(3, 1)
    assert normalized_leading(U36) == 66 == eulerian_bruteforce(5, 2)


def test_coeffwise_monotone_example():
    a = ehr_oracle(parse_shape("22/1"))
    b = ehr_oracle(parse_shape("22"))
    assert coeffwise_leq(a, b) and a != b
