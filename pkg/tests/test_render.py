"""Tables, serialization round-trips and the two transcript displays."""

import json

import pytest

import golden
from sgp.core_semigroup import Semigroup
from sgp.render import (
    CSV_HEADER,
    cell_class,
    monomial_table,
    monomial_table_to_text,
    partition_table,
    table_from_csv,
    table_to_csv,
    table_to_json,
    table_to_text,
    ulf_by_denumerant_report,
    ulf_by_length_report,
)


def test_cell_class_mapping():
    assert cell_class(0, 0) == "zero"
    assert cell_class(1, -1) == "m1"
    assert cell_class(1, 0) == "z1"
    assert cell_class(1, 1) == "p1"
    assert cell_class(2, -2) == "neg_i"
    assert cell_class(2, -1) == "neg_i1"
    assert cell_class(2, 1) == "pos_i1"
    assert cell_class(2, 2) == "pos_i"
    assert cell_class(5, -4) == "neg_i1"
    assert cell_class(5, 5) == "pos_i"


def test_cell_class_rejects_invalid_pairs():
    for iota, c in [(0, 1), (1, 2), (2, 0), (3, 1), (-1, 0)]:
        with pytest.raises(ValueError):
            cell_class(iota, c)


def as_tuples(cells):
    return {key: tuple(entries) for key, entries in cells.items()}


def test_partition_table_figure_a10():
    t = partition_table(10)
    assert t.a == 10 and t.L == 4 and t.D == 3
    assert as_tuples(t.cells) == golden.FIGURE_A10


def test_partition_table_figure_a15():
    t = partition_table(15)
    assert t.a == 15 and t.L == 7 and t.D == 4
    assert as_tuples(t.cells) == golden.FIGURE_A15


def test_csv_round_trip():
    for a in (3, 6, 10, 15, 21):
        t = partition_table(a)
        assert table_from_csv(table_to_csv(t)) == t


def test_csv_layout():
    lines = table_to_csv(partition_table(10)).splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "0,1,0,0,0,zero"
    assert "1,1,10,1,-1,m1" in lines
    assert "4,3,44,0,0,zero" in lines
    # deterministic: rows ordered by (ell, d, r)
    keys = [tuple(map(int, line.split(",")[:3])) for line in lines[1:]]
    assert keys == sorted(keys)


def test_csv_rejects_foreign_header():
    with pytest.raises(ValueError):
        table_from_csv("x,y\n1,2\n")


def test_json_shape():
    doc = json.loads(table_to_json(partition_table(10)))
    by_cell = {(c["ell"], c["d"]): c["triples"] for c in doc}
    assert by_cell[(2, 2)] == [{"r": 22, "iota": 0, "c": 0, "class": "zero"}]
    assert [t["r"] for t in by_cell[(1, 1)]] == [10, 11, 12]


def test_text_rendering_mentions_every_r():
    text = table_to_text(partition_table(10))
    for cell in golden.FIGURE_A10.values():
        for r, iota, c in cell:
            assert "%d %d %d" % (r, iota, c) in text


def test_monomial_table_figure():
    t = monomial_table(15, 7, 4)
    assert as_tuples(t.cells) == golden.MONOMIAL_CELLS


def test_monomial_table_is_a_independent():
    reference = monomial_table(15, 7, 4).cells
    for a in (17, 20, 33):
        assert monomial_table(a, 7, 4).cells == reference


def test_monomial_table_rejects_oversized_grid():
    # a=10 only supports ell <= 4
    with pytest.raises(ValueError):
        monomial_table(10, 7, 4)


def test_monomial_text_contains_bases():
    text = monomial_table_to_text(monomial_table(15, 7, 4))
    assert "x^2z^2,xy^2z,y^4" in text
    assert "1" in text.splitlines()[1]


def test_by_length_display_a10():
    rows = ulf_by_length_report(Semigroup((10, 11, 12)))
    assert [row for _, row in rows] == golden.BY_LENGTH_A10
    assert [l for l, _ in rows] == list(range(11))


def test_by_denumerant_display_a10():
    rows = ulf_by_denumerant_report(Semigroup((10, 11, 12)))
    assert [row for _, row in rows] == golden.BY_DENUMERANT_A10
    assert [d for d, _ in rows] == [1, 2, 3, 4, 5]


def test_by_denumerant_display_a9():
    rows = ulf_by_denumerant_report(Semigroup((9, 10, 11)))
    assert [row for _, row in rows] == golden.BY_DENUMERANT_A9


def test_displays_on_a_two_generator_semigroup():
    rows = ulf_by_length_report(Semigroup((2, 3)))
    assert [row for _, row in rows] == [[0], [2, 3], [4, 5], [7]]
