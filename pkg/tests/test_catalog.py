import pytest

from clusterkit.catalog import (
    CLASS_NAMES, catalan_series, class_gf, hexagon_fc_gf, three_hexagon_avoiding_gf,
)
from clusterkit.genfun import RationalGF, Series, lattice_path_gf_avoiding, series_of_ratfun
from clusterkit.reference import (
    DIAMOND_AVOIDING_SERIES, FIGURE_ROWS, FIGURE_SIZES, PEAK_FREE_DIAMOND_GF, RECURRENCES,
    TABLE_RATIONAL, TABLE_ROWS, TABLE_SERIES, figure_value, table_algebraic, table_rational,
)


@pytest.mark.parametrize("name", TABLE_ROWS)
def test_derived_rows_match_printed_series(name):
    assert class_gf(name, 7).series.integers() == list(TABLE_SERIES[name])


@pytest.mark.parametrize("name", sorted(TABLE_RATIONAL))
def test_derived_rational_rows_equal_printed(name):
    assert class_gf(name).rational == table_rational(name)


@pytest.mark.parametrize("name", ["fc", "L", "M", "fb", "mc"])
def test_printed_closed_forms_expand_to_printed_series(name):
    assert table_algebraic(name, 7).integers() == list(TABLE_SERIES[name])
    assert table_algebraic(name, 20).agrees_with(class_gf(name, 20).series)


def test_literal_L_form_has_a_pole():
    with pytest.raises(ValueError):
        table_algebraic("L", 7, literal=True)


def test_display_signs():
    assert class_gf("mc-hexagon").display() == \
        "(3x^5+x^4-5x^3+7x^2-5x+1)/(-3x^6+4x^5+8x^4-14x^3+15x^2-7x+1)"
    fc = class_gf("fc-hexagon").display()
    assert fc == "(-x^5+x^4+3x^3-4x^2+4x-1)/(x^6-4x^5-4x^4+9x^3-11x^2+6x-1)"
    assert class_gf("fb-hexagon").display() == \
        "(-x^6-2x^5+2x^4+x^3-3x^2+4x-1)/(x^7-x^6-8x^5+x^4+3x^3-9x^2+6x-1)"
    assert class_gf("diamond-avoiding").display() == "(-x+1)/(x^2-3x+1)"
    assert class_gf("fc").display() is None


@pytest.mark.parametrize("name", sorted(RECURRENCES))
def test_recurrences(name):
    coeffs, _ = RECURRENCES[name]
    rec = class_gf(name).recurrence
    assert [int(c) for c in rec.coefficients] == list(coeffs)
    terms = rec.size_indexed(15)
    assert [int(terms[n]) for n in FIGURE_SIZES] == list(FIGURE_ROWS[name])


def test_figure_rows_extend_table_rows():
    for name, row in FIGURE_ROWS.items():
        assert list(row[:6]) == list(TABLE_SERIES[name][2:])
        assert class_gf(name, 14).series.integers()[2:] == list(row)
    assert figure_value("mc-hexagon", 9) == 17872


def test_small_classes():
    assert class_gf("diamond-avoiding", 10).series.integers() == list(DIAMOND_AVOIDING_SERIES)
    assert class_gf("peak-free-diamond").rational == RationalGF(*PEAK_FREE_DIAMOND_GF)
    # the reduced class is peak-free paths: x/(1-x)^2
    assert lattice_path_gf_avoiding("UD") == RationalGF([0, 1], [1, -2, 1])
    assert three_hexagon_avoiding_gf() == RationalGF([1, -2, 1, -1, -1], [1, -4, 4, -3, -1, 1])
    assert class_gf("3-hexagon-avoiding", 8).series.integers() == [1, 2, 5, 14, 42, 128, 389, 1179, 3572]
    assert class_gf("fc-hexagon").rational == hexagon_fc_gf()


def test_catalan():
    assert catalan_series(9).integers() == [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_every_name_resolves():
    for name in CLASS_NAMES:
        g = class_gf(name, 6)
        assert g.series.order == 6 and g.description
    with pytest.raises(KeyError):
        class_gf("nope")
