from fractions import Fraction

import pytest

from cocharlab.published import (PatternNotCovered, PublishedValue, json_number, published_bound,
                                 published_character, published_component_gamma, published_gamma,
                                 published_multiplicity, published_value)


def values(found):
    return [p.value for p in found]


def test_single_rules():
    assert values(published_multiplicity(4, (3, 2))) == [6]
    assert values(published_multiplicity(5, (3, 2))) == [10]
    assert values(published_value(4, (3, 2))) == [6]


def test_overlapping_two_row_rules():
    found = published_multiplicity(5, (6, 3))
    assert values(found) == [168, Fraction(343, 2)]
    assert {p.source for p in found} == {"UT5 two-row table"}
    assert published_character(5, 9).conflicts[(6, 3)] == found


def test_gamma_forms():
    assert values(published_gamma(2, 6)) == [5]
    assert values(published_gamma(3, 3)) == [5]
    assert values(published_gamma(4, 5)) == [174]
    assert values(published_gamma(5, 4)) == [171, 183]
    assert values(published_gamma(5, 5)) == [819, 879]
    assert values(published_value(5, 4)) == [171, 183]


def test_gamma_forms_share_n3():
    assert values(published_gamma(5, 3)) == [41, 41]


def test_component_gamma():
    assert values(published_component_gamma(3, (2, 1, 0))) == [1]
    assert values(published_component_gamma(4, (3, 2, 0, 0))) == [16]
    with pytest.raises(PatternNotCovered):
        published_component_gamma(3, (1, 2, 0))


def test_uncovered():
    with pytest.raises(PatternNotCovered):
        published_multiplicity(4, (1, 1))
    with pytest.raises(PatternNotCovered):
        published_value(5, (2, 1))
    with pytest.raises(PatternNotCovered):
        published_gamma(6, 3)
    with pytest.raises(PatternNotCovered):
        published_gamma(5, 2)
    with pytest.raises(PatternNotCovered):
        published_bound(5, 4)


def test_character_tables_are_complete():
    # absent shapes are printed zeros, not gaps
    assert values(published_multiplicity(3, (3,))) == [0]
    assert published_character(3, 3).values == {(2, 1): 2, (1, 1, 1): 1}
    assert published_character(2, 4).values == {(3, 1): 1}


def test_degenerate_shapes_dropped():
    p = published_character(3, 2)
    assert p.values == {(1, 1): 2}
    assert len(p.degenerate) == 2
    assert p.character().total_dimension() == 2


@pytest.mark.parametrize("m,n,total,uncovered", [
    (4, 5, 137, [(5,), (1, 1, 1, 1, 1)]),
    (5, 5, 335, [(5,), (2, 2, 1)]),
])
def test_weighted_dimension(m, n, total, uncovered):
    p = published_character(m, n)
    assert p.weighted_dimension() == total
    assert p.uncovered == uncovered


def test_bounds():
    assert published_bound(3, 6).value == 12
    assert published_bound(4, 5).value == 18


def test_json_number():
    assert json_number(3) == 3
    assert json_number(Fraction(343, 2)) == "343/2"
    assert json_number(Fraction(4, 2)) == 2
    assert json_number("n/a") == "n/a"
    assert PublishedValue("s", Fraction(1, 2), "r").to_json() == {"source": "s", "value": "1/2"}
