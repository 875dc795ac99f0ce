from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cocharlab.characters import (CharacterSum, MultiCharacter, NotACharacter, centralizer_order,
                                  class_function_of, decompose_class_function,
                                  decompose_young_class_function, induce_product_chain,
                                  lr_coefficients, lr_general, lr_product, mn_character_value,
                                  pieri_column, pieri_row, regular_character, strip)
from cocharlab.partitions import conjugate, hook_dimension, partitions_of

small = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def irr(*lam):
    return CharacterSum.irreducible(lam)


def test_rejects_bad_terms():
    with pytest.raises(ValueError):
        CharacterSum(3, {(2, 2): 1})
    with pytest.raises(ValueError):
        CharacterSum(2, {(2,): -1})


def test_arithmetic():
    a = irr(2) + irr(1, 1)
    assert a[(2,)] == 1 and a.total_dimension() == 2
    assert (3 * a)[(1, 1)] == 3
    assert CharacterSum(0) + irr(2) == irr(2)
    assert sum([irr(2), irr(2)]) == CharacterSum(2, {(2,): 2})
    assert a.format() == "[(2)] + [(1,1)]"


def test_small_products():
    assert irr(1) * irr(1) == irr(2) + irr(1, 1)
    assert irr(1, 1) * irr(2) == irr(3, 1) + irr(2, 1, 1)
    assert irr(2, 1) * irr(2, 1) == CharacterSum(6, {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1,
        (2, 2, 2): 1, (2, 2, 1, 1): 1})


def test_unit_is_neutral():
    assert CharacterSum.unit() * irr(3, 1) == irr(3, 1)
    with pytest.raises(ValueError):
        induce_product_chain([])


@given(small, small)
def test_product_dimension(mu, nu):
    from math import comb
    prod = lr_product(CharacterSum.irreducible(mu), CharacterSum.irreducible(nu))
    n1, n2 = sum(mu), sum(nu)
    assert prod.total_dimension() == comb(n1 + n2, n1) * hook_dimension(mu) * hook_dimension(nu)


@given(small, small)
def test_product_commutes_and_conjugates(mu, nu):
    assert lr_coefficients(mu, nu) == lr_coefficients(nu, mu)
    conj = {conjugate(lam): c for lam, c in lr_coefficients(mu, nu).items()}
    assert conj == lr_coefficients(conjugate(mu), conjugate(nu))


@pytest.mark.parametrize("mu", [lam for n in range(7) for lam in partitions_of(n)])
def test_pieri_matches_general(mu):
    for k in range(1, 5):
        assert pieri_row(mu, k) == lr_general(mu, (k,))
        assert pieri_column(mu, k) == lr_general(mu, (1,) * k)


def test_mn_values():
    assert mn_character_value((2, 1), (1, 1, 1)) == 2
    assert mn_character_value((1, 1), (2,)) == -1
    assert mn_character_value((2, 1), (3,)) == -1
    assert mn_character_value((3, 1), (2, 2)) == -1
    assert mn_character_value((), ()) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    parts = partitions_of(n)
    for mu in parts:
        for nu in parts:
            s = sum(mn_character_value(lam, mu) * mn_character_value(lam, nu) for lam in parts)
            assert s == (centralizer_order(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_row_orthogonality(n):
    parts = partitions_of(n)
    for a in parts:
        for b in parts:
            s = sum(Fraction(mn_character_value(a, mu) * mn_character_value(b, mu), centralizer_order(mu))
                    for mu in parts)
            assert s == (a == b)


@given(small)
def test_decompose_roundtrip(lam):
    chi = CharacterSum.irreducible(lam, 2) + regular_character(sum(lam))
    assert decompose_class_function(sum(lam), class_function_of(chi)) == chi


def test_decompose_rejects_non_characters():
    with pytest.raises(NotACharacter):
        decompose_class_function(2, {(1, 1): 1, (2,): 0})
    with pytest.raises(NotACharacter):
        decompose_class_function(2, {(1, 1): 0, (2,): 1})


def test_decompose_needs_every_class():
    with pytest.raises(ValueError):
        decompose_class_function(2, {(1, 1): 2})


def test_young_decomposition():
    # sign x trivial on S_2 x S_1
    values = {((1, 1), (1,)): 1, ((2,), (1,)): -1}
    chi = decompose_young_class_function((2, 1), values)
    assert chi == MultiCharacter((2, 1), {((1, 1), (1,)): 1})


@pytest.mark.parametrize("n", range(6))
def test_regular_character(n):
    chi = regular_character(n)
    assert chi.total_dimension() == factorial(n)
    values = class_function_of(chi)
    assert values[(1,) * n if n else ()] == factorial(n)
    assert all(v == 0 for mu, v in values.items() if mu != ((1,) * n if n else ()))


def test_strip():
    assert strip(0) == CharacterSum.unit()
    assert strip(3) == irr(3)
