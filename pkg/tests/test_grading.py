from itertools import product

import pytest

from cocharlab.grading import (ElementaryGrading, bad_sequences, component_basis,
                               degree_multiplicities, generator_product, good_sequence_witness,
                               is_good_sequence, phi_good_criterion, t_ideal_generators,
                               unit_degree)


def test_named_gradings():
    assert ElementaryGrading.phi(5).tuple == (0, 0, 1, 2, 3)
    assert ElementaryGrading.psi(4).tuple == (0, 1, 2, 3)
    assert ElementaryGrading.parse(3, "0,0,1").tuple == (0, 0, 1)
    with pytest.raises(ValueError):
        ElementaryGrading(3, (0, 1))
    with pytest.raises(ValueError):
        ElementaryGrading(3, (0, 3, 1))


def test_unit_degrees():
    g = ElementaryGrading.phi(3)
    assert unit_degree(g, 1, 2) == 0
    assert unit_degree(g, 2, 3) == 1
    assert unit_degree(g, 1, 3) == 1
    assert component_basis(g, 1) == [(1, 3), (2, 3)]
    assert component_basis(g, 0, radical=True) == [(1, 2)]
    with pytest.raises(IndexError):
        g.unit_degree(2, 1)


def test_psi_degrees_wrap():
    g = ElementaryGrading.psi(4)
    assert g.unit_degree(1, 4) == 3
    assert g.unit_degree(2, 4) == 2
    assert component_basis(g, 0) == [(1, 1), (2, 2), (3, 3), (4, 4)]


def test_witness_is_a_chain():
    g = ElementaryGrading.phi(5)
    chain = good_sequence_witness(g, (1, 1, 1))
    assert chain is not None
    assert all(a[1] == b[0] for a, b in zip(chain, chain[1:]))
    assert [g.unit_degree(*u) for u in chain] == [1, 1, 1]
    assert good_sequence_witness(g, (1, 0)) is None


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_criterion_matches_search(m):
    g = ElementaryGrading.phi(m)
    for length in range(1, m + 1):
        for seq in product(range(1, m), repeat=length):
            assert phi_good_criterion(m, seq) == is_good_sequence(g, seq)


def test_degree_multiplicities():
    assert degree_multiplicities(4, (1, 1, 2, 0)) == (1, 2, 1, 0)


def test_minimal_bad_sequences():
    assert bad_sequences(ElementaryGrading.phi(3), 3) == [(2,), (0, 0), (1, 0), (1, 1)]
    assert bad_sequences(ElementaryGrading.phi(4), 4) == [
        (3,), (0, 0), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2), (1, 1, 1)]
    assert bad_sequences(ElementaryGrading.phi(5), 5) == [
        (4,), (0, 0), (1, 0), (1, 3), (2, 0), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2), (3, 3),
        (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 1, 2), (1, 1, 1, 1)]


@pytest.mark.parametrize("m", [3, 4, 5])
def test_bad_sequences_are_minimal(m):
    g = ElementaryGrading.phi(m)
    for eta in bad_sequences(g, m):
        assert not is_good_sequence(g, eta)
        for i in range(len(eta)):
            for j in range(i + 1, len(eta) + 1):
                if (i, j) != (0, len(eta)):
                    assert is_good_sequence(g, eta[i:j])


def test_generator_texts():
    texts = [gen.text for gen in t_ideal_generators(ElementaryGrading.phi(3))]
    assert texts == ["t1", "[y1,y2]*[y3,y4]", "z1*[y1,y2]", "z1*z2"]
    assert str(generator_product((1, 0, 2))) == "z1*[y1,y2]*t1"
