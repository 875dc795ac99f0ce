from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, strategies as st

from cocharlab.linalg import EchelonBasis, rank, rank_bareiss

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=7))


@given(matrices)
def test_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank()
    assert rank(rows, len(rows[0])) == expected
    assert rank_bareiss(rows) == expected


@given(matrices)
def test_reduced_rows_span_the_same_space(rows):
    basis = EchelonBasis(len(rows[0]))
    for r in rows:
        basis.add(r)
    for r in rows:
        assert basis.contains(r)
    m = basis.matrix()
    if m:
        assert sympy.Matrix(m).rank() == basis.rank
        for i, p in enumerate(basis.pivots):
            assert all(m[k][p] == 0 for k in range(len(m)) if k != i)


def test_large_entries_promote():
    big = 1 << 61
    basis = EchelonBasis(3)
    basis.add([big, 1, 0])
    basis.add([3, big, 1])
    assert basis.add([1, 1, big])
    assert basis.rank == 3


def test_permuted_trace():
    # span{e0 + e1, e2} under the swap of columns 0 and 1
    basis = EchelonBasis(3)
    basis.add([1, 1, 0])
    basis.add([0, 0, 1])
    assert basis.permuted_trace([1, 0, 2]) == 2
    # span{e0 - e1}: the swap acts by -1
    basis = EchelonBasis(2)
    basis.add(np.array([1, -1]))
    assert basis.permuted_trace([1, 0]) == Fraction(-1)
