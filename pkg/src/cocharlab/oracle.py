"""Brute-force evaluation of Y-proper multilinear polynomials on matrix units.

Multilinear polynomials vanish identically on a graded algebra exactly when
they vanish on every degree-respecting tuple of homogeneous basis elements,
so evaluating on matrix units decides the quotient by the graded identities.
The quotient for a multidegree is realised as the row space of an integer
evaluation table; its rank is the proper codimension and the trace of the
variable-permutation action on it gives the cocharacter.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterator, Mapping, Sequence

import numpy as np

from .characters import (CharacterSum, MultiCharacter, NotACharacter,
                         decompose_young_class_function)
from .engine import induce_multicharacter
from .grading import ElementaryGrading, Position, is_good_sequence
from .linalg import EchelonBasis
from .partitions import compositions, multinomial, partitions_of
from .products import ProperProduct, Variable, multidegree_variables

log = logging.getLogger(__name__)

DEFAULT_CAP = 7


class CapExceeded(ValueError):
    """The multidegree is larger than the configured oracle cap."""


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GradedMatrixAlgebra:
    grading: ElementaryGrading
    units: tuple[tuple[Position, int], ...] = field(init=False)

    def __post_init__(self):
        g = self.grading
        object.__setattr__(self, "units",
                           tuple((pos, g.unit_degree(*pos)) for pos in g.positions()))

    @classmethod
    def upper_triangular(cls, grading: ElementaryGrading) -> "GradedMatrixAlgebra":
        return cls(grading)

    @property
    def m(self) -> int:
        return self.grading.m

    def units_of_degree(self, d: int) -> list[Position]:
        d %= self.m
        return [pos for pos, deg in self.units if deg == d]

    def unit_matrix(self, pos: Position) -> np.ndarray:
        mat = np.zeros((self.m, self.m), dtype=np.int64)
        mat[pos[0] - 1, pos[1] - 1] = 1
        return mat


# Spanning sets

def _check_cap(l: Sequence[int], cap: int) -> None:
    if sum(l) > cap:
        raise CapExceeded(f"multidegree {tuple(l)} has total {sum(l)} > cap {cap}")


def spanning_products(l: Sequence[int], cap: int = DEFAULT_CAP) -> list[ProperProduct]:
    """All products of bare nonzero-degree variables and left-normed commutators.

    Every variable of the multidegree is used exactly once and identity-degree
    variables only occur inside commutators. The set is redundant on purpose.
    """
    _check_cap(l, cap)
    return [ProperProduct(f) for f in _factorisations(tuple(multidegree_variables(l)))]


def _factorisations(remaining: tuple[Variable, ...]) -> Iterator[tuple[tuple[Variable, ...], ...]]:
    if not remaining:
        yield ()
        return
    for size in range(1, len(remaining) + 1):
        for subset in combinations(remaining, size):
            if size == 1 and subset[0][0] == 0:
                continue
            rest = tuple(v for v in remaining if v not in subset)
            for order in (permutations(subset) if size > 1 else (subset,)):
                for tail in _factorisations(rest):
                    yield (tuple(order),) + tail


def semistandard_products(grading: ElementaryGrading, l: Sequence[int],
                          cap: int = DEFAULT_CAP) -> list[ProperProduct]:
    """Products of semistandard normal commutators with a good degree sequence.

    Identity-degree commutators [y_i1, ..., y_it] satisfy i1 > i2 <= ... <= it;
    the others are z or [z, y_i1, ..., y_it] with increasing indices.
    """
    _check_cap(l, cap)
    variables = multidegree_variables(l)
    ys = [v for v in variables if v[0] == 0]
    zs = [v for v in variables if v[0] != 0]
    out: list[ProperProduct] = []
    seen = set()
    for attach in product(range(len(zs) + 1), repeat=len(ys)):
        z_parts = [[z] + [y for y, a in zip(ys, attach) if a == k + 1] for k, z in enumerate(zs)]
        free = [y for y, a in zip(ys, attach) if a == 0]
        for blocks in _set_partitions_min2(free):
            for y_comms in product(*[_semistandard_y(b) for b in blocks]):
                comms = [tuple(c) for c in y_comms] + [tuple(c) for c in z_parts]
                for order in permutations(comms):
                    degrees = [_commutator_degree(c, grading.m) for c in order]
                    if order and not is_good_sequence(grading, degrees):
                        continue
                    key = tuple(order)
                    if key not in seen:
                        seen.add(key)
                        out.append(ProperProduct(key))
    return out


def _commutator_degree(c: Sequence[Variable], m: int) -> int:
    return sum(d for d, _ in c) % m


def _semistandard_y(block: Sequence[Variable]) -> list[list[Variable]]:
    block = sorted(block)
    out = []
    for first in block[1:]:
        rest = [v for v in block if v != first]
        out.append([first] + rest)
    return out


def _set_partitions_min2(items: list[Variable]) -> Iterator[list[list[Variable]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for k in range(1, len(rest) + 1):
        for mates in combinations(rest, k):
            left = [v for v in rest if v not in mates]
            for tail in _set_partitions_min2(left):
                yield [[head, *mates]] + tail


# Evaluation

def evaluate_product(A: GradedMatrixAlgebra, p: ProperProduct,
                     assignment: Mapping[Variable, Position]) -> dict[Position, int]:
    """Value of ``p`` at a matrix-unit assignment, as a sparse {(i, j): coeff}."""
    mats = {}
    for var in p.variables:
        if var not in assignment:
            raise DegreeMismatch(f"no unit assigned to {var}")
        pos = assignment[var]
        if A.grading.unit_degree(*pos) != var[0] % A.m:
            raise DegreeMismatch(f"e_{pos[0]}{pos[1]} does not have degree {var[0]}")
        mats[var] = A.unit_matrix(pos)
    value = np.eye(A.m, dtype=np.int64)
    for factor in p.factors:
        value = value @ _commutator(factor, mats)
    return {(int(i) + 1, int(j) + 1): int(value[i, j]) for i, j in zip(*np.nonzero(value))}


def _commutator(factor: Sequence[Variable], mats) -> np.ndarray:
    acc = mats[factor[0]]
    for var in factor[1:]:
        b = mats[var]
        acc = acc @ b - b @ acc
    return acc


def _walk_endpoints(units: Sequence[Position]) -> Position | None:
    """Endpoints of the monotone walk through all units, if one exists.

    A product of upper-triangular units in some order is nonzero only if the
    off-diagonal units form a chain i1 < j1 = i2 < ... and every diagonal unit
    sits on a vertex of that chain; the value is then a multiple of
    e_{start, end}.
    """
    steps = sorted((i, j) for i, j in units if i < j)
    loops = {i for i, j in units if i == j}
    if not steps:
        return (next(iter(loops)),) * 2 if len(loops) == 1 else None
    for (a, b), (c, d) in zip(steps, steps[1:]):
        if b != c:
            return None
    vertices = {steps[0][0]} | {j for _, j in steps}
    if not loops <= vertices:
        return None
    return (steps[0][0], steps[-1][1])


@dataclass
class _Columns:
    """Degree-respecting assignments that can give a nonzero value."""
    variables: list[Variable]
    assignments: list[tuple[Position, ...]]
    endpoints: np.ndarray
    index: dict[tuple[Position, ...], int]
    stacks: dict[Variable, np.ndarray]


def _columns(A: GradedMatrixAlgebra, l: Sequence[int], prefilter: bool = True) -> _Columns:
    variables = multidegree_variables(l)
    choices = [A.units_of_degree(d) for d, _ in variables]
    assignments, ends = [], []
    for combo in product(*choices):
        e = _walk_endpoints(combo)
        if e is None and prefilter:
            continue
        assignments.append(combo)
        ends.append(e or (1, 1))
    n = len(assignments)
    stacks = {}
    for k, var in enumerate(variables):
        stack = np.zeros((n, A.m, A.m), dtype=np.int64)
        for a, combo in enumerate(assignments):
            i, j = combo[k]
            stack[a, i - 1, j - 1] = 1
        stacks[var] = stack
    return _Columns(variables, assignments,
                    np.asarray(ends, dtype=np.int64).reshape(n, 2) - 1,
                    {a: k for k, a in enumerate(assignments)}, stacks)


class _Evaluator:
    """Batched evaluation over all columns, memoising commutator values."""

    def __init__(self, A: GradedMatrixAlgebra, cols: _Columns):
        self.cols = cols
        self.n = len(cols.assignments)
        self.m = A.m
        self._comm: dict[tuple[Variable, ...], np.ndarray] = {}
        self._rows = np.arange(self.n)

    def commutator(self, factor: tuple[Variable, ...]) -> np.ndarray:
        val = self._comm.get(factor)
        if val is None:
            if len(factor) == 1:
                val = self.cols.stacks[factor[0]]
            else:
                head = self.commutator(factor[:-1])
                b = self.cols.stacks[factor[-1]]
                val = head @ b - b @ head
            self._comm[factor] = val
        return val

    def full(self, p: ProperProduct) -> np.ndarray:
        value = None
        for factor in p.factors:
            c = self.commutator(factor)
            value = c if value is None else value @ c
        if value is None:
            value = np.broadcast_to(np.eye(self.m, dtype=np.int64), (self.n, self.m, self.m))
        return value

    def row(self, p: ProperProduct) -> np.ndarray:
        value = self.full(p)
        e = self.cols.endpoints
        return value[self._rows, e[:, 0], e[:, 1]]


@dataclass
class EvaluationTable:
    """Rows are products, columns are (assignment, position) pairs."""
    rows: list[ProperProduct]
    columns: list[tuple[tuple[Position, ...], Position]]
    entries: np.ndarray


def evaluation_table(A: GradedMatrixAlgebra, l: Sequence[int],
                     products: Sequence[ProperProduct] | None = None,
                     cap: int = DEFAULT_CAP, prefilter: bool = True) -> EvaluationTable:
    """The full table with one column per (assignment, matrix position).

    Without the prefilter every degree-respecting assignment is present.
    """
    if products is None:
        products = spanning_products(l, cap)
    cols = _columns(A, l, prefilter=prefilter)
    ev = _Evaluator(A, cols)
    positions = A.grading.positions()
    columns = [(a, pos) for a in cols.assignments for pos in positions]
    flat = [(i - 1) * A.m + (j - 1) for i, j in positions]
    entries = np.zeros((len(products), len(columns)), dtype=np.int64)
    for r, p in enumerate(products):
        if ev.n:
            entries[r] = ev.full(p).reshape(ev.n, A.m * A.m)[:, flat].reshape(-1)
    return EvaluationTable(list(products), columns, entries)


@dataclass
class ProperQuotient:
    """Row space of the evaluation table for one multidegree."""
    algebra: GradedMatrixAlgebra
    multidegree: tuple[int, ...]
    basis: EchelonBasis
    columns: _Columns
    products_seen: int

    @property
    def rank(self) -> int:
        return self.basis.rank


def proper_quotient(A: GradedMatrixAlgebra, l: Sequence[int],
                    products: Sequence[ProperProduct] | None = None,
                    cap: int = DEFAULT_CAP) -> ProperQuotient:
    l = tuple(l)
    if len(l) != A.m:
        raise ValueError(f"multidegree must have {A.m} entries")
    _check_cap(l, cap)
    cols = _columns(A, l)
    basis = EchelonBasis(len(cols.assignments))
    if sum(l) == 0:
        # only the empty product 1, nonzero in every algebra
        basis = EchelonBasis(1)
        basis.add([1])
        return ProperQuotient(A, l, basis, cols, 1)
    if not cols.assignments:
        return ProperQuotient(A, l, basis, cols, 0)
    if products is None:
        products = spanning_products(l, cap)
    ev = _Evaluator(A, cols)
    seen: set[bytes] = set()
    count = 0
    for p in products:
        count += 1
        vec = ev.row(p)
        nz = np.flatnonzero(vec)
        if nz.size == 0:
            continue
        if vec[nz[0]] < 0:
            vec = -vec
        key = vec.tobytes()
        if key in seen:
            continue
        seen.add(key)
        basis.add(vec)
    log.debug("multidegree %s: %d products, %d distinct rows, rank %d",
              l, count, len(seen), basis.rank)
    return ProperQuotient(A, l, basis, cols, count)


@lru_cache(maxsize=256)
def _cached_quotient(grading: ElementaryGrading, l: tuple[int, ...], cap: int) -> ProperQuotient:
    return proper_quotient(GradedMatrixAlgebra(grading), l, cap=cap)


def gamma_oracle(A: GradedMatrixAlgebra, l: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    return _cached_quotient(A.grading, tuple(l), cap).rank


def _cycle_permutation(cycle_type: Sequence[int]) -> list[int]:
    perm, start = [], 0
    for length in cycle_type:
        perm.extend(start + (k + 1) % length for k in range(length))
        start += length
    return perm


def _variable_permutation(l: Sequence[int], classes: Sequence[Sequence[int]]) -> dict[Variable, Variable]:
    mapping = {}
    for d, mu in enumerate(classes):
        perm = _cycle_permutation(mu)
        for k in range(l[d]):
            mapping[(d, k + 1)] = (d, perm[k] + 1)
    return mapping


def quotient_trace(q: ProperQuotient, classes: Sequence[Sequence[int]]) -> int:
    """Trace of a permutation of cycle types ``classes`` (one per degree)."""
    if sum(q.multidegree) == 0:
        return q.rank
    cols = q.columns
    sigma = _variable_permutation(q.multidegree, classes)
    pos = {v: k for k, v in enumerate(cols.variables)}
    src = [pos[sigma[v]] for v in cols.variables]
    perm = np.fromiter((cols.index[tuple(a[s] for s in src)] for a in cols.assignments),
                       dtype=np.int64, count=len(cols.assignments))
    value = q.basis.permuted_trace(perm)
    if value.denominator != 1:
        raise NotACharacter(f"non-integral trace {value} for classes {classes}")
    return int(value)


def xi_from_quotient(q: ProperQuotient) -> MultiCharacter:
    l = q.multidegree
    values = {}
    for classes in product(*[partitions_of(x) for x in l]):
        values[classes] = quotient_trace(q, classes) if q.rank else 0
    return decompose_young_class_function(l, values)


def xi_oracle(A: GradedMatrixAlgebra, l: Sequence[int], cap: int = DEFAULT_CAP) -> MultiCharacter:
    return xi_from_quotient(_cached_quotient(A.grading, tuple(l), cap))


@dataclass
class OracleResult:
    grading: ElementaryGrading
    n: int
    xi: CharacterSum
    gamma: int
    breakdown: dict[tuple[int, ...], int]
    components: dict[tuple[int, ...], MultiCharacter]


def xi_n_oracle(A: GradedMatrixAlgebra, n: int, cap: int = DEFAULT_CAP,
                with_characters: bool = True) -> OracleResult:
    """Aggregate the oracle over every multidegree of total ``n``."""
    if n > cap:
        raise CapExceeded(f"n = {n} > cap {cap}")
    total = CharacterSum(n)
    gamma = 0
    breakdown, components = {}, {}
    for l in compositions(n, A.m):
        q = _cached_quotient(A.grading, l, cap)
        breakdown[l] = q.rank
        gamma += multinomial(l) * q.rank
        if with_characters and q.rank:
            chi = xi_from_quotient(q)
            components[l] = chi
            total = total + induce_multicharacter(chi)
    return OracleResult(A.grading, n, total, gamma, breakdown, components)


def is_identity(A: GradedMatrixAlgebra, p: ProperProduct) -> bool:
    """True when ``p`` vanishes on every degree-respecting unit assignment."""
    l = p.multidegree(A.m)
    cols = _columns(A, l, prefilter=False)
    if not cols.assignments:
        return True
    value = _Evaluator(A, cols).full(p)
    return not np.any(value)
