"""Formal sums of irreducible symmetric-group characters.

Irreducible characters of S_n are indexed by partitions of n. Products are
outer (induction) products computed with the Littlewood-Richardson rule;
character values come from the Murnaghan-Nakayama rule.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import (Partition, conjugate, format_partition, hook_dimension,
                         is_partition, partitions_of)


class NotACharacter(ValueError):
    """A class function decomposed with a negative or non-integral multiplicity."""


class CharacterSum:
    """A nonnegative integer combination of irreducible characters of S_n."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Partition, int] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.degree = degree
        clean: dict[Partition, int] = {}
        for lam, mult in (terms or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree or not is_partition(lam):
                raise ValueError(f"{lam} is not a partition of {degree}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {lam}")
            if mult:
                clean[lam] = clean.get(lam, 0) + int(mult)
        self._terms = clean

    @classmethod
    def irreducible(cls, lam: Sequence[int], mult: int = 1) -> "CharacterSum":
        lam = tuple(lam)
        return cls(sum(lam), {lam: mult})

    @classmethod
    def unit(cls) -> "CharacterSum":
        return cls(0, {(): 1})

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.partitions())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Partition, int]]:
        return [(lam, self._terms[lam]) for lam in self.partitions()]

    def partitions(self) -> list[Partition]:
        # reverse lexicographic, matching partitions_of
        return sorted(self._terms, reverse=True)

    def total_dimension(self) -> int:
        return sum(mult * hook_dimension(lam) for lam, mult in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterSum):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._terms.items())))

    def __add__(self, other: "CharacterSum") -> "CharacterSum":
        if not isinstance(other, CharacterSum):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        merged = Counter(self._terms)
        merged.update(other._terms)
        return CharacterSum(self.degree, merged)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def scale(self, k: int) -> "CharacterSum":
        if k < 0:
            raise ValueError("scale factor must be nonnegative")
        return CharacterSum(self.degree, {lam: k * m for lam, m in self._terms.items()})

    def __rmul__(self, k: int) -> "CharacterSum":
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, CharacterSum):
            return lr_product(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"CharacterSum({self.degree}, {self.format()})"

    def format(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for lam, mult in self.items():
            shape = "[" + format_partition(lam) + "]"
            pieces.append(shape if mult == 1 else f"{mult}{shape}")
        return " + ".join(pieces)

    def to_json(self) -> list[dict]:
        return [{"lambda": list(lam), "mult": mult} for lam, mult in self.items()]


class MultiCharacter:
    """Character of a Young subgroup S_{l_1} x ... x S_{l_m}.

    Keys are m-tuples of partitions whose i-th entry has weight l_i.
    """

    __slots__ = ("multidegree", "_terms")

    def __init__(self, multidegree: Sequence[int],
                 terms: Mapping[tuple[Partition, ...], int] | None = None):
        self.multidegree = tuple(multidegree)
        clean: dict[tuple[Partition, ...], int] = {}
        for key, mult in (terms or {}).items():
            key = tuple(tuple(lam) for lam in key)
            if len(key) != len(self.multidegree) or any(
                    sum(lam) != l for lam, l in zip(key, self.multidegree)):
                raise ValueError(f"key {key} does not match multidegree {self.multidegree}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {key}")
            if mult:
                clean[key] = clean.get(key, 0) + int(mult)
        self._terms = clean

    @property
    def terms(self) -> dict[tuple[Partition, ...], int]:
        return dict(self._terms)

    def __getitem__(self, key) -> int:
        return self._terms.get(tuple(tuple(lam) for lam in key), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[tuple[Partition, ...], int]]:
        return [(key, self._terms[key]) for key in sorted(self._terms, reverse=True)]

    def total_dimension(self) -> int:
        total = 0
        for key, mult in self._terms.items():
            dim = mult
            for lam in key:
                dim *= hook_dimension(lam)
            total += dim
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiCharacter):
            return NotImplemented
        return self.multidegree == other.multidegree and self._terms == other._terms

    def __add__(self, other: "MultiCharacter") -> "MultiCharacter":
        if self.multidegree != other.multidegree:
            raise ValueError("multidegree mismatch")
        merged = Counter(self._terms)
        merged.update(other._terms)
        return MultiCharacter(self.multidegree, merged)

    def __repr__(self) -> str:
        return f"MultiCharacter({self.multidegree}, {self.format()})"

    def format(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for key, mult in self.items():
            body = " x ".join(format_partition(lam) for lam in key)
            pieces.append(f"{mult}[{body}]" if mult != 1 else f"[{body}]")
        return " + ".join(pieces)

    def to_json(self) -> list[dict]:
        return [{"lambdas": [list(lam) for lam in key], "mult": mult}
                for key, mult in self.items()]


# Littlewood-Richardson products

def lr_product(a: CharacterSum, b: CharacterSum) -> CharacterSum:
    """Induced product (a x b) up to S_{p+q}, extended bilinearly."""
    total: Counter = Counter()
    for mu, m1 in a._terms.items():
        for nu, m2 in b._terms.items():
            for lam, c in lr_coefficients(mu, nu).items():
                total[lam] += m1 * m2 * c
    return CharacterSum(a.degree + b.degree, total)


def induce_product_chain(factors: Sequence[CharacterSum]) -> CharacterSum:
    if not factors:
        raise ValueError("at least one factor is required")
    return reduce(lr_product, factors)


def is_row(p: Partition) -> bool:
    return len(p) <= 1


def is_column(p: Partition) -> bool:
    return all(x == 1 for x in p)


@lru_cache(maxsize=None)
def lr_coefficients(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Coefficients c^lam_{mu,nu}; Pieri strips take the fast path."""
    if is_row(nu):
        return pieri_row(mu, sum(nu))
    if is_row(mu):
        return pieri_row(nu, sum(mu))
    if is_column(nu):
        return pieri_column(mu, len(nu))
    if is_column(mu):
        return pieri_column(nu, len(mu))
    return lr_general(mu, nu)


def horizontal_strips(mu: Partition, k: int) -> Iterator[Partition]:
    """Shapes obtained from ``mu`` by adding ``k`` boxes, no two in one column."""
    rows = len(mu) + 1
    ext = list(mu) + [0]

    def rec(r: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if r == rows:
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        cap = left if r == 0 else min(left, ext[r - 1] - ext[r])
        for add in range(cap, -1, -1):
            yield from rec(r + 1, left - add, acc + [ext[r] + add])

    yield from rec(0, k, [])


def pieri_row(mu: Partition, k: int) -> dict[Partition, int]:
    return {lam: 1 for lam in horizontal_strips(mu, k)}


def pieri_column(mu: Partition, k: int) -> dict[Partition, int]:
    return {conjugate(lam): 1 for lam in horizontal_strips(conjugate(mu), k)}


def lr_general(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Count LR tableaux of shape lam/mu and content nu, for every lam.

    Label i is added as a horizontal strip; label i may only sit in rows
    with index >= i (0-based), otherwise the reverse reading word cannot be
    a lattice word. The lattice condition is checked on the finished filling.
    """
    out: Counter = Counter()
    labels = len(nu)

    def rec(i: int, shape: list[int], filling: list[list[int]]) -> None:
        if i == labels:
            if _is_lattice(filling, labels):
                out[tuple(x for x in shape if x)] += 1
            return
        ext = shape + [0]
        rows = len(ext)

        def place(r: int, left: int, new_shape: list[int], new_fill: list[list[int]]):
            if r == rows:
                if left == 0:
                    rec(i + 1, new_shape, new_fill)
                return
            if r < i:
                place(r + 1, left, new_shape + [ext[r]], new_fill + [filling_row(filling, r)])
                return
            cap = left if r == 0 else min(left, ext[r - 1] - ext[r])
            for add in range(cap, -1, -1):
                row = list(filling_row(filling, r))
                row[i] += add
                place(r + 1, left - add, new_shape + [ext[r] + add], new_fill + [row])

        place(0, nu[i], [], [])

    def filling_row(filling: list[list[int]], r: int) -> list[int]:
        return filling[r] if r < len(filling) else [0] * labels

    rec(0, list(mu), [])
    return dict(out)


def _is_lattice(filling: list[list[int]], labels: int) -> bool:
    seen = [0] * labels
    for row in filling:
        for j in range(labels - 1, -1, -1):
            if row[j]:
                if j > 0 and seen[j] + row[j] > seen[j - 1]:
                    return False
                seen[j] += row[j]
    return True


# Murnaghan-Nakayama character values

@lru_cache(maxsize=None)
def mn_character_value(lam: Partition, mu: Partition) -> int:
    """chi_lam evaluated on the class of cycle type ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: {lam} vs {mu}")
    if not mu:
        return 1
    length = len(lam)
    beta = frozenset(lam[i] + length - 1 - i for i in range(length))
    return _mn_beta(beta, tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def _mn_beta(beta: frozenset, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beta:
            height = sum(1 for c in beta if b - r < c < b)
            sign = -1 if height % 2 else 1
            total += sign * _mn_beta((beta - {b}) | {b - r}, rest)
    return total


def centralizer_order(mu: Sequence[int]) -> int:
    """z_mu = prod_i i^{a_i} a_i!, so the class of mu has n!/z_mu elements."""
    z = 1
    for part, count in Counter(mu).items():
        z *= part ** count * factorial(count)
    return z


def class_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


def class_function_of(chi: CharacterSum) -> dict[Partition, int]:
    return {mu: sum(m * mn_character_value(lam, mu) for lam, m in chi._terms.items())
            for mu in partitions_of(chi.degree)}


def _checked_multiplicity(value: Fraction, label) -> int:
    if value.denominator != 1 or value < 0:
        raise NotACharacter(f"inner product with {label} is {value}")
    return int(value)


def decompose_class_function(n: int, values: Mapping[Sequence[int], Fraction | int]) -> CharacterSum:
    """Decompose a class function of S_n given by its values on cycle types."""
    vals = {tuple(k): Fraction(v) for k, v in values.items()}
    classes = partitions_of(n)
    missing = [mu for mu in classes if mu not in vals]
    if missing:
        raise ValueError(f"class function undefined on {missing}")
    terms = {}
    for lam in classes:
        acc = sum(Fraction(vals[mu] * mn_character_value(lam, mu), centralizer_order(mu))
                  for mu in classes)
        mult = _checked_multiplicity(acc, lam)
        if mult:
            terms[lam] = mult
    return CharacterSum(n, terms)


def decompose_young_class_function(
        multidegree: Sequence[int],
        values: Mapping[tuple[Partition, ...], Fraction | int]) -> MultiCharacter:
    """Decompose a class function of S_{l_1} x ... x S_{l_m}.

    ``values`` maps tuples of cycle types to values. Irreducibles of the
    product are outer tensor products, so the inner product factorises
    over the components.
    """
    multidegree = tuple(multidegree)
    vals = {tuple(tuple(mu) for mu in k): Fraction(v) for k, v in values.items()}
    class_lists = [partitions_of(l) for l in multidegree]
    all_classes = list(product(*class_lists))
    missing = [c for c in all_classes if c not in vals]
    if missing:
        raise ValueError(f"class function undefined on {missing[:3]}...")
    terms = {}
    for key in product(*class_lists):
        acc = Fraction(0)
        for cls in all_classes:
            v = vals[cls]
            if not v:
                continue
            weight = 1
            z = 1
            for lam, mu in zip(key, cls):
                weight *= mn_character_value(lam, mu)
                z *= centralizer_order(mu)
            acc += Fraction(v * weight, z)
        mult = _checked_multiplicity(acc, key)
        if mult:
            terms[key] = mult
    return MultiCharacter(multidegree, terms)


def regular_character(n: int) -> CharacterSum:
    """Character of the regular representation of S_n."""
    return CharacterSum(n, {lam: hook_dimension(lam) for lam in partitions_of(n)})


def strip(k: int) -> CharacterSum:
    """The one-row character [(k)], with [()] for k = 0."""
    return CharacterSum.irreducible((k,) if k else ())


def sum_characters(items: Iterable[CharacterSum], degree: int) -> CharacterSum:
    total = CharacterSum(degree)
    for chi in items:
        total = total + chi
    return total
