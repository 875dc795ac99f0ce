"""Combinatorial formula for Y-proper graded cocharacters under the phi-grading.

For a multidegree l = (l_1, ..., l_m) with sum_{j>=2} l_j (j-1) <= m-2 the
character is a sum over compositions s of l_1 into k+1 parts (k the number of
nonzero-degree variables) of

    ([s_1 - 1, 1] x [s_2] x ... x [s_{k+1}])^{S_{l_1}}  (x)  reg(S_{l_2}) (x) ... (x) reg(S_{l_m})

times the number N of degree sequences with the given multiplicities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping, Sequence

from .characters import (CharacterSum, MultiCharacter, induce_product_chain,
                         lr_product, regular_character, strip)
from .partitions import (Partition, compositions, interleaves, multinomial,
                         partitions_of, s_compositions)


class NotGoodMultidegree(ValueError):
    """The weighted count of nonzero-degree variables exceeds m - 2."""


def degree_weight(l: Sequence[int]) -> int:
    return sum(j * x for j, x in enumerate(l) if j)


def is_good_multidegree(m: int, l: Sequence[int]) -> bool:
    return len(l) == m and degree_weight(l) <= m - 2


def leading_shape(s: int) -> Partition:
    """Shape carried by the leading identity-degree commutator of length s."""
    if s == 0:
        return ()
    if s == 1:
        raise ValueError("a commutator has at least two entries")
    return (s - 1, 1)


@lru_cache(maxsize=None)
def _y_part(l1: int, k: int) -> CharacterSum:
    total = CharacterSum(l1)
    for s in s_compositions(l1, k + 1):
        factors = [CharacterSum.irreducible(leading_shape(s[0]))]
        factors += [strip(x) for x in s[1:]]
        total = total + induce_product_chain(factors)
    return total


def sequence_count(l: Sequence[int]) -> int:
    """Number of degree sequences with multiplicities (0, l_2, ..., l_m)."""
    return multinomial(l[1:])


def xi_multidegree(m: int, l: Sequence[int]) -> MultiCharacter:
    l = tuple(l)
    if len(l) != m or any(x < 0 for x in l):
        raise ValueError(f"multidegree must be {m} nonnegative integers")
    if not is_good_multidegree(m, l):
        raise NotGoodMultidegree(
            f"sum of l_j*(j-1) is {degree_weight(l)} > {m - 2} for {l}")
    k = sum(l[1:])
    y_part = _y_part(l[0], k)
    n_seq = sequence_count(l)
    z_parts = [regular_character(x) for x in l[1:]]
    terms: Counter = Counter()
    for lam, mult in y_part.items():
        _tensor_into(terms, (lam,), mult * n_seq, z_parts)
    return MultiCharacter(l, terms)


def _tensor_into(terms: Counter, prefix: tuple, mult: int, rest: list[CharacterSum]) -> None:
    if not rest:
        terms[prefix] += mult
        return
    for lam, m2 in rest[0].items():
        _tensor_into(terms, prefix + (lam,), mult * m2, rest[1:])


def induce_multicharacter(chi: MultiCharacter) -> CharacterSum:
    """Induce a Young-subgroup character to S_n through iterated LR products."""
    n = sum(chi.multidegree)
    total = CharacterSum(n)
    for key, mult in chi.items():
        part = induce_product_chain([CharacterSum.irreducible(lam) for lam in key])
        total = total + part.scale(mult)
    return total


def good_multidegrees(m: int, n: int) -> list[tuple[int, ...]]:
    return [l for l in compositions(n, m) if is_good_multidegree(m, l)]


def xi_n(m: int, n: int) -> CharacterSum:
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = CharacterSum(n)
    for l in good_multidegrees(m, n):
        total = total + induce_multicharacter(xi_multidegree(m, l))
    return total


@dataclass
class GammaResult:
    total: int
    breakdown: dict[tuple[int, ...], int]


def gamma_n(m: int, n: int) -> GammaResult:
    breakdown = {l: xi_multidegree(m, l).total_dimension() for l in good_multidegrees(m, n)}
    total = sum(multinomial(l) * g for l, g in breakdown.items())
    return GammaResult(total, breakdown)


# Strip sums

def _closed_hook_row(n: int, form: str = "closed") -> tuple[CharacterSum, list[tuple[int, ...]]]:
    terms: Counter = Counter()
    degenerate = []
    low = 1 if form == "interleaving" else 0
    for c in (0, 1):
        for b in range(max(c, low), n - c + 1):
            a = n - b - c
            if a < b:
                continue
            coeff = a - b + 1
            shape = tuple(x for x in (a, b, c) if x)
            if coeff < 0:
                degenerate.append((a, b, c))
                continue
            terms[shape] += coeff
    return CharacterSum(n, terms), degenerate


def row_hook_row_coefficient(a: int, b: int, c: int, d: int) -> Fraction:
    inner = Fraction((a - b + 1) * ((b + 1) * (a + 2) + c * (c - 1)), 2) + \
        Fraction(c * (b * (b + 1) - (a + 1) * (a + 2)), 2)
    return (c if d == 1 else c + 1) * inner


def row_hook_row_triple_sum(a: int, b: int, c: int, d: int) -> int:
    return sum(i1 - i2 + 1
               for i1 in range(b, a + 1)
               for i2 in range(c, b + 1)
               for _ in range(d, c + 1))


def row_hook_row_interleaving_sum(a: int, b: int, c: int, d: int) -> int:
    """Triple sum restricted to inner shapes (i1, i2, i3) that occur on the left side."""
    n = a + b + c + d
    return sum(i1 - i2 + 1
               for i1 in range(b, a + 1)
               for i2 in range(max(c, 1), b + 1)
               for i3 in range(d, min(c, 1) + 1)
               if i1 + i2 + i3 <= n)


def _closed_row_hook_row(n: int, form: str = "closed") -> tuple[CharacterSum, list[tuple[int, ...]]]:
    terms: Counter = Counter()
    degenerate = []
    for d in (0, 1):
        for c in range(d, n + 1):
            for b in range(c, n + 1):
                a = n - b - c - d
                if a < b:
                    continue
                if form == "closed":
                    coeff = row_hook_row_coefficient(a, b, c, d)
                elif form == "triple":
                    coeff = row_hook_row_triple_sum(a, b, c, d)
                else:
                    coeff = row_hook_row_interleaving_sum(a, b, c, d)
                if coeff < 0 or coeff != int(coeff):
                    degenerate.append((a, b, c, d))
                    continue
                if not coeff:
                    continue
                terms[tuple(x for x in (a, b, c, d) if x)] += int(coeff)
    return CharacterSum(n, terms), degenerate


def _direct_hook_row(n: int) -> CharacterSum:
    total = CharacterSum(n)
    for l in range(1, n):
        total = total + lr_product(CharacterSum.irreducible((l, 1)), strip(n - l - 1))
    return total


def _direct_row_hook_row(n: int) -> CharacterSum:
    total = CharacterSum(n)
    for s in range(0, n - 1):
        for t in range(1, n - s):
            total = total + induce_product_chain(
                [strip(s), CharacterSum.irreducible((t, 1)), strip(n - s - t - 1)])
    return total


@dataclass
class StripSumResult:
    variant: str
    n: int
    direct: CharacterSum
    closed: CharacterSum
    degenerate: list[tuple[int, ...]]

    def differences(self) -> dict[Partition, tuple[int, int]]:
        keys = set(self.direct.terms) | set(self.closed.terms)
        return {lam: (self.direct[lam], self.closed[lam])
                for lam in sorted(keys, reverse=True)
                if self.direct[lam] != self.closed[lam]}

    @property
    def agree(self) -> bool:
        return not self.differences()


def strip_sum(n: int, variant: str, form: str = "closed") -> StripSumResult:
    """Direct LR evaluation of a strip sum next to its printed closed form.

    ``hook_row`` is sum_l [(l,1)] x [(n-l-1)] and ``row_hook_row`` is
    sum_{s,t} [(s)] x [(t,1)] x [(n-s-t-1)], both induced to S_n. The closed form is read literally: (a, b, c[, d]) runs over weakly
    decreasing nonnegative tuples with the stated sum, trailing zeros dropped.
    For ``row_hook_row``, ``form="triple"`` evaluates the printed triple sum
    instead of the printed case split. ``form="interleaving"`` restricts the
    ranges to shapes the left side can actually produce (second row at least
    1, inner third row at most 1, inner size at most n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if form not in ("closed", "triple", "interleaving"):
        raise ValueError(f"unknown form {form!r}")
    if variant == "hook_row":
        closed, degenerate = _closed_hook_row(n, form)
        direct = _direct_hook_row(n)
    elif variant == "row_hook_row":
        closed, degenerate = _closed_row_hook_row(n, form)
        direct = _direct_row_hook_row(n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return StripSumResult(variant, n, direct, closed, degenerate)


# Orders on characters

class Dominance(str, Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass
class Comparison:
    verdict: Dominance
    diff: dict[Partition, int]  # b - a, for every partition where they differ


def dominance_compare(a: CharacterSum, b: CharacterSum) -> Comparison:
    """Componentwise comparison of multiplicities (a <= b iff m_lam(a) <= m_lam(b))."""
    if a and b and a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    keys = set(a.terms) | set(b.terms)
    diff = {lam: b[lam] - a[lam] for lam in sorted(keys, reverse=True) if b[lam] != a[lam]}
    if not diff:
        verdict = Dominance.EQ
    elif all(v > 0 for v in diff.values()):
        verdict = Dominance.LE
    elif all(v < 0 for v in diff.values()):
        verdict = Dominance.GE
    else:
        verdict = Dominance.INCOMPARABLE
    return Comparison(verdict, diff)


def ordinary_multiplicity_bound(proper: Mapping[int, CharacterSum] | Callable[[int], CharacterSum],
                                lam: Partition) -> int:
    """Sum of k_nu over all nu with lam_1 >= nu_1 >= lam_2 >= nu_2 >= ...

    ``proper`` gives the proper cocharacter in each degree p <= |lam|.
    """
    n = sum(lam)
    get = proper if callable(proper) else (lambda p: proper.get(p, CharacterSum(p)))
    total = 0
    for p in range(n + 1):
        chi = get(p)
        for nu in partitions_of(p, max_parts=len(lam)):
            if interleaves(nu, lam):
                total += chi[nu]
    return total
