"""Elementary Z_m-gradings on upper-triangular matrices.

The matrix unit e_ij has degree (g_j - g_i) mod m. Indices are 1-based
throughout, as in the usual matrix-unit notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .products import ProperProduct, Variable

Position = tuple[int, int]


@dataclass(frozen=True)
class ElementaryGrading:
    m: int
    tuple: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("order must be positive")
        if len(self.tuple) != self.m:
            raise ValueError(f"grading tuple must have length {self.m}")
        if any(not 0 <= g < self.m for g in self.tuple):
            raise ValueError(f"grading entries must lie in 0..{self.m - 1}")

    @classmethod
    def phi(cls, m: int) -> "ElementaryGrading":
        if m < 2:
            raise ValueError("phi needs m >= 2")
        return cls(m, (0,) + tuple(range(m - 1)), "phi")

    @classmethod
    def psi(cls, m: int) -> "ElementaryGrading":
        return cls(m, tuple(range(m)), "psi")

    @classmethod
    def parse(cls, m: int, spec: str) -> "ElementaryGrading":
        """``phi``, ``psi`` or an explicit comma-separated tuple."""
        spec = spec.strip()
        if spec == "phi":
            return cls.phi(m)
        if spec == "psi":
            return cls.psi(m)
        return cls(m, tuple(int(x) for x in spec.split(",")))

    @property
    def label(self) -> str:
        return self.name or ",".join(map(str, self.tuple))

    def unit_degree(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.m:
            raise IndexError(f"e_{i}{j} is not an upper-triangular unit of order {self.m}")
        return (self.tuple[j - 1] - self.tuple[i - 1]) % self.m

    def positions(self) -> list[Position]:
        return [(i, j) for i in range(1, self.m + 1) for j in range(i, self.m + 1)]

    def component_basis(self, d: int, radical: bool = False) -> list[Position]:
        """Upper-triangular units of degree ``d`` in row-major order."""
        d %= self.m
        return [(i, j) for i, j in self.positions()
                if self.unit_degree(i, j) == d and (i < j or not radical)]


def unit_degree(g: ElementaryGrading, i: int, j: int) -> int:
    return g.unit_degree(i, j)


def component_basis(g: ElementaryGrading, d: int, radical: bool = False) -> list[Position]:
    return g.component_basis(d, radical)


def good_sequence_witness(g: ElementaryGrading, eta: Sequence[int]) -> tuple[Position, ...] | None:
    """A chain of radical units e_{i1 j1}, e_{j1 j2}, ... with the given degrees.

    Products of radical matrix units are nonzero exactly when consecutive
    units chain, so a depth-first walk over start rows decides goodness.
    """
    eta = [d % g.m for d in eta]
    if not eta:
        raise ValueError("degree sequence must be nonempty")
    by_row: dict[tuple[int, int], list[int]] = {}
    for i, j in g.positions():
        if i < j:
            by_row.setdefault((i, g.unit_degree(i, j)), []).append(j)

    def walk(row: int, t: int) -> list[Position] | None:
        if t == len(eta):
            return []
        for col in by_row.get((row, eta[t]), ()):
            rest = walk(col, t + 1)
            if rest is not None:
                return [(row, col)] + rest
        return None

    for start in range(1, g.m + 1):
        chain = walk(start, 0)
        if chain is not None:
            return tuple(chain)
    return None


def is_good_sequence(g: ElementaryGrading, eta: Sequence[int]) -> bool:
    return good_sequence_witness(g, eta) is not None


def degree_multiplicities(m: int, alpha: Sequence[int]) -> tuple[int, ...]:
    """(mu_1, ..., mu_m): mu_i counts entries congruent to i-1 mod m."""
    counts = [0] * m
    for a in alpha:
        counts[a % m] += 1
    return tuple(counts)


def phi_good_criterion(m: int, alpha: Sequence[int]) -> bool:
    mu = degree_multiplicities(m, alpha)
    return mu[0] == 0 and sum(mu[j] * j for j in range(1, m)) <= m - 2


def _contains_factor(seq: tuple[int, ...], bad: set[tuple[int, ...]]) -> bool:
    n = len(seq)
    return any(seq[i:j] in bad for i in range(n) for j in range(i + 1, n + 1)
               if (i, j) != (0, n))


def bad_sequences(g: ElementaryGrading, max_len: int) -> list[tuple[int, ...]]:
    """Minimal bad sequences of length <= max_len, by length then lexicographically.

    A sequence is kept only if no proper contiguous factor is already bad.
    """
    found: list[tuple[int, ...]] = []
    bad: set[tuple[int, ...]] = set()
    for length in range(1, max_len + 1):
        for seq in product(range(g.m), repeat=length):
            if _contains_factor(seq, bad):
                continue
            if not is_good_sequence(g, seq):
                found.append(seq)
                bad.add(seq)
    return found


def generator_product(eta: Sequence[int]) -> ProperProduct:
    """The product f_eta: [y,y] for a zero slot, one fresh variable otherwise."""
    factors: list[tuple[Variable, ...]] = []
    counters: dict[int, int] = {}

    def fresh(d: int) -> Variable:
        counters[d] = counters.get(d, 0) + 1
        return (d, counters[d])

    for d in eta:
        if d == 0:
            factors.append((fresh(0), fresh(0)))
        else:
            factors.append((fresh(d),))
    return ProperProduct(tuple(factors))


@dataclass(frozen=True)
class IdentityGenerator:
    eta: tuple[int, ...]
    product: ProperProduct

    @property
    def text(self) -> str:
        return str(self.product)


def t_ideal_generators(g: ElementaryGrading, max_len: int | None = None) -> list[IdentityGenerator]:
    """Generators f_eta for the minimal bad sequences of length <= m."""
    limit = g.m if max_len is None else max_len
    return [IdentityGenerator(eta, generator_product(eta)) for eta in bad_sequences(g, limit)]
