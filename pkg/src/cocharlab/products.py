"""Multilinear products of commutators in graded variables.

A variable is a pair ``(degree, index)``. A :class:`ProperProduct` is an
ordered sequence of factors; a factor of length one is a bare variable and a
longer factor is a left-normed commutator, ``[a,b,c] = [[a,b],c]``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

Variable = tuple[int, int]

_LETTERS = {0: "y", 1: "z", 2: "t", 3: "r"}
_DEGREES = {v: k for k, v in _LETTERS.items()}


def variable_name(var: Variable) -> str:
    degree, index = var
    letter = _LETTERS.get(degree)
    if letter is None:
        return f"x{degree}_{index}"
    return f"{letter}{index}"


@dataclass(frozen=True)
class ProperProduct:
    factors: tuple[tuple[Variable, ...], ...]

    def __post_init__(self):
        seen = set()
        for factor in self.factors:
            if not factor:
                raise ValueError("empty factor")
            if len(factor) == 1 and factor[0][0] == 0:
                raise ValueError("identity-degree variables must sit inside commutators")
            for var in factor:
                if var in seen:
                    raise ValueError(f"variable {variable_name(var)} used twice")
                seen.add(var)

    @property
    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for f in self.factors for v in f)

    def multidegree(self, m: int) -> tuple[int, ...]:
        counts = Counter(d for d, _ in self.variables)
        return tuple(counts.get(d, 0) for d in range(m))

    def relabel(self, mapping: dict[Variable, Variable]) -> "ProperProduct":
        return ProperProduct(tuple(tuple(mapping.get(v, v) for v in f) for f in self.factors))

    def __str__(self) -> str:
        out = []
        for factor in self.factors:
            names = [variable_name(v) for v in factor]
            out.append(names[0] if len(names) == 1 else "[" + ",".join(names) + "]")
        return "*".join(out) if out else "1"


_TOKEN = re.compile(r"\[|\]|,|\*|([yztr])(\d*)|x(\d+)_(\d+)")


def parse_product(text: str) -> ProperProduct:
    """Parse the textual form produced by ``str(ProperProduct)``.

    A letter without an index means index 1, so ``"z*t"`` is ``z1*t1``.
    """
    factors: list[tuple[Variable, ...]] = []
    current: list[Variable] | None = None
    pos = 0
    text = text.replace(" ", "")
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        tok = match.group(0)
        pos = match.end()
        if tok == "[":
            if current is not None:
                raise ValueError("nested brackets are not left-normed")
            current = []
        elif tok == "]":
            if not current or len(current) < 2:
                raise ValueError("commutators need at least two entries")
            factors.append(tuple(current))
            current = None
        elif tok in (",", "*"):
            continue
        else:
            if match.group(1):
                var = (_DEGREES[match.group(1)], int(match.group(2) or 1))
            else:
                var = (int(match.group(3)), int(match.group(4)))
            if current is None:
                factors.append((var,))
            else:
                current.append(var)
    if current is not None:
        raise ValueError("unbalanced bracket")
    return ProperProduct(tuple(factors))


def multidegree_variables(l: Sequence[int]) -> list[Variable]:
    """Variables of multidegree ``l``: degree d carries indices 1..l[d]."""
    return [(d, i) for d, count in enumerate(l) for i in range(1, count + 1)]
