"""Reference tables for UT_2 .. UT_5 under the phi-grading, stored as printed.

Nothing here is corrected. Where two printed rules cover the same shape both
are returned, and where a printed shape is degenerate at a given n it is
dropped and recorded. Reconciliation is the job of the discrepancy report.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .characters import CharacterSum
from .partitions import (Partition, format_partition, hook_dimension, normalize_shape,
                         partitions_of)

Number = int | Fraction


class PatternNotCovered(LookupError):
    """No printed rule covers the query."""


@dataclass(frozen=True)
class PublishedValue:
    source: str
    value: Number
    rule: str

    def to_json(self) -> dict:
        return {"source": self.source, "value": json_number(self.value)}


def json_number(x: Number | str):
    if isinstance(x, str):
        return x
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


# Shape templates such as "(a,b,1^2)" or "(b+1,b)". Each entry is an integer,
# a variable with an optional offset, or "1^k".

_ENTRY = re.compile(r"^([ab])([+-]\d+)?$")


def _expand(template: str) -> list[str]:
    out: list[str] = []
    for entry in template.strip("()").split(","):
        if "^" in entry:
            base, k = entry.split("^")
            out += [base] * int(k)
        else:
            out.append(entry)
    return out


def _bind(template: str, lam: Partition) -> dict[str, int] | None:
    entries = _expand(template)
    if len(entries) != len(lam):
        return None
    env: dict[str, int] = {}
    for entry, part in zip(entries, lam):
        match = _ENTRY.match(entry)
        if match is None:
            if int(entry) != part:
                return None
            continue
        var, off = match.group(1), int(match.group(2) or 0)
        if env.setdefault(var, part - off) != part - off:
            return None
    return env


@dataclass(frozen=True)
class Rule:
    """One printed line: value, shape template and side condition."""

    template: str
    condition: str
    formula: str
    value: Callable[..., Number]
    holds: Callable[..., bool] = lambda **_: True

    @property
    def text(self) -> str:
        cond = f", {self.condition}" if self.condition else ""
        return f"{self.formula} if lambda={self.template}{cond}"

    def evaluate(self, lam: Partition) -> Number | None:
        env = _bind(self.template, lam)
        if env is None or not self.holds(**env):
            return None
        return self.value(**env)


def _r(template, condition, formula, value, holds=None) -> Rule:
    return Rule(template, condition, formula, value, holds or (lambda **_: True))


UT4_TABLE = "UT4 multiplicity table"
UT5_HOOK_TABLE = "UT5 hook table"
UT5_TWO_ROW_TABLE = "UT5 two-row table"

MULTIPLICITY_RULES: dict[str, list[Rule]] = {
    UT4_TABLE: [
        _r("(a,1)", "a>=4", "a+2", lambda a: a + 2, lambda a: a >= 4),
        _r("(3,2)", "", "6", lambda: 6),
        _r("(a,2)", "a>=4", "3(a-1)", lambda a: 3 * (a - 1), lambda a: a >= 4),
        _r("(b,b)", "b>=3", "5", lambda b: 5, lambda b: b >= 3),
        _r("(b+1,b)", "b>=3", "8", lambda b: 8, lambda b: b >= 3),
        _r("(a,b)", "b>=3, a>=b+2", "4(a-b+1)", lambda a, b: 4 * (a - b + 1),
           lambda a, b: b >= 3 and a >= b + 2),
        _r("(a,1,1)", "a>=2", "3a-2", lambda a: 3 * a - 2, lambda a: a >= 2),
        _r("(2,2,1)", "", "5", lambda: 5),
        _r("(3,2,1)", "", "12", lambda: 12),
        _r("(a,2,1)", "a>3", "7a-9", lambda a: 7 * a - 9, lambda a: a > 3),
        _r("(b,b,1)", "b>3", "9", lambda b: 9, lambda b: b > 3),
        _r("(b+1,b,1)", "b>3", "15", lambda b: 15, lambda b: b > 3),
        _r("(a,b,1)", "b>=3, a>=b+2", "8(a-b+1)", lambda a, b: 8 * (a - b + 1),
           lambda a, b: b >= 3 and a >= b + 2),
        _r("(b,b,2)", "b>=2", "5", lambda b: 5, lambda b: b >= 2),
        _r("(a,b,2)", "a>=b+2", "5(a-b+1)", lambda a, b: 5 * (a - b + 1),
           lambda a, b: a >= b + 2),
        _r("(1^4)", "", "1", lambda: 1),
        _r("(a,1^3)", "a>=2", "3a-2", lambda a: 3 * a - 2, lambda a: a >= 2),
        _r("(b,b,1^2)", "", "5", lambda b: 5),
        _r("(a,b,1^2)", "a>=b+1, b>=2", "5(a-b+1)", lambda a, b: 5 * (a - b + 1),
           lambda a, b: a >= b + 1 and b >= 2),
        _r("(a,b,2,1)", "a>=b+1, b>=2", "2(a-b+1)", lambda a, b: 2 * (a - b + 1),
           lambda a, b: a >= b + 1 and b >= 2),
        _r("(a,b,3)", "a>=b+1, b>=3", "a-b+1", lambda a, b: a - b + 1,
           lambda a, b: a >= b + 1 and b >= 3),
    ],
    UT5_HOOK_TABLE: [
        _r("(a,1)", "a>=3", "a^2-2a+11", lambda a: a * a - 2 * a + 11, lambda a: a >= 3),
        _r("(3,1^2)", "", "23", lambda: 23),
        _r("(a,1^2)", "a>=4", "3a^2-3a+5", lambda a: 3 * a * a - 3 * a + 5, lambda a: a >= 4),
        _r("(2,1^3)", "", "17", lambda: 17),
        _r("(3,1^3)", "", "34", lambda: 34),
        _r("(a,1^3)", "a>=4", "4a^2-a", lambda a: 4 * a * a - a, lambda a: a >= 4),
        _r("(1^5)", "", "3", lambda: 3),
        _r("(2,1^4)", "", "12", lambda: 12),
        _r("(a,1^4)", "a>=3", "3a^2-2a+2", lambda a: 3 * a * a - 2 * a + 2, lambda a: a >= 3),
        _r("(1^6)", "", "2", lambda: 2),
        _r("(a,1^5)", "a>=2", "2a^2", lambda a: 2 * a * a, lambda a: a >= 2),
        _r("(a,1^6)", "a>=1", "a(a+1)/2", lambda a: Fraction(a * (a + 1), 2), lambda a: a >= 1),
    ],
    UT5_TWO_ROW_TABLE: [
        _r("(3,2)", "", "10", lambda: 10),
        _r("(4,2)", "", "37", lambda: 37),
        _r("(a,2)", "a>=5", "(7a^2-11a+6)/2", lambda a: Fraction(7 * a * a - 11 * a + 6, 2),
           lambda a: a >= 5),
        _r("(3,3)", "", "18", lambda: 18),
        _r("(4,3)", "", "52", lambda: 52),
        _r("(5,3)", "", "102", lambda: 102),
        _r("(a,3)", "a>=6", "7a^2-13a-6", lambda a: 7 * a * a - 13 * a - 6, lambda a: a >= 6),
        _r("(a,a)", "a>=4", "3a^2+1", lambda a: 3 * a * a + 1, lambda a: a >= 4),
        _r("(a,a-1)", "a>=5", "6a^2-6a-5", lambda a: 6 * a * a - 6 * a - 5, lambda a: a >= 5),
        _r("(a,a-2)", "a>=6", "3(3a^2-6a-4)", lambda a: 3 * (3 * a * a - 6 * a - 4),
           lambda a: a >= 6),
        _r("(a,b)", "a,b>=3, a-b>=3", "(5a^2b-5ab^2+12ab-3a^2-3b^2+2b-2a-2)/2",
           lambda a, b: Fraction(5 * a * a * b - 5 * a * b * b + 12 * a * b
                                 - 3 * a * a - 3 * b * b + 2 * b - 2 * a - 2, 2),
           lambda a, b: a >= 3 and b >= 3 and a - b >= 3),
    ],
}

# Tables that give a whole character as shapes depending on n, valid for n >= 2.
# A shape not produced by any template has multiplicity 0.
UT2_CHARACTER = "UT2 character formula"
UT3_CHARACTER = "UT3 character formula"

CHARACTER_TEMPLATES: dict[str, list[tuple[int, str, Callable[[int], tuple[int, ...]]]]] = {
    UT2_CHARACTER: [(1, "(n-1,1)", lambda n: (n - 1, 1))],
    UT3_CHARACTER: [
        (2, "(n-1,1)", lambda n: (n - 1, 1)),
        (1, "(n-2,1^2)", lambda n: (n - 2, 1, 1)),
        (1, "(n-2,2)", lambda n: (n - 2, 2)),
    ],
}

TABLES_BY_ORDER: dict[int, list[str]] = {
    2: [UT2_CHARACTER],
    3: [UT3_CHARACTER],
    4: [UT4_TABLE],
    5: [UT5_HOOK_TABLE, UT5_TWO_ROW_TABLE],
}


@dataclass(frozen=True)
class GammaFormula:
    source: str
    text: str
    min_n: int
    value: Callable[[int], int]


GAMMA_FORMULAS: dict[int, list[GammaFormula]] = {
    2: [GammaFormula("UT2 gamma", "n-1", 2, lambda n: n - 1)],
    3: [GammaFormula("UT3 gamma", "2n-1", 2, lambda n: 2 * n - 1)],
    4: [GammaFormula("UT4 gamma", "3n+2^{n-2}n(n-1)-1", 2,
                     lambda n: 3 * n + 2 ** (n - 2) * n * (n - 1) - 1)],
    5: [
        # the leading "32^{n-3}" is read as 3*2^{n-3}
        GammaFormula("UT5 gamma (statement form)",
                     "4n+n(n-1)+3*2^{n-3}n(n-1)+3^{n-3}n(n-1)(n-2)-1", 3,
                     lambda n: 4 * n + n * (n - 1) + 3 * 2 ** (n - 3) * n * (n - 1)
                     + 3 ** (n - 3) * n * (n - 1) * (n - 2) - 1),
        GammaFormula("UT5 gamma (proof form)",
                     "4n+2^{n-1}n(n-1)+3^{n-3}n(n-1)(n-2)-1", 3,
                     lambda n: 4 * n + 2 ** (n - 1) * n * (n - 1)
                     + 3 ** (n - 3) * n * (n - 1) * (n - 2) - 1),
    ],
}


def _component_gammas() -> dict[int, list[tuple[Callable[[int], tuple[int, ...]], str, Callable[[int], int]]]]:
    """Printed component dimensions, as (multidegree at n, text, value at n)."""
    def zero(m):
        return (lambda n: (n,) + (0,) * (m - 1), "n-1", lambda n: n - 1)

    table = {m: [zero(m)] for m in (2, 3, 4, 5)}
    table[3].append((lambda n: (n - 1, 1, 0), "1", lambda n: 1))
    table[4] += [
        (lambda n: (n - 1, 1, 0, 0), "1", lambda n: 1),
        (lambda n: (n - 1, 0, 1, 0), "1", lambda n: 1),
        (lambda n: (n - 2, 2, 0, 0), "2^{n-1}", lambda n: 2 ** (n - 1)),
    ]
    table[5] += [
        (lambda n: (n - 1, 1, 0, 0, 0), "1", lambda n: 1),
        (lambda n: (n - 1, 0, 1, 0, 0), "1", lambda n: 1),
        (lambda n: (n - 1, 0, 0, 1, 0), "1", lambda n: 1),
        (lambda n: (n - 2, 2, 0, 0, 0), "2^{n-1}", lambda n: 2 ** (n - 1)),
        (lambda n: (n - 2, 1, 1, 0, 0), "2^{n-1}", lambda n: 2 ** (n - 1)),
        (lambda n: (n - 3, 3, 0, 0, 0), "2*3^{n-2}", lambda n: 2 * 3 ** (n - 2)),
    ]
    return table


COMPONENT_GAMMAS = _component_gammas()

# Upper bounds on ordinary multiplicities of (n-2,1^2), as printed.
MULTIPLICITY_BOUNDS: dict[int, tuple[str, str, Callable[[int], int]]] = {
    3: ("UT3 ordinary bound", "3n-6", lambda n: 3 * n - 6),
    4: ("UT4 ordinary bound", "2n^2-5n-7", lambda n: 2 * n * n - 5 * n - 7),
}


def _check_order(m: int) -> None:
    if m not in TABLES_BY_ORDER:
        raise PatternNotCovered(f"no printed tables for m={m}")


def published_gamma(m: int, n: int) -> list[PublishedValue]:
    _check_order(m)
    out = [PublishedValue(f.source, f.value(n), f.text) for f in GAMMA_FORMULAS[m] if n >= f.min_n]
    if not out:
        raise PatternNotCovered(f"printed gamma formulas for m={m} need n >= {GAMMA_FORMULAS[m][0].min_n}")
    return out


def published_component_gamma(m: int, l: Sequence[int]) -> list[PublishedValue]:
    _check_order(m)
    l = tuple(l)
    n = sum(l)
    out = [PublishedValue(f"UT{m} component dimension", value(n), text)
           for shape, text, value in COMPONENT_GAMMAS[m]
           if n >= 1 and min(shape(n)) >= 0 and shape(n) == l]
    if not out:
        raise PatternNotCovered(f"no printed dimension for multidegree {l}")
    return out


def published_multiplicity(m: int, lam: Sequence[int]) -> list[PublishedValue]:
    """Every printed value for m_lambda, one entry per matching rule."""
    _check_order(m)
    lam = tuple(lam)
    n = sum(lam)
    out: list[PublishedValue] = []
    for source in TABLES_BY_ORDER[m]:
        if source in CHARACTER_TEMPLATES:
            if n < 2:
                continue
            total = sum(c for c, _, shape in CHARACTER_TEMPLATES[source]
                        if normalize_shape(shape(n)) == lam)
            rule = " + ".join(f"{c}[{t}]" for c, t, _ in CHARACTER_TEMPLATES[source])
            out.append(PublishedValue(source, total, rule))
            continue
        for rule in MULTIPLICITY_RULES[source]:
            value = rule.evaluate(lam)
            if value is not None:
                out.append(PublishedValue(source, value, rule.text))
    if not out:
        raise PatternNotCovered(f"no printed rule for m={m}, lambda={format_partition(lam)}")
    return out


def published_value(m: int, query: int | Sequence[int]) -> list[PublishedValue]:
    """``query`` is n for gamma_n or a partition for m_lambda."""
    if isinstance(query, int):
        return published_gamma(m, query)
    return published_multiplicity(m, query)


@dataclass
class PublishedCharacter:
    m: int
    n: int
    values: dict[Partition, Number] = field(default_factory=dict)
    uncovered: list[Partition] = field(default_factory=list)
    conflicts: dict[Partition, list[PublishedValue]] = field(default_factory=dict)
    degenerate: list[str] = field(default_factory=list)

    def weighted_dimension(self) -> Fraction:
        return sum((Fraction(v) * hook_dimension(lam) for lam, v in self.values.items()),
                   Fraction(0))

    def character(self) -> CharacterSum:
        """Integral nonnegative part as a character; other values are skipped."""
        terms = {lam: int(v) for lam, v in self.values.items()
                 if Fraction(v).denominator == 1 and v > 0}
        return CharacterSum(self.n, terms)


def published_character(m: int, n: int) -> PublishedCharacter:
    """Printed multiplicities for every partition of n.

    The first matching rule wins; overlaps go to ``conflicts`` and shapes no
    rule covers go to ``uncovered``.
    """
    _check_order(m)
    out = PublishedCharacter(m, n)
    for source in TABLES_BY_ORDER[m]:
        if source in CHARACTER_TEMPLATES and n >= 2:
            for c, text, shape in CHARACTER_TEMPLATES[source]:
                if normalize_shape(shape(n)) is None:
                    out.degenerate.append(f"{c}[{text}] at n={n} is {shape(n)}")
    for lam in partitions_of(n):
        try:
            found = published_multiplicity(m, lam)
        except PatternNotCovered:
            out.uncovered.append(lam)
            continue
        if len(found) > 1:
            out.conflicts[lam] = found
        if found[0].value:
            out.values[lam] = found[0].value
    return out


def published_bound(m: int, n: int) -> PublishedValue:
    if m not in MULTIPLICITY_BOUNDS:
        raise PatternNotCovered(f"no printed ordinary bound for m={m}")
    source, text, value = MULTIPLICITY_BOUNDS[m]
    return PublishedValue(source, value(n), text)


# Printed generator and bad-sequence lists. Generators are kept in their
# printed spelling; bare letters carry index 1.

PRINTED_GENERATORS: dict[int, list[str]] = {
    3: ["[y1,y2]*[y3,y4]", "z1*z2", "z*[y1,y2]"],
    4: ["[y1,y2]*[y3,y4]", "z*t", "[y1,y2]*z", "t1*t2", "t*[y1,y2]", "z1*z2*z3"],
    5: ["[y1,y2]*[y3,y4]", "z*[y1,y2]", "z*r", "t*[y1,y2]", "t1*t2", "t*r",
        "r*[y1,y2]", "r*z", "r*t", "r1*r2", "z1*z2*t", "z1*z2*r", "z1*t*z2",
        "t*z1*z2", "t1*z*t2"],
}

PRINTED_BAD_SEQUENCES: dict[int, list[tuple[int, ...]]] = {
    3: [(0, 0), (0, 1), (1, 1)],
    4: [(0, 0), (0, 1), (1, 2), (2, 2), (0, 2, 0), (1, 1, 1), (2, 0, 2)],
    5: [(0, 0), (1, 0), (1, 3), (2, 0), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2),
        (3, 3), (1, 1, 2), (1, 1, 3), (1, 2, 1), (2, 1, 1), (2, 1, 2)],
}

# Good zero-free sequences named for each order (m=5 lists one of (1,2), (2,1)).
PRINTED_GOOD_SEQUENCES: dict[int, list[tuple[int, ...]]] = {
    3: [(1,)],
    4: [(1,), (2,), (1, 1)],
    5: [(1,), (2,), (3,), (1, 1), (1, 2), (1, 1, 1)],
}
