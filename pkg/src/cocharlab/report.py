"""Engine / printed / oracle comparison reports and their serializations.

Verdicts are phrased relative to the oracle column:

* ALL_AGREE: engine and every printed value equal the oracle
* ENGINE_ORACLE_AGREE: the engine equals the oracle, some printed value does not
  (or nothing is printed)
* PUBLISHED_ONLY: a printed value equals the oracle, the engine does not
* ORACLE_ONLY: nothing equals the oracle
* UNTESTED: no oracle value
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .characters import CharacterSum, MultiCharacter
from .engine import (NotGoodMultidegree, dominance_compare, gamma_n, xi_multidegree,
                     xi_n)
from .grading import (ElementaryGrading, bad_sequences, generator_product,
                      is_good_sequence)
from .oracle import DEFAULT_CAP, GradedMatrixAlgebra, is_identity, xi_n_oracle, xi_oracle
from .partitions import compositions, format_partition, partitions_of
from .products import parse_product
from .published import (PRINTED_BAD_SEQUENCES, PRINTED_GENERATORS, PatternNotCovered,
                        PublishedValue, json_number, published_character,
                        published_component_gamma, published_gamma,
                        published_multiplicity)

SCHEMA = 1

Value = Union[int, Fraction, str, None]


class Verdict(str, Enum):
    ALL_AGREE = "ALL_AGREE"
    ENGINE_ORACLE_AGREE = "ENGINE_ORACLE_AGREE"
    PUBLISHED_ONLY = "PUBLISHED_ONLY"
    ORACLE_ONLY = "ORACLE_ONLY"
    UNTESTED = "UNTESTED"


def _same(a: Value, b: Value) -> bool:
    if a is None or b is None:
        return False
    if isinstance(a, str) or isinstance(b, str):
        return a == b
    return Fraction(a) == Fraction(b)


def verdict_for(engine: Value, published: Sequence[PublishedValue], oracle: Value) -> Verdict:
    if oracle is None:
        return Verdict.UNTESTED
    engine_ok = _same(engine, oracle)
    printed_ok = [_same(p.value, oracle) for p in published]
    if engine_ok and printed_ok and all(printed_ok):
        return Verdict.ALL_AGREE
    if engine_ok:
        return Verdict.ENGINE_ORACLE_AGREE
    if any(printed_ok):
        return Verdict.PUBLISHED_ONLY
    return Verdict.ORACLE_ONLY


@dataclass
class ReportRow:
    key: str
    engine: Value = None
    published: list[PublishedValue] = field(default_factory=list)
    oracle: Value = None

    @property
    def verdict(self) -> Verdict:
        return verdict_for(self.engine, self.published, self.oracle)

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "engine": _json_value(self.engine),
            "published": [p.to_json() for p in self.published],
            "oracle": _json_value(self.oracle),
            "verdict": self.verdict.value,
        }


def _json_value(v: Value):
    if v is None or isinstance(v, str):
        return v
    return json_number(v)


@dataclass
class DiscrepancyReport:
    m: int
    grading: str
    rows: list[ReportRow] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"schema": SCHEMA, "m": self.m, "grading": self.grading}
        out.update(self.extra)
        out["rows"] = [r.to_json() for r in self.rows]
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def row(self, key: str) -> ReportRow:
        for r in self.rows:
            if r.key == key:
                return r
        raise KeyError(key)


# Serialization

CSV_COLUMNS = ["key", "engine", "published", "oracle", "verdict"]


def _text(v: Value) -> str:
    v = _json_value(v)
    return "" if v is None else str(v)


def _published_text(published: Sequence[PublishedValue]) -> str:
    return "; ".join(f"{p.source}={_text(p.value)}" for p in published)


def _latex_escape(s: str) -> str:
    for a, b in (("\\", r"\textbackslash{}"), ("&", r"\&"), ("%", r"\%"), ("_", r"\_"),
                 ("#", r"\#"), ("^", r"\^{}"), ("{", r"\{"), ("}", r"\}")):
        s = s.replace(a, b)
    return s


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def emit_report(report: DiscrepancyReport, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps_json(report.to_json())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in report.rows:
            writer.writerow([r.key, _text(r.engine), _published_text(r.published),
                             _text(r.oracle), r.verdict.value])
        return buf.getvalue()
    if fmt == "latex":
        lines = [f"% m={report.m}, grading={report.grading}, schema {SCHEMA}"]
        lines += [f"% {_latex_escape(note)}" for note in report.notes]
        lines += [r"\begin{tabular}{lllll}", r"\hline",
                  r"key & engine & published & oracle & verdict \\", r"\hline"]
        for r in report.rows:
            cells = [r.key, _text(r.engine), _published_text(r.published), _text(r.oracle),
                     r.verdict.value]
            lines.append(" & ".join(_latex_escape(c) for c in cells) + r" \\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# Report builders

def is_phi(g: ElementaryGrading) -> bool:
    return g.m >= 2 and g.tuple == ElementaryGrading.phi(g.m).tuple


def _printed(fn, *args) -> list[PublishedValue]:
    try:
        return fn(*args)
    except PatternNotCovered:
        return []


def gamma_key(n: int) -> str:
    return f"gamma n={n}"


def multiplicity_key(lam: Sequence[int], n: int) -> str:
    return f"m{format_partition(lam)} n={n}"


def component_key(l: Sequence[int]) -> str:
    return f"gamma l={format_partition(l)}"


def multikey(l: Sequence[int], key: Sequence[Sequence[int]]) -> str:
    return f"xi l={format_partition(l)} " + "x".join(format_partition(lam) for lam in key)


def degree_report(grading: ElementaryGrading, n: int, *, with_engine: bool = True,
                  with_published: bool = True, with_oracle: bool = True,
                  cap: int = DEFAULT_CAP) -> DiscrepancyReport:
    """Rows for gamma_n, every m_lambda with lambda |- n, and each component dimension.

    The engine and the printed tables only describe the phi-grading and are
    left empty for other gradings. The oracle column is filled when n <= cap.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = grading.m
    phi = is_phi(grading)
    with_engine = with_engine and phi
    with_published = with_published and phi and m in (2, 3, 4, 5)
    report = DiscrepancyReport(m, grading.label)

    engine_xi = engine_gamma = None
    if with_engine:
        engine_xi = xi_n(m, n)
        engine_gamma = gamma_n(m, n)
    oracle = None
    if with_oracle and n <= cap:
        oracle = xi_n_oracle(GradedMatrixAlgebra(grading), n, cap)

    report.rows.append(ReportRow(
        gamma_key(n),
        engine_gamma.total if engine_gamma else None,
        _printed(published_gamma, m, n) if with_published else [],
        oracle.gamma if oracle else None))

    if with_published and n >= 1:
        pc = published_character(m, n)
        report.notes += [f"degenerate printed shape dropped: {d}" for d in pc.degenerate]
        if pc.uncovered:
            report.notes.append(f"no printed rule at n={n} for "
                                + " ".join(format_partition(lam) for lam in pc.uncovered))
        for lam, found in pc.conflicts.items():
            report.notes.append(f"overlapping printed rules for {format_partition(lam)}: "
                                + ", ".join(_text(p.value) for p in found))

    for lam in partitions_of(n):
        report.rows.append(ReportRow(
            multiplicity_key(lam, n),
            engine_xi[lam] if engine_xi is not None else None,
            _printed(published_multiplicity, m, lam) if with_published else [],
            oracle.xi[lam] if oracle else None))

    for l in compositions(n, m):
        engine = None
        if with_engine:
            engine = engine_gamma.breakdown.get(l, 0)
        printed = _printed(published_component_gamma, m, l) if with_published else []
        value = oracle.breakdown.get(l) if oracle else None
        if not (engine or printed or value):
            continue
        report.rows.append(ReportRow(component_key(l), engine, printed, value))
    return report


def multidegree_report(grading: ElementaryGrading, l: Sequence[int], *,
                       with_engine: bool = True, with_oracle: bool = True,
                       cap: int = DEFAULT_CAP, strict: bool = False) -> DiscrepancyReport:
    """Rows for gamma_l and each key of xi_l.

    Outside the engine's range xi_l is taken as 0, unless ``strict``.
    """
    m = grading.m
    l = tuple(l)
    if len(l) != m:
        raise ValueError(f"multidegree must have {m} entries")
    report = DiscrepancyReport(m, grading.label)
    engine = None
    if with_engine and is_phi(grading):
        try:
            engine = xi_multidegree(m, l)
        except NotGoodMultidegree as exc:
            if strict:
                raise
            engine = MultiCharacter(l)
            report.notes.append(f"engine: {exc}; taken as 0")
    oracle = xi_oracle(GradedMatrixAlgebra(grading), l, cap) if with_oracle else None
    printed = _printed(published_component_gamma, m, l) if is_phi(grading) and m <= 5 else []
    report.rows.append(ReportRow(
        component_key(l),
        engine.total_dimension() if engine is not None else None,
        printed,
        oracle.total_dimension() if oracle is not None else None))
    keys = set(engine.terms if engine is not None else ()) | set(oracle.terms if oracle is not None else ())
    for key in sorted(keys, reverse=True):
        report.rows.append(ReportRow(
            multikey(l, key),
            engine[key] if engine is not None else None,
            [],
            oracle[key] if oracle is not None else None))
    return report


def engine_vs_oracle_report(m: int, max_total: int, cap: int = DEFAULT_CAP) -> DiscrepancyReport:
    """Per-multidegree engine/oracle comparison for the phi-grading, all totals <= max_total."""
    grading = ElementaryGrading.phi(m)
    A = GradedMatrixAlgebra(grading)
    report = DiscrepancyReport(m, grading.label)
    for n in range(max_total + 1):
        for l in compositions(n, m):
            try:
                engine = xi_multidegree(m, l)
            except NotGoodMultidegree:
                engine = MultiCharacter(l)
            oracle = xi_oracle(A, l, cap)
            report.rows.append(ReportRow(component_key(l), engine.total_dimension(), [],
                                         oracle.total_dimension()))
            for key in sorted(set(engine.terms) | set(oracle.terms), reverse=True):
                report.rows.append(ReportRow(multikey(l, key), engine[key], [], oracle[key]))
    return report


def character_report(grading: ElementaryGrading, n: int, chi: CharacterSum | None, gamma: int | None,
                     column: str) -> DiscrepancyReport:
    """Single-column output for ``compute`` and ``oracle``."""
    report = DiscrepancyReport(grading.m, grading.label)
    report.extra = {"n": n, "gamma": gamma, "xi": chi.to_json() if chi is not None else None}
    rows = [ReportRow(gamma_key(n))] + [ReportRow(multiplicity_key(lam, n)) for lam in partitions_of(n)]
    values = [gamma] + [chi[lam] for lam in partitions_of(n)]
    for row, v in zip(rows, values):
        setattr(row, column, v)
    report.rows = rows
    return report


def tables_report(m: int, n: int | None = None, lam: Sequence[int] | None = None) -> DiscrepancyReport:
    """Printed values only. Raises PatternNotCovered for a single uncovered query."""
    report = DiscrepancyReport(m, "phi")
    if lam is not None:
        lam = tuple(lam)
        found = published_multiplicity(m, lam)
        report.rows.append(ReportRow(multiplicity_key(lam, sum(lam)), published=found))
        report.notes += [f"{p.source}: {p.rule}" for p in found]
        return report
    assert n is not None
    found = published_gamma(m, n)
    report.rows.append(ReportRow(gamma_key(n), published=found))
    pc = published_character(m, n)
    for lam in partitions_of(n):
        report.rows.append(ReportRow(multiplicity_key(lam, n),
                                     published=_printed(published_multiplicity, m, lam)))
    report.notes += [f"degenerate printed shape dropped: {d}" for d in pc.degenerate]
    report.notes += [f"{p.source}: {p.rule}" for p in found]
    return report


# Bad sequences and generators

def _classify(g: ElementaryGrading, eta: Sequence[int]) -> str:
    return "good" if is_good_sequence(g, eta) else "bad"


def _product_sequence(text: str, m: int) -> tuple[int, ...]:
    """Degree sequence of a printed generator: 0 for a commutator slot."""
    p = parse_product(text)
    return tuple(0 if len(f) > 1 else f[0][0] % m for f in p.factors)


def badseq_report(grading: ElementaryGrading, max_len: int | None = None,
                  with_oracle: bool = True) -> DiscrepancyReport:
    """Good/bad classification per sequence.

    Rows cover the computed minimal bad sequences and, for the phi-grading,
    every sequence named in the printed lists. The oracle column says whether
    the generator of the sequence vanishes on the algebra.
    """
    m = grading.m
    limit = m if max_len is None else max_len
    computed = bad_sequences(grading, limit)
    rows: dict[tuple[int, ...], list[PublishedValue]] = {eta: [] for eta in computed}
    if is_phi(grading) and m in PRINTED_BAD_SEQUENCES:
        for eta in PRINTED_BAD_SEQUENCES[m]:
            rows.setdefault(eta, []).append(PublishedValue("printed bad-sequence list", "bad", ""))
        for text in PRINTED_GENERATORS[m]:
            eta = _product_sequence(text, m)
            rows.setdefault(eta, []).append(PublishedValue("printed generator list", "bad", text))
    A = GradedMatrixAlgebra(grading)
    report = DiscrepancyReport(m, grading.label)
    report.extra = {"generators": [{"sequence": format_partition(eta),
                                    "generator": str(generator_product(eta))} for eta in computed]}
    for eta in sorted(rows, key=lambda e: (len(e), e)):
        oracle = None
        if with_oracle:
            oracle = "bad" if is_identity(A, generator_product(eta)) else "good"
        report.rows.append(ReportRow(format_partition(eta), _classify(grading, eta),
                                     rows[eta], oracle))
    return report


def generator_list_diff(m: int) -> dict:
    """Computed minimal lists for the phi-grading against the printed ones."""
    g = ElementaryGrading.phi(m)
    A = GradedMatrixAlgebra(g)
    computed = bad_sequences(g, m)
    computed_set = set(computed)
    printed = PRINTED_BAD_SEQUENCES[m]

    def status(eta):
        if is_good_sequence(g, eta):
            return "good"
        return "minimal bad" if eta in computed_set else "bad, not minimal"

    def fmt(eta):
        return format_partition(eta)

    computed_generators = [str(generator_product(eta)) for eta in computed]
    printed_generators = []
    for text in PRINTED_GENERATORS[m]:
        p = parse_product(text)
        eta = _product_sequence(text, m)
        printed_generators.append({
            "printed": text,
            "normalized": str(p),
            "sequence": fmt(eta),
            "sequence_status": status(eta),
            "identity": is_identity(A, p),
        })
    printed_seqs_from_generators = {_product_sequence(t, m) for t in PRINTED_GENERATORS[m]}
    return {
        "m": m,
        "grading": g.label,
        "computed_minimal_bad": [fmt(e) for e in computed],
        "computed_generators": computed_generators,
        "printed_bad_sequences": [{"sequence": fmt(e), "status": status(e)} for e in printed],
        "missing_from_printed_sequences": [fmt(e) for e in computed if e not in set(printed)],
        "missing_from_printed_generators": [fmt(e) for e in computed
                                            if e not in printed_seqs_from_generators],
        "printed_generators": printed_generators,
    }


# Printed-table audit

def published_audit(cases: Sequence[tuple[int, int]] = ((4, 5), (4, 6), (5, 4), (5, 5))) -> list[dict]:
    """Each printed gamma form against sum m_lambda f_lambda over the printed table.

    Engine gamma is listed alongside. Shapes no printed rule covers count 0
    and are listed.
    """
    out = []
    for m, n in cases:
        pc = published_character(m, n)
        table_sum = pc.weighted_dimension()
        forms = published_gamma(m, n)
        entry = {
            "m": m,
            "n": n,
            "table_dimension_sum": json_number(table_sum),
            "uncovered": [format_partition(lam) for lam in pc.uncovered],
            "engine_gamma": gamma_n(m, n).total,
            "forms": [{"source": f.source, "value": json_number(f.value),
                       "matches_table_sum": Fraction(f.value) == table_sum,
                       "matches_engine": f.value == gamma_n(m, n).total}
                      for f in forms],
        }
        if len(forms) == 2:
            entry["forms_agree"] = forms[0].value == forms[1].value
        out.append(entry)
    return out


# Grading comparison

CONJECTURE_TAG = "psi-dominance conjecture: m_lambda(any grading) <= m_lambda(psi)"


@dataclass
class GradingComparison:
    m: int
    n: int
    gradings: tuple[str, str]
    first: CharacterSum
    second: CharacterSum
    gammas: tuple[int, int]

    @property
    def comparison(self):
        return dominance_compare(self.first, self.second)

    def to_json(self) -> dict:
        cmp = self.comparison
        rows = []
        for lam in partitions_of(self.n):
            rows.append({"key": format_partition(lam), self.gradings[0]: self.first[lam],
                         self.gradings[1]: self.second[lam],
                         "diff": self.second[lam] - self.first[lam]})
        return {
            "schema": SCHEMA,
            "m": self.m,
            "n": self.n,
            "gradings": list(self.gradings),
            "conjecture": CONJECTURE_TAG,
            "gamma": {self.gradings[0]: self.gammas[0], self.gradings[1]: self.gammas[1]},
            "verdict": cmp.verdict.value,
            "diff": {format_partition(lam): d for lam, d in cmp.diff.items()},
            "rows": rows,
        }


def compare_gradings(m: int, n: int, gradings: Sequence[str] = ("phi", "psi"),
                     cap: int = DEFAULT_CAP) -> GradingComparison:
    g1, g2 = (ElementaryGrading.parse(m, s) for s in gradings)
    r1 = xi_n_oracle(GradedMatrixAlgebra(g1), n, cap)
    r2 = xi_n_oracle(GradedMatrixAlgebra(g2), n, cap)
    return GradingComparison(m, n, (g1.label, g2.label), r1.xi, r2.xi, (r1.gamma, r2.gamma))


def emit_comparison(c: GradingComparison, fmt: str = "json") -> str:
    data = c.to_json()
    a, b = c.gradings
    if fmt == "json":
        return dumps_json(data)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", a, b, "diff"])
        for r in data["rows"]:
            writer.writerow([r["key"], r[a], r[b], r["diff"]])
        writer.writerow(["verdict", "", "", data["verdict"]])
        return buf.getvalue()
    if fmt == "latex":
        lines = [f"% {_latex_escape(CONJECTURE_TAG)}",
                 f"% m={c.m}, n={c.n}, verdict {data['verdict']}",
                 r"\begin{tabular}{lrrr}", r"\hline",
                 f"$\\lambda$ & {a} & {b} & diff \\\\", r"\hline"]
        for r in data["rows"]:
            lines.append(f"{r['key']} & {r[a]} & {r[b]} & {r['diff']} \\\\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
