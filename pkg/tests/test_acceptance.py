"""Acceptance criteria 1-9, one PASS/FAIL line each, with wall-clock limits.

Run alone with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import json
import time
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest

from cocharlab.characters import (CharacterSum, MultiCharacter, centralizer_order, lr_general,
                                  mn_character_value, pieri_column, pieri_row)
from cocharlab.engine import (NotGoodMultidegree, gamma_n, strip_sum, xi_multidegree, xi_n)
from cocharlab.grading import (ElementaryGrading, is_good_sequence, phi_good_criterion,
                               t_ideal_generators)
from cocharlab.oracle import GradedMatrixAlgebra, gamma_oracle, is_identity, xi_n_oracle, xi_oracle
from cocharlab.partitions import compositions, hook_dimension, partitions_of
from cocharlab.published import PRINTED_GOOD_SEQUENCES
from cocharlab.report import (Verdict, compare_gradings, dumps_json, emit_comparison, emit_report,
                              engine_vs_oracle_report, generator_list_diff, published_audit)

from conftest import read_golden


def phi(m):
    return GradedMatrixAlgebra(ElementaryGrading.phi(m))


def criterion_1():
    t0 = time.perf_counter()
    for n in range(2, 11):
        assert gamma_n(2, n).total == n - 1
        assert xi_n(2, n) == CharacterSum.irreducible((n - 1, 1))
    engine_time = time.perf_counter() - t0
    assert engine_time < 1.0, f"engine took {engine_time:.2f}s"
    for n in range(2, 7):
        r = xi_n_oracle(phi(2), n)
        assert r.gamma == n - 1
        assert r.xi == CharacterSum.irreducible((n - 1, 1))


def criterion_2():
    A = phi(3)
    assert gamma_oracle(A, (1, 1, 0)) == 1
    assert gamma_oracle(A, (2, 1, 0)) == 2
    assert xi_oracle(A, (2, 1, 0)) == MultiCharacter(
        (2, 1, 0), {((2,), (1,), ()): 1, ((1, 1), (1,), ()): 1})
    for n in range(2, 6):
        l = (n, 0, 0)
        assert xi_oracle(A, l) == MultiCharacter(l, {((n - 1, 1), (), ()): 1})


def criterion_3():
    A = phi(3)
    for n in range(6):
        for l in compositions(n, 3):
            try:
                engine = xi_multidegree(3, l)
            except NotGoodMultidegree:
                engine = MultiCharacter(l)
            oracle = xi_oracle(A, l)
            assert engine == oracle, l
            assert engine.total_dimension() == gamma_oracle(A, l), l
    text = emit_report(engine_vs_oracle_report(3, 5), "json")
    assert text == emit_report(engine_vs_oracle_report(3, 5), "json")
    assert text == read_golden("ut3_engine_vs_oracle.json")


def _named_good(m):
    return {p for eta in PRINTED_GOOD_SEQUENCES[m] for p in permutations(eta)}


def criterion_4():
    for m in (3, 4, 5):
        g = ElementaryGrading.phi(m)
        good = set()
        for length in range(1, m + 1):
            for eta in product(range(1, m), repeat=length):
                ok = is_good_sequence(g, eta)
                assert phi_good_criterion(m, eta) == ok, eta
                if ok:
                    good.add(eta)
        assert good == _named_good(m), m


def criterion_5():
    for m in (3, 4, 5):
        A = phi(m)
        for gen in t_ideal_generators(A.grading):
            assert is_identity(A, gen.product), gen.text
    text = dumps_json([generator_list_diff(m) for m in (3, 4, 5)])
    assert text == read_golden("generator_lists.json")


def criterion_6():
    for n in range(8):
        parts = partitions_of(n)
        table = {lam: {mu: mn_character_value(lam, mu) for mu in parts} for lam in parts}
        for a in parts:
            for b in parts:
                inner = sum(Fraction(table[a][mu] * table[b][mu], centralizer_order(mu))
                            for mu in parts)
                assert inner == (a == b), (a, b)
    for n in range(9):
        assert sum(hook_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
    for n in range(7):
        for mu in partitions_of(n):
            for k in range(1, 5):
                assert pieri_row(mu, k) == lr_general(mu, (k,))
                assert pieri_column(mu, k) == lr_general(mu, (1,) * k)


# Agreement of the printed strip-sum closed forms with direct LR sums, n in 1..12.
# Read literally, the first form is off only on the one-row shape and the
# second is never right; restricted to interleaving shapes both hold from n=1.
STRIP_N = range(1, 13)


def criterion_7():
    for n in STRIP_N:
        first = strip_sum(n, "hook_row")
        assert first.differences() == {(n,): (0, n + 1)}, n
        second = strip_sum(n, "row_hook_row")
        assert not second.agree, n
        assert second.closed == strip_sum(n, "row_hook_row", "triple").closed
        for variant in ("hook_row", "row_hook_row"):
            assert strip_sum(n, variant, "interleaving").agree, (variant, n)


def criterion_8():
    audit = published_audit()
    assert dumps_json(audit) == read_golden("published_audit.json")
    assert {(a["m"], a["n"]) for a in audit} == {(4, 5), (4, 6), (5, 4), (5, 5)}
    assert all(len(a["forms"]) == (2 if a["m"] == 5 else 1) for a in audit)


def criterion_9():
    text = emit_comparison(compare_gradings(3, 4), "json")
    assert text == emit_comparison(compare_gradings(3, 4), "json")
    assert text == read_golden("compare_phi_psi_m3_n4.json")
    data = json.loads(text)
    assert data["verdict"] in {"LE", "GE", "EQ", "INCOMPARABLE"}
    assert [r["key"] for r in data["rows"]] == [
        "(" + ",".join(map(str, lam)) + ")" for lam in partitions_of(4)]


CRITERIA = [
    (1, "UT_2 line, engine and oracle", criterion_1, 120),
    (2, "UT_3 oracle spot values", criterion_2, 120),
    (3, "engine equals oracle on UT_3, total <= 5", criterion_3, None),
    (4, "good zero-free sequences and phi criterion", criterion_4, 10),
    (5, "generators vanish, printed lists diff", criterion_5, 60),
    (6, "character kernel", criterion_6, 60),
    (7, "strip-sum closed forms pinned", criterion_7, None),
    (8, "printed table audit", criterion_8, 30),
    (9, "phi/psi comparison m=3 n=4", criterion_9, 300),
]


def check(fn, limit):
    t0 = time.perf_counter()
    error = None
    try:
        fn()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - t0
    ok = error is None and (limit is None or elapsed < limit)
    return ok, elapsed, error


def line(number, label, ok, elapsed, limit):
    status = "PASS" if ok else "FAIL"
    bound = "no time limit" if limit is None else f"limit {limit}s"
    return f"criterion {number}: {status} ({label}; {elapsed:.2f}s, {bound})"


@pytest.mark.parametrize("number,label,fn,limit", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, label, fn, limit, capsys):
    ok, elapsed, error = check(fn, limit)
    with capsys.disabled():
        print("\n" + line(number, label, ok, elapsed, limit))
    if error is not None:
        raise error
    assert ok, f"took {elapsed:.2f}s"


if __name__ == "__main__":
    failed = 0
    for number, label, fn, limit in CRITERIA:
        ok, elapsed, _ = check(fn, limit)
        failed += not ok
        print(line(number, label, ok, elapsed, limit))
    raise SystemExit(1 if failed else 0)
