import random

import pytest

from formes import (
    IDENTITY,
    FormesError,
    QuadraticForm,
    Sign,
    UnimodularTransform,
    bruteforce_equivalence,
    coprime_values,
    coverage_report,
    odd_divisors,
    represents,
)
from formes.oracle import _representation_table


def test_coprime_values():
    assert coprime_values(QuadraticForm(1, 0, 1), 2) == {1, 2, 5}
    assert coprime_values(QuadraticForm(2, 2, 3), 1) == {2, 3, 7}
    vals = coprime_values(QuadraticForm(1, 0, -2), 2)
    assert {-2, -1, 1, 2} <= vals


def test_odd_divisors():
    d = odd_divisors(5, Sign.PLUS, 10, 30)
    assert 3 in d and 7 in d  # both divide 21 = 1 + 5*4 = 16 + 5
    assert 5 in odd_divisors(1, Sign.PLUS, 5, 20)
    assert 3 in odd_divisors(7, Sign.MINUS, 10, 30)  # 3 | 4 - 7
    assert all(x % 2 == 1 for x in d)


def test_odd_divisors_parallel_matches_serial(monkeypatch):
    serial = odd_divisors(7, Sign.MINUS, 12, 60)
    monkeypatch.setenv("FORMES_THREADS", "3")
    assert odd_divisors(7, Sign.MINUS, 12, 60) == serial
    monkeypatch.setenv("FORMES_THREADS", "junk")
    assert odd_divisors(7, Sign.MINUS, 12, 60) == serial


def test_represents():
    assert represents(QuadraticForm(2, 2, 3), 7, 5) == (1, 1)
    assert represents(QuadraticForm(1, 0, 5), 1, 5) == (1, 0)
    assert represents(QuadraticForm(1, 0, 1), 3, 25) is None


def test_representation_table_matches_represents():
    rng = random.Random(5)
    for _ in range(20):
        f = QuadraticForm(rng.randint(1, 5), rng.randint(-3, 3), rng.randint(-6, 6))
        table = _representation_table(f, 8, 1, 50)
        for v in range(1, 51):
            assert table.get(v) == represents(f, v, 8)


def test_coverage_report_examples():
    rep = coverage_report(5, Sign.PLUS, 50, 500, 60)
    assert rep.failures == 0

    rep = coverage_report(1, Sign.PLUS, 50, 500, 60)
    assert rep.failures == 0
    assert all(
        (row.witness_entry.p, row.witness_entry.q, row.witness_entry.r) == (1, 0, 1)
        for row in rep.rows
    )

    rep = coverage_report(7, Sign.MINUS, 50, 500, 60)
    assert rep.failures == 0


def test_coverage_rows_are_sorted_odd():
    rep = coverage_report(3, Sign.PLUS, 20, 100, 30)
    ds = [row.divisor for row in rep.rows]
    assert ds == sorted(ds)
    assert all(d % 2 == 1 for d in ds)


def test_bruteforce_equivalence():
    t = bruteforce_equivalence(QuadraticForm(1, 0, -2), QuadraticForm(-1, 0, 2), 2)
    assert t == UnimodularTransform(1, 2, 1, 1)

    f = QuadraticForm(1, 0, 5)
    assert bruteforce_equivalence(f, f, 2) == IDENTITY
    assert bruteforce_equivalence(f, QuadraticForm(2, 2, 3), 10) is None

    with pytest.raises(FormesError):
        bruteforce_equivalence(QuadraticForm(1, 0, 1), QuadraticForm(1, 0, 2), 2)


def test_witness_reduces_into_general_list():
    # reducing any divisor witness lands on a listed triple, up to the sign
    # conventions (middle sign, argument order, global negation)
    from formes import divisor_witness, enumerate_general, reduce_form
    from formes.enumeration import DegenerateFormError, SplitFormError

    def matches(g, triples):
        variants = {
            (g.l, g.m, g.n), (g.l, -g.m, g.n), (g.n, g.m, g.l), (g.n, -g.m, g.l),
            (-g.l, -g.m, -g.n), (-g.l, g.m, -g.n), (-g.n, -g.m, -g.l), (-g.n, g.m, -g.l),
        }
        return any(t in variants for t in triples)

    rng = random.Random(31)
    checks = 0
    while checks < 150:
        f = QuadraticForm(rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-6, 6))
        try:
            listed = enumerate_general(f.l, f.m, f.n)
        except (DegenerateFormError, SplitFormError):
            continue
        t, u = rng.randint(-9, 9), rng.randint(-9, 9)
        from math import gcd as _gcd

        if _gcd(t, u) != 1:
            continue
        value = f.evaluate(t, u)
        if value == 0:
            continue
        divisors = [d for d in range(1, abs(value) + 1) if value % d == 0]
        for a in rng.sample(divisors, min(2, len(divisors))):
            w = divisor_witness(f, t, u, a)
            g, _ = reduce_form(w.form)
            assert matches(g, listed), f"{f} at ({t},{u}), divisor {a}: {g} not listed"
            checks += 1


def test_bruteforce_agrees_with_transform_action():
    rng = random.Random(9)
    from formes import apply_transform

    for _ in range(50):
        f = QuadraticForm(rng.randint(1, 4), rng.randint(-2, 2), rng.randint(-4, 4))
        t = UnimodularTransform(1, rng.randint(-2, 2), 0, 1)
        g = apply_transform(f, t)
        found = bruteforce_equivalence(f, g, 4)
        assert found is not None
        assert apply_transform(f, found) == g
