"""Brute-force ground truth used to validate the structural machinery.

Everything here works by direct scanning: values on coprime argument grids,
divisors by trial division, equivalences by exhausting bounded substitution
matrices.  Nothing depends on the reduction or cycle code, so agreement
between the two sides is evidence, not circularity.

The environment variable FORMES_THREADS (default 1) caps how many worker
processes the divisor scan may use; results are identical at any setting.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .core import FormesError, QuadraticForm, UnimodularTransform
from .enumeration import DivisorTableEntry, Sign, enumerate_divisor_forms


def worker_count() -> int:
    """Parallelism cap from FORMES_THREADS; anything unparsable means 1."""
    try:
        return max(1, int(os.environ.get("FORMES_THREADS", "1")))
    except ValueError:
        return 1


def _ring(k: int):
    # cells with max(|y|, |z|) == k, in descending (y, z) order
    if k == 0:
        yield 0, 0
        return
    for y in range(k, -k - 1, -1):
        if abs(y) == k:
            for z in range(k, -k - 1, -1):
                yield y, z
        else:
            yield y, k
            yield y, -k


def coprime_values(f: QuadraticForm, bound: int) -> set[int]:
    """All values f(y, z) with |y|, |z| <= bound and gcd(y, z) = 1."""
    if bound < 1:
        raise FormesError(f"bound must be positive, got {bound}")
    out = set()
    for y in range(-bound, bound + 1):
        for z in range(-bound, bound + 1):
            if gcd(y, z) == 1:
                out.add(f.evaluate(y, z))
    return out


def _odd_divisors_chunk(args: tuple[int, bool, int, list[tuple[int, int]]]) -> set[int]:
    a, plus, cap, pairs = args
    found: set[int] = set()
    for t, u in pairs:
        v = t * t + a * u * u if plus else t * t - a * u * u
        if v == 0:
            continue
        v = abs(v)
        d = 1
        while d * d <= v:
            if v % d == 0:
                for w in (d, v // d):
                    if w <= cap and w % 2 == 1:
                        found.add(w)
            d += 1
    return found


def odd_divisors(a: int, sign: Sign, t_bound: int, cap: int) -> set[int]:
    """Every odd d <= cap dividing some nonzero t^2 +- a*u^2 with coprime
    |t|, |u| <= t_bound.  Signs of t, u are immaterial, so the scan runs over
    the nonnegative quadrant."""
    if t_bound < 1 or cap < 1:
        raise FormesError("bounds must be positive")
    pairs = [
        (t, u)
        for t in range(t_bound + 1)
        for u in range(t_bound + 1)
        if gcd(t, u) == 1
    ]
    plus = sign is Sign.PLUS
    workers = min(worker_count(), len(pairs))
    if workers > 1:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_odd_divisors_chunk, [(a, plus, cap, ch) for ch in chunks])
            return set().union(*parts)
    return _odd_divisors_chunk((a, plus, cap, pairs))


def represents(f: QuadraticForm, value: int, bound: int) -> tuple[int, int] | None:
    """First coprime (y, z) with f(y, z) == value, scanning rings of growing
    max(|y|, |z|) up to bound (descending (y, z) within a ring), or None."""
    if bound < 1:
        raise FormesError(f"bound must be positive, got {bound}")
    l, m, n = f.l, f.m, f.n
    for k in range(bound + 1):
        for y, z in _ring(k):
            if gcd(y, z) == 1 and l * y * y + m * y * z + n * z * z == value:
                return y, z
    return None


def _representation_table(
    f: QuadraticForm, bound: int, lo: int, hi: int
) -> dict[int, tuple[int, int]]:
    # value -> first witness in represents() scan order, for values in [lo, hi]
    table: dict[int, tuple[int, int]] = {}
    l, m, n = f.l, f.m, f.n
    for k in range(bound + 1):
        for y, z in _ring(k):
            if gcd(y, z) != 1:
                continue
            v = l * y * y + m * y * z + n * z * z
            if lo <= v <= hi and v not in table:
                table[v] = (y, z)
    return table


@dataclass(frozen=True)
class CoverageRow:
    divisor: int
    witness_entry: DivisorTableEntry | None
    witness_args: tuple[int, int] | None


@dataclass(frozen=True)
class CoverageReport:
    a: int
    sign: Sign
    t_bound: int
    divisor_cap: int
    rep_bound: int
    rows: tuple[CoverageRow, ...]
    failures: int


def coverage_report(
    a: int,
    sign: Sign,
    t_bound: int = 50,
    cap: int = 500,
    rep_bound: int = 60,
) -> CoverageReport:
    """Check that every scanned odd divisor is represented by some listed form.

    For each odd divisor found by the grid scan, the enumerated candidate
    forms are tried in order and the first representation within rep_bound is
    recorded; a divisor no form represents counts as a failure.  At adequate
    bounds the failure count is zero: that is the whole point of the lists.
    """
    entries = enumerate_divisor_forms(a, sign, odd_only=True)
    tables = [
        (e, _representation_table(e.form(), rep_bound, 1, cap)) for e in entries
    ]
    rows = []
    failures = 0
    for d in sorted(odd_divisors(a, sign, t_bound, cap)):
        for entry, table in tables:
            if d in table:
                rows.append(CoverageRow(d, entry, table[d]))
                break
        else:
            rows.append(CoverageRow(d, None, None))
            failures += 1
    return CoverageReport(a, sign, t_bound, cap, rep_bound, tuple(rows), failures)


def bruteforce_equivalence(
    f: QuadraticForm, g: QuadraticForm, entry_bound: int
) -> UnimodularTransform | None:
    """Exhaust substitution matrices with entries up to entry_bound.

    Returns the first matrix (columns scanned in descending (y, z) order)
    with determinant +-1 carrying f exactly onto g, or None when the whole
    bounded family fails.  Candidate columns are prefiltered by the two outer
    coefficients of g, which prunes without losing any matrix.
    """
    if f.k != g.k:
        raise FormesError(f"invariants differ: {f.k} vs {g.k}; no transform can exist")
    if entry_bound < 1:
        raise FormesError(f"entry bound must be positive, got {entry_bound}")
    grid = range(entry_bound, -entry_bound - 1, -1)
    first = [(y, z) for y in grid for z in grid if f.evaluate(y, z) == g.l]
    second = [(y, z) for y in grid for z in grid if f.evaluate(y, z) == g.n]
    l, m, n = f.l, f.m, f.n
    for e11, e21 in first:
        for e12, e22 in second:
            if e11 * e22 - e12 * e21 not in (1, -1):
                continue
            mid = 2 * l * e11 * e12 + m * (e11 * e22 + e12 * e21) + 2 * n * e21 * e22
            if mid == g.m:
                return UnimodularTransform(e11, e12, e21, e22)
    return None
