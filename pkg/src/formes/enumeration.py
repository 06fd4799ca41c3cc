"""Enumeration of the reduced divisor forms of t^2 + a*u^2 and t^2 - a*u^2.

For squarefree a the complete list of candidate divisor forms is finite: the
half middle coefficient q is bounded by 3*q^2 <= a (plus case) or
5*q^2 <= a (minus case), and the outer coefficients are the factor pairs of
a -+ q^2 that are each at least 2*q.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .core import FormClassification, FormesError, QuadraticForm, classify


class Sign(Enum):
    PLUS = "plus"  # numbers t^2 + a*u^2
    MINUS = "minus"  # numbers t^2 - a*u^2 (and a*u^2 - t^2)


class DegenerateFormError(FormesError):
    """k = 4*b*d - c^2 vanishes: the form is a rational square, divisors arbitrary."""

    def __init__(self, classification: FormClassification):
        super().__init__("degenerate form: k = 0, every integer divides some value")
        self.classification = classification


class SplitFormError(FormesError):
    """-k is a perfect square: the form factors into two linear forms."""

    def __init__(self, classification: FormClassification):
        super().__init__(
            f"split form: k = {classification.k} = -{classification.h}^2, "
            "every integer divides some value"
        )
        self.classification = classification


def squarefree_kernel(a: int) -> tuple[int, int]:
    """Write a = a0 * g**2 with a0 squarefree, by trial division."""
    if a < 1:
        raise FormesError(f"need a positive integer, got {a}")
    a0, g = a, 1
    d = 2
    while d * d <= a0:
        while a0 % (d * d) == 0:
            a0 //= d * d
            g *= d
        d += 1
    return a0, g


def q_bound(a: int, sign: Sign) -> int:
    """Largest admissible q: 3*q^2 <= a for PLUS, 5*q^2 <= a for MINUS."""
    if a < 1:
        raise FormesError(f"need a positive integer, got {a}")
    div = 3 if sign is Sign.PLUS else 5
    q = isqrt(a // div)
    assert div * q * q <= a < div * (q + 1) * (q + 1)
    return q


@dataclass(frozen=True)
class DivisorTableEntry:
    """One candidate divisor form: p*y^2 +- 2*q*y*z + r*z^2 (PLUS) or
    p*y^2 +- 2*q*y*z - r*z^2 (MINUS, negated=False) and its negation
    -p*y^2 -+ 2*q*y*z + r*z^2 (MINUS, negated=True)."""

    a: int
    sign: Sign
    p: int
    q: int
    r: int
    negated: bool = False

    def __post_init__(self) -> None:
        ok = (
            self.p >= 1
            and self.r >= self.p
            and self.q >= 0
            and self.p >= 2 * self.q
            and self.r >= 2 * self.q
            and self.q <= q_bound(self.a, self.sign)
        )
        if self.sign is Sign.PLUS:
            ok = ok and self.p * self.r - self.q * self.q == self.a and not self.negated
        else:
            ok = ok and self.p * self.r + self.q * self.q == self.a
        if not ok:
            raise FormesError(f"inconsistent divisor table entry {self}")

    def form(self) -> QuadraticForm:
        """A representative quadratic form (the +2q sign of the middle pair)."""
        if self.sign is Sign.PLUS:
            return QuadraticForm(self.p, 2 * self.q, self.r)
        if self.negated:
            return QuadraticForm(-self.p, -2 * self.q, self.r)
        return QuadraticForm(self.p, 2 * self.q, -self.r)

    def label(self) -> str:
        base = f"{self.p}:{self.q}:{self.r}"
        return base + ":neg" if self.negated else base

    def __str__(self) -> str:
        return self.label()


def _factor_pairs(m: int, low: int) -> list[tuple[int, int]]:
    # ordered pairs (p, r), p <= r, p*r == m, with both factors >= low
    pairs = []
    p = 1
    while p * p <= m:
        if m % p == 0 and p >= low:
            pairs.append((p, m // p))
        p += 1
    return pairs


def _raw_divisor_forms(a: int, sign: Sign, odd_only: bool) -> list[DivisorTableEntry]:
    # the q-loop and factor-pair rules, with no squarefree gate (callers add it)
    entries: list[DivisorTableEntry] = []
    for q in range(q_bound(a, sign) + 1):
        m = a + q * q if sign is Sign.PLUS else a - q * q
        for p, r in _factor_pairs(m, 2 * q):
            if odd_only and p % 2 == 0 and r % 2 == 0:
                continue
            entries.append(DivisorTableEntry(a, sign, p, q, r))
            if sign is Sign.MINUS:
                entries.append(DivisorTableEntry(a, sign, p, q, r, negated=True))
    return entries


def enumerate_divisor_forms(
    a: int, sign: Sign, odd_only: bool = True
) -> list[DivisorTableEntry]:
    """All candidate divisor forms of t^2 +- a*u^2 for squarefree a.

    Emitted in ascending q, then ascending p; in the MINUS case each (p, q, r)
    appears twice, the plain family followed by its negation.  With odd_only,
    forms whose outer coefficients are both even are dropped (they can divide
    only even numbers).  Non-squarefree a is an error: normalize through
    squarefree_kernel first.
    """
    if a < 1:
        raise FormesError(f"need a positive integer, got {a}")
    a0, g = squarefree_kernel(a)
    if g != 1:
        raise FormesError(
            f"a = {a} is not squarefree; its divisor forms are those of a0 = {a0}"
        )
    return _raw_divisor_forms(a, sign, odd_only)


def enumerate_general(b: int, c: int, d: int) -> list[tuple[int, int, int]]:
    """All reduced coefficient triples (P, Q, R) a divisor of b*t^2 + c*t*u + d*u^2
    can take, for coprime t, u.

    Q runs over integers of the parity of c with 3*Q^2 <= k (k > 0) or
    5*Q^2 <= -k (k < 0), where k = 4*b*d - c^2, and P*R = (k + Q^2) / 4 with
    |P| >= |Q|, |R| >= |Q| and |P| <= |R|.  For k > 0 only the positive factor
    pairs are listed (the all-negative mirror represents the negatives); for
    k < 0 the product is negative and both sign arrangements appear.
    Degenerate (k = 0) and split (-k square) inputs raise, carrying their
    classification: their divisors are arbitrary.
    """
    k = 4 * b * d - c * c
    cls = classify(QuadraticForm(b, c, d))
    if k == 0:
        raise DegenerateFormError(cls)
    if k < 0 and isqrt(-k) ** 2 == -k:
        raise SplitFormError(cls)

    qmax = isqrt(k // 3) if k > 0 else isqrt(-k // 5)
    out: list[tuple[int, int, int]] = []
    for big_q in range(-qmax, qmax + 1):
        if (big_q - c) % 2 != 0:
            continue
        num = k + big_q * big_q
        assert num % 4 == 0
        pr = num // 4
        if k > 0:
            for p, r in _factor_pairs(pr, abs(big_q)):
                out.append((p, big_q, r))
        else:
            for p, r in _factor_pairs(-pr, abs(big_q)):
                out.append((-p, big_q, r))
                out.append((p, big_q, -r))
    out.sort(key=lambda prq: (prq[1], prq[0], prq[2]))
    return out
