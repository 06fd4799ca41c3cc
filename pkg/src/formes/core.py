"""Exact integer arithmetic for binary quadratic forms l*y^2 + m*y*z + n*z^2.

Everything here is pure and exact: Python integers never wrap, so results are
correct at any size.  The central invariant is k = 4*l*n - m^2, preserved by
every determinant +-1 substitution of the variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class FormesError(Exception):
    """Domain error raised on invalid inputs to any formes operation."""


class NotReducibleError(FormesError):
    """No equivalent form with |m| <= min(|l|, |n|) is reachable.

    Only split (k = -h^2) and degenerate (k = 0) forms can end up here; for
    some of their classes the bound is provably unattainable (k = -1 has no
    reduced form at all).
    """


def isqrt(n: int) -> int:
    """Exact floor square root of a nonnegative integer."""
    if n < 0:
        raise FormesError(f"isqrt of negative number {n}")
    return math.isqrt(n)


@dataclass(frozen=True)
class QuadraticForm:
    """The integer function (y, z) -> l*y^2 + m*y*z + n*z^2."""

    l: int
    m: int
    n: int

    def evaluate(self, y: int, z: int) -> int:
        return self.l * y * y + self.m * y * z + self.n * z * z

    @property
    def k(self) -> int:
        """Invariant 4*l*n - m^2 (the negative of the modern discriminant)."""
        return 4 * self.l * self.n - self.m * self.m

    def negated(self) -> QuadraticForm:
        return QuadraticForm(-self.l, -self.m, -self.n)

    def swapped(self) -> QuadraticForm:
        """Same function with the arguments exchanged: (z, y) order."""
        return QuadraticForm(self.n, self.m, self.l)

    def flipped(self) -> QuadraticForm:
        """Middle-sign mirror, i.e. the substitution z -> -z."""
        return QuadraticForm(self.l, -self.m, self.n)

    def __str__(self) -> str:
        return f"{self.l},{self.m},{self.n}"


@dataclass(frozen=True)
class UnimodularTransform:
    """Substitution y = e11*s + e12*x, z = e21*s + e22*x with determinant +-1."""

    e11: int
    e12: int
    e21: int
    e22: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise FormesError(f"matrix {self} has determinant {self.det}, need +-1")

    @property
    def det(self) -> int:
        return self.e11 * self.e22 - self.e12 * self.e21

    def apply_args(self, s: int, x: int) -> tuple[int, int]:
        """The substituted argument pair (y, z) for given (s, x)."""
        return self.e11 * s + self.e12 * x, self.e21 * s + self.e22 * x

    def inverse(self) -> UnimodularTransform:
        d = self.det
        return UnimodularTransform(d * self.e22, -d * self.e12, -d * self.e21, d * self.e11)

    def __str__(self) -> str:
        return f"[[{self.e11},{self.e12}],[{self.e21},{self.e22}]]"


IDENTITY = UnimodularTransform(1, 0, 0, 1)
FLIP = UnimodularTransform(1, 0, 0, -1)  # z -> -z, mirrors the middle coefficient
SWAP = UnimodularTransform(0, 1, 1, 0)  # exchanges the two variables


class FormKind(Enum):
    POSITIVE_DEFINITE = "positive-definite"
    NEGATIVE_DEFINITE = "negative-definite"
    INDEFINITE = "indefinite"
    SPLIT = "split"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class FormClassification:
    kind: FormKind
    k: int
    h: int | None = None  # for SPLIT: -k == h*h with h > 0


def classify(f: QuadraticForm) -> FormClassification:
    """Sign type of the form, decided exactly from k = 4*l*n - m^2.

    k > 0 forms take a single sign (that of l); k = 0 forms are a rational
    square times a constant; k = -h^2 forms factor into two integer linear
    forms; the remaining k < 0 forms take both signs without factoring.
    """
    k = f.k
    if k > 0:
        kind = FormKind.POSITIVE_DEFINITE if f.l > 0 else FormKind.NEGATIVE_DEFINITE
        return FormClassification(kind, k)
    if k == 0:
        return FormClassification(FormKind.DEGENERATE, 0)
    h = math.isqrt(-k)
    if h * h == -k:
        return FormClassification(FormKind.SPLIT, k, h)
    return FormClassification(FormKind.INDEFINITE, k)


def apply_transform(f: QuadraticForm, t: UnimodularTransform) -> QuadraticForm:
    """The form g with g(s, x) = f(e11*s + e12*x, e21*s + e22*x)."""
    l2 = f.evaluate(t.e11, t.e21)
    n2 = f.evaluate(t.e12, t.e22)
    m2 = (
        2 * f.l * t.e11 * t.e12
        + f.m * (t.e11 * t.e22 + t.e12 * t.e21)
        + 2 * f.n * t.e21 * t.e22
    )
    return QuadraticForm(l2, m2, n2)


def compose(t1: UnimodularTransform, t2: UnimodularTransform) -> UnimodularTransform:
    """Matrix product t1 * t2: apply t1 to a form first, then t2 to the result.

    apply_transform(f, compose(t1, t2)) == apply_transform(apply_transform(f, t1), t2).
    """
    return UnimodularTransform(
        t1.e11 * t2.e11 + t1.e12 * t2.e21,
        t1.e11 * t2.e12 + t1.e12 * t2.e22,
        t1.e21 * t2.e11 + t1.e22 * t2.e21,
        t1.e21 * t2.e12 + t1.e22 * t2.e22,
    )


def _centered(m: int, outer: int) -> int:
    # residue of m in (-|outer|, |outer|]; boundary ties resolve to +|outer|
    two = 2 * abs(outer)
    mm = m % two
    if mm > abs(outer):
        mm -= two
    return mm


def reduce_form(f: QuadraticForm) -> tuple[QuadraticForm, UnimodularTransform]:
    """Shrink the middle coefficient until |m| <= |l| and |m| <= |n|.

    Each pass replaces m by its centered residue modulo twice the smaller
    outer coefficient, strictly decreasing |m|, so the loop terminates.  The
    returned transform carries f onto the reduced form and the invariant k is
    unchanged.  Raises NotReducibleError when no step can make progress,
    which happens only for certain split or degenerate classes.
    """
    if f.l == 0 and f.m == 0 and f.n == 0:
        raise FormesError("cannot reduce the identically zero form")
    l, m, n = f.l, f.m, f.n
    t = IDENTITY
    while abs(m) > abs(l) or abs(m) > abs(n):
        if l != 0 and abs(l) < abs(m) and (abs(l) <= abs(n) or n == 0):
            m2 = _centered(m, l)
            k = (m2 - m) // (2 * l)
            l, m, n = l, m2, l * k * k + m * k + n
            t = compose(t, UnimodularTransform(1, k, 0, 1))
        elif n != 0 and abs(n) < abs(m):
            m2 = _centered(m, n)
            k = (m2 - m) // (2 * n)
            l, m, n = l + m * k + n * k * k, m2, n
            t = compose(t, UnimodularTransform(1, 0, k, 1))
        else:
            raise NotReducibleError(
                f"form {f} cannot reach |m| <= min(|l|, |n|) "
                f"(classification: {classify(f).kind.value})"
            )
    g = QuadraticForm(l, m, n)
    assert apply_transform(f, t) == g and g.k == f.k
    return g, t


@dataclass(frozen=True)
class DivisorWitness:
    """Certificate that `divisor` is represented by a form of the same invariant.

    The witness form (l, m, n) satisfies divisor == l*s^2 + m*s*x + n*x^2 with
    gcd(s, x) = 1, and 4*l*n - m^2 equals the invariant of the input form.
    b, c, e, theta are the construction intermediates.
    """

    l: int
    m: int
    n: int
    s: int
    x: int
    b: int
    c: int
    e: int
    theta: int
    divisor: int

    @property
    def form(self) -> QuadraticForm:
        return QuadraticForm(self.l, self.m, self.n)


def divisor_witness(f: QuadraticForm, t: int, u: int, divisor: int) -> DivisorWitness:
    """Constructively represent a divisor of a coprimely-represented value.

    Given divisor | f(t, u) with gcd(t, u) = 1, build integers (l, m, n, s, x)
    with divisor = l*s^2 + m*s*x + n*x^2, gcd(s, x) = 1 and
    4*l*n - m^2 = k(f).  Steps: split off b = gcd(quotient, u), write
    u = b*s and quotient = b*c, divide f.l by b, then choose theta so that
    t = theta*s + c*x has an integer x; the three output coefficients fall
    out of the substitution.  Every division below is exact by construction;
    a failed one means a bug, not a bad input.
    """
    if math.gcd(t, u) != 1:
        raise FormesError(f"arguments ({t}, {u}) are not coprime")
    if divisor == 0:
        raise FormesError("divisor must be nonzero")
    value = f.evaluate(t, u)
    if value == 0:
        raise FormesError(f"form value at ({t}, {u}) is zero; divisors are unconstrained")
    if value % divisor != 0:
        raise FormesError(f"{divisor} does not divide the represented value {value}")
    quotient = value // divisor

    b = math.gcd(quotient, u)
    c = quotient // b
    s = u // b
    if f.l % b != 0:
        raise FormesError(f"internal: {b} should divide the leading coefficient {f.l}")
    e = f.l // b

    ca = abs(c)
    theta = (t * pow(s, -1, ca)) % ca if ca > 1 else 0
    if (t - theta * s) % c != 0:
        raise FormesError("internal: theta does not satisfy t = theta*s + c*x")
    x = (t - theta * s) // c

    lead_num = e * theta * theta + f.m * theta + f.n * b
    if lead_num % c != 0:
        raise FormesError("internal: leading coefficient is not divisible by c")
    out_l = lead_num // c
    out_m = 2 * e * theta + f.m
    out_n = e * c

    witness = DivisorWitness(out_l, out_m, out_n, s, x, b, c, e, theta, divisor)
    ok = (
        witness.form.evaluate(s, x) == divisor
        and witness.form.k == f.k
        and math.gcd(s, x) == 1
    )
    if not ok:
        raise FormesError("internal: witness construction violated its own contract")
    return witness
