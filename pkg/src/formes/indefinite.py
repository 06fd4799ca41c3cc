"""Cycles of indefinite forms p*y^2 + 2*q*y*z - r*z^2 with p*r + q^2 = a.

The alternating substitution y = m*y' + y'' (odd steps) and y' = m*y'' + y'''
(even steps), with the multiplier pinned into a window of width one around
(sqrt(a) -+ q) / r, walks the finite set of states (q, r) until a state
repeats at the same parity.  Every reduced form equivalent to the start shows
up along the walk, so membership in one cycle decides equivalence.  All
windows use the exact integer square root; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FLIP,
    IDENTITY,
    SWAP,
    FormesError,
    QuadraticForm,
    UnimodularTransform,
    apply_transform,
    compose,
    isqrt,
    reduce_form,
)
from .enumeration import DivisorTableEntry, Sign, enumerate_divisor_forms


@dataclass(frozen=True)
class CycleState:
    index: int  # 1-based step number
    q: int
    r_prev: int
    r_next: int
    multiplier: int
    parity: str  # "odd" or "even"


@dataclass(frozen=True)
class Cycle:
    a: int
    start: QuadraticForm
    states: tuple[CycleState, ...]
    # reduced forms met along the way, each with a transform from `start`
    reduced_forms: dict[QuadraticForm, UnimodularTransform]
    closed_at: tuple[int, int]  # (mu, nu): states[mu-1] repeats at step mu+nu, nu even


def _step_matrix(odd: bool, m: int) -> UnimodularTransform:
    # odd steps substitute into the first variable, even steps into the second
    return UnimodularTransform(1, m, 0, 1) if odd else UnimodularTransform(1, 0, m, 1)


def _orbit(
    a: int, q0: int, r_active: int, r_other: int, base: UnimodularTransform
) -> tuple[list[CycleState], dict[QuadraticForm, UnimodularTransform], tuple[int, int]]:
    """One pass of the alternating walk from the form (r_active, 2*q0, -r_other).

    `base` maps the caller's start form onto this pass's start form; every
    recorded transform is pre-composed with it.  Returns the state list, the
    reduced forms found (first witness kept), and the closure indices.
    """
    sq = isqrt(a)
    records: dict[QuadraticForm, UnimodularTransform] = {}
    if 2 * abs(q0) <= r_active and 2 * abs(q0) <= r_other:
        records[QuadraticForm(r_active, 2 * q0, -r_other)] = base

    states: list[CycleState] = []
    seen: dict[tuple[int, int, int], int] = {}
    t_acc = base
    q_prev = q0
    limit = 2 * (2 * sq + 1) * a + 4  # pigeonhole bound on distinct states
    step = 0
    while True:
        step += 1
        if step > limit:
            raise AssertionError(f"cycle for a={a} failed to close within {limit} steps")
        odd = step % 2 == 1
        r = r_active

        # multipliers whose candidate q lands in [-r/2, r/2]; at most two
        if odd:
            m_lo, m_hi = -((r + 2 * q_prev) // (2 * r)), (r - 2 * q_prev) // (2 * r)
        else:
            m_lo, m_hi = -((r - 2 * q_prev) // (2 * r)), (r + 2 * q_prev) // (2 * r)
        for m in range(m_lo, m_hi + 1):
            q_cand = q_prev + r * m if odd else q_prev - r * m
            num = a - q_cand * q_cand
            assert num % r == 0
            r_cand = num // r
            if r_cand >= 2 * abs(q_cand) and r_cand >= 1:
                if odd:
                    g = QuadraticForm(r, 2 * q_cand, -r_cand)
                else:
                    g = QuadraticForm(r_cand, 2 * q_cand, -r)
                records.setdefault(g, compose(t_acc, _step_matrix(odd, m)))

        # advance by the window multiplier
        m = (sq - q_prev) // r if odd else (sq + q_prev) // r
        q_new = q_prev + r * m if odd else q_prev - r * m
        num = a - q_new * q_new
        assert num > 0 and num % r == 0
        r_new = num // r
        t_acc = compose(t_acc, _step_matrix(odd, m))
        states.append(CycleState(step, q_new, r, r_new, m, "odd" if odd else "even"))

        key = (q_new, r_new, step % 2)
        if key in seen:
            mu = seen[key]
            return states, records, (mu, step - mu)
        seen[key] = step
        q_prev, r_active, r_other = q_new, r_new, r


def cycle(a: int, start: tuple[int, int, int]) -> Cycle:
    """Walk the cycle of r_lead*y^2 + 2*q0*y*z - r_trail*z^2 with invariant -4a.

    `start` is the triple (r_lead, q0, r_trail) with r_lead*r_trail + q0^2 = a.
    A start with both outer numbers negative is normalized by negate-and-swap.
    When q0 != 0 the walk is run from both signs of q0 and the reduced forms
    of the two passes are merged, so reduced_forms is the full set for the
    class of the start form.  a must be a positive nonsquare.
    """
    if a < 1 or isqrt(a) ** 2 == a:
        raise FormesError(f"a = {a} must be a positive nonsquare (split otherwise)")
    r_lead, q0, r_trail = start
    if r_lead == 0 or r_trail == 0:
        raise FormesError("start triple needs nonzero outer coefficients")
    if r_lead * r_trail + q0 * q0 != a:
        raise FormesError(f"start triple {start} does not satisfy r*r' + q^2 = {a}")
    f0 = QuadraticForm(r_lead, 2 * q0, -r_trail)
    base = IDENTITY
    if r_lead < 0 and r_trail < 0:
        r_lead, r_trail = -r_trail, -r_lead
        base = SWAP
    elif r_lead < 0 or r_trail < 0:
        raise FormesError(f"start triple {start} mixes signs; negate both or neither")

    states, records, closed_at = _orbit(a, q0, r_lead, r_trail, base)
    if q0 != 0:
        _, mirror, _ = _orbit(a, -q0, r_lead, r_trail, compose(base, FLIP))
        for g, tr in mirror.items():
            records.setdefault(g, tr)

    for g, tr in records.items():
        assert apply_transform(f0, tr) == g
    return Cycle(a, f0, tuple(states), records, closed_at)


def reduced_members(c: Cycle) -> dict[QuadraticForm, UnimodularTransform]:
    """The deduplicated reduced forms of the cycle with their witnessing transforms."""
    return dict(c.reduced_forms)


def _images(g: QuadraticForm):
    # g up to middle sign and argument order, with the matrices realizing each
    yield g, IDENTITY
    yield g.flipped(), FLIP
    yield g.swapped(), SWAP
    yield g.swapped().flipped(), compose(SWAP, FLIP)


def _start_triple(f: QuadraticForm) -> tuple[int, int, int]:
    if f.m % 2 != 0:
        raise FormesError(f"form {f} has odd middle coefficient; invariant is not -4a")
    return f.l, f.m // 2, -f.n


def equivalent_indefinite(
    a: int, f: QuadraticForm, g: QuadraticForm
) -> UnimodularTransform | None:
    """A substitution carrying f onto g, or None when the cycles differ.

    Both forms must have invariant -4a for a positive nonsquare a.  f is
    reduced first, its cycle is walked, and g (also reduced) is searched among
    the members up to middle sign and argument order.  Completeness rests on
    the cycle containing every reduced form of the class.
    """
    want = -4 * a
    if f.k != want or g.k != want:
        raise FormesError(f"both forms must have invariant {want}; got {f.k} and {g.k}")
    f_red, tf = reduce_form(f)
    g_red, tg = reduce_form(g)
    orb = cycle(a, _start_triple(f_red))
    tg_inv = tg.inverse()
    for h, th in orb.reduced_forms.items():
        for img, extra in _images(h):
            if img == g_red:
                witness = compose(compose(tf, th), compose(extra, tg_inv))
                assert apply_transform(f, witness) == g
                return witness
    return None


@dataclass(frozen=True)
class DivisorClass:
    representative: DivisorTableEntry
    members: tuple[DivisorTableEntry, ...]


def _entry_start(e: DivisorTableEntry) -> tuple[int, int, int]:
    # the negated family -p*y^2 -+ 2q*y*z + r*z^2 is the argument swap of (r, q, p)
    return (e.r, e.q, e.p) if e.negated else (e.p, e.q, e.r)


def _matches(g: QuadraticForm, e: DivisorTableEntry) -> bool:
    p, q, r = g.l, abs(g.m) // 2, -g.n
    return (p, q, r) == ((e.r, e.q, e.p) if e.negated else (e.p, e.q, e.r))


def divisor_classes(a: int) -> list[DivisorClass]:
    """Group the minus-case divisor form candidates of a into equivalence classes.

    Starting from y^2 - a*z^2 and then from each still-unclassified candidate,
    the candidate list is partitioned by cycle membership.  The representative
    of a class is its first member in enumeration order (ascending q, then p,
    negation last).  a must be squarefree and not a square.
    """
    if a < 2 or isqrt(a) ** 2 == a:
        raise FormesError(f"a = {a} must be a nonsquare >= 2 (split/degenerate otherwise)")
    candidates = enumerate_divisor_forms(a, Sign.MINUS, odd_only=True)
    remaining = list(candidates)
    classes: list[DivisorClass] = []
    while remaining:
        seed = remaining[0]
        orb = cycle(a, _entry_start(seed))
        members = tuple(
            e for e in remaining if any(_matches(g, e) for g in orb.reduced_forms)
        )
        if seed not in members:
            raise AssertionError(f"cycle of {seed} failed to recover its own start")
        rep = min(members, key=lambda e: (e.q, e.p, e.r, e.negated))
        classes.append(DivisorClass(rep, members))
        dropped = set(members)
        remaining = [e for e in remaining if e not in dropped]
    return classes
