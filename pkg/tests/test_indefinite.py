import random

import pytest

from formes import (
    FormesError,
    QuadraticForm,
    Sign,
    UnimodularTransform,
    apply_transform,
    cycle,
    divisor_classes,
    enumerate_divisor_forms,
    equivalent_indefinite,
    isqrt,
    reduced_members,
)


def member_triples(c):
    return sorted((g.l, g.m, g.n) for g in c.reduced_forms)


def test_cycle_79_trace():
    c = cycle(79, (1, 0, 79))
    assert [(s.q, s.r_next) for s in c.states[:4]] == [(8, 15), (-7, 2), (7, 15), (-8, 1)]
    mu, nu = c.closed_at
    assert nu % 2 == 0 and nu > 0
    assert (c.states[-1].q, c.states[-1].r_next) == (c.states[mu - 1].q, c.states[mu - 1].r_next)
    assert member_triples(c) == [(1, 0, -79), (2, -2, -39), (2, 2, -39)]


def test_cycle_small_examples():
    assert member_triples(cycle(2, (1, 0, 2))) == [(1, 0, -2), (2, 0, -1)]
    assert member_triples(cycle(7, (1, 0, 7))) == [(1, 0, -7), (2, -2, -3), (2, 2, -3)]


def test_cycle_79_from_3_1_26():
    c = cycle(79, (3, 1, 26))
    found = set(member_triples(c))
    assert {(3, 2, -26), (3, -2, -26), (7, -6, -10), (6, 2, -13), (15, 4, -5)} <= found
    # every composed substitution preserves the invariant k = -4*79
    assert all(g.k == -316 for g in c.reduced_forms)


def test_cycle_state_invariants():
    for a, start in [(79, (1, 0, 79)), (79, (3, 1, 26)), (13, (1, 0, 13)), (6, (6, 0, 1))]:
        c = cycle(a, start)
        sq = isqrt(a)
        for s in c.states:
            assert s.r_prev * s.r_next + s.q * s.q == a
            assert 0 < s.r_prev <= a and 0 < s.r_next <= a
            assert s.q * s.q < a
            assert s.multiplier >= 0
        assert len(c.states) <= 2 * (2 * sq + 1) * a


def test_cycle_transform_witnesses():
    for a, start in [(79, (1, 0, 79)), (79, (3, 1, 26)), (10, (2, 0, 5)), (29, (1, 0, 29))]:
        c = cycle(a, start)
        for g, t in c.reduced_forms.items():
            assert apply_transform(c.start, t) == g
            # value coherence on a small grid
            for y in range(-2, 3):
                for z in range(-2, 3):
                    assert g.evaluate(y, z) == c.start.evaluate(*t.apply_args(y, z))


def test_cycle_negative_start_normalized():
    c = cycle(7, (-1, 0, -7))  # the form -y^2 + 7z^2
    assert c.start == QuadraticForm(-1, 0, 7)
    assert member_triples(c) == [(3, -2, -2), (3, 2, -2), (7, 0, -1)]
    for g, t in c.reduced_forms.items():
        assert apply_transform(c.start, t) == g


def test_cycle_rejections():
    with pytest.raises(FormesError):
        cycle(9, (1, 0, 9))  # perfect square
    with pytest.raises(FormesError):
        cycle(7, (1, 0, 6))  # inconsistent triple
    with pytest.raises(FormesError):
        cycle(7, (1, 0, 0))  # zero outer coefficient
    with pytest.raises(FormesError):
        cycle(79, (-3, 10, 7))  # mixed signs


def test_reduced_members_view():
    c = cycle(2, (1, 0, 2))
    members = reduced_members(c)
    assert set(members) == set(c.reduced_forms)


def test_equivalent_examples():
    t = equivalent_indefinite(5, QuadraticForm(1, 0, -5), QuadraticForm(-1, 0, 5))
    assert t is not None
    assert apply_transform(QuadraticForm(1, 0, -5), t) == QuadraticForm(-1, 0, 5)

    assert equivalent_indefinite(7, QuadraticForm(1, 0, -7), QuadraticForm(-1, 0, 7)) is None

    t = equivalent_indefinite(13, QuadraticForm(1, 0, -13), QuadraticForm(1, 0, -13))
    assert t is not None


def test_equivalent_accepts_unreduced_inputs():
    f = apply_transform(QuadraticForm(1, 0, -5), UnimodularTransform(2, 1, 1, 1))
    t = equivalent_indefinite(5, f, QuadraticForm(5, 0, -1))
    assert t is not None and apply_transform(f, t) == QuadraticForm(5, 0, -1)


def test_equivalent_invariant_mismatch():
    with pytest.raises(FormesError):
        equivalent_indefinite(5, QuadraticForm(1, 0, -5), QuadraticForm(1, 0, -7))


def test_equivalence_symmetry():
    for a in (6, 7, 10, 11, 13, 15):
        forms = [e.form() for e in enumerate_divisor_forms(a, Sign.MINUS)]
        for f in forms:
            for g in forms:
                fg = equivalent_indefinite(a, f, g) is not None
                gf = equivalent_indefinite(a, g, f) is not None
                assert fg == gf


def test_divisor_classes_counts():
    assert len(divisor_classes(2)) == 1
    assert len(divisor_classes(5)) == 1
    assert len(divisor_classes(6)) == 2
    assert len(divisor_classes(7)) == 2
    assert len(divisor_classes(15)) == 4
    assert len(divisor_classes(79)) == 4


def test_divisor_classes_79_membership():
    classes = divisor_classes(79)
    principal = next(
        c for c in classes if (1, 0, 79, False) in [(e.p, e.q, e.r, e.negated) for e in c.members]
    )
    tags = {(e.p, e.q, e.r, e.negated) for e in principal.members}
    assert tags == {(1, 0, 79, False), (2, 1, 39, False)}

    second = next(
        c for c in classes if (3, 1, 26, False) in [(e.p, e.q, e.r, e.negated) for e in c.members]
    )
    tags = {(e.p, e.q, e.r, e.negated) for e in second.members}
    assert tags == {(3, 1, 26, False), (6, 1, 13, False), (7, 3, 10, False), (5, 2, 15, True)}


def test_divisor_classes_partition():
    for a in (2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31):
        classes = divisor_classes(a)
        all_members = [e for c in classes for e in c.members]
        assert len(all_members) == len(set(all_members))
        assert set(all_members) == set(enumerate_divisor_forms(a, Sign.MINUS))
        for c in classes:
            assert c.representative in c.members


def test_divisor_classes_rejects_squares():
    with pytest.raises(FormesError):
        divisor_classes(9)
    with pytest.raises(FormesError):
        divisor_classes(1)


def _class_index(a):
    idx = {}
    for i, c in enumerate(divisor_classes(a)):
        for e in c.members:
            idx[e] = i
    return idx


def test_bruteforce_never_crosses_class_boundaries():
    # soundness at entry bound 20: a found transform implies a shared class
    from formes import bruteforce_equivalence

    for a in (2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31):
        idx = _class_index(a)
        entries = enumerate_divisor_forms(a, Sign.MINUS)
        for i, e1 in enumerate(entries):
            for e2 in entries[i + 1 :]:
                f, g = e1.form(), e2.form()
                found = bruteforce_equivalence(f, g, 20) is not None or (
                    bruteforce_equivalence(f, g.flipped(), 20) is not None
                )
                if found:
                    assert idx[e1] == idx[e2], f"a={a}: {e1} ~ {e2} but classes differ"


# same-class pairs whose smallest transform has entries above 20, with a
# bound that provably suffices (the a=29 pair needs the Pell-sized (377, 70))
LARGE_WITNESS_PAIRS = {
    (13, "1:0:13", "1:0:13:neg"): 70,
    (19, "1:0:19", "2:1:9:neg"): 25,
    (19, "1:0:19:neg", "2:1:9"): 25,
    (22, "1:0:22", "2:0:11:neg"): 40,
    (22, "1:0:22:neg", "2:0:11"): 40,
    (26, "1:0:26", "1:0:26:neg"): 30,
    (29, "1:0:29", "1:0:29:neg"): 380,
    (29, "1:0:29", "4:1:7"): 50,
    (29, "1:0:29:neg", "4:1:7:neg"): 50,
    (31, "1:0:31", "2:1:15"): 100,
    (31, "1:0:31:neg", "2:1:15:neg"): 100,
}


def test_bruteforce_class_agreement_at_sufficient_bounds():
    # completeness: every same-class pair has a brute-force witness once the
    # entry bound clears the pair's smallest transform
    from formes import bruteforce_equivalence

    for a in (2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31):
        idx = _class_index(a)
        entries = enumerate_divisor_forms(a, Sign.MINUS)
        for i, e1 in enumerate(entries):
            for e2 in entries[i + 1 :]:
                if idx[e1] != idx[e2]:
                    continue
                bound = LARGE_WITNESS_PAIRS.get((a, e1.label(), e2.label()), 20)
                f, g = e1.form(), e2.form()
                found = bruteforce_equivalence(f, g, bound) is not None or (
                    bruteforce_equivalence(f, g.flipped(), bound) is not None
                )
                assert found, f"a={a}: {e1} ~ {e2} not witnessed at bound {bound}"
