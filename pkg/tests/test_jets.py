import random
from fractions import Fraction

import pytest

from polystab.jets import (
    QPoly,
    QTuple,
    jet_equivalence_check,
    jet_map,
    q_gcd,
    q_membership_hol,
    q_membership_poly,
    random_qtuple,
    random_tuple_suite,
)


def P(*coeffs):
    return QPoly(coeffs)


def T(entries, n):
    entries = tuple(entries)
    return QTuple(entries, entries[0].degree, len(entries), n)


def test_jet_single_poly_examples():
    # f = z^2 - 1 -> (f, f + f')
    assert jet_map(T([P(-1, 0, 1)], 2)) == [P(-1, 0, 1), P(-1, 2, 1)]
    assert jet_map(T([P(0, 0, 1)], 2)) == [P(0, 0, 1), P(0, 2, 1)]


def test_jet_pair_example():
    got = jet_map(T([P(0, 1), P(1, 1)], 2))
    assert got == [P(0, 1), P(1, 1), P(1, 1), P(2, 1)]


def test_jet_entries_stay_monic_of_degree_d():
    rng = random.Random(13)
    for _ in range(50):
        d = rng.randint(1, 6)
        m = rng.randint(1, 3)
        n = rng.randint(1, 3)
        if (m, n) == (1, 1):
            n = 2
        t = random_qtuple(rng, d, m, n)
        jet = jet_map(t)
        assert len(jet) == m * n
        assert all(f.is_monic and f.degree == d for f in jet)


def test_membership_poly_examples():
    assert not q_membership_poly(T([P(0, 0, 1)], 2))  # double root at 0
    assert q_membership_poly(T([P(0, 0, 1), P(1, 0, 1)], 2))
    shared = QPoly.from_roots([1, 1])
    f1 = shared * P(2, 1)
    f2 = shared * P(3, 1)
    assert not q_membership_poly(T([f1, f2], 2))


def test_membership_hol_examples():
    assert q_membership_hol([P(0, 1), P(1, 1)])
    assert not q_membership_hol([P(0, 0, 1), P(0, 2, 1)])  # gcd z
    assert not q_membership_hol([P(0, 1)])  # one monic entry of positive degree
    assert q_membership_hol([P(5)])


def test_equivalence_examples():
    report = jet_equivalence_check(T([P(0, 0, 1)], 2))
    assert (report.poly_member, report.jet_hol_member) == (False, False)
    report = jet_equivalence_check(T([P(-1, 0, 1)], 2))
    assert (report.poly_member, report.jet_hol_member) == (True, True)
    assert report.agree


def test_equivalence_on_random_suite():
    tuples = random_tuple_suite(200, seed=7)
    degenerate = 0
    for t in tuples:
        report = jet_equivalence_check(t)
        assert report.agree
        if not report.poly_member:
            degenerate += 1
    assert degenerate >= 50  # forcing keeps the false branch alive


def test_membership_shift_and_scale_invariance():
    rng = random.Random(31)
    for _ in range(40):
        m = rng.randint(1, 3)
        n = rng.randint(1, 3)
        if (m, n) == (1, 1):
            n = 2
        d = rng.randint(max(n, 1), 5)
        t = random_qtuple(rng, d, m, n, force_degenerate=rng.random() < 0.5)
        base = q_membership_poly(t)
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        shifted = QTuple(tuple(f.shift_variable(c) for f in t.entries), d, m, n)
        assert q_membership_poly(shifted) == base
        lam = Fraction(rng.randint(1, 4), rng.randint(1, 4))
        scaled = QTuple(tuple(f.scale_variable(lam) for f in t.entries), d, m, n)
        assert q_membership_poly(scaled) == base


def test_n1_reduces_to_common_root_test():
    rng = random.Random(37)
    for _ in range(40):
        m = rng.randint(2, 3)
        d = rng.randint(1, 5)
        t = random_qtuple(rng, d, m, 1, force_degenerate=rng.random() < 0.5)
        assert q_membership_poly(t) == q_membership_hol(t.entries)


def test_qpoly_arithmetic():
    f = P(1, 2, 1)
    g = P(1, 1)
    q, r = divmod(f, g)
    assert q * g + r == f
    assert q_gcd(f, g) == P(1, 1)
    assert P(0, 0, 1).derivative() == P(0, 2)
    assert P(0, 0, 1).derivative(2) == P(2)
    assert P(0, 0, 1).derivative(3).is_zero


def test_qpoly_exactness():
    # an exact third root: (z - 1/3)^3 has a triple rational root
    f = QPoly.from_roots([Fraction(1, 3)] * 3)
    assert not q_membership_poly(QTuple((f,), 3, 1, 3))
    assert q_membership_poly(QTuple((f,), 3, 1, 4))


def test_qtuple_validation():
    with pytest.raises(ValueError):
        QTuple((P(0, 1),), 1, 1, 1)  # (m, n) = (1, 1)
    with pytest.raises(ValueError):
        QTuple((P(0, 2),), 1, 1, 2)  # not monic
    with pytest.raises(ValueError):
        QTuple((P(0, 1), P(0, 0, 1)), 1, 2, 2)  # degree mismatch


def test_degenerate_generator_needs_room():
    rng = random.Random(1)
    with pytest.raises(ValueError):
        random_qtuple(rng, 1, 2, 2, force_degenerate=True)


def test_suite_composition():
    tuples = random_tuple_suite(300, seed=11)
    assert len(tuples) == 300
    assert all((t.m, t.n) != (1, 1) for t in tuples)
    assert all(1 <= t.d <= 6 and t.m <= 3 and t.n <= 3 for t in tuples)
