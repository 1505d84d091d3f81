import random
from itertools import product

import pytest

from polystab.ffield import (
    FpPoly,
    FpTuple,
    closed_form_count,
    count_points,
    fp_gcd,
    is_member,
    iter_monic,
    max_common_multiplicity,
    squarefree_multiplicities,
)


def P(p, *coeffs):
    return FpPoly(p, coeffs)


def test_poly_normalization():
    assert P(3, 1, 2, 0, 0).coeffs == (1, 2)
    assert P(3, 5, -1).coeffs == (2, 2)
    assert P(2).is_zero
    assert P(5, 0, 0, 1).is_monic


def test_poly_divmod_property():
    rng = random.Random(17)
    for p in (2, 3, 5):
        for _ in range(60):
            f = FpPoly(p, [rng.randrange(p) for _ in range(rng.randint(0, 6))])
            g = FpPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, 4))])
            if g.is_zero:
                continue
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.is_zero or r.degree < g.degree


def test_gcd_examples():
    # over F_2: z^2+z = z(z+1) and z^2+1 = (z+1)^2 share z+1
    assert fp_gcd(P(2, 0, 1, 1), P(2, 1, 0, 1)) == P(2, 1, 1)
    f = P(3, 0, 2, 1)
    assert fp_gcd(f, FpPoly.zero(3)) == f.monic()
    assert fp_gcd(P(5, 0, 1), P(5, 1)) == FpPoly.one(5)


def test_gcd_rejects_mixed_primes():
    with pytest.raises(ValueError):
        fp_gcd(P(2, 1), P(3, 1))


def _irreducibles(p, max_degree):
    known = []
    for d in range(1, max_degree + 1):
        for f in iter_monic(p, d):
            if not any(
                g.degree <= d // 2 and (f % g).is_zero for g in known
            ):
                known.append(f)
    return known


def _factor_oracle(f, irreducibles):
    """Trial division by monic irreducibles; independent of the library path."""
    out = {}
    for q in irreducibles:
        count = 0
        while (f % q).is_zero:
            f = f // q
            count += 1
        if count:
            out[q] = count
    assert f.degree == 0
    return out


@pytest.mark.parametrize("p", [2, 3, 5])
def test_squarefree_multiplicities_exhaustive(p):
    max_degree = 5 if p != 5 else 3
    irreducibles = _irreducibles(p, max_degree)
    for d in range(1, max_degree + 1):
        for f in iter_monic(p, d):
            decomposition = squarefree_multiplicities(f)
            want = _factor_oracle(f, irreducibles)
            # rebuild multiplicity -> factor from the true factorization
            grouped = {}
            for q, e in want.items():
                grouped[e] = grouped.get(e, FpPoly.one(p)) * q
            assert decomposition == grouped


def test_pth_power_multiplicities():
    # (z+1)^4 over F_2: derivative vanishes, root extraction must recurse
    f = P(2, 1, 1) * P(2, 1, 1) * P(2, 1, 1) * P(2, 1, 1)
    assert squarefree_multiplicities(f) == {4: P(2, 1, 1)}
    # z^3 over F_3
    assert squarefree_multiplicities(P(3, 0, 0, 0, 1)) == {3: P(3, 0, 1)}


def test_max_common_multiplicity_examples():
    t = FpTuple((P(2, 0, 0, 1), P(2, 0, 1, 1)), 2, 2, 2, 2)
    assert max_common_multiplicity(t) == 1
    # over F_3: entries built around z^2 (z+1) and z^2 (z+1)^2 share z^2 (z+1);
    # the first is padded by a coprime factor to even out the degrees
    f1 = P(3, 0, 0, 1) * P(3, 1, 1) * P(3, 2, 1)
    f2 = P(3, 0, 0, 1) * P(3, 1, 1) * P(3, 1, 1)
    t = FpTuple((f1, f2), 4, 2, 2, 3)
    assert max_common_multiplicity(t) == 2
    t = FpTuple((P(2, 0, 1), P(2, 1, 1)), 1, 2, 1, 2)
    assert max_common_multiplicity(t) == 0


def test_multiplicity_bounded_by_degree():
    rng = random.Random(3)
    for _ in range(80):
        p = rng.choice([2, 3])
        d = rng.randint(1, 4)
        m = rng.randint(1, 2)
        entries = tuple(
            FpPoly(p, [rng.randrange(p) for _ in range(d)] + [1]) for _ in range(m)
        )
        t = FpTuple(entries, d, m, 2, p)
        assert 0 <= max_common_multiplicity(t) <= d


def test_full_multiplicity_iff_common_power():
    p, d = 3, 3
    shared = P(p, 1, 1)  # z + 1
    cube = shared * shared * shared
    t = FpTuple((cube, cube), d, 2, 2, p)
    assert max_common_multiplicity(t) == d
    for f in iter_monic(p, d):
        for g in iter_monic(p, d):
            t = FpTuple((f, g), d, 2, 2, p)
            if max_common_multiplicity(t) == d:
                assert f == g
                assert len(squarefree_multiplicities(f)) == 1


def test_is_member_examples():
    double = P(2, 1, 1) * P(2, 1, 1)
    assert not is_member(FpTuple((double, double), 2, 2, 2, 2))
    assert is_member(FpTuple((P(2, 0, 0, 1), P(2, 1, 0, 1)), 2, 2, 2, 2))
    # n > d: membership is automatic
    t = FpTuple((P(3, 2, 1),), 1, 1, 2, 3)
    assert is_member(t)


def test_is_member_translation_invariance():
    rng = random.Random(29)
    for _ in range(60):
        p = rng.choice([2, 3, 5])
        d = rng.randint(1, 4)
        m = rng.randint(1, 2)
        n = rng.randint(1, 3)
        entries = tuple(
            FpPoly(p, [rng.randrange(p) for _ in range(d)] + [1]) for _ in range(m)
        )
        t = FpTuple(entries, d, m, n, p)
        base = is_member(t)
        for c in range(p):
            shifted = FpTuple(tuple(f.shift_variable(c) for f in entries), d, m, n, p)
            assert is_member(shifted) == base
        permuted = FpTuple(tuple(reversed(entries)), d, m, n, p)
        assert is_member(permuted) == base


def test_count_examples():
    assert count_points(2, 1, 2, 2) == 2
    assert count_points(1, 2, 1, 2) == 2
    assert count_points(1, 1, 2, 3) == 3


def test_count_budget_refusal():
    with pytest.raises(ValueError, match="raise the budget to at least 1024"):
        count_points(10, 1, 2, 2, budget=1000)


def test_closed_form_examples():
    assert closed_form_count(2, 1, 2, 2) == 2
    assert closed_form_count(2, 2, 2, 2) == 14
    assert closed_form_count(3, 1, 3, 2) == 6
    # the d = n anchor is q^(mn) - q
    for q in (2, 3, 5):
        for m, n in ((1, 2), (2, 2), (3, 2), (2, 3)):
            assert closed_form_count(n, m, n, q) == q ** (m * n) - q


def test_classical_squarefree_subcase():
    for p in (2, 3):
        for d in range(2, 5):
            assert count_points(d, 1, 2, p) == p**d - p ** (d - 1)


def test_tuple_validation():
    with pytest.raises(ValueError):
        FpTuple((P(2, 0, 1),), 1, 2, 2, 2)  # m mismatch
    with pytest.raises(ValueError):
        FpTuple((P(3, 0, 2),), 1, 1, 2, 3)  # not monic
    with pytest.raises(ValueError):
        FpTuple((P(2, 0, 0, 1),), 1, 1, 2, 2)  # degree mismatch
    with pytest.raises(ValueError):
        FpTuple((P(3, 0, 1),), 1, 1, 2, 2)  # prime mismatch
