"""Quotient-ring arithmetic, the derivative, and the x <-> x - 1 isomorphism."""

import itertools
import random

import pytest

from wittp.arith import Prime
from wittp.ring import (
    FpPoly,
    ModulusVariant,
    TruncPoly,
    is_zero_divisor,
    iso_shift,
    iso_unshift,
    poly_from_text,
    poly_gcd,
    poly_to_text,
    trunc_mul,
)

XP, XP1 = ModulusVariant.XP, ModulusVariant.XP1


def reduce_by_long_division(coeffs, p, variant):
    # independent oracle: schoolbook division by x^p - c over F_p
    c = variant.fold
    work = [x % p for x in coeffs]
    for i in range(len(work) - 1, p - 1, -1):
        if work[i]:
            work[i - p] = (work[i - p] + c * work[i]) % p
            work[i] = 0
    return tuple(work[:p]) + (0,) * (p - len(work[:p]))


def all_elements(p, variant):
    pr = Prime(p)
    for coeffs in itertools.product(range(p), repeat=p):
        yield TruncPoly(coeffs, pr, variant)


def random_trunc(rng, pr, variant):
    return TruncPoly([rng.randrange(pr.p) for _ in range(pr.p)], pr, variant)


def test_unit_element():
    p5 = Prime(5)
    rng = random.Random(1)
    one = TruncPoly.one(p5, XP)
    for _ in range(10):
        f = random_trunc(rng, p5, XP)
        assert trunc_mul(one, f) == f


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_top_monomial_times_x(p):
    pr = Prime(p)
    top = TruncPoly([0] * (p - 1) + [1], pr, XP)
    x = TruncPoly.x(pr, XP)
    assert (top * x).is_zero()
    top1 = TruncPoly([0] * (p - 1) + [1], pr, XP1)
    x1 = TruncPoly.x(pr, XP1)
    assert top1 * x1 == TruncPoly.one(pr, XP1)


@pytest.mark.parametrize("p,variant", [(3, XP), (3, XP1), (5, XP), (5, XP1)])
def test_trunc_mul_matches_long_division(p, variant):
    pr = Prime(p)
    rng = random.Random(p)
    for _ in range(50):
        a = random_trunc(rng, pr, variant)
        b = random_trunc(rng, pr, variant)
        full = [0] * (2 * p - 1)
        for i, ai in enumerate(a.coeffs):
            for j, bj in enumerate(b.coeffs):
                full[i + j] += ai * bj
        assert (a * b).coeffs == reduce_by_long_division(full, p, variant)


def test_mismatch_rejected():
    a = TruncPoly.x(Prime(5), XP)
    with pytest.raises(ValueError):
        trunc_mul(a, TruncPoly.x(Prime(5), XP1))
    with pytest.raises(ValueError):
        trunc_mul(a, TruncPoly.x(Prime(7), XP))
    assert a != TruncPoly.x(Prime(5), XP1)


def test_derive_examples():
    p5 = Prime(5)
    assert TruncPoly.one(p5, XP).derive().is_zero()
    x4 = TruncPoly([0, 0, 0, 0, 1], p5, XP)
    assert x4.derive() == TruncPoly([0, 0, 0, 4], p5, XP)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_p_fold_derivative_kills_polynomials(p):
    pr = Prime(p)
    rng = random.Random(p)
    for _ in range(20):
        f = FpPoly([rng.randrange(p) for _ in range(rng.randrange(1, 3 * p))], pr)
        for _ in range(p):
            f = f.derive()
        assert f.is_zero()


def test_derive_leibniz_random():
    for p, variant in [(3, XP), (5, XP), (5, XP1), (7, XP1)]:
        pr = Prime(p)
        rng = random.Random(p + variant.fold)
        for _ in range(40):
            a, b = random_trunc(rng, pr, variant), random_trunc(rng, pr, variant)
            assert (a * b).derive() == a * b.derive() + a.derive() * b


def test_iso_examples():
    p5 = Prime(5)
    assert iso_shift(TruncPoly.zero(p5, XP)).is_zero()
    assert iso_shift(TruncPoly.x(p5, XP)) == TruncPoly([-1, 1], p5, XP1)
    x2 = TruncPoly([0, 0, 1], p5, XP)
    assert iso_shift(x2) == TruncPoly([1, 3, 1], p5, XP1)  # (x-1)^2, -2 = 3 mod 5
    with pytest.raises(ValueError):
        iso_shift(TruncPoly.x(p5, XP1))
    with pytest.raises(ValueError):
        iso_unshift(TruncPoly.x(p5, XP))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_iso_commutes_with_derivative_exhaustively(p):
    for f in all_elements(p, XP):
        assert iso_shift(f.derive()) == iso_shift(f).derive()
        assert iso_unshift(iso_shift(f)) == f
    for g in all_elements(p, XP1):
        assert iso_unshift(g.derive()) == iso_unshift(g).derive()
        assert iso_shift(iso_unshift(g)) == g


def test_iso_commutes_with_derivative_sampled_p7():
    pr = Prime(7)
    rng = random.Random(7)
    for _ in range(100):
        f = random_trunc(rng, pr, XP)
        assert iso_shift(f.derive()) == iso_shift(f).derive()
        assert iso_unshift(iso_shift(f)) == f


@pytest.mark.parametrize("p", [2, 3])
def test_iso_is_a_ring_map_exhaustively(p):
    pr = Prime(p)
    assert iso_shift(TruncPoly.one(pr, XP)) == TruncPoly.one(pr, XP1)
    elements = list(all_elements(p, XP))
    for a in elements:
        for b in elements:
            assert iso_shift(a * b) == iso_shift(a) * iso_shift(b)
            assert iso_shift(a + b) == iso_shift(a) + iso_shift(b)


def test_iso_is_a_ring_map_sampled_p5():
    pr = Prime(5)
    rng = random.Random(5)
    for _ in range(300):
        a, b = random_trunc(rng, pr, XP), random_trunc(rng, pr, XP)
        assert iso_shift(a * b) == iso_shift(a) * iso_shift(b)
        assert iso_shift(a + b) == iso_shift(a) + iso_shift(b)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_iso_is_a_bijection(p):
    images = {iso_shift(f).coeffs for f in all_elements(p, XP)}
    assert len(images) == p**p


def test_zero_divisor_examples():
    p5 = Prime(5)
    assert not is_zero_divisor(TruncPoly.one(p5, XP))
    assert is_zero_divisor(TruncPoly.x(p5, XP))
    assert not is_zero_divisor(TruncPoly([1, 1], p5, XP))
    assert is_zero_divisor(TruncPoly.zero(p5, XP))


def brute_force_is_unit(a, elements):
    one = TruncPoly.one(a.prime, a.variant)
    return any(a * b == one for b in elements)


@pytest.mark.parametrize("p", [2, 3])
def test_zero_divisor_against_brute_force(p):
    # in these finite local rings every non-unit is a zero divisor
    for variant in (XP, XP1):
        elements = list(all_elements(p, variant))
        for a in elements:
            assert (not is_zero_divisor(a)) == brute_force_is_unit(a, elements)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_unit_criterion_matches_gcd(p):
    for f in all_elements(p, XP):
        assert (not is_zero_divisor(f)) == (f.coeffs[0] != 0)
    for f in all_elements(p, XP1):
        assert (not is_zero_divisor(f)) == (f.lift().evaluate(1) != 0)


def test_poly_gcd_basics():
    p5 = Prime(5)
    a = FpPoly([0, 0, 1], p5)  # x^2
    b = FpPoly([0, 2], p5)     # 2x
    assert poly_gcd(a, b) == FpPoly([0, 1], p5)
    assert poly_gcd(FpPoly.zero(p5), FpPoly.zero(p5)).is_zero()


def test_poly_text_round_trip():
    p5 = Prime(5)
    f = poly_from_text("1,2,0,1,3", p5)
    assert f.coeffs == (1, 2, 0, 1, 3)
    assert poly_to_text(f.coeffs) == "1,2,0,1,3"
    assert poly_to_text(()) == "0"
    with pytest.raises(ValueError):
        poly_from_text("1,foo", p5)


def test_truncation_reduces_high_degrees():
    p3 = Prime(3)
    f = TruncPoly([0, 0, 0, 1], p3, XP)   # x^3 -> 0
    assert f.is_zero()
    g = TruncPoly([0, 0, 0, 1], p3, XP1)  # x^3 -> 1
    assert g == TruncPoly.one(p3, XP1)
    h = TruncPoly.from_fppoly(FpPoly([2, 0, 0, 1, 1], p3), XP1)  # x^4+x^3+2
    assert h == TruncPoly([0, 1, 0], p3, XP1)
