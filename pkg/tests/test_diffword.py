"""Word expansion into derivative monomials and its congruences."""

import itertools
import math
import random

import pytest

from wittp.arith import Prime
from wittp.diffword import (
    DiffPoly,
    apply_word,
    evaluate,
    expand_multi,
    expand_word,
    leibniz_power,
    merge_symbols,
    permute_symbols,
    power_word,
    theorem2_check,
    theorem2_residual,
)
from wittp.ring import FpPoly

P5_WORD_TABLE = {
    (1, 1, 1, 1): 1,
    (0, 1, 1, 2): 11,
    (0, 0, 2, 2): 4,
    (0, 0, 1, 3): 7,
    (0, 0, 0, 4): 1,
}
P5_LEIBNIZ_TABLE = {
    (1, 1, 1, 1): 24,
    (0, 1, 1, 2): 144,
    (0, 0, 2, 2): 36,
    (0, 0, 1, 3): 48,
    (0, 0, 0, 4): 4,
}


def random_word(rng, max_len=9):
    length = rng.randrange(1, max_len)
    return "".join(rng.choice("DF") for _ in range(length)) + "F"


def random_poly(rng, p, max_deg=5):
    return FpPoly([rng.randrange(p.p) for _ in range(rng.randrange(1, max_deg + 2))], p)


def test_expand_word_basics():
    assert expand_word("F").terms == {(0,): 1}
    assert expand_word("DF").terms == {(1,): 1}
    assert expand_word("DFDDF").terms == {(1, 2): 1, (0, 3): 1}


def test_expand_word_rejects_malformed():
    with pytest.raises(ValueError, match="end with F"):
        expand_word("DFD")
    with pytest.raises(ValueError, match="position 1"):
        expand_word("DXF")
    with pytest.raises(ValueError):
        expand_word("")


def test_power_word_small():
    assert power_word(1).terms == {(1,): 1}
    # hand Leibniz: D(f f') = f'f' + f f''
    assert power_word(2).terms == {(1, 1): 1, (0, 2): 1}
    assert power_word(4).terms == P5_WORD_TABLE


def test_leibniz_power_small():
    assert leibniz_power(1).terms == {(1,): 1}
    assert leibniz_power(4).terms == P5_LEIBNIZ_TABLE


@pytest.mark.parametrize("n", range(1, 9))
def test_leibniz_top_order_coefficient(n):
    # the monomial f^(n-1) f^(n) arises once per choice of the factor hit n times
    assert leibniz_power(n).coefficient((0,) * (n - 1) + (n,)) == n


@pytest.mark.parametrize("n", range(1, 9))
def test_expansion_degree_invariants(n):
    for dp in (power_word(n), leibniz_power(n)):
        for orders in dp.terms:
            assert len(orders) == n
            assert sum(orders) == n


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_theorem2(p):
    assert theorem2_check(Prime(p))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_factorial_weighted_congruence(p):
    lhs = power_word(p - 1).scale(math.factorial(p - 1))
    rhs = leibniz_power(p - 1)
    assert (lhs + rhs.scale(-1)).is_zero_mod(Prime(p))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_theorem2_via_concrete_evaluation(p):
    pr = Prime(p)
    residual = theorem2_residual(pr)
    rng = random.Random(p)
    for _ in range(25):
        assert evaluate(residual, random_poly(rng, pr)).is_zero()


def test_expand_multi_small():
    assert expand_multi(1).terms == {(1,): 1}
    assert expand_multi(2).terms == {(1, 1): 1, (2, 0): 1}
    with pytest.raises(ValueError):
        expand_multi(0)
    with pytest.raises(ValueError):
        expand_multi(3, perm=(1, 1, 2))


def test_merge_specialization():
    # summing the merged expansion over all symbol relabelings gives m! copies
    # of the single-symbol expansion
    for m in range(1, 5):
        acc = DiffPoly.zero()
        for perm in itertools.permutations(range(1, m + 1)):
            acc = acc + merge_symbols(permute_symbols(expand_multi(m), perm))
        assert acc == power_word(m).scale(math.factorial(m))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_word_evaluation_homomorphism(p):
    pr = Prime(p)
    rng = random.Random(100 + p)
    for _ in range(200):
        word = random_word(rng)
        f = random_poly(rng, pr)
        assert evaluate(expand_word(word), f) == apply_word(word, f)


def test_evaluate_examples():
    p5 = Prime(5)
    f = FpPoly([0, 0, 1], p5)  # x^2
    assert evaluate(DiffPoly({(1,): 1}), f) == f.derive()
    # f'f'' + ff''' at x^2: (2x)(2) + 0 = 4x
    assert evaluate(expand_word("DFDDF"), f) == FpPoly([0, 4], p5)


def test_format_prime_notation():
    assert expand_word("DFDDF").format() == "f'f'' + ff'''"
    assert expand_word("F").format() == "f"
    assert power_word(4).format() == (
        "(f')^4 + 11f(f')^2f'' + 4f^2(f'')^2 + 7f^2f'f''' + f^3f^(4)"
    )
    assert DiffPoly.zero().format() == "0"
    assert DiffPoly({(1,): -2}).format() == "-2f'"


def test_json_shape():
    obj = expand_word("DFDDF").to_json_obj()
    assert obj == [
        {"orders": [1, 2], "coeff": "1"},
        {"orders": [0, 3], "coeff": "1"},
    ]
