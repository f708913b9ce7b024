"""Partition enumeration, the d recursion, and the designated-coefficient facts."""

import pytest

from wittp.arith import Prime
from wittp.errors import BoundExceededError
from wittp.young import (
    YoungDiagram,
    coeff_correspondence_check,
    d_value,
    derivative_power_in_u,
    designated_exponents,
    exercise_check,
    multinomial_coeff,
    partitions,
    power_word_in_u,
    theorem4_check,
)

# d values fixed by the worked recursion
D_TABLE = {
    (): 1,
    (1,): 1,
    (1, 1): 4,
    (2,): 1,
    (1, 1, 1): 36,
    (2, 1): 11,
    (3,): 1,
    (1, 1, 1, 1): 576,
    (2, 1, 1): 196,
    (2, 2): 66,
    (3, 1): 26,
    (4,): 1,
}


def pentagonal_count(n):
    # independent oracle: Euler's pentagonal-number recurrence
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > m:
                    break
                total += (-1) ** (k + 1) * table[m - g]
            if k * (3 * k - 1) // 2 > m:
                break
            k += 1
        table[m] = total
    return table[n]


def d_no_memo(parts):
    # independent re-implementation without memoization
    if not parts:
        return 1
    n, m = sum(parts), len(parts)
    total = 0
    for s in range(m):
        nxt = parts[s + 1] if s + 1 < m else 0
        if parts[s] > nxt:
            child = parts[:s] + ((parts[s] - 1,) if parts[s] > 1 else ()) + parts[s + 1:]
            total += (n - parts[s] + 1) * parts.count(parts[s]) * d_no_memo(child)
    return total


def test_young_diagram_validation():
    assert YoungDiagram.of().parts == ()
    assert YoungDiagram.of(3, 1, 1).size == 5
    assert YoungDiagram.of(3, 1, 1).length == 3
    assert YoungDiagram.of(2, 2, 1).multiplicity(2) == 2
    with pytest.raises(ValueError):
        YoungDiagram.of(1, 2)
    with pytest.raises(ValueError):
        YoungDiagram.of(0)


def test_partitions_small():
    assert partitions(0) == [YoungDiagram.of()]
    assert [j.parts for j in partitions(4)] == [
        (1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,),
    ]
    assert len(partitions(12)) == 77


@pytest.mark.parametrize("n", range(0, 21))
def test_partition_count_matches_pentagonal_oracle(n):
    diagrams = partitions(n)
    assert len(diagrams) == pentagonal_count(n)
    assert len(set(d.parts for d in diagrams)) == len(diagrams)
    assert [d.parts for d in diagrams] == sorted(d.parts for d in diagrams)


def test_d_value_table():
    for parts, expected in D_TABLE.items():
        assert d_value(YoungDiagram(parts)) == expected


@pytest.mark.parametrize("n", range(0, 13))
def test_d_value_memo_independent(n):
    memo = {}
    for diagram in partitions(n):
        assert d_value(diagram, memo) == d_no_memo(diagram.parts)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_theorem4(p):
    assert theorem4_check(Prime(p))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_exercise(p):
    assert exercise_check(Prime(p))


def test_exercise_rejects_p2():
    with pytest.raises(ValueError):
        exercise_check(Prime(2))


def test_exercise_values_at_p5():
    values = sorted(d_value(j) for j in partitions(3))
    assert values == [1, 11, 36]
    assert all(v % 5 == 1 for v in values)


def test_power_word_in_u_small():
    p3 = Prime(3)
    assert power_word_in_u(1, p3).terms == {(0, 1): 1, (1, 0): 1}
    # derive(u1 u2 (u1 + u2)) expanded by hand
    assert power_word_in_u(2, p3).terms == {(2, 0): 1, (1, 1): 4, (0, 2): 1}
    with pytest.raises(ValueError):
        power_word_in_u(3, p3)
    with pytest.raises(BoundExceededError):
        power_word_in_u(4, Prime(5), term_limit=2)


def test_power_word_in_u_symmetry_and_degree_cap():
    p5 = Prime(5)
    for n in range(1, 5):
        poly = power_word_in_u(n, p5)
        assert poly.is_symmetric()
        assert all(max(e) <= n for e in poly.terms)
        assert all(sum(e) == n * (5 - 2) for e in poly.terms)


def test_designated_coefficient_example():
    # J = (2,1,1) at n = 4, p = 5: exponents (2, 3, 3, 4), coefficient d(J)
    p5 = Prime(5)
    diagram = YoungDiagram.of(2, 1, 1)
    exps = designated_exponents(diagram, 4, 4)
    assert exps == (2, 3, 3, 4)
    assert power_word_in_u(4, p5).coefficient(exps) == 196
    assert d_value(diagram) == 196


@pytest.mark.parametrize("p", [3, 5, 7])
def test_coeff_correspondence(p):
    pr = Prime(p)
    for n in range(1, p):
        assert coeff_correspondence_check(n, pr)


def test_multinomial_examples():
    assert multinomial_coeff(YoungDiagram.of(1), 1) == 1
    assert multinomial_coeff(YoungDiagram.of(2, 1), 4) == 576  # 24 * 6 * 4
    with pytest.raises(ValueError):
        multinomial_coeff(YoungDiagram.of(5), 4)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_multinomial_matches_symbolic_derivative_power(p):
    pr = Prime(p)
    for n in range(1, p):
        symbolic = derivative_power_in_u(n, pr)
        for diagram in partitions(n):
            if diagram.length > p - 1:
                continue
            exps = designated_exponents(diagram, n, p - 1)
            assert symbolic.coefficient(exps) == multinomial_coeff(diagram, n)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_multinomial_is_minus_one_at_top(p):
    for diagram in partitions(p - 1):
        assert multinomial_coeff(diagram, p - 1) % p == p - 1


def test_multinomial_at_p2():
    assert multinomial_coeff(YoungDiagram.of(1), 1) % 2 == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_designated_coefficients_are_opposite_mod_p(p):
    # the word expansion carries d(J), the derivative power carries the
    # multinomial (= -1 mod p); their sum must vanish mod p, forcing d(J) = 1
    pr = Prime(p)
    n = p - 1
    word = power_word_in_u(n, pr)
    deriv = derivative_power_in_u(n, pr)
    memo = {}
    for diagram in partitions(n):
        if diagram.length > p - 1:
            continue
        exps = designated_exponents(diagram, n, p - 1)
        d = word.coefficient(exps)
        assert d == d_value(diagram, memo)
        assert (d + deriv.coefficient(exps)) % p == 0
        assert d % p == 1
