import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from polyadic import (IntSequence, NotYetStable, PeriodicFunction, char_of,
                      classify_absolute_upto, converges_check, embed,
                      evaluate, is_prezero_upto, is_zero_sequence_upto,
                      limit_upto)
from polyadic.arith import divisors, tower_modulus
from polyadic.stabilizers import (Stability, default_window, final_value_upto,
                                  named_sequence, sequence_of_character)

from oracles import factorial_sum, factorial_table, first_stable_index


def test_constant_limit():
    limit, report = limit_upto(IntSequence.constant(7), 5, 50)
    assert limit == embed(7, 5)
    assert report.witness_index == 1 and report.checked_upto == 50
    assert report.status is Stability.STABLE


def test_factorial_sum_limit_has_unit_digits():
    limit, report = limit_upto(named_sequence("factorial-sum"), 6, 60)
    assert limit.digits.digits == (1,) * 6
    assert limit.value == factorial_sum(6) == 873
    assert factorial_table(6)[limit.value] == (1,) * 6
    assert report.witness_index == 6


@pytest.mark.parametrize("horizon", [5, 50, 500])
def test_identity_sequence_never_stabilizes(horizon):
    with pytest.raises(NotYetStable) as info:
        limit_upto(named_sequence("affine:1,0"), 1, horizon)
    assert info.value.report.status is Stability.NOT_YET_STABLE
    assert info.value.report.tail_length == 1


def test_witness_matches_oracle():
    seq = named_sequence("factorial")
    for depth in range(1, 8):
        residues = [seq(k) % tower_modulus(depth) for k in range(1, 41)]
        _, report = limit_upto(seq, depth, 40)
        assert report.witness_index == first_stable_index(residues) == depth + 1


def test_short_horizon_is_not_yet_stable():
    with pytest.raises(NotYetStable):
        limit_upto(named_sequence("factorial"), 6, 10)
    limit, _ = limit_upto(named_sequence("factorial"), 6, 10, window=3)
    assert limit.value == 0


def test_zero_sequences():
    assert is_zero_sequence_upto(named_sequence("factorial"), 5, 60)
    assert is_zero_sequence_upto(IntSequence.constant(0), 5, 30)
    assert not is_zero_sequence_upto(IntSequence.constant(3), 5, 30)


def test_classify_absolute():
    three_plus = IntSequence(lambda k: 3 + factorial(k), "3+k!")
    for depth in range(3, 10):
        assert classify_absolute_upto(three_plus, depth, 100) == 3
    # at depth 1 the residue mod 2 cannot tell -1 from 1
    for depth in range(2, 10):
        assert classify_absolute_upto(IntSequence.constant(-1), depth, 40) == -1
    assert classify_absolute_upto(named_sequence("factorial-sum"), 6, 60) is None
    assert classify_absolute_upto(named_sequence("constant:-123456"), 10, 50) \
        == -123456


def test_prezero():
    four = IntSequence.constant(4)
    assert is_prezero_upto(four, 2, 40)
    assert is_prezero_upto(four, 4, 40)
    assert not is_prezero_upto(four, 3, 40)
    assert is_prezero_upto(named_sequence("factorial"), 5, 60)


def test_prezero_for_all_small_p_means_zero():
    seq = named_sequence("factorial")
    assert all(is_prezero_upto(seq, p, 80) for p in range(1, 8))
    assert is_zero_sequence_upto(seq, 6, 80)
    shifted = IntSequence(lambda k: factorial(k) * 7, "7k!")
    assert all(is_prezero_upto(shifted, p, 80) for p in range(1, 8))
    assert is_zero_sequence_upto(shifted, 6, 80)


@settings(max_examples=60)
@given(st.integers(-500, 500),
       st.lists(st.integers(-9, 9), min_size=1, max_size=12),
       st.integers(1, 7))
def test_limit_matches_direct_summation(c, coefs, depth):
    def gen(k):
        return c + sum(m * factorial(j)
                       for j, m in enumerate(coefs[:k], start=1))
    limit, _ = limit_upto(IntSequence(gen), depth, 3 * depth + 20)
    expect = (c + sum(m * factorial(j) for j, m in enumerate(coefs, start=1)))
    assert limit == embed(expect, depth)
    assert is_zero_sequence_upto(IntSequence(gen), depth, 3 * depth + 20) == \
        (expect % tower_modulus(depth) == 0)


def test_shift_invariance():
    for seq in (named_sequence("factorial-sum"), named_sequence("factorial"),
                IntSequence.constant(-4)):
        for steps in (1, 3):
            assert limit_upto(seq, 5, 60)[0] == limit_upto(seq.shift(steps), 5, 60)[0]


def test_limit_character_matches_final_values():
    rng = random.Random(8)
    seq = named_sequence("factorial-sum")
    depth = 5
    psi = char_of(limit_upto(seq, depth, 60)[0])
    for p in divisors(tower_modulus(depth)):
        u = PeriodicFunction.from_values([rng.random() for _ in range(p)])
        assert evaluate(psi, u) == final_value_upto(seq, u, 60)


def test_sequence_of_character_round_trip():
    alpha = embed(98765, 7)
    seq = sequence_of_character(char_of(alpha))
    assert limit_upto(seq, 7, 40)[0] == alpha


def test_sequence_arithmetic():
    a, b = named_sequence("factorial-sum"), IntSequence.constant(5)
    assert limit_upto(a + b, 4, 40)[0] == limit_upto(a, 4, 40)[0] + 5
    assert limit_upto(a * b, 4, 40)[0] == limit_upto(a, 4, 40)[0] * 5
    assert limit_upto(-a - b, 4, 40)[0] == -(limit_upto(a, 4, 40)[0] + 5)


def test_finite_lists():
    seq = IntSequence.from_list([1, 2, 3] + [10] * 8)
    limit, report = limit_upto(seq, 2, 100)
    assert limit.value == 4 and report.checked_upto == 11
    assert report.witness_index == 4
    with pytest.raises(IndexError):
        seq(12)


def test_named_sequences():
    assert named_sequence("constant:-3")(9) == -3
    assert named_sequence("factorial:k!")(5) == 120
    assert named_sequence("affine:2,-1")(4) == 7
    with pytest.raises(ValueError):
        named_sequence("fibonacci")


def test_default_window():
    assert default_window(0) == 2 and default_window(6) == 14


def test_converges_check_examples():
    sums = [embed(factorial_sum(n), 5) for n in range(1, 11)]
    assert converges_check(sums, 5)
    assert converges_check([embed(42, 5)] * 6, 5)
    assert not converges_check([embed(n, 5) for n in range(1, 11)], 5)


def test_converges_check_needs_tail_to_stay_zero():
    # differences 6, 1, 0: hits 0 mod 6 first and then leaves it
    betas = [embed(v, 3) for v in (0, 6, 7, 7)]
    assert not converges_check(betas, 3)
    with pytest.raises(ValueError):
        converges_check([embed(0, 2)], 3)
