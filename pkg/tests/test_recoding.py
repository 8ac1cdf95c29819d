"""Tests for the signed-digit recodings."""

import random

import pytest

from negmul import SignedExpansion, binary_expansion, naf, width_w_naf

from oracles import min_window_weight, nonadjacent_expansions


def has_adjacent_nonzeros(digits):
    return any(a and b for a, b in zip(digits, digits[1:]))


def window_property_holds(digits, w):
    nonzero = [i for i, d in enumerate(digits) if d]
    return all(b - a >= w for a, b in zip(nonzero, nonzero[1:]))


def test_binary_examples():
    assert binary_expansion(6).digits == (1, 1, 0)
    assert binary_expansion(1).digits == (1,)
    assert binary_expansion(0).digits == ()


def test_binary_rejects_negative():
    with pytest.raises(ValueError, match="nonnegative"):
        binary_expansion(-1)


def test_naf_examples():
    e3 = naf(3)
    assert e3.digits == (1, 0, -1)
    assert e3.value == 3
    assert not has_adjacent_nonzeros(e3.digits)
    e7 = naf(7)
    assert e7.digits == (1, 0, 0, -1)
    assert e7.value == 7
    assert not has_adjacent_nonzeros(e7.digits)
    assert naf(4).digits == (1, 0, 0)


def test_wnaf_examples():
    assert width_w_naf(7, 3).digits == (1, 0, 0, -1)
    assert width_w_naf(1, 4).digits == (1,)
    assert width_w_naf(0, 2).digits == ()
    assert width_w_naf(3, 3).digits == (3,)


def test_wnaf_width_out_of_range():
    with pytest.raises(ValueError, match="width"):
        width_w_naf(5, 1)
    with pytest.raises(ValueError, match="width"):
        width_w_naf(5, 17)


def test_length_weight_value():
    e = SignedExpansion((1, 0, -1))
    assert (e.length, e.weight, e.value) == (3, 2, 3)
    e = SignedExpansion((1, 1, 0))
    assert (e.length, e.weight, e.value) == (3, 2, 6)
    e = SignedExpansion((1, 0, 0, -1))
    assert e.value == 7
    empty = SignedExpansion(())
    assert (empty.length, empty.weight, empty.value) == (0, 0, 0)


def test_round_trip_exhaustive_small():
    for m in range(1 << 14):
        assert binary_expansion(m).value == m
        assert naf(m).value == m
    for w in (2, 3, 4, 5):
        for m in range(1 << 12):
            assert width_w_naf(m, w).value == m


def test_naf_nonadjacency_exhaustive_small():
    for m in range(1 << 14):
        assert not has_adjacent_nonzeros(naf(m).digits)


def test_naf_length_relation():
    for m in range(1, 1 << 14):
        assert naf(m).length in (m.bit_length(), m.bit_length() + 1)


def test_round_trip_random_large():
    rng = random.Random(101)
    for bits in (64, 128, 256):
        for _ in range(50):
            m = rng.getrandbits(bits) | (1 << (bits - 1))
            assert binary_expansion(m).value == m
            assert naf(m).value == m
            for w in (2, 3, 4, 8, 16):
                assert width_w_naf(m, w).value == m


def test_wnaf_digit_set_and_window_property():
    for w in (3, 4):
        bound = (1 << (w - 1)) - 1
        for m in range(1 << 12):
            e = width_w_naf(m, w)
            assert e.digit_bound == bound
            for d in e.digits:
                assert d == 0 or (d % 2 and abs(d) <= bound)
            assert window_property_holds(e.digits, w)


def test_naf_unique_among_nonadjacent_expansions_small():
    by_value = nonadjacent_expansions(12)
    for m in range(1 << 10):
        carriers = by_value[m]
        assert len(carriers) == 1, (m, carriers)
        assert carriers[0] == naf(m).digits


def test_wnaf_weight_is_minimal_small():
    for w in (2, 3):
        for m in range(1, 65):
            expected = min_window_weight(m, w, 8)
            assert expected is not None
            assert width_w_naf(m, w).weight == expected, (m, w)


def test_naf_density_sample():
    rng = random.Random(11)
    total = 0.0
    count = 2000
    for _ in range(count):
        m = rng.getrandbits(128) | (1 << 127)
        e = naf(m)
        total += e.weight / e.length
    assert 0.30 < total / count < 0.37


def test_expansion_validation():
    with pytest.raises(ValueError, match="leading digit"):
        SignedExpansion((0, 1))
    with pytest.raises(ValueError, match="leading digit"):
        SignedExpansion((-1, 0, 1))
    with pytest.raises(ValueError, match="exceeds bound"):
        SignedExpansion((1, 0, 2))
    with pytest.raises(ValueError, match="odd"):
        SignedExpansion((1, 0, 2, 0), digit_bound=3)
    with pytest.raises(ValueError, match="digit_bound"):
        SignedExpansion((1,), digit_bound=0)
    with pytest.raises(ValueError, match="integers"):
        SignedExpansion((1, 0.5))


def test_expansion_accepts_list_input():
    assert SignedExpansion([1, 0, -1]).digits == (1, 0, -1)
