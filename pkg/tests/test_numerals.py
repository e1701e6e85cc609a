from itertools import islice, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hfsets.errors import InvalidBaseError, InvalidDigitError, InvalidNaturalError
from hfsets.numerals import (all_bitstrings, bijbits_to_nat, from_base, from_bits,
                             nat_to_bijbits, to_base, to_bits)


def divmod_digits(base, n):
    """Oracle: digits by repeated divmod, at least one digit."""
    digits = [n % base]
    n //= base
    while n:
        digits.append(n % base)
        n //= base
    return digits


def bijective_strings():
    """Oracle: all bitstrings by length, then by LSB-first binary value."""
    length = 0
    while True:
        for value in range(2 ** length):
            yield [(value >> i) & 1 for i in range(length)]
        length += 1


@pytest.mark.parametrize("base, n, expected", [
    (2, 2008, [0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1]),
    (2, 0, [0]),
    (10, 2008, [8, 0, 0, 2]),
])
def test_to_base(base, n, expected):
    assert to_base(base, n) == expected
    assert divmod_digits(base, n) == expected


@pytest.mark.parametrize("base, ds, expected", [
    (2, [0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1], 2008),
    (2, [], 0),
    (3, [2, 1], 5),
])
def test_from_base(base, ds, expected):
    assert from_base(base, ds) == expected


def test_to_bits_examples():
    assert to_bits(60) == [0, 0, 1, 1, 1, 1]
    assert to_bits(26) == [0, 1, 0, 1, 1]
    assert from_bits([1]) == 1


def test_bit_transformer_composition():
    o = lambda x: 2 * x
    i = lambda x: 2 * x + 1
    # o.o.o.i.i.o.i.i.i.i.i applied to 0: innermost function is the last bit
    x = 0
    for f in reversed([o, o, o, i, i, o, i, i, i, i, i]):
        x = f(x)
    assert x == 2008 == from_bits([0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1])


@pytest.mark.parametrize("n, bits", [(42, [1, 1, 0, 1, 0]), (0, []), (15, [0, 0, 0, 0])])
def test_nat_to_bijbits(n, bits):
    assert nat_to_bijbits(n) == bits
    assert bijbits_to_nat(bits) == n


def test_bijbits_to_nat_examples():
    assert bijbits_to_nat([]) == 0
    assert bijbits_to_nat([0, 0, 0]) == 7 == from_bits([0, 0, 0, 1]) - 1


def test_bijective_order_matches_oracle():
    assert list(islice(all_bitstrings(), 5000)) == list(islice(bijective_strings(), 5000))


def test_all_bitstrings_prefix():
    s = all_bitstrings()
    assert list(islice(s, 4)) == [[], [0], [1], [0, 0]]
    assert next(islice(all_bitstrings(), 5, None)) == [0, 1]


@pytest.mark.parametrize("k", range(11))
def test_runs_of_equal_bits_positions(k):
    # k zeros start each length block; k ones end it
    assert nat_to_bijbits(2 ** k - 1) == [0] * k
    assert nat_to_bijbits(2 ** (k + 1) - 2) == [1] * k


def test_bijbits_covers_each_string_once():
    # every string of length <= 10 appears exactly once below 2**11 - 1
    seen = {tuple(nat_to_bijbits(n)) for n in range(2 ** 11 - 1)}
    assert seen == {t for L in range(11) for t in product((0, 1), repeat=L)}


def test_roundtrips_exhaustive():
    outputs = set()
    for n in range(10 ** 5):
        assert from_bits(to_bits(n)) == n
        b = nat_to_bijbits(n)
        assert bijbits_to_nat(b) == n
        outputs.add(tuple(b))
    assert len(outputs) == 10 ** 5


@pytest.mark.parametrize("base", [2, 3, 10, 16])
def test_base_roundtrip(base):
    for n in range(10 ** 5):
        assert from_base(base, to_base(base, n)) == n


def test_bijbits_length():
    for n in range(10 ** 4):
        assert len(nat_to_bijbits(n)) == (n + 1).bit_length() - 1


@given(st.integers(min_value=0, max_value=2 ** 4096))
def test_to_bits_big(n):
    bits = to_bits(n)
    assert bits[-1] == 1 or bits == [0]
    assert from_bits(bits) == n
    assert bijbits_to_nat(nat_to_bijbits(n)) == n


def test_million_bit_value():
    n = (1 << 1_000_000) - 12345
    assert from_bits(to_bits(n)) == n


@pytest.mark.parametrize("base", [0, 1])
def test_invalid_base(base):
    with pytest.raises(InvalidBaseError):
        to_base(base, 5)
    with pytest.raises(InvalidBaseError):
        from_base(base, [0])


def test_invalid_digits():
    with pytest.raises(InvalidDigitError):
        from_base(3, [0, 3])
    with pytest.raises(InvalidDigitError):
        from_bits([0, 2])
    with pytest.raises(InvalidDigitError):
        bijbits_to_nat([1, -1])


def test_negative_rejected():
    with pytest.raises(InvalidNaturalError):
        to_bits(-1)
    with pytest.raises(InvalidNaturalError):
        nat_to_bijbits(-3)
