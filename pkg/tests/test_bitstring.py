import pytest
from hypothesis import given
from hypothesis import strategies as st

from craftbench.bitstring import (
    BitString, Mode, Op, check_pair, complement, concat, id_encode, is_palindrome, nb, reverse,
    transform,
)

from strategies import bitstrings, equal_pairs


def test_text_round_trip():
    assert str(BitString.from_str("0010110")) == "0010110"
    assert len(BitString.from_str("")) == 0


def test_one_indexed_access():
    s = BitString.from_str("100")
    assert [s.at(i) for i in (1, 2, 3)] == [1, 0, 0]


def test_nb_encodes_predecessor():
    assert str(nb(1, 3)) == "000"
    assert str(nb(8, 3)) == "111"
    with pytest.raises(ValueError):
        nb(9, 3)


@pytest.mark.parametrize("i,q,expected", [(1, 2, "1001111001"), (2, 2, "1011001101")])
def test_id_encode_frozen(i, q, expected):
    assert str(id_encode(i, q)) == expected
    assert len(id_encode(i, q)) == 4 * q + 2


@pytest.mark.parametrize("q", range(1, 9))
def test_id_encode_palindromic(q):
    assert all(is_palindrome(id_encode(i, q)) for i in range(1, 2 ** q + 1))


@pytest.mark.parametrize("q", range(1, 7))
def test_id_encode_injective(q):
    codes = {id_encode(i, q) for i in range(1, 2 ** q + 1)}
    assert len(codes) == 2 ** q


@given(bitstrings())
def test_transforms_are_involutions(s):
    for op in Op:
        assert transform(transform(s, op), op) == s


@given(equal_pairs())
def test_orthogonality_is_domination_of_complement(pair):
    s, t = pair
    assert check_pair(s, t, Mode.ORTHOGONALITY) == check_pair(complement(s), t, Mode.DOMINATION)


@given(bitstrings(), bitstrings())
def test_concat_matches_text(a, b):
    assert str(concat([a, b])) == str(a) + str(b)
    assert str(reverse(a)) == str(a)[::-1]


def test_check_pair_length_mismatch():
    with pytest.raises(ValueError):
        check_pair(BitString.from_str("1"), BitString.from_str("10"), Mode.DOMINATION)
