from fractions import Fraction

import pytest

from ostro.blocks import (
    block_counts,
    block_multipliers,
    block_of,
    block_row_range,
    scan_block_rows,
    scan_block_vectorized,
)
from ostro.towers import Unsupported, classify_palindrome, tower_row


def test_block_count_examples():
    assert block_counts(2, 1) == (2, 1)
    assert block_counts(2, 2) == (3, 3)
    dee, edee = block_multipliers(2, 2)
    assert dee == [3, 4, 5]
    assert edee == [1, Fraction(3, 2), 2]
    assert 100 in block_multipliers(2, 6)[0]
    assert block_of(2, 100) == 6


def test_block_rows_for_d2():
    assert block_row_range(2, 1) == (1, 3)
    kinds = {m: classify_palindrome(2, m) for m in range(1, 4)}
    assert [kinds[m].kind for m in (1, 2, 3)] == ["deedee", "edee", "deedee"]
    assert kinds[2].multiplier == Fraction(1, 2)
    # rows 101, 0211 and 0202 are the Edees of block 2
    first, last = block_row_range(2, 2)
    labels = {"".join(map(str, tower_row(2, m).word.digits)): classify_palindrome(2, m)
              for m in range(first, last + 1)}
    assert {k for k, v in labels.items() if v.kind == "edee"} == {"101", "0211", "0202"}


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_row_scan_matches_formula(d, k):
    assert scan_block_rows(d, k) == block_counts(d, k)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_vectorized_scan_agrees_with_row_scan(d):
    for k in (1, 2, 3):
        assert scan_block_vectorized(d, k, chunk=97) == scan_block_rows(d, k)


def test_block_of_matches_multipliers():
    for d in (2, 3):
        for k in range(1, 7):
            dee, edee = block_multipliers(d, k)
            assert all(block_of(d, j) == k for j in dee)


def test_errors():
    with pytest.raises(Unsupported):
        block_counts(1, 1)
    with pytest.raises(ValueError):
        block_counts(2, 0)
    with pytest.raises(ValueError):
        block_of(2, 0)
