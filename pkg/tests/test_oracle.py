import pytest

from hwbcirc.oracle import (
    HwbSpec,
    basis_index,
    format_truth_table,
    hwb_apply,
    hwb_permutation,
    paper_order_inputs,
    truth_table,
)
from hwbcirc.perm import Permutation

# the published 3-bit table, columns in first-bit-fastest order
TABLE3 = {
    "000": "000", "100": "010", "010": "001", "110": "101",
    "001": "100", "101": "011", "011": "110", "111": "111",
}


def test_three_bit_truth_table():
    spec = HwbSpec(3, "right")
    for x, y in TABLE3.items():
        assert hwb_apply(spec, x) == y


def test_truth_table_indexing_and_bijection():
    spec = HwbSpec(3, "right")
    table = truth_table(spec)
    assert len(table) == 8
    for x, y in TABLE3.items():
        assert table[basis_index(x)] == y
    assert len(set(table)) == 8


def test_zero_and_ones_fixed():
    for n in (1, 2, 5, 9):
        spec = HwbSpec(n, "right")
        assert hwb_apply(spec, "0" * n) == "0" * n
        assert hwb_apply(spec, "1" * n) == "1" * n


def test_left_example():
    assert hwb_apply(HwbSpec(3, "left"), "100") == "001"


def test_weight_preserved_exhaustive():
    for n in range(1, 13):
        spec = HwbSpec(n, "right")
        for v in range(1 << n):
            x = format(v, f"0{n}b")
            assert hwb_apply(spec, x).count("1") == x.count("1")


def test_left_right_are_mutual_inverses():
    for n in range(1, 11):
        right = HwbSpec(n, "right")
        left = HwbSpec(n, "left")
        for v in range(1 << n):
            x = format(v, f"0{n}b")
            assert hwb_apply(left, hwb_apply(right, x)) == x


def test_n1_truth_table_is_identity():
    assert truth_table(HwbSpec(1, "right")) == ["0", "1"]


def test_n5_table_bijection_and_weights():
    table = truth_table(HwbSpec(5, "right"))
    assert sorted(table) == sorted(format(v, "05b") for v in range(32))
    for v, y in enumerate(table):
        assert bin(v).count("1") == y.count("1")


def test_permutation_n2_left_is_swap():
    perm = hwb_permutation(HwbSpec(2, "left"))
    assert perm == Permutation((0, 2, 1, 3))


def test_permutation_consistent_with_table():
    spec = HwbSpec(3, "right")
    perm = hwb_permutation(spec)
    for x, y in TABLE3.items():
        assert perm(basis_index(x)) == basis_index(y)


def test_permutation_preserves_weight_blocks():
    perm = hwb_permutation(HwbSpec(6, "right"))
    for v in range(64):
        assert bin(v).count("1") == bin(perm(v)).count("1")


def test_input_validation():
    with pytest.raises(ValueError):
        hwb_apply(HwbSpec(3), "0101")
    with pytest.raises(ValueError):
        hwb_apply(HwbSpec(3), "01x")
    with pytest.raises(ValueError):
        HwbSpec(0)
    with pytest.raises(ValueError):
        HwbSpec(3, "up")
    with pytest.raises(ValueError):
        truth_table(HwbSpec(25))
    with pytest.raises(ValueError):
        hwb_permutation(HwbSpec(15))


def test_two_row_layout():
    out = format_truth_table(HwbSpec(3, "right"))
    lines = out.splitlines()
    assert len(lines) == 2
    xs = lines[0].split()[1:]
    ys = lines[1].split()[1:]
    assert xs == paper_order_inputs(3)
    assert dict(zip(xs, ys)) == TABLE3
