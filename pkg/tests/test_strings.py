"""String moves: stars and bars, shifts, pinching, rotation, necklaces."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zred.strings import (
    AlternatingNecklace,
    ColoredBin,
    Necklace,
    alternating_equal,
    alternating_necklace,
    check_bin,
    check_nat,
    eta_minus,
    eta_plus,
    is_primitive,
    knead,
    least_rotation,
    necklace,
    pinch_both,
    pinch_left,
    pinch_right,
    rotate_bin,
    sb,
    sb_inv,
    t_g,
    t_z,
    weight,
)

nat2 = st.lists(st.integers(1, 9), min_size=2, max_size=8).map(tuple)
nat1 = st.lists(st.integers(1, 9), min_size=1, max_size=8).map(tuple)
bin1 = st.text(alphabet="01", min_size=1, max_size=14).filter(lambda b: "1" in b)


def test_checkers():
    assert check_nat([3, "1"]) == (3, 1)
    with pytest.raises(ValueError):
        check_nat((1, 0, 2))
    with pytest.raises(ValueError):
        check_nat((1,), min_len=2)
    assert check_bin("0101") == "0101"
    with pytest.raises(ValueError):
        check_bin("012")
    with pytest.raises(ValueError):
        check_bin("")
    with pytest.raises(ValueError):
        check_bin("000", min_weight=1)


def test_sb_frozen():
    assert sb((2, 1, 3)) == "01100"
    assert sb((1, 3, 1, 1)) == "10011"
    assert sb((1, 1)) == "1"
    assert sb((3, 3)) == "00100"
    with pytest.raises(ValueError):
        sb((4,))


def test_sb_inv_frozen():
    assert sb_inv("01100") == (2, 1, 3)
    assert sb_inv("10011") == (1, 3, 1, 1)
    assert sb_inv("1") == (1, 1)
    with pytest.raises(ValueError):
        sb_inv("000")


@given(nat2)
def test_sb_round_trip(s):
    b = sb(s)
    assert len(b) == sum(s) - 1
    assert weight(b) == len(s) - 1
    assert sb_inv(b) == s


@given(bin1)
def test_sb_inv_round_trip(b):
    assert sb(sb_inv(b)) == b


def test_eta():
    assert eta_plus((3, 1)) == (1, 3, 1)
    assert eta_minus((3, 1)) == (3, 1, 1)


@given(nat1)
def test_t_g_cycles_fully(s):
    assert t_g(s) == s[1:] + s[:1]
    out = s
    for _ in range(len(s)):
        out = t_g(out)
    assert out == s


def test_t_z_cases():
    assert t_z((3, 1, 2)) == (2, 1, 3)
    assert t_z((1, 2)) == (2, 1)
    assert t_z((1, 2, 3)) == (3, 2, 1)
    assert t_z((1, 1, 2, 5)) == (2, 5, 1, 1)
    assert t_z((4,)) == (4,)
    assert t_z((1,)) == (1,)


@given(nat1)
def test_t_z_preserves_bead_count(s):
    assert sum(t_z(s)) == sum(s)
    assert all(q >= 1 for q in t_z(s))


def test_pinch_cases():
    assert pinch_left(()) == ()
    assert pinch_left((1,)) == (1,)
    assert pinch_left((3, 1)) == (1, 2, 1)
    assert pinch_left((1, 4, 2)) == (5, 2)
    assert pinch_right((3, 1)) == (4,)
    assert pinch_right((3, 2)) == (3, 1, 1)
    assert pinch_both((1, 1)) == (1, 1)
    assert pinch_both((1, 1, 1)) == (3,)


def test_knead_cases():
    assert knead((5,)) == (5,)
    assert knead((3,)) == (3,)
    assert knead((1, 3, 1, 1)) == (1, 2, 2, 1)
    assert knead((1, 1, 1)) == (1, 1, 1)
    with pytest.raises(ValueError):
        knead(())


@given(nat1)
def test_pinch_and_knead_preserve_bead_count(s):
    assert sum(pinch_left(s)) == sum(s)
    assert sum(pinch_right(s)) == sum(s)
    assert sum(knead(s)) == sum(s)


def test_zagier_shift_factors_through_pinching():
    # exhaustive at small scale; the verification suite runs this large
    for l in range(1, 5):
        for s in product((1, 2, 3), repeat=l):
            assert pinch_both(knead(pinch_both(s))) == t_z(s), s


def test_rotate_bin_cases():
    assert rotate_bin("0110") == "1100"
    assert rotate_bin("1000") == "0001"
    assert rotate_bin("10011") == "11001"
    ring = ["10011", "11001", "00111", "01110", "11100"]
    for cur, nxt in zip(ring, ring[1:] + ring[:1]):
        assert rotate_bin(cur) == nxt
    with pytest.raises(ValueError):
        rotate_bin("000")


@given(bin1)
def test_rotate_bin_is_a_rotation(b):
    r = rotate_bin(b)
    assert len(r) == len(b)
    assert weight(r) == weight(b)
    assert r in (b[i:] + b[:i] for i in range(len(b)))


@given(bin1)
def test_rotate_bin_orbit_returns(b):
    seen = {b}
    cur = rotate_bin(b)
    steps = 1
    while cur != b:
        assert steps <= len(b)
        seen.add(cur)
        cur = rotate_bin(cur)
        steps += 1


def test_primitive_examples():
    assert is_primitive("10011")
    assert not is_primitive("1010")
    assert not is_primitive("111")
    assert is_primitive("1")
    assert is_primitive((1, 2, 1))
    assert not is_primitive((2, 1, 2, 1))
    with pytest.raises(ValueError):
        is_primitive("")


@given(bin1)
def test_primitive_agrees_with_naive(b):
    naive = all(b[i:] + b[:i] != b for i in range(1, len(b)))
    assert is_primitive(b) == naive


@given(st.text(alphabet="012", min_size=1, max_size=12))
def test_least_rotation_is_minimum(s):
    assert least_rotation(s) == min(s[i:] + s[:i] for i in range(len(s)))


@given(bin1)
def test_necklace_rotation_invariance(b):
    n = necklace(b)
    assert isinstance(n, Necklace)
    for i in range(len(b)):
        assert necklace(b[i:] + b[:i]) == n


def test_alternating_necklace_colors():
    # "1001": the two 1s are rotation-inequivalent once one is marked
    x = ColoredBin("1001", 0)
    y = ColoredBin("1001", 3)
    assert alternating_necklace(x) != alternating_necklace(y)
    assert not alternating_equal(x, y)
    # rotating bits and mark together changes nothing
    assert alternating_equal(x, ColoredBin("0110", 2))
    assert alternating_equal(y, ColoredBin("0110", 1))
    # with two 1s adjacent, one rotation swaps the colors
    assert alternating_equal(ColoredBin("11", 0), ColoredBin("11", 1))


def test_alternating_necklace_validation():
    with pytest.raises(ValueError):
        alternating_necklace(ColoredBin("1001", 1))
    with pytest.raises(ValueError):
        alternating_necklace(ColoredBin("1001", 7))


@given(bin1, st.data())
def test_alternating_necklace_representative_independence(b, data):
    ones = [i for i, ch in enumerate(b) if ch == "1"]
    mark = data.draw(st.sampled_from(ones))
    base = alternating_necklace(ColoredBin(b, mark))
    assert isinstance(base, AlternatingNecklace)
    r = data.draw(st.integers(0, len(b) - 1))
    rb = b[r:] + b[:r]
    assert alternating_necklace(ColoredBin(rb, (mark - r) % len(b))) == base
