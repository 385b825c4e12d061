"""Bead strings, binary strings, necklaces, and their transfer moves.

A NatString is a tuple of positive integers; a BinString is a str over
{0, 1}. The stars-and-bars bijection sb ties the two together, and the
moves t_z, t_g, rotate_bin are the string shadows of the reduction
operators on forms.
"""

from __future__ import annotations

from typing import NamedTuple


def check_nat(s, min_len: int = 1) -> tuple:
    t = tuple(int(q) for q in s)
    if len(t) < min_len:
        raise ValueError(f"need at least {min_len} entries, got {t}")
    if any(q < 1 for q in t):
        raise ValueError(f"entries must be positive integers, got {t}")
    return t


def check_bin(b: str, min_weight: int = 0) -> str:
    if not isinstance(b, str) or not b or set(b) - {"0", "1"}:
        raise ValueError(f"need a nonempty string over 0/1, got {b!r}")
    if b.count("1") < min_weight:
        raise ValueError(f"need at least {min_weight} ones, got {b!r}")
    return b


def sb(s) -> str:
    """Stars and bars: (q1, ..., ql) to the bar picture of its partial sums.

    The output has length q1 + ... + ql - 1 with a 1 at each gap where a
    partial sum q1 + ... + qi lands, so sb((2, 1, 3)) = '01100'.  Needs at
    least two entries; a single entry would leave no bar.
    """
    t = check_nat(s, min_len=2)
    total = sum(t)
    bars = set()
    acc = 0
    for q in t[:-1]:
        acc += q
        bars.add(acc)
    return "".join("1" if i in bars else "0" for i in range(1, total))


def sb_inv(b: str):
    """Inverse of sb: gaps with a 1 cut 1..m+1 into consecutive blocks."""
    check_bin(b, min_weight=1)
    m = len(b)
    bars = [i + 1 for i, ch in enumerate(b) if ch == "1"]
    parts = [bars[0]]
    parts.extend(bars[i + 1] - bars[i] for i in range(len(bars) - 1))
    parts.append(m + 1 - bars[-1])
    return tuple(parts)


def weight(b: str) -> int:
    return check_bin(b).count("1")


def eta_plus(s) -> tuple:
    """Prepend a 1."""
    return (1,) + check_nat(s)


def eta_minus(s) -> tuple:
    """Append a 1."""
    return check_nat(s) + (1,)


def t_g(s) -> tuple:
    """Cyclic left shift, the string shadow of the Gauss step."""
    t = check_nat(s)
    return t[1:] + t[:1]


def t_z(s) -> tuple:
    """String shadow of the Zagier step on bead strings.

    Moves one unit from the first entry to the last when the first entry
    exceeds 1; a leading 1 instead gets carried behind a reversed pair
    (length 2) or sent to the back together with the second entry.
    """
    t = check_nat(s)
    l = len(t)
    if l == 1:
        return t
    if t[0] >= 2:
        return (t[0] - 1,) + t[1:-1] + (t[-1] + 1,)
    if l == 2:
        return (t[1], t[0])
    return t[2:] + (t[1], t[0])


def pinch_left(s) -> tuple:
    """Left pinch: q1 >= 2 splits off a 1, a leading 1 melts into q2.

    Fixes (1) and the empty string.
    """
    t = check_nat(s, min_len=0)
    if len(t) <= 1 and (not t or t[0] == 1):
        return t
    if t[0] >= 2:
        return (1, t[0] - 1) + t[1:]
    return (t[1] + 1,) + t[2:]


def pinch_right(s) -> tuple:
    """Mirror image of pinch_left."""
    t = check_nat(s, min_len=0)
    if len(t) <= 1 and (not t or t[0] == 1):
        return t
    if t[-1] >= 2:
        return t[:-1] + (t[-1] - 1, 1)
    return t[:-2] + (t[-2] + 1,)


def pinch_both(s) -> tuple:
    return pinch_right(pinch_left(s))


def knead(s) -> tuple:
    """Remove the leftmost entry, pinch both ends of the rest, append it.

    A single entry survives unchanged: the remainder is empty and pinching
    fixes the empty string.
    """
    t = check_nat(s, min_len=1)
    return pinch_both(t[1:]) + (t[0],)


def rotate_bin(b: str) -> str:
    """Necklace rotation matching the Zagier step through sigma.

    A leading 0 moves to the back; with a single 1 in front of zeros that
    1 moves to the back; otherwise the block through the second 1 wraps.
    """
    b = check_bin(b, min_weight=1)
    if b[0] == "0":
        return b[1:] + "0"
    if b.count("1") == 1:
        return b[1:] + "1"
    j = b.index("1", 1)
    return b[j + 1:] + b[: j + 1]


def is_primitive(s) -> bool:
    """True when the string is not a repetition of a shorter block."""
    n = len(s)
    if n == 0:
        raise ValueError("primitivity needs a nonempty string")
    for d in range(1, n // 2 + 1):
        if n % d == 0 and s == s[:d] * (n // d):
            return False
    return True


def least_rotation(s):
    """Lexicographically smallest rotation, by Booth's algorithm."""
    n = len(s)
    if n == 0:
        raise ValueError("need a nonempty string")
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return ss[k:k + n]


class Necklace(NamedTuple):
    """A cyclic word, stored as its least rotation."""

    canonical: str


class AlternatingNecklace(NamedTuple):
    """A cyclic word with ones 2-colored alternately around the cycle.

    phase is the least index of a distinguished-color 1 in the canonical
    rotation, over all rotations realizing it.
    """

    canonical: str
    phase: int


class ColoredBin(NamedTuple):
    """A binary string with one 1 marked as the distinguished color."""

    bits: str
    green: int


def necklace(b: str) -> Necklace:
    return Necklace(least_rotation(check_bin(b, min_weight=1)))


def _greens(x: ColoredBin) -> list:
    bits = check_bin(x.bits, min_weight=1)
    if not (0 <= x.green < len(bits)) or bits[x.green] != "1":
        raise ValueError(f"marked position must hold a 1, got {x}")
    ones = [i for i, ch in enumerate(bits) if ch == "1"]
    k = ones.index(x.green)
    # walk the ones cyclically from the mark; every second one shares its color
    return [ones[(k + j) % len(ones)] for j in range(0, len(ones), 2)]


def alternating_necklace(x: ColoredBin) -> AlternatingNecklace:
    bits = x.bits
    canon = least_rotation(check_bin(bits, min_weight=1))
    n = len(bits)
    greens = _greens(x)
    phases = []
    for r in range(n):
        if bits[r:] + bits[:r] == canon:
            phases.extend((p - r) % n for p in greens)
    return AlternatingNecklace(canon, min(phases))


def alternating_equal(x: ColoredBin, y: ColoredBin) -> bool:
    """Whether some rotation matches the bits and sends mark-colored ones
    of x onto mark-colored ones of y."""
    return alternating_necklace(x) == alternating_necklace(y)
