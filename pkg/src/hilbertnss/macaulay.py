"""Binomial calculus behind Macaulay's growth bound for Hilbert functions."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be 0 whenever a < b or a < 0."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class BinomialExpansion:
    """c = Σ C(top, k) over ``parts`` with strictly decreasing tops."""

    i: int
    parts: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(binomial(top, k) for top, k in self.parts)

    def tops(self) -> tuple[int, ...]:
        return tuple(top for top, _ in self.parts)


def i_binomial_expansion(c: int, i: int) -> BinomialExpansion:
    """The greedy i-binomial expansion of a positive integer c."""
    if c < 1 or i < 1:
        raise ValueError("expansion needs c >= 1 and i >= 1")
    parts = []
    k = i
    rest = c
    while rest > 0 and k >= 1:
        top = k
        # ascending search for the largest top with C(top, k) <= rest
        while binomial(top + 1, k) <= rest:
            top += 1
        parts.append((top, k))
        rest -= binomial(top, k)
        k -= 1
    assert rest == 0
    return BinomialExpansion(i, tuple(parts))


def macaulay_step(c: int, i: int) -> int:
    """c^<i>: shift every part (top, k) of the i-expansion to (top + 1, k + 1)."""
    if c == 0:
        return 0
    return sum(binomial(top + 1, k + 1) for top, k in i_binomial_expansion(c, i).parts)


def is_O_sequence(seq) -> tuple[bool, int | None]:
    """Check c_0 = 1 and c_{i+1} <= c_i^<i>; returns (ok, first failing index).

    Zero is absorbing: once a term vanishes every later term must too.
    """
    seq = list(seq)
    if not seq:
        return True, None
    if seq[0] != 1:
        return False, 0
    for i in range(1, len(seq)):
        prev, cur = seq[i - 1], seq[i]
        if cur < 0:
            return False, i
        if i == 1:
            # c_0 = 1 puts no constraint on the number of variables
            continue
        if cur > macaulay_step(prev, i - 1):
            return False, i
    return True, None


def lemma_1_4(d: int, D: int, m: int) -> tuple[int, int]:
    """Both sides of C(m+d+1+D, d+1) - C(m+d+1, d+1) = Σ_{i=1..D} C(m+d+i, d)."""
    if d < 0 or D < 1:
        raise ValueError("need d >= 0 and D >= 1")
    left = binomial(m + d + 1 + D, d + 1) - binomial(m + d + 1, d + 1)
    right = sum(binomial(m + d + i, d) for i in range(1, D + 1))
    if left != right:
        raise AssertionError(f"identity fails at d={d}, D={D}, m={m}")
    return left, right
