import itertools

from hypothesis import given
from hypothesis import strategies as st

from hilbertnss.macaulay import binomial, i_binomial_expansion, is_O_sequence, lemma_1_4, macaulay_step


def test_binomial_convention():
    assert binomial(5, 3) == 10
    assert binomial(2, 5) == 0
    assert binomial(-1, 2) == 0


def test_expansion_examples():
    assert i_binomial_expansion(10, 3).parts == ((5, 3),)
    assert i_binomial_expansion(11, 3).parts == ((5, 3), (2, 2))
    assert i_binomial_expansion(1, 1).parts == ((1, 1),)


def test_macaulay_step_examples():
    assert macaulay_step(10, 3) == 15
    assert macaulay_step(11, 3) == 16
    assert all(macaulay_step(1, i) == 1 for i in range(1, 12))
    assert macaulay_step(3, 1) == 6


def test_O_sequence_examples():
    assert is_O_sequence([1, 3, 9]) == (False, 2)
    assert is_O_sequence([2, 1])[0] is False
    assert is_O_sequence([1, 4, 7, 10, 13])[0]
    assert is_O_sequence([1, 2, 0, 0])[0]
    assert not is_O_sequence([1, 2, 0, 1])[0]


def test_lemma_1_4_examples():
    assert lemma_1_4(1, 2, 0) == (5, 5)
    for d in range(5):
        for m in range(6):
            left, _ = lemma_1_4(d, 1, m)
            assert left == binomial(m + d + 1, d)


def test_expansion_uniqueness_exhaustive():
    """Greedy is the only representation with strictly decreasing tops >= their index."""
    for i in range(1, 5):
        reps: dict[int, list] = {}
        # all strictly decreasing top sequences (t_i > t_{i-1} > ... > t_j >= j)
        for length in range(1, i + 1):
            ks = list(range(i, i - length, -1))
            for tops in itertools.combinations(range(201 if length == 1 else 40, 0, -1), length):
                if any(t < k for t, k in zip(tops, ks)):
                    continue
                v = sum(binomial(t, k) for t, k in zip(tops, ks))
                if v <= 200:
                    reps.setdefault(v, []).append(tops)
        for c in range(1, 201):
            assert reps[c] == [i_binomial_expansion(c, i).tops()], (c, i)


@given(st.integers(1, 10**6), st.integers(1, 10))
def test_reconstruction(c, i):
    e = i_binomial_expansion(c, i)
    assert e.value == c
    tops = e.tops()
    assert all(a > b for a, b in zip(tops, tops[1:]))
    assert all(t >= k >= 1 for t, k in e.parts)
    shifted = i_binomial_expansion(macaulay_step(c, i), i + 1)
    assert shifted.parts == tuple((t + 1, k + 1) for t, k in e.parts)


@given(st.integers(0, 6), st.integers(1, 10), st.integers(-10, 10))
def test_lemma_1_4_random(d, D, m):
    left, right = lemma_1_4(d, D, m)
    assert left == right


@given(st.integers(1, 5000), st.integers(1, 5000), st.integers(1, 8))
def test_remark_1_7_monotonicity(b, c, i):
    if b < c:
        b, c = c, b
    assert macaulay_step(b, i) >= macaulay_step(c, i)
    eb, ec = i_binomial_expansion(b, i).tops(), i_binomial_expansion(c, i).tops()
    assert (b >= c) == (eb >= ec)
    assert (b > c) == (eb > ec)
