"""Hilbert functions, series and polynomials of homogeneous ideals.

The series numerator is computed from the minimal generators of the initial
ideal under graded reverse lex, by splitting on pivot monomials.  A
Gröbner-free brute-force rank computation serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import Monomial, Polynomial, monomials_of_degree
from .groebner import GREVLEX, Ideal, NotHomogeneous
from .linalg import SparseEchelon
from .macaulay import binomial


class UnitIdealError(ValueError):
    """Dimension and degree are undefined for the unit ideal."""


# ---------------------------------------------------------------------------
# univariate integer polynomials as coefficient tuples, lowest degree first


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _padd(a, b) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _one_minus_t_power(e: int) -> tuple[int, ...]:
    if e == 0:
        return ()
    out = [0] * (e + 1)
    out[0] = 1
    out[e] -= 1
    return tuple(out)


def _divide_one_minus_t(c: tuple[int, ...]) -> tuple[tuple[int, ...], bool]:
    """Divide by (1 - t); returns (quotient, exact)."""
    if not c:
        return (), True
    if sum(c) != 0:
        return c, False
    q = []
    acc = 0
    for x in c[:-1]:
        acc += x
        q.append(acc)
    return _trim(q), True


# ---------------------------------------------------------------------------
# monomial ideals


def _minimalize(gens) -> tuple[Monomial, ...]:
    gens = sorted(set(gens), key=sum)
    out: list = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return tuple(sorted(out))


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if any(not any(m) for m in gens):
        return ()
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    if sum(len(s) for s in supports) == len(frozenset().union(*supports)):
        out: tuple[int, ...] = (1,)
        for m in gens:
            out = _pmul(out, _one_minus_t_power(sum(m)))
        return out
    # pivot on the variable shared by the most non-pure-power generators
    counts: dict[int, list[int]] = {}
    pure: dict[int, int] = {}
    for m, s in zip(gens, supports):
        if len(s) == 1:
            (i,) = s
            pure[i] = m[i]
        else:
            for i in s:
                counts.setdefault(i, []).append(m[i])
    var = max(sorted(counts), key=lambda i: len(counts[i]))
    exps = sorted(counts[var])
    e = exps[len(exps) // 2]
    if var in pure:
        e = min(e, pure[var] - 1)
    pivot = tuple(e if i == var else 0 for i in range(len(gens[0])))
    plus = _minimalize([m for m in gens if m[var] < e] + [pivot])
    colon = _minimalize([tuple(max(a - b, 0) for a, b in zip(m, pivot)) for m in gens])
    t_e = (0,) * e + (1,)
    return _padd(_numerator(plus), _pmul(t_e, _numerator(colon)))


def monomial_hilbert_numerator(leading_terms, nvars: int | None = None) -> tuple[int, ...]:
    """N(t) with H(t) = N(t) / (1 - t)^nvars for the monomial ideal they generate.

    Coefficients are listed from t^0 upwards.
    """
    gens = _minimalize(tuple(m) for m in leading_terms)
    return _numerator(gens) if gens else (1,)


# ---------------------------------------------------------------------------
# series and data


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple[int, ...]
    nvars: int

    def coefficient(self, m: int) -> int:
        """h(m), the coefficient of t^m."""
        if m < 0:
            return 0
        n = self.nvars - 1
        return sum(a * binomial(m - k + n, n) for k, a in enumerate(self.numerator) if k <= m)

    def values(self, upto: int) -> list[int]:
        return [self.coefficient(m) for m in range(upto + 1)]

    def reduced(self) -> tuple[tuple[int, ...], int]:
        """Cancel (1 - t) factors: returns (reduced numerator, pole order)."""
        num = self.numerator
        r = self.nvars
        while r > 0:
            q, exact = _divide_one_minus_t(num)
            if not exact or not num:
                break
            num, r = q, r - 1
        return num, r

    def shifted_difference(self, e: int) -> "HilbertSeries":
        """Series of (1 - t^e)·H(t)."""
        return HilbertSeries(_pmul(self.numerator, _one_minus_t_power(e)), self.nvars)


@dataclass(frozen=True)
class HilbertData:
    series: HilbertSeries
    hilbert_polynomial: tuple[Fraction, ...]  # coefficients in m, lowest first
    projective_dimension: int
    degree: int
    regularity_onset: int

    def value(self, m: int) -> int:
        return self.series.coefficient(m)

    def polynomial_value(self, m: int) -> Fraction:
        return sum((c * m**k for k, c in enumerate(self.hilbert_polynomial)), Fraction(0))

    def to_json(self, upto: int = 12) -> dict:
        return {
            "dimension": self.projective_dimension,
            "degree": str(self.degree),
            "regularity_onset": self.regularity_onset,
            "hilbert_values": [str(v) for v in self.series.values(upto)],
            "hilbert_polynomial": [str(c) for c in self.hilbert_polynomial],
            "series_numerator": [str(c) for c in self.series.numerator],
        }


def _require_homogeneous(I: Ideal):
    if not I.is_homogeneous:
        raise NotHomogeneous("Hilbert functions need a homogeneous ideal")


def hilbert_series(I: Ideal) -> HilbertSeries:
    _require_homogeneous(I)
    G = I.gb(GREVLEX)
    num = monomial_hilbert_numerator(G.leading_monomials, I.ring.nvars)
    return HilbertSeries(num, I.ring.nvars)


def hilbert_function(I: Ideal, m: int) -> int:
    """h_I(m) = dim_k (R/I)_m."""
    return hilbert_series(I).coefficient(m)


def hilbert_values(I: Ideal, upto: int) -> list[int]:
    return hilbert_series(I).values(upto)


def hilbert_brute_force(I: Ideal, m: int) -> int:
    """C(m+n, n) minus the rank of all degree-m monomial multiples of the generators."""
    _require_homogeneous(I)
    if m < 0:
        return 0
    ring = I.ring
    total = binomial(m + ring.nvars - 1, ring.nvars - 1)
    ech = SparseEchelon(ring.field, lambda c: c)
    for g in I.gens:
        e = g.degree()
        if e > m:
            continue
        for mono in monomials_of_degree(ring.nvars, m - e):
            ech.add(g.mul_monomial(mono).terms)
    return total - ech.rank


def _binomial_polynomial(shift: int, k: int) -> list[Fraction]:
    """Coefficients (in m) of C(m + shift, k) as a polynomial of degree k."""
    poly = [Fraction(1)]
    for j in range(k):
        # multiply by (m + shift - j) / (j + 1)
        c0 = Fraction(shift - j, j + 1)
        c1 = Fraction(1, j + 1)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i] += a * c0
            nxt[i + 1] += a * c1
        poly = nxt
    return poly


def _hilbert_polynomial(num_red: tuple[int, ...], r: int) -> tuple[Fraction, ...]:
    if r == 0:
        return ()
    out = [Fraction(0)] * r
    for k, a in enumerate(num_red):
        for i, c in enumerate(_binomial_polynomial(r - 1 - k, r - 1)):
            out[i] += a * c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def hilbert_data(I: Ideal) -> HilbertData:
    series = hilbert_series(I)
    if not series.numerator:
        raise UnitIdealError("the unit ideal has no dimension or degree")
    num_red, r = series.reduced()
    poly = _hilbert_polynomial(num_red, r)

    def pval(m):
        return sum((c * m**k for k, c in enumerate(poly)), Fraction(0))

    start = max(0, len(num_red) - 1 - r + 1)
    onset = start
    while onset > 0 and series.coefficient(onset - 1) == pval(onset - 1):
        onset -= 1
    for m in range(start, start + 10):
        if series.coefficient(m) != pval(m):
            raise AssertionError(f"Hilbert polynomial disagrees with h({m})")
    degree = sum(num_red)
    if r >= 1:
        lead = poly[-1] if poly else Fraction(0)
        fact = 1
        for j in range(2, r):
            fact *= j
        assert lead * fact == degree, "degree must equal d! times the leading coefficient"
    return HilbertData(series, poly, r - 1, degree, onset)


def dimension(I: Ideal) -> int:
    """Projective dimension: Krull dimension minus one (-1 for irrelevant-primary ideals)."""
    return hilbert_data(I).projective_dimension


def degree(I: Ideal, unit_convention: bool = False) -> int:
    """Degree of I; the length of R/I in dimension -1.

    The unit ideal raises ``UnitIdealError`` unless ``unit_convention`` asks
    for the convention that the whole ring has degree 0.
    """
    try:
        return hilbert_data(I).degree
    except UnitIdealError:
        if unit_convention:
            return 0
        raise


@dataclass(frozen=True)
class ExactSequenceResult:
    holds: bool
    witness: int | None
    checked_upto: int


def exact_sequence_check(I: Ideal, J: Ideal, cap: int = 10) -> ExactSequenceResult:
    """Check h_{I∩J}(m) = h_I(m) + h_J(m) - h_{I+J}(m) for 0 <= m <= cap."""
    from .groebner import ideal_intersection

    hi = hilbert_series(I)
    hj = hilbert_series(J)
    hs = hilbert_series(I + J)
    hx = hilbert_series(ideal_intersection(I, J))
    for m in range(cap + 1):
        if hx.coefficient(m) != hi.coefficient(m) + hj.coefficient(m) - hs.coefficient(m):
            return ExactSequenceResult(False, m, cap)
    return ExactSequenceResult(True, None, cap)
