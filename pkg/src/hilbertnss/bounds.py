"""Global bounds for Hilbert functions, their extremal cases, and fixture families.

Every bound is a pure integer evaluator.  ``BoundReport`` sweeps an ideal's
actual Hilbert function against one or more evaluators.  The fixtures have
known structure (degree, dimension, number of components), which is what
lets the radical/unmixed theorems be checked without certifying hypotheses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .core import QQ, Field, Polynomial, Ring, graded_ring, random_linear_form, random_polynomial
from .groebner import Ideal, ideal_intersection, is_nzd
from .hilbert import hilbert_data, hilbert_series
from .macaulay import binomial

NOT_APPLICABLE = None


# ---------------------------------------------------------------------------
# evaluators


def lower_bound_thm23(m: int, d: int, deg_I: int) -> int:
    """C(m+d+1, d+1) - C(m-deg I+d+1, d+1); valid for any homogeneous ideal of dimension d >= 0."""
    return binomial(m + d + 1, d + 1) - binomial(m - deg_I + d + 1, d + 1)


def dim0_bounds_lemma26(m: int, deg_I: int) -> tuple[int | None, int | None]:
    """(lower, stabilized value) for an unmixed zero-dimensional ideal.

    Below ``deg_I - 1`` only the lower bound m + 1 is known; from there on the
    Hilbert function equals the degree.
    """
    if deg_I < 1:
        raise ValueError("degree must be positive")
    if m < 0:
        return 0, None
    if m <= deg_I - 2:
        return m + 1, None
    return deg_I, deg_I


def upper_bound_thm21(m: int, d: int, deg_I: int, irr_I: int) -> int:
    return deg_I * m**d + irr_I * d


def upper_bound_thm22(m: int, d: int, deg_I: int) -> int:
    return binomial(m + deg_I + d, d + 1) - binomial(m + d, d + 1)


def chardin_bound(m: int, d: int, deg_I: int) -> int:
    return deg_I * binomial(m + d, d)


def section_bound_thm24(m: int, d: int, deg_I: int, deg_f: int) -> int | None:
    """Upper bound for h_{(I, f)}(m), or ``NOT_APPLICABLE`` outside its range.

    For d >= 1 the bound 3·deg f·deg I·C(m+d-1, d-1) needs m >= 5·d·deg I.
    For d = 0 it is deg I for m >= 1 and 0 once m >= deg I + deg f - 1.
    """
    if d < 0:
        raise ValueError("dimension must be nonnegative")
    if d == 0:
        if m >= deg_I + deg_f - 1:
            return 0
        return deg_I if m >= 1 else NOT_APPLICABLE
    if m < section_threshold(d, deg_I):
        return NOT_APPLICABLE
    return 3 * deg_f * deg_I * binomial(m + d - 1, d - 1)


def section_threshold(d: int, deg_I: int) -> int:
    return 5 * d * deg_I


def lemma_2_7_rhs(m: int, d: int, deg_I: int) -> int:
    return binomial(m + d, d) - binomial(m + d - 3 * deg_I, d)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class BoundRow:
    m: int
    lower: int | None
    actual: int
    upper: int | None


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    description: str
    m_range: tuple[int, int]
    rows: tuple[BoundRow, ...]
    violated_at: int | None
    extremal: bool
    hypothesis: str = "certified"

    @property
    def holds(self) -> bool:
        return self.violated_at is None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else f"violated-at({self.violated_at})"

    def to_json(self) -> dict:
        def s(v):
            return None if v is None else str(v)

        return {
            "bound_name": self.bound_name,
            "ideal": self.description,
            "m_range": list(self.m_range),
            "rows": [[r.m, s(r.lower), str(r.actual), s(r.upper)] for r in self.rows],
            "verdict": self.verdict,
            "extremal": self.extremal,
            "hypothesis": self.hypothesis,
        }


def _make_report(name, description, m_lo, m_hi, rows, hypothesis="certified") -> BoundReport:
    violated = None
    extremal = bool(rows)
    for r in rows:
        bad = (r.lower is not None and r.actual < r.lower) or (r.upper is not None and r.actual > r.upper)
        if bad and violated is None:
            violated = r.m
        if r.lower is None and r.upper is None:
            continue
        tight = (r.lower is not None and r.actual == r.lower) or (r.upper is not None and r.actual == r.upper)
        extremal = extremal and tight
    if violated is not None:
        extremal = False
    return BoundReport(name, description, (m_lo, m_hi), tuple(rows), violated, extremal, hypothesis)


def default_m_range(d: int, deg_I: int, budget: int = 60) -> tuple[int, int]:
    return 1, min(max(12, 5 * d * deg_I + 5), budget)


def sweep_bound(
    I: Ideal,
    bound: str,
    m_range: tuple[int, int] | None = None,
    irr: int | None = None,
    section: Polynomial | None = None,
    hypothesis: str = "certified",
    description: str | None = None,
) -> BoundReport:
    """Compare h_I (or h_{(I, f)} for the section bound) against one named bound.

    ``bound`` is one of ``thm2.3``, ``lemma2.6``, ``thm2.1``, ``thm2.2``,
    ``chardin``, ``sandwich`` or ``thm2.4``.
    """
    data = hilbert_data(I)
    d, deg_I = data.projective_dimension, data.degree
    lo, hi = m_range or default_m_range(max(d, 0), deg_I)
    desc = description or repr(I)
    rows = []
    if bound == "thm2.4":
        if section is None:
            raise ValueError("the section bound needs f")
        cut = hilbert_series(I + section)
        e = section.degree()
        for m in range(lo, hi + 1):
            rows.append(BoundRow(m, None, cut.coefficient(m), section_bound_thm24(m, d, deg_I, e)))
        return _make_report(bound, desc, lo, hi, rows, hypothesis)
    if d < 0:
        raise ValueError("bounds need an ideal of dimension >= 0")
    for m in range(lo, hi + 1):
        h = data.value(m)
        if bound == "thm2.3":
            rows.append(BoundRow(m, lower_bound_thm23(m, d, deg_I), h, None))
        elif bound == "lemma2.6":
            if d != 0:
                raise ValueError("Lemma 2.6 is about zero-dimensional ideals")
            low, val = dim0_bounds_lemma26(m, deg_I)
            rows.append(BoundRow(m, low, h, val))
        elif bound == "thm2.1":
            if irr is None:
                raise ValueError("Theorem 2.1 needs the number of components")
            rows.append(BoundRow(m, None, h, upper_bound_thm21(m, d, deg_I, irr)))
        elif bound == "thm2.2":
            rows.append(BoundRow(m, None, h, upper_bound_thm22(m, d, deg_I)))
        elif bound == "chardin":
            rows.append(BoundRow(m, None, h, chardin_bound(m, d, deg_I)))
        elif bound == "sandwich":
            uppers = [upper_bound_thm22(m, d, deg_I), chardin_bound(m, d, deg_I)]
            if irr is not None:
                uppers.append(upper_bound_thm21(m, d, deg_I, irr))
            rows.append(BoundRow(m, lower_bound_thm23(m, d, deg_I), h, min(uppers)))
        else:
            raise ValueError(f"unknown bound {bound!r}")
    return _make_report(bound, desc, lo, hi, rows, hypothesis)


def series_lower_bound_check(I: Ideal, order: int = 15) -> bool:
    """Termwise H_I(t) >= (1 - t^deg)/(1 - t)^(d+2) up to ``order``."""
    data = hilbert_data(I)
    d, deg_I = data.projective_dimension, data.degree
    # coefficient of t^m in (1 - t^deg)/(1-t)^(d+2)
    for m in range(order + 1):
        coeff = binomial(m + d + 1, d + 1) - binomial(m - deg_I + d + 1, d + 1)
        if data.value(m) < coeff:
            return False
    return True


# ---------------------------------------------------------------------------
# Lemma 2.7, Prop 2.6, linear closures


@dataclass(frozen=True)
class Lemma27Witness:
    m0: int | None
    lhs: int | None
    rhs: int | None
    window: tuple[int, int]

    @property
    def found(self) -> bool:
        return self.m0 is not None


class HypothesisViolation(RuntimeError):
    """A construction found evidence that its input breaks a theorem's hypotheses."""


def lemma_2_7_witness(I: Ideal, eta: Polynomial, strict: bool = True) -> Lemma27Witness:
    """Least m0 in [3·deg I, 5·d·deg I] with h_{(I, η)}(m0) <= C(m0+d, d) - C(m0+d-3 deg I, d)."""
    if eta.degree() != 1 or not eta.is_homogeneous():
        raise ValueError("η must be a linear form")
    if not is_nzd(eta, I):
        raise ValueError("η is a zero divisor modulo I")
    data = hilbert_data(I)
    d, deg_I = data.projective_dimension, data.degree
    if d < 1:
        raise ValueError("Lemma 2.7 needs dimension >= 1")
    cut = hilbert_series(I + eta)
    lo, hi = 3 * deg_I, 5 * d * deg_I
    for m in range(lo, hi + 1):
        lhs = cut.coefficient(m)
        rhs = lemma_2_7_rhs(m, d, deg_I)
        if lhs <= rhs:
            return Lemma27Witness(m, lhs, rhs, (lo, hi))
    if strict:
        raise HypothesisViolation("no witness in range; the ideal is probably not unmixed and radical")
    return Lemma27Witness(None, None, None, (lo, hi))


def linear_part(I: Ideal) -> list[Polynomial]:
    """A basis of the degree-1 component I_1 (read off a graded reduced basis)."""
    return [g for g in I.gb() if g.degree() == 1]


@dataclass(frozen=True)
class LinearClosure:
    ideal: Ideal
    dimension: int  # dimension of the linear span L(V)
    h1_consistent: bool


def linear_closure(I: Ideal) -> LinearClosure:
    """The ideal of L(V), generated by the linear forms in I."""
    lin = linear_part(I)
    n = I.ring.nvars - 1
    dim_L = n - len(lin)
    h1 = hilbert_series(I).coefficient(1)
    return LinearClosure(Ideal(I.ring, lin), dim_L, h1 == dim_L + 1)


def disjoint_subspaces_lemma23(I: Ideal, J: Ideal) -> bool:
    """Whether V(I) and V(J) lie in disjoint linear subspaces: their linear parts span all forms."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    lin = Ideal(I.ring, linear_part(I) + linear_part(J))
    return all(lin.contains(x) for x in I.ring.gens)


def extremal_test_prop26(I: Ideal) -> bool:
    """Whether h_I meets the lower bound of Theorem 2.3 with equality for all m >= 1.

    The numeric test runs over a window long enough to pin down both
    eventual polynomials; the structural cross-check counts linear forms and
    looks for an element of degree deg I outside their span.
    """
    data = hilbert_data(I)
    d, deg_I = data.projective_dimension, data.degree
    if d < 0:
        return False
    top = max(data.regularity_onset, deg_I) + d + 2
    numeric = all(data.value(m) == lower_bound_thm23(m, d, deg_I) for m in range(1, top + 1))
    n = I.ring.nvars - 1
    lin = linear_part(I)
    structural = len(lin) >= n - d - 1
    if structural and len(lin) == n - d - 1:
        rest = [g for g in I.gb() if g.degree() > 1]
        structural = len(rest) == 1 and rest[0].degree() == deg_I
    elif structural:
        # n - d linear forms: I is a linear space of dimension d, so deg I = 1
        structural = deg_I == 1 and len(lin) == n - d
        structural = structural and all(g.degree() == 1 for g in I.gb())
    if numeric != structural:
        raise AssertionError(f"numeric ({numeric}) and structural ({structural}) extremality disagree")
    return numeric


def bezout_check(I: Ideal, J: Ideal) -> BoundReport:
    """deg(I + J) against deg I · deg J (meaningful when the sum is radical)."""
    dI = hilbert_data(I).degree
    dJ = hilbert_data(J).degree
    dS = hilbert_data(I + J).degree
    row = BoundRow(0, None, dS, dI * dJ)
    return _make_report("bezout", f"{I!r} + {J!r}", 0, 0, [row], "asserted-by-user")


# ---------------------------------------------------------------------------
# fixtures


@dataclass
class Fixture:
    name: str
    ideal: Ideal
    dimension: int
    degree: int
    irr: int
    components: tuple[Ideal, ...] = field(default_factory=tuple)


def fixture_hypersurface_in_subspace(n: int, d: int, e: int, seed: int = 0, field_: Field = QQ) -> Fixture:
    """(x_{d+2}, ..., x_n, f) with f a random form of degree e in x_0..x_{d+1}."""
    if e < 1 or not 0 <= d <= n - 1:
        raise ValueError("need e >= 1 and 0 <= d <= n - 1")
    R = graded_ring(n + 1, field_)
    lin = [R.gen(i) for i in range(d + 2, n + 1)]
    rng = random.Random(seed)
    while True:
        f = random_polynomial(R, e, True, seed=rng.randrange(2**63), variables=range(d + 2))
        if not f.is_zero and not Ideal(R, lin).contains(f):
            break
    I = Ideal(R, lin + [f])
    return Fixture(f"hyp:{n}:{d}:{e}", I, d, e, 1)


def _rnc_gens(R: Ring, coords: Sequence[int]) -> list[Polynomial]:
    k = len(coords) - 1
    x = [R.gen(c) for c in coords]
    out = []
    for i in range(k):
        for j in range(i + 1, k):
            out.append(x[i] * x[j + 1] - x[i + 1] * x[j])
    return out


def fixture_rational_normal_curve(n: int, field_: Field = QQ) -> Fixture:
    """2×2 minors of [[x0 .. x_{n-1}], [x1 .. x_n]]."""
    if n < 1:
        raise ValueError("n must be positive")
    R = graded_ring(n + 1, field_)
    return Fixture(f"rnc:{n}", Ideal(R, _rnc_gens(R, range(n + 1))), 1, n, 1)


def fixture_c_n_delta(n: int, delta: Sequence[int], field_: Field = QQ) -> Fixture:
    """Disjoint rational normal curves of degrees δ_j in consecutive coordinate blocks."""
    delta = list(delta)
    l = len(delta)
    if l < 1 or any(x < 1 for x in delta) or sum(delta) > n + 1 - l:
        raise ValueError("need positive δ_j with |δ| <= n + 1 - l")
    R = graded_ring(n + 1, field_)
    comps = []
    start = 0
    for dj in delta:
        block = list(range(start, start + dj + 1))
        others = [R.gen(i) for i in range(n + 1) if i not in block]
        comps.append(Ideal(R, others + _rnc_gens(R, block)))
        start += dj + 1
    I = comps[0]
    for C in comps[1:]:
        I = ideal_intersection(I, C)
    return Fixture(f"cndelta:{n}:{','.join(map(str, delta))}", I.reduced(), 1, sum(delta), l, tuple(comps))


def point_ideal(R: Ring, point: Sequence[int]) -> Ideal:
    """Ideal of a point of P^n: the 2×2 minors x_i p_j - x_j p_i."""
    x = R.gens
    pivot = next(i for i, c in enumerate(point) if c)
    gens = [x[i] * point[pivot] - x[pivot] * point[i] for i in range(len(point)) if i != pivot]
    return Ideal(R, gens)


def fixture_points(n: int, points: Sequence[Sequence[int]], field_: Field = QQ) -> Fixture:
    """Reduced union of distinct points of P^n."""
    R = graded_ring(n + 1, field_)
    comps = tuple(point_ideal(R, p) for p in points)
    I = comps[0]
    for C in comps[1:]:
        I = ideal_intersection(I, C)
    return Fixture(f"points:{n}:{len(points)}", I.reduced(), 0, len(points), len(points), comps)


def fixture_random_points(n: int, k: int, seed: int = 0, field_: Field = QQ) -> Fixture:
    rng = random.Random(seed)
    seen: list[tuple[int, ...]] = []
    while len(seen) < k:
        p = (1,) + tuple(rng.randint(-5, 5) for _ in range(n))
        if p not in seen:
            seen.append(p)
    return fixture_points(n, seen, field_)


def certified_section(I: Ideal, degree: int, seed: int = 0, retries: int = 8) -> Polynomial:
    """A seeded random form of the given degree that is verified to be a nonzerodivisor modulo I."""
    rng = random.Random(seed)
    for _ in range(retries):
        if degree == 1:
            f = random_linear_form(I.ring, rng.randrange(2**63))
        else:
            f = random_polynomial(I.ring, degree, True, seed=rng.randrange(2**63))
        if not f.is_zero and is_nzd(f, I):
            return f
    raise HypothesisViolation(f"no nonzerodivisor of degree {degree} found in {retries} tries")
