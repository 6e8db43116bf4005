"""Regular sequences with controlled degrees.

Generic choices are realized by seeded sampling followed by an exact check:
a candidate is accepted only when ``is_nzd`` certifies it.  No primary
decomposition is ever computed; avoiding the associated primes of an ideal is
the same as being a nonzerodivisor modulo it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .core import Polynomial, Ring, affinize, homogenize_into, monomials_of_degree, random_polynomial
from .groebner import (
    Ideal,
    NotHomogeneous,
    exact_divide,
    is_nzd,
    is_regular_sequence,
    saturate,
)
from .hilbert import UnitIdealError, degree, dimension, hilbert_data

DEFAULT_RETRIES = 8


class RetryExhausted(RuntimeError):
    """No sampled candidate passed certification within the degree cap."""


class NotWeakRegular(ValueError):
    """The input sequence is not weak regular in the required localization."""


def integer_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) computed exactly."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    lo, hi = 0, 1
    while hi**k <= x:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid
    return lo


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_ideal_element(gens: Sequence[Polynomial], D: int, rng: random.Random) -> Polynomial | None:
    """A random element of the degree-D part of the ideal generated by homogeneous ``gens``.

    Returns None when no generator has degree <= D.
    """
    ring = gens[0].ring if gens else None
    out = None
    for g in gens:
        e = g.degree()
        if e > D:
            continue
        for mono in monomials_of_degree(ring.nvars, D - e):
            lam = ring.field.random_element(rng)
            term = g.mul_monomial(mono, lam)
            out = term if out is None else out + term
    return out


def _ideal_gens(I: Ideal) -> list[Polynomial]:
    return list(I.gb().elements) if I.gens else []


# ---------------------------------------------------------------------------
# Lemma 3.1 / Prop 3.1 / Theorem 3.1


def lemma31_cap(e: int, d: int, deg_I: int) -> int:
    """floor((e!·deg I)^(1/(e-d)))."""
    if e <= d:
        raise ValueError("need e > d")
    return integer_root(factorial(e) * deg_I, e - d)


def find_avoiding_element(
    I: Ideal, P: Ideal, degree_cap: int, seed=0, retries: int = DEFAULT_RETRIES
) -> Polynomial:
    """A homogeneous f in I, not in P, with deg f <= degree_cap."""
    if not I.is_homogeneous:
        raise NotHomogeneous("I must be homogeneous")
    rng = _rng(seed)
    gens = _ideal_gens(I)
    if not gens:
        raise RetryExhausted("the zero ideal has no element outside P")
    for D in range(1, degree_cap + 1):
        for _ in range(retries):
            f = random_ideal_element(gens, D, rng)
            if f is None:
                break
            if not f.is_zero and not P.contains(f):
                return f
    raise RetryExhausted(f"no element of I outside P found up to degree {degree_cap}")


def _sample_nzd(
    gens: Sequence[Polynomial], modulo: Ideal, lo: int, cap: int, rng: random.Random, retries: int
) -> Polynomial:
    for D in range(max(lo, 1), cap + 1):
        for _ in range(retries):
            f = random_ideal_element(gens, D, rng)
            if f is None:
                break
            if not f.is_zero and is_nzd(f, modulo):
                return f
    raise RetryExhausted(f"no certified nonzerodivisor found up to degree {cap}")


def prop31_cap(d: int, j: int, deg_I: int) -> int:
    return integer_root(factorial(d + j) * deg_I, j)


def extend_regular_sequence_prop31(I: Ideal, J: Ideal, seed=0, retries: int = DEFAULT_RETRIES) -> list[Polynomial]:
    """e - d homogeneous elements of I forming a regular sequence modulo J.

    The j-th element has degree at most floor(((d+j)!·deg I)^(1/j)).  The
    construction runs the induction of the proof top down: the element built
    while J still has dimension d + j is the one capped by index j.
    """
    if J.is_unit():
        raise ValueError("J is the unit ideal")
    data = hilbert_data(I)
    d, deg_I = data.projective_dimension, data.degree
    e = dimension(J)
    if e < d:
        raise ValueError("need dim J >= dim I")
    rng = _rng(seed)
    gens = _ideal_gens(I)
    current = J
    picked: dict[int, Polynomial] = {}
    for j in range(e - d, 0, -1):
        f = _sample_nzd(gens, current, 1, prop31_cap(d, j, deg_I), rng, retries)
        picked[j] = f
        current = current + f
    return [picked[j] for j in range(1, e - d + 1)]


def thm31_cap(d: int, deg_I: int, deg_F: int) -> int:
    if d == 0:
        return deg_I + deg_F - 1
    return 5 * d * deg_F * deg_I


def regseq_avoiding_hypersurface_thm31(
    I: Ideal, F: Polynomial, seed=0, retries: int = DEFAULT_RETRIES
) -> list[Polynomial]:
    """n - d elements f_i of I such that F, f_1, ..., f_{n-d} is a regular sequence."""
    if I.contains(F):
        raise ValueError("F lies in I")
    if not is_nzd(F, I):
        raise ValueError("F is a zero divisor modulo I")
    data = hilbert_data(I)
    d, deg_I = data.projective_dimension, data.degree
    n = I.ring.nvars - 1
    cap = thm31_cap(d, deg_I, F.degree())
    rng = _rng(seed)
    gens = _ideal_gens(I)
    seq = [F]
    out = []
    for _ in range(n - d):
        f = _sample_nzd(gens, Ideal(I.ring, seq), 1, cap, rng, retries)
        seq.append(f)
        out.append(f)
    if not is_regular_sequence(seq):
        raise AssertionError("constructed sequence failed re-certification")
    return out


# ---------------------------------------------------------------------------
# straightening (Prop 3.2, Cor 3.2)


@dataclass
class StraighteningResult:
    F: Polynomial
    inputs: list[Polynomial]
    outputs: list[Polynomial]
    multipliers: list[int]
    corrections: list[Polynomial]
    caps: list[int]
    degrees: list[int]
    contraction_degrees: list[int]
    input_regular: bool
    output_regular: bool
    step_saturations_equal: list[bool]
    affine_outputs: list[Polynomial] = field(default_factory=list)
    radicality: str = "unverified"

    @property
    def within_caps(self) -> bool:
        return all(a <= c for a, c in zip(self.degrees, self.caps))

    def to_json(self) -> dict:
        out = {
            "F": str(self.F),
            "inputs": [str(f) for f in self.inputs],
            "outputs": [str(p) for p in self.outputs],
            "multipliers": self.multipliers,
            "corrections": [str(u) for u in self.corrections],
            "caps": [str(c) for c in self.caps],
            "degrees": [str(c) for c in self.degrees],
            "contraction_degrees": [str(c) for c in self.contraction_degrees],
            "input_regular": self.input_regular,
            "output_regular": self.output_regular,
            "step_saturations_equal": self.step_saturations_equal,
            "within_caps": self.within_caps,
            "radicality": self.radicality,
        }
        if self.affine_outputs:
            out["affine_outputs"] = [str(p) for p in self.affine_outputs]
        return out


def strip_factor(f: Polynomial, F: Polynomial) -> tuple[Polynomial, int]:
    """(f / F^e, e) with e maximal."""
    e = 0
    while f.degree() >= F.degree() and not F.is_constant():
        try:
            f = exact_divide(f, F)
        except ValueError:
            break
        e += 1
    return f, e


def contraction(gens: Sequence[Polynomial], F: Polynomial, ring: Ring) -> Ideal:
    """(gens) localized at F and contracted back: the F-saturation."""
    return saturate(Ideal(ring, gens), F)


def _contraction_degree(I: Ideal) -> int:
    try:
        return degree(I, unit_convention=True)
    except UnitIdealError:
        return 0


def prop32_cap(i: int, n: int, deg_f: int, deg_F: int, deg_Ic: int) -> int:
    """Degree cap for p_i (1-based i) given deg I^c_{i-1}."""
    if i <= n:
        return max(deg_f, 5 * (n + 1 - i) * deg_F * deg_Ic)
    return max(deg_f, deg_Ic + deg_F - 1)


def check_weak_regular_localized(F: Polynomial, fs: Sequence[Polynomial]) -> bool:
    """f_1..f_s weak regular in the localization at F: each f_i is a nonzerodivisor modulo the F-saturation of its predecessors."""
    ring = F.ring
    for i, f in enumerate(fs):
        if f.is_zero:
            return False
        Ic = contraction(fs[:i], F, ring) if i else Ideal(ring, [])
        if Ic.is_unit():
            continue
        if not is_nzd(f, Ic):
            return False
    return True


def straighten_prop32(
    F: Polynomial,
    fs: Sequence[Polynomial],
    seed=0,
    retries: int = DEFAULT_RETRIES,
    check_input: bool = True,
) -> StraighteningResult:
    """Replace a sequence that is weak regular after inverting F by an honest regular sequence.

    p_1, p_2 are f_1, f_2 with their F-power factors removed.  For i >= 3,
    p_i = F^{c_i} f_i + u_i with u_i a seeded random element of the degree
    deg p_i part of I^c_{i-1}; the target degree starts at deg f_i (where the
    unmodified f_i is tried first) and rises to the cap until p_i is
    certified a nonzerodivisor modulo (p_1, ..., p_{i-1}).
    """
    ring = F.ring
    if not ring.graded:
        raise NotHomogeneous("straightening runs in the graded ring")
    if F.degree() < 1:
        raise ValueError("F must have positive degree")
    n = ring.nvars - 1
    s = len(fs)
    if s > n + 1:
        raise ValueError("need s <= n + 1")
    if check_input and not check_weak_regular_localized(F, fs):
        raise NotWeakRegular("input is not weak regular after inverting F")
    rng = _rng(seed)
    outputs: list[Polynomial] = []
    mults: list[int] = []
    corrs: list[Polynomial] = []
    caps: list[int] = []
    cdegs: list[int] = []
    for i, f in enumerate(fs, start=1):
        Ic = contraction(outputs, F, ring) if outputs else Ideal(ring, [])
        deg_Ic = _contraction_degree(Ic) if outputs else 1
        cdegs.append(deg_Ic)
        cap = prop32_cap(i, n, f.degree(), F.degree(), deg_Ic)
        caps.append(cap)
        if i <= 2:
            p, e = strip_factor(f, F)
            outputs.append(p)
            mults.append(-e)
            corrs.append(ring.zero)
            continue
        L = Ideal(ring, outputs)
        if is_nzd(f, L):
            outputs.append(f)
            mults.append(0)
            corrs.append(ring.zero)
            continue
        gens = _ideal_gens(Ic)
        found = None
        for D in range(f.degree(), cap + 1):
            # p_i must be homogeneous, so deg F has to divide D - deg f_i
            c, rem = divmod(D - f.degree(), F.degree())
            if rem:
                continue
            base = f * F**c
            for _ in range(retries):
                if Ic.is_unit():
                    u = random_polynomial(ring, D, True, seed=rng)
                else:
                    u = random_ideal_element(gens, D, rng)
                if u is None:
                    break
                p = base + u
                if not p.is_zero and p.is_homogeneous() and is_nzd(p, L):
                    found = (p, c, u)
                    break
            if found:
                break
        if found is None:
            raise RetryExhausted(f"no admissible correction for p_{i} up to degree {cap}")
        outputs.append(found[0])
        mults.append(found[1])
        corrs.append(found[2])
    steps = [
        contraction(outputs[:i], F, ring) == contraction(list(fs[:i]), F, ring) for i in range(1, s + 1)
    ]
    return StraighteningResult(
        F=F,
        inputs=list(fs),
        outputs=outputs,
        multipliers=mults,
        corrections=corrs,
        caps=caps,
        degrees=[p.degree() for p in outputs],
        contraction_degrees=cdegs,
        input_regular=_safe_regular(list(fs)),
        output_regular=_safe_regular(outputs),
        step_saturations_equal=steps,
    )


def _safe_regular(fs: list[Polynomial]) -> bool:
    try:
        return is_regular_sequence(fs)
    except NotHomogeneous:
        return False


def straighten_affine_cor32(fs: Sequence[Polynomial], seed=0, retries: int = DEFAULT_RETRIES) -> StraighteningResult:
    """Affine version: homogenize with x0, straighten against F = x0, then dehomogenize."""
    if not fs:
        raise ValueError("empty sequence")
    ring = fs[0].ring
    if ring.graded:
        raise ValueError("expected affine polynomials")
    name = "x0" if "x0" not in ring.names else "_h"
    target = Ring((name,) + ring.names, ring.field, True)
    hom = [homogenize_into(f, target, 0) for f in fs]
    x0 = target.gen(0)
    res = straighten_prop32(x0, hom, seed, retries)
    res.affine_outputs = [affinize(p, 0, ring) for p in res.outputs]
    return res


# ---------------------------------------------------------------------------
# Lemma 3.5


@dataclass(frozen=True)
class ContractionBezout:
    deg_contraction: int
    product_bound: int

    @property
    def holds(self) -> bool:
        return self.deg_contraction <= self.product_bound

    @property
    def equality(self) -> bool:
        return self.deg_contraction == self.product_bound


def bezout_contraction_lemma35(F: Polynomial, fs: Sequence[Polynomial]) -> ContractionBezout:
    """deg of the F-saturation of (fs) against Π deg f_i (0 for the unit ideal)."""
    ring = F.ring
    if len(fs) > ring.nvars - 1:
        raise ValueError("need s <= n")
    Ic = contraction(list(fs), F, ring)
    dc = _contraction_degree(Ic)
    prod = 1
    for f in fs:
        prod *= f.degree()
    return ContractionBezout(dc, prod)
