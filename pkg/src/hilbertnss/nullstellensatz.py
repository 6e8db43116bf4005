"""Effective Nullstellensatz and representation certificates with degree control.

A certificate g = Σ a_i f_i with deg a_i f_i <= deg g + D is found by exact
linear algebra over the monomial multiples of the f_i.  The degree budget D
is bounded in terms of the geometric degree of the system, which is
estimated by sampling linear combinations of the equations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .core import Polynomial, Ring, homogenize_into, monomials_of_degree, random_polynomial
from .groebner import (
    GREVLEX,
    Ideal,
    contains_one,
    is_weak_regular_sequence,
    projective_closure,
)
from .hilbert import UnitIdealError, degree, dimension
from .linalg import SparseEchelon


class Inadmissible(ValueError):
    """The system is neither a unit ideal nor of the expected dimension n - s."""


class BoundExceeded(RuntimeError):
    """No certificate exists within the theorem's degree bound."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


def _affine_ring_of(fs: Sequence[Polynomial]) -> Ring:
    if not fs:
        raise ValueError("empty system")
    ring = fs[0].ring
    if ring.graded:
        raise ValueError("the pipeline expects affine polynomials")
    return ring


def closure_degree(ring: Ring, gens: Sequence[Polynomial]) -> int:
    """Degree of the projective closure of (gens); 0 for the unit ideal."""
    closure = projective_closure(Ideal(ring, gens))
    try:
        return degree(closure)
    except UnitIdealError:
        return 0


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Certificate:
    g: Polynomial
    fs: list[Polynomial]
    cofactors: list[Polynomial]
    achieved_D: int
    bound_D: int | None = None
    verified: bool = False
    minimal_checked: bool = False

    def to_json(self) -> dict:
        return {
            "g": str(self.g),
            "system": [str(f) for f in self.fs],
            "cofactors": [str(a) for a in self.cofactors],
            "achieved_D": str(self.achieved_D),
            "bound_D": None if self.bound_D is None else str(self.bound_D),
            "verified": self.verified,
            "minimal_checked": self.minimal_checked,
        }


def verify_certificate(cert: Certificate) -> bool:
    """Re-expand Σ a_i f_i, compare with g and check the degree budget."""
    total = cert.g.ring.zero
    for a, f in zip(cert.cofactors, cert.fs):
        total = total + a * f
    if total != cert.g:
        return False
    cap = max(cert.g.degree(), 0) + cert.achieved_D
    return all(a.is_zero or (a * f).degree() <= cap for a, f in zip(cert.cofactors, cert.fs))


class _CertificateSearch:
    """Degree-bounded span of {m·f_i}, grown one degree layer at a time."""

    def __init__(self, g: Polynomial, fs: Sequence[Polynomial]):
        self.g = g
        self.fs = list(fs)
        self.ring = g.ring
        self.base = max(g.degree(), 0)
        key = GREVLEX.sortkey(self.ring.nvars)
        self.ech = SparseEchelon(self.ring.field, key, track=True)
        self.top = -1  # largest total degree of multiples added so far

    def grow(self, D: int):
        target = self.base + D
        while self.top < target:
            self.top += 1
            for i, f in enumerate(self.fs):
                k = self.top - f.degree()
                if k < 0:
                    continue
                for mono in monomials_of_degree(self.ring.nvars, k):
                    self.ech.add(f.mul_monomial(mono).terms, (i, mono))

    def solve(self, D: int) -> Certificate | None:
        self.grow(D)
        combo = self.ech.express(self.g.terms)
        if combo is None:
            return None
        parts: list[dict] = [{} for _ in self.fs]
        for (i, mono), c in combo.items():
            parts[i][mono] = c
        cof = [Polynomial(self.ring, p) for p in parts]
        cert = Certificate(self.g, self.fs, cof, D)
        cert.verified = verify_certificate(cert)
        if not cert.verified:
            raise AssertionError("solver returned a certificate that does not re-expand")
        return cert


def certificate_at_degree(g: Polynomial, fs: Sequence[Polynomial], D: int) -> Certificate | None:
    """A certificate g = Σ a_i f_i with deg a_i f_i <= deg g + D, or None if none exists."""
    if D < 0:
        return None
    return _CertificateSearch(g, fs).solve(D)


def minimal_certificate(
    g: Polynomial, fs: Sequence[Polynomial], max_D: int, mode: str = "incremental"
) -> Certificate | None:
    """Least D <= max_D admitting a certificate.

    ``incremental`` ascends from D = 0; ``bisect`` relies on monotonicity in D
    (a certificate at D is one at every larger D).
    """
    if mode == "incremental":
        search = _CertificateSearch(g, fs)
        for D in range(max_D + 1):
            cert = search.solve(D)
            if cert is not None:
                cert.minimal_checked = D == 0 or certificate_at_degree(g, fs, D - 1) is None
                return cert
        return None
    if mode != "bisect":
        raise ValueError(f"unknown search mode {mode!r}")
    best = certificate_at_degree(g, fs, max_D)
    if best is None:
        return None
    lo, hi = -1, max_D  # unsatisfiable at lo (or lo < 0), satisfiable at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        cert = certificate_at_degree(g, fs, mid)
        if cert is None:
            lo = mid
        else:
            hi, best = mid, cert
    best.minimal_checked = True
    return best


def homogenized_membership(g: Polynomial, fs: Sequence[Polynomial], D: int) -> bool:
    """Whether x0^D·g~ lies in (f~_1, ..., f~_s); equivalent to a certificate at D."""
    ring = g.ring
    target = Ring(("x0",) + ring.names if "x0" not in ring.names else ("_h",) + ring.names, ring.field, True)
    hom = [homogenize_into(f, target, 0) for f in fs]
    gt = homogenize_into(g, target, 0) if not g.is_zero else target.zero
    x0 = target.gen(0)
    return Ideal(target, hom).contains(x0**D * gt)


# ---------------------------------------------------------------------------
# geometric degree


@dataclass
class TrialRecord:
    seed: str
    matrix: list[list[str]]
    t: int | None
    step_degrees: list[int]
    weak_regular: bool
    delta: int | None

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "matrix": self.matrix,
            "t": self.t,
            "step_degrees": [str(d) for d in self.step_degrees],
            "weak_regular": self.weak_regular,
            "delta": None if self.delta is None else str(self.delta),
        }


@dataclass
class GeometricDegreeReport:
    trials: list[TrialRecord]
    delta_estimate: int | None
    char_mode: str
    radicality: str = "unverified"

    def to_json(self) -> dict:
        return {
            "trials": [t.to_json() for t in self.trials],
            "delta_estimate": None if self.delta_estimate is None else str(self.delta_estimate),
            "char_mode": self.char_mode,
            "radicality": self.radicality,
            "note": "estimate: a minimum over sampled combinations bounds the geometric degree from above",
        }


def combination_pool(fs: Sequence[Polynomial], char_mode: str) -> list[Polynomial]:
    """The polynomials combined by λ: the f_i, plus every x_j·f_i in ``charp`` mode."""
    if char_mode == "char0":
        return list(fs)
    if char_mode != "charp":
        raise ValueError(f"unknown char mode {char_mode!r}")
    ring = fs[0].ring
    return list(fs) + [x * f for f in fs for x in ring.gens]


def check_admissible(fs: Sequence[Polynomial]) -> bool:
    """1 in (fs), or (fs) proper of dimension n - s."""
    ring = _affine_ring_of(fs)
    I = Ideal(ring, fs)
    if I.is_unit():
        return True
    return dimension(projective_closure(I)) == ring.nvars - len(fs)


def run_trial(fs: Sequence[Polynomial], lam: Sequence[Sequence], char_mode: str = "char0") -> TrialRecord:
    """Evaluate δ(λ) for one coefficient matrix (rows give g_1..g_s)."""
    ring = _affine_ring_of(fs)
    n, s = ring.nvars, len(fs)
    pool = combination_pool(fs, char_mode)
    gs = []
    for row in lam:
        g = ring.zero
        for c, f in zip(row, pool):
            if c:
                g = g + f.scale(c)
        gs.append(g)
    matrix = [[ring.field.fmt(c) for c in row] for row in lam]
    target = Ideal(ring, fs)
    t = None
    for k in range(1, s + 1):
        if any(g.is_zero for g in gs[:k]):
            break
        if Ideal(ring, gs[:k]) == target:
            t = k
            break
    if t is None:
        return TrialRecord("", matrix, None, [], False, None)
    weak = is_weak_regular_sequence(gs[:t])
    if not weak:
        return TrialRecord("", matrix, t, [], False, None)
    steps = [closure_degree(ring, gs[:i]) for i in range(1, min(t, n))]
    delta = max(steps) if steps else 1
    return TrialRecord("", matrix, t, steps, True, delta)


def _random_matrix(rng: random.Random, ring: Ring, rows: int, cols: int, bound: int = 9):
    return [[ring.field.random_element(rng, bound, nonzero=False) for _ in range(cols)] for _ in range(rows)]


def geometric_degree_estimate(
    fs: Sequence[Polynomial],
    trials: int = 4,
    seed: int = 0,
    char_mode: str = "char0",
    include_identity: bool = True,
    lambdas: Sequence[Sequence[Sequence]] | None = None,
    check: bool = True,
) -> GeometricDegreeReport:
    """Upper estimate of the geometric degree of a system by sampled combinations.

    Trial 0 is the identity combination (the system itself) unless
    ``include_identity`` is False; further trials draw λ from per-trial seeds
    derived from ``seed``.  Explicit matrices in ``lambdas`` replace sampling.
    """
    ring = _affine_ring_of(fs)
    if check and not check_admissible(fs):
        raise Inadmissible("need 1 in (f) or dim (f) = n - s")
    s = len(fs)
    cols = len(combination_pool(fs, char_mode))
    plan: list[tuple[str, list[list]]] = []
    if lambdas is not None:
        plan = [(f"given:{k}", [list(r) for r in lam]) for k, lam in enumerate(lambdas)]
    else:
        if include_identity:
            ident = [[ring.field.coerce(1 if i == j else 0) for j in range(cols)] for i in range(s)]
            plan.append(("identity", ident))
        for k in range(trials):
            tag = f"{seed}:{k}"
            plan.append((tag, _random_matrix(random.Random(tag), ring, s, cols)))
    records = []
    for tag, lam in plan:
        rec = run_trial(fs, lam, char_mode)
        rec.seed = tag
        records.append(rec)
    deltas = [r.delta for r in records if r.delta is not None]
    return GeometricDegreeReport(records, min(deltas) if deltas else None, char_mode)


# ---------------------------------------------------------------------------
# γ and D bookkeeping


@dataclass
class GammaD:
    degrees: list[int]  # deg h_i
    closure_degrees: list[int]  # deg Ĩ_i
    c: list[int]
    gamma: list[int]
    D: list[int]
    cap: int
    cap_kind: str

    @property
    def within_cap(self) -> bool:
        return self.D[-1] <= self.cap

    def to_json(self) -> dict:
        return {
            "deg_h": [str(x) for x in self.degrees],
            "deg_closures": [str(x) for x in self.closure_degrees],
            "c": [str(x) for x in self.c],
            "gamma": [str(x) for x in self.gamma],
            "D": [str(x) for x in self.D],
            "cap": str(self.cap),
            "cap_kind": self.cap_kind,
        }


def gamma_d_sequences(hs: Sequence[Polynomial], check: bool = True) -> GammaD:
    """γ_i, the straightening exponents c_i and D_i for a weak regular affine sequence."""
    ring = _affine_ring_of(hs)
    if check and not is_weak_regular_sequence(list(hs)):
        raise ValueError("the sequence is not weak regular")
    n, s = ring.nvars, len(hs)
    if s > n + 1:
        raise ValueError("a weak regular sequence has at most n + 1 terms")
    dh = [h.degree() for h in hs]
    delta = [closure_degree(ring, hs[:i]) for i in range(1, s + 1)]

    def dI(i):  # deg Ĩ_i with Ĩ_0 = (0) of degree 1
        return 1 if i == 0 else delta[i - 1]

    gamma, c = [], []
    for i in range(1, s + 1):
        if i == 1:
            gamma.append(0)
        elif i <= n:
            gamma.append(dh[i - 1] * dI(i - 1) - dI(i))
        else:
            gamma.append(dh[i - 1] + dI(n) - 1)
        if i <= 2:
            c.append(0)
        elif i <= n:
            c.append(max(0, 5 * (n + 1 - i) * dI(i - 1) - dh[i - 1]))
        else:
            c.append(max(0, dI(n) - dh[i - 1]))
    D = []
    for i in range(1, s + 1):
        total = sum((i + 1 - j) * gamma[j - 1] for j in range(2, i + 1))
        total += sum((i - j) * c[j - 1] for j in range(3, i))
        D.append(total)
    d = max(dh)
    m = max(delta[: s - 1]) if s > 1 else 0
    if s <= n:
        cap, kind = s * s * (d - 1 + 3 * n) * m, "s<=n"
    else:
        cap, kind = n * n * (d - 1 + 3 * n) * m, "s=n+1"
    out = GammaD(dh, delta, c, gamma, D, cap, kind)
    if not out.within_cap:
        raise AssertionError(f"D_s = {D[-1]} exceeds the closed-form cap {cap}")
    return out


def membership_power_check_prop42(g: Polynomial, hs: Sequence[Polynomial], D: int) -> bool:
    """x0^D·g~ in (h~_1, ..., h~_s), after checking g~ in the closure of (hs)."""
    ring = _affine_ring_of(hs)
    closure = projective_closure(Ideal(ring, hs))
    if g.ring.graded:
        gt = g
    else:
        gt = homogenize_into(g, closure.ring, 0) if not g.is_zero else closure.ring.zero
    if not closure.contains(gt):
        raise ValueError("g is not in the closure of (h)")
    H = Ideal(closure.ring, [homogenize_into(h, closure.ring, 0) for h in hs])
    return H.contains(closure.ring.gen(0) ** D * gt)


# ---------------------------------------------------------------------------
# theorem-level drivers


@dataclass
class NullstellensatzRun:
    certificate: Certificate | None
    delta: GeometricDegreeReport
    bound_D: int
    status: str  # "certified" | "bound-exceeded" | "budget-exhausted"

    def to_json(self) -> dict:
        return {
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "geometric_degree": self.delta.to_json(),
            "bound_D": str(self.bound_D),
            "status": self.status,
        }


def nss_bound(n: int, s: int, d: int, delta: int) -> int:
    return min(n, s) ** 2 * (d + 3 * n) * delta


def ci_bound(n: int, s: int, d: int, delta: int) -> int:
    return s * s * (d + 3 * n) * delta


def certify_nss_thm44(
    fs: Sequence[Polynomial],
    trials: int = 4,
    seed: int = 0,
    char_mode: str = "char0",
    budget: int | None = None,
    search: str = "incremental",
) -> NullstellensatzRun:
    """Minimal-D certificate of 1 in (fs), checked against min(n,s)^2·(d+3n)·δ̂.

    ``budget`` caps the search below the theorem bound when the bound is too
    large to explore; exhausting it is reported separately from exceeding
    the bound.
    """
    ring = _affine_ring_of(fs)
    if not contains_one(Ideal(ring, fs)):
        raise ValueError("1 is not in the ideal")
    report = geometric_degree_estimate(fs, trials, seed, char_mode)
    if report.delta_estimate is None:
        raise BoundExceeded("no trial passed certification", report)
    d = max(f.degree() for f in fs)
    bound = nss_bound(ring.nvars, len(fs), d, report.delta_estimate)
    limit = bound if budget is None else min(bound, budget)
    cert = minimal_certificate(ring.one, fs, limit, search)
    if cert is None:
        status = "bound-exceeded" if limit == bound else "budget-exhausted"
        return NullstellensatzRun(None, report, bound, status)
    cert.bound_D = bound
    return NullstellensatzRun(cert, report, bound, "certified")


def represent_ci_thm43(
    g: Polynomial,
    fs: Sequence[Polynomial],
    trials: int = 4,
    seed: int = 0,
    budget: int | None = None,
) -> NullstellensatzRun:
    """Certificate g = Σ a_i f_i for a complete intersection, against deg g + s^2·(d+3n)·δ̂."""
    ring = _affine_ring_of(fs)
    n, s = ring.nvars, len(fs)
    if s > n:
        raise ValueError("need s <= n")
    I = Ideal(ring, fs)
    if I.is_unit() or dimension(projective_closure(I)) != n - s:
        raise Inadmissible("need a proper ideal of dimension n - s")
    if not I.contains(g):
        raise ValueError("g is not in the ideal")
    report = geometric_degree_estimate(fs, trials, seed)
    if report.delta_estimate is None:
        raise BoundExceeded("no trial passed certification", report)
    d = max(f.degree() for f in fs)
    bound = ci_bound(n, s, d, report.delta_estimate)
    limit = bound if budget is None else min(bound, budget)
    cert = minimal_certificate(g, fs, limit)
    if cert is None:
        status = "bound-exceeded" if limit == bound else "budget-exhausted"
        return NullstellensatzRun(None, report, bound, status)
    cert.bound_D = bound
    return NullstellensatzRun(cert, report, bound, "certified")


@dataclass(frozen=True)
class Lemma45Verdict:
    delta_estimate: int
    bound: int
    char_mode: str
    trials_used: int

    @property
    def holds(self) -> bool:
        return self.delta_estimate <= self.bound


def lemma45_bound(degrees: Sequence[int], n: int, char_mode: str = "char0") -> int:
    ds = sorted(degrees, reverse=True)
    k = min(len(ds), n) - 1
    if char_mode == "charp":
        return (max(ds) + 1) ** max(k, 0)
    out = 1
    for x in ds[:k]:
        out *= x
    return out


def lemma_4_5_check(
    fs: Sequence[Polynomial], trials: int = 4, seed: int = 0, char_mode: str = "char0", max_rounds: int = 3
) -> Lemma45Verdict:
    """δ̂ against the degree-product bound; failing rounds add trials before reporting."""
    ring = _affine_ring_of(fs)
    bound = lemma45_bound([f.degree() for f in fs], ring.nvars, char_mode)
    best = None
    used = 0
    for r in range(max_rounds):
        rep = geometric_degree_estimate(fs, trials * (2**r), f"{seed}/{r}", char_mode, check=(r == 0))
        used += len(rep.trials)
        if rep.delta_estimate is not None:
            best = rep.delta_estimate if best is None else min(best, rep.delta_estimate)
        if best is not None and best <= bound:
            break
    if best is None:
        raise BoundExceeded("no trial passed certification")
    return Lemma45Verdict(best, bound, char_mode, used)


# ---------------------------------------------------------------------------
# the low-inner-degree family


@dataclass
class SharperBoundReport:
    hs: list[Polynomial]
    fs: list[Polynomial]
    delta_h: int
    delta_f: int
    inner_degree: int
    input_degree: int
    delta_bound: int
    degree_power_bound: int

    @property
    def sharper(self) -> bool:
        return self.delta_bound < self.degree_power_bound

    def to_json(self) -> dict:
        return {
            "h": [str(h) for h in self.hs],
            "f": [str(f) for f in self.fs],
            "delta_h": str(self.delta_h),
            "delta_f": str(self.delta_f),
            "inner_degree": self.inner_degree,
            "input_degree": self.input_degree,
            "delta_bound": str(self.delta_bound),
            "degree_power_bound": str(self.degree_power_bound),
            "sharper": self.sharper,
        }


def example41_system(ring: Ring, seed: int = 0, outer_degree: int = 10) -> tuple[list[Polynomial], list[Polynomial]]:
    """A weak regular unit system h of degree 2 and f_i = h_i + u_i with u_i in (h_1..h_{i-1}).

    h = (x1^2 - x2, x2^2 - x3, 1 + 2 h_1 + 3 h_2); the corrections are random
    multiples chosen so that deg f_2 = deg f_3 = ``outer_degree``.
    """
    if ring.nvars != 3:
        raise ValueError("the family lives in three affine variables")
    x1, x2, x3 = ring.gens
    h1 = x1**2 - x2
    h2 = x2**2 - x3
    h3 = 1 + 2 * h1 + 3 * h2
    hs = [h1, h2, h3]
    rng = random.Random(seed)
    k = outer_degree - 2
    u2 = random_polynomial(ring, k, False, seed=rng.randrange(2**63), density=0.3) * h1
    u3 = random_polynomial(ring, k, False, seed=rng.randrange(2**63), density=0.3) * h1
    u3 = u3 + random_polynomial(ring, k, False, seed=rng.randrange(2**63), density=0.3) * h2
    return hs, [h1, h2 + u2, h3 + u3]


def example41_report(ring: Ring, seed: int = 0, outer_degree: int = 10, trials: int = 0) -> SharperBoundReport:
    """Compare min(n,s)^2·(D+3n)·δ with D^min(n,s) on the family above."""
    hs, fs = example41_system(ring, seed, outer_degree)
    rep_h = geometric_degree_estimate(hs, trials, seed)
    rep_f = geometric_degree_estimate(fs, trials, seed)
    n, s = ring.nvars, len(fs)
    k = min(n, s)
    D = max(f.degree() for f in fs)
    d = max(h.degree() for h in hs)
    delta = rep_f.delta_estimate
    return SharperBoundReport(
        hs, fs, rep_h.delta_estimate, delta, d, D, k * k * (D + 3 * n) * delta, D**k
    )
