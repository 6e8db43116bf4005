"""Buchberger's algorithm and the ideal operations built on it.

Everything here works on reduced Gröbner bases, which are unique for a fixed
monomial order; equality of ideals is decided by comparing them.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from gmpy2 import gcd, lcm, mpq, mpz

from .core import (
    Monomial,
    Polynomial,
    Ring,
    RingMismatch,
    affinize,
    homogenize_into,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    strip_variable_power,
)


class NotHomogeneous(ValueError):
    pass


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a permutation of the ring variables.

    ``perm[0]`` is the largest variable.  ``blocks`` splits the permuted
    variables into consecutive groups compared one after another, each with
    graded reverse lex; it is how elimination orders are built.
    """

    kind: str = "grevlex"
    perm: tuple[int, ...] | None = None
    blocks: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.blocks:
            raise ValueError("block order needs block sizes")

    @property
    def is_graded(self) -> bool:
        return self.kind in ("grlex", "grevlex")

    def sortkey(self, nvars: int):
        """Ascending key: smaller key means larger monomial."""
        perm = self.perm
        kind = self.kind
        if perm is not None and perm == tuple(range(nvars)):
            perm = None
        if kind == "grevlex":
            if perm is None:
                return lambda m: (-sum(m), m[::-1])
            rev = perm[::-1]
            return lambda m: (-sum(m), tuple([m[i] for i in rev]))
        if kind == "grlex":
            p = perm or tuple(range(nvars))
            return lambda m: (-sum(m), tuple([-m[i] for i in p]))
        if kind == "lex":
            p = perm or tuple(range(nvars))
            return lambda m: tuple([-m[i] for i in p])
        p = perm or tuple(range(nvars))
        if sum(self.blocks) != nvars:
            raise ValueError("block sizes must add up to the number of variables")
        spans = []
        start = 0
        for size in self.blocks:
            spans.append(p[start:start + size])
            start += size

        def key(m):
            out = []
            for span in spans:
                out.append(-sum(m[i] for i in span))
                out.extend(m[i] for i in reversed(span))
            return tuple(out)

        return key

    def __str__(self) -> str:
        return self.kind


GREVLEX = MonomialOrder("grevlex")


def grevlex_last(ring_nvars: int, var: int) -> MonomialOrder:
    """Graded reverse lex in which ``var`` is the smallest variable."""
    perm = tuple(i for i in range(ring_nvars) if i != var) + (var,)
    return MonomialOrder("grevlex", perm)


def elimination_order(nvars: int, eliminate: Sequence[int]) -> MonomialOrder:
    elim = sorted(set(eliminate))
    rest = [i for i in range(nvars) if i not in elim]
    if not elim or not rest:
        return MonomialOrder("grevlex")
    return MonomialOrder("block", tuple(elim + rest), (len(elim), len(rest)))


# ---------------------------------------------------------------------------
# reduction kernel on raw term dicts


def _leading(terms: dict, key) -> Monomial:
    return min(terms, key=key)


def _reduce(terms: dict, basis: list, key, p: int | None, full: bool = True) -> dict:
    """Normal form of ``terms`` modulo ``basis``.

    ``basis`` is a list of ``(lm, tail, deg lm, lc)`` with monic elements whose
    tail is the polynomial minus its leading term, as a list of (monomial, coeff).
    """
    if not terms or not basis:
        return dict(terms)
    f = dict(terms)
    heap = [(key(m), m) for m in f]
    heapq.heapify(heap)
    rem: dict = {}
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        _, m = pop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        sm = sum(m)
        for lm, tail, dlm, _ in basis:
            if dlm <= sm and mono_divides(lm, m):
                q = mono_div(m, lm)
                for tm, tc in tail:
                    nm = tuple([a + b for a, b in zip(q, tm)])
                    v = f.get(nm)
                    if v is None:
                        v = -c * tc
                        if p:
                            v %= p
                        f[nm] = v
                        push(heap, (key(nm), nm))
                    else:
                        v = v - c * tc
                        if p:
                            v %= p
                        if v:
                            f[nm] = v
                        else:
                            del f[nm]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
    return rem


def _make_monic(terms: dict, key, p):
    lm = _leading(terms, key)
    lc = terms[lm]
    if p:
        inv = pow(lc, -1, p)
        out = {m: c * inv % p for m, c in terms.items()}
    else:
        inv = mpq(1) / lc
        out = {m: c * inv for m, c in terms.items()}
    return lm, out


def _basis_entry(lm, terms, key):
    tail = sorted(((m, c) for m, c in terms.items() if m != lm), key=lambda t: key(t[0]))
    return (lm, tail, sum(lm), terms[lm])


# Over Q the kernel keeps primitive integer polynomials: monic rational
# normalization makes denominators explode on non-homogeneous input.


def _primitive(terms: dict) -> dict:
    den = mpz(1)
    for c in terms.values():
        den = lcm(den, mpq(c).denominator)
    ints = {m: mpz(mpq(c) * den) for m, c in terms.items()}
    g = mpz(0)
    for c in ints.values():
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = {m: c // g for m, c in ints.items()}
    return ints


def _reduce_int(terms: dict, basis: list, key) -> dict:
    """Fully reduce an integer polynomial by a basis of integer polynomials.

    The result equals the rational normal form up to a nonzero scalar and is
    returned primitive.
    """
    if not terms or not basis:
        return _primitive(terms) if terms else {}
    f = dict(terms)
    heap = [(key(m), m) for m in f]
    heapq.heapify(heap)
    rem: dict = {}
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        _, m = pop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        sm = sum(m)
        for lm, tail, dlm, lc in basis:
            if dlm <= sm and mono_divides(lm, m):
                g = gcd(c, lc)
                a, b = lc // g, c // g
                if a != 1:
                    for k in f:
                        f[k] *= a
                    for k in rem:
                        rem[k] *= a
                q = mono_div(m, lm)
                for tm, tc in tail:
                    nm = tuple([x + y for x, y in zip(q, tm)])
                    v = f.get(nm)
                    if v is None:
                        f[nm] = -b * tc
                        push(heap, (key(nm), nm))
                    else:
                        v -= b * tc
                        if v:
                            f[nm] = v
                        else:
                            del f[nm]
                break
        else:
            rem[m] = c
    return _primitive(rem) if rem else {}


def _buchberger(polys: list[dict], key, p, nvars: int) -> list[dict]:
    """Return a (non-reduced) Gröbner basis of the given term dicts."""
    basis_lm: list = []
    basis_terms: list[dict] = []
    sugar: list[int] = []
    active: list[int] = []
    pairs: list = []  # heap of (sugar, lcm key, counter, i, j, lcm)
    pending: list = []  # heap of (sugar, lm key, counter, terms)
    counter = 0
    one = (0,) * nvars

    if not p:
        polys = [_primitive(f) for f in polys if f]
    for f in polys:
        if f:
            lm = _leading(f, key)
            pending.append((max(sum(m) for m in f), key(lm), counter, f))
            counter += 1
    heapq.heapify(pending)

    def reducer():
        return [_basis_entry(basis_lm[i], basis_terms[i], key) for i in active]

    cache = {"red": None}

    def current_reducers():
        if cache["red"] is None:
            cache["red"] = reducer()
        return cache["red"]

    def add(terms: dict, s: int):
        nonlocal counter
        if p:
            lm, terms = _make_monic(terms, key, p)
        else:
            lm = _leading(terms, key)
        h = len(basis_lm)
        basis_lm.append(lm)
        basis_terms.append(terms)
        sugar.append(s)
        # Gebauer-Moeller update
        new_pairs = [(g, mono_lcm(basis_lm[g], lm)) for g in active]
        keep = []
        for idx, (g, l) in enumerate(new_pairs):
            coprime = all(a == 0 or b == 0 for a, b in zip(basis_lm[g], lm))
            if coprime:
                keep.append((g, l, True))
                continue
            dominated = False
            for idx2, (g2, l2) in enumerate(new_pairs):
                if idx2 == idx:
                    continue
                if mono_divides(l2, l) and (l2 != l or idx2 < idx):
                    dominated = True
                    break
            if not dominated:
                keep.append((g, l, False))
        # drop old pairs whose lcm is a strict multiple through lm
        survivors = []
        for entry in pairs:
            _, _, _, i, j, l = entry
            if (
                mono_divides(lm, l)
                and mono_lcm(basis_lm[i], lm) != l
                and mono_lcm(basis_lm[j], lm) != l
            ):
                continue
            survivors.append(entry)
        pairs[:] = survivors
        for g, l, coprime in keep:
            if coprime:
                continue
            ps = max(sugar[g] + sum(l) - sum(basis_lm[g]), s + sum(l) - sum(lm))
            pairs.append((ps, key(l), counter, g, h, l))
            counter += 1
        heapq.heapify(pairs)
        active[:] = [g for g in active if not mono_divides(lm, basis_lm[g])] + [h]
        cache["red"] = None

    while pairs or pending:
        take_pair = bool(pairs) and (not pending or pairs[0][:2] <= pending[0][:2])
        if take_pair:
            s, _, _, i, j, l = heapq.heappop(pairs)
            qi = mono_div(l, basis_lm[i])
            qj = mono_div(l, basis_lm[j])
            ci, cj = 1, 1
            if not p:
                li, lj = basis_terms[i][basis_lm[i]], basis_terms[j][basis_lm[j]]
                g = gcd(li, lj)
                ci, cj = lj // g, li // g
            spoly: dict = {}
            for m, c in basis_terms[i].items():
                spoly[mono_mul(m, qi)] = ci * c
            for m, c in basis_terms[j].items():
                nm = mono_mul(m, qj)
                v = spoly.get(nm, 0) - cj * c
                if p:
                    v %= p
                if v:
                    spoly[nm] = v
                else:
                    spoly.pop(nm, None)
            red = _reduce(spoly, current_reducers(), key, p) if p else _reduce_int(spoly, current_reducers(), key)
        else:
            s, _, _, f = heapq.heappop(pending)
            red = _reduce(f, current_reducers(), key, p) if p else _reduce_int(f, current_reducers(), key)
        if red:
            add(red, s)
            if basis_lm[-1] == one:
                return [{one: 1}]
    return [basis_terms[i] for i in active]


def _interreduce(polys: list[dict], key, p) -> list[dict]:
    if p:
        cands = [_make_monic(f, key, p) for f in polys if f]
    else:
        cands = [(_leading(f, key), f) for f in polys if f]
    cands.sort(key=lambda t: key(t[0]))
    minimal = []
    for lm, terms in reversed(cands):
        # ascending monomials: keep those not divisible by a smaller kept lm
        if any(mono_divides(other, lm) for other, _ in minimal):
            continue
        minimal.append((lm, terms))
    minimal.sort(key=lambda t: key(t[0]))
    out = []
    for idx, (lm, terms) in enumerate(minimal):
        others = [_basis_entry(l2, t2, key) for j, (l2, t2) in enumerate(minimal) if j != idx]
        if p:
            tail = {m: c for m, c in terms.items() if m != lm}
            red = _reduce(tail, others, key, p)
            red[lm] = 1
        else:
            # no other leading monomial divides lm, so full reduction keeps it
            red = _make_monic(_reduce_int(terms, others, key), key, p)[1]
        out.append((lm, red))
    out.sort(key=lambda t: key(t[0]))
    return [t for _, t in out]


# ---------------------------------------------------------------------------
# public types


class GroebnerBasis:
    """Reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial."""

    def __init__(self, ring: Ring, order: MonomialOrder, elements: list[Polynomial]):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self._key = order.sortkey(ring.nvars)
        self._lms = tuple(_leading(g.terms, self._key) for g in elements)
        self._reducers = [_basis_entry(lm, g.terms, self._key) for lm, g in zip(self._lms, elements)]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.elements))

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}])"

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return self._lms

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch("polynomial and basis live in different rings")
        red = _reduce(f.terms, self._reducers, self._key, self.ring.field.p)
        return Polynomial(self.ring, red, _trusted=True)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero


def buchberger_polys(ring: Ring, gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    key = order.sortkey(ring.nvars)
    p = ring.field.p
    raw = [g.terms for g in gens if not g.is_zero]
    if not raw:
        return GroebnerBasis(ring, order, [])
    n = ring.nvars
    if n and not all(len({sum(m) for m in t}) == 1 for t in raw):
        # Homogenize with a new variable and order by total degree, then by
        # the given order on the old variables; for homogenized polynomials
        # the leading terms match, so dehomogenizing gives a basis of the
        # input.  Degree-by-degree progress keeps coefficient growth in check.
        def hkey(m):
            return (-sum(m),) + tuple(key(m[:n]))

        hom = []
        for t in raw:
            top = max(sum(m) for m in t)
            hom.append({m + (top - sum(m),): c for m, c in t.items()})
        gb = []
        for t in _buchberger(hom, hkey, p, n + 1):
            d: dict = {}
            for m, c in t.items():
                d[m[:n]] = c  # distinct: homogeneous terms differ off the last slot
            gb.append(d)
    else:
        gb = _buchberger(raw, key, p, n)
    red = _interreduce(gb, key, p)
    return GroebnerBasis(ring, order, [Polynomial(ring, t, _trusted=True) for t in red])


class Ideal:
    """An ideal given by generators, with reduced Gröbner bases cached per order."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial] = ()):
        gens = list(gens)
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"generator {g} is not in ring {ring.names}")
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero)
        if ring.graded:
            for g in self.gens:
                if not g.is_homogeneous():
                    raise NotHomogeneous(f"generator {g} is not homogeneous")
        self._gb: dict = {}

    @classmethod
    def of(cls, ring: Ring, *texts: str | Polynomial) -> "Ideal":
        return cls(ring, [t if isinstance(t, Polynomial) else ring.parse(t) for t in texts])

    def gb(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        cached = self._gb.get(order)
        if cached is None:
            cached = buchberger_polys(self.ring, self.gens, order)
            self._gb[order] = cached
        return cached

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def contains(self, f: Polynomial) -> bool:
        return self.gb().contains(f)

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.gb().reduce(f)

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other: "Ideal | Polynomial | Iterable[Polynomial]") -> "Ideal":
        if isinstance(other, Polynomial):
            return Ideal(self.ring, self.gens + (other,))
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise RingMismatch("ideals live in different rings")
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch("ideals live in different rings")
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb() == other.gb()

    def __hash__(self):
        return hash(self.gb())

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def reduced(self) -> "Ideal":
        """The same ideal generated by its reduced grevlex basis."""
        out = Ideal(self.ring, self.gb().elements)
        out._gb[GREVLEX] = self.gb()
        return out

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


# ---------------------------------------------------------------------------
# operations


def buchberger(I: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    return I.gb(order)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(f)


def contains_one(I: Ideal) -> bool:
    return I.is_unit()


def _fresh_name(ring: Ring, base: str) -> str:
    name = base
    k = 0
    while name in ring.names:
        k += 1
        name = f"{base}{k}"
    return name


def _extend_ring(ring: Ring, name: str, graded: bool = False) -> Ring:
    return Ring(ring.names + (name,), ring.field, graded)


def _embed(f: Polynomial, ring: Ring) -> Polynomial:
    return Polynomial(ring, {m + (0,) * (ring.nvars - f.ring.nvars): c for m, c in f.terms.items()}, _trusted=True)


def eliminate(I: Ideal, variables: Sequence[int | str], target: Ring | None = None) -> Ideal:
    """Generators of the intersection of I with the subring omitting ``variables``.

    The result lives in ``target`` (default: the ring with those variables
    removed), so the caller chooses whether the grading flag survives.
    """
    ring = I.ring
    idx = sorted({ring.names.index(v) if isinstance(v, str) else v for v in variables})
    keep = [i for i in range(ring.nvars) if i not in idx]
    if target is None:
        if not keep:
            target = None
        else:
            target = Ring(tuple(ring.names[i] for i in keep), ring.field, ring.graded)
    if not idx:
        return Ideal(ring, I.gens) if target is None or target == ring else Ideal(
            target, [g.change_ring(target) for g in I.gens]
        )
    order = elimination_order(ring.nvars, idx)
    G = I.gb(order)
    kept = [g for g in G if all(m[i] == 0 for m in g.terms for i in idx)]
    if target is None:
        # every variable eliminated: only constants can survive
        return Ideal(ring, kept)
    out = []
    for g in kept:
        out.append(Polynomial(target, {tuple(m[i] for i in keep): c for m, c in g.terms.items()}, _trusted=True))
    return Ideal(target, out)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the t-free part of t·I + (1 - t)·J."""
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    t = _fresh_name(ring, "_t")
    big = _extend_ring(ring, t)
    tv = big.gen(ring.nvars)
    gens = [tv * _embed(f, big) for f in I.gens] + [(1 - tv) * _embed(g, big) for g in J.gens]
    return eliminate(Ideal(big, gens), [ring.nvars], target=ring)


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """a / b, raising ValueError if b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    key = GREVLEX.sortkey(a.ring.nvars)
    p = a.ring.field.p
    field = a.ring.field
    lm_b = _leading(b.terms, key)
    inv = field.inv(b.terms[lm_b])
    rest = dict(a.terms)
    quot: dict = {}
    while rest:
        lm = _leading(rest, key)
        if not mono_divides(lm_b, lm):
            raise ValueError(f"{b} does not divide {a}")
        q = mono_div(lm, lm_b)
        c = rest[lm] * inv
        if p:
            c %= p
        quot[q] = c
        for m, v in b.terms.items():
            nm = mono_mul(m, q)
            w = rest.get(nm, 0) - c * v
            if p:
                w %= p
            if w:
                rest[nm] = w
            else:
                rest.pop(nm, None)
    return Polynomial(a.ring, quot, _trusted=True)


def _variable_index(f: Polynomial) -> int | None:
    if len(f.terms) != 1:
        return None
    (m, c), = f.terms.items()
    if sum(m) == 1:
        return m.index(1)
    return None


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f), via I ∩ (f) divided by f."""
    if f.is_zero:
        raise ValueError("quotient by the zero polynomial")
    ring = I.ring
    if f.is_constant():
        return Ideal(ring, I.gens)
    inter = ideal_intersection(I, Ideal(ring, [f]))
    return Ideal(ring, [exact_divide(g, f) for g in inter.gens])


def _saturate_by_variable(I: Ideal, var: int) -> Ideal:
    # valid for homogeneous ideals: grevlex with var last, then strip var powers
    order = grevlex_last(I.ring.nvars, var)
    G = I.gb(order)
    stripped = [strip_variable_power(g, var)[0] for g in G]
    return Ideal(I.ring, stripped)


def _quotient_by_variable(I: Ideal, var: int) -> Ideal:
    order = grevlex_last(I.ring.nvars, var)
    G = I.gb(order)
    out = []
    for g in G:
        h, k = strip_variable_power(g, var)
        if k >= 1:
            h = h.mul_monomial(tuple(k - 1 if i == var else 0 for i in range(I.ring.nvars)))
        out.append(h)
    return Ideal(I.ring, out)


def saturate(I: Ideal, f: Polynomial, max_steps: int = 64) -> Ideal:
    """(I : f^∞).

    Monomial f on a homogeneous ideal is handled variable by variable with
    the reverse-lex trick; otherwise quotients are iterated until the reduced
    basis stops changing.
    """
    if f.is_zero:
        raise ValueError("saturation by the zero polynomial")
    ring = I.ring
    if f.is_constant():
        return Ideal(ring, I.gens)
    if f.is_monomial() and I.is_homogeneous:
        (m, _), = f.terms.items()
        J = I
        for var, e in enumerate(m):
            if e:
                J = _saturate_by_variable(J, var)
        return J.reduced()
    current = I.reduced()
    for _ in range(max_steps):
        nxt = ideal_quotient(current, f).reduced()
        if nxt.gb() == current.gb():
            return current
        current = nxt
    raise RuntimeError("saturation did not stabilize")


def saturate_rabinowitsch(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^∞) as the t-free part of I + (1 - t·f); an independent route."""
    ring = I.ring
    t = _fresh_name(ring, "_t")
    big = _extend_ring(ring, t)
    tv = big.gen(ring.nvars)
    gens = [_embed(g, big) for g in I.gens] + [1 - tv * _embed(f, big)]
    return eliminate(Ideal(big, gens), [ring.nvars], target=ring).reduced()


def projective_closure(J: Ideal, hom_name: str = "x0", method: str = "gb") -> Ideal:
    """Homogenization of the affine ideal J in a ring with ``hom_name`` prepended.

    ``method="gb"`` homogenizes a graded reverse lex basis; ``"saturate"``
    homogenizes the listed generators and saturates by the new variable.
    """
    ring = J.ring
    name = hom_name if hom_name not in ring.names else _fresh_name(ring, hom_name)
    target = Ring((name,) + ring.names, ring.field, True)
    if J.is_zero():
        return Ideal(target, [])
    if method == "gb":
        G = J.gb(GREVLEX)
        return Ideal(target, [homogenize_into(g, target, 0) for g in G]).reduced()
    if method == "saturate":
        naive = Ideal(target, [homogenize_into(g, target, 0) for g in J.gens])
        return _saturate_by_variable(naive, 0).reduced()
    raise ValueError(f"unknown method {method!r}")


def affine_part(I: Ideal, hom_var: int = 0) -> Ideal:
    """Dehomogenize every generator."""
    gens = [affinize(g, hom_var) for g in I.gens]
    target = gens[0].ring if gens else Ring(I.ring.names[:hom_var] + I.ring.names[hom_var + 1:], I.ring.field)
    return Ideal(target, gens)


def is_nzd(f: Polynomial, I: Ideal, method: str = "auto") -> bool:
    """Whether f is a nonzerodivisor modulo I, i.e. (I : f) = I.

    For homogeneous data the ``"hilbert"`` route compares the Hilbert series
    of I + (f) with (1 - t^deg f)·H_I, which is equivalent and avoids the
    elimination; affine data is moved to projective closures first.
    """
    if f.is_zero:
        raise ValueError("zero is never a nonzerodivisor")
    if method == "auto":
        method = "hilbert"
    if method == "quotient":
        return ideal_quotient(I, f).gb() == I.gb()
    if method != "hilbert":
        raise ValueError(f"unknown method {method!r}")
    from .hilbert import hilbert_series

    if I.is_homogeneous and f.is_homogeneous():
        base = hilbert_series(I)
        cut = hilbert_series(I + f)
        return cut.numerator == base.shifted_difference(f.degree()).numerator
    if I.ring.graded:
        raise NotHomogeneous("nonhomogeneous element in a graded ring")
    closure = projective_closure(I)
    ft = homogenize_into(f, closure.ring, 0)
    return is_nzd(ft, closure, "hilbert")


def is_weak_regular_sequence(fs: Sequence[Polynomial], method: str = "auto") -> bool:
    """Each f_i is a nonzerodivisor modulo its predecessors; a final unit is allowed."""
    if not fs:
        return True
    ring = fs[0].ring
    for i, f in enumerate(fs):
        if f.is_zero:
            return False
        if not is_nzd(f, Ideal(ring, fs[:i]), method):
            return False
    return True


def is_regular_sequence(fs: Sequence[Polynomial], method: str = "auto") -> bool:
    """Weak regular and generating a proper ideal (graded ring, homogeneous input)."""
    if not fs:
        return True
    for f in fs:
        if f.is_zero:
            return False
        if f.ring.graded and not f.is_homogeneous():
            raise NotHomogeneous(f"{f} is not homogeneous")
    ring = fs[0].ring
    if Ideal(ring, fs).is_unit():
        return False
    return is_weak_regular_sequence(fs, method)


def membership_oracle(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Brute-force membership: is f in the span of monomial multiples of gens up to deg f?

    Only meaningful for homogeneous data, where that span is exactly the
    degree-``deg f`` part of the ideal.  No Gröbner machinery involved.
    """
    from .core import monomials_of_degree
    from .linalg import SparseEchelon

    if f.is_zero:
        return True
    ring = f.ring
    d = f.degree()
    key = GREVLEX.sortkey(ring.nvars)
    ech = SparseEchelon(ring.field, key)
    for g in gens:
        if g.is_zero or g.degree() > d:
            continue
        for mono in monomials_of_degree(ring.nvars, d - g.degree()):
            ech.add(g.mul_monomial(mono).terms)
    return not ech.reduce(f.terms)
