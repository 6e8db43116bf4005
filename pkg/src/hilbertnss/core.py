"""Exact coefficient fields and multivariate polynomials.

Polynomials are immutable maps from exponent tuples to nonzero field
elements.  Two coefficient fields are supported: the rationals (backed by
``gmpy2.mpq``) and prime fields ``F_p`` (plain Python ints in ``[0, p)``).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

Monomial = tuple  # tuple[int, ...] of exponents

DEFAULT_PRIME = 32003


class RingMismatch(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class Field:
    """Q when ``p`` is None, otherwise the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p < 3 or not _is_prime(self.p)):
            raise ValueError(f"field modulus must be an odd prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        p = self.p
        if p is None:
            if isinstance(value, str):
                return mpq(Fraction(value.strip()))
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction) or type(value).__name__ == "mpq":
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        return int(value) % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return mpq(1) / a
        return pow(a, -1, self.p)

    def fmt(self, a) -> str:
        return str(a)

    def to_fraction(self, a) -> Fraction:
        if self.p is None:
            return Fraction(int(a.numerator), int(a.denominator))
        return Fraction(a)

    def random_element(self, rng: random.Random, bound: int = 9, nonzero: bool = True):
        while True:
            c = rng.randint(-bound, bound) if self.p is None else rng.randrange(self.p)
            if c or not nonzero:
                return self.coerce(c)

    def __str__(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @classmethod
    def from_string(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("Q", "QQ", "q"):
            return QQ
        m = re.fullmatch(r"(?i)fp?:?(\d+)", text)
        if m:
            return cls(int(m.group(1)))
        raise ValueError(f"unknown field {text!r} (expected Q or Fp:<p>)")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


QQ = Field()


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x - y for x, y in zip(a, b)])


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree, in descending lex order."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def grevlex_sortkey(m: Monomial):
    """Ascending sort key placing larger monomials (graded reverse lex) first."""
    return (-sum(m), m[::-1])


# ---------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class Ring:
    names: tuple[str, ...]
    field: Field = QQ
    graded: bool = False

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def gen(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    @property
    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str, line: int = 1) -> "Polynomial":
        return parse_polynomial(self, text, line)

    def __call__(self, text: str) -> "Polynomial":
        return self.parse(text)

    def with_field(self, field: Field) -> "Ring":
        return Ring(self.names, field, self.graded)

    def header(self) -> str:
        return f"ring: {' '.join(self.names)} over {self.field}"


def graded_ring(nvars: int, field: Field = QQ, prefix: str = "x") -> Ring:
    """k[x0, ..., x_{nvars-1}] with the graded flag set."""
    return Ring(tuple(f"{prefix}{i}" for i in range(nvars)), field, True)


def affine_ring(n: int, field: Field = QQ, prefix: str = "x") -> Ring:
    """k[x1, ..., xn]."""
    return Ring(tuple(f"{prefix}{i}" for i in range(1, n + 1)), field, False)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable exact polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, object] | None = None, *, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            f = ring.field
            clean = {}
            n = ring.nvars
            for m, c in (terms or {}).items():
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {n} variables")
                c = f.coerce(c)
                if c:
                    if m in clean:
                        c = f.coerce(clean[m] + c)
                        if not c:
                            del clean[m]
                            continue
                    clean[m] = c
            self.terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------------

    def _new(self, terms: dict) -> "Polynomial":
        return Polynomial(self.ring, terms, _trusted=True)

    def _coerce_other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"ring mismatch: {self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "mpq":
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            if v is None:
                terms[m] = c
                continue
            v = v + c
            if p:
                v %= p
            if v:
                terms[m] = v
            else:
                del terms[m]
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p:
            return self._new({m: p - c for m, c in self.terms.items()})
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple([a + b for a, b in zip(m1, m2)])
                v = out.get(m, 0) + c1 * c2
                if p:
                    v %= p
                out[m] = v
        return self._new({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.coerce(c)
        if not c:
            return self.ring.zero
        p = self.ring.field.p
        if p:
            return self._new({m: v * c % p for m, v in self.terms.items()})
        return self._new({m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, c=1) -> "Polynomial":
        c = self.ring.field.coerce(c)
        p = self.ring.field.p
        if not c:
            return self.ring.zero
        if p:
            return self._new({mono_mul(m, mono): v * c % p for m, v in self.terms.items()})
        return self._new({mono_mul(m, mono): v * c for m, v in self.terms.items()})

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        other = self._coerce_other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self, sortkey=grevlex_sortkey) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: sortkey(t[0]))

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return self._new({m: c for m, c in self.terms.items() if sum(m) == degree})

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.field.coerce(0))

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def content_normalized(self) -> "Polynomial":
        """Scale so the grevlex-leading coefficient is 1."""
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        return self.scale(self.ring.field.inv(lead))

    def evaluate(self, point: Sequence) -> object:
        f = self.ring.field
        total = f.coerce(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * f.coerce(x) ** e
            total = total + v
        return f.coerce(total)

    def change_ring(self, ring: Ring, index_map: Sequence[int] | None = None) -> "Polynomial":
        """Re-embed into ``ring``; ``index_map[i]`` gives the target slot of variable i."""
        if index_map is None:
            index_map = [ring.names.index(nm) for nm in self.ring.names]
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, k in enumerate(m):
                if k:
                    e[index_map[i]] += k
            out[tuple(e)] = c if ring.field == self.ring.field else self.ring.field.to_fraction(c)
        return Polynomial(ring, out)

    # -- text -----------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


# ---------------------------------------------------------------------------
# text grammar


def _format_monomial(names: Sequence[str], m: Monomial) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    field = f.ring.field
    out = []
    for m, c in f.sorted_terms():
        if field.p is None:
            neg = c < 0
            mag = -c if neg else c
        else:
            neg, mag = False, c
        mono = _format_monomial(f.ring.names, m)
        coeff = str(mag)
        if not mono:
            body = coeff
        elif mag == 1:
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*^()−])|(?P<bad>\S))"
)


def parse_polynomial(ring: Ring, text: str, line: int = 1) -> Polynomial:
    """Parse the term grammar: ``[coeff][*]var[^exp]*...`` joined by ``+``/``-``."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r}", line, m.start("bad") + 1)
        kind = m.lastgroup
        tok = m.group(kind)
        if tok == "−":
            tok = "-"
        if tok == "**":
            tok = "^"
        tokens.append((kind, tok, m.start(kind) + 1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty polynomial", line, 1)

    field = ring.field
    result: dict = {}
    i = 0
    n = ring.nvars

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text) + 1)

    expect_term = True
    while i < len(tokens):
        sign = 1
        kind, tok, col = peek()
        if kind == "op" and tok in "+-":
            sign = -1 if tok == "-" else 1
            i += 1
            kind, tok, col = peek()
        elif not expect_term:
            raise ParseError(f"expected '+' or '-', got {tok!r}", line, col)
        expect_term = False
        coeff = Fraction(1)
        exps = [0] * n
        saw_factor = False
        while True:
            kind, tok, col = peek()
            if kind == "num":
                coeff *= Fraction(tok)
                i += 1
            elif kind == "name":
                if tok not in ring.names:
                    raise ParseError(f"unknown variable {tok!r}", line, col)
                i += 1
                e = 1
                k2, t2, c2 = peek()
                if k2 == "op" and t2 == "^":
                    i += 1
                    k3, t3, c3 = peek()
                    if k3 != "num" or "/" in t3:
                        raise ParseError("exponent must be a nonnegative integer", line, c3)
                    e = int(t3)
                    i += 1
                exps[ring.names.index(tok)] += e
            elif kind is None:
                raise ParseError("unexpected end of input", line, col)
            else:
                raise ParseError(f"unexpected token {tok!r}", line, col)
            saw_factor = True
            kind, tok, col = peek()
            if kind == "op" and tok == "*":
                i += 1
                continue
            if kind in ("num", "name"):
                # juxtaposition such as "3x1" is not part of the grammar
                raise ParseError(f"missing '*' before {tok!r}", line, col)
            break
        if not saw_factor:
            raise ParseError("empty term", line, col)
        m = tuple(exps)
        v = result.get(m, Fraction(0)) + sign * coeff
        result[m] = v
    return Polynomial(ring, {m: c for m, c in result.items() if c})


def parse_ring_header(line: str) -> Ring:
    m = re.fullmatch(r"\s*ring:\s*(.+?)\s+over\s+(\S+)\s*", line)
    if not m:
        raise ParseError("expected header 'ring: <names> over Q|Fp:<p>'", 1, 1)
    names = tuple(m.group(1).replace(",", " ").split())
    try:
        field = Field.from_string(m.group(2))
    except ValueError as exc:
        raise ParseError(str(exc), 1, m.start(2) + 1) from None
    graded = False
    return Ring(names, field, graded)


# ---------------------------------------------------------------------------
# homogenization


def homogenize(g: Polynomial, hom_var: int = 0, name: str = "x0") -> Polynomial:
    """Homogenize ``g`` with a fresh variable inserted at position ``hom_var``."""
    if g.is_zero:
        raise ValueError("cannot homogenize the zero polynomial")
    ring = g.ring
    if name in ring.names:
        raise ValueError(f"homogenizing variable {name!r} already in ring")
    names = list(ring.names)
    names.insert(hom_var, name)
    target = Ring(tuple(names), ring.field, True)
    return homogenize_into(g, target, hom_var)


def homogenize_into(g: Polynomial, target: Ring, hom_var: int = 0, degree: int | None = None) -> Polynomial:
    """Homogenize into an existing ring whose slot ``hom_var`` is the new variable."""
    d = g.degree() if degree is None else degree
    out = {}
    for m, c in g.terms.items():
        e = list(m)
        e.insert(hom_var, d - sum(m))
        out[tuple(e)] = c
    return Polynomial(target, out, _trusted=True)


def dehomogenized_ring(ring: Ring, hom_var: int = 0) -> Ring:
    names = list(ring.names)
    del names[hom_var]
    return Ring(tuple(names), ring.field, False)


def affinize(f: Polynomial, hom_var: int = 0, target: Ring | None = None) -> Polynomial:
    """Set the variable ``hom_var`` to 1."""
    target = target or dehomogenized_ring(f.ring, hom_var)
    p = f.ring.field.p
    out: dict = {}
    for m, c in f.terms.items():
        e = m[:hom_var] + m[hom_var + 1:]
        v = out.get(e, 0) + c
        if p:
            v %= p
        out[e] = v
    return Polynomial(target, {m: c for m, c in out.items() if c}, _trusted=True)


def strip_variable_power(f: Polynomial, var: int) -> tuple[Polynomial, int]:
    """Divide out the largest power of ``x_var`` dividing f."""
    if f.is_zero:
        return f, 0
    k = min(m[var] for m in f.terms)
    if not k:
        return f, 0
    out = {}
    for m, c in f.terms.items():
        e = list(m)
        e[var] -= k
        out[tuple(e)] = c
    return Polynomial(f.ring, out, _trusted=True), k


# ---------------------------------------------------------------------------
# randomness


def random_polynomial(
    ring: Ring,
    degree: int,
    homogeneous: bool = True,
    seed: int | random.Random = 0,
    density: float = 1.0,
    coeff_bound: int = 9,
    variables: Iterable[int] | None = None,
) -> Polynomial:
    """Seeded random polynomial of exact total degree ``degree``.

    Each candidate monomial is kept with probability ``density``; at least
    one monomial of top degree is always present.  Over Q coefficients are
    drawn from ``[-coeff_bound, coeff_bound]``; over F_p uniformly.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    idx = list(range(ring.nvars)) if variables is None else sorted(variables)
    field = ring.field

    def lift(sub: Monomial) -> Monomial:
        e = [0] * ring.nvars
        for i, k in zip(idx, sub):
            e[i] = k
        return tuple(e)

    degrees = [degree] if homogeneous else range(degree, -1, -1)
    terms = {}
    for d in degrees:
        for sub in monomials_of_degree(len(idx), d):
            if rng.random() < density:
                terms[lift(sub)] = field.random_element(rng, coeff_bound)
    if not any(sum(m) == degree for m in terms):
        mons = monomials_of_degree(len(idx), degree)
        terms[lift(rng.choice(mons))] = field.random_element(rng, coeff_bound)
    return Polynomial(ring, terms)


def random_linear_form(ring: Ring, seed: int | random.Random = 0, coeff_bound: int = 9) -> Polynomial:
    return random_polynomial(ring, 1, True, seed, 1.0, coeff_bound)
