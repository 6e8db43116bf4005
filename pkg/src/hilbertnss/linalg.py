"""Exact linear algebra over Q or F_p.

``SparseEchelon`` keeps an incrementally growing row-echelon basis of sparse
vectors (dicts from column labels to field elements); it is what the
Hilbert-function oracle and the certificate search run on.  ``bareiss_solve``
is a dense fraction-free solver over the integers used to cross-check small
systems.
"""

from __future__ import annotations

import heapq
from typing import Callable, Hashable

from .core import Field


class SparseEchelon:
    """Row echelon form built one row at a time.

    Pivot columns are the smallest column under ``key``.  With ``track=True``
    every stored row remembers which input rows (by tag) it combines, so a
    vector that reduces to zero comes with an explicit combination.
    """

    def __init__(self, field: Field, key: Callable[[Hashable], object], track: bool = False):
        self.field = field
        self.key = key
        self.track = track
        self.pivots: dict = {}  # column -> (row, combination)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, combo: dict | None):
        p = self.field.p
        v = dict(vec)
        heap = [(self.key(c), c) for c in v]
        heapq.heapify(heap)
        while heap:
            _, col = heapq.heappop(heap)
            a = v.get(col)
            if a is None:
                continue
            piv = self.pivots.get(col)
            if piv is None:
                return v, combo, col
            row, rcombo = piv
            for c, b in row.items():
                w = v.get(c)
                if w is None:
                    w = -a * b
                    if p:
                        w %= p
                    v[c] = w
                    heapq.heappush(heap, (self.key(c), c))
                else:
                    w = w - a * b
                    if p:
                        w %= p
                    if w:
                        v[c] = w
                    else:
                        del v[c]
            if combo is not None:
                for t, b in rcombo.items():
                    w = combo.get(t, 0) - a * b
                    if p:
                        w %= p
                    if w:
                        combo[t] = w
                    else:
                        combo.pop(t, None)
        return v, combo, None

    def add(self, vec: dict, tag: Hashable = None) -> bool:
        """Insert a row; returns True when it raised the rank."""
        if not vec:
            return False
        combo = {tag: self.field.coerce(1)} if self.track else None
        v, combo, col = self._reduce(vec, combo)
        if col is None:
            return False
        inv = self.field.inv(v[col])
        p = self.field.p
        if p:
            v = {c: a * inv % p for c, a in v.items()}
            if combo is not None:
                combo = {t: a * inv % p for t, a in combo.items()}
        else:
            v = {c: a * inv for c, a in v.items()}
            if combo is not None:
                combo = {t: a * inv for t, a in combo.items()}
        self.pivots[col] = (v, combo)
        return True

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` after eliminating every pivot column it hits."""
        v, _, col = self._reduce(vec, None)
        return v if col is not None else {}

    def express(self, vec: dict) -> dict | None:
        """Coefficients c_tag with vec = Σ c_tag·row_tag, or None if vec is not in the span."""
        if not self.track:
            raise ValueError("express() needs track=True")
        v, combo, col = self._reduce(vec, {})
        if col is not None:
            return None
        p = self.field.p
        # vec - Σ a_k·rows = 0 was accumulated as combo = -Σ a_k·row_tags
        if p:
            return {t: (-a) % p for t, a in combo.items() if a}
        return {t: -a for t, a in combo.items() if a}


def sparse_rank(field: Field, rows, key=lambda c: c) -> int:
    ech = SparseEchelon(field, key)
    for r in rows:
        ech.add(r)
    return ech.rank


def bareiss_solve(A: list[list[int]], b: list[int]):
    """Solve A x = b over Q by fraction-free elimination with partial pivoting.

    ``A`` and ``b`` must be integral.  Forward elimination keeps every entry
    an integer minor (exact division by the previous pivot); back
    substitution is rational.  Returns one solution with free variables set
    to 0, as a list of ``Fraction``, or None if the system is inconsistent.
    """
    from fractions import Fraction

    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(map(int, A[i])) + [int(b[i])] for i in range(rows)]
    prev = 1
    r = 0
    pivcols = []
    for c in range(cols):
        if r == rows:
            break
        best = None
        for i in range(r, rows):
            if M[i][c] and (best is None or abs(M[i][c]) < abs(M[best][c])):
                best = i
        if best is None:
            continue
        M[r], M[best] = M[best], M[r]
        piv = M[r][c]
        row_r = M[r]
        for i in range(r + 1, rows):
            row_i = M[i]
            f = row_i[c]
            for j in range(c, cols + 1):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
        pivcols.append(c)
        prev = piv
        r += 1
    for i in range(r, rows):
        if M[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for i in range(r - 1, -1, -1):
        c = pivcols[i]
        s = Fraction(M[i][cols])
        for j in range(c + 1, cols):
            if M[i][j]:
                s -= M[i][j] * x[j]
        x[c] = s / M[i][c]
    return x
