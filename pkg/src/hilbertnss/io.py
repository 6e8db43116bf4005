"""Ideal files: a ``ring:`` header followed by one polynomial per line."""

from __future__ import annotations

from pathlib import Path

from .core import Field, ParseError, Polynomial, Ring, format_polynomial, parse_polynomial, parse_ring_header


def read_system(
    text: str, graded: bool | None = None, field: Field | None = None
) -> tuple[Ring, list[Polynomial]]:
    """Parse an ideal file.

    Blank lines and lines starting with ``#`` are skipped.  With
    ``graded=None`` the ring is graded exactly when every polynomial is
    homogeneous.  ``field`` overrides the header's field.
    """
    lines = text.splitlines()
    header_at = None
    for k, line in enumerate(lines):
        if line.strip() and not line.lstrip().startswith("#"):
            header_at = k
            break
    if header_at is None:
        raise ParseError("missing 'ring:' header", 1, 1)
    try:
        ring = parse_ring_header(lines[header_at])
    except ParseError as exc:
        raise ParseError(str(exc).split(": ", 1)[-1], header_at + 1, exc.column) from None
    if field is not None:
        ring = ring.with_field(field)
    polys = []
    for k in range(header_at + 1, len(lines)):
        line = lines[k]
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        polys.append(parse_polynomial(ring, line, k + 1))
    if graded is None:
        graded = bool(polys) and all(p.is_homogeneous() for p in polys)
    if graded:
        ring = Ring(ring.names, ring.field, True)
        polys = [p.change_ring(ring) for p in polys]
    return ring, polys


def load_system(path: str | Path, graded: bool | None = None, field: Field | None = None):
    return read_system(Path(path).read_text(), graded, field)


def format_system(ring: Ring, polys) -> str:
    return "\n".join([ring.header()] + [format_polynomial(p) for p in polys]) + "\n"
