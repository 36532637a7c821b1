"""Line-oriented text formats for rings, polynomials, matrices, rows and words.

Every parser reports errors as ``ParseError("<source>:<line>: message")``.
"""

from .matrices import ElementaryGenerator, ElementaryProduct, Matrix, format_matrix, format_word
from .poly import format_poly, parse_poly
from .rings import RingError, RingHom, parse_ring_text

__all__ = [
    "ParseError", "read_ring", "parse_polys", "parse_matrix", "parse_row_file",
    "parse_word", "parse_witness", "parse_hom", "format_matrix", "format_word",
    "format_row_file", "format_witness",
]


class ParseError(ValueError):
    pass


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _poly(text, ring, source, lineno):
    try:
        return ring(parse_poly(text, ring.ambient))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{source}:{lineno}: {exc}") from None


def read_ring(text, field=None, source="<ring>"):
    try:
        return parse_ring_text(text, field=field, source=source)
    except RingError as exc:
        raise ParseError(str(exc)) from None
    except ValueError as exc:
        raise ParseError(f"{source}:1: {exc}") from None


def parse_polys(text, ring, source="<polys>"):
    """One polynomial per line."""
    return [_poly(line, ring, source, n) for n, line in _lines(text)]


def parse_matrix(text, ring, source="<matrix>"):
    """One row per line, entries separated by commas; the size is inferred."""
    rows = []
    for n, line in _lines(text):
        rows.append([_poly(cell, ring, source, n) for cell in line.split(",")])
        if len(rows[-1]) != len(rows[0]):
            raise ParseError(f"{source}:{n}: row has {len(rows[-1])} entries, expected {len(rows[0])}")
    if not rows:
        raise ParseError(f"{source}:1: empty matrix")
    return Matrix(ring, rows)


def parse_row_file(text, ring, source="<row>"):
    """``v: p1, ..., pn`` and optionally ``w: q1, ..., qn``; returns (v, w or None)."""
    v = w = None
    for n, line in _lines(text):
        key, sep, val = line.partition(":")
        key = key.strip()
        if not sep or key not in ("v", "w"):
            raise ParseError(f"{source}:{n}: expected 'v: ...' or 'w: ...'")
        entries = [_poly(cell, ring, source, n) for cell in val.split(",")]
        if key == "v":
            v = entries
        else:
            w = entries
    if v is None:
        raise ParseError(f"{source}:1: missing 'v:' line")
    if w is not None and len(w) != len(v):
        raise ParseError(f"{source}: v has {len(v)} entries but w has {len(w)}")
    return v, w


def format_row_file(v, w=None):
    out = "v: " + ", ".join(str(a) for a in v)
    if w is not None:
        out += "\nw: " + ", ".join(str(a) for a in w)
    return out


def parse_word(text, ring, source="<word>", rank=None):
    """Generator lines ``E i j <poly>`` / ``SE i j <poly>``; optional ``rank: n``
    and ``level: l`` headers.  Without ``rank`` the largest index is used
    (rounded up to even when SE generators occur).  Returns (word, level).
    """
    gens = []
    level = None
    for n, line in _lines(text):
        if ":" in line:
            key, _, val = line.partition(":")
            key = key.strip()
            try:
                if key == "rank":
                    rank = int(val)
                elif key == "level":
                    level = int(val)
                else:
                    raise ValueError(f"unknown header {key!r}")
            except ValueError as exc:
                raise ParseError(f"{source}:{n}: {exc}") from None
            continue
        parts = line.split(None, 3)
        if len(parts) != 4 or parts[0] not in ("E", "SE"):
            raise ParseError(f"{source}:{n}: expected 'E i j <poly>' or 'SE i j <poly>'")
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"{source}:{n}: indices must be integers") from None
        gens.append((n, parts[0], i, j, _poly(parts[3], ring, source, n)))
    if rank is None:
        rank = max((max(i, j) for _, _, i, j, _ in gens), default=0)
        if any(k == "SE" for _, k, _, _, _ in gens) and rank % 2:
            rank += 1
    word = []
    for n, kind, i, j, lam in gens:
        try:
            word.append(ElementaryGenerator(kind, i, j, lam, rank))
        except ValueError as exc:
            raise ParseError(f"{source}:{n}: {exc}") from None
    return ElementaryProduct(ring, rank, word), level


def parse_witness(text, ring, source="<witness>"):
    from .witt import WittWitness
    word, level = parse_word(text, ring, source)
    return WittWitness(level or 0, word)


def format_witness(wit):
    return f"level: {wit.level}\n" + format_word(wit.word)


def parse_hom(text, source, target, src_name="<hom>"):
    """Lines ``x1 -> <poly in target vars>``, one per source variable."""
    images = {}
    for n, line in _lines(text):
        lhs, sep, rhs = line.partition("->")
        lhs = lhs.strip()
        if not sep or lhs not in source.variables:
            raise ParseError(f"{src_name}:{n}: expected '<source var> -> <poly>'")
        images[lhs] = _poly(rhs, target, src_name, n)
    missing = [v for v in source.variables if v not in images]
    if missing:
        raise ParseError(f"{src_name}: no image for {', '.join(missing)}")
    try:
        return RingHom(source, target, images)
    except ValueError as exc:
        raise ParseError(f"{src_name}: {exc}") from None


def format_polys(polys):
    return "\n".join(str(p) if not hasattr(p, "terms") else format_poly(p) for p in polys)
