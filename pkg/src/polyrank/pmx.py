"""The pmx text format for polynomial matrices over GF(p).

Layout::

    # pmx v1
    modulus <p>
    dims <m> <n>
    <m body lines, n entries each, separated by " ; ">

An entry is the coefficient list of one polynomial, low-to-high,
space-separated canonical residues with no trailing zero; the zero
polynomial is the single token ``0``. Serialization is canonical, so
parse followed by serialize reproduces the input byte for byte.
"""

from __future__ import annotations

from .gf import GF, Poly
from .polymat import PolyMatrix

HEADER = "# pmx v1"


class PmxParseError(ValueError):
    """Malformed pmx input; the message carries the offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def serialize(F: PolyMatrix) -> str:
    lines = [HEADER, f"modulus {F.field.p}", f"dims {F.nrows} {F.ncols}"]
    for row in F.rows():
        lines.append(" ; ".join(e.to_token() for e in row))
    return "\n".join(lines) + "\n"


def parse(text: str) -> PolyMatrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise PmxParseError(1, f"expected header {HEADER!r}")
    if len(lines) < 3:
        raise PmxParseError(len(lines), "missing modulus or dims line")

    mod_parts = lines[1].split()
    if len(mod_parts) != 2 or mod_parts[0] != "modulus":
        raise PmxParseError(2, f"expected 'modulus <p>', got {lines[1]!r}")
    try:
        p = int(mod_parts[1])
    except ValueError:
        raise PmxParseError(2, f"bad modulus {mod_parts[1]!r}") from None
    try:
        field = GF(p)
    except ValueError as exc:
        raise PmxParseError(2, str(exc)) from None

    dim_parts = lines[2].split()
    if len(dim_parts) != 3 or dim_parts[0] != "dims":
        raise PmxParseError(3, f"expected 'dims <m> <n>', got {lines[2]!r}")
    try:
        m, n = int(dim_parts[1]), int(dim_parts[2])
    except ValueError:
        raise PmxParseError(3, f"bad dimensions {lines[2]!r}") from None
    if m < 0 or n < 0:
        raise PmxParseError(3, "dimensions must be nonnegative")

    if len(lines) != 3 + m:
        raise PmxParseError(
            len(lines), f"expected {m} body lines, found {len(lines) - 3}"
        )
    rows = []
    for i in range(m):
        lineno = 4 + i
        body = lines[3 + i]
        if n == 0:
            if body.strip():
                raise PmxParseError(lineno, "expected an empty line for 0 columns")
            rows.append([])
            continue
        tokens = body.split(";")
        if len(tokens) != n:
            raise PmxParseError(
                lineno, f"expected {n} entries, found {len(tokens)}"
            )
        row = []
        for jcol, token in enumerate(tokens, start=1):
            try:
                row.append(Poly.from_token(field, token))
            except ValueError as exc:
                raise PmxParseError(lineno, f"entry {jcol}: {exc}") from None
        rows.append(row)
    return PolyMatrix(field, rows, ncols=n)


def load(path: str) -> PolyMatrix:
    with open(path, "r", encoding="ascii") as handle:
        return parse(handle.read())


def dump(F: PolyMatrix, path: str) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(serialize(F))
