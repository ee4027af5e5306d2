"""Matrices over GF(p)[x]: shifted row degrees, pivots, and products.

A PolyMatrix is an immutable m x n grid of Poly entries over one field;
m = 0 and n = 0 are allowed. Row and column indices in the public API are
1-based, matching the conventions of the file format and the rank-profile
outputs; shifts are tuples of ints indexed by column.

The shifted row degree of a nonzero row under a shift s is
max_j (deg(entry_j) + s_j); its pivot is the largest column index reaching
that maximum. Zero rows have row degree NEG_INF and no pivot.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .gf import GF, NEG_INF, Poly

# per-GEMM int64 accumulation is exact when inner * (p-1)^2 stays below this
_INT64_SAFE = 2**62


def _as_poly(field: GF, value) -> Poly:
    if isinstance(value, Poly):
        if value.field.p != field.p:
            raise ValueError(f"mixed moduli: {value.field.p} vs {field.p}")
        return value
    return Poly(field, value)


class PolyMatrix:
    """An m x n matrix of dense univariate polynomials over GF(p)."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: GF, rows: Sequence[Sequence], ncols: Optional[int] = None):
        if not isinstance(field, GF):
            raise ValueError(f"expected a GF field, got {field!r}")
        grid = []
        width = ncols
        for row in rows:
            entries = tuple(_as_poly(field, v) for v in row)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ValueError(
                    f"ragged rows: expected {width} entries, got {len(entries)}"
                )
            grid.append(entries)
        if width is None:
            raise ValueError("column count is ambiguous for a matrix with no rows")
        self.field = field
        self.nrows = len(grid)
        self.ncols = width
        self._rows = tuple(grid)

    @classmethod
    def zeros(cls, field: GF, nrows: int, ncols: int) -> "PolyMatrix":
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        z = Poly.zero(field)
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field: GF, n: int) -> "PolyMatrix":
        if n < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        z = Poly.zero(field)
        o = Poly.one(field)
        rows = [[o if i == j else z for j in range(n)] for i in range(n)]
        return cls(field, rows, ncols=n)

    def entry(self, i: int, j: int) -> Poly:
        """Entry at 1-based position (i, j)."""
        if not 1 <= i <= self.nrows or not 1 <= j <= self.ncols:
            raise ValueError(
                f"entry ({i}, {j}) out of range for a {self.nrows}x{self.ncols} matrix"
            )
        return self._rows[i - 1][j - 1]

    def rows(self):
        return self._rows

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._rows for e in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.field.p == other.field.p
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self._rows, self.ncols))

    def __repr__(self) -> str:
        return f"<PolyMatrix {self.nrows}x{self.ncols} over GF({self.field.p})>"

    def pretty(self) -> str:
        cells = [[str(e) for e in row] for row in self._rows]
        widths = [
            max((len(cells[i][j]) for i in range(self.nrows)), default=1)
            for j in range(self.ncols)
        ]
        lines = [
            "[" + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.ncols)) + "]"
            for i in range(self.nrows)
        ]
        return "\n".join(lines)

    # -- shifts and degrees ------------------------------------------------

    def _check_shift(self, shift) -> tuple:
        s = tuple(shift)
        if len(s) != self.ncols:
            raise ValueError(
                f"shift length {len(s)} does not match {self.ncols} columns"
            )
        for v in s:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"shift entries must be ints, got {v!r}")
        return s

    def row_degrees(self, shift: Optional[Sequence[int]] = None) -> tuple:
        """Shifted row degrees; NEG_INF for zero rows under any shift."""
        s = self._check_shift(shift) if shift is not None else (0,) * self.ncols
        out = []
        for row in self._rows:
            d = NEG_INF
            for e, sj in zip(row, s):
                if e.coeffs:
                    d = max(d, len(e.coeffs) - 1 + sj)
            out.append(d)
        return tuple(out)

    def pivot_profile(self, shift: Optional[Sequence[int]] = None) -> tuple:
        """Per row: (pivot column, pivot entry degree), or None for zero rows.

        The pivot is the largest 1-based column index attaining the shifted
        row degree; the recorded degree is the unshifted entry degree.
        """
        s = self._check_shift(shift) if shift is not None else (0,) * self.ncols
        out = []
        for row in self._rows:
            best = None
            for j, (e, sj) in enumerate(zip(row, s)):
                if e.coeffs:
                    d = len(e.coeffs) - 1 + sj
                    if best is None or d >= best[0]:
                        best = (d, j)
            if best is None:
                out.append(None)
            else:
                j = best[1]
                out.append((j + 1, len(row[j].coeffs) - 1))
        return tuple(out)

    def leading_matrix(self, shift: Optional[Sequence[int]] = None) -> tuple:
        """Shifted leading matrix as a grid of residues; zero rows stay zero."""
        s = self._check_shift(shift) if shift is not None else (0,) * self.ncols
        degs = self.row_degrees(s)
        out = []
        for row, d in zip(self._rows, degs):
            if d == NEG_INF:
                out.append((0,) * self.ncols)
                continue
            line = []
            for e, sj in zip(row, s):
                k = d - sj
                line.append(e.coeffs[k] if 0 <= k < len(e.coeffs) else 0)
            out.append(tuple(line))
        return tuple(out)

    def is_reduced(self, shift: Optional[Sequence[int]] = None) -> bool:
        """True when the shifted leading matrix has full row rank."""
        lm = self.leading_matrix(shift)
        return constant_rank(lm, self.field.p) == self.nrows

    def is_ordered_weak_popov(self, shift: Optional[Sequence[int]] = None) -> bool:
        """True when every row is nonzero and pivots strictly increase."""
        prev = 0
        for entry in self.pivot_profile(shift):
            if entry is None or entry[0] <= prev:
                return False
            prev = entry[0]
        return True

    # -- selection and assembly --------------------------------------------

    def submatrix(
        self,
        rows: Optional[Sequence[int]] = None,
        cols: Optional[Sequence[int]] = None,
    ) -> "PolyMatrix":
        """Select rows and columns by 1-based indices, in the given order.

        Duplicate or out-of-range indices are rejected.
        """
        ridx = self._check_index(rows, self.nrows) if rows is not None else range(self.nrows)
        cidx = self._check_index(cols, self.ncols) if cols is not None else range(self.ncols)
        grid = [[self._rows[i][j] for j in cidx] for i in ridx]
        return PolyMatrix(self.field, grid, ncols=len(tuple(cidx)))

    @staticmethod
    def _check_index(idx: Sequence[int], bound: int) -> list:
        out = []
        seen = set()
        for v in idx:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= bound:
                raise ValueError(f"index {v!r} out of range [1, {bound}]")
            if v in seen:
                raise ValueError(f"duplicate index {v}")
            seen.add(v)
            out.append(v - 1)
        return out

    def stack(self, other: "PolyMatrix") -> "PolyMatrix":
        """Rows of self followed by rows of other."""
        if self.field.p != other.field.p:
            raise ValueError(f"mixed moduli: {self.field.p} vs {other.field.p}")
        if self.ncols != other.ncols:
            raise ValueError(
                f"column mismatch: {self.ncols} vs {other.ncols}"
            )
        return PolyMatrix(self.field, self._rows + other._rows, ncols=self.ncols)

    def transpose(self) -> "PolyMatrix":
        grid = [
            [self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)
        ]
        return PolyMatrix(self.field, grid, ncols=self.nrows)

    def truncate(self, order: int) -> "PolyMatrix":
        """Entrywise truncation mod x**order."""
        return PolyMatrix(
            self.field,
            [[e.truncate(order) for e in row] for row in self._rows],
            ncols=self.ncols,
        )

    def div_x_pow(self, k: int) -> "PolyMatrix":
        """Entrywise exact division by x**k."""
        return PolyMatrix(
            self.field,
            [[e.div_x_pow(k) for e in row] for row in self._rows],
            ncols=self.ncols,
        )

    # -- multiplication ------------------------------------------------------

    def _max_len(self) -> int:
        return max((len(e.coeffs) for row in self._rows for e in row), default=0)

    def _cube(self, length: int) -> np.ndarray:
        cube = np.zeros((self.nrows, self.ncols, length), dtype=np.int64)
        for i, row in enumerate(self._rows):
            for j, e in enumerate(row):
                if e.coeffs:
                    cube[i, j, : len(e.coeffs)] = e.coeffs
        return cube

    @classmethod
    def _from_cube(cls, field: GF, cube: np.ndarray) -> "PolyMatrix":
        m, n, _ = cube.shape
        grid = []
        for i in range(m):
            line = []
            for j in range(n):
                coeffs = cube[i, j]
                nz = np.nonzero(coeffs)[0]
                if len(nz) == 0:
                    line.append(Poly(field))
                else:
                    line.append(Poly(field, [int(v) for v in coeffs[: nz[-1] + 1]]))
            grid.append(line)
        return cls(field, grid, ncols=n)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.field.p != other.field.p:
            raise ValueError(f"mixed moduli: {self.field.p} vs {other.field.p}")
        if self.ncols != other.nrows:
            raise ValueError(
                f"dimension mismatch: {self.nrows}x{self.ncols} @ "
                f"{other.nrows}x{other.ncols}"
            )
        m, k, n = self.nrows, self.ncols, other.ncols
        la, lb = self._max_len(), other._max_len()
        if m == 0 or n == 0 or k == 0 or la == 0 or lb == 0:
            return PolyMatrix.zeros(self.field, m, n)
        p = self.field.p
        if k * (p - 1) ** 2 <= _INT64_SAFE:
            return self._matmul_cube(other, la, lb)
        return self._matmul_entrywise(other)

    def _matmul_cube(self, other: "PolyMatrix", la: int, lb: int) -> "PolyMatrix":
        p = self.field.p
        m, n = self.nrows, other.ncols
        a = self._cube(la)
        b = other._cube(lb)
        bmat = b.reshape(other.nrows, n * lb)
        out = np.zeros((m, n, la + lb - 1), dtype=np.int64)
        for i in range(la):
            part = (a[:, :, i] @ bmat) % p
            out[:, :, i : i + lb] += part.reshape(m, n, lb)
        out %= p
        return PolyMatrix._from_cube(self.field, out)

    def _matmul_entrywise(self, other: "PolyMatrix") -> "PolyMatrix":
        grid = []
        for i in range(self.nrows):
            line = []
            for j in range(other.ncols):
                acc = Poly(self.field)
                for t in range(self.ncols):
                    acc = acc + self._rows[i][t] * other._rows[t][j]
                line.append(acc)
            grid.append(line)
        return PolyMatrix(self.field, grid, ncols=other.ncols)


def matmul_cost(a: PolyMatrix, b: PolyMatrix) -> int:
    """Coefficient multiply-accumulate count of the dense product kernel."""
    la = max(a._max_len(), 1)
    lb = max(b._max_len(), 1)
    return a.nrows * a.ncols * b.ncols * la * lb


def constant_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a constant matrix over GF(p) by Gaussian elimination."""
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    n = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < n:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col] % p, -1, p)
        for i in range(rank + 1, len(mat)):
            c = mat[i][col] % p
            if c:
                f = c * inv % p
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank
