"""Classical cross-validation routines, independent of the fast kernels.

Everything here is deliberately simple: weak Popov reduction by repeated
pivot-collision elimination with an accumulated unimodular transform, rank
and rank profiles derived from it, small fraction-free determinants, and a
seeded generator of rank-constrained instances. These routines share no
code with the fast algorithms beyond Poly and PolyMatrix themselves, so
agreement between the two sides is meaningful evidence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .gf import GF, Poly, poly_gcd
from .polymat import PolyMatrix

DET_GUARD = 6
MINORS_ROW_GUARD = 4
MINORS_COL_GUARD = 12
_REDRAW_LIMIT = 64


class SizeGuardError(ValueError):
    """Input exceeds the size guard of an exhaustive routine."""


@dataclass(frozen=True)
class MsResult:
    reduced: PolyMatrix    # weak Popov up to zero rows
    transform: PolyMatrix  # unimodular, transform @ input == reduced


def _pivot(row: Sequence[Poly], shift: Sequence[int]) -> Optional[int]:
    best = None
    for j, e in enumerate(row):
        if e.coeffs:
            d = len(e.coeffs) - 1 + shift[j]
            if best is None or d >= best[0]:
                best = (d, j)
    return None if best is None else best[1]


def ms_weak_popov(F: PolyMatrix, shift: Optional[Sequence[int]] = None) -> MsResult:
    """Reduce F to (shifted) weak Popov form by collision elimination.

    While two nonzero rows share a pivot column, the one whose pivot entry
    has larger degree is cleared by a monomial multiple of the other; ties
    clear the higher row index. The first colliding pair in row order is
    always picked, so the reduction is deterministic. Each step strictly
    lowers the (row degree, pivot index) pair of the row it touches, which
    bounds the number of steps.
    """
    s = tuple(shift) if shift is not None else (0,) * F.ncols
    if len(s) != F.ncols:
        raise ValueError(f"shift length {len(s)} does not match {F.ncols} columns")
    field = F.field
    work = [list(row) for row in F.rows()]
    trans = [list(row) for row in PolyMatrix.identity(field, F.nrows).rows()]
    pivots = [_pivot(row, s) for row in work]

    def rdeg_key(i):
        row = work[i]
        j = pivots[i]
        if j is None:
            return None
        return (len(row[j].coeffs) - 1 + s[j], j)

    while True:
        pair = None
        for i1 in range(F.nrows):
            if pivots[i1] is None:
                continue
            for i2 in range(i1 + 1, F.nrows):
                if pivots[i2] == pivots[i1]:
                    pair = (i1, i2)
                    break
            if pair:
                break
        if pair is None:
            break
        i1, i2 = pair
        j = pivots[i1]
        d1 = len(work[i1][j].coeffs) - 1
        d2 = len(work[i2][j].coeffs) - 1
        if d1 > d2:
            src, dst = i2, i1
        else:
            src, dst = i1, i2
        before = rdeg_key(dst)
        e = abs(d2 - d1)
        c = (
            work[dst][j].leading_coefficient()
            * field.inv(work[src][j].leading_coefficient())
        ) % field.p
        mono = Poly.monomial(field, e, c)
        work[dst] = [a - mono * b for a, b in zip(work[dst], work[src])]
        trans[dst] = [a - mono * b for a, b in zip(trans[dst], trans[src])]
        pivots[dst] = _pivot(work[dst], s)
        after = rdeg_key(dst)
        assert after is None or after < before, "reduction metric must decrease"

    return MsResult(
        PolyMatrix(field, work, ncols=F.ncols),
        PolyMatrix(field, trans, ncols=F.nrows),
    )


def rank_oracle(F: PolyMatrix) -> int:
    """Rank over GF(p)[x]: nonzero rows after weak Popov reduction."""
    w = ms_weak_popov(F).reduced
    return sum(1 for row in w.rows() if any(e.coeffs for e in row))


def kernel_oracle(F: PolyMatrix) -> PolyMatrix:
    """A left kernel basis: transform rows aligned with zero reduced rows."""
    res = ms_weak_popov(F)
    rows = [
        trow
        for wrow, trow in zip(res.reduced.rows(), res.transform.rows())
        if not any(e.coeffs for e in wrow)
    ]
    return PolyMatrix(F.field, rows, ncols=F.nrows)


def crp_oracle(F: PolyMatrix) -> tuple:
    """Column rank profile by incremental column scan.

    Keeps column j exactly when it enlarges the rank of the kept columns;
    recomputes the rank from scratch each time, which is fine at the sizes
    this oracle is meant for.
    """
    kept: list = []
    rank = 0
    for j in range(1, F.ncols + 1):
        sub = F.submatrix(cols=kept + [j])
        if rank_oracle(sub) > rank:
            kept.append(j)
            rank += 1
    return tuple(kept)


def det_small(F: PolyMatrix) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination; guard: n <= 6."""
    if F.nrows != F.ncols:
        raise ValueError(f"determinant needs a square matrix, got {F.nrows}x{F.ncols}")
    n = F.nrows
    if n > DET_GUARD:
        raise SizeGuardError(f"determinant guard is {DET_GUARD} rows, got {n}")
    field = F.field
    if n == 0:
        return Poly.one(field)
    m = [list(row) for row in F.rows()]
    sign = 1
    prev = Poly.one(field)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k].coeffs), None)
        if piv is None:
            return Poly.zero(field)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                quo, rem = divmod(num, prev)
                assert rem.is_zero(), "fraction-free elimination must divide exactly"
                m[i][j] = quo
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def minors_gcd_is_one(K: PolyMatrix) -> bool:
    """Whether the maximal minors of K have gcd 1 (kernel saturation check).

    Exhaustive over all column choices, so guarded to 4 rows and 12 columns.
    """
    r, n = K.nrows, K.ncols
    if r > MINORS_ROW_GUARD or n > MINORS_COL_GUARD:
        raise SizeGuardError(
            f"minors guard is {MINORS_ROW_GUARD}x{MINORS_COL_GUARD}, got {r}x{n}"
        )
    if r == 0:
        return True
    if r > n:
        return False
    g = Poly.zero(K.field)
    for cols in combinations(range(1, n + 1), r):
        g = poly_gcd(g, det_small(K.submatrix(cols=cols)))
        if g.degree() == 0:
            return True
    return False


@dataclass(frozen=True)
class InstanceSpec:
    nrows: int
    ncols: int
    rank: int
    degree: int
    modulus: int
    seed: int


def random_instance(spec: InstanceSpec) -> PolyMatrix:
    """Deterministic random matrix of prescribed rank, F = S @ R.

    Both factors have uniform entries of degree at most spec.degree. The
    product is redrawn (bounded number of times) until the oracle confirms
    the requested rank.
    """
    if not 0 <= spec.rank <= min(spec.nrows, spec.ncols):
        raise ValueError(
            f"rank {spec.rank} out of range for a {spec.nrows}x{spec.ncols} matrix"
        )
    if spec.degree < 0:
        raise ValueError("degree bound must be nonnegative")
    field = GF(spec.modulus)
    rng = random.Random(spec.seed)

    def draw(nr, nc):
        return PolyMatrix(
            field,
            [
                [[rng.randrange(field.p) for _ in range(spec.degree + 1)] for _ in range(nc)]
                for _ in range(nr)
            ],
            ncols=nc,
        )

    for _ in range(_REDRAW_LIMIT):
        F = draw(spec.nrows, spec.rank) @ draw(spec.rank, spec.ncols)
        if rank_oracle(F) == spec.rank:
            return F
    raise RuntimeError(
        f"could not hit rank {spec.rank} in {_REDRAW_LIMIT} draws for {spec}"
    )
