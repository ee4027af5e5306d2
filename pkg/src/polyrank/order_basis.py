"""Minimal approximant bases: shifted-minimal relations mod x**order.

Given F (m x n over GF(p)[x]), an order tau >= 1 and a column shift s for
the m-row relation space, an approximant basis is a square nonsingular
matrix A whose rows generate {p in GF(p)[x]^(1 x m) : p F = 0 mod x**tau};
the bases produced here are s-ordered weak Popov, so their pivot profile
is the canonical one for that module.

Shifts may be arbitrary ints here; callers working with natural shifts
get the same results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .polymat import PolyMatrix

# below this order the divide-and-conquer variant falls back to the
# single-pass elimination
DAC_CROSSOVER = 16


@dataclass(frozen=True)
class OrderBasisResult:
    basis: PolyMatrix
    order: int
    shift: tuple
    ops: int  # coefficient multiply-accumulate count of the run


def _check_args(F: PolyMatrix, order: int, shift: Sequence[int]) -> tuple:
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise ValueError(f"order must be a positive int, got {order!r}")
    s = tuple(shift)
    if len(s) != F.nrows:
        raise ValueError(
            f"shift length {len(s)} does not match {F.nrows} rows"
        )
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"shift entries must be ints, got {v!r}")
    return s


def approximant_basis(F: PolyMatrix, order: int, shift: Sequence[int]) -> OrderBasisResult:
    """Single-pass approximant basis construction.

    Works through the order constraints coefficient by coefficient, column
    by column. At each constraint the row of minimal (shifted degree, pivot
    index) among those with a nonzero residual clears the others and is then
    multiplied by x. Row i keeps pivot index i throughout, so the result is
    ordered weak Popov without any final sort, and its pivot degrees are the
    per-row counts of x-multiplications.
    """
    s = _check_args(F, order, shift)
    m, n = F.nrows, F.ncols
    field = F.field
    p = field.p
    if m == 0:
        return OrderBasisResult(PolyMatrix.identity(field, 0), order, s, 0)

    resid = F.truncate(order)._cube(order)  # (m, n, order), orders < tau only
    basis = np.zeros((m, m, order + 1), dtype=np.int64)
    basis[np.arange(m), np.arange(m), 0] = 1
    sdeg = np.array(s, dtype=np.int64)
    ops = 0

    for d in range(order):
        for j in range(n):
            col = resid[:, j, d]
            nz = np.nonzero(col)[0]
            if len(nz) == 0:
                continue
            # lexicographically minimal (shifted degree, pivot index);
            # the pivot index of row i is i
            order_keys = np.lexsort((nz, sdeg[nz]))
            i_star = int(nz[order_keys[0]])
            others = nz[nz != i_star]
            if len(others):
                inv = pow(int(col[i_star]), -1, p)
                c = col[others] * inv % p
                basis[others] = (
                    basis[others] - c[:, None, None] * basis[i_star][None]
                ) % p
                resid[others, :, d:] = (
                    resid[others, :, d:] - c[:, None, None] * resid[i_star, :, d:][None]
                ) % p
                ops += int(len(others)) * (m * (order + 1) + n * (order - d))
            basis[i_star] = np.roll(basis[i_star], 1, axis=-1)
            basis[i_star, :, 0] = 0
            resid[i_star] = np.roll(resid[i_star], 1, axis=-1)
            resid[i_star, :, 0] = 0
            sdeg[i_star] += 1

    A = PolyMatrix._from_cube(field, basis)
    return OrderBasisResult(A, order, s, ops)


def approximant_basis_dac(
    F: PolyMatrix, order: int, shift: Sequence[int]
) -> OrderBasisResult:
    """Divide-and-conquer on the order; same contract as approximant_basis.

    Splits tau into halves, computes a basis for the low half, and continues
    on the shifted residual x**(-tau1) A1 F with the updated row degrees as
    shift. Both variants return bases of the same module with the same
    pivot profile; entries may differ.
    """
    s = _check_args(F, order, shift)
    return _dac(F.truncate(order), order, s)


def _dac(F: PolyMatrix, order: int, s: tuple) -> OrderBasisResult:
    from .polymat import matmul_cost

    if order <= DAC_CROSSOVER:
        return approximant_basis(F, order, s)
    o1 = order // 2
    o2 = order - o1
    r1 = _dac(F.truncate(o1), o1, s)
    prod = r1.basis @ F
    ops = r1.ops + matmul_cost(r1.basis, F)
    G = prod.truncate(order).div_x_pow(o1)
    t = r1.basis.row_degrees(s)
    r2 = _dac(G, o2, t)
    A = r2.basis @ r1.basis
    ops += r2.ops + matmul_cost(r2.basis, r1.basis)
    return OrderBasisResult(A, order, s, ops)
