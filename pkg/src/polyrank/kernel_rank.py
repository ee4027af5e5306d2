"""Kernel bases with column rank profiles, rank-sensitively.

kernel_basis_rank_profile(F, s) returns an s-ordered weak Popov basis K of
the left kernel {p : p F = 0} together with the column rank profile J of F
(the lexicographically first list of rank-many independent column indices).
The shift s must dominate the row degrees of F; under that condition the
sum of shifted row degrees of K is at most sum(s), and the pivot profile
of K is canonical.

Two internal paths, both exposed for direct exercise:

* kernel_split_columns: for wide F, recurse on the left half of the
  columns, then push the kernel through the right half.
* kernel_via_relations: for narrow F, compute an approximant basis at an
  order high enough that rows of small shifted degree are exact kernel
  elements; the rest continue on a smaller residual.

Instrumentation (field-op counter, recursion depth, per-call residual row
counts) is returned on every result, and the structural row-count bounds
of the relation path are asserted at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .gf import NEG_INF
from .order_basis import approximant_basis
from .polymat import PolyMatrix, matmul_cost


class ShiftError(ValueError):
    """Shift fails the row-degree dominance precondition."""


@dataclass
class RelationStep:
    depth: int
    nrows: int
    ncols: int
    order: int
    rows_in_kernel: int       # rows of the basis certified as kernel rows
    rows_residual_pre: int    # basis rows above the order cutoff
    rows_residual: int        # residual rows entering the recursion
    rank: int = -1            # rank discovered below this step


@dataclass
class KernelStats:
    field_ops: int = 0
    max_depth: int = 0
    relation_steps: list = dc_field(default_factory=list)


@dataclass(frozen=True)
class KernelRankResult:
    kernel: PolyMatrix
    rank_profile: tuple
    stats: KernelStats

    @property
    def rank(self) -> int:
        return len(self.rank_profile)


def _validate_shift(F: PolyMatrix, shift: Sequence[int]) -> tuple:
    s = tuple(shift)
    if len(s) != F.nrows:
        raise ValueError(
            f"shift length {len(s)} does not match {F.nrows} rows"
        )
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"shift entries must be nonnegative ints, got {v!r}")
    for i, d in enumerate(F.row_degrees()):
        if d != NEG_INF and s[i] < d:
            raise ShiftError(
                f"shift {s[i]} below row degree {d} at row {i + 1}"
            )
    return s


def kernel_basis_rank_profile(F: PolyMatrix, shift: Sequence[int]) -> KernelRankResult:
    """Kernel basis and column rank profile of F under a dominating shift."""
    s = _validate_shift(F, shift)
    stats = KernelStats()
    K, J = _kernel(F, s, stats, 0)
    assert K.nrows == F.nrows - len(J)
    assert all(a < b for a, b in zip(J, J[1:]))
    assert _product_is_zero(K, F)
    return KernelRankResult(K, J, stats)


def _product_is_zero(K: PolyMatrix, F: PolyMatrix) -> bool:
    return (K @ F).is_zero()


def _kernel(F: PolyMatrix, s: tuple, stats: KernelStats, depth: int):
    stats.max_depth = max(stats.max_depth, depth)
    m, n = F.nrows, F.ncols
    if F.is_zero():
        return PolyMatrix.identity(F.field, m), ()
    if m == 1:
        j = next(
            j for j in range(n) if not F.rows()[0][j].is_zero()
        )
        return PolyMatrix.zeros(F.field, 0, 1), (j + 1,)
    if m < 2 * n:
        return _split_columns(F, s, stats, depth)
    return _via_relations(F, s, stats, depth)


def kernel_split_columns(F: PolyMatrix, shift: Sequence[int]) -> KernelRankResult:
    """Column-splitting path; requires F != 0, m >= 2 and m < 2n."""
    s = _validate_shift(F, shift)
    if F.is_zero() or F.nrows < 2 or F.nrows >= 2 * F.ncols:
        raise ValueError(
            "column splitting applies to nonzero F with 2 <= m < 2n"
        )
    stats = KernelStats()
    K, J = _split_columns(F, s, stats, 0)
    return KernelRankResult(K, J, stats)


def _split_columns(F: PolyMatrix, s: tuple, stats: KernelStats, depth: int):
    nl = F.ncols // 2
    left = F.submatrix(cols=range(1, nl + 1))
    right = F.submatrix(cols=range(nl + 1, F.ncols + 1))
    K1, J1 = _kernel(left, s, stats, depth + 1)
    F2 = K1 @ right
    stats.field_ops += matmul_cost(K1, right)
    t = K1.row_degrees(s)
    K2, J2 = _kernel(F2, t, stats, depth + 1)
    K = K2 @ K1
    stats.field_ops += matmul_cost(K2, K1)
    return K, J1 + tuple(j + nl for j in J2)


def kernel_via_relations(F: PolyMatrix, shift: Sequence[int]) -> KernelRankResult:
    """Relation path; requires F != 0, m >= 2 and n <= m/2."""
    s = _validate_shift(F, shift)
    if F.is_zero() or F.nrows < 2 or F.nrows < 2 * F.ncols:
        raise ValueError(
            "the relation path applies to nonzero F with 2 <= m and n <= m/2"
        )
    stats = KernelStats()
    K, J = _via_relations(F, s, stats, 0)
    return KernelRankResult(K, J, stats)


def _via_relations(F: PolyMatrix, s: tuple, stats: KernelStats, depth: int):
    m, n = F.nrows, F.ncols
    rdeg = F.row_degrees()
    mu = min(s[i] - rdeg[i] for i in range(m) if rdeg[i] != NEG_INF)
    r = tuple(si - mu for si in s)
    # order at which low-degree relations are certified kernel rows; kept
    # positive so degenerate shifts on zero rows cannot drive it to 0
    tau = max(1, -(-2 * sum(r) // (m - n)))
    ob = approximant_basis(F, tau, r)
    stats.field_ops += ob.ops
    A = ob.basis
    rdeg_a = A.row_degrees(r)
    inside = [i for i in range(m) if rdeg_a[i] < tau]
    outside = [i for i in range(m) if rdeg_a[i] >= tau]
    assert len(outside) <= -(-3 * m // 4)
    assert outside, "a nonzero F leaves at least one row above the cutoff"
    a_out = A.submatrix(rows=[i + 1 for i in outside])
    prod = a_out @ F
    stats.field_ops += matmul_cost(a_out, F)
    G0 = prod.div_x_pow(tau)
    keep = [k for k, row in enumerate(G0.rows()) if any(not e.is_zero() for e in row)]
    moved = [outside[k] for k in range(len(outside)) if k not in set(keep)]
    inside = sorted(inside + moved)
    outside_pre = len(outside)
    outside = [outside[k] for k in keep]
    assert outside, "a nonzero F has at least one non-kernel basis row"
    if len(keep) != outside_pre:
        a_out = a_out.submatrix(rows=[k + 1 for k in keep])
        G = G0.submatrix(rows=[k + 1 for k in keep])
    else:
        G = G0
    t = tuple(rdeg_a[i] - tau for i in outside)
    assert all(v >= 0 for v in t)
    step = RelationStep(depth, m, n, tau, len(inside), outside_pre, len(outside))
    stats.relation_steps.append(step)
    K2, J = _kernel(G, t, stats, depth + 1)
    step.rank = len(J)
    assert len(outside) <= len(J) + (m - n) // 2
    a_in = A.submatrix(rows=[i + 1 for i in inside])
    upper = K2 @ a_out
    stats.field_ops += matmul_cost(K2, a_out)
    K = _merge_by_pivot(upper, a_in, r)
    return K, J


def _merge_by_pivot(A: PolyMatrix, B: PolyMatrix, shift: tuple) -> PolyMatrix:
    """Interleave the rows of two matrices by increasing shifted pivot index.

    Both inputs must already be sorted with pairwise distinct pivots; the
    merge is a linear zip of the two row lists.
    """
    pa = [entry[0] for entry in A.pivot_profile(shift)]
    pb = [entry[0] for entry in B.pivot_profile(shift)]
    assert all(x < y for x, y in zip(pa, pa[1:]))
    assert all(x < y for x, y in zip(pb, pb[1:]))
    rows = []
    ia = ib = 0
    while ia < A.nrows and ib < B.nrows:
        if pa[ia] < pb[ib]:
            rows.append(A.rows()[ia])
            ia += 1
        else:
            assert pa[ia] != pb[ib], "pivot collision in kernel merge"
            rows.append(B.rows()[ib])
            ib += 1
    rows.extend(A.rows()[ia:])
    rows.extend(B.rows()[ib:])
    return PolyMatrix(A.field, rows, ncols=A.ncols)
