"""Rank-sensitive column rank profile via growing row windows.

column_rank_profile(F) returns the column rank profile J of F together
with a certified set I of rank-many independent row indices, touching only
O(rank) rows at a time. Rows already known independent are repeatedly
stacked with a window of fresh rows of comparable size; a kernel basis of
that stack exposes which stacked rows stay independent, and the scan
advances past the window.

The public entry first sorts the rows by nondecreasing row degree (zero
rows first) so that window row degrees stay balanced; indices in the
result always refer to the original matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .gf import NEG_INF
from .kernel_rank import kernel_basis_rank_profile
from .polymat import PolyMatrix


@dataclass
class CrpRound:
    theta: int        # first row index not yet scanned when the round began
    known: int        # k, independent rows carried into the round
    window: int       # ell, fresh rows pulled in
    degree_sum: int   # sum of the nonnegative window-stack row degrees
    field_ops: int    # kernel work done by the round


@dataclass
class CrpStats:
    rounds: list = dc_field(default_factory=list)
    field_ops: int = 0


@dataclass(frozen=True)
class CrpResult:
    independent_rows: tuple
    rank_profile: tuple
    stats: CrpStats

    @property
    def rank(self) -> int:
        return len(self.rank_profile)


def _check_state(F: PolyMatrix, theta: int, known: tuple):
    if not isinstance(theta, int) or isinstance(theta, bool):
        raise ValueError(f"theta must be an int, got {theta!r}")
    if not 1 <= theta <= F.nrows + 1:
        raise ValueError(f"theta {theta} out of range [1, {F.nrows + 1}]")
    seen = set()
    for v in known:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v < theta:
            raise ValueError(
                f"known row {v!r} out of range [1, {theta - 1}]"
            )
        if v in seen:
            raise ValueError(f"duplicate known row {v}")
        seen.add(v)


def column_rank_profile_rec(
    F: PolyMatrix, theta: int, known: Sequence[int]
) -> CrpResult:
    """Windowed scan from row theta, given independent rows below it.

    The caller guarantees that the known rows span the row space of rows
    1..theta-1; on small inputs this is cross-checked against the oracle
    when assertions are enabled.
    """
    known = tuple(known)
    _check_state(F, theta, known)
    if __debug__ and known and F.nrows <= 8 and F.ncols <= 8:
        from .oracle import rank_oracle

        head = F.submatrix(rows=range(1, theta))
        sub = F.submatrix(rows=known)
        assert rank_oracle(sub) == len(known) == rank_oracle(head)

    m, n = F.nrows, F.ncols
    stats = CrpStats()
    while True:
        k = len(known)
        if k == n:
            return CrpResult(known, tuple(range(1, n + 1)), stats)
        if k == 0:
            start = next(
                (i for i in range(theta, m + 1) if any(e.coeffs for e in F.rows()[i - 1])),
                None,
            )
            if start is None:
                return CrpResult((), (), stats)
            theta = start + 1
            known = (start,)
            continue
        ell = min(k, m - theta + 1)
        window = tuple(range(theta, theta + ell))
        G = F.submatrix(rows=known + window)
        s = tuple(0 if d == NEG_INF else d for d in G.row_degrees())
        res = kernel_basis_rank_profile(G, s)
        piv = {entry[0] for entry in res.kernel.pivot_profile(s)}
        non_piv = [i for i in range(1, k + ell + 1) if i not in piv]
        assert len(non_piv) == res.rank
        known = tuple(
            known[i - 1] if i <= k else theta + i - k - 1 for i in non_piv
        )
        stats.rounds.append(
            CrpRound(theta, k, ell, sum(int(v) for v in s), res.stats.field_ops)
        )
        stats.field_ops += res.stats.field_ops
        theta += ell
        if theta > m:
            return CrpResult(known, res.rank_profile, stats)


def column_rank_profile(F: PolyMatrix) -> CrpResult:
    """Column rank profile and independent rows of F.

    Rows are scanned in order of nondecreasing row degree, which keeps each
    window's kernel call cheap; the returned row indices refer to F itself.
    The rank profile is invariant under the reordering.
    """
    degs = F.row_degrees()
    perm = sorted(range(F.nrows), key=lambda i: degs[i])
    ordered = F.submatrix(rows=[i + 1 for i in perm])
    res = column_rank_profile_rec(ordered, 1, ())
    original = tuple(sorted(perm[i - 1] + 1 for i in res.independent_rows))
    return CrpResult(original, res.rank_profile, res.stats)


def nonsingular_submatrix(F: PolyMatrix, check: bool = False):
    """Row and column indices (I, J) with F[I, J] nonsingular of full rank.

    With check=True the selection is certified: random evaluation points
    can witness a nonzero determinant cheaply, and if they stay silent the
    rank is recomputed exactly by the oracle.
    """
    res = column_rank_profile(F)
    I, J = res.independent_rows, res.rank_profile
    if check and res.rank:
        sub = F.submatrix(rows=I, cols=J)
        if not _eval_certifies_nonsingular(sub):
            from .oracle import rank_oracle

            assert rank_oracle(sub) == res.rank, "selected submatrix lost rank"
    return I, J


def _eval_certifies_nonsingular(sub: PolyMatrix) -> bool:
    from .polymat import constant_rank

    p = sub.field.p
    degree_cap = sum(d for d in sub.row_degrees() if d != NEG_INF)
    for alpha in range(min(p, degree_cap + 1, 16)):
        point = [[e(alpha) for e in row] for row in sub.rows()]
        if constant_rank(point, p) == sub.nrows:
            return True
    return False
