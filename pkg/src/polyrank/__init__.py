"""Exact linear algebra for univariate polynomial matrices over GF(p).

The fast side computes shifted weak Popov kernel bases together with
column rank profiles, and a rank-sensitive column-rank-profile scan built
on top of them. The oracle side re-derives the same answers by classical
row reduction, so results can be cross-checked instance by instance.
"""

from .crp import CrpResult, column_rank_profile, column_rank_profile_rec, nonsingular_submatrix
from .gf import GF, NEG_INF, ExactDivisionError, Poly, is_prime, poly_gcd
from .kernel_rank import (
    KernelRankResult,
    ShiftError,
    kernel_basis_rank_profile,
    kernel_split_columns,
    kernel_via_relations,
)
from .order_basis import OrderBasisResult, approximant_basis, approximant_basis_dac
from .polymat import PolyMatrix, constant_rank, matmul_cost

__all__ = [
    "GF",
    "NEG_INF",
    "ExactDivisionError",
    "Poly",
    "is_prime",
    "poly_gcd",
    "PolyMatrix",
    "constant_rank",
    "matmul_cost",
    "OrderBasisResult",
    "approximant_basis",
    "approximant_basis_dac",
    "KernelRankResult",
    "ShiftError",
    "kernel_basis_rank_profile",
    "kernel_split_columns",
    "kernel_via_relations",
    "CrpResult",
    "column_rank_profile",
    "column_rank_profile_rec",
    "nonsingular_submatrix",
]
