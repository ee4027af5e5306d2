import random

import pytest

from polyrank import GF, PolyMatrix, approximant_basis, approximant_basis_dac
from polyrank.order_basis import DAC_CROSSOVER
from conftest import random_matrix


def _gf_rank(rows, p):
    # self-contained elimination, kept independent of the library routines
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col] % p, -1, p)
        for i in range(rank + 1, len(mat)):
            c = mat[i][col] % p
            if c:
                fac = c * inv % p
                mat[i] = [(x - fac * y) % p for x, y in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def brute_force_module_index(F, order):
    """dim of GF(p)[x]^m modulo the relations of F at the given order.

    Builds the truncated multiplication map on row vectors with entries of
    degree at most `order` (a degree bound that covers a minimal basis,
    since x**order times any unit vector is a relation) and converts its
    nullity into the index.
    """
    m, n, p = F.nrows, F.ncols, F.field.p
    rows = []
    for i in range(m):
        for e in range(order + 1):
            line = []
            for j in range(n):
                c = F.entry(i + 1, j + 1).mul_x_pow(e).truncate(order).coeffs
                line.extend(list(c) + [0] * (order - len(c)))
            rows.append(line)
    nullity = len(rows) - _gf_rank(rows, p)
    return m * (order + 1) - nullity


def test_validation():
    F = PolyMatrix.identity(GF(2), 2)
    with pytest.raises(ValueError):
        approximant_basis(F, 0, (0, 0))
    with pytest.raises(ValueError):
        approximant_basis(F, 2, (0,))
    with pytest.raises(ValueError):
        approximant_basis(F, 2, (0, 1.5))


def test_zero_and_empty_inputs():
    f = GF(3)
    z = PolyMatrix.zeros(f, 3, 2)
    res = approximant_basis(z, 4, (1, 0, 2))
    assert res.basis == PolyMatrix.identity(f, 3)
    empty = PolyMatrix(f, [], ncols=2)
    res = approximant_basis(empty, 2, ())
    assert res.basis.nrows == 0


def test_single_column_toy():
    # F = (1, x) over GF(2) at order 2: the canonical basis has pivot
    # profile ((1, 1), (2, 1)), matching module index 2
    f = GF(2)
    F = PolyMatrix(f, [[[1]], [[0, 1]]])
    res = approximant_basis(F, 2, (0, 0))
    assert res.basis.pivot_profile((0, 0)) == ((1, 1), (2, 1))
    assert (res.basis @ F).truncate(2).is_zero()
    assert res.basis == PolyMatrix(f, [[[0, 1], [1]], [[], [0, 1]]])
    assert brute_force_module_index(F, 2) == 2


def test_against_brute_force_oracle():
    rng = random.Random(31)
    for p in (2, 3, 97):
        f = GF(p)
        for _ in range(40):
            m = rng.randrange(1, 6)
            n = rng.randrange(1, 4)
            tau = rng.randrange(1, 7)
            F = random_matrix(rng, f, m, n, 5)
            s = tuple(rng.randrange(0, 6) for _ in range(m))
            res = approximant_basis(F, tau, s)
            A = res.basis
            assert A.is_ordered_weak_popov(s)
            assert (A @ F).truncate(tau).is_zero()
            degdet = sum(d for _, d in A.pivot_profile(s))
            assert degdet == brute_force_module_index(F, tau)


def test_negative_shift_entries_supported():
    rng = random.Random(32)
    f = GF(3)
    for _ in range(30):
        m, n, tau = rng.randrange(1, 5), rng.randrange(1, 3), rng.randrange(1, 6)
        F = random_matrix(rng, f, m, n, 4)
        s = tuple(rng.randrange(-4, 5) for _ in range(m))
        res = approximant_basis(F, tau, s)
        assert res.basis.is_ordered_weak_popov(s)
        assert (res.basis @ F).truncate(tau).is_zero()
        assert sum(d for _, d in res.basis.pivot_profile(s)) == brute_force_module_index(F, tau)


def test_dac_matches_iterative_profile():
    rng = random.Random(33)
    for p in (2, 97):
        f = GF(p)
        for _ in range(30):
            m = rng.randrange(1, 5)
            n = rng.randrange(1, 3)
            tau = rng.randrange(1, 40)  # both sides of the crossover
            F = random_matrix(rng, f, m, n, 5)
            s = tuple(rng.randrange(0, 4) for _ in range(m))
            it = approximant_basis(F, tau, s)
            dc = approximant_basis_dac(F, tau, s)
            assert dc.basis.is_ordered_weak_popov(s)
            assert (dc.basis @ F).truncate(tau).is_zero()
            assert dc.basis.pivot_profile(s) == it.basis.pivot_profile(s)


def test_dac_actually_splits():
    assert DAC_CROSSOVER == 16
    f = GF(2)
    F = PolyMatrix(f, [[[1]], [[0, 1]]])
    res = approximant_basis_dac(F, 40, (0, 0))
    assert res.order == 40
    assert (res.basis @ F).truncate(40).is_zero()


def test_basis_degree_bounded_by_order():
    rng = random.Random(34)
    f = GF(2)
    for _ in range(20):
        F = random_matrix(rng, f, 3, 2, 4)
        tau = rng.randrange(1, 8)
        res = approximant_basis(F, tau, (0, 0, 0))
        for row in res.basis.rows():
            for e in row:
                assert e.degree() <= tau or e.is_zero()
