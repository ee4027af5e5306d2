import random

import pytest

from polyrank import (
    GF,
    PolyMatrix,
    ShiftError,
    kernel_basis_rank_profile,
    kernel_split_columns,
    kernel_via_relations,
)
from polyrank.oracle import (
    InstanceSpec,
    crp_oracle,
    kernel_oracle,
    minors_gcd_is_one,
    ms_weak_popov,
    random_instance,
    rank_oracle,
)
from conftest import auto_shift, random_matrix

F2 = GF(2)


def test_zero_matrix_gives_identity():
    res = kernel_basis_rank_profile(PolyMatrix.zeros(GF(3), 3, 4), (0, 0, 0))
    assert res.kernel == PolyMatrix.identity(GF(3), 3)
    assert res.rank_profile == ()
    assert res.rank == 0


def test_empty_shapes():
    res = kernel_basis_rank_profile(PolyMatrix(F2, [], ncols=3), ())
    assert res.kernel.nrows == 0
    assert res.rank_profile == ()
    res = kernel_basis_rank_profile(PolyMatrix.zeros(F2, 2, 0), (0, 0))
    assert res.kernel == PolyMatrix.identity(F2, 2)


def test_single_row():
    F = PolyMatrix(F2, [[[0, 1], [], [1, 1]]])  # (x, 0, x+1)
    res = kernel_basis_rank_profile(F, (1,))
    assert res.kernel.nrows == 0
    assert res.kernel.ncols == 1
    assert res.rank_profile == (1,)
    # first nonzero column wins even when a later one has lower degree
    F = PolyMatrix(F2, [[[], [0, 1], [1]]])
    assert kernel_basis_rank_profile(F, (1,)).rank_profile == (2,)


def test_stacked_duplicate_column():
    F = PolyMatrix(F2, [[[0, 1]], [[0, 1]]])  # (x, x)^T
    res = kernel_basis_rank_profile(F, (1, 1))
    assert res.rank_profile == (1,)
    assert res.kernel == PolyMatrix(F2, [[[1], [1]]])


def test_shift_preconditions(paper_f):
    s = paper_f.row_degrees()
    with pytest.raises(ShiftError):
        kernel_basis_rank_profile(paper_f, (0, 0, 0, 0, 0))
    with pytest.raises(ShiftError):
        kernel_basis_rank_profile(paper_f, (7,) + s[1:])  # one below rdeg
    with pytest.raises(ValueError):
        kernel_basis_rank_profile(paper_f, s[:-1])
    with pytest.raises(ValueError):
        kernel_basis_rank_profile(paper_f, (-1,) + s[1:])
    # slack above the row degrees is allowed
    res = kernel_basis_rank_profile(paper_f, tuple(v + 3 for v in s))
    assert res.rank == 3


def test_paper_example_full(paper_f):
    s = paper_f.row_degrees()
    res = kernel_basis_rank_profile(paper_f, s)
    assert res.rank == 3
    assert res.rank_profile == (1, 2, 3)
    expected = PolyMatrix(F2, [
        [[], [0, 0, 0, 1], [0, 0, 0, 1, 0, 1], [1], [1, 0, 0, 1]],
        [[], [1], [1, 0, 1], [], [1, 1]],
    ])
    assert res.kernel == expected
    assert res.kernel.pivot_profile(s) == ((4, 0), (5, 1))
    assert sum(res.kernel.row_degrees(s)) == 13 <= sum(s)
    assert (res.kernel @ paper_f).is_zero()
    assert res.kernel.is_ordered_weak_popov(s)


def test_paper_example_intermediates(paper_f):
    # left half: 5x2, handled by the relation path at order 18
    s = paper_f.row_degrees()
    left = paper_f.submatrix(cols=(1, 2))
    r1 = kernel_basis_rank_profile(left, s)
    assert r1.rank_profile == (1, 2)
    assert r1.stats.relation_steps[0].order == 18
    k1_expected = PolyMatrix(F2, [
        [[], [1], [1, 0, 1], [], []],
        [[], [], [], [1], []],
        [[], [], [], [], [1]],
    ])
    assert r1.kernel == k1_expected
    assert r1.kernel.row_degrees(s) == (5, 8, 4)

    # residual against the right half, then the second kernel
    right = paper_f.submatrix(cols=(3, 4, 5))
    f2 = r1.kernel @ right
    f2_expected = PolyMatrix(F2, [
        [[1, 1, 0, 0, 1, 1], [1, 1], []],
        [[1, 0, 0, 0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 1], []],
        [[1, 0, 0, 0, 1], [1], []],
    ])
    assert f2 == f2_expected
    r2 = kernel_basis_rank_profile(f2, (5, 8, 4))
    k2_expected = PolyMatrix(F2, [
        [[0, 0, 0, 1], [1], [1, 0, 0, 1]],
        [[1], [], [1, 1]],
    ])
    assert r2.kernel == k2_expected
    assert r2.rank_profile == (1,)
    full = kernel_basis_rank_profile(paper_f, s)
    assert r2.kernel @ r1.kernel == full.kernel


def test_unshifted_profile_via_oracle(paper_f):
    # the 0-shifted canonical kernel profile, obtained independently
    k = kernel_oracle(paper_f)
    reduced = ms_weak_popov(k).reduced
    prof = sorted(e for e in reduced.pivot_profile() if e is not None)
    assert prof == [(3, 2), (5, 4)]


def test_internal_paths_validate():
    F = PolyMatrix(F2, [[[1], [1]], [[1], [1]]])  # 2x2: neither path applies alone
    with pytest.raises(ValueError):
        kernel_via_relations(F, (0, 0))
    ok = kernel_split_columns(F, (0, 0))
    assert ok.rank_profile == (1,)
    tall = PolyMatrix(F2, [[[1]], [[1]], [[1]]])
    with pytest.raises(ValueError):
        kernel_split_columns(tall, (0, 0, 0))
    ok = kernel_via_relations(tall, (0, 0, 0))
    assert ok.rank_profile == (1,)
    assert ok.kernel.nrows == 2
    with pytest.raises(ValueError):
        kernel_via_relations(PolyMatrix.zeros(F2, 4, 1), (0, 0, 0, 0))


def test_zero_rows_with_slack_shift():
    # zero rows force negative entries in the internal relation shift; the
    # order clamp keeps the computation well posed
    F = PolyMatrix(F2, [[[0, 1]], [[]], [[]], [[]]])
    res = kernel_basis_rank_profile(F, (5, 0, 0, 0))
    assert res.rank == 1
    assert res.kernel.nrows == 3
    assert (res.kernel @ F).is_zero()
    assert res.kernel.is_ordered_weak_popov((5, 0, 0, 0))


def test_agreement_with_oracle_random():
    rng = random.Random(55)
    for p in (2, 3, 97):
        for trial in range(40):
            m = rng.randrange(1, 9)
            n = rng.randrange(1, 9)
            r = rng.randrange(0, min(m, n) + 1)
            inst = random_instance(
                InstanceSpec(m, n, r, rng.randrange(0, 4), p, seed=9000 * p + trial)
            )
            s = auto_shift(inst)
            res = kernel_basis_rank_profile(inst, s)
            assert res.rank == r == rank_oracle(inst)
            assert res.rank_profile == crp_oracle(inst)
            assert res.kernel.nrows == m - r
            assert (res.kernel @ inst).is_zero()
            if res.kernel.nrows:
                assert res.kernel.is_ordered_weak_popov(s)


def test_canonical_pivot_profile_vs_oracle():
    # any valid s-weak Popov kernel basis has the same pivot profile; the
    # oracle's basis, reduced under the same shift, must agree
    rng = random.Random(56)
    for p in (2, 97):
        for trial in range(25):
            m = rng.randrange(2, 8)
            n = rng.randrange(1, 8)
            r = rng.randrange(0, min(m, n) + 1)
            inst = random_instance(
                InstanceSpec(m, n, r, rng.randrange(0, 4), p, seed=11000 * p + trial)
            )
            s = auto_shift(inst)
            fast = kernel_basis_rank_profile(inst, s)
            slow = ms_weak_popov(kernel_oracle(inst), s).reduced
            slow_profile = sorted(e for e in slow.pivot_profile(s) if e is not None)
            assert list(fast.kernel.pivot_profile(s)) == slow_profile


def test_sum_of_shifted_degrees_bound():
    rng = random.Random(57)
    for trial in range(50):
        p = rng.choice([2, 3, 97])
        m, n = rng.randrange(1, 8), rng.randrange(1, 8)
        inst = random_instance(
            InstanceSpec(m, n, rng.randrange(0, min(m, n) + 1), rng.randrange(0, 4), p, seed=trial)
        )
        s = tuple(v + rng.randrange(0, 3) for v in auto_shift(inst))
        res = kernel_basis_rank_profile(inst, s)
        assert sum(d for d in res.kernel.row_degrees(s)) <= sum(s)


def test_kernel_saturation_minors():
    rng = random.Random(58)
    checked = 0
    for p in (2, 3, 97):
        for trial in range(20):
            m = rng.randrange(1, 9)
            n = rng.randrange(1, 9)
            r = rng.randrange(max(0, m - 4), min(m, n) + 1)
            inst = random_instance(
                InstanceSpec(m, n, r, rng.randrange(0, 3), p, seed=13000 * p + trial)
            )
            res = kernel_basis_rank_profile(inst, auto_shift(inst))
            if res.kernel.nrows <= 4 and m <= 12:
                assert minors_gcd_is_one(res.kernel)
                checked += 1
    assert checked >= 30


def test_instrumentation_present(paper_f):
    res = kernel_basis_rank_profile(paper_f, paper_f.row_degrees())
    assert res.stats.field_ops > 0
    assert res.stats.max_depth >= 1
    for step in res.stats.relation_steps:
        assert step.rows_residual_pre <= -(-3 * step.nrows // 4)
        assert step.rank >= 0
        assert step.rows_residual <= step.rank + (step.nrows - step.ncols) // 2
