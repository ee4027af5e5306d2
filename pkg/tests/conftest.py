import random

import pytest

from polyrank import GF, NEG_INF, Poly, PolyMatrix

# the 5x5 worked example over GF(2) used across the suite; row degrees
# (8, 5, 2, 8, 4), rank 3, column rank profile (1, 2, 3)
PAPER_ROWS = [
    [[0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 1, 1, 0, 1, 0, 1], [1, 0, 0, 0, 1], [1, 0, 0, 1]],
    [[], [1, 0, 0, 0, 1], [0, 0, 1, 1, 1, 1], [1, 1], [1, 0, 1]],
    [[], [1, 0, 1], [1, 1], [], [1]],
    [[], [], [1, 0, 0, 0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 1], []],
    [[], [], [1, 0, 0, 0, 1], [1], []],
]


@pytest.fixture
def paper_f():
    return PolyMatrix(GF(2), PAPER_ROWS)


def auto_shift(F):
    """Row degrees with zero rows clamped to 0: the minimal valid shift."""
    return tuple(0 if d == NEG_INF else int(d) for d in F.row_degrees())


def random_matrix(rng, field, nrows, ncols, max_len):
    """Uniform dense matrix; entries have up to max_len coefficients."""
    return PolyMatrix(
        field,
        [
            [[rng.randrange(field.p) for _ in range(rng.randrange(max_len + 1))] for _ in range(ncols)]
            for _ in range(nrows)
        ],
        ncols=ncols,
    )


def random_ordered_weak_popov(rng, field, shift, nrows, max_pivot_deg=4):
    """Random ordered weak Popov matrix under the given shift.

    Pivot entries get exact random degrees; all other entries stay strictly
    below the pivot's shifted degree, so the pivot profile is forced.
    """
    n = len(shift)
    assert nrows <= n
    pivots = sorted(rng.sample(range(n), nrows))
    rows = []
    for pj in pivots:
        delta = rng.randrange(max_pivot_deg + 1)
        cap = delta + shift[pj]
        row = []
        for j in range(n):
            if j == pj:
                coeffs = [rng.randrange(field.p) for _ in range(delta)]
                coeffs.append(rng.randrange(1, field.p))
                row.append(Poly(field, coeffs))
            else:
                room = cap - shift[j]  # entry degree must stay below this
                if room <= 0:
                    row.append(Poly.zero(field))
                else:
                    row.append(
                        Poly(field, [rng.randrange(field.p) for _ in range(rng.randrange(room + 1))])
                    )
        rows.append(row)
    return PolyMatrix(field, rows, ncols=n)
