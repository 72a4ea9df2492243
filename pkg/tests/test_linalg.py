import random

from bfunc.linalg import nullspace
from bfunc.rationals import rat

from conftest import fraction_rank


def test_single_nonzero_vector():
    assert nullspace([[rat(1), rat(2), rat(3)]], 3) != []
    assert nullspace([[rat(5)]], 1) == []


def test_zero_matrix():
    basis = nullspace([[rat(0), rat(0)]], 2)
    assert len(basis) == 2


def test_known_kernel():
    # x + y = 0, y + z = 0  ->  kernel spanned by (1, -1, 1)
    rows = [[rat(1), rat(1), rat(0)], [rat(0), rat(1), rat(1)]]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    assert [v[0] / v[2], v[1] / v[2], v[2] / v[2]] == [rat(1), rat(-1), rat(1)]


def test_nullspace_properties_random():
    rng = random.Random(41)
    for _ in range(200):
        nrows, ncols = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[rat(rng.randint(-3, 3), rng.randint(1, 2))
                 for _ in range(ncols)] for _ in range(nrows)]
        basis = nullspace(rows, ncols)
        # every basis vector is annihilated by every row
        for v in basis:
            for row in rows:
                assert sum((c * x for c, x in zip(row, v)),
                           start=rat(0)) == 0
        # dimension matches rank-nullity against an independent elimination
        assert len(basis) == ncols - fraction_rank(rows)
        # basis vectors are linearly independent (stacked rank check)
        if basis:
            assert fraction_rank([list(v) for v in basis]) == len(basis)
