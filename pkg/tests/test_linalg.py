import random

from sectionring.linalg import (FpMatrix, echelon_coords, kernel_rows,
                                mat_solve, rref_rows)


def test_identity_full_rank():
    m = FpMatrix.identity(101, 6)
    rank, kernel, red = mat_solve(m)
    assert rank == 6
    assert kernel == []
    assert red == m


def test_zero_matrix():
    m = FpMatrix.zeros(101, 5, 5)
    rank, kernel, _ = mat_solve(m)
    assert rank == 0
    assert len(kernel) == 5


def test_rank_nullity_random():
    p = 101
    rng = random.Random(42)
    for _ in range(20):
        rows = [[rng.randrange(p) for _ in range(14)] for _ in range(10)]
        m = FpMatrix(p, rows)
        rank, kernel, red = mat_solve(m)
        assert rank + len(kernel) == 14
        for v in kernel:
            assert all(c == 0 for c in m.mul_vec(v))
        # rank equals number of nonzero rows of the rref
        assert rank == sum(1 for r in red.rows if any(r))


def test_rref_is_canonical():
    p = 11
    rows_a = [[1, 2, 3], [4, 5, 6], [5, 7, 9]]
    rows_b = [[5, 7, 9], [1, 2, 3], [9, 1, 4]]  # different spanning set
    ra = rref_rows(p, rows_a)
    # same space spanned two ways gives the identical rref
    span_b = [rows_a[0], [(2 * x) % p for x in rows_a[1]],
              [(x + y) % p for x, y in zip(rows_a[0], rows_a[1])]]
    rb = rref_rows(p, span_b)
    assert ra[1] == rb[1] and ra[2] == rb[2]


def test_kernel_rref_normalized():
    p = 101
    rng = random.Random(1)
    rows = [[rng.randrange(p) for _ in range(9)] for _ in range(4)]
    ker = kernel_rows(p, rows, 9)
    rank, pivots, red = rref_rows(p, ker)
    assert rank == len(ker)
    assert red == ker  # already reduced


def test_echelon_coords_roundtrip():
    p = 101
    rng = random.Random(2)
    rows = [[rng.randrange(p) for _ in range(8)] for _ in range(3)]
    rank, pivots, basis = rref_rows(p, rows)
    coefs = [3, 7, 11][:rank]
    vec = [0] * 8
    for c, row in zip(coefs, basis):
        vec = [(x + c * y) % p for x, y in zip(vec, row)]
    assert echelon_coords(p, pivots, basis, vec) == coefs
    vec[0] = (vec[0] + 1) % p
    outside = echelon_coords(p, pivots, basis, vec)
    # perturbed vector is (almost surely) outside the span
    assert outside is None or outside != coefs


def test_det():
    p = 13
    m = FpMatrix(p, [[2, 0], [0, 3]])
    assert m.det() == 6
    singular = FpMatrix(p, [[1, 2], [2, 4]])
    assert singular.det() == 0
    swap = FpMatrix(p, [[0, 1], [1, 0]])
    assert swap.det() == p - 1


def test_matmul_transpose():
    p = 7
    a = FpMatrix(p, [[1, 2], [3, 4], [5, 6]])
    b = FpMatrix(p, [[1, 0, 1], [0, 1, 1]])
    ab = a * b
    assert ab.rows == [[1, 2, 3], [3, 4, 0], [5, 6, 4]]
    assert a.transpose().rows == [[1, 3, 5], [2, 4, 6]]
