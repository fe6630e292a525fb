"""Dense matrix arithmetic and echelon forms over finite fields."""

import random

import pytest

from qpolycodes.fields import finite_field
from qpolycodes.matrices import Matrix


def naive_mul(field, a, b):
    rows = []
    for i in range(a.m):
        row = []
        for j in range(b.n):
            acc = 0
            for t in range(a.n):
                acc = field.add(acc, field.mul(a.rows[i][t], b.rows[t][j]))
            row.append(acc)
        rows.append(row)
    return Matrix(field, rows)


def random_matrix(field, m, n, rng):
    return Matrix(field, [[rng.randrange(field.order) for _ in range(n)] for _ in range(m)])


def test_rref_all_ones_gf2():
    f2 = finite_field(2, 1)
    mat = Matrix(f2, [[1, 1], [1, 1]])
    red, pivots = mat.rref()
    assert red.rows == ((1, 1), (0, 0))
    assert pivots == (0,)
    assert mat.rank() == 1


def test_kernel_of_sum_functional():
    f2 = finite_field(2, 1)
    mat = Matrix(f2, [[1, 1]])
    assert mat.kernel_basis() == ((1, 1),)


def test_identity_and_zero():
    f3 = finite_field(3, 1)
    ident = Matrix.identity(f3, 3)
    zero = Matrix.zero(f3, 3, 3)
    assert ident.rank() == 3
    assert zero.is_zero()
    assert (ident @ ident) == ident
    assert ident + zero == ident


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_matmul_matches_schoolbook(p, k):
    field = finite_field(p, k)
    rng = random.Random(20 * p + k)
    for _ in range(25):
        a = random_matrix(field, 3, 4, rng)
        b = random_matrix(field, 4, 2, rng)
        assert (a @ b) == naive_mul(field, a, b)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2)])
def test_rref_properties(p, k):
    field = finite_field(p, k)
    rng = random.Random(77 * p + k)
    for _ in range(40):
        m, n = rng.randrange(1, 5), rng.randrange(1, 6)
        mat = random_matrix(field, m, n, rng)
        red, pivots = mat.rref()
        assert red.rref()[0] == red
        assert len(pivots) == mat.rank()
        for r, c in enumerate(pivots):
            assert red.rows[r][c] == 1
            for rr in range(m):
                if rr != r:
                    assert red.rows[rr][c] == 0
        # row spaces agree: each original row reduces to zero against red
        stack = Matrix(field, list(red.rows) + list(mat.rows))
        assert stack.rank() == mat.rank()


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (3, 2)])
def test_kernel_is_right_kernel(p, k):
    field = finite_field(p, k)
    rng = random.Random(5 * p + k)
    for _ in range(30):
        m, n = rng.randrange(1, 4), rng.randrange(1, 6)
        mat = random_matrix(field, m, n, rng)
        kern = mat.kernel_basis()
        assert len(kern) == n - mat.rank()
        for vec in kern:
            col = Matrix(field, [[x] for x in vec])
            assert (mat @ col).is_zero()


def test_conj_transpose_hermitian_fixed_point():
    f4 = finite_field(2, 2)
    gen = 2
    conj_gen = f4.frobenius(gen, 1)
    mat = Matrix(f4, [[1, gen], [conj_gen, 0]])
    assert mat.conj_transpose(1) == mat


def test_rank_additivity_block_diag():
    f2 = finite_field(2, 1)
    a = Matrix(f2, [[1, 0], [0, 1]])
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]
    assert Matrix(f2, rows).rank() == 3
    assert a.transpose() == a
