"""Batched numpy kernels agree with the scalar matrix path."""

import random

import numpy as np
import pytest

from qpolycodes.fields import finite_field
from qpolycodes.gfbatch import (
    batch_matmul_mod_p,
    batch_rank,
    batch_rref,
    coefficient_block,
    field_tables,
    rref_keys,
)
from qpolycodes.matrices import Matrix


def random_stack(field, batch, m, n, rng):
    arr = np.array(
        [[[rng.randrange(field.order) for _ in range(n)] for _ in range(m)] for _ in range(batch)],
        dtype=np.uint8,
    )
    return arr


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_batch_rank_matches_scalar(p, k):
    field = finite_field(p, k)
    rng = random.Random(100 * p + k)
    stack = random_stack(field, 60, 4, 5, rng)
    expected = np.array([Matrix(field, s.tolist()).rank() for s in stack])
    got = batch_rank(stack.copy(), field)
    assert np.array_equal(got, expected)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2)])
def test_batch_rref_matches_scalar(p, k):
    field = finite_field(p, k)
    rng = random.Random(7 * p + k)
    stack = random_stack(field, 40, 3, 6, rng)
    work = stack.copy()
    ranks = batch_rref(work, field)
    for i in range(stack.shape[0]):
        red, _ = Matrix(field, stack[i].tolist()).rref()
        assert work[i].tolist() == [list(r) for r in red.rows]
        assert int(ranks[i]) == red.rank()


def test_rref_keys_identify_row_spaces():
    field = finite_field(2, 1)
    rng = random.Random(3)
    # two stacks with the same row spaces in scrambled order
    base = random_stack(field, 30, 3, 5, rng)
    scrambled = base[:, ::-1, :].copy()
    r1 = batch_rref(base, field)
    r2 = batch_rref(scrambled, field)
    assert rref_keys(base, r1) == rref_keys(scrambled, r2)


def test_coefficient_block_enumerates_all_tuples():
    got = coefficient_block(3, 2, 0, 9)
    rows = {tuple(r) for r in got.tolist()}
    assert rows == {(a, b) for a in range(3) for b in range(3)}
    assert got[5].tolist() == [2, 1]  # 5 = 2 + 1*3
    lo_half = coefficient_block(3, 2, 0, 4)
    hi_half = coefficient_block(3, 2, 4, 9)
    assert np.array_equal(np.vstack([lo_half, hi_half]), got)


def test_batch_matmul_mod_p_exact():
    rng = random.Random(11)
    coeffs = np.array([[rng.randrange(3) for _ in range(6)] for _ in range(50)], dtype=np.uint8)
    gens = np.array([[rng.randrange(3) for _ in range(7)] for _ in range(6)], dtype=np.uint8)
    got = batch_matmul_mod_p(coeffs, gens, 3)
    want = (coeffs.astype(np.int64) @ gens.astype(np.int64)) % 3
    assert np.array_equal(got, want.astype(np.uint8))


def test_field_tables_cached_and_correct():
    f9 = finite_field(3, 2)
    tab = field_tables(f9)
    assert tab is field_tables(f9)
    for a in range(9):
        for b in range(9):
            assert int(tab.add[a, b]) == f9.add(a, b)
            assert int(tab.mul[a, b]) == f9.mul(a, b)
    for a in range(1, 9):
        assert f9.mul(a, int(tab.inv[a])) == 1


def test_batch_rank_handles_tall_and_wide():
    field = finite_field(2, 1)
    tall = np.zeros((5, 6, 2), dtype=np.uint8)
    tall[:, 0, 0] = 1
    tall[:, 3, 1] = 1
    assert batch_rank(tall.copy(), field).tolist() == [2] * 5
    wide = np.ones((4, 1, 8), dtype=np.uint8)
    assert batch_rank(wide, field).tolist() == [1] * 4
