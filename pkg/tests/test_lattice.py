"""Subspace lattice enumeration, duals, joins, meets and covers."""

import numpy as np
import pytest

from qpolycodes.fields import finite_field
from qpolycodes.lattice import Lattice, Subspace, gaussian_binomial, lattice
from qpolycodes.util import BudgetError


def test_gaussian_binomial_small_values():
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 4) == 21
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(5, 5, 3) == 1
    assert gaussian_binomial(2, 1, 9) == 10
    assert gaussian_binomial(3, 4, 2) == 0


@pytest.mark.parametrize("q,k,n", [(2, 1, 4), (3, 1, 3), (2, 2, 3), (3, 2, 2)])
def test_lattice_counts_by_dimension(q, k, n):
    field = finite_field(q, k)
    lat = Lattice(field, n)
    for d in range(n + 1):
        assert len(lat.by_dim[d]) == gaussian_binomial(n, d, field.order)
    assert lat.size == sum(gaussian_binomial(n, d, field.order) for d in range(n + 1))


def test_lattice_cache_and_budget():
    field = finite_field(2, 1)
    assert lattice(field, 3) is lattice(field, 3)
    huge = finite_field(2, 4)
    with pytest.raises(BudgetError):
        Lattice(huge, 8)


def test_complement_is_involution_and_reverses_dim():
    field = finite_field(3, 1)
    lat = Lattice(field, 3)
    perm = lat.complement_perm()
    assert np.array_equal(perm[perm], np.arange(lat.size))
    assert np.array_equal(lat.dims[perm], lat.n - lat.dims)


def test_join_meet_against_subspace_ops():
    field = finite_field(2, 1)
    lat = Lattice(field, 4)
    rng = np.random.default_rng(9)
    left = rng.integers(0, lat.size, size=80)
    right = rng.integers(0, lat.size, size=80)
    joins = lat.join_indices(left, right)
    meets = lat.meet_indices(left, right)
    for i, j, s, m in zip(left, right, joins, meets):
        u, v = lat.subspace(int(i)), lat.subspace(int(j))
        assert lat.subspace(int(s)) == u.sum(v)
        assert lat.subspace(int(m)) == u.meet(v)
        # modular dimension identity
        assert u.dim + v.dim == lat.dims[s] + lat.dims[m]


def test_meet_agrees_with_vector_intersection():
    field = finite_field(2, 1)
    lat = Lattice(field, 3)
    for i in lat.by_dim[2]:
        for j in lat.by_dim[2]:
            m = lat.meet_indices(np.array([i]), np.array([j]))[0]
            u, v = lat.subspace(int(i)), lat.subspace(int(j))
            common = set(u.vectors()) & set(v.vectors())
            got = set(lat.subspace(int(m)).vectors())
            assert got == common


def test_covers_structure():
    field = finite_field(2, 1)
    lat = Lattice(field, 3)
    child, parent = lat.covers()
    assert np.array_equal(lat.dims[parent], lat.dims[child] + 1)
    # each d-space has (q^d - 1)/(q - 1) hyperplanes
    for d in range(1, 4):
        expect = (2 ** d - 1) // (2 - 1)
        for v in lat.by_dim[d]:
            assert int((parent == v).sum()) == expect
    for c, p in zip(child.tolist(), parent.tolist()):
        assert lat.subspace(p).contains(lat.subspace(c))
    total = sum(
        gaussian_binomial(3, d, 2) * (2 ** d - 1) for d in range(1, 4)
    )
    assert len(child) == total


def test_subspace_membership_and_vectors():
    field = finite_field(3, 1)
    sub = Subspace(field, 3, [[1, 0, 2], [0, 1, 1]])
    assert sub.dim == 2
    vecs = sub.vectors()
    assert len(vecs) == 9
    assert len(set(vecs)) == 9
    for v in vecs:
        assert sub.contains_vector(v)
    assert not sub.contains_vector((0, 0, 1))
    zero = Subspace.zero(field, 3)
    assert zero.dim == 0
    assert zero.vectors() == [(0, 0, 0)]
    assert sub.contains(zero)


def test_frobenius_perm_on_extension_field():
    field = finite_field(2, 2)
    lat = Lattice(field, 2)
    perm = lat.frobenius_perm(1)
    assert np.array_equal(perm[perm], np.arange(lat.size))
    assert np.array_equal(lat.dims[perm], lat.dims)
    # the F_2-rational line (1, 1) is fixed, the line (1, w) is not
    fixed = lat.index_of_rows([[1, 1]])
    moved = lat.index_of_rows([[1, 2]])
    assert perm[fixed] == fixed
    assert perm[moved] != moved


def test_index_roundtrip():
    field = finite_field(2, 1)
    lat = Lattice(field, 4)
    for i in range(lat.size):
        assert lat.index_of(lat.subspace(i)) == i
