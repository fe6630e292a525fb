"""Tests for rank-function tables, axioms, duality and lattice identities."""

import numpy as np
import pytest

from qpolycodes.codes import Code
from qpolycodes.families import construct
from qpolycodes.matrices import Matrix
from qpolycodes.polymatroid import (
    QPolymatroid,
    anticode_rank_values,
    lattice_lift_map,
    rank_profile,
    restricted_weights,
    shortening_dims,
)
from qpolycodes.spaces import Ambient
from qpolycodes.util import BudgetError


def naive_shortening_dims(code, lat, side):
    meth = code.shorten_columns if side == "columns" else code.shorten_rows
    return np.array([meth(lat.subspace(i)).dim for i in range(lat.size)])


SMALL_CODES = [
    construct("alt_dg", n=5, q=2, d=2),
    construct("sym_schmidt", n=3, q=3, d=3),
    construct("her_zero_diag", n=2, q=3),
    Code.full(Ambient.full_space(2, 3, 2)),
]


@pytest.mark.parametrize("code", SMALL_CODES, ids=lambda c: repr(c.ambient))
@pytest.mark.parametrize("side", ["columns", "rows"])
def test_shortening_dims_match_naive(code, side):
    amb = code.ambient
    lat = amb.column_lattice() if side == "columns" else amb.row_lattice()
    fast = shortening_dims(code, lat, side=side)
    assert np.array_equal(fast, naive_shortening_dims(code, lat, side))


def test_shortening_dims_rejects_wrong_lattice():
    code = construct("her_zero_diag", n=2, q=3)
    wrong = Ambient.symmetric(2, 3).column_lattice()
    with pytest.raises(ValueError):
        shortening_dims(code, wrong)


def test_zero_code_table():
    amb = Ambient.symmetric(2, 3)
    M = QPolymatroid.from_code_columns(Code.zero(amb))
    assert not M.rho.any()
    # the dual of the zero table is the free table r * dim(U)
    assert np.array_equal(M.dual().rho, M.r * M.lattice.dims)


@pytest.mark.parametrize("code", SMALL_CODES, ids=lambda c: repr(c.ambient))
def test_axioms_hold_for_code_tables(code):
    report = QPolymatroid.from_code_columns(code).check_axioms()
    assert report["r1"] and report["r2"] and report["r3"]
    assert report["r3_mode"] == "exhaustive"


def test_axiom_violations_are_caught():
    lat = Ambient.full_space(2, 1, 2).column_lattice()
    # value 5 on the full space, 0 below: submodularity fails on 1-dim pairs
    rho = np.zeros(lat.size, dtype=np.int64)
    rho[lat.full_index] = 5
    bad = QPolymatroid(lat, rho, 4)
    report = bad.check_axioms()
    assert report["r2"] and not report["r3"]
    assert not QPolymatroid(lat, rho, 2).check_axioms()["r1"]
    rho2 = np.zeros(lat.size, dtype=np.int64)
    rho2[lat.zero_index] = 1
    assert not QPolymatroid(lat, rho2, 4).check_axioms()["r2"]


def test_dual_is_involution_and_matches_trace_dual():
    for code in SMALL_CODES:
        M = QPolymatroid.from_code_columns(code)
        D = M.dual()
        assert D.dual() == M
        assert D == QPolymatroid.from_code_columns(code.delsarte_dual())


def test_row_polymatroid_duality():
    code = Code.full(Ambient.full_space(2, 3, 3))
    gens = code.matrices()[:3]
    code = Code.from_matrices(code.ambient, gens)
    M = QPolymatroid.from_code_rows(code)
    assert M.dual() == QPolymatroid.from_code_rows(code.delsarte_dual())


def test_dual_rejects_invalid_table():
    lat = Ambient.full_space(2, 1, 2).column_lattice()
    rho = np.zeros(lat.size, dtype=np.int64)
    rho[lat.full_index] = 5
    with pytest.raises(ValueError):
        QPolymatroid(lat, rho, 4).dual()


def test_conjugation_swaps_row_and_column_tables():
    code = construct("her_zero_diag", n=2, q=2)
    cols = QPolymatroid.from_code_columns(code)
    rows = QPolymatroid.from_code_rows(code)
    frob = cols.lattice.frobenius_perm(code.ambient.conj_power)
    assert np.array_equal(cols.rho, rows.rho[frob])


def test_rank_profile_matches_table():
    for code in SMALL_CODES[:3]:
        M = QPolymatroid.from_code_columns(code)
        assert rank_profile(code) == M.values_by_dim()


def test_rank_profile_budget():
    amb = Ambient.full_space(25, 1, 2)
    with pytest.raises(BudgetError):
        rank_profile(Code.full(amb))


def test_frozen_alternating_table():
    M = QPolymatroid.from_code_columns(construct("alt_dg", n=5, q=2, d=2))
    assert M.values_by_dim() == {
        0: {0: 1},
        1: {4: 31},
        2: {7: 155},
        3: {9: 155},
        4: {10: 31},
        5: {10: 1},
    }


@pytest.mark.parametrize(
    "amb",
    [Ambient.alternating(3, 2), Ambient.symmetric(3, 3), Ambient.hermitian(2, 2)],
    ids=lambda a: a.kind,
)
def test_anticode_closed_form(amb):
    lat = amb.column_lattice()
    full = Code.full(amb)
    for v_index in range(lat.size):
        xv = full.shorten_columns(lat.subspace(v_index))
        got = QPolymatroid.from_code_columns(xv).rho
        assert np.array_equal(got, anticode_rank_values(amb.kind, lat, v_index))


def test_minimal_scale_of_full_hermitian_space():
    # a 1-dim column support already carries rank 2n - 1, above the
    # ground dimension n, so no integer scale below 2n - 1 satisfies R1
    for q, n in [(2, 3), (3, 2)]:
        M = QPolymatroid.from_code_columns(Code.full(Ambient.hermitian(n, q)))
        assert M.minimal_valid_r() == 2 * n - 1
        assert M.r == 2 * n
        assert not QPolymatroid(M.lattice, M.rho, n).check_axioms()["r1"]


def test_minimal_scale_of_full_symmetric_space():
    M = QPolymatroid.from_code_columns(Code.full(Ambient.symmetric(3, 3)))
    assert M.minimal_valid_r() == 3


def test_minor_values():
    code = construct("sym_schmidt", n=3, q=3, d=3)
    M = QPolymatroid.from_code_columns(code)
    lat = M.lattice
    restr = M.restriction_values(lat.full_index)
    assert len(restr) == lat.size
    assert all(restr[i] == M.rank(i) for i in restr)
    x = int(lat.by_dim[1][0])
    contr = M.contraction_values(x)
    assert contr[x] == 0
    assert contr[lat.full_index] == M.full_rank - M.rank(x)
    assert all(v >= 0 for v in contr.values())
    dele = M.deletion_values(x)
    comp = lat.complement_perm()
    assert set(dele) == set(M.restriction_values(int(comp[x])))
    with pytest.raises(ValueError):
        M.minor_values(lat.full_index, x)


def test_puncturing_matches_deleted_table():
    code = construct("sym_schmidt", n=4, q=2, d=2)
    M = QPolymatroid.from_code_columns(code)
    for u in (1, 2):
        Mp = QPolymatroid.from_code_columns(code.puncture_rows(u))
        lift = lattice_lift_map(Mp.lattice, M.lattice, range(u, code.ambient.m))
        assert np.array_equal(Mp.rho, M.rho[lift])


def test_corner_matches_truncated_table():
    code = construct("sym_schmidt", n=4, q=2, d=2)
    amb = code.ambient
    for u in (1, 2, 3):
        Mk = QPolymatroid.from_code_columns(code.corner_submatrix_code(u))
        trunc_amb = Ambient.full_space(amb.n, u, amb.q, amb.ell)
        tmats = [
            Matrix(amb.entry_field, [list(row[:u]) for row in m.rows])
            for m in code.matrices()
        ]
        Mt = QPolymatroid.from_code_columns(Code.from_matrices(trunc_amb, tmats))
        lift = lattice_lift_map(Mk.lattice, Mt.lattice, range(u))
        assert np.array_equal(Mk.rho, Mt.rho[lift])


def test_lift_map_rejects_bad_positions():
    small = Ambient.full_space(2, 1, 2).column_lattice()
    big = Ambient.full_space(3, 1, 2).column_lattice()
    with pytest.raises(ValueError):
        lattice_lift_map(small, big, [0])


WEIGHTS = [
    ("alt_dg", dict(n=5, q=2, d=2), [1, 3, 3, 6, 6, 6, 10, 10, 10, 10]),
    ("sym_schmidt", dict(n=3, q=3, d=3), [6, 6, 6]),
    ("sym_schmidt", dict(n=4, q=3, d=2), [3, 6, 6, 6, 10, 10, 10, 10]),
    ("her_zero_diag", dict(n=2, q=3), [4, 4]),
]


@pytest.mark.parametrize("name,kwargs,expected", WEIGHTS)
def test_restricted_weight_sequences(name, kwargs, expected):
    code = construct(name, **kwargs)
    got = restricted_weights(code)
    assert got == expected
    assert len(got) == code.dim
    assert all(a <= b for a, b in zip(got, got[1:]))


def test_first_weight_meets_lower_bound():
    # the least support dimension of a d-code is at least the value of
    # the full shortening at a d-dimensional subspace
    cases = [
        (construct("alt_dg", n=5, q=2, d=2), 1),
        (construct("sym_schmidt", n=3, q=3, d=3), 6),
        (construct("her_zero_diag", n=2, q=3), 4),
    ]
    for code, bound in cases:
        assert restricted_weights(code)[0] >= bound
