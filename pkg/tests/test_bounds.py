"""Dimension bounds, dual-distance bounds, attainment on known families."""

from fractions import Fraction

import pytest

from qpolycodes.bounds import (
    alternating_bound,
    dimension_bound,
    dual_distance_bound,
    first_weight_lower_bound,
    hermitian_bound,
    is_maximum,
    maximum_code_dual_distance,
    singleton_bound,
    symmetric_bound,
)
from qpolycodes.families import construct
from qpolycodes.spaces import ALT, HER, SYM
from qpolycodes.util import ParamError


def test_singleton_values():
    assert singleton_bound(3, 3, 1) == 9
    assert singleton_bound(3, 3, 3) == 3
    assert singleton_bound(2, 5, 2) == 5
    assert singleton_bound(5, 2, 2) == 5


def test_alternating_values():
    assert alternating_bound(5, 2) == 10
    assert alternating_bound(5, 4) == 5
    assert alternating_bound(4, 4) == 3
    # fractional case: n even can give a non-integer bound
    assert alternating_bound(6, 4) == Fraction(15, 3) * 2
    assert alternating_bound(4, 2) == Fraction(6, 2) * 2


def test_symmetric_values():
    # odd distance
    assert symmetric_bound(5, 3) == 10
    assert symmetric_bound(4, 3) == 5
    assert symmetric_bound(5, 5) == 5
    # even distance
    assert symmetric_bound(4, 2) == 8
    assert symmetric_bound(5, 2) == 12
    assert symmetric_bound(6, 4) == 12
    assert symmetric_bound(4, 4) == 4


def test_hermitian_values():
    assert hermitian_bound(3, 2) == 6
    assert hermitian_bound(3, 3) == 3
    assert hermitian_bound(2, 2) == 2
    assert hermitian_bound(5, 2) == 20


def test_dispatch_matches_direct():
    assert dimension_bound(ALT, 5, 2) == alternating_bound(5, 2)
    assert dimension_bound(SYM, 4, 2) == symmetric_bound(4, 2)
    assert dimension_bound(HER, 3, 2) == hermitian_bound(3, 2)
    assert dimension_bound("full", 4, 2, m=3) == singleton_bound(3, 4, 2)


def test_invalid_parameters():
    with pytest.raises(ParamError):
        singleton_bound(3, 3, 4)
    with pytest.raises(ParamError):
        alternating_bound(5, 3)
    with pytest.raises(ParamError):
        alternating_bound(5, 6)
    with pytest.raises(ParamError):
        symmetric_bound(4, 0)
    with pytest.raises(ParamError):
        hermitian_bound(3, 5)
    with pytest.raises(ParamError):
        dimension_bound("mystery", 3, 2)


MAXIMUM_CASES = [
    ("alt_dg", dict(n=5, q=2, d=2, s=1)),
    ("alt_dg", dict(n=5, q=3, d=4, s=1)),
    ("sym_schmidt", dict(n=4, q=3, d=2, s=1)),
    ("sym_schmidt", dict(n=5, q=2, d=3, s=1)),
    ("sym_schmidt", dict(n=4, q=2, d=4, s=1)),
    ("sym_pair_twist", dict(n=4, q=3, s=1)),
    ("sym_middle_three", dict(n=6, q=3, s=1)),
    ("her_zero_diag", dict(n=3, q=2)),
    ("her_opposite", dict(n=3, q=2, d=2, s=1)),
    ("her_odd_odd", dict(n=3, q=2, d=3, s=1)),
    ("her_middle_gamma", dict(n=3, q=3, s=1)),
]


@pytest.mark.parametrize("case", MAXIMUM_CASES, ids=lambda c: c[0] + str(sorted(c[1].items())))
def test_families_attain_their_bounds(case):
    fam, kw = case
    code = construct(fam, **kw)
    assert is_maximum(code)


def test_not_maximum_when_strictly_smaller():
    code = construct("alt_dg", n=5, q=2, d=2, s=1)
    smaller = type(code)(code.ambient, list(code.coords[:-1]))
    if smaller.min_distance() == 2:
        assert not is_maximum(smaller)


def test_dual_distance_bound_values():
    assert dual_distance_bound(ALT, 5, 2) == 4
    assert dual_distance_bound(ALT, 5, 4) == 4
    assert dual_distance_bound(ALT, 7, 6) == 4
    assert dual_distance_bound(SYM, 5, 3) == 5
    assert dual_distance_bound(SYM, 4, 2) == 4
    assert dual_distance_bound(HER, 3, 2) == 3
    with pytest.raises(ParamError):
        dual_distance_bound(HER, 3, 1)


def test_dual_distance_bound_holds_on_families():
    for fam, kw in MAXIMUM_CASES:
        code = construct(fam, **kw)
        d = code.min_distance()
        if code.ambient.kind == HER and d < 2:
            continue
        dual = code.dual()
        dstar = dual.min_distance()
        if dstar is None:
            continue
        assert dstar <= dual_distance_bound(code.ambient.kind, code.ambient.n, d)


def test_maximum_dual_distance_exact_cases():
    assert maximum_code_dual_distance(SYM, 5, 3) == 5
    assert maximum_code_dual_distance(SYM, 4, 3) == 3
    assert maximum_code_dual_distance(HER, 3, 3) == 2
    assert maximum_code_dual_distance(ALT, 4, 4) == 2
    assert maximum_code_dual_distance(ALT, 5, 2) is None
    assert maximum_code_dual_distance(SYM, 4, 2) is None
    # verified on an instance: maximum symmetric 3-code with n odd, q odd
    code = construct("sym_schmidt", n=5, q=3, d=3, s=1)
    assert code.dual().min_distance() == maximum_code_dual_distance(SYM, 5, 3)


def test_symmetric_dual_equality_fails_at_even_q():
    """With q even the repaired pairing gives a smaller dual distance.

    The exact value n - d + 3 for duals of maximum odd-distance symmetric
    codes requires odd q; over F_2 the same family's dual distance drops.
    The inequality form of the bound still holds.
    """
    code = construct("sym_schmidt", n=5, q=2, d=3, s=1)
    dstar = code.dual().min_distance()
    assert dstar == 3
    assert dstar < maximum_code_dual_distance(SYM, 5, 3)
    assert dstar <= dual_distance_bound(SYM, 5, 3)


def test_first_weight_lower_bound_values():
    assert first_weight_lower_bound(ALT, 4) == 6
    assert first_weight_lower_bound(SYM, 3) == 6
    assert first_weight_lower_bound(HER, 3) == 9
    with pytest.raises(ParamError):
        first_weight_lower_bound("full", 2)
