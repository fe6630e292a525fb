"""Family constructors: dimensions, distances, parameter validation."""

import pytest

from qpolycodes.families import (
    FAMILY_BUILDERS,
    construct,
    eta_nonsquare,
    eta_pair_twist,
    gamma_middle,
)
from qpolycodes.fields import field_of_order
from qpolycodes.spaces import ALT, HER, SYM
from qpolycodes.util import ParamError


# family, parameters, expected kind, dimension over F_q, minimum distance
CASES = [
    ("alt_dg", dict(n=5, q=2, d=2, s=1), ALT, 10, 2),
    ("alt_dg", dict(n=5, q=3, d=4, s=1), ALT, 5, 4),
    ("alt_dg", dict(n=5, q=2, d=4, s=2), ALT, 5, 4),
    ("sym_schmidt", dict(n=4, q=3, d=2, s=1), SYM, 8, 2),
    ("sym_schmidt", dict(n=5, q=2, d=3, s=1), SYM, 10, 3),
    ("sym_schmidt", dict(n=5, q=3, d=3, s=2), SYM, 10, 3),
    ("sym_schmidt", dict(n=4, q=2, d=4, s=1), SYM, 4, 4),
    ("sym_pair_twist", dict(n=4, q=3, s=1), SYM, 8, 2),
    ("sym_middle_three", dict(n=6, q=3, s=1), SYM, 12, 4),
    ("her_zero_diag", dict(n=2, q=2), HER, 2, 2),
    ("her_zero_diag", dict(n=3, q=2), HER, 6, 2),
    ("her_zero_diag", dict(n=2, q=3), HER, 2, 2),
    ("her_opposite", dict(n=2, q=2, d=1, s=1), HER, 4, 1),
    ("her_opposite", dict(n=3, q=2, d=2, s=1), HER, 6, 2),
    ("her_odd_odd", dict(n=3, q=2, d=3, s=1), HER, 3, 3),
    ("her_odd_odd", dict(n=3, q=2, d=1, s=1), HER, 9, 1),
    ("her_middle_gamma", dict(n=3, q=3, s=1), HER, 6, 2),
    ("her_middle_gamma", dict(n=3, q=3, s=5), HER, 6, 2),
]


def case_id(case):
    fam, kw = case[0], case[1]
    return fam + "-" + "-".join(f"{k}{v}" for k, v in sorted(kw.items()))


@pytest.mark.parametrize("case", CASES, ids=case_id)
def test_family_shape(case):
    fam, kw, kind, dim, dist = case
    code = construct(fam, **kw)
    assert code.ambient.kind == kind
    assert code.ambient.n == kw["n"]
    assert code.ambient.q == kw["q"]
    assert code.dim == dim
    assert code.min_distance() == dist


def test_all_families_registered():
    assert sorted(FAMILY_BUILDERS) == [
        "alt_dg",
        "her_middle_gamma",
        "her_odd_odd",
        "her_opposite",
        "her_zero_diag",
        "sym_middle_three",
        "sym_pair_twist",
        "sym_schmidt",
    ]
    assert {case[0] for case in CASES} == set(FAMILY_BUILDERS)


def test_unknown_family_rejected():
    with pytest.raises(ParamError, match="unknown family"):
        construct("no_such_family", n=3, q=2)


REJECTIONS = [
    # the Schmidt symmetric family needs n - d even; (5, 4) has n - d odd
    ("sym_schmidt", dict(n=5, q=3, d=4, s=1), "n - d"),
    ("sym_schmidt", dict(n=4, q=3, d=3, s=1), "n - d"),
    ("alt_dg", dict(n=4, q=2, d=2, s=1), "odd n"),
    ("alt_dg", dict(n=5, q=2, d=3, s=1), "even"),
    ("alt_dg", dict(n=5, q=2, d=2, s=5), "gcd"),
    ("sym_pair_twist", dict(n=5, q=3, s=1), "even"),
    ("sym_pair_twist", dict(n=4, q=2, s=1), "odd q"),
    ("sym_middle_three", dict(n=4, q=3, s=1), "n/2 in"),
    ("sym_middle_three", dict(n=6, q=2, s=1), "odd q"),
    ("her_opposite", dict(n=4, q=2, d=2, s=1), "opposite parity"),
    ("her_opposite", dict(n=3, q=2, d=2, s=3), "gcd"),
    ("her_odd_odd", dict(n=3, q=2, d=2, s=1), "odd"),
    ("her_middle_gamma", dict(n=4, q=3, s=1), "odd"),
    ("her_middle_gamma", dict(n=3, q=2, s=1), "odd"),
    ("her_middle_gamma", dict(n=3, q=3, s=3), "gcd"),
    ("her_zero_diag", dict(n=1, q=2), "n >= 2"),
]


@pytest.mark.parametrize("case", REJECTIONS, ids=case_id)
def test_invalid_parameters_rejected(case):
    fam, kw, fragment = case
    with pytest.raises(ParamError, match=fragment):
        construct(fam, **kw)


def test_eta_pair_twist_condition():
    q, n = 3, 4
    eta = eta_pair_twist(q, n)
    field = field_of_order(q ** n)
    exp = (q ** (n - 1) - 1) // (q - 1)
    assert not field.is_square(field.pow(eta, exp))


def test_eta_nonsquare_condition():
    q, n = 3, 6
    eta = eta_nonsquare(q, n)
    field = field_of_order(q ** n)
    assert not field.is_square(eta)
    # smallest: everything below it is a square or zero
    for a in range(eta):
        assert a == 0 or field.is_square(a)


def test_gamma_middle_condition():
    q, n = 3, 3
    gamma = gamma_middle(q, n)
    big = field_of_order(q ** (2 * n))
    exp = (big.order - 1) // (q + 1)
    assert big.pow(gamma, exp) != 1
    for a in range(1, gamma):
        assert big.pow(a, exp) == 1


def test_her_middle_gamma_explicit_scalar():
    """A (q+1)-th power is rejected; a verified non-power is accepted."""
    q, n = 3, 3
    big = field_of_order(q ** (2 * n))
    exp = (big.order - 1) // (q + 1)
    power = next(a for a in range(2, big.order) if big.pow(a, exp) == 1)
    with pytest.raises(ParamError, match="power"):
        construct("her_middle_gamma", n=n, q=q, s=1, gamma=power)
    good = gamma_middle(q, n)
    code = construct("her_middle_gamma", n=n, q=q, s=1, gamma=good)
    assert code.dim == n * (n - 1)
    assert code.min_distance() == 2


def test_subfield_elements_rejected_as_gamma():
    """No element of F_(q^n) can serve: for odd n all are (q+1)-th powers."""
    q, n = 3, 3
    big = field_of_order(q ** (2 * n))
    mid = field_of_order(q ** n)
    exp = (big.order - 1) // (q + 1)
    for a in range(1, mid.order):
        assert big.pow(big.embed(mid, a), exp) == 1
    with pytest.raises(ParamError):
        construct("her_middle_gamma", n=n, q=q, s=1, gamma=big.embed(mid, 2))
