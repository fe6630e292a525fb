"""Linearized polynomials: composition, adjoints, models, Gram matrices."""

import random

import pytest

from qpolycodes.fields import field_of_order
from qpolycodes.linpoly import (
    HERMITIAN_GRAM_TWIST,
    LinPoly,
    gram_matrix,
    hermitian_twist_search,
    model_membership,
    model_space,
)
from qpolycodes.matrices import Matrix
from qpolycodes.spaces import ALT, HER, SYM, Ambient


def random_poly(field, Q, s, rng):
    n = field.k // field_of_order(Q).k
    return LinPoly(field, Q, s, [rng.randrange(field.order) for _ in range(n)])


def test_evaluate_is_linear_over_base():
    big = field_of_order(16)
    f2 = field_of_order(2)
    rng = random.Random(1)
    f = random_poly(big, 2, 1, rng)
    for _ in range(30):
        x, y = rng.randrange(16), rng.randrange(16)
        assert f.evaluate(big.add(x, y)) == big.add(f.evaluate(x), f.evaluate(y))
    assert f.evaluate(0) == 0


def test_compose_matches_pointwise():
    big = field_of_order(27)
    rng = random.Random(2)
    f = random_poly(big, 3, 1, rng)
    g = random_poly(big, 3, 1, rng)
    h = f.compose(g)
    for x in range(27):
        assert h.evaluate(x) == f.evaluate(g.evaluate(x))


def test_compose_with_identity():
    big = field_of_order(64)
    ident = LinPoly.monomial(big, 4, 1, 1, 0)
    rng = random.Random(3)
    f = random_poly(big, 4, 1, rng)
    assert f.compose(ident) == f
    assert ident.compose(f) == f


def test_adjoint_involution_and_antihomomorphism():
    big = field_of_order(81)
    rng = random.Random(4)
    for _ in range(10):
        f = random_poly(big, 3, 1, rng)
        g = random_poly(big, 3, 1, rng)
        assert f.adjoint().adjoint() == f
        assert f.compose(g).adjoint() == g.adjoint().compose(f.adjoint())


def test_adjoint_is_trace_form_adjoint():
    big = field_of_order(16)
    f2 = field_of_order(2)
    rng = random.Random(5)
    f = random_poly(big, 2, 1, rng)
    fa = f.adjoint()
    for _ in range(40):
        x, y = rng.randrange(16), rng.randrange(16)
        lhs = big.rel_trace(f2, big.mul(x, f.evaluate(y)))
        rhs = big.rel_trace(f2, big.mul(y, fa.evaluate(x)))
        assert lhs == rhs


def test_rank_of_monomials_and_artin_schreier():
    big = field_of_order(16)
    x_q = LinPoly.monomial(big, 2, 1, 1, 1)
    assert x_q.rank() == 4
    # X^2 + X has kernel F_2, so rank 3
    coeffs = [1, 1, 0, 0]
    f = LinPoly(big, 2, 1, coeffs)
    assert f.rank() == 3
    zero = LinPoly(big, 2, 1, [0, 0, 0, 0])
    assert zero.rank() == 0


MODEL_CASES = [
    (ALT, 2, 3, 1),
    (ALT, 2, 4, 1),
    (ALT, 3, 3, 1),
    (SYM, 2, 3, 1),
    (SYM, 3, 3, 1),
    (SYM, 2, 4, 1),
    (SYM, 3, 4, 1),
    (HER, 2, 2, 1),
    (HER, 2, 3, 1),
    (HER, 3, 2, 1),
]


@pytest.mark.parametrize("kind,q,n,s", MODEL_CASES)
def test_model_dimension_matches_ambient(kind, q, n, s):
    amb = {ALT: Ambient.alternating, SYM: Ambient.symmetric, HER: Ambient.hermitian}[kind](n, q)
    basis = model_space(kind, q, n, s)
    assert len(basis) == amb.dim
    for f in basis:
        assert model_membership(kind, f, q)


@pytest.mark.parametrize("kind,q,n,s", MODEL_CASES)
def test_gram_is_a_bijection_onto_ambient(kind, q, n, s):
    amb = {ALT: Ambient.alternating, SYM: Ambient.symmetric, HER: Ambient.hermitian}[kind](n, q)
    basis = model_space(kind, q, n, s)
    grams = [gram_matrix(kind, f, amb) for f in basis]
    coord_rows = [list(amb.coords(g)) for g in grams]
    assert Matrix(amb.base_field, coord_rows).rank() == amb.dim


@pytest.mark.parametrize("kind,q,n,s", [(ALT, 2, 4, 1), (SYM, 3, 3, 1), (HER, 2, 2, 1)])
def test_gram_rank_equals_poly_rank(kind, q, n, s):
    amb = {ALT: Ambient.alternating, SYM: Ambient.symmetric, HER: Ambient.hermitian}[kind](n, q)
    basis = model_space(kind, q, n, s)
    bq = field_of_order(q)
    big = basis[0].field
    rng = random.Random(6)
    for _ in range(15):
        acc = LinPoly(big, basis[0].Q, s, [0] * n)
        for f in basis:
            c = rng.randrange(q)
            if c:
                acc = acc.add(f.scale(big.embed(bq, c)))
        gram = gram_matrix(kind, acc, amb)
        assert gram.rank() == acc.rank()


def test_symmetric_model_is_self_adjoint():
    basis = model_space(SYM, 3, 3, 1)
    for f in basis:
        assert f.adjoint() == f
    alt_basis = model_space(ALT, 3, 3, 1)
    big = alt_basis[0].field
    for f in alt_basis:
        # alternating polys are anti-self-adjoint with zero constant term
        neg = LinPoly(big, f.Q, f.s, [big.neg(c) for c in f.coeffs])
        assert f.adjoint() == neg
        assert f.coeffs[0] == 0


def test_hermitian_twist_regression():
    assert hermitian_twist_search(2, 2, 1) == [HERMITIAN_GRAM_TWIST]
    assert hermitian_twist_search(3, 2, 1) == [HERMITIAN_GRAM_TWIST]
    assert hermitian_twist_search(2, 3, 1) == [HERMITIAN_GRAM_TWIST]
