"""Field arithmetic against independently derived oracles."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qpolycodes.fields import finite_field, field_of_order


def brute_irreducible_quadratics(p):
    """Oracle: monic quadratics with no root, enumerated low-degree-first."""
    out = []
    for c0, c1 in itertools.product(range(p), repeat=2):
        if all((x * x + c1 * x + c0) % p for x in range(p)):
            out.append((c0, c1, 1))
    return out


def test_modulus_gf4_is_lex_smallest():
    F4 = finite_field(2, 2)
    assert F4.modulus == brute_irreducible_quadratics(2)[0] == (1, 1, 1)


def test_modulus_gf9_is_lex_smallest():
    F9 = finite_field(3, 2)
    assert F9.modulus == brute_irreducible_quadratics(3)[0] == (1, 0, 1)


def test_factory_caches_and_field_of_order():
    assert finite_field(2, 2) is finite_field(2, 2)
    assert field_of_order(9) is finite_field(3, 2)
    assert field_of_order(7) is finite_field(7, 1)
    with pytest.raises(ValueError):
        field_of_order(12)


def test_gf4_square_of_generator():
    F4 = finite_field(2, 2)
    w = F4.generator
    assert w == 2
    assert F4.mul(w, w) == F4.add(w, 1) == 3


def test_trace_gf4_down_to_gf2():
    F4 = finite_field(2, 2)
    F2 = finite_field(2, 1)
    w = F4.generator
    assert F4.rel_trace(F2, w) == 1
    assert F4.rel_trace(F2, 0) == 0
    assert F4.rel_trace(F2, 1) == 0  # 1 + 1


@pytest.mark.parametrize("p,k", [(2, 1), (2, 3), (3, 2), (5, 1), (2, 4), (3, 3)])
def test_mul_table_agrees_with_poly_mul(p, k):
    F = finite_field(p, k)
    for a in F.elements():
        for b in F.elements():
            assert F.mul(a, b) == F.mul_poly(a, b)


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_field_axioms_exhaustive_small(p, k):
    F = finite_field(p, k)
    els = list(F.elements())
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a, b in itertools.product(els[: min(len(els), 9)], repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)


@given(st.integers(0, 728), st.integers(0, 728), st.integers(0, 728))
@settings(max_examples=60, deadline=None)
def test_distributivity_gf729(a, b, c):
    F = finite_field(3, 6)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("sub,sup", [((2, 1), (2, 4)), ((2, 2), (2, 4)),
                                     ((3, 1), (3, 4)), ((3, 2), (3, 4)),
                                     ((2, 3), (2, 6))])
def test_embedding_is_a_field_homomorphism(sub, sup):
    S = finite_field(*sub)
    L = finite_field(*sup)
    for a in S.elements():
        for b in S.elements():
            assert L.embed(S, S.add(a, b)) == L.add(L.embed(S, a), L.embed(S, b))
            assert L.embed(S, S.mul(a, b)) == L.mul(L.embed(S, a), L.embed(S, b))
    for a in S.elements():
        assert L.section(S, L.embed(S, a)) == a


def test_embedding_tower_consistency():
    F2, F4, F16 = finite_field(2, 1), finite_field(2, 2), finite_field(2, 4)
    for a in F2.elements():
        assert F16.embed(F2, a) == F16.embed(F4, F4.embed(F2, a))


def test_frobenius_is_additive_and_fixes_prime_field():
    F = finite_field(3, 4)
    for a in range(0, 81, 7):
        for b in range(0, 81, 11):
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    for c in range(3):
        assert F.frobenius(c) == c
    a = 57
    assert F.frobenius(F.frobenius(a, 2), 2) == a


def test_rel_trace_lands_in_subfield_and_is_onto():
    F64, F4 = finite_field(2, 6), finite_field(2, 2)
    seen = {F64.rel_trace(F4, a) for a in F64.elements()}
    assert seen == set(F4.elements())
    F2 = finite_field(2, 1)
    # trace is transitive
    for a in range(0, 64, 5):
        t1 = F64.rel_trace(F2, a)
        t2 = F4.rel_trace(F2, F64.rel_trace(F4, a))
        assert t1 == t2


def test_is_square_matches_exhaustive_squares():
    F9 = finite_field(3, 2)
    squares = {F9.mul(x, x) for x in F9.elements()}
    for a in F9.elements():
        assert F9.is_square(a) == (a in squares)
    # char-2 convention: everything is a square
    F8 = finite_field(2, 3)
    assert all(F8.is_square(a) for a in F8.elements())


def test_rel_coords_roundtrip():
    F81, F9 = finite_field(3, 4), finite_field(3, 2)
    g = F81.generator
    for a in F81.elements():
        c0, c1 = F81.rel_coords(F9, a)
        back = F81.add(F81.embed(F9, c0), F81.mul(F81.embed(F9, c1), g))
        assert back == a


def test_pow_conventions():
    F = finite_field(5, 1)
    assert F.pow(0, 0) == 1
    assert F.pow(0, 3) == 0
    assert F.pow(2, -1) == F.inv(2)


def test_order_cap_enforced():
    with pytest.raises(ValueError):
        finite_field(2, 21)
