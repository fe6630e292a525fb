"""Named families of restricted rank-metric codes.

Each family builds a list of linearized polynomials spanning the code,
turns them into matrices through the Gram construction, and wraps the
result in a Code.  Constructors validate every stated parameter
constraint and raise ParamError naming the violated condition.

Families over alternating matrices (n odd, d = 2e):

  alt_dg            span of b X^(q^(si)) - (b X)^(q^(s(n-i))),
                    i = e .. (n-1)/2, b over F_(q^n)

over symmetric matrices:

  sym_schmidt       b_0 X plus pairs b_i X^(q^(si)) + (b_i X)^(q^(s(n-i))),
                    i = 1 .. (n-d)/2, n - d even
  sym_pair_twist    the even-n two-parameter variant with a scaling
                    element eta whose (q^(n-1)-1)/(q-1) power is a
                    non-square; a maximum 2-code for odd q
  sym_middle_three  the even-n three-term construction around the middle
                    exponent with eta a non-square; minimum distance n-2

over Hermitian matrices:

  her_zero_diag     Hermitian matrices with zero diagonal; a maximum 2-code
  her_opposite      pairs (b X)^(q^(s(2n-2j+2))) + b^(q^s) X^(q^(2sj)),
                    j = 1 .. (n-d+1)/2, n and d of opposite parity
  her_odd_odd       middle term (b_0 X)^(q^(s(n+1))) plus pairs, n and d
                    both odd, b_0 over F_(q^n)
  her_middle_gamma  paired free coefficients away from the middle, plus a
                    gamma-scaled pair and an F_(q^n) middle term, where
                    gamma is not a (q+1)-th power in F_(q^(2n)); a maximum
                    2-code for odd q and odd n
"""

from __future__ import annotations

from math import gcd

from .codes import Code
from .fields import field_of_order
from .linpoly import LinPoly, gram_matrix, model_membership
from .spaces import ALT, HER, SYM, Ambient
from .util import ParamError


def _require(cond: bool, message: str):
    if not cond:
        raise ParamError(message)


# ---------------- special scalars ----------------


def eta_pair_twist(q: int, n: int) -> int:
    """Smallest eta in F_(q^n) with eta^((q^(n-1)-1)/(q-1)) a non-square."""
    _require(q % 2 == 1, "a non-square condition requires odd q")
    field = field_of_order(q ** n)
    exp = (q ** (n - 1) - 1) // (q - 1)
    for a in range(1, field.order):
        if not field.is_square(field.pow(a, exp)):
            return a
    raise ParamError("no valid eta exists at these parameters")


def eta_nonsquare(q: int, n: int) -> int:
    """Smallest non-square in F_(q^n)."""
    _require(q % 2 == 1, "a non-square condition requires odd q")
    field = field_of_order(q ** n)
    for a in range(1, field.order):
        if not field.is_square(a):
            return a
    raise ParamError("no non-square exists at these parameters")


def gamma_middle(q: int, n: int) -> int:
    """Smallest element of F_(q^(2n)) that is not a (q+1)-th power there.

    Such a scalar keeps rank-one matrices out of the middle Hermitian
    family.  Elements of the subfield F_(q^n) never qualify when n is odd,
    because q^n + 1 is then divisible by q + 1, so the search has to range
    over the full quadratic extension.
    """
    big = field_of_order(q ** (2 * n))
    exp = (big.order - 1) // (q + 1)
    for a in range(1, big.order):
        if big.pow(a, exp) != 1:
            return a
    raise ParamError("no valid gamma exists at these parameters")


# ---------------- polynomial assembly helpers ----------------


def _fq_basis_of_subfield(big, sub, bq):
    """An F_q-basis of sub (a subfield of big containing bq), embedded in big."""
    m = sub.k // bq.k
    if m == 1:
        return [big.embed(sub, sub.embed(bq, 1) if sub is not bq else 1)]
    out = []
    gpow = 1
    for _ in range(m):
        out.append(big.embed(sub, gpow))
        gpow = sub.mul(gpow, sub.generator)
    return out


def _span_code(kind: str, q: int, n: int, s: int, polys: list[LinPoly]) -> Code:
    amb = {ALT: Ambient.alternating, SYM: Ambient.symmetric, HER: Ambient.hermitian}[kind](n, q)
    for f in polys:
        if not model_membership(kind, f, q):
            raise AssertionError("generator left the polynomial model")
    mats = [gram_matrix(kind, f, amb) for f in polys]
    return Code.from_matrices(amb, mats)


# ---------------- alternating ----------------


def alt_dg(n: int, q: int, d: int, s: int = 1) -> Code:
    _require(n % 2 == 1, "alt_dg requires odd n")
    _require(d % 2 == 0 and d >= 2, "alt_dg requires even minimum distance d >= 2")
    e = d // 2
    _require(e <= (n - 1) // 2, "alt_dg requires d/2 at most (n-1)/2")
    _require(gcd(s, n) == 1, "alt_dg requires gcd(s, n) = 1")
    big = field_of_order(q ** n)
    e_q = field_of_order(q).k
    polys = []
    for i in range(e, (n - 1) // 2 + 1):
        for j in range(n):
            b = big.pow(big.generator, j)
            coeffs = [0] * n
            coeffs[i] = big.add(coeffs[i], b)
            c2 = big.neg(big.frobenius(b, e_q * s * (n - i)))
            coeffs[(n - i) % n] = big.add(coeffs[(n - i) % n], c2)
            polys.append(LinPoly(big, q, s, coeffs))
    code = _span_code(ALT, q, n, s, polys)
    assert code.dim == n * ((n - 1) // 2 - e + 1)
    return code


# ---------------- symmetric ----------------


def sym_schmidt(n: int, q: int, d: int, s: int = 1) -> Code:
    _require(1 <= d <= n, "sym_schmidt requires 1 <= d <= n")
    _require((n - d) % 2 == 0, "sym_schmidt requires n - d even")
    _require(gcd(s, n) == 1, "sym_schmidt requires gcd(s, n) = 1")
    big = field_of_order(q ** n)
    e_q = field_of_order(q).k
    polys = []
    basis = [big.pow(big.generator, j) for j in range(n)]
    for b in basis:
        polys.append(LinPoly.monomial(big, q, s, b, 0))
    for i in range(1, (n - d) // 2 + 1):
        for b in basis:
            coeffs = [0] * n
            coeffs[i] = big.add(coeffs[i], b)
            c2 = big.frobenius(b, e_q * s * (n - i))
            coeffs[(n - i) % n] = big.add(coeffs[(n - i) % n], c2)
            polys.append(LinPoly(big, q, s, coeffs))
    code = _span_code(SYM, q, n, s, polys)
    assert code.dim == n * (n - d + 2) // 2
    return code


def sym_pair_twist(n: int, q: int, s: int = 1, eta: int | None = None) -> Code:
    _require(q % 2 == 1, "sym_pair_twist requires odd q")
    _require(n % 2 == 0 and n >= 4, "sym_pair_twist requires even n >= 4")
    k = n // 2
    _require(gcd(s, n) == 1, "sym_pair_twist requires gcd(s, n) = 1")
    big = field_of_order(q ** n)
    bq = field_of_order(q)
    e_q = bq.k
    if eta is None:
        eta = eta_pair_twist(q, n)
    else:
        exp = (q ** (n - 1) - 1) // (q - 1)
        _require(
            not big.is_square(big.pow(eta, exp)),
            "eta must have a non-square (q^(n-1)-1)/(q-1) power",
        )
    subk = field_of_order(q ** k)
    full_basis = [big.pow(big.generator, j) for j in range(n)]
    half_basis = _fq_basis_of_subfield(big, subk, bq)
    polys = []
    for b in full_basis:
        polys.append(LinPoly.monomial(big, q, s, b, 0))
    for j in range(1, k - 1):
        for b in full_basis:
            coeffs = [0] * n
            coeffs[j] = big.add(coeffs[j], b)
            c2 = big.frobenius(b, e_q * s * (n - j))
            coeffs[(n - j) % n] = big.add(coeffs[(n - j) % n], c2)
            polys.append(LinPoly(big, q, s, coeffs))
    for a in half_basis:
        polys.append(LinPoly.monomial(big, q, s, a, k))
    for b in half_basis:
        coeffs = [0] * n
        coeffs[k - 1] = big.mul(eta, b)
        coeffs[k + 1] = big.mul(
            big.frobenius(eta, e_q * s * (k + 1)), big.frobenius(b, e_q * s)
        )
        polys.append(LinPoly(big, q, s, coeffs))
    code = _span_code(SYM, q, n, s, polys)
    assert code.dim == n * n // 2
    return code


def sym_middle_three(n: int, q: int, s: int = 1, eta: int | None = None) -> Code:
    _require(q % 2 == 1, "sym_middle_three requires odd q")
    _require(n % 2 == 0, "sym_middle_three requires even n")
    k = n // 2
    _require(k in (3, 4, 5), "sym_middle_three is stated for n/2 in {3, 4, 5}")
    _require(gcd(s, n) == 1, "sym_middle_three requires gcd(s, n) = 1")
    big = field_of_order(q ** n)
    bq = field_of_order(q)
    e_q = bq.k
    if eta is None:
        eta = eta_nonsquare(q, n)
    else:
        _require(not big.is_square(eta), "eta must be a non-square")
    subk = field_of_order(q ** k)
    full_basis = [big.pow(big.generator, j) for j in range(n)]
    half_basis = _fq_basis_of_subfield(big, subk, bq)
    polys = []
    for b0 in half_basis:
        polys.append(LinPoly.monomial(big, q, s, b0, k))
    for b1 in full_basis:
        coeffs = [0] * n
        coeffs[k - 1] = big.add(coeffs[k - 1], b1)
        coeffs[k + 1] = big.add(coeffs[k + 1], big.frobenius(b1, e_q * s * (k + 1)))
        polys.append(LinPoly(big, q, s, coeffs))
    for b2 in half_basis:
        val = big.mul(eta, b2)
        coeffs = [0] * n
        coeffs[k - 2] = big.add(coeffs[k - 2], val)
        coeffs[k + 2] = big.add(coeffs[k + 2], big.frobenius(val, e_q * s * (k + 2)))
        polys.append(LinPoly(big, q, s, coeffs))
    code = _span_code(SYM, q, n, s, polys)
    assert code.dim == 2 * n
    return code


# ---------------- Hermitian ----------------


def her_zero_diag(n: int, q: int) -> Code:
    _require(n >= 2, "her_zero_diag requires n >= 2")
    amb = Ambient.hermitian(n, q)
    mats = []
    for s, mat in enumerate(amb.basis()):
        if s >= n:  # the first n basis elements are the diagonal units
            mats.append(mat)
    code = Code.from_matrices(amb, mats)
    assert code.dim == n * n - n
    return code


def her_opposite(n: int, q: int, d: int, s: int = 1) -> Code:
    _require(1 <= d <= n - 1, "her_opposite requires 1 <= d <= n - 1")
    _require((n - d) % 2 == 1, "her_opposite requires n and d of opposite parity")
    _require(gcd(s, 2 * n) == 1, "her_opposite requires gcd(s, 2n) = 1")
    big = field_of_order(q ** (2 * n))
    e_q = field_of_order(q).k
    basis = [big.pow(big.generator, j) for j in range(2 * n)]
    polys = []
    for j in range(1, (n - d + 1) // 2 + 1):
        for b in basis:
            coeffs = [0] * n
            c1 = big.frobenius(b, e_q * s)
            coeffs[j % n] = big.add(coeffs[j % n], c1)
            c2 = big.frobenius(b, e_q * s * (2 * n - 2 * j + 2))
            idx = (n - j + 1) % n
            coeffs[idx] = big.add(coeffs[idx], c2)
            polys.append(LinPoly(big, q * q, s, coeffs))
    code = _span_code(HER, q, n, s, polys)
    assert code.dim == n * (n - d + 1)
    return code


def her_odd_odd(n: int, q: int, d: int, s: int = 1) -> Code:
    _require(n % 2 == 1 and d % 2 == 1, "her_odd_odd requires n and d both odd")
    _require(1 <= d <= n, "her_odd_odd requires 1 <= d <= n")
    _require(gcd(s, 2 * n) == 1, "her_odd_odd requires gcd(s, 2n) = 1")
    big = field_of_order(q ** (2 * n))
    mid = field_of_order(q ** n)
    bq = field_of_order(q)
    e_q = bq.k
    basis = [big.pow(big.generator, j) for j in range(2 * n)]
    mid_basis = _fq_basis_of_subfield(big, mid, bq)
    polys = []
    for b0 in mid_basis:
        coeffs = [0] * n
        idx = ((n + 1) // 2) % n
        coeffs[idx] = big.frobenius(b0, e_q * s * (n + 1))
        polys.append(LinPoly(big, q * q, s, coeffs))
    for j in range(1, (n - d) // 2 + 1):
        for b in basis:
            coeffs = [0] * n
            i1 = ((n - 2 * j + 1) // 2) % n
            coeffs[i1] = big.add(coeffs[i1], big.frobenius(b, e_q * s))
            i2 = ((n + 2 * j + 1) // 2) % n
            coeffs[i2] = big.add(coeffs[i2], big.frobenius(b, e_q * s * (n + 2 * j + 1)))
            polys.append(LinPoly(big, q * q, s, coeffs))
    code = _span_code(HER, q, n, s, polys)
    assert code.dim == n * (n - d + 1)
    return code


def her_middle_gamma(n: int, q: int, s: int = 1, gamma: int | None = None) -> Code:
    _require(q % 2 == 1 and n % 2 == 1, "her_middle_gamma requires odd q and odd n")
    _require(n >= 3, "her_middle_gamma requires n >= 3")
    _require(gcd(s, 2 * n) == 1, "her_middle_gamma requires gcd(s, 2n) = 1")
    big = field_of_order(q ** (2 * n))
    mid = field_of_order(q ** n)
    bq = field_of_order(q)
    e_q = bq.k
    if gamma is None:
        gamma = gamma_middle(q, n)
    else:
        _require(
            0 < gamma < big.order
            and big.pow(gamma, (big.order - 1) // (q + 1)) != 1,
            "gamma must not be a (q+1)-th power in the coefficient field",
        )
    gamma_big = gamma
    basis = [big.pow(big.generator, j) for j in range(2 * n)]
    mid_basis = _fq_basis_of_subfield(big, mid, bq)

    def paired(i: int, c: int) -> LinPoly:
        coeffs = [0] * n
        coeffs[i % n] = big.add(coeffs[i % n], c)
        partner = (n - i + 1) % n
        cc = big.frobenius(c, e_q * s * (2 * n - 2 * i + 1))
        coeffs[partner] = big.add(coeffs[partner], cc)
        return LinPoly(big, q * q, s, coeffs)

    polys = []
    for i in range(1, (n - 3) // 2 + 1):
        for c in basis:
            polys.append(paired(i, c))
    for a in mid_basis:
        polys.append(paired((n - 1) // 2, big.mul(a, gamma_big)))
    for b in mid_basis:
        coeffs = [0] * n
        idx = ((n + 1) // 2) % n
        coeffs[idx] = b
        polys.append(LinPoly(big, q * q, s, coeffs))
    code = _span_code(HER, q, n, s, polys)
    assert code.dim == n * (n - 1)
    return code


FAMILY_BUILDERS = {
    "alt_dg": alt_dg,
    "sym_schmidt": sym_schmidt,
    "sym_pair_twist": sym_pair_twist,
    "sym_middle_three": sym_middle_three,
    "her_zero_diag": her_zero_diag,
    "her_opposite": her_opposite,
    "her_odd_odd": her_odd_odd,
    "her_middle_gamma": her_middle_gamma,
}


def construct(family: str, **params) -> Code:
    builder = FAMILY_BUILDERS.get(family)
    if builder is None:
        known = ", ".join(sorted(FAMILY_BUILDERS))
        raise ParamError(f"unknown family {family!r}; known families: {known}")
    return builder(**params)
