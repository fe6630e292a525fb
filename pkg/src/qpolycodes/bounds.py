"""Dimension and dual-distance bounds for restricted rank-metric codes.

All bounds are stated for log_q |C|, the F_q-dimension of an additive
code, and returned as exact Fractions so fractional cases (the
alternating bound with n even) never round silently.
"""

from __future__ import annotations

from fractions import Fraction

from .spaces import ALT, FULL, HER, SYM
from .util import ParamError


def singleton_bound(m: int, n: int, d: int) -> Fraction:
    """Largest possible log_q |C| for a d-code in the full m x n space."""
    if not 1 <= d <= min(m, n):
        raise ParamError("distance must satisfy 1 <= d <= min(m, n)")
    return Fraction(max(m, n) * (min(m, n) - d + 1))


def alternating_bound(n: int, d: int) -> Fraction:
    """Largest possible log_q |C| for a d-code of alternating matrices.

    Alternating matrices have even rank, so d must be even.  The bound
    n(n-1)/(2 floor(n/2)) (floor(n/2) - d/2 + 1) is an integer for odd n
    and can be fractional for even n.
    """
    if d % 2 != 0 or not 2 <= d <= 2 * (n // 2):
        raise ParamError("alternating distances are even with d <= 2 floor(n/2)")
    half = n // 2
    return Fraction(n * (n - 1), 2 * half) * (half - d // 2 + 1)


def symmetric_bound(n: int, d: int) -> Fraction:
    """Largest possible log_q |C| for an additive symmetric d-code."""
    if not 1 <= d <= n:
        raise ParamError("distance must satisfy 1 <= d <= n")
    if d % 2 == 1:
        delta = (d + 1) // 2
        if n % 2 == 1:
            return Fraction(n * ((n + 1) // 2 - delta + 1))
        return Fraction((n + 1) * (n // 2 - delta + 1))
    delta = d // 2
    if n % 2 == 1:
        return Fraction((n + 1) * ((n - 1) // 2 - delta + 1))
    return Fraction(n * (n // 2 - delta + 1))


def hermitian_bound(n: int, d: int) -> Fraction:
    """Largest possible log_q |C| for an additive Hermitian d-code."""
    if not 1 <= d <= n:
        raise ParamError("distance must satisfy 1 <= d <= n")
    return Fraction(n * (n - d + 1))


def dimension_bound(kind: str, n: int, d: int, m: int | None = None) -> Fraction:
    """Dispatch to the dimension bound for the given ambient kind."""
    if kind == ALT:
        return alternating_bound(n, d)
    if kind == SYM:
        return symmetric_bound(n, d)
    if kind == HER:
        return hermitian_bound(n, d)
    if kind == FULL:
        return singleton_bound(m if m is not None else n, n, d)
    raise ParamError(f"unknown ambient kind {kind!r}")


def is_maximum(code) -> bool:
    """Whether the code meets the dimension bound for its own distance.

    Hermitian codes are F_q-additive inside matrices over F_(q^2), so the
    relevant dimension is over F_q in every kind.
    """
    d = code.min_distance()
    if d is None:
        return False
    amb = code.ambient
    bound = dimension_bound(amb.kind, amb.n, d, m=amb.m)
    return Fraction(code.dim) == bound


def dual_distance_bound(kind: str, n: int, d: int) -> int:
    """Upper bound on the minimum distance of the dual of a d-code."""
    if kind == ALT:
        if d % 2 != 0 or not 2 <= d <= 2 * (n // 2):
            raise ParamError("alternating distances are even with d <= 2 floor(n/2)")
        half2 = 2 * (n // 2)
        return min(half2, half2 - d + 4)
    if kind == SYM:
        if not 1 <= d <= n:
            raise ParamError("distance must satisfy 1 <= d <= n")
        return n - d + 3 if d % 2 == 1 else n - d + 2
    if kind == HER:
        if not 2 <= d <= n:
            raise ParamError("the Hermitian dual-distance bound needs d >= 2")
        return n - d + 2
    raise ParamError(f"no dual-distance bound for ambient kind {kind!r}")


def maximum_code_dual_distance(kind: str, n: int, d: int):
    """Exact dual distance forced when the code is maximum, if known.

    Returns None when maximality alone does not pin the value down.
    The symmetric odd-distance value assumes odd q; with q even the
    symmetric pairing is the repaired one and the dual distance can drop
    below this value (S_{5,3,1} over F_2 has dual distance 3, not 5).
    """
    if kind == ALT and d == 2 * (n // 2) and n % 2 == 0:
        return 2
    if kind == SYM and d % 2 == 1 and d >= 3:
        return n - d + 3 if n % 2 == 1 else n - d + 2
    if kind == HER and d % 2 == 1 and 2 <= d:
        return n - d + 2
    return None


def first_weight_lower_bound(kind: str, d: int) -> int:
    """Lower bound on the first generalized weight of a d-code."""
    if kind == ALT:
        return d * (d - 1) // 2
    if kind == SYM:
        return d * (d + 1) // 2
    if kind == HER:
        return d * d
    raise ParamError(f"no first-weight bound for ambient kind {kind!r}")
