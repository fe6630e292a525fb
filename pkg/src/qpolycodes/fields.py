"""Finite fields F_{p^k} with deterministic moduli, towers, Frobenius and traces.

Elements are plain ints in [0, p^k): the base-p digits of n are the
coefficients of the residue polynomial in the canonical generator g
(digit i = coefficient of g^i).  Zero and one are literally 0 and 1, and
the canonical generator is the int p.  The modulus is the
lexicographically smallest monic irreducible of degree k over F_p,
comparing coefficient vectors from degree 0 upward, so two fields built
from the same (p, k) are interchangeable (and the factory caches them).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

MAX_ORDER = 1 << 20
_ADD_TABLE_MAX = 2048


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---- dense polynomial helpers over F_p (coefficient tuples, ascending) ----

def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        a = list(_poly_trim(a))
        if len(a) - 1 < dm:
            break
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = list(_poly_trim(a))
    return _poly_trim(a)


def _poly_is_irreducible(coeffs, p):
    """Trial factorization: no monic factor of degree <= deg/2."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    for r in range(p):  # linear factors via roots
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return False
    for d in range(2, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = low + (1,)
            if not _poly_mod(coeffs, divisor, p):
                return False
    return True


def _int_digits(n: int, p: int, k: int):
    out = []
    for _ in range(k):
        n, r = divmod(n, p)
        out.append(r)
    return out


class FiniteField:
    """Arithmetic context for F_{p^k}.  Instances are immutable after init."""

    def __init__(self, p: int, k: int = 1):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError(f"k = {k} must be >= 1")
        order = p ** k
        if order > MAX_ORDER:
            raise ValueError(f"field order {order} exceeds cap {MAX_ORDER}")
        self.p = p
        self.k = k
        self.order = order
        self.char = p
        self.modulus = self._find_modulus()
        self.generator = p % order if k > 1 else 0
        self._exp = None        # exp/log tables, built on first multiply
        self._log = None
        self._add_table = None
        self._embeddings = {}   # sub.order -> (root, emb list, section dict)
        self._coords_cache = {}
        self._pow_p = [pow(p, i, order - 1) if order > 2 else 0
                       for i in range(k)]

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def _find_modulus(self):
        if self.k == 1:
            return (0, 1)
        for low in product(range(self.p), repeat=self.k):
            cand = low + (1,)
            if _poly_is_irreducible(cand, self.p):
                return cand
        raise AssertionError("no irreducible polynomial found")

    # ---- element codecs ----

    def digits(self, a: int):
        return _int_digits(a, self.p, self.k)

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(list(ds)):
            a = a * self.p + (d % self.p)
        return a

    def elements(self):
        return range(self.order)

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element index of {self}")
        return a

    # ---- additive structure ----

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        t = self._add_table
        if t is not None:
            return t[a][b]
        p = self.p
        out = 0
        mul = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mul
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mul = 1
        while a:
            a, r = divmod(a, p)
            out += (-r) % p * mul
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b)) if self.p != 2 else a ^ b

    def scalar_mul(self, c: int, a: int) -> int:
        """Multiply by a prime-field scalar c in [0, p)."""
        c %= self.p
        if self.k == 1:
            return (c * a) % self.p
        return self.mul(c, a)

    def _build_add_table(self):
        t = []
        for a in range(self.order):
            row = [0] * self.order
            for b in range(self.order):
                p = self.p
                x, y, out, mul = a, b, 0, 1
                while x or y:
                    x, rx = divmod(x, p)
                    y, ry = divmod(y, p)
                    out += ((rx + ry) % p) * mul
                    mul *= p
                row[b] = out
            t.append(row)
        self._add_table = t

    # ---- multiplicative structure ----

    def mul_poly(self, a: int, b: int) -> int:
        """Reference multiplication: polynomial product reduced mod modulus."""
        pa = _poly_trim(self.digits(a))
        pb = _poly_trim(self.digits(b))
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(pa, pb, self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        return self.from_digits(list(red) + [0] * (self.k - len(red)))

    def _build_log_tables(self):
        order = self.order
        # smallest primitive element by index
        fact = _prime_factors(order - 1)
        g = None
        for cand in range(1, order):
            if all(self._pow_naive(cand, (order - 1) // f) != 1 for f in fact):
                g = cand
                break
        assert g is not None
        exp = [1] * (2 * (order - 1))
        log = [0] * order
        acc = 1
        for i in range(order - 1):
            exp[i] = acc
            log[acc] = i
            acc = self.mul_poly(acc, g)
        assert acc == 1, "primitive element order mismatch"
        for i in range(order - 1, 2 * (order - 1)):
            exp[i] = exp[i - (order - 1)]
        self._exp = exp
        self._log = log
        if self.p != 2 and self.order <= _ADD_TABLE_MAX:
            self._build_add_table()

    def _pow_naive(self, a, e):
        out = 1
        b = a
        while e:
            if e & 1:
                out = self.mul_poly(out, b)
            b = self.mul_poly(b, b)
            e >>= 1
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._build_log_tables()
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._exp is None:
            self._build_log_tables()
        return self._exp[(self.order - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        if self._exp is None:
            self._build_log_tables()
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(p^i); i is reduced mod k."""
        i %= self.k
        if i == 0 or a == 0:
            return a
        return self.pow(a, self._pow_p[i] if self.order > 2 else 1)

    def is_square(self, a: int) -> bool:
        """Convention: 0 counts as a square; everything is in char 2."""
        if a == 0 or self.p == 2:
            return True
        if self._exp is None:
            self._build_log_tables()
        return self._log[a] % 2 == 0

    # ---- towers ----

    def _embedding_data(self, sub: "FiniteField"):
        if sub.p != self.p or self.k % sub.k != 0:
            raise ValueError(f"{sub} is not a subfield of {self}")
        data = self._embeddings.get(sub.order)
        if data is None:
            if sub.k == 1:
                root = None
                emb = list(range(sub.order))
            else:
                root = None
                for x in range(self.order):
                    acc = 0
                    for c in reversed(sub.modulus):
                        acc = self.add(self.mul(acc, x), c)
                    if acc == 0:
                        root = x
                        break
                assert root is not None, "subfield modulus has no root"
                powers = [1]
                for _ in range(sub.k - 1):
                    powers.append(self.mul(powers[-1], root))
                emb = []
                for a in range(sub.order):
                    img = 0
                    for d, pw in zip(sub.digits(a), powers):
                        img = self.add(img, self.scalar_mul(d, pw))
                    emb.append(img)
            section = {img: a for a, img in enumerate(emb)}
            assert len(section) == sub.order, "embedding is not injective"
            data = (root, emb, section)
            self._embeddings[sub.order] = data
        return data

    def embed(self, sub: "FiniteField", a: int) -> int:
        """Image of a in self under the canonical subfield embedding."""
        if sub is self:
            return a
        return self._embedding_data(sub)[1][a]

    def section(self, sub: "FiniteField", a: int) -> int:
        """Preimage in sub of an element lying in the embedded subfield."""
        if sub is self:
            return a
        sect = self._embedding_data(sub)[2]
        if a not in sect:
            raise ValueError(f"{a} is not in the image of {sub} in {self}")
        return sect[a]

    def in_subfield(self, sub: "FiniteField", a: int) -> bool:
        if sub is self:
            return True
        return a in self._embedding_data(sub)[2]

    def rel_trace(self, sub: "FiniteField", a: int) -> int:
        """Trace of self down to sub; the result is an element of sub."""
        m = self.k // sub.k
        acc = 0
        for j in range(m):
            acc = self.add(acc, self.frobenius(a, sub.k * j))
        return self.section(sub, acc)

    def rel_coords(self, sub: "FiniteField", a: int):
        """Coordinates of a over sub w.r.t. the power basis {g^j}, g = self.generator."""
        m = self.k // sub.k
        key = sub.order
        solver = self._coords_cache.get(key)
        if solver is None:
            solver = self._build_coords_solver(sub, m)
            self._coords_cache[key] = solver
        cols = solver(self.digits(a))
        out = []
        for j in range(m):
            out.append(sub.from_digits(cols[j * sub.k:(j + 1) * sub.k]))
        return tuple(out)

    def _build_coords_solver(self, sub, m):
        p, K = self.p, self.k
        cols = []
        gpow = 1
        for j in range(m):
            for t in range(sub.k):
                base = self.embed(sub, sub.from_digits([0] * t + [1]))
                cols.append(self.digits(self.mul(base, gpow)))
            gpow = self.mul(gpow, self.generator)
        # invert the K x K matrix whose columns are cols, over F_p
        aug = [[cols[j][i] for j in range(K)] + [1 if i == rr else 0 for rr in range(K)]
               for i in range(K)]
        r = 0
        for c in range(K):
            piv = next((i for i in range(r, K) if aug[i][c] % p), None)
            assert piv is not None, "power basis is degenerate"
            aug[r], aug[piv] = aug[piv], aug[r]
            ipv = pow(aug[r][c], p - 2, p)
            aug[r] = [(v * ipv) % p for v in aug[r]]
            for i in range(K):
                if i != r and aug[i][c] % p:
                    f = aug[i][c]
                    aug[i] = [(vi - f * vr) % p for vi, vr in zip(aug[i], aug[r])]
            r += 1
        inv = [row[K:] for row in aug]

        def solve(digits):
            return [sum(inv[i][j] * digits[j] for j in range(K)) % p
                    for i in range(K)]
        return solve


def _prime_factors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return sorted(out)


@lru_cache(maxsize=None)
def finite_field(p: int, k: int = 1) -> FiniteField:
    """Cached factory: the canonical F_{p^k} context."""
    return FiniteField(p, k)


@lru_cache(maxsize=None)
def field_of_order(q: int) -> FiniteField:
    """F_q for a prime power q."""
    n = q
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            k = 0
            while n > 1:
                if n % p:
                    raise ValueError(f"{q} is not a prime power")
                n //= p
                k += 1
            return finite_field(p, k)
        d += 1
    return finite_field(q, 1)
