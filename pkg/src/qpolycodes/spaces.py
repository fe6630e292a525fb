"""Ambient matrix spaces: alternating, symmetric, Hermitian, full.

An Ambient fixes the ground field F_q, the entry field F_{q^ell}
(ell = 2 exactly for Hermitian spaces), the matrix shape, a canonical
F_q-basis, and the bilinear form used to take duals inside the space.

Entries of alternating and symmetric matrices lie in F_q itself;
Hermitian matrices have entries in F_{q^2} and satisfy conj(M)^t = M,
where conj is the entrywise q-power map.  Coordinates are always taken
over F_q, so the F_q-dimensions are n(n-1)/2, n(n+1)/2, n^2 and
ell*m*n respectively.

The dual-defining form on each space is F_q-bilinear, symmetric and
nondegenerate:

  alternating:   sum over i<j of a_ij b_ij
  symmetric:     trace(A B^t) for odd q; sum over i<=j of a_ij b_ij
                 for even q (the trace form degenerates there, its
                 radical being the alternating matrices)
  Hermitian:     trace(A B^t), which lands in F_q automatically
  full:          trace form, pushed down to F_q by the relative trace
                 when entries live in F_{q^2}
"""

from __future__ import annotations

from .fields import FiniteField, field_of_order
from .lattice import Lattice, Subspace, lattice
from .matrices import Matrix

ALT = "alternating"
SYM = "symmetric"
HER = "hermitian"
FULL = "full"

KINDS = (ALT, SYM, HER, FULL)


class Ambient:
    """One of the four supported matrix spaces, with its form and basis."""

    def __init__(self, kind: str, m: int, n: int, q: int, ell: int):
        if kind not in KINDS:
            raise ValueError(f"unknown ambient kind {kind!r}")
        self.kind = kind
        self.m = m
        self.n = n
        self.q = q
        self.ell = ell
        self.base_field = field_of_order(q)
        self.entry_field = field_of_order(q ** ell)
        self.p = self.base_field.p
        # exponent e with q = p^e; the conjugation x -> x^q is frobenius(x, e)
        self.conj_power = self.base_field.k
        self._basis: list[Matrix] | None = None
        self._form_gram: list[list[int]] | None = None

    # ---------------- constructors ----------------

    @classmethod
    def alternating(cls, n: int, q: int) -> "Ambient":
        return cls(ALT, n, n, q, 1)

    @classmethod
    def symmetric(cls, n: int, q: int) -> "Ambient":
        return cls(SYM, n, n, q, 1)

    @classmethod
    def hermitian(cls, n: int, q: int) -> "Ambient":
        return cls(HER, n, n, q, 2)

    @classmethod
    def full_space(cls, m: int, n: int, q: int, ell: int = 1) -> "Ambient":
        return cls(FULL, m, n, q, ell)

    def full_ambient(self) -> "Ambient":
        """The unrestricted space with the same shape and entry field."""
        return Ambient.full_space(self.m, self.n, self.q, self.ell)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ambient)
            and (self.kind, self.m, self.n, self.q, self.ell)
            == (other.kind, other.m, other.n, other.q, other.ell)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.m, self.n, self.q, self.ell))

    def __repr__(self) -> str:
        if self.kind == FULL:
            return f"Ambient(full, {self.m}x{self.n}, q={self.q}, ell={self.ell})"
        return f"Ambient({self.kind}, n={self.n}, q={self.q})"

    # ---------------- dimensions ----------------

    @property
    def dim(self) -> int:
        n = self.n
        if self.kind == ALT:
            return n * (n - 1) // 2
        if self.kind == SYM:
            return n * (n + 1) // 2
        if self.kind == HER:
            return n * n
        return self.ell * self.m * self.n

    def conj(self, a: int) -> int:
        """The q-power map on the entry field."""
        return self.entry_field.frobenius(a, self.conj_power)

    def sigma_transpose(self, mat: Matrix) -> Matrix:
        if self.ell == 1:
            return mat.transpose()
        return mat.conj_transpose(self.conj_power)

    def contains(self, mat: Matrix) -> bool:
        if mat.field is not self.entry_field or (mat.m, mat.n) != (self.m, self.n):
            return False
        if self.kind == FULL:
            return True
        if self.kind == ALT:
            for i in range(self.n):
                if mat.rows[i][i] != 0:
                    return False
            return mat.transpose() == mat.map_entries(self.entry_field.neg)
        if self.kind == SYM:
            return mat.transpose() == mat
        return self.sigma_transpose(mat) == mat

    # ---------------- coordinates ----------------

    def coords(self, mat: Matrix) -> tuple:
        """F_q-coordinate vector of a member matrix."""
        if not self.contains(mat):
            raise ValueError("matrix does not lie in this ambient space")
        ef, bf = self.entry_field, self.base_field
        n = self.n
        out = []
        if self.kind == ALT:
            for i in range(n):
                out.extend(mat.rows[i][i + 1 :])
        elif self.kind == SYM:
            for i in range(n):
                out.append(mat.rows[i][i])
            for i in range(n):
                out.extend(mat.rows[i][i + 1 :])
        elif self.kind == HER:
            for i in range(n):
                out.append(ef.section(bf, mat.rows[i][i]))
            for i in range(n):
                for j in range(i + 1, n):
                    out.extend(ef.rel_coords(bf, mat.rows[i][j]))
        else:
            for i in range(self.m):
                for j in range(self.n):
                    if self.ell == 1:
                        out.append(mat.rows[i][j])
                    else:
                        out.extend(ef.rel_coords(bf, mat.rows[i][j]))
        return tuple(out)

    def from_coords(self, coords) -> Matrix:
        """Member matrix with the given F_q coordinates."""
        coords = list(coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        ef, bf = self.entry_field, self.base_field
        gen = ef.generator
        rows = [[0] * self.n for _ in range(self.m)]
        pos = 0
        if self.kind == ALT:
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    c = coords[pos]
                    pos += 1
                    rows[i][j] = c
                    rows[j][i] = ef.neg(c)
        elif self.kind == SYM:
            for i in range(self.n):
                rows[i][i] = coords[pos]
                pos += 1
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    c = coords[pos]
                    pos += 1
                    rows[i][j] = c
                    rows[j][i] = c
        elif self.kind == HER:
            for i in range(self.n):
                rows[i][i] = ef.embed(bf, coords[pos])
                pos += 1
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    c0 = ef.embed(bf, coords[pos])
                    c1 = ef.embed(bf, coords[pos + 1])
                    pos += 2
                    val = ef.add(c0, ef.mul(c1, gen))
                    rows[i][j] = val
                    rows[j][i] = self.conj(val)
        else:
            if self.ell == 1:
                for i in range(self.m):
                    for j in range(self.n):
                        rows[i][j] = coords[pos]
                        pos += 1
            else:
                for i in range(self.m):
                    for j in range(self.n):
                        c0 = ef.embed(bf, coords[pos])
                        c1 = ef.embed(bf, coords[pos + 1])
                        pos += 2
                        rows[i][j] = ef.add(c0, ef.mul(c1, gen))
        mat = Matrix(ef, rows)
        assert self.contains(mat)
        return mat

    def basis(self) -> list[Matrix]:
        """Canonical F_q-basis, the preimages of the unit coordinate vectors."""
        if self._basis is None:
            d = self.dim
            self._basis = [
                self.from_coords([1 if t == s else 0 for t in range(d)]) for s in range(d)
            ]
        return self._basis

    # ---------------- the dual-defining form ----------------

    def form(self, a: Matrix, b: Matrix) -> int:
        """Value of the ambient's bilinear form, as an element of F_q."""
        ef, bf = self.entry_field, self.base_field
        n = self.n
        if self.kind == ALT:
            acc = 0
            for i in range(n):
                for j in range(i + 1, n):
                    acc = ef.add(acc, ef.mul(a.rows[i][j], b.rows[i][j]))
            return acc
        if self.kind == SYM:
            if self.q % 2 == 1:
                acc = 0
                for i in range(n):
                    for j in range(n):
                        acc = ef.add(acc, ef.mul(a.rows[i][j], b.rows[i][j]))
                return acc
            acc = 0
            for i in range(n):
                for j in range(i, n):
                    acc = ef.add(acc, ef.mul(a.rows[i][j], b.rows[i][j]))
            return acc
        if self.kind == HER:
            acc = 0
            for i in range(n):
                for j in range(n):
                    acc = ef.add(acc, ef.mul(a.rows[i][j], b.rows[i][j]))
            return ef.section(bf, acc)
        acc = 0
        for i in range(self.m):
            for j in range(self.n):
                acc = ef.add(acc, ef.mul(a.rows[i][j], b.rows[i][j]))
        if self.ell == 1:
            return acc
        return ef.rel_trace(bf, acc)

    def form_gram(self) -> list[list[int]]:
        """Gram matrix of the form on the canonical basis, over F_q."""
        if self._form_gram is None:
            bas = self.basis()
            self._form_gram = [[self.form(x, y) for y in bas] for x in bas]
        return self._form_gram

    # ---------------- lattices ----------------

    def column_lattice(self) -> Lattice:
        return lattice(self.entry_field, self.m)

    def row_lattice(self) -> Lattice:
        return lattice(self.entry_field, self.n)

    # ---------------- rank bounds ----------------

    @property
    def max_rank(self) -> int:
        if self.kind == ALT:
            return 2 * (self.n // 2)
        if self.kind == FULL:
            return min(self.m, self.n)
        return self.n

    def max_rank_shortened_dual(self, u: int) -> int:
        """Largest rank in the dual of the column shortening by a u-space."""
        if u <= self.n // 2:
            return self.max_rank
        return 2 * (self.n - u)

    # ---------------- shortenings ----------------

    def shortened_dim(self, u: int) -> int:
        """dim of the column shortening {M : colsp(M) within a u-space}."""
        if self.kind == ALT:
            return u * (u - 1) // 2
        if self.kind == SYM:
            return u * (u + 1) // 2
        if self.kind == HER:
            return u * u
        return self.ell * u * self.n

    def shortened_dual_dim(self, u: int) -> int:
        val = self.dim - self.shortened_dim(u)
        n = self.n
        if self.kind == ALT:
            assert val == (n - u) * (n + u - 1) // 2
        elif self.kind == SYM:
            assert val == (n - u) * (n + u + 1) // 2
        elif self.kind == HER:
            assert val == (n - u) * (n + u)
        return val

    def shortened_space_coords(self, sub: Subspace) -> tuple:
        """Canonical coordinate basis of {M in X : colsp(M) <= sub}.

        Works by solving Y M = 0 where the rows of Y span the standard-dot
        complement of sub inside the column space.
        """
        if sub.field is not self.entry_field or sub.n != self.m:
            raise ValueError("subspace does not live in the column space")
        comp = sub.complement()
        bas = self.basis()
        if comp.dim == 0:
            rows = [self.coords(b) for b in bas]
            red, _ = Matrix(self.base_field, [list(r) for r in rows]).rref()
            return tuple(red.rows[: len(rows)])
        ymat = comp.basis_matrix()
        ef, bf = self.entry_field, self.base_field
        columns = []
        for b in bas:
            prod = ymat @ b
            flat = []
            for row in prod.rows:
                for entry in row:
                    if self.ell == 1:
                        flat.append(entry)
                    else:
                        flat.extend(ef.rel_coords(bf, entry))
            columns.append(flat)
        constraint = Matrix(bf, [list(col) for col in columns]).transpose()
        kern = constraint.kernel_basis()
        return kern

    def shortened_space_matrices(self, sub: Subspace) -> list[Matrix]:
        return [self.from_coords(c) for c in self.shortened_space_coords(sub)]
