"""Small dense matrices over a FiniteField, with exact row reduction.

Entries are field element ints; rows are stored as tuples so matrices are
hashable.  Everything here is scalar Python and meant for small systems;
bulk rank work lives in gfbatch.
"""

from __future__ import annotations

from .fields import FiniteField


class Matrix:
    __slots__ = ("field", "rows", "m", "n")

    def __init__(self, field: FiniteField, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        assert all(len(r) == self.n for r in self.rows), "ragged rows"

    @classmethod
    def zero(cls, field, m, n):
        return cls(field, [(0,) * n] * m)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [tuple(1 if i == j else 0 for j in range(n))
                           for i in range(n)])

    def __repr__(self):
        return f"Matrix({self.field!r}, {list(map(list, self.rows))})"

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field is other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((id(self.field), self.rows))

    def is_zero(self):
        return all(all(e == 0 for e in r) for r in self.rows)

    def __add__(self, other):
        F = self.field
        return Matrix(F, [[F.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        F = self.field
        return Matrix(F, [[F.sub(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        F = self.field
        return Matrix(F, [[F.neg(a) for a in r] for r in self.rows])

    def scale(self, c: int) -> "Matrix":
        F = self.field
        return Matrix(F, [[F.mul(c, a) for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        F = self.field
        assert self.n == other.m, "shape mismatch"
        bt = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in bt:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows))) if self.rows else self

    def map_entries(self, fn) -> "Matrix":
        return Matrix(self.field, [[fn(a) for a in r] for r in self.rows])

    def conj_transpose(self, frob_i: int) -> "Matrix":
        """(M^sigma)^t with sigma = entrywise p^frob_i power."""
        F = self.field
        return Matrix(F, [[F.frobenius(a, frob_i) for a in col]
                          for col in zip(*self.rows)])

    def trace(self) -> int:
        F = self.field
        acc = 0
        for i in range(min(self.m, self.n)):
            acc = F.add(acc, self.rows[i][i])
        return acc

    def row_vectors(self):
        return list(self.rows)

    # ---- elimination ----

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column tuple)."""
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.n):
            piv = next((i for i in range(r, self.m) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            ipv = F.inv(rows[r][c])
            rows[r] = [F.mul(ipv, v) for v in rows[r]]
            for i in range(self.m):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [F.sub(vi, F.mul(f, vr))
                               for vi, vr in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.m:
                break
        return Matrix(F, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis (list of row tuples) of {v : self @ v^t = 0}, in RREF."""
        F = self.field
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.n) if c not in pivset]
        basis = []
        for fc in free:
            v = [0] * self.n
            v[fc] = 1
            for r_i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[r_i][fc])
            basis.append(tuple(v))
        if not basis:
            return []
        return Matrix(F, basis).rref()[0].rows[: len(basis)]
