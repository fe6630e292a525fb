"""The lattice of subspaces of F_Q^n.

Subspaces are identified by the canonical reduced row echelon basis of
their row representation.  The full lattice is enumerated once, in a
deterministic order (by dimension, then pivot pattern, then free-entry
digits), and cached on the Lattice object together with complement,
join and cover structure for batched rank-function work.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .fields import FiniteField
from .gfbatch import batch_rref, coefficient_block, field_tables, rref_keys
from .matrices import Matrix
from .util import LATTICE_BUDGET, BudgetError


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


class Subspace:
    """A subspace of F_Q^n with a canonical RREF basis."""

    __slots__ = ("field", "n", "rows", "dim")

    def __init__(self, field: FiniteField, n: int, rows):
        mat = Matrix(field, [list(r) for r in rows] or [[0] * n])
        if mat.n != n:
            raise ValueError("basis width disagrees with ambient dimension")
        red, pivots = mat.rref()
        self.field = field
        self.n = n
        self.dim = len(pivots)
        self.rows = red.rows[: self.dim]

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, [])

    @classmethod
    def full(cls, field: FiniteField, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n).rows)

    def key(self) -> bytes:
        return bytes([self.dim]) + bytes(x for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field is other.field
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.n, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n}, q={self.field.order})"

    def contains_vector(self, vec) -> bool:
        stacked = Matrix(self.field, [list(r) for r in self.rows] + [list(vec)])
        return stacked.rank() == self.dim

    def contains(self, other: "Subspace") -> bool:
        rows = [list(r) for r in self.rows] + [list(r) for r in other.rows]
        return Matrix(self.field, rows).rank() == self.dim

    def sum(self, other: "Subspace") -> "Subspace":
        rows = [list(r) for r in self.rows] + [list(r) for r in other.rows]
        return Subspace(self.field, self.n, rows)

    def complement(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        if self.dim == 0:
            return Subspace.full(self.field, self.n)
        mat = Matrix(self.field, [list(r) for r in self.rows])
        return Subspace(self.field, self.n, mat.kernel_basis())

    def meet(self, other: "Subspace") -> "Subspace":
        return self.complement().sum(other.complement()).complement()

    def basis_matrix(self) -> Matrix:
        if self.dim == 0:
            return Matrix.zero(self.field, 1, self.n)
        return Matrix(self.field, [list(r) for r in self.rows])

    def vectors(self):
        """All Q^dim member vectors, as tuples, in coefficient order."""
        q = self.field.order
        out = []
        for t in range(q ** self.dim):
            digits = []
            val = t
            for _ in range(self.dim):
                digits.append(val % q)
                val //= q
            vec = [0] * self.n
            for c, row in zip(digits, self.rows):
                if c:
                    for j in range(self.n):
                        vec[j] = self.field.add(vec[j], self.field.mul(c, row[j]))
            out.append(tuple(vec))
        return out


def _pattern_subspaces(field: FiniteField, n: int, pivots: tuple) -> np.ndarray:
    """All RREF matrices with the given pivot columns, as a uint8 stack."""
    d = len(pivots)
    free_cells = []
    for r, pc in enumerate(pivots):
        for c in range(pc + 1, n):
            if c not in pivots:
                free_cells.append((r, c))
    q = field.order
    count = q ** len(free_cells)
    stack = np.zeros((count, d, n), dtype=np.uint8)
    for r, pc in enumerate(pivots):
        stack[:, r, pc] = 1
    if free_cells:
        digits = coefficient_block(q, len(free_cells), 0, count)
        for idx, (r, c) in enumerate(free_cells):
            stack[:, r, c] = digits[:, idx]
    return stack


class Lattice:
    """All subspaces of F_Q^n with index-based structure tables."""

    def __init__(self, field: FiniteField, n: int):
        total = sum(gaussian_binomial(n, d, field.order) for d in range(n + 1))
        if total > LATTICE_BUDGET:
            raise BudgetError(
                f"subspace lattice of F_{field.order}^{n} has {total} elements, "
                f"budget is {LATTICE_BUDGET}"
            )
        self.field = field
        self.n = n
        self.size = total
        bases = []           # list of uint8 (d, n) arrays, padded later
        dims = []
        for d in range(n + 1):
            for pivots in combinations(range(n), d):
                stack = _pattern_subspaces(field, n, pivots)
                for i in range(stack.shape[0]):
                    bases.append(stack[i])
                    dims.append(d)
        assert len(bases) == total
        self.dims = np.array(dims, dtype=np.int64)
        padded = np.zeros((total, n, n), dtype=np.uint8)
        for i, b in enumerate(bases):
            if b.shape[0]:
                padded[i, : b.shape[0]] = b
        self.bases = padded
        self._index: dict[bytes, int] = {}
        for i in range(total):
            self._index[self._key_of(i)] = i
        self.by_dim = [np.nonzero(self.dims == d)[0] for d in range(n + 1)]
        self._complement: np.ndarray | None = None
        self._covers: tuple[np.ndarray, np.ndarray] | None = None
        self._subspaces: dict[int, Subspace] = {}

    def _key_of(self, i: int) -> bytes:
        d = int(self.dims[i])
        return bytes([d]) + self.bases[i, :d].tobytes()

    def index_of(self, sub: Subspace) -> int:
        if sub.field is not self.field or sub.n != self.n:
            raise ValueError("subspace belongs to a different ambient space")
        return self._index[sub.key()]

    def index_of_rows(self, rows) -> int:
        return self.index_of(Subspace(self.field, self.n, rows))

    def subspace(self, i: int) -> Subspace:
        sub = self._subspaces.get(i)
        if sub is None:
            d = int(self.dims[i])
            sub = Subspace(self.field, self.n, self.bases[i, :d].tolist())
            self._subspaces[i] = sub
        return sub

    @property
    def zero_index(self) -> int:
        return int(self.by_dim[0][0])

    @property
    def full_index(self) -> int:
        return int(self.by_dim[self.n][0])

    def complement_perm(self) -> np.ndarray:
        """Index permutation sending each subspace to its dot-product perp."""
        if self._complement is None:
            perm = np.empty(self.size, dtype=np.int64)
            for i in range(self.size):
                perm[i] = self.index_of(self.subspace(i).complement())
            assert np.array_equal(perm[perm], np.arange(self.size))
            self._complement = perm
        return self._complement

    def frobenius_perm(self, power: int) -> np.ndarray:
        """Index permutation applying x -> x^(p^power) entrywise to bases."""
        perm = np.empty(self.size, dtype=np.int64)
        for i in range(self.size):
            d = int(self.dims[i])
            rows = [
                [self.field.frobenius(int(x), power) for x in row]
                for row in self.bases[i, :d].tolist()
            ]
            perm[i] = self.index_of_rows(rows)
        return perm

    def join_indices(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Indices of pairwise sums U + V for index arrays left, right."""
        n = self.n
        count = len(left)
        stacked = np.zeros((count, 2 * n, n), dtype=np.uint8)
        stacked[:, :n] = self.bases[left]
        stacked[:, n:] = self.bases[right]
        ranks = batch_rref(stacked, self.field)
        keys = rref_keys(stacked[:, :n].copy(), ranks)
        return np.array([self._index[k] for k in keys], dtype=np.int64)

    def meet_indices(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        comp = self.complement_perm()
        return comp[self.join_indices(comp[left], comp[right])]

    def covers(self) -> tuple[np.ndarray, np.ndarray]:
        """Arrays (child, parent) listing all covering pairs U < V, dim V = dim U + 1.

        Children of each V are computed as kernels of nonzero functionals
        on V, batched per dimension.
        """
        if self._covers is not None:
            return self._covers
        q = self.field.order
        children: list[int] = []
        parents: list[int] = []
        for d in range(1, self.n + 1):
            parents_idx = self.by_dim[d]
            if len(parents_idx) == 0:
                continue
            # normalized functionals on F_q^d: first nonzero coefficient 1
            funcs = []
            for t in range(q ** d):
                digits = coefficient_block(q, d, t, t + 1)[0]
                nz = np.nonzero(digits)[0]
                if len(nz) and digits[nz[0]] == 1:
                    funcs.append(digits)
            kernels = []
            for func in funcs:
                mat = Matrix(self.field, [[int(x) for x in func]])
                kernels.append(np.array(mat.kernel_basis(), dtype=np.uint8))
            par_bases = self.bases[parents_idx][:, :d, :]
            for ker in kernels:
                # child basis = ker @ parent_basis over F_q
                cnt = len(parents_idx)
                prod = np.zeros((cnt, d - 1, self.n), dtype=np.uint8) if d > 1 else np.zeros(
                    (cnt, 1, self.n), dtype=np.uint8
                )
                if d > 1:
                    if self.field.order == 2:
                        acc = np.zeros((cnt, d - 1, self.n), dtype=np.uint8)
                        for s in range(d):
                            acc ^= ker[:, s][None, :, None] * par_bases[:, s][:, None, :]
                        prod = acc
                    else:
                        tab = field_tables(self.field)
                        acc = np.zeros((cnt, d - 1, self.n), dtype=np.uint8)
                        for s in range(d):
                            term = tab.mul[ker[None, :, s, None], par_bases[:, s][:, None, :]]
                            acc = tab.add[acc, term]
                        prod = acc
                work = prod.copy()
                ranks = batch_rref(work, self.field)
                padded = np.zeros((cnt, self.n, self.n), dtype=np.uint8)
                padded[:, : work.shape[1]] = work
                keys = rref_keys(padded, ranks)
                for pi, key in zip(parents_idx, keys):
                    children.append(self._index[key])
                    parents.append(int(pi))
        pairs = sorted(set(zip(children, parents)))
        child_arr = np.array([c for c, _ in pairs], dtype=np.int64)
        parent_arr = np.array([p for _, p in pairs], dtype=np.int64)
        self._covers = (child_arr, parent_arr)
        return self._covers


_lattice_cache: dict[tuple[int, int], Lattice] = {}


def lattice(field: FiniteField, n: int) -> Lattice:
    key = (field.order, n)
    lat = _lattice_cache.get(key)
    if lat is None:
        lat = Lattice(field, n)
        _lattice_cache[key] = lat
    return lat
