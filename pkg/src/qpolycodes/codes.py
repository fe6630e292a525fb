"""Additive rank-metric codes inside an ambient matrix space.

A Code is an F_q-subspace of its ambient, held as a canonical RREF
basis of F_q-coordinate vectors.  Weight distributions are computed by
enumerating every codeword with the batched kernels, walking the
coefficient space of an F_p-spanning set so each codeword appears
exactly once.
"""

from __future__ import annotations

import json

import numpy as np

from .gfbatch import batch_matmul_mod_p, batch_rank, coefficient_block
from .lattice import Subspace
from .matrices import Matrix
from .spaces import ALT, FULL, HER, SYM, Ambient
from .util import check_enum_budget, chunks

_CHUNK = 1 << 16


class Code:
    """An additive code C in an ambient space X."""

    __slots__ = ("ambient", "coords", "_dist_cache")

    def __init__(self, ambient: Ambient, coord_rows):
        rows = [list(r) for r in coord_rows]
        for r in rows:
            if len(r) != ambient.dim:
                raise ValueError("coordinate length disagrees with the ambient")
        if rows:
            red, pivots = Matrix(ambient.base_field, rows).rref()
            kept = red.rows[: len(pivots)]
        else:
            kept = ()
        self.ambient = ambient
        self.coords = tuple(kept)
        self._dist_cache = None

    @classmethod
    def from_matrices(cls, ambient: Ambient, mats) -> "Code":
        return cls(ambient, [ambient.coords(m) for m in mats])

    @classmethod
    def zero(cls, ambient: Ambient) -> "Code":
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient: Ambient) -> "Code":
        d = ambient.dim
        return cls(ambient, [[1 if j == i else 0 for j in range(d)] for i in range(d)])

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def size(self) -> int:
        return self.ambient.q ** self.dim

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Code)
            and self.ambient == other.ambient
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.coords))

    def __repr__(self) -> str:
        return f"Code(dim={self.dim}, ambient={self.ambient!r})"

    def matrices(self) -> list[Matrix]:
        return [self.ambient.from_coords(c) for c in self.coords]

    def contains_coords(self, coords) -> bool:
        rows = [list(r) for r in self.coords] + [list(coords)]
        return Matrix(self.ambient.base_field, rows).rank() == self.dim

    def contains_matrix(self, mat: Matrix) -> bool:
        if not self.ambient.contains(mat):
            return False
        return self.contains_coords(self.ambient.coords(mat))

    def contains_code(self, other: "Code") -> bool:
        if other.ambient != self.ambient:
            return False
        return all(self.contains_coords(c) for c in other.coords)

    # ---------------- subspace arithmetic ----------------

    def _coord_space(self) -> Subspace:
        return Subspace(self.ambient.base_field, self.ambient.dim, self.coords)

    def add_code(self, other: "Code") -> "Code":
        self._require_same_ambient(other)
        return Code(self.ambient, list(self.coords) + list(other.coords))

    def intersect(self, other: "Code") -> "Code":
        self._require_same_ambient(other)
        met = self._coord_space().meet(other._coord_space())
        return Code(self.ambient, met.rows)

    def _require_same_ambient(self, other: "Code"):
        if other.ambient != self.ambient:
            raise ValueError("codes live in different ambient spaces")

    # ---------------- weights ----------------

    def _expanded_generators(self):
        """F_p-spanning matrices whose F_p-combinations enumerate C once."""
        amb = self.ambient
        bq = amb.base_field
        ef = amb.entry_field
        out = []
        for coord in self.coords:
            base_mat = amb.from_coords(coord)
            if bq.k == 1:
                out.append(base_mat)
                continue
            for j in range(bq.k):
                scalar = ef.embed(bq, bq.pow(bq.generator, j))
                out.append(base_mat.scale(scalar))
        return out

    def weight_distribution(self) -> dict[int, int]:
        """Counts of codewords by rank, computed by full enumeration."""
        if self._dist_cache is not None:
            return dict(self._dist_cache)
        amb = self.ambient
        ef = amb.entry_field
        p = ef.p
        gens = self._expanded_generators()
        kk = len(gens)
        total = p ** kk
        check_enum_budget(total, "codeword enumeration")
        if kk == 0:
            self._dist_cache = {0: 1}
            return {0: 1}
        digits_per_entry = ef.k
        flat = np.zeros((kk, amb.m * amb.n * digits_per_entry), dtype=np.uint8)
        for t, mat in enumerate(gens):
            col = 0
            for i in range(amb.m):
                for j in range(amb.n):
                    for dg in ef.digits(mat.rows[i][j]):
                        flat[t, col] = dg
                        col += 1
        powers = np.array([p ** j for j in range(digits_per_entry)], dtype=np.int64)
        counts: dict[int, int] = {}
        for lo, hi in chunks(total, _CHUNK):
            coeffs = coefficient_block(p, kk, lo, hi)
            prod = batch_matmul_mod_p(coeffs, flat, p)
            entries = prod.reshape(hi - lo, amb.m * amb.n, digits_per_entry)
            packed = (entries.astype(np.int64) * powers[None, None, :]).sum(axis=2)
            stack = packed.astype(np.uint8).reshape(hi - lo, amb.m, amb.n)
            ranks = batch_rank(stack, ef)
            for r, c in zip(*np.unique(ranks, return_counts=True)):
                counts[int(r)] = counts.get(int(r), 0) + int(c)
        assert sum(counts.values()) == self.size
        self._dist_cache = dict(counts)
        return counts

    def min_distance(self):
        """Smallest nonzero codeword rank, or None for the zero code."""
        if self.dim == 0:
            return None
        dist = self.weight_distribution()
        return min(r for r in dist if r > 0)

    def max_weight(self):
        if self.dim == 0:
            return None
        dist = self.weight_distribution()
        return max(r for r in dist if r > 0)

    # ---------------- duals ----------------

    def dual(self) -> "Code":
        """Dual inside the same ambient w.r.t. the ambient's form."""
        amb = self.ambient
        gram = Matrix(amb.base_field, amb.form_gram())
        if self.dim == 0:
            return Code.full(amb)
        cmat = Matrix(amb.base_field, [list(r) for r in self.coords])
        kern = (cmat @ gram).kernel_basis()
        return Code(amb, kern)

    def delsarte_dual(self) -> "Code":
        """Dual inside the full matrix space w.r.t. the trace pairing."""
        return self.embed_full().dual()

    def embed_full(self) -> "Code":
        """The same matrices viewed in the unrestricted ambient."""
        full = self.ambient.full_ambient()
        if self.ambient.kind == FULL:
            return self
        return Code(full, [full.coords(m) for m in self.matrices()])

    def restricted_to(self, ambient: Ambient) -> "Code":
        """Reinterpret the matrices inside a smaller ambient space."""
        return Code.from_matrices(ambient, self.matrices())

    # ---------------- shortenings and punctures ----------------

    def shorten_columns(self, sub: Subspace) -> "Code":
        """Subcode of matrices whose column space lies inside sub."""
        amb = self.ambient
        if sub.field is not amb.entry_field or sub.n != amb.m:
            raise ValueError("subspace does not live in the column space")
        return self._shorten(sub, rows_side=False)

    def shorten_rows(self, sub: Subspace) -> "Code":
        """Subcode of matrices whose row space lies inside sub."""
        amb = self.ambient
        if sub.field is not amb.entry_field or sub.n != amb.n:
            raise ValueError("subspace does not live in the row space")
        return self._shorten(sub, rows_side=True)

    def _shorten(self, sub: Subspace, rows_side: bool) -> "Code":
        amb = self.ambient
        comp = sub.complement()
        if comp.dim == 0 or self.dim == 0:
            return self
        ymat = comp.basis_matrix()
        ef, bf = amb.entry_field, amb.base_field
        rows = []
        for mat in self.matrices():
            prod = mat @ ymat.transpose() if rows_side else ymat @ mat
            flat = []
            for prow in prod.rows:
                for entry in prow:
                    if amb.ell == 1:
                        flat.append(entry)
                    else:
                        flat.extend(ef.rel_coords(bf, entry))
            rows.append(flat)
        constraint = Matrix(bf, rows).transpose()
        kern = constraint.kernel_basis()
        base = self.matrices()
        out = []
        for vec in kern:
            acc = Matrix.zero(ef, amb.m, amb.n)
            for c, mat in zip(vec, base):
                if c:
                    acc = acc + mat.scale(ef.embed(bf, c))
            out.append(acc)
        return Code.from_matrices(amb, out)

    def puncture_rows(self, u: int) -> "Code":
        """Delete the first u rows of every codeword."""
        amb = self.ambient
        if not 0 <= u < amb.m:
            raise ValueError("row puncture count out of range")
        target = Ambient.full_space(amb.m - u, amb.n, amb.q, amb.ell)
        mats = [
            Matrix(amb.entry_field, [list(r) for r in mat.rows[u:]]) for mat in self.matrices()
        ]
        return Code.from_matrices(target, mats)

    def corner_submatrix_code(self, u: int) -> "Code":
        """Restrict every codeword to its top-left u x u corner.

        Alternating, symmetric and Hermitian shapes are preserved, so the
        result lives in the same kind of ambient of size u.
        """
        amb = self.ambient
        if amb.kind == FULL:
            raise ValueError("corner restriction requires a square restricted kind")
        if not 1 <= u <= amb.n:
            raise ValueError("corner size out of range")
        target = Ambient(amb.kind, u, u, amb.q, amb.ell)
        mats = [
            Matrix(amb.entry_field, [list(r[:u]) for r in mat.rows[:u]])
            for mat in self.matrices()
        ]
        return Code.from_matrices(target, mats)

    # ---------------- symmetry transports ----------------

    def congruence(self, pmat: Matrix, scale: int = 1) -> "Code":
        """Image under M -> scale * P M sigma(P)^t, an ambient isometry."""
        amb = self.ambient
        out = []
        for mat in self.matrices():
            img = (pmat @ mat) @ amb.sigma_transpose(pmat)
            if scale != 1:
                img = img.scale(amb.entry_field.embed(amb.base_field, scale))
            out.append(img)
        return Code.from_matrices(amb, out)

    def transform(self, left: Matrix, right: Matrix, frob: int = 0) -> "Code":
        """Image under M -> L frob(M) R in the full ambient."""
        amb = self.ambient
        out = []
        for mat in self.matrices():
            mm = mat.map_entries(lambda a: amb.entry_field.frobenius(a, frob)) if frob else mat
            out.append((left @ mm) @ right)
        target = Ambient.full_space(left.m, right.n, amb.q, amb.ell)
        return Code.from_matrices(target, out)

    # ---------------- serialization ----------------

    def to_json(self) -> str:
        amb = self.ambient
        payload = {
            "kind": amb.kind,
            "m": amb.m,
            "n": amb.n,
            "q": amb.q,
            "ell": amb.ell,
            "generators": [[list(row) for row in mat.rows] for mat in self.matrices()],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Code":
        payload = json.loads(text)
        amb = Ambient(
            payload["kind"], payload["m"], payload["n"], payload["q"], payload["ell"]
        )
        mats = [Matrix(amb.entry_field, rows) for rows in payload["generators"]]
        return cls.from_matrices(amb, mats)
