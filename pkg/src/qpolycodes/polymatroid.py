"""q-polymatroids of rank-metric codes on subspace lattices.

A QPolymatroid stores the full rank-function table of a (Q, r)-polymatroid
as a numpy array indexed by a Lattice.  The rank function built from a
code is rho(U) = dim C - dim C(U_perp) where C(W) is the subcode of
matrices whose column space (or row space) lies inside W, dimensions are
taken over the prime ambient base field F_q, and U_perp is the orthogonal
complement under the standard dot product.

Shortening dimensions dim C(W) are computed for every lattice member at
once: each W contributes the constraint Y M = 0 with Y a matrix whose
kernel is W, the constraints are stacked per code generator and ranked in
batches.  rank_profile streams the same computation one dimension class
at a time without materializing a Lattice, which keeps large ground
spaces inside the budget when only per-dimension value counts are needed.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from .gfbatch import batch_rank, field_tables
from .lattice import Lattice, Subspace, _pattern_subspaces, gaussian_binomial
from .util import LATTICE_BUDGET, PAIR_BUDGET, BudgetError, chunks

_CHUNK = 1 << 14


def _rel_coords_table(ef, bf) -> np.ndarray:
    """Lookup table of base-field coordinates for every entry-field value."""
    ell = ef.k // bf.k
    out = np.zeros((ef.order, ell), dtype=np.uint8)
    for a in range(ef.order):
        out[a] = ef.rel_coords(bf, a) if ell > 1 else (a,)
    return out


def _gf_matmul_stack(stack: np.ndarray, mat: np.ndarray, field) -> np.ndarray:
    """Product of a (N, a, b) stack with a (b, c) matrix over a small field."""
    tab = field_tables(field)
    n_stack, a, b = stack.shape
    c = mat.shape[1]
    acc = np.zeros((n_stack, a, c), dtype=np.uint8)
    for i in range(b):
        acc = tab.add[acc, tab.mul[stack[:, :, i, None], mat[None, None, i, :]]]
    return acc


def _code_generator_arrays(code, transpose: bool) -> list[np.ndarray]:
    mats = code.matrices()
    out = []
    for mat in mats:
        arr = np.array([[int(x) for x in row] for row in mat.rows], dtype=np.uint8)
        out.append(arr.T.copy() if transpose else arr)
    return out


def _constraint_dims(gens, k, y_stack, ef, bf, rel) -> np.ndarray:
    """dim of {c in F_q^k : Y (sum c_t M_t) = 0} for every Y in the stack."""
    count, rows_y, m = y_stack.shape
    if rows_y == 0 or k == 0:
        return np.full(count, k, dtype=np.int64)
    ell = rel.shape[1]
    ncols = gens[0].shape[1]
    width = rows_y * ncols * ell
    system = np.empty((count, k, width), dtype=np.uint8)
    for t, gen in enumerate(gens):
        prod = _gf_matmul_stack(y_stack, gen, ef)
        system[:, t, :] = rel[prod].reshape(count, width)
    return k - batch_rank(system, bf)


def shortening_dims(code, lat: Lattice, side: str = "columns") -> np.ndarray:
    """dim C(W) for every lattice index, W read as a column or row support."""
    amb = code.ambient
    ef, bf = amb.entry_field, amb.base_field
    if side not in ("columns", "rows"):
        raise ValueError("side must be 'columns' or 'rows'")
    transpose = side == "rows"
    expected = amb.n if transpose else amb.m
    if lat.field is not ef or lat.n != expected:
        raise ValueError("lattice does not match the chosen matrix support")
    k = code.dim
    out = np.empty(lat.size, dtype=np.int64)
    if k == 0:
        out[:] = 0
        return out
    gens = _code_generator_arrays(code, transpose)
    rel = _rel_coords_table(ef, bf)
    comp = lat.complement_perm()
    m = lat.n
    for w in range(m + 1):
        idxs = lat.by_dim[w]
        if w == m:
            out[idxs] = k
            continue
        for lo, hi in chunks(len(idxs), _CHUNK):
            block = idxs[lo:hi]
            y_stack = lat.bases[comp[block]][:, : m - w, :]
            out[block] = _constraint_dims(gens, k, y_stack, ef, bf, rel)
    return out


def _annihilators_for_pattern(bases: np.ndarray, pivots: tuple, m: int, field):
    """Matrices whose kernels are the given same-pattern subspaces."""
    tab = field_tables(field)
    count, w, _ = bases.shape
    nonpivots = [c for c in range(m) if c not in pivots]
    y_stack = np.zeros((count, m - w, m), dtype=np.uint8)
    for r, col in enumerate(nonpivots):
        y_stack[:, r, col] = 1
        for i, piv in enumerate(pivots):
            y_stack[:, r, piv] = tab.neg[bases[:, i, col]]
    return y_stack


def rank_profile(code, side: str = "columns") -> dict[int, dict[int, int]]:
    """Counts of rank-function values per ground dimension, streamed.

    Returns {u: {value: count}} over all u-dimensional subspaces of the
    ground space, equal to the distribution of QPolymatroid rho values but
    computed without building the lattice index.
    """
    amb = code.ambient
    ef, bf = amb.entry_field, amb.base_field
    transpose = side == "rows"
    m = amb.n if transpose else amb.m
    total = sum(gaussian_binomial(m, w, ef.order) for w in range(m + 1))
    if total > LATTICE_BUDGET:
        raise BudgetError(
            f"ground space F_{ef.order}^{m} has {total} subspaces, "
            f"budget is {LATTICE_BUDGET}"
        )
    k = code.dim
    gens = _code_generator_arrays(code, transpose)
    rel = _rel_coords_table(ef, bf)
    profile: dict[int, dict[int, int]] = {}
    for w in range(m + 1):
        u = m - w
        counts: dict[int, int] = {}
        for pivots in combinations(range(m), w):
            stack = _pattern_subspaces(ef, m, pivots)
            for lo, hi in chunks(stack.shape[0], _CHUNK):
                block = stack[lo:hi]
                y_stack = _annihilators_for_pattern(block, pivots, m, ef)
                dims = _constraint_dims(gens, k, y_stack, ef, bf, rel)
                values, reps = np.unique(k - dims, return_counts=True)
                for v, c in zip(values, reps):
                    counts[int(v)] = counts.get(int(v), 0) + int(c)
        profile[u] = counts
    return profile


class QPolymatroid:
    """A (Q, r)-polymatroid held as a value table over a subspace lattice."""

    __slots__ = ("lattice", "rho", "r")

    def __init__(self, lattice_obj: Lattice, rho, r: int):
        arr = np.asarray(rho, dtype=np.int64)
        if arr.shape != (lattice_obj.size,):
            raise ValueError("rank table length disagrees with the lattice")
        self.lattice = lattice_obj
        self.rho = arr
        self.r = r

    @classmethod
    def from_code_columns(cls, code) -> "QPolymatroid":
        amb = code.ambient
        lat = amb.column_lattice()
        dims = shortening_dims(code, lat, side="columns")
        comp = lat.complement_perm()
        return cls(lat, code.dim - dims[comp], amb.ell * amb.n)

    @classmethod
    def from_code_rows(cls, code) -> "QPolymatroid":
        amb = code.ambient
        lat = amb.row_lattice()
        dims = shortening_dims(code, lat, side="rows")
        comp = lat.complement_perm()
        return cls(lat, code.dim - dims[comp], amb.ell * amb.m)

    # ---------------- lookups ----------------

    def rank(self, sub) -> int:
        """Value at a Subspace or at a lattice index."""
        if isinstance(sub, Subspace):
            return int(self.rho[self.lattice.index_of(sub)])
        return int(self.rho[int(sub)])

    @property
    def full_rank(self) -> int:
        return int(self.rho[self.lattice.full_index])

    def values_by_dim(self) -> dict[int, dict[int, int]]:
        """Counts of values per ground dimension, {u: {value: count}}."""
        out: dict[int, dict[int, int]] = {}
        for u in range(self.lattice.n + 1):
            vals, reps = np.unique(self.rho[self.lattice.by_dim[u]], return_counts=True)
            out[u] = {int(v): int(c) for v, c in zip(vals, reps)}
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QPolymatroid)
            and self.lattice is other.lattice
            and self.r == other.r
            and np.array_equal(self.rho, other.rho)
        )

    def __repr__(self) -> str:
        return (
            f"QPolymatroid(r={self.r}, ground=F_{self.lattice.field.order}"
            f"^{self.lattice.n}, full_rank={self.full_rank})"
        )

    # ---------------- axioms ----------------

    def check_axioms(self, pair_budget: int = PAIR_BUDGET, seed: int = 0) -> dict:
        """Verify R1, R2 and R3; R3 sampling kicks in past the pair budget.

        Returns a report dict with one boolean per axiom, the R3 mode and
        pair count, and the first violating indices where applicable.
        """
        lat = self.lattice
        report: dict = {"r1": True, "r2": True, "r3": True}
        bad = np.nonzero((self.rho < 0) | (self.rho > self.r * lat.dims))[0]
        if bad.size:
            report["r1"] = False
            report["r1_witness"] = int(bad[0])
        child, parent = lat.covers()
        drop = np.nonzero(self.rho[child] > self.rho[parent])[0]
        if drop.size:
            report["r2"] = False
            report["r2_witness"] = (int(child[drop[0]]), int(parent[drop[0]]))
        total_pairs = lat.size * (lat.size - 1) // 2
        if total_pairs <= pair_budget:
            left, right = np.triu_indices(lat.size, k=1)
            report["r3_mode"] = "exhaustive"
        else:
            rng = np.random.default_rng(seed)
            left = rng.integers(0, lat.size, size=pair_budget)
            right = rng.integers(0, lat.size, size=pair_budget)
            report["r3_mode"] = "sampled"
        report["r3_pairs"] = int(len(left))
        for lo, hi in chunks(len(left), _CHUNK * 4):
            a, b = left[lo:hi], right[lo:hi]
            join = lat.join_indices(a, b)
            meet = lat.meet_indices(a, b)
            bad3 = np.nonzero(self.rho[join] + self.rho[meet] > self.rho[a] + self.rho[b])[0]
            if bad3.size:
                report["r3"] = False
                report["r3_witness"] = (int(a[bad3[0]]), int(b[bad3[0]]))
                break
        return report

    def minimal_valid_r(self) -> Fraction:
        """Smallest scale for which R1 holds, max of rho(U) / dim(U)."""
        lat = self.lattice
        best = Fraction(0)
        for u in range(1, lat.n + 1):
            vals = self.rho[lat.by_dim[u]]
            if vals.size:
                best = max(best, Fraction(int(vals.max()), u))
        return best

    # ---------------- duality and minors ----------------

    def dual(self) -> "QPolymatroid":
        """The polymatroid with values r dim(U) - rho(E) + rho(U_perp)."""
        lat = self.lattice
        comp = lat.complement_perm()
        star = self.r * lat.dims - self.full_rank + self.rho[comp]
        if (star < 0).any():
            raise ValueError("declared scale r is too small for a valid dual")
        return QPolymatroid(lat, star, self.r)

    def minor_values(self, x_index: int, y_index: int) -> dict[int, int]:
        """Values rho(T) - rho(X) on the interval X <= T <= Y."""
        lat = self.lattice
        x_sub, y_sub = lat.subspace(x_index), lat.subspace(y_index)
        if not y_sub.contains(x_sub):
            raise ValueError("interval endpoints are not nested")
        base = int(self.rho[x_index])
        out = {}
        for t in range(lat.size):
            t_sub = lat.subspace(t)
            if y_sub.contains(t_sub) and t_sub.contains(x_sub):
                out[t] = int(self.rho[t]) - base
        return out

    def restriction_values(self, y_index: int) -> dict[int, int]:
        return self.minor_values(self.lattice.zero_index, y_index)

    def contraction_values(self, x_index: int) -> dict[int, int]:
        return self.minor_values(x_index, self.lattice.full_index)

    def deletion_values(self, t_index: int) -> dict[int, int]:
        comp = self.lattice.complement_perm()
        return self.restriction_values(int(comp[t_index]))

    def apply_perm(self, perm: np.ndarray) -> "QPolymatroid":
        """The table U -> rho(perm(U)), for lattice automorphism arrays."""
        return QPolymatroid(self.lattice, self.rho[perm], self.r)


def anticode_rank_values(kind: str, lat: Lattice, v_index: int) -> np.ndarray:
    """Closed-form rank table of the polymatroid of a full shortening X(V).

    For every U the value depends only on v = dim V and
    w = dim(V meet U_perp): binom(v,2) - binom(w,2) for alternating,
    binom(v+1,2) - binom(w+1,2) for symmetric, v^2 - w^2 for Hermitian.
    """
    comp = lat.complement_perm()
    fixed = np.full(lat.size, v_index, dtype=np.int64)
    w_dims = lat.dims[lat.meet_indices(fixed, comp[np.arange(lat.size)])]
    v = int(lat.dims[v_index])
    if kind == "alternating":
        return v * (v - 1) // 2 - w_dims * (w_dims - 1) // 2
    if kind == "symmetric":
        return v * (v + 1) // 2 - w_dims * (w_dims + 1) // 2
    if kind == "hermitian":
        return v * v - w_dims * w_dims
    raise ValueError(f"no closed anticode form for kind {kind!r}")


def restricted_weights(code) -> list[int]:
    """The weight sequence d_j, j = 1..dim C, of a restricted code.

    d_j is the least F_q-dimension of a full shortening X(U) among the
    subspaces U for which dim C(U) reaches j.  Computed from the per
    dimension maxima of the shortening dimension table.
    """
    amb = code.ambient
    lat = amb.column_lattice()
    dims = shortening_dims(code, lat, side="columns")
    per_dim_max = [int(dims[lat.by_dim[u]].max()) for u in range(lat.n + 1)]
    out = []
    for j in range(1, code.dim + 1):
        u = next(u for u in range(lat.n + 1) if per_dim_max[u] >= j)
        out.append(amb.shortened_dim(u))
    return out


def lattice_lift_map(small: Lattice, big: Lattice, positions) -> np.ndarray:
    """Index map embedding a small ground space at the given coordinates.

    positions lists, for each small-space coordinate, the target
    coordinate in the big space; remaining coordinates are set to zero.
    """
    positions = list(positions)
    if len(positions) != small.n:
        raise ValueError("one target position is needed per coordinate")
    out = np.empty(small.size, dtype=np.int64)
    for i in range(small.size):
        d = int(small.dims[i])
        rows = []
        for row in small.bases[i, :d].tolist():
            big_row = [0] * big.n
            for val, pos in zip(row, positions):
                big_row[pos] = int(val)
            rows.append(big_row)
        out[i] = big.index_of_rows(rows)
    return out


def shortened_ambient_polymatroid(kind: str, n: int, q: int, v) -> "QPolymatroid":
    """Closed-form polymatroid of the full shortening X(V) by columns.

    v may be a Subspace of the column lattice or a lattice index.  The
    result carries the same lattice and r convention as a table built
    from the code X(V) itself, so the two compare with plain equality.
    """
    from .spaces import Ambient

    makers = {
        "alternating": Ambient.alternating,
        "symmetric": Ambient.symmetric,
        "hermitian": Ambient.hermitian,
    }
    if kind not in makers:
        raise ValueError(f"no closed anticode form for kind {kind!r}")
    amb = makers[kind](n, q)
    lat = amb.column_lattice()
    v_index = v if isinstance(v, (int, np.integer)) else lat.index_of(v)
    rho = anticode_rank_values(kind, lat, int(v_index))
    return QPolymatroid(lat, rho.astype(np.int64), amb.ell * n)


def quotient_rank_functions(c_code, d_code):
    """Rank tables of the two quotients C/(C meet D) and D/(C meet D).

    Each table is the difference of the column rank functions of the
    code and of the intersection.  Both are cross-checked entry by entry
    against the direct form dim(C + D) - dim(C(U_perp) + D) computed
    from the codes themselves; any mismatch raises ArithmeticError.
    """
    if c_code.ambient != d_code.ambient:
        raise ValueError("quotient tables need codes in one ambient space")
    inter = c_code.intersect(d_code)
    m_c = QPolymatroid.from_code_columns(c_code)
    m_d = QPolymatroid.from_code_columns(d_code)
    m_i = QPolymatroid.from_code_columns(inter)
    lat = m_c.lattice
    sum_dim = c_code.add_code(d_code).dim
    comp = lat.complement_perm()
    tables = []
    for code, other, m_code in ((c_code, d_code, m_c), (d_code, c_code, m_d)):
        rho = m_code.rho - m_i.rho
        for idx in range(lat.size):
            w = lat.subspace(int(comp[idx]))
            direct = sum_dim - code.shorten_columns(w).add_code(other).dim
            if direct != int(rho[idx]):
                raise ArithmeticError(
                    f"quotient table mismatch at lattice index {idx}: "
                    f"difference form {int(rho[idx])}, direct form {direct}"
                )
        tables.append(QPolymatroid(lat, rho, m_code.r))
    return tables[0], tables[1]


_COMPARE_CAP = 10_000


def _ground_maps(field, n: int, cap: int):
    """Yield invertible row-operation matrices over the field, capped."""
    from itertools import product

    count = 0
    for entries in product(range(field.order), repeat=n * n):
        mat = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        if Subspace(field, n, mat).dim == n:
            yield mat
            count += 1
            if count >= cap:
                return


def compare(m1: "QPolymatroid", m2: "QPolymatroid") -> dict:
    """Classify how two polymatroid tables relate.

    Returns a dict with key "relation" set to one of "equal",
    "equal_after" (some invertible ground map carries one table to the
    other; the map is included), "profile_equal" (identical value
    multisets per dimension but no map found within the search cap), or
    "distinct".
    """
    lat = m1.lattice
    if lat is not m2.lattice or m1.r != m2.r:
        return {"relation": "distinct"}
    if np.array_equal(m1.rho, m2.rho):
        return {"relation": "equal"}
    profile_match = m1.values_by_dim() == m2.values_by_dim()
    if profile_match:
        tab = field_tables(lat.field)
        searched = 0
        for mat in _ground_maps(lat.field, lat.n, _COMPARE_CAP):
            searched += 1
            perm = np.empty(lat.size, dtype=np.int64)
            g = np.array(mat, dtype=np.uint8)
            for idx in range(lat.size):
                d = int(lat.dims[idx])
                rows = _gf_matmul_stack(
                    lat.bases[idx : idx + 1, :d].astype(np.uint8), g, lat.field
                )[0]
                perm[idx] = lat.index_of_rows(rows.tolist())
            if np.array_equal(m1.rho[perm], m2.rho):
                return {"relation": "equal_after", "map": mat, "searched": searched}
        return {"relation": "profile_equal", "searched": searched}
    return {"relation": "distinct"}


polymatroid_from_code_columns = QPolymatroid.from_code_columns
polymatroid_from_code_rows = QPolymatroid.from_code_rows
x_weights = restricted_weights
