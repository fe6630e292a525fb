"""Vectorized linear algebra over small finite fields.

Matrices live in numpy uint8 arrays whose entries are the integer codes
used by FiniteField.  Two elimination paths are provided: a bit-packed
XOR path for GF(2) and a lookup-table path for any field of order up to
256.  Both reduce whole batches of matrices at once.
"""

from __future__ import annotations

import numpy as np

from .fields import FiniteField

_TABLE_MAX_ORDER = 256


class FieldTables:
    """Dense add/sub/mul/inv lookup tables for one small field."""

    def __init__(self, field: FiniteField):
        q = field.order
        if q > _TABLE_MAX_ORDER:
            raise ValueError(f"field order {q} too large for table kernels")
        self.field = field
        self.order = q
        rng = range(q)
        self.add = np.array([[field.add(a, b) for b in rng] for a in rng], dtype=np.uint8)
        self.sub = np.array([[field.sub(a, b) for b in rng] for a in rng], dtype=np.uint8)
        self.mul = np.array([[field.mul(a, b) for b in rng] for a in rng], dtype=np.uint8)
        self.inv = np.array([0] + [field.inv(a) for a in range(1, q)], dtype=np.uint8)
        self.neg = np.array([field.neg(a) for a in rng], dtype=np.uint8)


_tables_cache: dict[int, FieldTables] = {}


def field_tables(field: FiniteField) -> FieldTables:
    key = id(field)
    tab = _tables_cache.get(key)
    if tab is None:
        tab = FieldTables(field)
        _tables_cache[key] = tab
    return tab


def _rref_tables(mats: np.ndarray, tab: FieldTables) -> np.ndarray:
    """In-place batched reduced row echelon form; returns ranks.

    mats has shape (batch, m, n).  After the call, rows 0..rank-1 of each
    slice hold the RREF rows and all later rows are zero.
    """
    batch, m, n = mats.shape
    add, sub, mul, inv = tab.add, tab.sub, tab.mul, tab.inv
    ranks = np.zeros(batch, dtype=np.int64)
    row_idx = np.arange(m)
    for c in range(n):
        col = mats[:, :, c]
        cand = (col != 0) & (row_idx[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = cand[b].argmax(axis=1)
        rb = ranks[b]
        prow = mats[b, piv].copy()
        mats[b, piv] = mats[b, rb]
        mats[b, rb] = prow
        prow = mul[inv[prow[:, c]][:, None], prow]
        mats[b, rb] = prow
        factors = mats[b, :, c].copy()
        factors[np.arange(len(b)), rb] = 0
        mats[b] = sub[mats[b], mul[factors[:, :, None], prow[:, None, :]]]
        ranks[b] = rb + 1
        if int(ranks.min()) == m:
            break
    return ranks


def _pack_gf2(mats: np.ndarray) -> np.ndarray:
    """Pack (batch, m, n) GF(2) matrices into (batch, m) uint64 rows."""
    batch, m, n = mats.shape
    if n > 63:
        raise ValueError("GF(2) packing supports at most 63 columns")
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    return (mats.astype(np.uint64) * weights[None, None, :]).sum(axis=2, dtype=np.uint64)


def _unpack_gf2(rows: np.ndarray, n: int) -> np.ndarray:
    batch, m = rows.shape
    shifts = np.arange(n, dtype=np.uint64)
    return ((rows[:, :, None] >> shifts[None, None, :]) & np.uint64(1)).astype(np.uint8)


def _rref_gf2(rows: np.ndarray, n: int) -> np.ndarray:
    """In-place batched RREF on bit-packed GF(2) rows; returns ranks."""
    batch, m = rows.shape
    ranks = np.zeros(batch, dtype=np.int64)
    row_idx = np.arange(m)
    for c in range(n):
        bit = np.uint64(1) << np.uint64(c)
        cand = ((rows & bit) != 0) & (row_idx[None, :] >= ranks[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = cand[b].argmax(axis=1)
        rb = ranks[b]
        prow = rows[b, piv].copy()
        rows[b, piv] = rows[b, rb]
        rows[b, rb] = prow
        hit = (rows[b] & bit) != 0
        hit[np.arange(len(b)), rb] = False
        rows[b] ^= hit * prow[:, None]
        ranks[b] = rb + 1
        if int(ranks.min()) == m:
            break
    return ranks


def batch_rref(mats: np.ndarray, field: FiniteField) -> np.ndarray:
    """Reduce a (batch, m, n) stack in place to RREF; returns ranks."""
    if mats.ndim != 3:
        raise ValueError("expected a (batch, m, n) array")
    if field.order == 2:
        packed = _pack_gf2(mats)
        ranks = _rref_gf2(packed, mats.shape[2])
        mats[...] = _unpack_gf2(packed, mats.shape[2])
        return ranks
    return _rref_tables(mats, field_tables(field))


def batch_rank(mats: np.ndarray, field: FiniteField) -> np.ndarray:
    """Ranks of a (batch, m, n) stack; the input array is clobbered."""
    if mats.ndim != 3:
        raise ValueError("expected a (batch, m, n) array")
    if field.order == 2:
        return _rref_gf2(_pack_gf2(mats), mats.shape[2])
    return _rref_tables(mats, field_tables(field))


def rref_keys(mats: np.ndarray, ranks: np.ndarray) -> list[bytes]:
    """Canonical byte keys (rank-prefixed RREF rows) for reduced stacks."""
    out = []
    for i in range(mats.shape[0]):
        r = int(ranks[i])
        out.append(bytes([r]) + mats[i, :r].tobytes())
    return out


def coefficient_block(q: int, k: int, lo: int, hi: int) -> np.ndarray:
    """Rows lo..hi-1 of the base-q digit table, shape (hi-lo, k).

    Row t holds the little-endian base-q digits of t, so iterating t from
    0 to q**k - 1 enumerates every coefficient vector exactly once.
    """
    vals = np.arange(lo, hi, dtype=np.int64)
    digits = np.empty((hi - lo, k), dtype=np.uint8)
    for i in range(k):
        digits[:, i] = vals % q
        vals //= q
    return digits


def batch_matmul_mod_p(coeffs: np.ndarray, gens: np.ndarray, p: int) -> np.ndarray:
    """(coeffs @ gens) mod p via float64 BLAS; exact for small products."""
    prod = coeffs.astype(np.float64) @ gens.astype(np.float64)
    return np.mod(np.rint(prod), p).astype(np.uint8)
