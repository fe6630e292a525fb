"""Verification suites for the restricted rank-metric code library.

Each suite checks one family of mathematical statements about restricted
codes, their duals, and the associated q-polymatroids, at desk scale.
A suite is a callable taking a profile name ("quick" or "full") and
returning a list of check entries.  Every entry is a plain dict with:

    check    short name of the statement instance checked
    params   dict of the parameter point
    status   "verified", "bracket-resolved", "discrepancy", or "skipped"
    detail   one-line human summary
    witness  optional payload with the computed values
    claim    for discrepancy entries, the id of the documented deviation

The quick profile stays on binary fields and small ground spaces; the
full profile adds the ternary instances and the larger streamed tables.
All randomness is seeded, so reports are identical across runs.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from .bounds import (
    dimension_bound,
    dual_distance_bound,
    first_weight_lower_bound,
    is_maximum,
    maximum_code_dual_distance,
)
from .codes import Code
from .families import construct
from .lattice import Subspace, gaussian_binomial, lattice
from .matrices import Matrix
from .polymatroid import (
    QPolymatroid,
    anticode_rank_values,
    compare,
    lattice_lift_map,
    quotient_rank_functions,
    rank_profile,
    restricted_weights,
    shortened_ambient_polymatroid,
    shortening_dims,
)
from .spaces import ALT, HER, SYM, Ambient
from .util import ParamError, enum_budget

QUICK = "quick"
FULL = "full"
PROFILES = (QUICK, FULL)

KINDS = (ALT, SYM, HER)

_KIND_MAKER = {
    ALT: Ambient.alternating,
    SYM: Ambient.symmetric,
    HER: Ambient.hermitian,
}


def _entry(check: str, params: dict, status: str, detail: str, **extra) -> dict:
    out = {"check": check, "params": params, "status": status, "detail": detail}
    for key, value in extra.items():
        if value is not None:
            out[key] = value
    return out


def _std_subspace(field, n: int, u: int) -> Subspace:
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(u)]
    return Subspace(field, n, rows)


def _anticode_dim(kind: str, u: int) -> int:
    if kind == ALT:
        return u * (u - 1) // 2
    if kind == SYM:
        return u * (u + 1) // 2
    return u * u


def _anticode_dual_dim(kind: str, n: int, u: int) -> int:
    if kind == ALT:
        return (n - u) * (n + u - 1) // 2
    if kind == SYM:
        return (n - u) * (n + u + 1) // 2
    return (n - u) * (n + u)


def _values_map(prof: dict[int, dict[int, int]]) -> dict:
    """JSON-friendly copy of a per-dimension value-count profile."""
    return {str(u): {str(v): c for v, c in sorted(vals.items())} for u, vals in sorted(prof.items())}


def _expected_table_status(
    check: str,
    params: dict,
    profile_by_dim: dict[int, dict[int, int]],
    expected: dict[int, int],
    bracket: dict[int, set] | None = None,
) -> list[dict]:
    """Compare a computed value profile against a piecewise-constant table.

    expected maps the ground dimension u to the single value the table
    asserts; dims listed in bracket instead carry a set of admitted
    values and produce bracket-resolved entries with the observed
    distribution as witness.
    """
    out = []
    bracket = bracket or {}
    for u, vals in sorted(profile_by_dim.items()):
        seen = sorted(vals)
        pt = dict(params, u=u)
        if u in bracket:
            admitted = bracket[u]
            if set(seen) <= admitted:
                detail = f"bracket narrowed to {seen} with counts {dict(sorted(vals.items()))}"
                out.append(
                    _entry(check, pt, "bracket-resolved", detail, witness={"values": {str(v): c for v, c in sorted(vals.items())}})
                )
            else:
                out.append(
                    _entry(
                        check,
                        pt,
                        "discrepancy",
                        f"observed {seen} outside admitted bracket {sorted(admitted)}",
                        witness={"values": {str(v): c for v, c in sorted(vals.items())}},
                    )
                )
        elif u in expected:
            want = expected[u]
            if seen == [want]:
                out.append(_entry(check, pt, "verified", f"all subspaces of dimension {u} have rank {want}"))
            else:
                out.append(
                    _entry(
                        check,
                        pt,
                        "discrepancy",
                        f"expected constant {want}, observed {seen}",
                        witness={"values": {str(v): c for v, c in sorted(vals.items())}},
                    )
                )
    return out


class Suite(NamedTuple):
    sid: str
    description: str
    run: Callable[[str], list[dict]]
    claims: tuple[str, ...]


SUITES: dict[str, Suite] = {}


def _register(sid: str, description: str, claims: tuple[str, ...]):
    def inner(fn):
        SUITES[sid] = Suite(sid, description, fn, claims)
        return fn

    return inner


# Deviations between printed closed forms and computed ground truth.
# Every id here must appear in the deviations section of docs/claims.md;
# discrepancy entries citing one of these ids are treated as documented.
DOCUMENTED_DEVIATIONS = {
    "sym-even-pairing": "symmetric dual pairing is repaired at even q, so internal-dual identities differ there",
    "her-even-trace-character": "the relative-trace pairing character degenerates at even q; a twisted character restores the identities",
    "sym-dual-distance-even-q": "maximal odd-distance symmetric codes over F_2 have smaller dual distance than the odd-q value",
    "dual-shortened-dim-formula": "printed dual-shortening dimension exceeds the dual code dimension; the duality identity gives the true value",
    "punctured-parity-hypothesis": "corner maximality holds when n - d is even, not odd as printed",
    "sym-twist-small-u": "the twisted symmetric table prints the alternating value n-1 at u=1; ground truth is n",
    "her-small-support-values": "Hermitian tables print anticode dimensions at small u; ground truth gives anticode-dual dimensions",
    "her-e-case-split": "the odd-narrow Hermitian table overlaps cases at u=2 and omits u=3; ground truth fills both",
    "her-zero-diag-table": "the zero-diagonal Hermitian table is not constant per dimension once n >= 3",
    "table-props-maximality": "the near-full table statements need maximal codes; non-maximal counterexamples exist",
    "quotient-submodularity": "difference tables of code pairs can violate the exchange axiom; the printed four-term inequality reverses a containment",
}


def _kind_points(max_n: int, qs=(2, 3)):
    for kind in KINDS:
        for q in qs:
            for n in range(2, max_n + 1):
                yield kind, n, q


@_register(
    "anticode-dims",
    "dimension of every full shortening X(U) matches the closed form",
    ("anticode-dimension-formula",),
)
def suite_anticode_dims(profile: str) -> list[dict]:
    out = []
    qs = (2,) if profile == QUICK else (2, 3)
    for kind, n, q in _kind_points(4, qs):
        amb = _KIND_MAKER[kind](n, q)
        lat = amb.column_lattice()
        full = Code.full(amb)
        dims = shortening_dims(full, lat)
        want = np.array([_anticode_dim(kind, int(u)) for u in lat.dims])
        ok = bool(np.array_equal(dims, want))
        params = {"kind": kind, "n": n, "q": q}
        detail = f"checked all {lat.size} subspaces"
        if ok:
            out.append(_entry("anticode-dim", params, "verified", detail))
        else:
            bad = int(np.nonzero(dims != want)[0][0])
            out.append(
                _entry(
                    "anticode-dim",
                    params,
                    "discrepancy",
                    f"first mismatch at lattice index {bad}",
                    witness={"index": bad, "computed": int(dims[bad]), "formula": int(want[bad])},
                )
            )
    return out


@_register(
    "anticode-dual-form",
    "dual of a full shortening has the advertised block form and dimension",
    ("anticode-dual-dimension-formula", "anticode-dual-block-form"),
)
def suite_anticode_dual_form(profile: str) -> list[dict]:
    out = []
    qs = (2,) if profile == QUICK else (2, 3)
    for kind, n, q in _kind_points(4, qs):
        amb = _KIND_MAKER[kind](n, q)
        ef = amb.entry_field
        lat = amb.column_lattice()
        full = Code.full(amb)
        params = {"kind": kind, "n": n, "q": q}
        # block form and dimension at standard position, every v
        for v in range(n + 1):
            sub = _std_subspace(ef, n, v)
            dual = full.shorten_columns(sub).dual()
            want_dim = _anticode_dual_dim(kind, n, v)
            block = _block_form_code(amb, v)
            pt = dict(params, v=v)
            if dual.dim == want_dim and dual == block:
                out.append(_entry("anticode-dual-block", pt, "verified", "dual equals block-form code"))
            else:
                out.append(
                    _entry(
                        "anticode-dual-block",
                        pt,
                        "discrepancy",
                        "dual does not match block form",
                        witness={"dual_dim": dual.dim, "formula_dim": want_dim, "block_dim": block.dim},
                    )
                )
        # dimension formula for every U; direct dual computation where
        # the lattice is small, nondegeneracy argument at the large one
        if lat.size <= 600:
            bad = None
            for idx in range(lat.size):
                u = int(lat.dims[idx])
                dual_dim = full.shorten_columns(lat.subspace(idx)).dual().dim
                if dual_dim != _anticode_dual_dim(kind, n, u):
                    bad = (idx, u, dual_dim)
                    break
            if bad is None:
                out.append(_entry("anticode-dual-dim", params, "verified", f"direct dual dimension for all {lat.size} subspaces"))
            else:
                out.append(
                    _entry(
                        "anticode-dual-dim",
                        params,
                        "discrepancy",
                        f"mismatch at lattice index {bad[0]}",
                        witness={"index": bad[0], "u": bad[1], "computed": bad[2]},
                    )
                )
        else:
            nondeg = full.dual().dim == 0
            dims = shortening_dims(full, lat)
            want = np.array([_anticode_dim(kind, int(u)) for u in lat.dims])
            dual_want = np.array([_anticode_dual_dim(kind, n, int(u)) for u in lat.dims])
            complements_match = bool(np.array_equal(amb.dim - dims, dual_want))
            ok = nondeg and bool(np.array_equal(dims, want)) and complements_match
            status = "verified" if ok else "discrepancy"
            out.append(
                _entry(
                    "anticode-dual-dim",
                    params,
                    status,
                    "the pairing is nondegenerate, so every dual dimension is the complement of the verified shortening dimension",
                    witness={"full_dual_dim": full.dual().dim, "space_dim": amb.dim},
                )
            )
    return out


def _block_form_code(amb: Ambient, v: int) -> Code:
    """The code {(0_vxv A; Abar^t B)} with B in the ambient kind on n-v."""
    ef = amb.entry_field
    n = amb.n
    gens = []
    unit_scalars = _fq_scalars(amb)
    for i in range(v):
        for j in range(v, n):
            for s in unit_scalars:
                rows = [[0] * n for _ in range(n)]
                rows[i][j] = s
                sbar = _bar_entry(amb, s)
                rows[j][i] = sbar
                gens.append(Matrix(ef, rows))
    if n - v > 0:
        small = _KIND_MAKER[amb.kind](n - v, amb.q)
        for m in Code.full(small).matrices():
            rows = [[0] * n for _ in range(n)]
            for i in range(n - v):
                for j in range(n - v):
                    rows[v + i][v + j] = m.rows[i][j]
            gens.append(Matrix(ef, rows))
    return Code.from_matrices(amb, gens)


def _fq_scalars(amb: Ambient) -> list[int]:
    """An F_q-basis of the entry field, as entry field elements."""
    if amb.ell == 1:
        return [1]
    return [1, _primitive(amb.entry_field)]


def _primitive(field) -> int:
    field._build_log_tables()
    return field._exp[1]


def _bar_entry(amb: Ambient, s: int) -> int:
    ef = amb.entry_field
    if amb.kind == ALT:
        return ef.neg(s)
    if amb.kind == SYM:
        return s
    return ef.frobenius(s, amb.conj_power)


@_register(
    "shortened-dual-maxrank",
    "maximum rank in the dual of a full shortening matches the two-case formula",
    ("shortened-dual-maxrank-formula",),
)
def suite_shortened_dual_maxrank(profile: str) -> list[dict]:
    out = []
    plans = [(2, 4)] if profile == QUICK else [(2, 4), (3, 3)]
    for q, max_n in plans:
        for kind in KINDS:
            for n in range(2, max_n + 1):
                amb = _KIND_MAKER[kind](n, q)
                full = Code.full(amb)
                lat = amb.column_lattice()
                params = {"kind": kind, "n": n, "q": q}
                std = {lat.index_of(_std_subspace(amb.entry_field, n, u)) for u in range(n + 1)}
                mismatches = []
                std_ok = True
                for idx in range(lat.size):
                    sub = lat.subspace(idx)
                    u = sub.dim
                    observed = full.shorten_columns(sub).dual().max_weight() or 0
                    want = amb.max_rank_shortened_dual(u)
                    if observed != want:
                        mismatches.append({"u": u, "observed": observed, "formula": want})
                        if idx in std:
                            std_ok = False
                if not mismatches:
                    out.append(
                        _entry(
                            "shortened-dual-maxrank",
                            params,
                            "verified",
                            f"exhaustive ranks match the two-case formula for all {lat.size} subspaces",
                        )
                    )
                elif kind == SYM and q % 2 == 0 and std_ok:
                    counts: dict[str, int] = {}
                    for m in mismatches:
                        key = f"u={m['u']} observed={m['observed']} formula={m['formula']}"
                        counts[key] = counts.get(key, 0) + 1
                    out.append(
                        _entry(
                            "shortened-dual-maxrank",
                            params,
                            "discrepancy",
                            "formula holds at coordinate positions but fails at the listed skew positions, "
                            "where the repaired even-q pairing is not congruence-equivariant",
                            witness={"skew_mismatches": counts, "coordinate_positions": "verified"},
                            claim="sym-even-pairing",
                        )
                    )
                else:
                    out.append(
                        _entry(
                            "shortened-dual-maxrank",
                            params,
                            "discrepancy",
                            "rank search disagrees with formula",
                            witness=mismatches[0],
                        )
                    )
    return out


@_register(
    "anticode-tables",
    "closed-form polymatroid of a full shortening equals the table built from the code",
    ("anticode-polymatroid-closed-form",),
)
def suite_anticode_tables(profile: str) -> list[dict]:
    out = []
    plans = [(ALT, 4, 2), (SYM, 4, 2), (HER, 3, 2)]
    if profile == FULL:
        plans += [(ALT, 3, 3), (SYM, 3, 3), (HER, 2, 3)]
    for kind, n, q in plans:
        amb = _KIND_MAKER[kind](n, q)
        lat = amb.column_lattice()
        full = Code.full(amb)
        params = {"kind": kind, "n": n, "q": q}
        bad = None
        for v_idx in range(lat.size):
            closed = shortened_ambient_polymatroid(kind, n, q, v_idx)
            built = QPolymatroid.from_code_columns(full.shorten_columns(lat.subspace(v_idx)))
            if closed != built:
                bad = v_idx
                break
        if bad is None:
            out.append(_entry("anticode-table", params, "verified", f"closed form equals from-code table for all {lat.size} choices of V"))
        else:
            out.append(_entry("anticode-table", params, "discrepancy", f"mismatch at V index {bad}", witness={"v_index": bad}))
    return out


@_register(
    "size-relations",
    "product and shortening size identities relating a code, its dual, and the shortenings",
    ("size-product-relation", "shortening-size-formula"),
)
def suite_size_relations(profile: str) -> list[dict]:
    out = []
    roster = _small_code_roster(profile)
    for label, code in roster:
        amb = code.ambient
        dual = code.dual()
        params = {"instance": label}
        if code.dim + dual.dim == amb.dim:
            out.append(_entry("size-product", params, "verified", "dim C + dim C* equals the ambient dimension"))
        else:
            out.append(
                _entry(
                    "size-product",
                    params,
                    "discrepancy",
                    "size product violated",
                    witness={"dim": code.dim, "dual_dim": dual.dim, "ambient_dim": amb.dim},
                )
            )
        lat = amb.column_lattice()
        if lat.size > 250:
            out.append(_entry("shortening-size", params, "skipped", f"lattice with {lat.size} members above the per-instance loop cap"))
            continue
        full = Code.full(amb)
        bad = None
        for idx in range(lat.size):
            sub = lat.subspace(idx)
            xu = full.shorten_columns(sub)
            cu = code.shorten_columns(sub).dim
            lhs = xu.dim + code.dim - xu.add_code(code).dim
            rhs = xu.dim + dual.intersect(xu.dual()).dim - dual.dim
            if not (cu == lhs == rhs):
                bad = {"index": idx, "dim_CU": cu, "join_form": lhs, "dual_form": rhs}
                break
        if bad is None:
            out.append(_entry("shortening-size", params, "verified", f"both size expressions match dim C(U) on all {lat.size} subspaces"))
        else:
            out.append(_entry("shortening-size", params, "discrepancy", "size formula mismatch", witness=bad))
    return out


def _small_code_roster(profile: str) -> list[tuple[str, Code]]:
    """Small named instances reused across the structural suites."""
    roster = [
        ("alt-dg n=5 q=2 d=2", construct("alt_dg", n=5, q=2, d=2, s=1)),
        ("alt-dg n=5 q=2 d=4", construct("alt_dg", n=5, q=2, d=4, s=1)),
        ("sym-schmidt n=3 q=2 d=3", construct("sym_schmidt", n=3, q=2, d=3, s=1)),
        ("sym-schmidt n=4 q=2 d=2", construct("sym_schmidt", n=4, q=2, d=2, s=1)),
        ("her-opposite n=3 q=2 d=2", construct("her_opposite", n=3, q=2, d=2, s=1)),
        ("her-zero-diag n=3 q=2", construct("her_zero_diag", n=3, q=2)),
    ]
    if profile == FULL:
        roster += [
            ("alt-dg n=5 q=3 d=2", construct("alt_dg", n=5, q=3, d=2, s=1)),
            ("sym-schmidt n=5 q=3 d=3", construct("sym_schmidt", n=5, q=3, d=3, s=1)),
            ("sym-pair-twist n=4 q=3", construct("sym_pair_twist", n=4, q=3, s=1)),
            ("her-zero-diag n=2 q=3", construct("her_zero_diag", n=2, q=3)),
            ("her-middle-gamma n=3 q=3", construct("her_middle_gamma", n=3, q=3, s=1)),
        ]
    return roster


def _axiom_roster(profile: str):
    """Polymatroids checked against the three rank axioms."""
    items = [
        ("alt-dg n=5 q=2 d=2 columns", construct("alt_dg", n=5, q=2, d=2, s=1), "columns"),
        ("alt-dg n=5 q=2 d=4 dual columns", construct("alt_dg", n=5, q=2, d=4, s=1).dual(), "columns"),
        ("sym-schmidt n=4 q=2 d=2 columns", construct("sym_schmidt", n=4, q=2, d=2, s=1), "columns"),
        ("sym-schmidt n=5 q=2 d=3 rows", construct("sym_schmidt", n=5, q=2, d=3, s=1), "rows"),
        ("her-opposite n=3 q=2 d=2 columns", construct("her_opposite", n=3, q=2, d=2, s=1), "columns"),
        ("her-zero-diag n=3 q=2 columns", construct("her_zero_diag", n=3, q=2), "columns"),
        ("full hermitian space n=3 q=2", Code.full(Ambient.hermitian(3, 2)), "columns"),
        ("full hermitian space n=2 q=2", Code.full(Ambient.hermitian(2, 2)), "columns"),
    ]
    if profile == FULL:
        items += [
            ("alt-dg n=5 q=3 d=2 columns", construct("alt_dg", n=5, q=3, d=2, s=1), "columns"),
            ("sym-schmidt n=5 q=3 d=3 columns", construct("sym_schmidt", n=5, q=3, d=3, s=1), "columns"),
            ("sym-schmidt n=5 q=3 d=3 dual columns", construct("sym_schmidt", n=5, q=3, d=3, s=1).dual(), "columns"),
            ("her-middle-gamma n=3 q=3 columns", construct("her_middle_gamma", n=3, q=3, s=1), "columns"),
            ("full hermitian space n=2 q=3", Code.full(Ambient.hermitian(2, 3)), "columns"),
        ]
    return items


@_register(
    "polymatroid-axioms",
    "rank tables from codes satisfy boundedness, monotonicity and submodularity",
    ("polymatroid-axioms-r1-r3", "hermitian-minimal-scale"),
)
def suite_polymatroid_axioms(profile: str) -> list[dict]:
    out = []
    frozen_minimal = {
        "full hermitian space n=3 q=2": "5",
        "full hermitian space n=2 q=3": "3",
    }
    for label, code, side in _axiom_roster(profile):
        if side == "rows":
            m = QPolymatroid.from_code_rows(code)
        else:
            m = QPolymatroid.from_code_columns(code)
        report = m.check_axioms()
        ok = report["r1"] and report["r2"] and report["r3"]
        params = {"instance": label}
        witness = {"r3_mode": report["r3_mode"], "r3_pairs": report["r3_pairs"]}
        if code.ambient.kind == HER:
            minimal = m.minimal_valid_r()
            witness["declared_r"] = m.r
            witness["minimal_valid_r"] = str(minimal)
            if label in frozen_minimal and str(minimal) != frozen_minimal[label]:
                out.append(
                    _entry(
                        "axioms",
                        params,
                        "discrepancy",
                        f"minimal scale {minimal} differs from frozen value {frozen_minimal[label]}",
                        witness=witness,
                    )
                )
                continue
            if minimal > m.r:
                ok = False
        status = "verified" if ok else "discrepancy"
        detail = "axioms hold" if ok else "axiom violated"
        out.append(_entry("axioms", params, status, detail, witness=witness))
    return out


def _branch_roster(profile: str):
    items = [
        ("alt-dg n=5 q=2 d=4", construct("alt_dg", n=5, q=2, d=4, s=1)),
        ("alt-dg n=5 q=2 d=2", construct("alt_dg", n=5, q=2, d=2, s=1)),
        ("sym-schmidt n=4 q=2 d=2", construct("sym_schmidt", n=4, q=2, d=2, s=1)),
        ("sym-schmidt n=5 q=2 d=3", construct("sym_schmidt", n=5, q=2, d=3, s=1)),
        ("her-opposite n=3 q=2 d=2", construct("her_opposite", n=3, q=2, d=2, s=1)),
        ("her-zero-diag n=3 q=2", construct("her_zero_diag", n=3, q=2)),
    ]
    if profile == FULL:
        items += [
            ("sym-schmidt n=5 q=3 d=3", construct("sym_schmidt", n=5, q=3, d=3, s=1)),
            ("sym-schmidt n=4 q=3 d=2", construct("sym_schmidt", n=4, q=3, d=2, s=1)),
            ("her-opposite n=3 q=3 d=2", construct("her_opposite", n=3, q=3, d=2, s=1)),
        ]
    return items


@_register(
    "rank-high-dim",
    "rank values forced by the code dimension or by the dual distance match the two closed branches",
    ("restricted-rank-branches",),
)
def suite_rank_high_dim(profile: str) -> list[dict]:
    out = []
    for label, code in _branch_roster(profile):
        amb = code.ambient
        n, kind = amb.n, amb.kind
        params = {"instance": label}
        if code.size > enum_budget() or (code.dual().dim and code.dual().size > enum_budget()):
            out.append(_entry("rank-branches", params, "skipped", "codeword enumeration above budget"))
            continue
        d = code.min_distance()
        dual = code.dual()
        dstar = dual.min_distance() if dual.dim else None
        m = QPolymatroid.from_code_columns(code)
        lat = m.lattice
        dims = lat.dims.astype(int)
        forced_full = dims > n - d
        rho = m.rho
        bad = None
        if np.any(rho[forced_full] != code.dim):
            bad = {"branch": "dimension", "indices": int(np.nonzero(forced_full & (rho != code.dim))[0][0])}
        dual_cut = dstar if dstar is not None else amb.dim + 1
        anticode = np.array([_anticode_dual_dim(kind, n, n - u) for u in range(n + 1)])
        forced_anticode = np.minimum(2 * dims, amb.max_rank) < dual_cut
        if bad is None and np.any(rho[forced_anticode] != anticode[dims[forced_anticode]]):
            idx = int(np.nonzero(forced_anticode & (rho != anticode[dims]))[0][0])
            bad = {"branch": "anticode", "index": idx, "computed": int(rho[idx]), "formula": int(anticode[dims[idx]])}
        witness = {
            "d": d,
            "dual_distance": dstar,
            "dimension_branch_subspaces": int(forced_full.sum()),
            "anticode_branch_subspaces": int(forced_anticode.sum()),
        }
        if bad is None:
            out.append(_entry("rank-branches", params, "verified", "both forced branches match", witness=witness))
        else:
            witness.update(bad)
            out.append(_entry("rank-branches", params, "discrepancy", "forced branch mismatch", witness=witness))
    return out


def _family_roster(profile: str):
    """Candidate parameter points for the eight constructions."""
    qs = (2,) if profile == QUICK else (2, 3)
    pts = []
    for q in qs:
        for n in (4, 5, 6):
            for d in (2, 4):
                pts.append(("alt_dg", {"n": n, "q": q, "d": d, "s": 1}))
        for n in (3, 4, 5, 6):
            for d in range(2, n):
                pts.append(("sym_schmidt", {"n": n, "q": q, "d": d, "s": 1}))
        for n in (2, 3, 4):
            pts.append(("her_zero_diag", {"n": n, "q": q}))
            for d in range(1, n):
                pts.append(("her_opposite", {"n": n, "q": q, "d": d, "s": 1}))
        for d in (1, 3):
            pts.append(("her_odd_odd", {"n": 3, "q": q, "d": d, "s": 1}))
    if profile == FULL:
        pts += [
            ("sym_pair_twist", {"n": 4, "q": 3, "s": 1}),
            ("sym_pair_twist", {"n": 6, "q": 3, "s": 1}),
            ("sym_middle_three", {"n": 6, "q": 3, "s": 1}),
            ("sym_middle_three", {"n": 8, "q": 3, "s": 1}),
            ("her_middle_gamma", {"n": 3, "q": 3, "s": 1}),
            ("her_middle_gamma", {"n": 3, "q": 3, "s": 5}),
            ("alt_dg", {"n": 5, "q": 2, "d": 2, "s": 2}),
        ]
    return pts


@_register(
    "family-soundness",
    "every family instance has its advertised dimension and distance and attains its bound",
    ("family-dimension-bounds",),
)
def suite_family_soundness(profile: str) -> list[dict]:
    out = []
    for family, kwargs in _family_roster(profile):
        params = dict(kwargs, family=family)
        try:
            code = construct(family, **kwargs)
        except ParamError:
            continue
        if code.size > enum_budget():
            out.append(_entry("family-point", params, "skipped", "codeword enumeration above budget"))
            continue
        amb = code.ambient
        d = code.min_distance()
        bound = dimension_bound(amb.kind, amb.n, d, amb.m)
        attained = is_maximum(code)
        witness = {
            "dim": code.dim,
            "distance": d,
            "bound": str(bound),
            "attained": bool(attained),
        }
        if attained and Fraction(code.dim) == bound:
            out.append(_entry("family-point", params, "verified", "distance checked and bound attained", witness=witness))
        elif attained:
            out.append(_entry("family-point", params, "verified", "bound attained at the integer part", witness=witness))
        else:
            out.append(
                _entry("family-point", params, "discrepancy", "instance does not attain its bound", witness=witness)
            )
    return out


def _table_entries(
    check: str,
    params: dict,
    prof: dict[int, dict[int, int]],
    expected: dict[int, int],
    bracket: dict[int, set] | None = None,
    misprints: dict[int, dict] | None = None,
) -> list[dict]:
    """Entries for a piecewise rank table with brackets and known misprints.

    misprints maps a dimension to {"printed": value, "truth": value or
    set, "claim": deviation id}; the computed profile must match the
    truth, and the entry records the printed value as a documented
    discrepancy.  A truth mismatch is an undocumented discrepancy.
    """
    out = []
    misprints = misprints or {}
    plain_expected = {u: v for u, v in expected.items() if u not in misprints}
    out.extend(_expected_table_status(check, params, {u: prof[u] for u in prof if u not in misprints}, plain_expected, bracket))
    for u, info in sorted(misprints.items()):
        if u not in prof:
            continue
        vals = prof[u]
        seen = sorted(vals)
        truth = info["truth"]
        truth_set = set(truth) if isinstance(truth, (set, frozenset, list, tuple)) else {truth}
        pt = dict(params, u=u)
        witness = {
            "printed": info["printed"],
            "computed": {str(v): c for v, c in sorted(vals.items())},
        }
        if set(seen) == truth_set:
            out.append(
                _entry(
                    check,
                    pt,
                    "discrepancy",
                    f"printed value {info['printed']} but computed values are {seen}",
                    witness=witness,
                    claim=info["claim"],
                )
            )
        else:
            out.append(
                _entry(
                    check,
                    pt,
                    "discrepancy",
                    f"computed values {seen} match neither the printed value nor the established truth {sorted(truth_set)}",
                    witness=witness,
                )
            )
    return sorted(out, key=lambda e: e["params"].get("u", -1))


@_register(
    "alt-code-tables",
    "rank tables of maximal alternating codes at the two near-full distances",
    ("alt-table-even-wide", "alt-table-odd-near-full", "table-props-maximality"),
)
def suite_alt_code_tables(profile: str) -> list[dict]:
    out = []
    instances = [("alt_dg", {"n": 5, "q": 2, "d": 4, "s": 1})]
    if profile == FULL:
        instances += [
            ("alt_dg", {"n": 5, "q": 3, "d": 4, "s": 1}),
            ("alt_dg", {"n": 7, "q": 2, "d": 6, "s": 1}),
        ]
    for family, kwargs in instances:
        code = construct(family, **kwargs)
        n = kwargs["n"]
        prof = rank_profile(code)
        params = dict(kwargs, case="odd-near-full")
        expected = {0: 0, 1: n - 1}
        expected.update({u: code.dim for u in range(2, n + 1)})
        out.extend(_table_entries("alt-table", params, prof, expected))
    out.append(
        _entry(
            "alt-table",
            {"case": "even-wide"},
            "skipped",
            "no maximal even-dimension alternating construction ships at desk scale; "
            "the padded-code entry shows the table fails without maximality",
        )
    )
    # the near-full table needs maximality: a padded non-maximal code
    # with the same distance violates the small-dimension values
    small = construct("alt_dg", n=5, q=2, d=4, s=1)
    big = Ambient.alternating(6, 2)
    padded_mats = []
    for mat in small.matrices():
        rows = [[0] * 6 for _ in range(6)]
        for i in range(5):
            for j in range(5):
                rows[i][j] = mat.rows[i][j]
        padded_mats.append(Matrix(big.entry_field, rows))
    padded = Code.from_matrices(big, padded_mats)
    prof = rank_profile(padded)
    seen_u1 = sorted(prof[1])
    table_value = (2 * 6 - 1 - 1) // 2
    params = {"instance": "alt-dg n=5 q=2 d=4 padded into n=6", "u": 1}
    if set(seen_u1) != {table_value}:
        out.append(
            _entry(
                "alt-table-maximality",
                params,
                "discrepancy",
                f"non-maximal distance-4 code in dimension 6 has u=1 values {seen_u1}, so the table needs maximality",
                witness={"values": {str(v): c for v, c in sorted(prof[1].items())}, "dim": padded.dim},
                claim="table-props-maximality",
            )
        )
    else:
        out.append(
            _entry(
                "alt-table-maximality",
                params,
                "discrepancy",
                "padded code unexpectedly satisfies the table",
                witness={"values": {str(v): c for v, c in sorted(prof[1].items())}},
            )
        )
    return out


@_register(
    "alt-bracket",
    "missing middle rank of the odd-dimension alternating family, resolved per subspace",
    ("alt-bracket-middle",),
)
def suite_alt_bracket(profile: str) -> list[dict]:
    out = []
    qs = (2,) if profile == QUICK else (2, 3)
    for q in qs:
        code = construct("alt_dg", n=5, q=q, d=2, s=1)
        prof = rank_profile(code)
        params = {"family": "alt_dg", "n": 5, "q": q, "d": 2, "s": 1}
        expected = {0: 0, 1: 4, 2: 7, 4: 10, 5: 10}
        out.extend(
            _table_entries("alt-bracket", params, prof, expected, bracket={3: {9, 10}})
        )
    return out


@_register(
    "sym-code-tables",
    "rank tables of maximal symmetric codes at the two near-full distances",
    ("sym-table-near-full", "sym-table-odd-wide"),
)
def suite_sym_code_tables(profile: str) -> list[dict]:
    out = []
    corner_instances = [(4, 2), (5, 2)] if profile == QUICK else [(4, 2), (5, 2), (4, 3), (5, 3)]
    for big_n, q in corner_instances:
        parent = construct("sym_schmidt", n=big_n, q=q, d=big_n, s=1)
        code = parent.corner_submatrix_code(big_n - 1)
        n = big_n - 1
        prof = rank_profile(code)
        params = {"instance": f"corner of sym_schmidt n={big_n} q={q} d={big_n}", "n": n, "q": q}
        expected = {0: 0, 1: n}
        expected.update({u: code.dim for u in range(2, n + 1)})
        out.extend(_table_entries("sym-table-near-full", params, prof, expected))
    wide_instances = [(5, 2)] if profile == QUICK else [(5, 2), (5, 3), (7, 2)]
    for n, q in wide_instances:
        code = construct("sym_schmidt", n=n, q=q, d=n - 2, s=1)
        prof = rank_profile(code)
        params = {"family": "sym_schmidt", "n": n, "q": q, "d": n - 2, "s": 1}
        expected = {0: 0, 1: (2 * n) // 2, 2: 2 * (2 * n - 1) // 2}
        expected.update({u: code.dim for u in range(3, n + 1)})
        out.extend(_table_entries("sym-table-odd-wide", params, prof, expected))
    return out


@_register(
    "sym-bracket-u2",
    "two-dimensional bracket of the even-dimension symmetric family, resolved per subspace",
    ("sym-bracket-two",),
)
def suite_sym_bracket_u2(profile: str) -> list[dict]:
    out = []
    instances = [(4, 2)] if profile == QUICK else [(4, 2), (4, 3), (6, 2)]
    for n, q in instances:
        code = construct("sym_schmidt", n=n, q=q, d=n - 2, s=1)
        prof = rank_profile(code)
        params = {"family": "sym_schmidt", "n": n, "q": q, "d": n - 2, "s": 1}
        expected = {0: 0, 1: n}
        expected.update({u: 2 * n for u in range(3, n + 1)})
        out.extend(_table_entries("sym-bracket-two", params, prof, expected, bracket={2: {2 * n, 2 * n - 1}}))
    return out


@_register(
    "sym-bracket-u4",
    "four-dimensional bracket of the odd-dimension wide symmetric family, resolved per subspace",
    ("sym-bracket-four",),
)
def suite_sym_bracket_u4(profile: str) -> list[dict]:
    if profile == QUICK:
        return [
            _entry(
                "sym-bracket-four",
                {"family": "sym_schmidt", "n": 7, "q": 2, "d": 3, "s": 1},
                "skipped",
                "large ground-space instance runs in the full profile",
            )
        ]
    out = []
    code = construct("sym_schmidt", n=7, q=2, d=3, s=1)
    prof = rank_profile(code)
    n = 7
    params = {"family": "sym_schmidt", "n": n, "q": 2, "d": 3, "s": 1}
    expected = {0: 0, 1: 7, 2: 13, 3: 18}
    expected.update({u: 3 * n for u in range(5, n + 1)})
    out.extend(_table_entries("sym-bracket-four", params, prof, expected, bracket={4: {3 * n, 3 * n - 1}}))
    return out


@_register(
    "sym-twist-bracket",
    "rank table of the twisted symmetric family with the three-value bracket resolved",
    ("sym-twist-table", "sym-twist-small-u"),
)
def suite_sym_twist_bracket(profile: str) -> list[dict]:
    if profile == QUICK:
        return [
            _entry(
                "sym-twist-table",
                {"family": "sym_middle_three", "n": 6, "q": 3, "s": 1},
                "skipped",
                "odd-characteristic instance runs in the full profile",
            )
        ]
    code = construct("sym_middle_three", n=6, q=3, s=1)
    prof = rank_profile(code)
    n = 6
    params = {"family": "sym_middle_three", "n": n, "q": 3, "s": 1}
    expected = {0: 0}
    expected.update({u: 2 * n for u in range(3, n + 1)})
    return _table_entries(
        "sym-twist-table",
        params,
        prof,
        expected,
        bracket={2: {2 * n, 2 * n - 1, 2 * n - 2}},
        misprints={1: {"printed": n - 1, "truth": n, "claim": "sym-twist-small-u"}},
    )


@_register(
    "her-code-tables",
    "rank tables of the near-full-distance and zero-diagonal Hermitian codes",
    ("her-table-near-full", "her-zero-diag-values", "her-small-support-values", "her-zero-diag-table"),
)
def suite_her_code_tables(profile: str) -> list[dict]:
    out = []
    near_full = [(3, 2)] if profile == QUICK else [(3, 2), (3, 3), (4, 2)]
    for n, q in near_full:
        code = construct("her_opposite", n=n, q=q, d=n - 1, s=1)
        prof = rank_profile(code)
        params = {"family": "her_opposite", "n": n, "q": q, "d": n - 1, "s": 1}
        expected = {0: 0}
        expected.update({u: code.dim for u in range(2, n + 1)})
        out.extend(
            _table_entries(
                "her-table-near-full",
                params,
                prof,
                expected,
                misprints={1: {"printed": code.dim, "truth": 2 * n - 1, "claim": "her-small-support-values"}},
            )
        )
    # zero-diagonal code: the printed value u(2n-u-1) holds at n=2 but
    # is only attained by part of the lattice once n >= 3
    zero_diag = [(2, 2), (3, 2)] if profile == QUICK else [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)]
    mixed_truth = {
        (3, 2): {1: {4, 5}},
        (3, 3): {1: {4, 5}},
        (4, 2): {1: {6, 7}, 2: {10, 11, 12}},
    }
    for n, q in zero_diag:
        code = construct("her_zero_diag", n=n, q=q)
        prof = rank_profile(code)
        params = {"family": "her_zero_diag", "n": n, "q": q}
        printed = {u: u * (2 * n - u - 1) for u in range(n + 1)}
        mixed = mixed_truth.get((n, q), {})
        expected = {u: v for u, v in printed.items() if u not in mixed}
        misprints = {
            u: {"printed": printed[u], "truth": truth, "claim": "her-zero-diag-table"} for u, truth in mixed.items()
        }
        out.extend(_table_entries("her-zero-diag-values", params, prof, expected, misprints=misprints))
    return out


@_register(
    "her-bracket-u3",
    "rank table of the even-dimension opposite-parity Hermitian family with its bracket resolved",
    ("her-bracket-three", "her-small-support-values"),
)
def suite_her_bracket_u3(profile: str) -> list[dict]:
    out = []
    qs = (2,) if profile == QUICK else (2, 3)
    n = 4
    for q in qs:
        code = construct("her_opposite", n=n, q=q, d=n - 3, s=1)
        prof = rank_profile(code)
        params = {"family": "her_opposite", "n": n, "q": q, "d": n - 3, "s": 1}
        expected = {0: 0, 4: 4 * n}
        out.extend(
            _table_entries(
                "her-bracket-three",
                params,
                prof,
                expected,
                bracket={3: {4 * n, 4 * n - 1}},
                misprints={
                    1: {"printed": 1, "truth": 2 * n - 1, "claim": "her-small-support-values"},
                    2: {"printed": 4, "truth": 2 * (2 * n - 2), "claim": "her-small-support-values"},
                },
            )
        )
    return out


@_register(
    "her-bracket-u2",
    "rank table of the odd-dimension narrow Hermitian family with its bracket and case gaps resolved",
    ("her-bracket-two", "her-small-support-values", "her-e-case-split"),
)
def suite_her_bracket_u2(profile: str) -> list[dict]:
    out = []
    instances = [(5, 2)] if profile == QUICK else [(5, 2), (5, 3)]
    for n, q in instances:
        code = construct("her_odd_odd", n=n, q=q, d=n - 2, s=1)
        prof = rank_profile(code)
        params = {"family": "her_odd_odd", "n": n, "q": q, "d": n - 2, "s": 1}
        three_n = 3 * n
        for u in sorted(prof):
            vals = prof[u]
            seen = sorted(vals)
            counts = {str(v): c for v, c in sorted(vals.items())}
            pt = dict(params, u=u)
            if u == 0:
                if seen == [0]:
                    out.append(_entry("her-bracket-two", pt, "verified", "zero subspace has rank zero"))
                else:
                    out.append(_entry("her-bracket-two", pt, "discrepancy", "nonzero rank at the zero subspace", witness={"values": counts}))
            elif u == 1:
                if seen == [2 * n - 1]:
                    out.append(
                        _entry(
                            "her-bracket-two",
                            pt,
                            "discrepancy",
                            f"printed value 1 but every line has rank {2 * n - 1}",
                            witness={"printed": 1, "computed": counts},
                            claim="her-small-support-values",
                        )
                    )
                else:
                    out.append(_entry("her-bracket-two", pt, "discrepancy", f"values {seen} match neither print nor truth", witness={"computed": counts}))
            elif u == 2:
                if set(seen) <= {three_n, three_n - 1}:
                    out.append(
                        _entry(
                            "her-bracket-two",
                            pt,
                            "bracket-resolved",
                            f"bracket narrowed to {seen} with counts {dict(sorted(vals.items()))}",
                            witness={"values": counts},
                        )
                    )
                    out.append(
                        _entry(
                            "her-bracket-two",
                            pt,
                            "discrepancy",
                            "the case split also prints 4 for this dimension, which contradicts the bracket it states alongside",
                            witness={"printed": 4, "computed": counts},
                            claim="her-e-case-split",
                        )
                    )
                else:
                    out.append(_entry("her-bracket-two", pt, "discrepancy", f"values {seen} leave the stated bracket", witness={"computed": counts}))
            elif u == 3:
                if seen == [three_n]:
                    out.append(
                        _entry(
                            "her-bracket-two",
                            pt,
                            "discrepancy",
                            "the printed case split omits this dimension; computed rank is constant 3n",
                            witness={"computed": counts},
                            claim="her-e-case-split",
                        )
                    )
                else:
                    out.append(_entry("her-bracket-two", pt, "discrepancy", f"values {seen} at the omitted dimension", witness={"computed": counts}))
            else:
                if seen == [three_n]:
                    out.append(_entry("her-bracket-two", pt, "verified", f"all subspaces of dimension {u} have rank {three_n}"))
                else:
                    out.append(_entry("her-bracket-two", pt, "discrepancy", f"expected constant {three_n}, observed {seen}", witness={"computed": counts}))
    return out


@_register(
    "conjugate-symmetry",
    "row-support shortenings are the conjugate images of column-support shortenings for Hermitian codes",
    ("conjugate-row-column-relation",),
)
def suite_conjugate_symmetry(profile: str) -> list[dict]:
    out = []
    roster = [
        ("her-opposite n=3 q=2 d=2", construct("her_opposite", n=3, q=2, d=2, s=1)),
        ("her-zero-diag n=3 q=2", construct("her_zero_diag", n=3, q=2)),
        ("full hermitian space n=2 q=2", Code.full(Ambient.hermitian(2, 2))),
    ]
    if profile == FULL:
        roster += [
            ("her-opposite n=3 q=3 d=2", construct("her_opposite", n=3, q=3, d=2, s=1)),
            ("her-middle-gamma n=3 q=3", construct("her_middle_gamma", n=3, q=3, s=1)),
            ("her-odd-odd n=3 q=2 d=1", construct("her_odd_odd", n=3, q=2, d=1, s=1)),
        ]
    for label, code in roster:
        amb = code.ambient
        lat = amb.column_lattice()
        cols = QPolymatroid.from_code_columns(code)
        rows = QPolymatroid.from_code_rows(code)
        perm = lat.frobenius_perm(amb.conj_power)
        params = {"instance": label}
        if np.array_equal(rows.rho[perm], cols.rho):
            out.append(_entry("conjugate-symmetry", params, "verified", "row table equals the conjugate of the column table"))
        else:
            bad = int(np.nonzero(rows.rho[perm] != cols.rho)[0][0])
            out.append(
                _entry(
                    "conjugate-symmetry",
                    params,
                    "discrepancy",
                    f"tables differ at lattice index {bad}",
                    witness={"index": bad, "row_value": int(rows.rho[perm][bad]), "column_value": int(cols.rho[bad])},
                )
            )
    # for entry fields without the conjugation twist the two tables agree outright
    plain = [
        ("alt-dg n=5 q=2 d=2", construct("alt_dg", n=5, q=2, d=2, s=1)),
        ("sym-schmidt n=4 q=2 d=2", construct("sym_schmidt", n=4, q=2, d=2, s=1)),
    ]
    for label, code in plain:
        cols = QPolymatroid.from_code_columns(code)
        rows = QPolymatroid.from_code_rows(code)
        params = {"instance": label}
        if np.array_equal(rows.rho, cols.rho):
            out.append(_entry("row-column-match", params, "verified", "row and column tables coincide"))
        else:
            out.append(_entry("row-column-match", params, "discrepancy", "row and column tables differ"))
    return out


def _weights_roster(profile: str):
    items = [
        ("alt-dg n=5 q=2 d=2", construct("alt_dg", n=5, q=2, d=2, s=1)),
        ("alt-dg n=5 q=2 d=4", construct("alt_dg", n=5, q=2, d=4, s=1)),
        ("sym-schmidt n=3 q=2 d=3", construct("sym_schmidt", n=3, q=2, d=3, s=1)),
        ("sym-schmidt n=4 q=2 d=2", construct("sym_schmidt", n=4, q=2, d=2, s=1)),
        ("her-opposite n=3 q=2 d=2", construct("her_opposite", n=3, q=2, d=2, s=1)),
        ("her-zero-diag n=2 q=3", construct("her_zero_diag", n=2, q=3)),
    ]
    if profile == FULL:
        items += [
            ("sym-schmidt n=3 q=3 d=3", construct("sym_schmidt", n=3, q=3, d=3, s=1)),
            ("alt-dg n=5 q=3 d=4", construct("alt_dg", n=5, q=3, d=4, s=1)),
            ("her-zero-diag n=3 q=3", construct("her_zero_diag", n=3, q=3)),
            ("sym-pair-twist n=4 q=3", construct("sym_pair_twist", n=4, q=3, s=1)),
        ]
    return items


@_register(
    "weights-bounds",
    "generalized weight sequences are monotone and respect the first-weight bound",
    (),
)
def suite_weights_bounds(profile: str) -> list[dict]:
    out = []
    for label, code in _weights_roster(profile):
        amb = code.ambient
        d = code.min_distance()
        seq = restricted_weights(code)
        params = {"instance": label, "kind": amb.kind, "n": amb.n, "q": amb.q}
        monotone = all(a <= b for a, b in zip(seq, seq[1:]))
        out.append(
            _entry(
                "weights-monotone",
                params,
                "verified" if monotone else "discrepancy",
                f"weight sequence of length {len(seq)} is non-decreasing"
                if monotone
                else "weight sequence decreases somewhere",
                witness={"weights": seq},
            )
        )
        floor = first_weight_lower_bound(amb.kind, d)
        ok = seq[0] >= floor
        out.append(
            _entry(
                "first-weight-bound",
                params,
                "verified" if ok else "discrepancy",
                f"d_1 = {seq[0]} >= {floor} for distance {d}"
                if ok
                else f"d_1 = {seq[0]} < {floor}",
                witness={"d1": seq[0], "bound": floor, "distance": d},
            )
        )
    return out


def _dual_distance_roster(profile: str):
    """(label, family, kwargs, skip primal distance enumeration) tuples."""
    items = [
        ("alt_dg", dict(n=5, q=2, d=4), False),
        ("alt_dg", dict(n=7, q=2, d=6), False),
        ("sym_schmidt", dict(n=4, q=2, d=2), False),
        ("sym_schmidt", dict(n=3, q=2, d=3), False),
        ("sym_schmidt", dict(n=5, q=2, d=3), False),
        ("sym_schmidt", dict(n=4, q=2, d=4), False),
        ("sym_schmidt", dict(n=5, q=2, d=5), False),
        ("her_opposite", dict(n=3, q=2, d=2), False),
        ("her_opposite", dict(n=4, q=2, d=3), False),
        ("her_zero_diag", dict(n=3, q=2), False),
        ("her_odd_odd", dict(n=5, q=2, d=3), False),
    ]
    if profile == FULL:
        items += [
            ("alt_dg", dict(n=5, q=3, d=4), False),
            ("sym_schmidt", dict(n=4, q=3, d=2), False),
            ("sym_schmidt", dict(n=3, q=3, d=3), False),
            ("sym_schmidt", dict(n=5, q=3, d=3), False),
            ("sym_schmidt", dict(n=4, q=3, d=4), False),
            ("sym_schmidt", dict(n=5, q=3, d=5), False),
            ("her_opposite", dict(n=3, q=3, d=2), False),
            ("her_opposite", dict(n=4, q=3, d=3), False),
            ("her_zero_diag", dict(n=3, q=3), False),
            ("her_odd_odd", dict(n=5, q=3, d=3), True),
        ]
    return items


@_register(
    "dual-distance-bounds",
    "dual distances respect the per-kind bounds and the exact maximal-code values",
    ("sym-dual-distance-even-q",),
)
def suite_dual_distance_bounds(profile: str) -> list[dict]:
    out = []
    for family, kw, skip_primal in _dual_distance_roster(profile):
        code = construct(family, **kw)
        amb = code.ambient
        n, q = amb.n, amb.q
        declared = kw.get("d", 2)
        if skip_primal:
            d = declared
        else:
            d = code.min_distance()
        dual = code.dual()
        params = {"family": family, "n": n, "q": q, "d": d}
        if dual.dim == 0:
            out.append(
                _entry(
                    "dual-distance-bound",
                    params,
                    "skipped",
                    "the dual code is zero, so it has no minimum distance",
                )
            )
            continue
        dstar = dual.min_distance()
        cap = dual_distance_bound(amb.kind, n, d)
        ok = dstar <= cap
        out.append(
            _entry(
                "dual-distance-bound",
                params,
                "verified" if ok else "discrepancy",
                f"dual distance {dstar} <= {cap}" if ok else f"dual distance {dstar} > {cap}",
                witness={"dual_distance": dstar, "bound": cap},
            )
        )
        maximal = Fraction(code.dim) == dimension_bound(amb.kind, n, d, m=amb.m)
        want = maximum_code_dual_distance(amb.kind, n, d)
        if amb.kind == ALT and d % 2 == 0 and 2 < d < n:
            want = 2 * (n // 2) - d + 4
        if not maximal or want is None:
            continue
        if dstar == want:
            out.append(
                _entry(
                    "dual-distance-maximal",
                    params,
                    "verified",
                    f"maximal code attains the forced dual distance {want}",
                    witness={"dual_distance": dstar},
                )
            )
        elif amb.kind == SYM and q % 2 == 0:
            out.append(
                _entry(
                    "dual-distance-maximal",
                    params,
                    "discrepancy",
                    f"table prints dual distance {want} for a maximal code; over F_{q} "
                    f"the repaired pairing gives {dstar}",
                    witness={"dual_distance": dstar, "printed": want},
                    claim="sym-dual-distance-even-q",
                )
            )
        else:
            out.append(
                _entry(
                    "dual-distance-maximal",
                    params,
                    "discrepancy",
                    f"maximal code has dual distance {dstar}, expected {want}",
                    witness={"dual_distance": dstar, "printed": want},
                )
            )
    return out


@_register(
    "punctured-corner",
    "corner codes of maximal symmetric codes stay maximal with distance d - 2",
    ("punctured-parity-hypothesis",),
)
def suite_punctured_corner(profile: str) -> list[dict]:
    out = []
    qs = (2, 3) if profile == FULL else (2,)
    for q in qs:
        try:
            construct("sym_schmidt", n=5, q=q, d=4, s=1)
            raised = None
        except ParamError as exc:
            raised = str(exc)
        out.append(
            _entry(
                "corner-parity-hypothesis",
                {"n": 5, "d": 4, "q": q},
                "discrepancy",
                "the printed hypothesis asks for an odd rank gap, which the symmetric "
                f"family cannot produce: {raised}; the even-gap instances below show "
                "the conclusion at the constructible parity",
                witness={"param_error": raised},
                claim="punctured-parity-hypothesis",
            )
        )
    plans = [(5, 5, 2), (4, 4, 2), (6, 4, 2)]
    if profile == FULL:
        plans += [(5, 5, 3), (4, 4, 3), (3, 3, 3)]
    for n, d, q in plans:
        code = construct("sym_schmidt", n=n, q=q, d=d, s=1)
        corner = code.corner_submatrix_code(n - 1)
        got_d = corner.min_distance()
        bound = dimension_bound(SYM, n - 1, d - 2)
        ok = got_d == d - 2 and Fraction(corner.dim) == bound
        out.append(
            _entry(
                "corner-maximality",
                {"n": n, "d": d, "q": q},
                "verified" if ok else "discrepancy",
                f"corner code has distance {got_d} and dimension {corner.dim} "
                f"against bound {bound}",
                witness={
                    "corner_dim": corner.dim,
                    "corner_distance": got_d,
                    "bound": int(bound),
                },
            )
        )
    return out


def _corner_roster(profile: str):
    items = [
        ("alt-dg n=5 q=2 d=4", construct("alt_dg", n=5, q=2, d=4, s=1), (2, 3)),
        ("sym-schmidt n=4 q=2 d=2", construct("sym_schmidt", n=4, q=2, d=2, s=1), (2, 3)),
        ("her-opposite n=3 q=2 d=2", construct("her_opposite", n=3, q=2, d=2, s=1), (2,)),
    ]
    if profile == FULL:
        items += [
            ("sym-schmidt n=3 q=3 d=3", construct("sym_schmidt", n=3, q=3, d=3, s=1), (2,)),
            ("her-zero-diag n=3 q=3", construct("her_zero_diag", n=3, q=3), (2,)),
            ("alt-dg n=5 q=3 d=4", construct("alt_dg", n=5, q=3, d=4, s=1), (2, 3)),
        ]
    return items


@_register(
    "corner-restriction",
    "the corner-code polymatroid is the column polymatroid of the truncated code, restricted",
    (),
)
def suite_corner_restriction(profile: str) -> list[dict]:
    out = []
    for label, code, sizes in _corner_roster(profile):
        amb = code.ambient
        field = amb.entry_field
        for u in sizes:
            corner = code.corner_submatrix_code(u)
            m_corner = QPolymatroid.from_code_columns(corner)
            mats = [Matrix(field, [list(r[:u]) for r in mat.rows]) for mat in code.matrices()]
            trunc = Code.from_matrices(
                Ambient.full_space(amb.n, u, amb.q, amb.ell), mats
            )
            m_trunc = QPolymatroid.from_code_columns(trunc)
            lift = lattice_lift_map(m_corner.lattice, m_trunc.lattice, range(u))
            same = bool((m_corner.rho == m_trunc.rho[lift]).all())
            out.append(
                _entry(
                    "corner-restriction",
                    {"instance": label, "u": u},
                    "verified" if same else "discrepancy",
                    f"corner table matches the truncated-column table at all "
                    f"{m_corner.lattice.size} subspaces"
                    if same
                    else "corner table disagrees with the truncated-column table",
                    witness={"subspaces": m_corner.lattice.size},
                )
            )
    return out


def _random_full_code(rng: random.Random, amb: Ambient, dim: int) -> Code:
    basis = Code.full(amb).matrices()
    while True:
        code = Code.from_matrices(amb, rng.sample(basis, dim))
        if code.dim == dim:
            return code


def _random_invertible(rng: random.Random, field, k: int) -> Matrix:
    while True:
        mat = Matrix(field, [[rng.randrange(field.order) for _ in range(k)] for _ in range(k)])
        if mat.rank() == k:
            return mat


@_register(
    "puncture-vs-delete",
    "puncturing rows transports the column table through the kept block of the row map",
    (),
)
def suite_puncture_vs_delete(profile: str) -> list[dict]:
    rng = random.Random(2024)
    out = []
    plans = [(3, 3, 2, 4), (3, 3, 2, 5)]
    if profile == FULL:
        plans += [(3, 2, 3, 3), (3, 3, 2, 6)]
    for m, n, q, dim in plans:
        amb = Ambient.full_space(m, n, q, 1)
        field = amb.entry_field
        lat_big = lattice(field, m)
        code = _random_full_code(rng, amb, dim)
        rho_big = QPolymatroid.from_code_columns(code).rho
        for u in (1, 2):
            lat_small = lattice(field, m - u)
            for case in ("identity", "random"):
                if case == "identity":
                    nmat = Matrix.identity(field, m)
                    moved = code
                else:
                    nmat = _random_invertible(rng, field, m)
                    moved = code.transform(nmat, Matrix.identity(field, n))
                kept = Matrix(field, [list(r) for r in nmat.rows[u:]])
                rho_small = QPolymatroid.from_code_columns(moved.puncture_rows(u)).rho
                bad = 0
                for idx in range(lat_small.size):
                    sub = lat_small.subspace(idx)
                    rows = (
                        [(Matrix(field, [list(v)]) @ kept).rows[0] for v in sub.rows[: sub.dim]]
                        if sub.dim
                        else []
                    )
                    want = rho_big[lat_big.index_of(Subspace(field, m, rows))]
                    if int(rho_small[idx]) != int(want):
                        bad += 1
                out.append(
                    _entry(
                        "puncture-transport",
                        {"m": m, "n": n, "q": q, "dim": dim, "u": u, "map": case},
                        "verified" if bad == 0 else "discrepancy",
                        f"punctured table matches the transported table at all "
                        f"{lat_small.size} subspaces"
                        if bad == 0
                        else f"{bad} subspaces disagree after transport",
                        witness={"subspaces": lat_small.size},
                    )
                )
    return out


def _shortened_dual_roster(profile: str):
    items = [
        ("full-sym n=3 q=2", Code.full(Ambient.symmetric(3, 2)), 1),
        ("full-sym n=3 q=3", Code.full(Ambient.symmetric(3, 3)), 1),
        ("sym-schmidt n=4 q=2 d=2", construct("sym_schmidt", n=4, q=2, d=2, s=1), 2),
        ("sym-schmidt n=3 q=3 d=3", construct("sym_schmidt", n=3, q=3, d=3, s=1), 3),
    ]
    if profile == FULL:
        items += [
            ("sym-schmidt n=4 q=3 d=2", construct("sym_schmidt", n=4, q=3, d=2, s=1), 2),
            ("sym-schmidt n=5 q=2 d=3", construct("sym_schmidt", n=5, q=2, d=3, s=1), 3),
            ("sym-middle-three n=6 q=3", construct("sym_middle_three", n=6, q=3, s=1), 4),
        ]
    return items


@_register(
    "dual-shortened-dims",
    "shortening the dual at the first n - 1 coordinates measures the corner-code corank",
    ("dual-shortened-dim-formula",),
)
def suite_dual_shortened_dims(profile: str) -> list[dict]:
    out = []
    for label, code, d in _shortened_dual_roster(profile):
        amb = code.ambient
        n, field = amb.n, amb.entry_field
        params = {"instance": label, "n": n, "q": amb.q, "d": d}
        hyper = _std_subspace(field, n, n - 1)
        shortened = code.dual().shorten_columns(hyper).dim
        corank = n * (n - 1) // 2 - code.corner_submatrix_code(n - 1).dim
        diag_last = Matrix(
            field, [[1 if (i == j == n - 1) else 0 for j in range(n)] for i in range(n)]
        )
        branch = code.contains_matrix(diag_last)
        ok = shortened == corank
        out.append(
            _entry(
                "dual-shortening-identity",
                params,
                "verified" if ok else "discrepancy",
                f"dim of the shortened dual is {shortened}, matching the corner corank"
                if ok
                else f"shortened dual has dim {shortened}, corner corank is {corank}",
                witness={
                    "shortened_dual_dim": shortened,
                    "corner_corank": corank,
                    "last_diagonal_in_code": branch,
                },
            )
        )
        printed = n * (n - 1) // 2 + d - (1 if branch else 2)
        out.append(
            _entry(
                "dual-shortening-printed",
                params,
                "discrepancy",
                f"table prints dim {printed}, which exceeds the dual dimension "
                f"{code.dual().dim}; the computed value is {shortened}",
                witness={
                    "printed": printed,
                    "computed": shortened,
                    "dual_dim": code.dual().dim,
                    "last_diagonal_in_code": branch,
                },
                claim="dual-shortened-dim-formula",
            )
        )
    return out


def _four_term_violations(c_code, i_code, lat) -> tuple[int, int]:
    """Count U, V pairs violating the four-term shortening inequality."""
    dims_c = shortening_dims(c_code, lat, side="columns")
    dims_i = shortening_dims(i_code, lat, side="columns")
    uu, vv = np.meshgrid(np.arange(lat.size), np.arange(lat.size), indexing="ij")
    uu, vv = uu.ravel(), vv.ravel()
    jj = lat.join_indices(uu, vv)
    mm = lat.meet_indices(uu, vv)
    lhs = dims_c[uu] + dims_c[vv] + dims_i[mm] + dims_i[jj]
    rhs = dims_c[mm] + dims_c[jj] + dims_i[uu] + dims_i[vv]
    return int((lhs > rhs).sum()), lat.size * lat.size


@_register(
    "submodular-pairs",
    "the four-term shortening inequality, checked exhaustively for code pairs",
    ("quotient-submodularity",),
)
def suite_submodular_pairs(profile: str) -> list[dict]:
    out = []
    field = Ambient.full_space(3, 3, 2, 1).entry_field
    full = Code.full(Ambient.full_space(3, 3, 2, 1))

    def unit(i, j):
        return Matrix(
            field, [[1 if (a, b) == (i, j) else 0 for b in range(3)] for a in range(3)]
        )

    witness_d = Code.from_matrices(full.ambient, [unit(0, 0), unit(1, 1)])
    lat = lattice(field, 3)
    u_sub = Subspace(field, 3, [[1, 1, 0], [0, 0, 1]])
    v_sub = Subspace(field, 3, [[1, 0, 0], [0, 0, 1]])
    inter = full.intersect(witness_d)
    uv, upv = u_sub.meet(v_sub), u_sub.sum(v_sub)
    lhs = (
        full.shorten_columns(u_sub).dim
        + full.shorten_columns(v_sub).dim
        + inter.shorten_columns(uv).dim
        + inter.shorten_columns(upv).dim
    )
    rhs = (
        full.shorten_columns(uv).dim
        + full.shorten_columns(upv).dim
        + inter.shorten_columns(u_sub).dim
        + inter.shorten_columns(v_sub).dim
    )
    out.append(
        _entry(
            "four-term-counterexample",
            {"m": 3, "n": 3, "q": 2, "pair": "full vs two diagonal units"},
            "discrepancy",
            f"the printed inequality fails: left side {lhs} exceeds right side {rhs} "
            "at a hand-checkable pair of subspaces",
            witness={"lhs": lhs, "rhs": rhs},
            claim="quotient-submodularity",
        )
    )
    rng = random.Random(99)
    plans = [(3, 3, 2, 4)] * 2 + [(3, 3, 2, 6)]
    if profile == FULL:
        plans += [(3, 2, 3, 3), (3, 2, 3, 4)]
    for idx, (m, n, q, dim) in enumerate(plans):
        amb = Ambient.full_space(m, n, q, 1)
        lat_m = lattice(amb.entry_field, m)
        c_code = _random_full_code(rng, amb, dim)
        d_code = _random_full_code(rng, amb, max(1, dim - 1))
        i_code = c_code.intersect(d_code)
        bad, total = _four_term_violations(c_code, i_code, lat_m)
        params = {"m": m, "n": n, "q": q, "dims": [c_code.dim, d_code.dim], "pair": idx}
        if bad == 0:
            out.append(
                _entry(
                    "four-term-pair",
                    params,
                    "verified",
                    f"inequality holds at all {total} subspace pairs for this code pair",
                    witness={"pairs": total},
                )
            )
        else:
            out.append(
                _entry(
                    "four-term-pair",
                    params,
                    "discrepancy",
                    f"inequality fails at {bad} of {total} subspace pairs",
                    witness={"violations": bad, "pairs": total},
                    claim="quotient-submodularity",
                )
            )
    return out


@_register(
    "quotient-tables",
    "difference tables of code pairs match the direct sum-of-codes expression",
    ("quotient-submodularity",),
)
def suite_quotient_tables(profile: str) -> list[dict]:
    rng = random.Random(41)
    out = []
    count = 25 if profile == FULL else 10
    plans = []
    for idx in range(count):
        if profile == FULL and idx % 5 == 4:
            plans.append((3, 2, 3, idx))
        else:
            plans.append((3, 3, 2, idx))
    for m, n, q, idx in plans:
        amb = Ambient.full_space(m, n, q, 1)
        c_code = _random_full_code(rng, amb, rng.randrange(2, amb.dim))
        d_code = _random_full_code(rng, amb, rng.randrange(2, amb.dim))
        params = {"m": m, "n": n, "q": q, "pair": idx, "dims": [c_code.dim, d_code.dim]}
        try:
            left, right = quotient_rank_functions(c_code, d_code)
        except ArithmeticError as exc:
            out.append(
                _entry(
                    "quotient-expressions",
                    params,
                    "discrepancy",
                    f"difference and direct forms disagree: {exc}",
                )
            )
            continue
        out.append(
            _entry(
                "quotient-expressions",
                params,
                "verified",
                "difference form equals the direct sum-of-codes form on both sides",
            )
        )
        for side, table in (("left", left), ("right", right)):
            res = table.check_axioms()
            if res["r1"] and res["r2"] and res["r3"]:
                out.append(
                    _entry(
                        "quotient-axioms",
                        {**params, "side": side},
                        "verified",
                        "difference table satisfies all three rank axioms",
                    )
                )
            elif res["r1"] and res["r2"]:
                out.append(
                    _entry(
                        "quotient-axioms",
                        {**params, "side": side},
                        "discrepancy",
                        "difference table is monotone and bounded but violates the "
                        "exchange axiom, as the counterexample pair predicts",
                        witness={"r3_pairs": res["r3_pairs"]},
                        claim="quotient-submodularity",
                    )
                )
            else:
                out.append(
                    _entry(
                        "quotient-axioms",
                        {**params, "side": side},
                        "discrepancy",
                        f"difference table violates a basic axiom: {res}",
                    )
                )
    return out


def _dual_chain_points(profile: str):
    points = [
        (ALT, 3, 3),
        (SYM, 3, 3),
        (HER, 2, 3),
        (ALT, 4, 2),
        (SYM, 3, 2),
        (HER, 2, 2),
    ]
    if profile == FULL:
        points += [(SYM, 4, 2), (HER, 3, 2)]
    return points


@_register(
    "internal-dual-intersection",
    "the internal dual equals the ambient dual intersected with the matrix space",
    ("sym-even-pairing", "her-even-trace-character"),
)
def suite_internal_dual_intersection(profile: str) -> list[dict]:
    rng = random.Random(23)
    out = []
    for kind, n, q in _dual_chain_points(profile):
        amb = _KIND_MAKER[kind](n, q)
        space = Code.full(amb).embed_full()
        matches = 0
        trials = 3
        space_inside = True
        for _ in range(trials):
            code = _random_restricted_code(rng, amb)
            lhs = code.dual().embed_full()
            rhs = code.delsarte_dual().intersect(space)
            if lhs == rhs:
                matches += 1
            if not code.delsarte_dual().contains_code(space):
                space_inside = False
        params = {"kind": kind, "n": n, "q": q, "codes": trials}
        if q % 2 == 1:
            ok = matches == trials
            out.append(
                _entry(
                    "dual-intersection",
                    params,
                    "verified" if ok else "discrepancy",
                    f"internal dual equals the intersected ambient dual for all "
                    f"{trials} sampled codes"
                    if ok
                    else f"identity fails for {trials - matches} sampled codes at odd q",
                    witness={"matches": matches},
                )
            )
        elif kind == ALT:
            out.append(
                _entry(
                    "dual-intersection-excluded",
                    params,
                    "verified",
                    "even q alternating is excluded by the hypothesis, and indeed the "
                    "ambient pairing vanishes on the whole space here, so the "
                    "intersection returns the full space",
                    witness={"matches": matches, "space_inside_ambient_dual": space_inside},
                )
            )
        elif kind == SYM:
            out.append(
                _entry(
                    "dual-intersection",
                    params,
                    "discrepancy",
                    "the statement covers even q, but the ambient trace pairing is "
                    "degenerate on symmetric matrices there; the nondegenerate "
                    f"replacement pairing matches for {matches} of {trials} codes only",
                    witness={"matches": matches},
                    claim="sym-even-pairing",
                )
            )
        else:
            out.append(
                _entry(
                    "dual-intersection",
                    params,
                    "discrepancy",
                    "the statement covers even q, but the relative-trace pairing "
                    "vanishes on Hermitian matrices there, so the intersection "
                    "returns the full space",
                    witness={"matches": matches, "space_inside_ambient_dual": space_inside},
                    claim="her-even-trace-character",
                )
            )
    return out


def _random_restricted_code(rng: random.Random, amb: Ambient) -> Code:
    basis = Code.full(amb).matrices()
    dim = rng.randrange(1, amb.dim)
    while True:
        code = Code.from_matrices(amb, rng.sample(basis, dim))
        if 0 < code.dim < amb.dim:
            return code


@_register(
    "dual-difference",
    "dual-table minus internal-dual-table equals the quotient by the intersected dual",
    ("sym-even-pairing", "her-even-trace-character", "quotient-submodularity"),
)
def suite_dual_difference(profile: str) -> list[dict]:
    rng = random.Random(67)
    out = []
    for kind, n, q in _dual_chain_points(profile):
        amb = _KIND_MAKER[kind](n, q)
        space = Code.full(amb).embed_full()
        code = _random_restricted_code(rng, amb)
        params = {"kind": kind, "n": n, "q": q, "dim": code.dim}
        star = code.dual()
        perp = code.delsarte_dual()
        table = QPolymatroid.from_code_columns(code)
        diff = table.dual().rho - QPolymatroid.from_code_columns(star).rho
        nested = perp.contains_code(star.embed_full())
        quot, _ = quotient_rank_functions(perp, star.embed_full())
        quot_ok = nested and bool((quot.rho == diff).all())
        out.append(
            _entry(
                "difference-quotient",
                params,
                "verified" if quot_ok else "discrepancy",
                "dual-minus-internal-dual table equals the quotient table and the "
                "internal dual embeds in the ambient dual"
                if quot_ok
                else "quotient form disagrees (or the internal dual does not embed "
                "in the ambient dual)",
                witness={"internal_dual_nested": nested},
                claim=None
                if quot_ok
                else ("sym-even-pairing" if kind == SYM else "her-even-trace-character"),
            )
        )
        lat = table.lattice
        comp = lat.complement_perm()
        sum_dim = perp.add_code(space).dim
        direct = np.empty(lat.size, dtype=np.int64)
        for idx in range(lat.size):
            w = lat.subspace(int(comp[idx]))
            direct[idx] = sum_dim - perp.shorten_columns(w).add_code(space).dim
        direct_ok = bool((diff == direct).all())
        if q % 2 == 1:
            out.append(
                _entry(
                    "difference-direct",
                    params,
                    "verified" if direct_ok else "discrepancy",
                    "difference table equals the direct sum-with-space expression"
                    if direct_ok
                    else "direct expression disagrees at odd q",
                )
            )
        elif kind == ALT:
            out.append(
                _entry(
                    "difference-direct-excluded",
                    params,
                    "verified",
                    "even q alternating is excluded by the hypothesis; the direct "
                    f"expression {'still holds' if direct_ok else 'indeed fails'} here",
                    witness={"direct_matches": direct_ok},
                )
            )
        else:
            out.append(
                _entry(
                    "difference-direct",
                    params,
                    "verified" if direct_ok else "discrepancy",
                    "difference table equals the direct expression"
                    if direct_ok
                    else "the statement covers even q, but the direct expression "
                    "inherits the degenerate ambient pairing and fails",
                    claim=None
                    if direct_ok
                    else ("sym-even-pairing" if kind == SYM else "her-even-trace-character"),
                )
            )
        res = QPolymatroid(lat, diff, table.r).check_axioms()
        if res["r1"] and res["r2"] and res["r3"]:
            out.append(
                _entry(
                    "difference-axioms",
                    params,
                    "verified",
                    "difference table satisfies all three rank axioms",
                )
            )
        else:
            out.append(
                _entry(
                    "difference-axioms",
                    params,
                    "discrepancy",
                    "difference table violates the exchange axiom, as the "
                    "counterexample pair predicts",
                    witness={
                        "r1": res["r1"],
                        "r2": res["r2"],
                        "r3_pairs": res["r3_pairs"],
                    },
                    claim="quotient-submodularity",
                )
            )
    return out


@_register(
    "even-char-corollary",
    "over F_2 the dual table of a code between Alt and Sym matches its ambient-dual code table",
    ("sym-even-pairing",),
)
def suite_even_char_corollary(profile: str) -> list[dict]:
    n, q = 3, 2
    amb = Ambient.symmetric(n, q)
    field = amb.entry_field
    alt_inside = Code.from_matrices(amb, Code.full(Ambient.alternating(n, q)).matrices())
    space = Code.full(amb).embed_full()
    diag_lat = lattice(field, n)

    def diag_mat(vec):
        return Matrix(field, [[vec[i] if i == j else 0 for j in range(n)] for i in range(n)])

    out = []
    internal_mismatches = 0
    for idx in range(diag_lat.size):
        w_sub = diag_lat.subspace(idx)
        mats = list(alt_inside.matrices()) + [diag_mat(v) for v in w_sub.rows[: w_sub.dim]]
        code = Code.from_matrices(amb, mats)
        perp = code.delsarte_dual()
        statement_dual = perp.intersect(space).restricted_to(amb)
        left = QPolymatroid.from_code_columns(code).dual()
        right = QPolymatroid.from_code_columns(statement_dual)
        ok = bool((left.rho == right.rho).all()) and left.r == right.r
        out.append(
            _entry(
                "corollary-table",
                {"n": n, "q": q, "dim": code.dim, "code": idx},
                "verified" if ok else "discrepancy",
                "dual table equals the table of the ambient dual, which lies between "
                "Alt and Sym here"
                if ok
                else "dual table disagrees with the ambient-dual code table",
                witness={"ambient_dual_inside_sym": perp == statement_dual.embed_full()},
            )
        )
        internal = QPolymatroid.from_code_columns(code.dual())
        if not bool((left.rho == internal.rho).all()):
            internal_mismatches += 1
    out.append(
        _entry(
            "corollary-internal-dual",
            {"n": n, "q": q, "codes": diag_lat.size},
            "discrepancy",
            "with the package's nondegenerate symmetric pairing the internal dual "
            f"differs from the ambient dual here, so the table equality fails for "
            f"{internal_mismatches} of {diag_lat.size} codes",
            witness={"mismatches": internal_mismatches},
            claim="sym-even-pairing",
        )
    )
    return out


@_register(
    "ambient-dual-tables",
    "dual tables of full-matrix codes equal the tables of their ambient duals",
    (),
)
def suite_ambient_dual_tables(profile: str) -> list[dict]:
    rng = random.Random(12)
    out = []
    plans = [(3, 3, 2), (2, 3, 2)]
    if profile == FULL:
        plans += [(3, 2, 3), (3, 3, 3)]
    for m, n, q in plans:
        amb = Ambient.full_space(m, n, q, 1)
        for t in range(3):
            code = _random_full_code(rng, amb, rng.randrange(1, amb.dim))
            perp = code.delsarte_dual()
            col_ok = _tables_equal(
                QPolymatroid.from_code_columns(code).dual(),
                QPolymatroid.from_code_columns(perp),
            )
            row_ok = _tables_equal(
                QPolymatroid.from_code_rows(code).dual(),
                QPolymatroid.from_code_rows(perp),
            )
            out.append(
                _entry(
                    "ambient-dual-tables",
                    {"m": m, "n": n, "q": q, "dim": code.dim, "code": t},
                    "verified" if col_ok and row_ok else "discrepancy",
                    "column and row dual tables both equal the ambient-dual tables"
                    if col_ok and row_ok
                    else f"table mismatch (columns {col_ok}, rows {row_ok})",
                )
            )
    return out


def _tables_equal(left: QPolymatroid, right: QPolymatroid) -> bool:
    return left.r == right.r and bool((left.rho == right.rho).all())


@_register(
    "equivalence-maps",
    "congruent codes give equivalent tables and unrelated codes give distinct ones",
    (),
)
def suite_equivalence_maps(profile: str) -> list[dict]:
    rng = random.Random(31)
    out = []
    cases = [
        ("sym-schmidt n=3 q=2 d=3", construct("sym_schmidt", n=3, q=2, d=3, s=1)),
        ("her-zero-diag n=2 q=2", construct("her_zero_diag", n=2, q=2)),
    ]
    if profile == FULL:
        cases.append(("sym-schmidt n=3 q=3 d=3", construct("sym_schmidt", n=3, q=3, d=3, s=1)))
    for label, code in cases:
        amb = code.ambient
        pmat = _random_invertible(rng, amb.entry_field, amb.n)
        moved = code.congruence(pmat)
        rel = compare(
            QPolymatroid.from_code_columns(code),
            QPolymatroid.from_code_columns(moved),
        )
        ok = rel["relation"] in ("equal", "equal_after")
        out.append(
            _entry(
                "congruence-equivalence",
                {"instance": label},
                "verified" if ok else "discrepancy",
                f"congruence image compares as {rel['relation']!r}",
                witness={"relation": rel["relation"]},
            )
        )
    sym_small = construct("sym_schmidt", n=3, q=2, d=3, s=1)
    sym_full = Code.full(Ambient.symmetric(3, 2))
    rel = compare(
        QPolymatroid.from_code_columns(sym_small),
        QPolymatroid.from_code_columns(sym_full),
    )
    out.append(
        _entry(
            "distinct-tables",
            {"pair": "maximal 3-code vs full space, n=3 q=2"},
            "verified" if rel["relation"] == "distinct" else "discrepancy",
            f"tables of different profiles compare as {rel['relation']!r}",
            witness={"relation": rel["relation"]},
        )
    )
    return out


def _claims_doc_path():
    from pathlib import Path

    return Path(__file__).resolve().parents[2] / "docs" / "claims.md"


def _parse_claims_doc(text: str) -> tuple[set[str], set[str], set[str]]:
    """Claim ids in the deviations section, suite ids referenced, statement ids."""
    import re

    deviation_ids: set[str] = set()
    suite_ids: set[str] = set()
    statement_ids: set[str] = set()
    in_deviations = False
    for line in text.splitlines():
        if line.startswith("#"):
            in_deviations = "deviation" in line.lower()
            continue
        stripped = line.strip()
        if not stripped.startswith("-"):
            continue
        tags = re.findall(r"`([a-z0-9-]+)`", stripped)
        if not tags:
            continue
        if in_deviations:
            deviation_ids.add(tags[0])
        else:
            statement_ids.add(tags[0])
            for match in re.findall(r"suite `([a-z0-9-]+)`", stripped):
                suite_ids.add(match)
    return deviation_ids, suite_ids, statement_ids


@_register(
    "registry-coverage",
    "the claims document, the deviation registry, and the suite table agree",
    (),
)
def suite_registry_coverage(profile: str) -> list[dict]:
    path = _claims_doc_path()
    if not path.is_file():
        return [
            _entry(
                "claims-doc-present",
                {"path": "docs/claims.md"},
                "discrepancy",
                "the claims document is missing",
            )
        ]
    deviations, suite_refs, statements = _parse_claims_doc(path.read_text())
    out = [
        _entry(
            "claims-doc-present",
            {"path": "docs/claims.md"},
            "verified",
            f"claims document lists {len(statements)} statements and "
            f"{len(deviations)} deviations",
            witness={"statements": len(statements), "deviations": len(deviations)},
        )
    ]
    undeclared = sorted(deviations - set(DOCUMENTED_DEVIATIONS))
    unlisted = sorted(set(DOCUMENTED_DEVIATIONS) - deviations)
    ok = not undeclared and not unlisted
    out.append(
        _entry(
            "deviation-registry-sync",
            {"registry": len(DOCUMENTED_DEVIATIONS), "documented": len(deviations)},
            "verified" if ok else "discrepancy",
            "deviation ids in the document and the registry match exactly"
            if ok
            else f"document-only ids {undeclared}, registry-only ids {unlisted}",
            witness={"document_only": undeclared, "registry_only": unlisted},
        )
    )
    unknown_suites = sorted(suite_refs - set(SUITES))
    out.append(
        _entry(
            "suite-references",
            {"referenced": len(suite_refs)},
            "verified" if not unknown_suites else "discrepancy",
            "every suite referenced by the claims document is registered"
            if not unknown_suites
            else f"unknown suite ids referenced: {unknown_suites}",
            witness={"unknown": unknown_suites},
        )
    )
    uncovered = []
    for sid, suite in SUITES.items():
        for claim in suite.claims:
            if claim not in deviations:
                uncovered.append(f"{sid}:{claim}")
    out.append(
        _entry(
            "suite-claims-documented",
            {"suites": len(SUITES)},
            "verified" if not uncovered else "discrepancy",
            "every deviation a suite can emit is documented"
            if not uncovered
            else f"undocumented suite claims: {sorted(uncovered)}",
            witness={"undocumented": sorted(uncovered)},
        )
    )
    return out
