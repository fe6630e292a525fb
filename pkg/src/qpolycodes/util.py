"""Budgets, chunking, deterministic sampling."""

from __future__ import annotations

import os

DEFAULT_ENUM_BUDGET = 1 << 22      # codeword enumeration cap
LATTICE_BUDGET = 10 ** 7           # subspace count cap
PAIR_BUDGET = 10 ** 7              # submodularity pair cap


class BudgetError(RuntimeError):
    """A computation would exceed its enumeration budget."""


class ParamError(ValueError):
    """Constructor parameters violate a stated constraint."""


def enum_budget() -> int:
    raw = os.environ.get("QPOLY_BUDGET")
    if raw is None:
        return DEFAULT_ENUM_BUDGET
    try:
        val = int(raw)
    except ValueError as exc:
        raise ParamError(f"QPOLY_BUDGET must be an integer, got {raw!r}") from exc
    if val <= 0:
        raise ParamError("QPOLY_BUDGET must be positive")
    return val


def check_enum_budget(count: int, what: str):
    cap = enum_budget()
    if count > cap:
        raise BudgetError(f"{what}: {count} items exceeds budget {cap}")


def chunks(total: int, size: int):
    lo = 0
    while lo < total:
        hi = min(lo + size, total)
        yield lo, hi
        lo = hi
