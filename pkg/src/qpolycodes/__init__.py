"""Restricted rank-metric codes and their q-polymatroids."""

from .fields import FiniteField, finite_field, field_of_order
from .matrices import Matrix
from .util import BudgetError, ParamError

__all__ = [
    "FiniteField",
    "finite_field",
    "field_of_order",
    "Matrix",
    "BudgetError",
    "ParamError",
]
