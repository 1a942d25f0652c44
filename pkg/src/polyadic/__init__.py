"""Exact computations with polyadic algebras, coalgebras, bialgebras and their quantum analogs.

All arithmetic is exact over the Gaussian rationals.  The main entry points
are re-exported here; the ``polyadic`` console script wraps them.
"""
from .arity import Inadmissible
from .runtime import BudgetExceeded, set_threads
from .scalars import Scalar
from .tensorkit import MultiLinearMap, SlotPermutation, TensorSum
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Inadmissible",
    "MultiLinearMap",
    "Scalar",
    "SlotPermutation",
    "TensorSum",
    "Verdict",
    "set_threads",
]
