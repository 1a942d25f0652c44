"""Enumeration budgets and deterministic thread fan-out."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

DEFAULT_BUDGET = 4_000_000


class BudgetExceeded(RuntimeError):
    """Raised when a request would enumerate more cells than allowed."""


def current_budget() -> int:
    raw = os.environ.get("POLYADIC_BUDGET")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_BUDGET


def check_budget(cells: int, what: str = "operation", budget: int | None = None) -> None:
    limit = current_budget() if budget is None else budget
    if cells > limit:
        raise BudgetExceeded(f"{what} needs {cells} cells, budget is {limit}")


_threads = 1


def set_threads(k: int) -> None:
    global _threads
    _threads = max(1, int(k))


def get_threads() -> int:
    return _threads


def parallel_map(fn, items, threads: int | None = None) -> list:
    """Map ``fn`` over ``items`` and return results in input order."""
    items = list(items)
    k = get_threads() if threads is None else max(1, threads)
    if k == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))
