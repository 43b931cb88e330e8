"""Exhaustive enumeration of operators and antisymmetric elements over a
prime field.

Candidates are generated in lexicographic order of their free entries,
each filtered by the exact check, so reruns give the identical ordered
list.  The candidate count p^(free entries) is guarded by a budget
(default 10^7, env RB_BUDGET).  The space shards into contiguous
chunks; each chunk is pure, and results merge in chunk order, so the
output does not depend on the worker count.
"""

import itertools
import os
from concurrent.futures import ProcessPoolExecutor

from .errors import BudgetExceeded, DimensionMismatch
from .linalg import Matrix, Tensor2
from .rota_baxter import check_rb_algebra
from .yang_baxter import aybe_residual

DEFAULT_BUDGET = 10 ** 7


def effective_budget(budget=None):
    if budget is not None:
        return budget
    env = os.environ.get("RB_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _guard(field, free_entries, budget):
    if not field.is_finite:
        raise DimensionMismatch("search needs a prime field")
    total = field.p ** free_entries
    limit = effective_budget(budget)
    if total > limit:
        raise BudgetExceeded(f"{total} candidates exceed the budget {limit}")
    return total


def _rb_chunk(args):
    algebra, weight, start, size = args
    field = algebra.field
    n = algebra.dim
    found = []
    for flat in _flats(field, n * n, start, size):
        m = Matrix(field, [flat[i * n:(i + 1) * n] for i in range(n)])
        if check_rb_algebra(algebra, m, weight).passed:
            found.append(m)
    return found


def _flats(field, length, start, size):
    """Lexicographic tuples of field elements, by counting in base p."""
    p = field.p
    cells = list(field.elements())
    for counter in range(start, start + size):
        digits = []
        value = counter
        for _ in range(length):
            digits.append(cells[value % p])
            value //= p
        yield tuple(reversed(digits))


def _run_sharded(worker, payloads, workers):
    if workers <= 1 or len(payloads) <= 1:
        chunks = [worker(p) for p in payloads]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(worker, payloads))
    merged = []
    for chunk in chunks:
        merged.extend(chunk)
    return merged


def _payloads(prefix, total, workers):
    target_chunks = max(1, workers * 4) if workers > 1 else 1
    size = max(1, -(-total // target_chunks))
    out = []
    start = 0
    while start < total:
        out.append(prefix + (start, min(size, total - start)))
        start += size
    return out


def search_rb_operators(algebra, weight, budget=None, workers=1):
    """All n x n matrices satisfying the operator identity of the weight."""
    total = _guard(algebra.field, algebra.dim ** 2, budget)
    return _run_sharded(_rb_chunk, _payloads((algebra, weight), total, workers), workers)


def _antisym_chunk(args):
    algebra, start, size = args
    field = algebra.field
    n = algebra.dim
    char2 = field.normalize(field.one + field.one) == field.zero
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    diag = [(i, i) for i in range(n)] if char2 else []
    slots = diag + upper
    minus_one = field.normalize(-field.one)
    found = []
    for flat in _flats(field, len(slots), start, size):
        entries = []
        for (i, j), v in zip(slots, flat):
            entries.append(((i, j), v))
            if i != j:
                entries.append(((j, i), field.normalize(minus_one * v)))
        t = Tensor2(field, n, entries)
        if aybe_residual(algebra, t).is_zero:
            found.append(t)
    return found


def antisym_free_entries(field, n):
    char2 = field.normalize(field.one + field.one) == field.zero
    return n * (n - 1) // 2 + (n if char2 else 0)


def search_antisym_aybe(algebra, budget=None, workers=1):
    """All antisymmetric tensors solving the Yang-Baxter equation."""
    total = _guard(algebra.field, antisym_free_entries(algebra.field, algebra.dim), budget)
    return _run_sharded(_antisym_chunk, _payloads((algebra,), total, workers), workers)
