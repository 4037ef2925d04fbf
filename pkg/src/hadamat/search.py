"""Exhaustive search for circulant Butson-type Hadamard matrices BH(n, N)."""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from hadamat import _kernels
from hadamat.constructions import c5_factor, circulant
from hadamat.cyclotomic import CycloNum, root_of_unity
from hadamat.equivalence import MAX_DIM, canonical_fingerprint, equiv
from hadamat.matrix import CycloMatrix, is_hadamard

DEFAULT_BUDGET = 10 ** 8
MAX_N = 7
MAX_ROOT_ORDER = 20


class SearchError(ValueError):
    pass


class BudgetExceededError(SearchError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"search space {required} exceeds budget {budget} (set HADAMAT_BUDGET)")
        self.required = required
        self.budget = budget


def budget_from_env() -> int:
    raw = os.environ.get("HADAMAT_BUDGET")
    if not raw:
        return DEFAULT_BUDGET
    try:
        return int(float(raw))
    except ValueError:
        raise SearchError(f"HADAMAT_BUDGET={raw!r} is not a number") from None


@dataclass(frozen=True)
class SearchTask:
    n: int
    N: int
    fix_first: bool = True
    budget: int | None = None

    @property
    def space_size(self) -> int:
        return self.N ** (self.n - 1 if self.fix_first else self.n)


@dataclass(frozen=True)
class SearchResult:
    task: SearchTask
    rows: tuple[tuple[int, ...], ...]
    class_count: int

    def matrices(self) -> list[CycloMatrix]:
        return [row_matrix(r, self.task.N) for r in self.rows]


def row_matrix(row, N: int, order: int | None = None) -> CycloMatrix:
    M = order or N
    return circulant([root_of_unity(N, int(e)).embed(M) for e in row])


def _class_count(mats: list[CycloMatrix]) -> int:
    """Fingerprint buckets, split by exact equivalence when n <= 5."""
    buckets: dict[tuple, list[CycloMatrix]] = {}
    for m in mats:
        buckets.setdefault(canonical_fingerprint(m), []).append(m)
    if not mats or mats[0].dim > MAX_DIM:
        return len(buckets)
    total = 0
    for group in buckets.values():
        reps: list[CycloMatrix] = []
        for m in group:
            if not any(equiv(r, m, check_inputs=False).equivalent for r in reps):
                reps.append(m)
        total += len(reps)
    return total


def search(task: SearchTask, prune: bool = True, verify: bool = True,
           classify: bool = True, use_numba: bool | None = None) -> SearchResult:
    """All first rows (exponents mod N) whose circulant is Hadamard, lexicographically sorted."""
    if not 2 <= task.n <= MAX_N:
        raise SearchError(f"n must be in 2..{MAX_N}")
    if not 1 <= task.N <= MAX_ROOT_ORDER:
        raise SearchError(f"N must be in 1..{MAX_ROOT_ORDER}")
    budget = task.budget if task.budget is not None else budget_from_env()
    if task.space_size > budget:
        raise BudgetExceededError(task.space_size, budget)
    rows = _kernels.circulant_search(task.n, task.N, task.fix_first, prune, use_numba)
    rows_t = tuple(tuple(int(x) for x in r) for r in rows)
    mats = [row_matrix(r, task.N) for r in rows_t] if (verify or classify) else []
    if verify:
        for r, m in zip(rows_t, mats):
            if not is_hadamard(m):  # pragma: no cover - kernel bug guard
                raise AssertionError(f"row {r} passed the kernel but is not Hadamard")
    count = _class_count(mats) if classify else -1
    return SearchResult(task, rows_t, count)


def brute_force_float(n: int, N: int, fix_first: bool = True, tol: float = 1e-8) -> list[tuple[int, ...]]:
    """Reference enumeration: build every circulant numerically and test H H* = nI."""
    import itertools

    z = np.exp(2j * np.pi * np.arange(N) / N)
    out = []
    for tail in itertools.product(range(N), repeat=n - 1 if fix_first else n):
        row = ((0,) + tail) if fix_first else tail
        h = np.array([[z[row[(j - i) % n]] for j in range(n)] for i in range(n)])
        if np.max(np.abs(h @ h.conj().T - n * np.eye(n))) < tol:
            out.append(row)
    return sorted(out)


def pattern_solutions_c5() -> list[CycloNum]:
    """Unimodular roots of 1 + a + a^2 + a^3 + a^4 in Q(zeta_10).

    Every root of that polynomial is a fifth root of unity, so scanning the
    tenth roots of unity is complete.
    """
    return [a for a in (root_of_unity(10, k) for k in range(10)) if c5_factor(a).is_zero()]


def format_rows(result: SearchResult) -> str:
    lines = [" ".join(str(e) for e in r) for r in result.rows]
    t = result.task
    lines += [
        "# summary",
        f"# n {t.n}",
        f"# N {t.N}",
        f"# fix_first {str(t.fix_first).lower()}",
        f"# solutions {len(result.rows)}",
        f"# classes {result.class_count}",
    ]
    return "\n".join(lines) + "\n"
