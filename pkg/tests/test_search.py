import pytest

from hadamat import _kernels
from hadamat.constructions import c5_factor
from hadamat.cyclotomic import root_of_unity
from hadamat.matrix import is_hadamard
from hadamat.search import (
    BudgetExceededError,
    SearchError,
    SearchTask,
    brute_force_float,
    format_rows,
    pattern_solutions_c5,
    row_matrix,
    search,
)


def test_examples():
    assert search(SearchTask(2, 2)).rows == ()
    assert search(SearchTask(2, 4)).rows == ((0, 1), (0, 3))
    assert (0, 1, 4, 4, 1) in search(SearchTask(5, 5)).rows


@pytest.mark.parametrize("n,N", [(3, 3), (2, 4), (4, 4), (3, 6), (4, 2)])
@pytest.mark.parametrize("fix_first", [True, False])
def test_matches_float_oracle(n, N, fix_first):
    assert list(search(SearchTask(n, N, fix_first)).rows) == brute_force_float(n, N, fix_first)


# counts from the exhaustive runs, cross-checked against the float oracle above where small
@pytest.mark.parametrize("n,N,count", [(3, 3, 6), (4, 4, 8), (5, 5, 20), (6, 6, 0), (7, 7, 42), (6, 12, 12)])
def test_counts(n, N, count):
    assert len(search(SearchTask(n, N), classify=False).rows) == count


@pytest.mark.parametrize("n,N", [(4, 4), (5, 5), (4, 8), (6, 12)])
def test_backends_and_pruning_agree(n, N):
    ref = _kernels.circulant_search(n, N, prune=False, use_numba=False).tolist()
    for jit in (True, False):
        for prune in (True, False):
            assert _kernels.circulant_search(n, N, prune=prune, use_numba=jit).tolist() == ref


@pytest.mark.parametrize("n,N", [(3, 3), (4, 4), (3, 6)])
def test_closure_without_fixing(n, N):
    rows = set(search(SearchTask(n, N, fix_first=False), classify=False).rows)
    for r in rows:
        assert tuple(r[(j - 1) % n] for j in range(n)) in rows
        assert tuple((x + 1) % N for x in r) in rows


def test_rows_are_hadamard():
    for r in search(SearchTask(4, 8)).rows:
        assert is_hadamard(row_matrix(r, 8))


def test_class_count():
    assert search(SearchTask(3, 3)).class_count == 1
    assert search(SearchTask(2, 2)).class_count == 0


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceededError) as exc:
        search(SearchTask(4, 4, budget=10))
    assert exc.value.required == 64
    monkeypatch.setenv("HADAMAT_BUDGET", "1e1")
    with pytest.raises(BudgetExceededError, match="64"):
        search(SearchTask(4, 4))
    monkeypatch.setenv("HADAMAT_BUDGET", "junk")
    with pytest.raises(SearchError):
        search(SearchTask(2, 4))


def test_bounds():
    with pytest.raises(SearchError):
        search(SearchTask(8, 2))
    with pytest.raises(SearchError):
        search(SearchTask(3, 21))


def test_pattern_solutions():
    sols = pattern_solutions_c5()
    assert len(sols) == 4
    assert all(c5_factor(x).is_zero() for x in sols)
    assert set(sols) == {root_of_unity(10, 2 * k) for k in range(1, 5)}


def test_output_deterministic():
    a = format_rows(search(SearchTask(5, 5)))
    b = format_rows(search(SearchTask(5, 5)))
    assert a == b and a.endswith("# classes 1\n")
