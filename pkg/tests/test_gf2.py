from itertools import combinations

import numpy as np
import pytest

from symldpc import (
    SparseBitMatrix,
    code_dimension,
    columns_sum_zero,
    is_stopping_set,
    min_distance,
    null_space_basis,
    rank_gf2,
    stopping_distance,
    tanner_lower_bound,
)
from symldpc.exceptions import UnsupportedGirthError
from symldpc.gf2 import _support_search


def _matrix_from_dense(rows):
    arr = np.asarray(rows, dtype=np.uint8)
    return SparseBitMatrix.from_rows(
        arr.shape[0], arr.shape[1], [tuple(np.flatnonzero(r)) for r in arr]
    )


def test_rank_examples(c22):
    assert rank_gf2(c22.h) == 7
    assert rank_gf2(c22.h.transpose()) == 7
    zero = SparseBitMatrix.from_rows(3, 5, [(), (), ()])
    assert rank_gf2(zero) == 0


def test_rank_equals_transpose_rank(c24, ct23):
    for h in (c24.h, ct23.h):
        assert rank_gf2(h) == rank_gf2(h.transpose())


def test_code_dimension(c22, ct22, c24):
    assert code_dimension(c22.h) == 1
    assert code_dimension(ct22.h) == 5
    assert code_dimension(c24.h) == 19


def test_null_space_basis_spans_kernel(ct22):
    basis = null_space_basis(ct22.h)
    assert len(basis) == 5
    from symldpc.gf2 import row_masks

    rows = row_masks(ct22.h)
    for v in basis:
        assert all((v & r).bit_count() % 2 == 0 for r in rows)


def test_min_distance_exact_small(c22, ct22):
    d = min_distance(c22.h)
    assert (d.value, d.status, d.method) == (8, "exact", "enumeration")
    assert d.witness == frozenset(range(8))
    dt = min_distance(ct22.h)
    assert (dt.value, dt.status) == (4, "exact")
    assert columns_sum_zero(ct22.h, dt.witness)


def test_min_distance_witness_is_minimal(ct23):
    d = min_distance(ct23.h)
    assert d.value == 6
    assert columns_sum_zero(ct23.h, d.witness)
    # dropping any one column leaves an independent set
    for drop in d.witness:
        rest = sorted(d.witness - {drop})
        sub = SparseBitMatrix.from_rows(
            ct23.h.nrows,
            len(rest),
            _columns_as_rows(ct23.h, rest),
        )
        assert rank_gf2(sub) == len(rest)


def _columns_as_rows(h, cols):
    # submatrix with the chosen columns, re-indexed 0..len(cols)-1
    remap = {c: k for k, c in enumerate(cols)}
    rows = []
    for row in h.row_support:
        rows.append(tuple(sorted(remap[j] for j in row if j in remap)))
    return rows


def test_min_distance_zero_dimension_sentinel():
    ident = _matrix_from_dense(np.eye(3, dtype=int))
    d = min_distance(ident)
    assert d.value == 4  # ncols + 1 sentinel for the trivial code
    assert d.status == "exact"


def test_support_search_agrees_with_enumeration():
    rng = np.random.default_rng(5)
    dense = (rng.random((8, 18)) < 0.3).astype(int)
    h = _matrix_from_dense(dense)
    exact = min_distance(h)
    assert exact.method == "enumeration"
    searched = _support_search(h, budget=exact.value)
    assert searched.value == exact.value
    assert searched.status == "exact"
    assert columns_sum_zero(h, searched.witness)


def test_support_search_budget_exhaustion():
    ident = _matrix_from_dense(np.eye(6, dtype=int))
    res = _support_search(ident, budget=3)
    assert res.value == 4
    assert res.status == "lower_bound_only"
    assert res.witness is None


def test_support_search_finds_zero_column():
    dense = np.eye(4, dtype=int)
    dense[:, 2] = 0
    res = _support_search(_matrix_from_dense(dense), budget=2)
    assert res.value == 1
    assert res.witness == frozenset({2})


def test_stopping_distance_small(c22, ct22):
    assert stopping_distance(ct22.h).value == 4
    assert stopping_distance(c22.h).value == 8


def test_stopping_distance_matches_brute_force(ct22):
    def brute(h, cap):
        for w in range(1, cap + 1):
            for cols in combinations(range(h.ncols), w):
                if is_stopping_set(h, cols):
                    return w
        return None

    assert brute(ct22.h, 5) == 4
    res = stopping_distance(ct22.h)
    assert res.value == 4
    assert is_stopping_set(ct22.h, res.witness)


def test_stopping_distance_budget_exhaustion():
    ident = _matrix_from_dense(np.eye(5, dtype=int))
    res = stopping_distance(ident, budget=5)
    assert res.status == "lower_bound_only"
    assert res.value == 6


def test_stopping_at_most_min_distance(ct22, ct23, c22):
    for code in (ct22, ct23, c22):
        s = stopping_distance(code.h).value
        d = min_distance(code.h).value
        assert s <= d


def test_codeword_support_is_stopping_set(ct22):
    d = min_distance(ct22.h)
    assert is_stopping_set(ct22.h, d.witness)


def test_tanner_lower_bound():
    assert tanner_lower_bound(8, 2) == 4
    assert tanner_lower_bound(8, 5) == 10
    assert tanner_lower_bound(6, 3) == 4
    with pytest.raises(UnsupportedGirthError):
        tanner_lower_bound(10, 3)


def test_searched_distances_respect_girth_bound(c22, ct22, ct23, c24):
    for code in (c22, ct22, ct23, c24):
        col_weight = len(code.h.col_support[0])
        assert min_distance(code.h).value >= tanner_lower_bound(8, col_weight)
    for code in (c22, ct22, ct23):
        col_weight = len(code.h.col_support[0])
        assert stopping_distance(code.h).value >= tanner_lower_bound(8, col_weight)
