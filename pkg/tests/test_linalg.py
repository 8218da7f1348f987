import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import random_matrix, rational_rank
from rsct.linalg import bareiss_echelon, bareiss_rank


def test_small_cases():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[0, 1], [1, 0]]) == 2
    assert bareiss_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2
    with pytest.raises(ValueError):
        bareiss_rank([[1, 2], [3]])


def test_dependency_witness():
    ech = bareiss_echelon([[1, 2], [0, 1], [2, 4], [3, 7]])
    assert ech.rank == 2
    assert sorted(ech.row_order) == [0, 1, 2, 3]
    assert len(ech.dependent_rows) == 2
    # Pivot rows alone are independent.
    rows = [[1, 2], [0, 1], [2, 4], [3, 7]]
    assert rational_rank([rows[i] for i in ech.row_order[: ech.rank]]) == 2


def test_entries_stay_integral_on_large_values():
    m = [[10**20 + i * j for j in range(5)] for i in range(5)]
    assert bareiss_rank(m) == rational_rank(m)


@settings(max_examples=150)
@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.integers(1, 12))
def test_matches_rational_elimination(seed, r, c):
    m = random_matrix(random.Random(seed), r, c)
    ech = bareiss_echelon(m)
    assert ech.rank == rational_rank(m)
    assert ech.pivot_columns == sorted(ech.pivot_columns)
    assert rational_rank([m[i] for i in ech.row_order[: ech.rank]]) == ech.rank
