from itertools import permutations

import pytest

from webdimer.tableaux import (
    Tableau,
    descent_set,
    evacuation,
    hook_length_count,
    promotion,
    syt_enumerate,
    transpose,
    yamanouchi_word,
)


def brute_force_syt_count(r, k):
    """Oracle: filter all permutations of 1..rk by the row/column conditions."""
    n = r * k
    count = 0
    for perm in permutations(range(1, n + 1)):
        grid = [perm[i * k:(i + 1) * k] for i in range(r)]
        ok = all(grid[i][j] < grid[i][j + 1] for i in range(r) for j in range(k - 1))
        ok = ok and all(
            grid[i][j] < grid[i + 1][j] for i in range(r - 1) for j in range(k)
        )
        if ok:
            count += 1
    return count


def inverse_promotion(t):
    """Independent oracle: delete rk, slide the hole backwards, increment,
    refill 1 at the top-left corner."""
    n = t.size
    grid = [row[:] for row in t.entries]
    i, j = t.rows - 1, t.cols - 1
    assert grid[i][j] == n
    while True:
        left = grid[i][j - 1] if j - 1 >= 0 else None
        above = grid[i - 1][j] if i - 1 >= 0 else None
        if left is None and above is None:
            break
        if above is None or (left is not None and left > above):
            grid[i][j] = left
            j -= 1
        else:
            grid[i][j] = above
            i -= 1
    grid[i][j] = 0
    for a in range(t.rows):
        for b in range(t.cols):
            grid[a][b] += 1
    return Tableau(grid)


def evacuation_closed_form(t):
    """Oracle valid on rectangles: evacuation = complement + 180 degree flip."""
    n = t.size
    return Tableau(
        [
            [n + 1 - t.entries[t.rows - 1 - i][t.cols - 1 - j] for j in range(t.cols)]
            for i in range(t.rows)
        ]
    )


def test_syt_enumerate_trivial_shape():
    out = syt_enumerate(1, 1)
    assert len(out) == 1
    assert out[0].entries == [[1]]


def test_syt_enumerate_2x3_matches_brute_force():
    assert len(syt_enumerate(2, 3)) == brute_force_syt_count(2, 3)
    assert len(syt_enumerate(2, 3)) == 5


def test_syt_enumerate_3x4_count_462():
    assert len(syt_enumerate(3, 4)) == 462


@pytest.mark.parametrize("r,k", [(1, 5), (2, 2), (2, 4), (3, 2), (3, 3), (4, 2), (3, 4)])
def test_syt_count_matches_hook_length_formula(r, k):
    assert len(syt_enumerate(r, k)) == hook_length_count(r, k)


def test_syt_enumerate_orders_by_row_reading_word():
    words = [t.row_reading_word() for t in syt_enumerate(3, 3)]
    assert words == sorted(words)
    assert len(set(words)) == len(words)


def test_syt_enumerate_guards_size():
    with pytest.raises(ValueError):
        syt_enumerate(3, 6)
    with pytest.raises(ValueError):
        syt_enumerate(0, 2)


def test_promotion_fixes_single_column():
    col = Tableau([[1], [2], [3]])
    assert promotion(col) == col


def test_promotion_hand_example_2x2():
    assert promotion(Tableau([[1, 2], [3, 4]])) == Tableau([[1, 3], [2, 4]])


def test_promotion_rejects_non_standard():
    with pytest.raises(ValueError):
        promotion(Tableau([[1, 1], [2, 2]]))


@pytest.mark.parametrize("r,k", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (2, 5), (3, 4), (2, 6), (4, 3)])
def test_promotion_order_divides_n(r, k):
    n = r * k
    for t in syt_enumerate(r, k):
        cur = t
        for _ in range(n):
            cur = promotion(cur)
        assert cur == t


@pytest.mark.parametrize("r,k", [(2, 3), (3, 3), (3, 4)])
def test_promotion_agrees_with_inverse_promotion_oracle(r, k):
    for t in syt_enumerate(r, k):
        assert inverse_promotion(promotion(t)) == t
        assert promotion(inverse_promotion(t)) == t


def test_evacuation_fixes_single_column():
    col = Tableau([[1], [2], [3], [4]])
    assert evacuation(col) == col


def test_evacuation_hand_example_2x2():
    t = Tableau([[1, 2], [3, 4]])
    assert evacuation(t) == t


@pytest.mark.parametrize("r,k", [(2, 3), (3, 3), (3, 4)])
def test_evacuation_involution_and_closed_form(r, k):
    for t in syt_enumerate(r, k):
        e = evacuation(t)
        assert evacuation(e) == t
        assert e == evacuation_closed_form(t)


def test_transpose_involution_3x4():
    for t in syt_enumerate(3, 4):
        tt = transpose(t)
        assert (tt.rows, tt.cols) == (4, 3)
        assert transpose(tt) == t


@pytest.mark.parametrize("r,k", [(2, 3), (3, 3), (3, 4)])
def test_transpose_commutes_with_promotion(r, k):
    for t in syt_enumerate(r, k):
        assert transpose(promotion(t)) == promotion(transpose(t))


def test_yamanouchi_word_row_superstandard():
    t = Tableau([[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12]])
    assert yamanouchi_word(t) == (1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3)


def test_yamanouchi_word_semistandard_repeats_rows():
    t = Tableau([[1, 1], [2, 3]])
    assert yamanouchi_word(t) == (1, 1, 2, 2)


def test_descent_set_hand_example():
    assert descent_set(Tableau([[1, 2], [3, 4]])) == {2}
    assert descent_set(Tableau([[1, 2, 3], [4, 5, 6]])) == {3}


def test_malformed_grid_rejected():
    with pytest.raises(ValueError):
        Tableau([[1, 2], [3]])
    with pytest.raises(ValueError):
        Tableau([[0, 1], [2, 3]])
