"""Rectangular Young tableaux and the operators indexing basis webs.

Tableaux are stored row-major.  Promotion and evacuation are implemented by
jeu-de-taquin slides and are restricted to standard tableaux; semistandard
tableaux (repeated entries) are supported as data only.
"""

from __future__ import annotations

from math import factorial

MAX_CELLS = 16


class Tableau:
    """A rectangular tableau with r rows and k columns, entries positive."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = [list(row) for row in entries]
        if not rows or any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("entries must form a nonempty rectangular grid")
        for row in rows:
            for v in row:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"entries must be positive integers, got {v!r}")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries = rows

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    def __repr__(self):
        body = ",".join("[" + ",".join(map(str, row)) + "]" for row in self.entries)
        return f"Tableau([{body}])"

    @property
    def size(self):
        return self.rows * self.cols

    def row_reading_word(self):
        return tuple(v for row in self.entries for v in row)

    def is_semistandard(self):
        """Rows weakly increase, columns strictly increase."""
        g = self.entries
        for i in range(self.rows):
            for j in range(self.cols):
                if j + 1 < self.cols and g[i][j] > g[i][j + 1]:
                    return False
                if i + 1 < self.rows and g[i][j] >= g[i + 1][j]:
                    return False
        return True

    def is_standard(self):
        """Semistandard with entries exactly 1..rk, each once (rows strict too)."""
        n = self.size
        vals = sorted(v for row in self.entries for v in row)
        if vals != list(range(1, n + 1)):
            return False
        return self.is_semistandard()

    def content(self):
        """Multiset of entries, as a sorted tuple."""
        return tuple(sorted(v for row in self.entries for v in row))

    def to_json(self):
        return [list(row) for row in self.entries]


def _require_standard(t: Tableau, op: str):
    if not t.is_standard():
        raise ValueError(f"{op} requires a standard tableau")


def syt_enumerate(r: int, k: int) -> list[Tableau]:
    """All standard Young tableaux of shape r x k, ordered lexicographically
    by row-reading word."""
    if r < 1 or k < 1:
        raise ValueError("shape parameters must be >= 1")
    n = r * k
    if n > MAX_CELLS:
        raise ValueError(f"refusing exhaustive enumeration for rk = {n} > {MAX_CELLS}")
    results = []
    grid = [[0] * k for _ in range(r)]
    heights = [0] * k  # filled cells per column

    def place(v):
        if v > n:
            results.append(Tableau([row[:] for row in grid]))
            return
        for j in range(k):
            i = heights[j]
            if i >= r:
                continue
            if j > 0 and heights[j - 1] <= i:
                continue  # row would not increase left-to-right
            grid[i][j] = v
            heights[j] += 1
            place(v + 1)
            heights[j] -= 1
        return

    place(1)
    results.sort(key=lambda t: t.row_reading_word())
    return results


def hook_length_count(r: int, k: int) -> int:
    """Number of r x k standard tableaux by the hook length formula.

    Independent oracle for syt_enumerate.
    """
    n = r * k
    num = factorial(n)
    den = 1
    for i in range(r):
        for j in range(k):
            den *= (r - i) + (k - j) - 1
    assert num % den == 0
    return num // den


def _slide_out_min(grid, rows, cols):
    """Delete entry 1, slide the hole through, return the vacated cell."""
    i, j = 0, 0
    assert grid[0][0] == 1
    while True:
        right = grid[i][j + 1] if j + 1 < cols else None
        below = grid[i + 1][j] if i + 1 < rows else None
        if right is None and below is None:
            return i, j
        if below is None or (right is not None and right < below):
            grid[i][j] = right
            j += 1
        else:
            grid[i][j] = below
            i += 1


def promotion(t: Tableau) -> Tableau:
    """Jeu-de-taquin promotion: delete 1, slide, decrement, refill with rk."""
    _require_standard(t, "promotion")
    grid = [row[:] for row in t.entries]
    i, j = _slide_out_min(grid, t.rows, t.cols)
    grid[i][j] = t.size + 1
    for a in range(t.rows):
        for b in range(t.cols):
            grid[a][b] -= 1
    return Tableau(grid)


def evacuation(t: Tableau) -> Tableau:
    """Schuetzenberger evacuation via iterated slides; an involution.

    Step t deletes the current minimum and slides the hole out; the cell
    vacated at step t receives entry n + 1 - t in the result.
    """
    _require_standard(t, "evacuation")
    n = t.size
    active = [row[:] for row in t.entries]  # None marks removed cells
    out = [[0] * t.cols for _ in range(t.rows)]
    for step in range(1, n + 1):
        i, j = 0, 0
        assert active[0][0] == 1
        while True:
            right = active[i][j + 1] if j + 1 < t.cols else None
            below = active[i + 1][j] if i + 1 < t.rows else None
            if right is None and below is None:
                break
            if below is None or (right is not None and right < below):
                active[i][j] = right
                j += 1
            else:
                active[i][j] = below
                i += 1
        out[i][j] = n + 1 - step
        active[i][j] = None
        for a in range(t.rows):
            for b in range(t.cols):
                if active[a][b] is not None:
                    active[a][b] -= 1
    return Tableau(out)


def transpose(t: Tableau) -> Tableau:
    """Swap shape r x k -> k x r."""
    return Tableau([[t.entries[i][j] for i in range(t.rows)] for j in range(t.cols)])


def yamanouchi_word(t: Tableau) -> tuple[int, ...]:
    """For v = 1, 2, ... in increasing order, the row (1-indexed) containing v.

    Defined for standard tableaux; for semistandard ones a row is recorded
    once per copy of the value it holds.
    """
    if not t.is_semistandard():
        raise ValueError("yamanouchi_word requires a (semi)standard tableau")
    pairs = []
    for i, row in enumerate(t.entries):
        for v in row:
            pairs.append((v, i + 1))
    pairs.sort()
    return tuple(r for _, r in pairs)


def descent_set(t: Tableau) -> set[int]:
    """{l : l+1 sits in a strictly lower row than l}."""
    _require_standard(t, "descent_set")
    row_of = {}
    for i, row in enumerate(t.entries):
        for v in row:
            row_of[v] = i
    return {v for v in range(1, t.size) if row_of[v + 1] > row_of[v]}
