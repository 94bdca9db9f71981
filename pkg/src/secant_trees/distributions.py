"""Brute-force distributions of the tree statistics.

The central object is the joint matrix of an even size ``2n``: cell ``(m, k)``
counts the trees of size ``2n`` with ``eoc = m`` and ``pom = k``, over the
index box ``m in [2, 2n]``, ``k in [1, 2n-1]``.  Reads outside the box are 0
by convention.  Cells are tri-state: a matrix produced by enumeration has
every cell known, while matrices built by the analytic engine in
:mod:`secant_trees.recurrence` may leave interior cells of the lower triangle
unknown -- those are first-class ``None`` cells, never silently zero.

Everything here counts by streaming the enumeration of
:mod:`secant_trees.trees`; nothing is materialized, so size 12 (2,702,765
trees) stays within a modest memory budget.
"""

from __future__ import annotations

import multiprocessing
from typing import Iterable, Sequence

from .trees import alternating_permutations, word_stats


class OddSizeError(ValueError):
    """Joint matrices are defined for even sizes only."""


class UnknownCellError(ValueError):
    """An operation required a cell value that is not known."""


def _check_even(two_n: int) -> None:
    if two_n < 2 or two_n % 2 != 0:
        raise OddSizeError(f"size must be a positive even integer, got {two_n}")


class JointMatrix:
    """Counts of trees of size ``two_n`` by ``(eoc, pom) = (m, k)``.

    ``method`` records how the values were obtained: ``"brute"`` (full
    enumeration), ``"recurrence"`` (analytic engine, interior lower-triangle
    cells unknown) or ``"hybrid"`` (analytic plus brute-filled interior).
    """

    __slots__ = ("two_n", "method", "_cells", "_row_sums", "_col_sums", "_total")

    def __init__(self, two_n: int, method: str):
        _check_even(two_n)
        self.two_n = two_n
        self.method = method
        width = two_n - 1
        self._cells: list[list[int | None]] = [[None] * width for _ in range(width)]
        self._row_sums: tuple[int, ...] | None = None
        self._col_sums: tuple[int, ...] | None = None
        self._total: int | None = None

    # -- index helpers ------------------------------------------------------

    @property
    def m_range(self) -> tuple[int, int]:
        return (2, self.two_n)

    @property
    def k_range(self) -> tuple[int, int]:
        return (1, self.two_n - 1)

    def in_box(self, m: int, k: int) -> bool:
        return 2 <= m <= self.two_n and 1 <= k <= self.two_n - 1

    # -- cell access ----------------------------------------------------------

    def cell(self, m: int, k: int) -> int | None:
        """Raw cell: 0 outside the index box, None when unknown."""
        if not self.in_box(m, k):
            return 0
        return self._cells[m - 2][k - 1]

    def get(self, m: int, k: int) -> int:
        v = self.cell(m, k)
        if v is None:
            raise UnknownCellError(f"cell ({m},{k}) of M_{self.two_n} is unknown")
        return v

    def known(self, m: int, k: int) -> bool:
        return self.cell(m, k) is not None

    def set(self, m: int, k: int, value: int) -> None:
        if not self.in_box(m, k):
            raise IndexError(f"({m},{k}) outside the index box of M_{self.two_n}")
        self._cells[m - 2][k - 1] = value

    def known_cells(self) -> Iterable[tuple[int, int, int]]:
        for m in range(2, self.two_n + 1):
            for k in range(1, self.two_n):
                v = self._cells[m - 2][k - 1]
                if v is not None:
                    yield m, k, v

    def unknown_cells(self) -> list[tuple[int, int]]:
        return [
            (m, k)
            for m in range(2, self.two_n + 1)
            for k in range(1, self.two_n)
            if self._cells[m - 2][k - 1] is None
        ]

    def is_complete(self) -> bool:
        return all(v is not None for row in self._cells for v in row)

    # -- marginals -----------------------------------------------------------

    def attach_margins(
        self, row_sums: Sequence[int], col_sums: Sequence[int], total: int
    ) -> None:
        """Record analytically-known marginals on a partial matrix."""
        self._row_sums = tuple(row_sums)
        self._col_sums = tuple(col_sums)
        self._total = total

    def row_sums(self) -> tuple[int, ...]:
        """Row sums indexed by m - 2, for m = 2 .. 2n."""
        if self._row_sums is not None:
            return self._row_sums
        if not self.is_complete():
            raise UnknownCellError("row sums need all cells known (or attached margins)")
        return tuple(sum(row) for row in self._cells)

    def col_sums(self) -> tuple[int, ...]:
        """Column sums indexed by k - 1, for k = 1 .. 2n-1."""
        if self._col_sums is not None:
            return self._col_sums
        if not self.is_complete():
            raise UnknownCellError("column sums need all cells known (or attached margins)")
        return tuple(sum(row[j] for row in self._cells) for j in range(self.two_n - 1))

    def total(self) -> int:
        if self._total is not None:
            return self._total
        return sum(self.row_sums())

    # -- serialization -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "two_n": self.two_n,
            "m_range": [2, self.two_n],
            "k_range": [1, self.two_n - 1],
            "entries": [list(row) for row in self._cells],
            "row_sums": list(self.row_sums()),
            "col_sums": list(self.col_sums()),
            "total": self.total(),
            "method": self.method,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "JointMatrix":
        M = cls(data["two_n"], data["method"])
        entries = data["entries"]
        if len(entries) != M.two_n - 1 or any(len(r) != M.two_n - 1 for r in entries):
            raise ValueError("entries must be a (2n-1) x (2n-1) grid")
        M._cells = [list(row) for row in entries]
        if not M.is_complete():
            M.attach_margins(data["row_sums"], data["col_sums"], data["total"])
        return M

    def to_csv(self) -> str:
        """Header row of k values, one row per m, empty cell when unknown."""
        lines = ["m\\k," + ",".join(str(k) for k in range(1, self.two_n))]
        for m in range(2, self.two_n + 1):
            vals = (self.cell(m, k) for k in range(1, self.two_n))
            lines.append(
                str(m) + "," + ",".join("" if v is None else str(v) for v in vals)
            )
        return "\n".join(lines) + "\n"

    # -- equality -------------------------------------------------------------------

    def same_counts(self, other: "JointMatrix") -> bool:
        return self.two_n == other.two_n and self._cells == other._cells

    def __repr__(self) -> str:
        tag = "" if self.is_complete() else f", {len(self.unknown_cells())} unknown"
        return f"JointMatrix(two_n={self.two_n}, method={self.method!r}{tag})"


# -- brute-force counting --------------------------------------------------------


def _count_joint_serial(two_n: int, prefix: Sequence[int] = ()) -> dict[tuple[int, int], int]:
    """Count (eoc, pom) pairs over all trees whose projection starts with
    *prefix*.

    This is the enumeration backtracker of
    :func:`secant_trees.trees.alternating_permutations` fused with the word
    statistics of :func:`secant_trees.trees.word_stats`, with all buffers
    reused across words; the test suite pins the two code paths against each
    other exhaustively at small sizes.
    """
    n = two_n
    word = [0] * n
    used = bytearray(n + 1)
    left = [0] * (n + 1)
    right = [0] * (n + 1)
    counts: dict[tuple[int, int], int] = {}

    k0 = len(prefix)
    for i, v in enumerate(prefix):
        if not 1 <= v <= n or used[v]:
            raise ValueError(f"bad prefix {prefix!r}")
        if i > 0 and ((i % 2 == 1) != (v < word[i - 1])):
            return counts
        word[i] = v
        used[v] = 1
    if k0 == n:
        s = word_stats(word)
        counts[(s.eoc, s.pom)] = 1
        return counts

    pos = k0
    val = 0
    while pos >= k0:
        if pos == 0:
            lo, hi = 1, n
        elif pos & 1:
            lo, hi = 1, word[pos - 1] - 1
        else:
            lo, hi = word[pos - 1] + 1, n
        v = val + 1 if val + 1 > lo else lo
        while v <= hi and used[v]:
            v += 1
        if v > hi:
            pos -= 1
            if pos >= k0:
                val = word[pos]
                used[val] = 0
            continue
        word[pos] = v
        used[v] = 1
        if pos == n - 1:
            # Word complete: min-tree via the spine stack, then the two
            # statistics.  right[x] is cleared at push time because the
            # arrays persist across words.
            stack = []
            for x in word:
                last = 0
                while stack and stack[-1] > x:
                    last = stack.pop()
                left[x] = last
                right[x] = 0
                if stack:
                    right[stack[-1]] = x
                stack.append(x)
            i = word.index(n)
            if i == 0:
                pom = word[1]
            else:
                a, b = word[i - 1], word[i + 1]
                pom = a if a > b else b
            c = 1
            while True:
                l, r = left[c], right[c]
                nxt = (l if l < r else r) if l and r else (l or r)
                if left[nxt] == 0 and right[nxt] == 0:
                    eoc = nxt
                    break
                c = nxt
            key = (eoc, pom)
            if key in counts:
                counts[key] += 1
            else:
                counts[key] = 1
            used[v] = 0
            val = v
        else:
            pos += 1
            val = 0
    return counts


def _count_joint_part(args: tuple[int, int]) -> dict[tuple[int, int], int]:
    two_n, first = args
    return _count_joint_serial(two_n, prefix=(first,))


def joint_matrix_bruteforce(two_n: int, processes: int = 1) -> JointMatrix:
    """Count every tree of size *two_n* into a fully-known joint matrix.

    With ``processes > 1`` the enumeration is partitioned by the first letter
    of the projection and reduced over a process pool; the merge is plain
    integer addition, so the result is identical to the serial run.
    """
    _check_even(two_n)
    if processes > 1 and two_n >= 8:
        # Words start with a letter >= 2 (the first step is a descent).
        parts_args = [(two_n, w0) for w0 in range(2, two_n + 1)]
        with multiprocessing.Pool(processes) as pool:
            parts = pool.map(_count_joint_part, parts_args)
        counts: dict[tuple[int, int], int] = {}
        for part in parts:
            for key, c in part.items():
                counts[key] = counts.get(key, 0) + c
    else:
        counts = _count_joint_serial(two_n)

    M = JointMatrix(two_n, method="brute")
    for m in range(2, two_n + 1):
        for k in range(1, two_n):
            M.set(m, k, counts.get((m, k), 0))
    return M


def marginals(M: JointMatrix) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """(row sums by m, column sums by k, total); requires all cells known."""
    if not M.is_complete():
        raise UnknownCellError("marginals need a fully-known matrix")
    rows = M.row_sums()
    cols = M.col_sums()
    return rows, cols, sum(rows)


def delta_m(M: JointMatrix, m: int, k: int) -> int:
    """First partial difference in the eoc index: f(m+1, k) - f(m, k)."""
    return M.get(m + 1, k) - M.get(m, k)


def delta_k(M: JointMatrix, m: int, k: int) -> int:
    """First partial difference in the pom index: f(m, k+1) - f(m, k)."""
    return M.get(m, k + 1) - M.get(m, k)


# -- the rightmost-node statistic -------------------------------------------------


def ent_distribution(n: int) -> tuple[int, ...]:
    """Entry j-1 counts trees of size n whose rightmost node is labelled j.

    Defined for every size n >= 2, odd sizes included; the rightmost label is
    simply the last letter of the projection, so this is a single pass over
    the enumeration.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    counts = [0] * (n + 1)
    for word in alternating_permutations(n):
        counts[word[-1]] += 1
    return tuple(counts[1:])


class EntringerTriangle:
    """Rows of rightmost-label counts, row n holding entries j = 1 .. n-1."""

    def __init__(self, rows: dict[int, tuple[int, ...]]):
        self.rows = dict(rows)

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    @property
    def n_max(self) -> int:
        return max(self.rows)

    def row_total(self, n: int) -> int:
        return sum(self.rows[n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EntringerTriangle):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"EntringerTriangle(rows 2..{self.n_max})"

    def to_text(self) -> str:
        width = len(str(max(max(r) for r in self.rows.values())))
        lines = []
        for n in sorted(self.rows):
            lines.append(
                f"n={n:<3d} " + " ".join(f"{v:>{width}d}" for v in self.rows[n])
            )
        return "\n".join(lines) + "\n"


def entringer_bruteforce(n_max: int) -> EntringerTriangle:
    """Triangle rows measured from the raw rightmost-label distribution.

    For even n the raw counts occupy labels 1 .. n-1 and entry j of the row
    is the count of label j.  For odd n every node is a leaf or binary, the
    root included, so the rightmost node sits in the root's right subtree and
    its label ranges over 2 .. n; measured at sizes up to 9, the triangle row
    reads those counts backwards, entry j holding the count of label n+1-j.
    Both conventions are pinned against the partial-sum rule of
    :func:`secant_trees.recurrence.entringer_triangle` in the test suite.
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    rows = {}
    for n in range(2, n_max + 1):
        raw = ent_distribution(n)
        if n % 2 == 0:
            assert raw[n - 1] == 0  # label n cannot be a one-child node
            rows[n] = raw[: n - 1]
        else:
            assert raw[0] == 0  # the root cannot be rightmost for odd n >= 3
            rows[n] = tuple(reversed(raw[1:]))
    return EntringerTriangle(rows)
