"""Analytic computation of the joint matrices, no enumeration involved.

The even-size joint matrix M_{2n} satisfies two second-difference laws that
couple it to M_{2n-2}:

* row rule:    f(m+2, k) - 2 f(m+1, k) + f(m, k)  = -4 f_{2n-2}(m, k-2)
* column rule: f(m, k+2) - 2 f(m, k+1) + f(m, k)  = -4 f_{2n-2}(m, k)

together with closed boundary identities: the first top row equals the
previous column sums shifted by two, the second top row is three times the
first, the rightmost column equals the previous column sums, and the next to
rightmost column is three times the rightmost.  Marginals obey the same
second-difference law, seeded by f(., 1) = E_{2n-2} and f(., 2) = 3 E_{2n-2}.

That machinery fills the whole upper triangle (m < k) by induction on n.  Of
the lower triangle only the border is analytically reachable: the first
column mirrors the first row, the bottom row is a shifted row of the
Entringer triangle, the subdiagonal starts from f(3, 2) = 2 f(3, 1) and
propagates through the crossing identity
f(k+1, k) = f(k, k-1) + f(k, k+1) - f(k-1, k).  Interior lower-triangle
cells stay Unknown here -- only the brute-force oracle can produce them.

Everything is exact integer arithmetic on Python ints.
"""

from __future__ import annotations

from typing import Sequence

from .distributions import EntringerTriangle, JointMatrix, _check_even


class MissingPredecessorError(ValueError):
    """The induction needs data from size 2n-2 that was not supplied."""


class MissingUpperError(ValueError):
    """The lower border needs upper-triangle cells that are not known."""


class NegativeCellError(ValueError):
    """A recurrence produced a negative count; the inputs are corrupt."""


# -- Entringer triangle and secant numbers ------------------------------------


def entringer_triangle(n_max: int) -> EntringerTriangle:
    """Build rows 2..n_max by the leftmost-partial-sum rule.

    Row n has entries j = 1 .. n-1.  Entry j is the sum of the leftmost
    n - j entries of row n-1, a row of length n-2 padded with a zero on the
    right, so entries j = 1 and j = 2 both take the full previous row sum.
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    rows: dict[int, tuple[int, ...]] = {2: (1,)}
    for n in range(3, n_max + 1):
        prev = rows[n - 1]
        prefix = [0]
        for v in prev:
            prefix.append(prefix[-1] + v)
        full = prefix[-1]
        row = []
        for j in range(1, n):
            take = min(n - j, n - 2)
            row.append(full if take >= n - 2 else prefix[take])
        rows[n] = tuple(row)
    return EntringerTriangle(rows)


def tree_count(n: int) -> int:
    """Number of complete increasing trees of size n (secant number for even
    n, tangent number for odd n), computed from the triangle row sum."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n <= 1:
        return 1
    return entringer_triangle(n).row_total(n)


def secant_numbers(two_n_max: int) -> tuple[int, ...]:
    """E_0, E_2, ..., E_{two_n_max}: Taylor coefficients of sec u times (2n)!."""
    if two_n_max < 0 or two_n_max % 2 != 0:
        raise ValueError(f"need an even bound >= 0, got {two_n_max}")
    out = [1]
    if two_n_max >= 2:
        tri = entringer_triangle(two_n_max)
        for n in range(2, two_n_max + 1, 2):
            out.append(tri.row_total(n))
    return tuple(out)


# -- marginals by induction ----------------------------------------------------


def column_sums(two_n: int, prev: Sequence[int] | None = None) -> tuple[int, ...]:
    """Column sums f_{2n}(., k) for k = 1 .. 2n-1, from those of size 2n-2.

    Seeds: f(., 1) = E_{2n-2} and f(., 2) = 3 E_{2n-2}; the rest follow from
    the second-difference law on column sums.  The row sums are the same
    tuple, because f(m, .) = f(., m-1).
    """
    _check_even(two_n)
    if two_n == 2:
        return (1,)
    if prev is None or len(prev) != two_n - 3:
        raise MissingPredecessorError(
            f"column sums for {two_n} need the {two_n - 3} column sums of {two_n - 2}"
        )
    total_prev = sum(prev)
    cs = [0] * (two_n - 1)
    cs[0] = total_prev
    cs[1] = 3 * total_prev
    for k in range(1, two_n - 2):
        cs[k + 1] = 2 * cs[k] - cs[k - 1] - 4 * prev[k - 1]
        if cs[k + 1] < 0:
            raise NegativeCellError(f"column sum at k={k + 2} of M_{two_n} is negative")
    return tuple(cs)


# -- upper triangle -------------------------------------------------------------


def _fill(M: JointMatrix, m: int, k: int, value: int) -> None:
    if value < 0:
        raise NegativeCellError(f"cell ({m},{k}) of M_{M.two_n} came out {value}")
    old = M.cell(m, k)
    if old is not None and old != value:
        raise NegativeCellError(
            f"cell ({m},{k}) of M_{M.two_n} filled twice with {old} != {value}"
        )
    M.set(m, k, value)


def upper_triangle(
    two_n: int,
    prev: JointMatrix,
    prev_col_sums: Sequence[int],
    rule: str = "column",
) -> JointMatrix:
    """Fill every cell with 2 <= m < k <= 2n-1; all other cells stay Unknown.

    Boundary identities give the two top rows and two rightmost columns; the
    remaining cells follow the chosen second-difference rule: ``"column"``
    sweeps each row right to left, ``"row"`` sweeps each column top to
    bottom.  The two orders provably agree and the test suite checks it.
    """
    _check_even(two_n)
    if two_n < 4:
        raise ValueError("the upper triangle induction starts at size 4")
    if prev.two_n != two_n - 2:
        raise MissingPredecessorError(f"need the size-{two_n - 2} matrix, got {prev.two_n}")
    for pm in range(2, two_n - 2):
        for pk in range(pm + 1, two_n - 1):
            if not prev.known(pm, pk):
                raise MissingPredecessorError(
                    f"upper cell ({pm},{pk}) of M_{two_n - 2} is unknown"
                )
    if len(prev_col_sums) != two_n - 3:
        raise MissingPredecessorError(
            f"need {two_n - 3} column sums for size {two_n - 2}"
        )
    if rule not in ("column", "row"):
        raise ValueError(f"rule must be 'column' or 'row', got {rule!r}")

    M = JointMatrix(two_n, method="recurrence")
    top = two_n - 1

    # First top row: f(2, k) = previous column sum at k-2.
    for k in range(3, top + 1):
        _fill(M, 2, k, prev_col_sums[k - 3])
    # Second top row: three times the first.
    for k in range(4, top + 1):
        _fill(M, 3, k, 3 * M.get(2, k))
    # Rightmost column: f(m, 2n-1) = previous column sum at m-1.
    for m in range(2, two_n - 1):
        _fill(M, m, top, prev_col_sums[m - 2])
    # Next to rightmost column: three times the rightmost.
    for m in range(2, two_n - 2):
        _fill(M, m, top - 1, 3 * M.get(m, top))

    if rule == "column":
        for m in range(4, two_n - 2):
            for k in range(two_n - 3, m, -1):
                v = 2 * M.get(m, k + 1) - M.get(m, k + 2) - 4 * prev.get(m, k)
                _fill(M, m, k, v)
    else:
        for k in range(5, two_n - 2):
            for m in range(4, k):
                v = 2 * M.get(m - 1, k) - M.get(m - 2, k) - 4 * prev.get(m - 2, k - 2)
                _fill(M, m, k, v)
    return M


# -- lower-triangle border --------------------------------------------------------


def lower_border(
    two_n: int, upper: JointMatrix, ent_row: Sequence[int]
) -> JointMatrix:
    """Return a copy of *upper* with the analytically-known border added.

    Fills the first column (mirror of the first row), the bottom row (the
    Entringer row of size 2n-2 shifted by one), the three structurally-zero
    corners (2,1), (2n,1) and (2n,2n-1), the subdiagonal seed
    f(3,2) = 2 f(3,1), and the rest of the subdiagonal through the crossing
    identity.  *ent_row* must be the triangle row of size 2n-2 (entries
    j = 1 .. 2n-3).
    """
    _check_even(two_n)
    if two_n < 4:
        raise ValueError("the border construction starts at size 4")
    if upper.two_n != two_n:
        raise MissingUpperError(f"need the size-{two_n} upper triangle")
    if len(ent_row) != two_n - 3:
        raise MissingUpperError(f"need the length-{two_n - 3} triangle row of size {two_n - 2}")

    M = JointMatrix(two_n, method="recurrence")
    for m, k, v in upper.known_cells():
        M.set(m, k, v)
    for m in range(2, two_n):
        for k in range(m + 1, two_n):
            if not M.known(m, k):
                raise MissingUpperError(f"upper cell ({m},{k}) of M_{two_n} is unknown")

    top = two_n - 1

    # First column mirrors the first row: f(k, 1) = f(2, k).
    for m in range(3, top + 1):
        _fill(M, m, 1, M.get(2, m))
    # Structural zeros: eoc = 2 forces 2 adjacent to the root leaving no room
    # for pom = 1; the chain cannot end at 2n when 2n hangs off the root or
    # off the one-child node 2n-1.
    _fill(M, 2, 1, 0)
    _fill(M, two_n, 1, 0)
    _fill(M, two_n, top, 0)
    # Bottom row from the Entringer row of size 2n-2.
    for k in range(2, two_n - 1):
        _fill(M, two_n, k, ent_row[k - 2])
    # Subdiagonal: seed then crossing identity.
    _fill(M, 3, 2, 2 * M.get(3, 1))
    for k in range(3, two_n - 1):
        v = M.get(k, k - 1) + M.get(k, k + 1) - M.get(k - 1, k)
        _fill(M, k + 1, k, v)
    return M


# -- symmetry -------------------------------------------------------------------


def check_symmetry(M: JointMatrix) -> list[tuple[tuple[int, int], tuple[int, int], int, int]]:
    """Violations of f(2n+1-k, 2n+1-m) = f(m, k) over the checked region.

    The region is every box cell with m - 1 <= k plus the two extra cells
    (3, 1) and (2n, 2n-2); the mirror always lands inside the box.  Each
    violation is ((m, k), (mirror m, mirror k), value, mirror value).
    """
    two_n = M.two_n
    bad = []
    for m in range(2, two_n + 1):
        for k in range(1, two_n):
            if not (m - 1 <= k or (m, k) in ((3, 1), (two_n, two_n - 2))):
                continue
            mm, mk = two_n + 1 - k, two_n + 1 - m
            a = M.get(m, k)
            b = M.get(mm, mk)
            if a != b:
                bad.append(((m, k), (mm, mk), a, b))
    return bad


# -- the assembled induction -------------------------------------------------------


class RecurrenceEngine:
    """Carries the induction state: column sums and assembled matrices.

    Matrices returned by :meth:`assemble` are cached and shared; treat them
    as immutable.
    """

    def __init__(self) -> None:
        self._col_sums: dict[int, tuple[int, ...]] = {}
        self._matrices: dict[int, JointMatrix] = {}
        self._triangle: EntringerTriangle | None = None

    def entringer_row(self, n: int) -> tuple[int, ...]:
        if self._triangle is None or self._triangle.n_max < n:
            self._triangle = entringer_triangle(max(n, 8))
        return self._triangle.row(n)

    def column_sums(self, two_n: int) -> tuple[int, ...]:
        _check_even(two_n)
        if two_n not in self._col_sums:
            for s in range(2, two_n + 1, 2):
                if s not in self._col_sums:
                    prev = self._col_sums[s - 2] if s > 2 else None
                    self._col_sums[s] = column_sums(s, prev)
        return self._col_sums[two_n]

    def assemble(self, two_n: int, fill_interior: bool = False) -> JointMatrix:
        """Run the induction up to *two_n*; see the module docstring.

        Without *fill_interior* the result is method="recurrence" and the
        interior lower-triangle cells are Unknown.  With it, those cells are
        taken from the brute-force oracle and the method tag reads "hybrid".
        """
        _check_even(two_n)
        base = self._assemble_no_fill(two_n)
        if not fill_interior:
            return base
        from .distributions import joint_matrix_bruteforce

        filled = JointMatrix(two_n, method="hybrid")
        for m, k, v in base.known_cells():
            filled.set(m, k, v)
        missing = base.unknown_cells()
        if missing:
            brute = joint_matrix_bruteforce(two_n)
            for m, k in missing:
                filled.set(m, k, brute.get(m, k))
        filled.attach_margins(base.row_sums(), base.col_sums(), base.total())
        return filled

    def _assemble_no_fill(self, two_n: int) -> JointMatrix:
        for s in range(2, two_n + 1, 2):
            if s in self._matrices:
                continue
            if s == 2:
                M = JointMatrix(2, method="recurrence")
                M.set(2, 1, 1)
                M.attach_margins((1,), (1,), 1)
            else:
                prev = self._matrices[s - 2]
                cs = self.column_sums(s)
                up = upper_triangle(s, prev, self.column_sums(s - 2))
                M = lower_border(s, up, self.entringer_row(s - 2))
                # Diagonal cells are structurally zero: the chain-end leaf
                # has no children, so it is never the parent of 2n.
                for m in range(2, s):
                    _fill(M, m, m, 0)
                M.attach_margins(cs, cs, sum(cs))
            self._matrices[s] = M
        return self._matrices[two_n]


def assemble(two_n: int, fill_interior: bool = False) -> JointMatrix:
    """One-shot induction from size 2 up to *two_n* with a fresh engine."""
    return RecurrenceEngine().assemble(two_n, fill_interior=fill_interior)
