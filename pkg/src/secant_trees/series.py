"""Exact truncated power series in up to three variables over rationals.

Series are stored as sparse dicts mapping exponent tuples to
:class:`fractions.Fraction`, truncated by *total* degree: a single ``order``
bound suffices because every coefficient of interest here lives at a known
total degree.  Stored coefficients are plain Taylor coefficients; the
exponential-generating-function normalization (multiplying by the factorials
of the exponents) is applied only at extraction time.

On top of the generic ring (add, multiply, invert, differentiate, compose a
univariate series with an integer linear form) this module builds the
generating functions of the upper triangles of the joint matrices:

* ``sec_series``  -- 1/cos y; EGF coefficients are the secant numbers.
* ``omega1``      -- cos(x-y)/cos^2(x+y); EGF coefficient (i, j) is the
  first-top-row count f_{i+j+4}(2, j+3) when i+j is even, 0 otherwise.
* ``omega_p``     -- the matrix of upper-triangle row p, rebuilt from row
  p-1 of ``omega1`` as cos(2x) R(x+y) + sin(2x) R'(x+y).
* ``omega``       -- the three-variable master series
  (cos 2y + 2 cos 2(x-z) - cos 2(z+x)) / (2 cos^3(x+y+z)); its EGF
  coefficient at (2n-k-1, k-m-1, m-2) equals f_{2n}(m, k) for every upper
  cell 2 <= m < k <= 2n-1.

A grid g satisfying g[i,j+2] - 2 g[i+1,j+1] + g[i+2,j] + 4 g[i,j] = 0
everywhere is called a Poupard grid; the slicing above turns the column
second-difference law of the joint matrices into exactly that identity, and
``pde_residual`` checks its generating-function form
G_xx - 2 G_xy + G_yy + 4G = 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Mapping, Sequence

F0 = Fraction(0)
F1 = Fraction(1)


class VarMismatchError(ValueError):
    """Operands live in different numbers of variables."""


class ZeroConstantTermError(ZeroDivisionError):
    """Only series with a nonzero constant term are invertible."""


class OutOfOrderError(ValueError):
    """A coefficient beyond the truncation order was requested."""


class NotAPoupardSolutionError(ValueError):
    """Row reconstruction failed: the series does not solve the PDE."""


def _exponents(num_vars: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of the given total degree, lexicographically."""
    if num_vars == 1:
        yield (degree,)
        return
    for e0 in range(degree + 1):
        for rest in _exponents(num_vars - 1, degree - e0):
            yield (e0, *rest)


class TriSeries:
    """A truncated power series; absent exponents mean coefficient 0.

    Instances are treated as immutable: every operation returns a new
    series.  Arithmetic results carry ``order = min`` of the operand orders.
    """

    __slots__ = ("num_vars", "order", "coeffs")

    def __init__(
        self,
        num_vars: int,
        order: int,
        coeffs: Mapping[tuple[int, ...], Fraction | int] | None = None,
    ):
        if not 1 <= num_vars <= 3:
            raise ValueError(f"num_vars must be 1..3, got {num_vars}")
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        self.num_vars = num_vars
        self.order = order
        clean: dict[tuple[int, ...], Fraction] = {}
        if coeffs:
            for e, c in coeffs.items():
                if len(e) != num_vars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent tuple {e!r}")
                if sum(e) > order:
                    raise ValueError(f"exponent {e!r} exceeds order {order}")
                c = Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, order: int) -> "TriSeries":
        return cls(num_vars, order)

    @classmethod
    def constant(cls, value, num_vars: int, order: int) -> "TriSeries":
        return cls(num_vars, order, {(0,) * num_vars: Fraction(value)})

    # -- ring operations -----------------------------------------------------

    def _check_compatible(self, other: "TriSeries") -> None:
        if self.num_vars != other.num_vars:
            raise VarMismatchError(
                f"cannot combine series in {self.num_vars} and {other.num_vars} variables"
            )

    def __add__(self, other: "TriSeries") -> "TriSeries":
        if not isinstance(other, TriSeries):
            return NotImplemented
        self._check_compatible(other)
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        for e, c in other.coeffs.items():
            if sum(e) <= order:
                s = out.get(e, F0) + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return TriSeries(self.num_vars, order, out)

    def __neg__(self) -> "TriSeries":
        return TriSeries(self.num_vars, self.order, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "TriSeries") -> "TriSeries":
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "TriSeries":
        f = Fraction(factor)
        if not f:
            return TriSeries.zero(self.num_vars, self.order)
        return TriSeries(self.num_vars, self.order, {e: c * f for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TriSeries):
            return NotImplemented
        self._check_compatible(other)
        order = min(self.order, other.order)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self.coeffs.items():
            da = sum(ea)
            if da > order:
                continue
            for eb, cb in other.coeffs.items():
                if da + sum(eb) > order:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, F0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return TriSeries(self.num_vars, order, out)

    __rmul__ = __mul__

    def invert(self) -> "TriSeries":
        """Multiplicative inverse up to the truncation order.

        Coefficients are solved degree by degree from the convolution
        identity (self * inverse) = 1.
        """
        zero = (0,) * self.num_vars
        c0 = self.coeffs.get(zero, F0)
        if not c0:
            raise ZeroConstantTermError("series with zero constant term has no inverse")
        inv: dict[tuple[int, ...], Fraction] = {zero: F1 / c0}
        items = [(f, c) for f, c in self.coeffs.items() if f != zero]
        for degree in range(1, self.order + 1):
            for e in _exponents(self.num_vars, degree):
                acc = F0
                for f, c in items:
                    g = tuple(x - y for x, y in zip(e, f))
                    if min(g) < 0:
                        continue
                    t = inv.get(g)
                    if t is not None:
                        acc += c * t
                if acc:
                    inv[e] = -acc / c0
        return TriSeries(self.num_vars, self.order, inv)

    def partial_derivative(self, var: int) -> "TriSeries":
        """Formal derivative with respect to variable index *var*; the
        truncation order drops by one."""
        if not 0 <= var < self.num_vars:
            raise ValueError(f"variable index {var} out of range")
        if self.order == 0:
            raise OutOfOrderError("cannot differentiate an order-0 truncation")
        out = {}
        for e, c in self.coeffs.items():
            if e[var]:
                d = list(e)
                d[var] -= 1
                out[tuple(d)] = c * e[var]
        return TriSeries(self.num_vars, self.order - 1, out)

    def truncate(self, order: int) -> "TriSeries":
        if order >= self.order:
            if order == self.order:
                return self
            raise OutOfOrderError(f"cannot extend order {self.order} to {order}")
        return TriSeries(
            self.num_vars, order, {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        )

    # -- coefficient access -----------------------------------------------------

    def taylor_coefficient(self, exponents: Sequence[int]) -> Fraction:
        e = tuple(exponents)
        if len(e) != self.num_vars:
            raise VarMismatchError(f"expected {self.num_vars} exponents, got {e!r}")
        if sum(e) > self.order:
            raise OutOfOrderError(f"exponent {e!r} beyond truncation order {self.order}")
        return self.coeffs.get(e, F0)

    def egf_coefficient(self, exponents: Sequence[int]) -> Fraction:
        """Taylor coefficient times the factorial of every exponent."""
        c = self.taylor_coefficient(exponents)
        for x in exponents:
            c *= factorial(x)
        return c

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_abs_coefficient(self) -> Fraction:
        return max((abs(c) for c in self.coeffs.values()), default=F0)

    # -- comparison and dumping ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriSeries):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.num_vars, self.order, frozenset(self.coeffs.items())))

    def agrees_with(self, other: "TriSeries") -> bool:
        """Coefficient-wise equality up to the smaller truncation order."""
        self._check_compatible(other)
        order = min(self.order, other.order)
        a = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        b = {e: c for e, c in other.coeffs.items() if sum(e) <= order}
        return a == b

    def dump_lines(self) -> list[str]:
        """Lines "e1 [e2 [e3]] num/den" sorted by total degree then lex."""
        out = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            c = self.coeffs[e]
            out.append(" ".join(map(str, e)) + f" {c.numerator}/{c.denominator}")
        return out

    def __repr__(self) -> str:
        return (
            f"TriSeries(num_vars={self.num_vars}, order={self.order}, "
            f"terms={len(self.coeffs)})"
        )

    def to_univariate_list(self) -> list[Fraction]:
        if self.num_vars != 1:
            raise VarMismatchError("only 1-variable series convert to a list")
        return [self.coeffs.get((d,), F0) for d in range(self.order + 1)]


# -- trigonometric building blocks ------------------------------------------------


def _cos_taylor(order: int) -> list[Fraction]:
    out = [F0] * (order + 1)
    for i in range(0, order + 1, 2):
        out[i] = Fraction((-1) ** (i // 2), factorial(i))
    return out


def _sin_taylor(order: int) -> list[Fraction]:
    out = [F0] * (order + 1)
    for i in range(1, order + 1, 2):
        out[i] = Fraction((-1) ** ((i - 1) // 2), factorial(i))
    return out


def compose_linear(
    univariate: Sequence[Fraction], linear: Sequence[int], order: int
) -> TriSeries:
    """Substitute the linear form sum(linear[i] * var_i) into a univariate
    Taylor series given by its coefficient list."""
    nv = len(linear)
    form = TriSeries(
        nv,
        order,
        {
            tuple(1 if j == i else 0 for j in range(nv)): Fraction(a)
            for i, a in enumerate(linear)
            if a
        } if order >= 1 else None,
    )
    result = TriSeries.constant(univariate[0] if univariate else 0, nv, order)
    power = TriSeries.constant(1, nv, order)
    top = min(order, len(univariate) - 1)
    for d in range(1, top + 1):
        power = power * form
        if power.is_zero():
            break
        c = univariate[d]
        if c:
            result = result + power.scale(c)
    return result


def cos_linear(linear: Sequence[int], order: int) -> TriSeries:
    """Taylor series of cos(a x + b y + c z) for the integer form *linear*."""
    return compose_linear(_cos_taylor(order), linear, order)


def sin_linear(linear: Sequence[int], order: int) -> TriSeries:
    """Taylor series of sin(a x + b y + c z) for the integer form *linear*."""
    return compose_linear(_sin_taylor(order), linear, order)


def row_series(series2: TriSeries, i: int) -> TriSeries:
    """Row *i* of a two-variable series as a univariate series in the second
    variable, normalized so that its EGF coefficients are the row's EGF
    coefficients: coefficient j is taylor(i, j) * i!."""
    if series2.num_vars != 2:
        raise VarMismatchError("row extraction needs a 2-variable series")
    if i > series2.order:
        raise OutOfOrderError(f"row {i} beyond truncation order {series2.order}")
    fi = factorial(i)
    out = {
        (e[1],): c * fi
        for e, c in series2.coeffs.items()
        if e[0] == i
    }
    return TriSeries(1, series2.order - i, out)


# -- the generating functions -------------------------------------------------------


def sec_series(order: int) -> TriSeries:
    """1 / cos of a single variable; EGF coefficient 2n is the secant number."""
    return cos_linear((1,), order).invert()


def omega1(order: int) -> TriSeries:
    """cos(x - y) / cos^2(x + y) in two variables.

    EGF coefficient (i, j) is the size-(i+j+4) first-top-row count
    f(2, j+3) when i + j is even and 0 otherwise.
    """
    c = cos_linear((1, 1), order)
    return cos_linear((1, -1), order) * (c * c).invert()


def omega(order: int) -> TriSeries:
    """(cos 2y + 2 cos 2(x-z) - cos 2(z+x)) / (2 cos^3(x+y+z)).

    The master three-variable series: its EGF coefficient at
    (2n-k-1, k-m-1, m-2) is the joint count f_{2n}(m, k) for every upper
    cell.  The series is symmetric under swapping the first and third
    exponents, which is the counter-diagonal symmetry of the matrices.
    """
    num = (
        cos_linear((0, 2, 0), order)
        + cos_linear((2, 0, -2), order).scale(2)
        - cos_linear((2, 0, 2), order)
    )
    c = cos_linear((1, 1, 1), order)
    return num * (c * c * c).scale(2).invert()


def omega_p(p: int, order: int) -> TriSeries:
    """The two-variable series of upper-triangle row p, for p >= 1.

    Built from row p-1 of :func:`omega1` (call it R) as
    cos(2x) R(x+y) + sin(2x) R'(x+y); ``omega_p(1, order)`` equals
    ``omega1(order)``.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    base = omega1(order + p)
    r = row_series(base, p - 1)  # exact through degree order + 1
    r_list = r.to_univariate_list()
    rp_list = r.partial_derivative(0).to_univariate_list()
    a = compose_linear(r_list, (1, 1), order)
    b = compose_linear(rp_list, (1, 1), order)
    return cos_linear((2, 0), order) * a + sin_linear((2, 0), order) * b


# -- index bookkeeping between matrices and exponents --------------------------------


def cell_to_exponents(two_n: int, m: int, k: int) -> tuple[int, int, int]:
    """(x, y, z) exponents of the upper cell (m, k) of size two_n."""
    if not 2 <= m < k <= two_n - 1:
        raise ValueError(f"({m},{k}) is not an upper cell of M_{two_n}")
    return (two_n - k - 1, k - m - 1, m - 2)


def exponents_to_cell(i: int, j: int, q: int) -> tuple[int, int, int]:
    """(two_n, m, k) addressed by the exponents (i, j, q)."""
    if min(i, j, q) < 0:
        raise ValueError("exponents must be nonnegative")
    return (i + j + q + 4, q + 2, q + j + 3)


# -- Poupard grids ---------------------------------------------------------------------


class PoupardGrid:
    """A finite grid of values indexed by (i, j), i, j >= 0.

    The support may be triangular (everything with i + j bounded); checks
    only fire where all four stencil cells are present.
    """

    def __init__(self, entries: Mapping[tuple[int, int], int | Fraction]):
        self.entries = dict(entries)

    def has(self, i: int, j: int) -> bool:
        return (i, j) in self.entries

    def get(self, i: int, j: int):
        return self.entries[(i, j)]

    @classmethod
    def from_series(cls, series2: TriSeries, max_sum: int) -> "PoupardGrid":
        """EGF coefficients of a two-variable series on i + j <= max_sum."""
        entries = {}
        for i in range(max_sum + 1):
            for j in range(max_sum + 1 - i):
                entries[(i, j)] = series2.egf_coefficient((i, j))
        return cls(entries)


def omega_grid_from_counts(
    p: int, max_sum: int, counts: Callable[[int], "object"]
) -> PoupardGrid:
    """The grid of upper-triangle row p sliced out of joint matrices.

    ``counts(two_n)`` must return a matrix with the ``get(m, k)`` accessor;
    entry (i, j) is 0 when i + j and p share parity, else the count
    f_{p+i+j+3}(p+1, p+j+2).  Covers i + j <= max_sum.
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    entries: dict[tuple[int, int], int] = {}
    cache: dict[int, object] = {}
    for i in range(max_sum + 1):
        for j in range(max_sum + 1 - i):
            if (i + j) % 2 == p % 2:
                entries[(i, j)] = 0
            else:
                two_n = p + i + j + 3
                if two_n not in cache:
                    cache[two_n] = counts(two_n)
                entries[(i, j)] = cache[two_n].get(p + 1, p + j + 2)
    return PoupardGrid(entries)


def poupard_check(grid: PoupardGrid) -> list[tuple[tuple[int, int], Fraction]]:
    """Nonzero residuals of g[i,j+2] - 2 g[i+1,j+1] + g[i+2,j] + 4 g[i,j].

    Returns one ((i, j), residual) pair per violated stencil position;
    an empty list certifies the Poupard property on the given support.
    """
    bad = []
    for (i, j) in sorted(grid.entries):
        if not (grid.has(i, j + 2) and grid.has(i + 1, j + 1) and grid.has(i + 2, j)):
            continue
        r = (
            grid.get(i, j + 2)
            - 2 * grid.get(i + 1, j + 1)
            + grid.get(i + 2, j)
            + 4 * grid.get(i, j)
        )
        if r:
            bad.append(((i, j), r))
    return bad


# -- PDE and reconstruction ---------------------------------------------------------


def pde_residual(G: TriSeries) -> TriSeries:
    """G_xx - 2 G_xy + G_yy + 4 G, truncated to order - 2.

    The zero series certifies that G generates a Poupard grid.
    """
    if G.num_vars != 2:
        raise VarMismatchError("the PDE check needs a 2-variable series")
    if G.order < 2:
        raise OutOfOrderError("need order >= 2 to form second derivatives")
    gxx = G.partial_derivative(0).partial_derivative(0)
    gxy = G.partial_derivative(0).partial_derivative(1)
    gyy = G.partial_derivative(1).partial_derivative(1)
    return gxx - gxy.scale(2) + gyy + G.scale(4)


def pde_check(G: TriSeries) -> Fraction:
    """Largest absolute residual coefficient; 0 on success."""
    return pde_residual(G).max_abs_coefficient()


def reconstruct_from_rows(G: TriSeries) -> TriSeries:
    """Rebuild G from its first two rows as A(x+y) cos 2x + B(x+y) sin 2x.

    A is row 0 of G and B = (row 1 - A') / 2.  For any series solving the
    PDE the rebuilt series matches G through order - 1 (one order is lost to
    the derivative); a mismatch raises :class:`NotAPoupardSolutionError`.
    """
    if G.num_vars != 2:
        raise VarMismatchError("reconstruction needs a 2-variable series")
    if G.order < 1:
        raise OutOfOrderError("need order >= 1 to read the second row")
    a = row_series(G, 0)
    u = row_series(G, 1)
    b = (u - a.partial_derivative(0)).scale(Fraction(1, 2))
    target = G.order - 1
    rebuilt = cos_linear((2, 0), target) * compose_linear(
        a.to_univariate_list(), (1, 1), target
    ) + sin_linear((2, 0), target) * compose_linear(
        b.to_univariate_list(), (1, 1), target
    )
    if not rebuilt.agrees_with(G):
        raise NotAPoupardSolutionError(
            "row reconstruction disagrees with the series; it does not solve the PDE"
        )
    return rebuilt
