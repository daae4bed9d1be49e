"""Nests of nonintersecting lattice paths and watermelon configurations.

A nest of paths drawn against the vertical lines x = 1, 2, ... is encoded
by a semistandard tableau: row i describes path i, and the number of
north steps path i takes on a given line is a letter count of that row.
Two nest flavours are glued into a watermelon:

* a C-nest of shape lam on L lines: path i starts at the staircase point
  (L - i + 1, L - i) and climbs west to the wall x = 1, ending at height
  lam_i + L - i.  North steps on line j come from the letter L - j + 1
  in row i, so the area statistic is sum (j - 1) * l_j with l_j the
  total north steps on line j.
* a B-nest of N paths in a box of height M: path i leaves the wall at
  the height where the matching C path stopped and climbs east to
  (i, N + M - i).  It is encoded by a tableau of the box-complement
  shape, row N + 1 - i driving path i, letter N - j + 1 giving norths
  on line j; the area statistic is sum (j - 1) * (M - l_j).

A watermelon with deviation k uses L = N - k active C lines (start
points shifted east by k) and an interface partition lam inside the
M**L box.  Its volume is |lam| plus both area statistics; the empty
interface gives the unique minimal watermelon of volume 0.

Column strictness of the tableaux makes each half-nest a family of
pairwise vertex-disjoint staircases.  When the two halves are overlaid
in one picture, a C portion of one path may touch or share an edge with
a B portion of another; that is an artifact of flattening two nests
into one drawing, and the configuration itself is always the pair of
disjoint nests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .laurent import LaurentPoly, PolyMatrix, det_fraction_free
from .partitions import (
    Partition,
    check_partition,
    enumerate_in_box,
    pad,
    strip,
    weight,
)
from .qanalogs import h_complete, qbinomial
from .tableaux import (
    Tableau,
    enumerate_ssyt,
    first_ssyt_with_counts,
    is_ssyt,
    letter_counts,
    shape_of,
)


class NonIntegral(ArithmeticError):
    """An integer-valued product came out non-integral (internal assertion)."""


@dataclass(frozen=True)
class CNest:
    """Nest of paths climbing west to the wall x = 1, encoded by a tableau."""

    lines: int
    tableau: Tableau

    def __post_init__(self):
        if not is_ssyt(self.tableau, self.lines):
            raise ValueError("not a semistandard tableau within the line count")

    @property
    def shape(self) -> Partition:
        return shape_of(self.tableau)

    @property
    def step_counts(self) -> tuple[int, ...]:
        """North steps per line, l_1..l_n: l_j counts the letter n - j + 1."""
        counts = letter_counts(self.tableau, self.lines)
        return tuple(counts[self.lines - j] for j in range(1, self.lines + 1))

    @property
    def path_volume(self) -> int:
        """Squares swept below the paths: sum (j - 1) * l_j."""
        return sum((j - 1) * l for j, l in enumerate(self.step_counts, start=1))

    @property
    def weighted_volume(self) -> int:
        """Cell count of the shape plus the path volume."""
        return weight(self.shape) + self.path_volume


@dataclass(frozen=True)
class BNest:
    """Nest of paths climbing east from the wall inside a box of height M."""

    paths: int
    height: int
    tableau: Tableau

    def __post_init__(self):
        if not is_ssyt(self.tableau, self.paths):
            raise ValueError("not a semistandard tableau within the path count")
        shape = shape_of(self.tableau)
        if shape and shape[0] > self.height:
            raise ValueError("tableau row longer than the box height")

    @property
    def shape(self) -> Partition:
        return shape_of(self.tableau)

    @property
    def step_counts(self) -> tuple[int, ...]:
        """North steps per line: l_j counts the letter n - j + 1."""
        counts = letter_counts(self.tableau, self.paths)
        return tuple(counts[self.paths - j] for j in range(1, self.paths + 1))

    @property
    def path_volume(self) -> int:
        """Squares below the east steps: sum (j - 1) * (M - l_j)."""
        m = self.height
        return sum((j - 1) * (m - l) for j, l in enumerate(self.step_counts, start=1))


def nest_from_tableau(t: Tableau, n: int) -> CNest:
    """C-nest of a tableau with entries at most n, drawn against n lines."""
    return CNest(lines=n, tableau=t)


def complement_shape(lam: Sequence[int], n: int, m: int) -> Partition:
    """Rotated complement of lam inside the m**n box: parts m - lam_{n+1-i}."""
    full = pad(check_partition(lam), n)
    if full and full[0] > m:
        raise ValueError(f"{tuple(lam)} does not fit in a {m}**{n} box")
    return tuple(m - full[n - 1 - i] for i in range(n))


@dataclass(frozen=True)
class Watermelon:
    """A C-nest glued to a B-nest across a shared interface partition."""

    n: int
    m: int
    k: int
    interface: Partition
    c_nest: CNest
    b_nest: BNest

    @property
    def lines(self) -> int:
        """Active C-side lines, L = n - k."""
        return self.n - self.k

    @property
    def volume(self) -> int:
        return self.c_nest.weighted_volume + self.b_nest.path_volume

    def c_steps(self) -> tuple[int, ...]:
        """C-side step counts on lines 1..n; the last k are forced to 0."""
        return self.c_nest.step_counts + (0,) * self.k

    def b_steps(self) -> tuple[int, ...]:
        return self.b_nest.step_counts

    def to_dict(self) -> dict:
        return {
            "N": self.n,
            "M": self.m,
            "k": self.k,
            "lambda": list(pad(self.interface, self.lines)),
            "c_steps": list(self.c_steps()),
            "b_steps": list(self.b_steps()),
            "volume": self.volume,
        }


def make_watermelon(n: int, m: int, k: int, interface: Sequence[int],
                    c_tab: Tableau, b_tab: Tableau) -> Watermelon:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    lam = strip(check_partition(interface))
    lines = n - k
    if len(lam) > lines or (lam and lam[0] > m):
        raise ValueError(f"interface {lam} does not fit in the {m}**{lines} box")
    if strip(shape_of(c_tab)) != lam:
        raise ValueError("C tableau shape does not match the interface")
    if strip(shape_of(b_tab)) != strip(complement_shape(lam, n, m)):
        raise ValueError("B tableau shape must be the box complement of the interface")
    return Watermelon(
        n=n, m=m, k=k, interface=lam,
        c_nest=CNest(lines=lines, tableau=c_tab),
        b_nest=BNest(paths=n, height=m, tableau=b_tab),
    )


def enumerate_watermelons(n: int, m: int, k: int = 0) -> Iterator[Watermelon]:
    """All watermelons with deviation k, grouped by interface partition.

    Interfaces run in ascending lexicographic box order; for each interface
    the C tableaux vary first, then the B tableaux, both in row-major
    lexicographic order.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    lines = n - k
    for lam in enumerate_in_box(lines, m):
        lam_s = strip(lam)
        comp = strip(complement_shape(lam_s, n, m))
        for c_tab in enumerate_ssyt(lam_s, lines):
            for b_tab in enumerate_ssyt(comp, n):
                yield make_watermelon(n, m, k, lam_s, c_tab, b_tab)


def watermelon_genfunc(n: int, m: int, k: int = 0) -> LaurentPoly:
    """Volume generating function, summed term by term over the enumeration."""
    acc: dict[int, int] = {}
    for w in enumerate_watermelons(n, m, k):
        v = w.volume
        acc[v] = acc.get(v, 0) + 1
    return LaurentPoly(acc)


def closed_genfunc(n: int, l: int, m: int) -> LaurentPoly:
    """Box product form: prod over i<=n, j<=m of (1 - q^(l+i+j-1)) / (1 - q^(i+j-1))."""
    if n < 0 or l < 0 or m < 0:
        raise ValueError("dimensions must be nonnegative")
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    one = LaurentPoly.one()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            num = num * (one - LaurentPoly.q_power(l + i + j - 1))
            den = den * (one - LaurentPoly.q_power(i + j - 1))
    return num.exact_div(den)


def count_deviation(n: int, l: int, m: int) -> int:
    """Number of watermelons: prod over i<=n, j<=m of (l+i+j-1)/(i+j-1)."""
    value = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            value *= Fraction(l + i + j - 1, i + j - 1)
    if value.denominator != 1:
        raise NonIntegral(f"count for ({n}, {l}, {m}) is not an integer")
    return int(value)


def _int_det(rows: list[list[int]]) -> int:
    """Fraction-free integer determinant (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def count_deviation_det(n: int, l: int, m: int, form: int = 1) -> int:
    """Watermelon count as an n x n integer binomial determinant.

    form 1: det(binom(l+m+n-i, m+n-j)); form 2: det(binom(l+m+n+j-i-1, l+j-i)).
    Both forms equal count_deviation(n, l, m).
    """
    if form == 1:
        rows = [[_binom(l + m + n - i, m + n - j) for j in range(1, n + 1)]
                for i in range(1, n + 1)]
    elif form == 2:
        rows = [[_binom(l + m + n + j - i - 1, l + j - i) for j in range(1, n + 1)]
                for i in range(1, n + 1)]
    else:
        raise ValueError("form must be 1 or 2")
    return _int_det(rows)


def volume_offset(n: int, l: int) -> int:
    """Exponent gap between the horizontal-reading statistic and the volume.

    Equals l * n * (n - 1) / 2; independent of the box height.
    """
    return l * n * (n - 1) // 2


def genfunc_det_forms(n: int, l: int, m: int, form: int = 1) -> LaurentPoly:
    """Volume generating function as a normalized q-determinant.

    form 1 uses twisted Gaussian binomials, form 2 complete homogeneous
    sums in n + m variables.  Both determinants equal the principal
    specialization of the rectangular-shape Schur function, so the result
    is divided by q**volume_offset(n, l) to put the minimal watermelon at
    volume 0.  Equals closed_genfunc(n, l, m).
    """
    if n == 0:
        return LaurentPoly.one()
    if form == 1:
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                tw = LaurentPoly.q_power((j - 1) * (l + j - i))
                row.append(tw * qbinomial(l + m + n - i, m + n - j))
            rows.append(row)
    elif form == 2:
        rows = [[h_complete(l + j - i, n + m) for j in range(1, n + 1)]
                for i in range(1, n + 1)]
    else:
        raise ValueError("form must be 1 or 2")
    det = det_fraction_free(PolyMatrix(rows))
    return det.shift(-volume_offset(n, l))


def gv_count(lam: Sequence[int], n: int) -> int:
    """Nonintersecting nest count: det(binom(lam_i + n - i, n - j)).

    Equals the number of C-nests of shape lam on n lines, that is the
    number of semistandard tableaux of shape lam with entries at most n.
    """
    full = pad(check_partition(lam), n)
    rows = [[_binom(full[i - 1] + n - i, n - j) for j in range(1, n + 1)]
            for i in range(1, n + 1)]
    return _int_det(rows)


# ---- geometric reconstruction (for rendering and the test-only validator) ----

Point = tuple[int, int]


def wall_heights(w: Watermelon) -> tuple[int, ...]:
    """Height at which path i meets the wall x = 1: interface_i + n - i."""
    lam = pad(w.interface, w.n)
    return tuple(lam[i - 1] + w.n - i for i in range(1, w.n + 1))


def c_phase_points(w: Watermelon) -> list[list[Point]]:
    """Vertex lists of the west-climbing phase, path i from its start to the wall.

    Path i starts at (n - i + 1 + k, n - i).  A letter v in row i of the
    C tableau is a north step on line n + 1 - v - k; letters populate the
    lines 1..L only, the k easternmost lines carry no steps.
    """
    n, k = w.n, w.k
    rows = list(w.c_nest.tableau)
    heights = wall_heights(w)
    out = []
    for i in range(1, n + 1):
        row = rows[i - 1] if i - 1 < len(rows) else ()
        norths = [0] * (n + k + 1)
        for v in row:
            norths[n + 1 - v - k] += 1
        x, y = n - i + 1 + k, n - i
        pts: list[Point] = [(x, y)]
        for line in range(x, 0, -1):
            for _ in range(norths[line]):
                y += 1
                pts.append((x, y))
            if line > 1:
                x -= 1
                pts.append((x, y))
        assert (x, y) == (1, heights[i - 1])
        out.append(pts)
    return out


def b_phase_points(w: Watermelon) -> list[list[Point]]:
    """Vertex lists of the east-climbing phase, path i from the wall to (i, n+m-i).

    Path i is driven by row n + 1 - i of the B tableau; a letter v there
    is a north step on line n + 1 - v.
    """
    n, m = w.n, w.m
    rows = list(w.b_nest.tableau)
    heights = wall_heights(w)
    out = []
    for i in range(1, n + 1):
        row = rows[n - i] if n - i < len(rows) else ()
        norths = [0] * (n + 1)
        for v in row:
            norths[n + 1 - v] += 1
        x, y = 1, heights[i - 1]
        pts: list[Point] = [(x, y)]
        for line in range(1, i + 1):
            for _ in range(norths[line]):
                y += 1
                pts.append((x, y))
            if line < i:
                x += 1
                pts.append((x, y))
        assert (x, y) == (i, n + m - i)
        out.append(pts)
    return out


def watermelon_paths(w: Watermelon) -> list[list[Point]]:
    """Full vertex list of each glued path, start point through end point."""
    c_parts = c_phase_points(w)
    b_parts = b_phase_points(w)
    return [c + b[1:] for c, b in zip(c_parts, b_parts)]


def watermelon_from_dict(data: dict) -> Watermelon:
    """Rebuild a watermelon from its JSON form, choosing canonical tableaux.

    The step-count vectors pin the letter multiset of each tableau but not
    the full filling; the lexicographically first tableau realizing the
    counts is used.  The volume depends on the counts alone, so it agrees
    across realizations; a stored volume field is checked.
    """
    n, m, k = int(data["N"]), int(data["M"]), int(data["k"])
    lam = strip(check_partition(data["lambda"]))
    lines = n - k
    c_steps = tuple(int(v) for v in data["c_steps"])
    b_steps = tuple(int(v) for v in data["b_steps"])
    if len(c_steps) != n or len(b_steps) != n:
        raise ValueError("step vectors must have length N")
    if any(c_steps[lines:]):
        raise ValueError(f"the last {k} C-side step counts must be 0")
    c_counts = tuple(c_steps[lines - v] for v in range(1, lines + 1))
    b_counts = tuple(b_steps[n - v] for v in range(1, n + 1))
    c_tab = first_ssyt_with_counts(lam, c_counts)
    if c_tab is None:
        raise ValueError("C step counts are not realizable for the interface shape")
    comp = strip(complement_shape(lam, n, m))
    b_tab = first_ssyt_with_counts(comp, b_counts)
    if b_tab is None:
        raise ValueError("B step counts are not realizable for the complement shape")
    w = make_watermelon(n, m, k, lam, c_tab, b_tab)
    if "volume" in data and int(data["volume"]) != w.volume:
        raise ValueError(
            f"stored volume {data['volume']} does not match computed {w.volume}")
    return w


def horizontal_reading(w: Watermelon) -> tuple[int, ...]:
    """East steps per horizontal level, m_1..m_{n+m}, via the box projection."""
    from .planepartitions import horizontal_steps

    return horizontal_steps(w)
