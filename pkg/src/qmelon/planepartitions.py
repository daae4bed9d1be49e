"""Boxed plane partitions and their bijection with watermelon configurations.

A plane partition here is a rectangular matrix of nonnegative integers,
weakly decreasing along every row and down every column.  The box
B(n, l, m) holds matrices with l rows, n columns, and parts at most m.

The bijection with watermelons goes through diagonal slices: the
diagonals of the matrix on and above the main diagonal form a weakly
decreasing interlacing chain and assemble into a column-strict tableau
with entries at most n; the diagonals on and below it give a second
tableau with entries at most l.  The lower tableau is the watermelon's
C tableau; the box complement of the upper one is its B tableau.  The
identity |pi| = (n + l + 1)|shape| - entries(upper) - entries(lower)
makes the correspondence volume-preserving cell for cell.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .laurent import LaurentPoly
from .partitions import Partition, strip
from .paths import (
    Watermelon,
    closed_genfunc,
    make_watermelon,
)
from .tableaux import (
    Tableau,
    box_complement,
    descending_slices,
    from_descending_slices,
    letter_counts,
)

PlanePartition = tuple[tuple[int, ...], ...]


class BoxMismatch(ValueError):
    """A plane partition does not fit the stated box."""


def check_plane_partition(parts: Sequence[Sequence[int]]) -> PlanePartition:
    """Validate and freeze a rectangular weakly decreasing matrix."""
    pp = tuple(tuple(row) for row in parts)
    widths = {len(row) for row in pp}
    if len(widths) > 1:
        raise ValueError("rows must all have the same length")
    for i, row in enumerate(pp):
        for j, v in enumerate(row):
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"part at ({i + 1}, {j + 1}) is not a nonnegative integer")
            if j > 0 and row[j - 1] < v:
                raise ValueError(f"row {i + 1} increases at column {j + 1}")
            if i > 0 and pp[i - 1][j] < v:
                raise ValueError(f"column {j + 1} increases at row {i + 1}")
    return pp


def volume(pp: Sequence[Sequence[int]]) -> int:
    return sum(sum(row) for row in pp)


def in_box(pp: PlanePartition, n: int, l: int, m: int) -> bool:
    if len(pp) > l or any(len(row) > n for row in pp):
        return False
    return all(v <= m for row in pp for v in row)


def _require_box(pp: Sequence[Sequence[int]], n: int, l: int, m: int) -> PlanePartition:
    """Check the matrix and pad it to the full l x n grid of the box."""
    checked = check_plane_partition(pp)
    if not in_box(checked, n, l, m):
        raise BoxMismatch(f"plane partition does not fit in B({n}, {l}, {m})")
    width = len(checked[0]) if checked else 0
    rows = [row + (0,) * (n - width) for row in checked]
    rows += [(0,) * n] * (l - len(rows))
    return tuple(rows)


def enumerate_box(n: int, l: int, m: int) -> Iterator[PlanePartition]:
    """All plane partitions in B(n, l, m) as full l x n matrices.

    Ascending lexicographic order on the row-major flattened matrix; the
    all-zero matrix comes first and the all-m matrix last.
    """
    if n < 0 or l < 0 or m < 0:
        raise ValueError("box dimensions must be nonnegative")
    if n == 0 or l == 0:
        yield tuple(() for _ in range(l))
        return
    grid = [[0] * n for _ in range(l)]

    def fill(pos: int) -> Iterator[PlanePartition]:
        if pos == n * l:
            yield tuple(tuple(row) for row in grid)
            return
        i, j = divmod(pos, n)
        cap = m
        if j > 0:
            cap = min(cap, grid[i][j - 1])
        if i > 0:
            cap = min(cap, grid[i - 1][j])
        for v in range(cap + 1):
            grid[i][j] = v
            yield from fill(pos + 1)
        grid[i][j] = 0

    yield from fill(0)


def zq(n: int, l: int, m: int) -> LaurentPoly:
    """Volume generating function of the box, summed over the enumeration."""
    acc: dict[int, int] = {}
    for pp in enumerate_box(n, l, m):
        v = volume(pp)
        acc[v] = acc.get(v, 0) + 1
    return LaurentPoly(acc)


def macmahon_product(n: int, l: int, m: int) -> LaurentPoly:
    """Closed product for the box generating function; equals zq exactly."""
    return closed_genfunc(n, l, m)


def _upper_slices(pp: PlanePartition, n: int) -> list[Partition]:
    """Diagonals pp[i][i + t] for t = 0..n-1, each a stripped partition."""
    out = []
    for t in range(n):
        diag = []
        i = 0
        while i < len(pp) and i + t < n:
            diag.append(pp[i][i + t])
            i += 1
        out.append(strip(tuple(diag)))
    return out


def _lower_slices(pp: PlanePartition, n: int, l: int) -> list[Partition]:
    """Diagonals pp[i + t][i] for t = 0..l-1, each a stripped partition."""
    out = []
    for t in range(l):
        diag = []
        i = 0
        while i + t < l and i < n:
            diag.append(pp[i + t][i])
            i += 1
        out.append(strip(tuple(diag)))
    return out


def gradient_bijection(pp: Sequence[Sequence[int]], n: int, l: int, m: int) -> Watermelon:
    """Watermelon of a boxed plane partition, volume preserved exactly.

    Needs l <= n; the deviation of the result is k = n - l.
    """
    if l > n:
        raise ValueError("the box must have at least as many columns as rows")
    full = _require_box(pp, n, l, m)
    upper = from_descending_slices(_upper_slices(full, n), n)
    lower = from_descending_slices(_lower_slices(full, n, l), l)
    b_tab = box_complement(upper, n, m)
    interface = strip(tuple(full[i][i] for i in range(min(l, n))))
    w = make_watermelon(n, m, n - l, interface, lower, b_tab)
    assert w.volume == volume(full)
    return w


def gradient_bijection_inverse(w: Watermelon) -> PlanePartition:
    """Boxed plane partition of a watermelon; inverse of gradient_bijection."""
    n, l, m = w.n, w.lines, w.m
    upper = box_complement(w.b_nest.tableau, n, m)
    delta = descending_slices(upper, n)
    eps = descending_slices(w.c_nest.tableau, l)
    rows = []
    for i in range(1, l + 1):
        row = []
        for j in range(1, n + 1):
            if j >= i:
                diag = delta[j - i]
                row.append(diag[i - 1] if i - 1 < len(diag) else 0)
            else:
                diag = eps[i - j]
                row.append(diag[j - 1] if j - 1 < len(diag) else 0)
        rows.append(tuple(row))
    pp = tuple(rows)
    assert volume(pp) == w.volume
    return pp


def rect_tableau(pp: Sequence[Sequence[int]], n: int, l: int, m: int) -> Tableau:
    """Column-strict rectangle encoding the box: T[i][c] = m + i - pp[c][i].

    Shape is n rows of length l, entries run from 1 to n + m; the map is a
    bijection from B(n, l, m) onto tableaux of that rectangle.
    """
    full = _require_box(pp, n, l, m)
    return tuple(
        tuple(m + i - full[c - 1][i - 1] for c in range(1, l + 1))
        for i in range(1, n + 1)
    )


def horizontal_steps(w: Watermelon) -> tuple[int, ...]:
    """East steps m_1..m_{n+m} of the level reading of the watermelon.

    m_j is the count of the letter n + m + 1 - j in the rectangle tableau
    of the matching plane partition.  The statistic sum (j-1) m_j exceeds
    the watermelon volume by the constant l * n * (n - 1) / 2.
    """
    n, m = w.n, w.m
    pp = gradient_bijection_inverse(w)
    t = rect_tableau(pp, n, w.lines, m)
    counts = letter_counts(t, n + m)
    return tuple(counts[n + m - j] for j in range(1, n + m + 1))


def pp_to_dict(pp: Sequence[Sequence[int]], n: int, l: int, m: int) -> dict:
    full = _require_box(pp, n, l, m)
    return {
        "N": n,
        "L": l,
        "M": m,
        "parts": [list(row) for row in full],
        "volume": volume(full),
    }


def pp_from_dict(data: dict) -> tuple[PlanePartition, int, int, int]:
    """Read {N, L, M, parts[, volume]}; returns (matrix, n, l, m)."""
    n, l, m = int(data["N"]), int(data["L"]), int(data["M"])
    full = _require_box(data["parts"], n, l, m)
    if "volume" in data and int(data["volume"]) != volume(full):
        raise ValueError(
            f"stored volume {data['volume']} does not match computed {volume(full)}")
    return full, n, l, m
