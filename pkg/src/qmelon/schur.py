"""Schur polynomials specialized at geometric points x_j = q**a_j.

Five independent evaluation routes are provided on purpose; their exact
agreement is part of the test contract:

* ``bialternant``     -- ratio of two alternant determinants,
* ``tableau_sum``     -- brute-force sum over semistandard tableaux,
* ``principal_product`` -- hook-style product for the point (1, q, ..., q**(m-1)),
* ``h_determinant``   -- determinant of complete homogeneous sums,
* ``gv_determinant``  -- determinant of twisted Gaussian binomials coming
                         from counting nonintersecting lattice paths.

Points are given as exponent tuples (ints, possibly negative).  Repeated
exponents make the bialternant denominator vanish and are rejected with
DegeneratePoint rather than handled by a limit.
"""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly, PolyMatrix, det_fraction_free
from .partitions import Partition, check_partition, n_statistic, pad, strip, weight
from .qanalogs import h_complete, qbinomial
from .tableaux import enumerate_ssyt

GeometricPoint = tuple[int, ...]


class DegeneratePoint(ValueError):
    """A geometric point with repeated exponents where distinct ones are required."""


class NonzeroTail(ValueError):
    """A trailing part expected to vanish was nonzero."""


def _require_distinct(exponents: Sequence[int]) -> None:
    if len(set(exponents)) != len(exponents):
        raise DegeneratePoint(f"exponents must be distinct: {tuple(exponents)}")


def bialternant(lam: Sequence[int], exponents: Sequence[int]) -> LaurentPoly:
    """Alternant ratio det(x_j**(lam_k + N - k)) / det(x_j**(N - k)) at x_j = q**a_j.

    Both determinants use the same column order, so the value does not
    depend on any sign convention.  The division is exact.
    """
    n = len(exponents)
    _require_distinct(exponents)
    lam = pad(check_partition(lam), n)
    a = list(exponents)
    num = PolyMatrix(
        [[LaurentPoly.q_power(a[j] * (lam[k] + n - 1 - k)) for k in range(n)] for j in range(n)]
    )
    den = PolyMatrix(
        [[LaurentPoly.q_power(a[j] * (n - 1 - k)) for k in range(n)] for j in range(n)]
    )
    return det_fraction_free(num).exact_div(det_fraction_free(den))


def tableau_sum(lam: Sequence[int], exponents: Sequence[int]) -> LaurentPoly:
    """Sum of q**(sum of a over entries) over all SSYT of shape lam, entries <= len(exponents)."""
    lam = strip(check_partition(lam))
    m = len(exponents)
    if len(lam) > m:
        raise ValueError(f"shape {lam} needs more than {m} letters")
    acc: dict[int, int] = {}
    a = list(exponents)
    for t in enumerate_ssyt(lam, m):
        e = sum(a[v - 1] for row in t for v in row)
        acc[e] = acc.get(e, 0) + 1
    return LaurentPoly(acc)


def principal_product(lam: Sequence[int], m: int) -> LaurentPoly:
    """Product form of the specialization at (1, q, ..., q**(m-1)).

    q**n(lam) * prod over i < j <= m of (1 - q**(lam_i - lam_j - i + j)) / (1 - q**(j - i)),
    with lam padded to m parts.  Exact division of the two full products.
    """
    lam = pad(check_partition(lam), m)
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    one = LaurentPoly.one()
    for i in range(m):
        for j in range(i + 1, m):
            num = num * (one - LaurentPoly.q_power(lam[i] - lam[j] + j - i))
            den = den * (one - LaurentPoly.q_power(j - i))
    return num.exact_div(den).shift(n_statistic(lam))


def h_determinant(lam: Sequence[int], m: int) -> LaurentPoly:
    """Jacobi-Trudi style determinant det(h(lam_i - i + j)) in m variables."""
    lam = check_partition(lam)
    if len(strip(lam)) > m:
        raise ValueError(f"shape {lam} needs more than {m} letters")
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    entries = [[h_complete(lam[i] - (i + 1) + (j + 1), m) for j in range(n)] for i in range(n)]
    return det_fraction_free(PolyMatrix(entries))


def gv_determinant(lam: Sequence[int], m: int) -> LaurentPoly:
    """Nonintersecting-path determinant of twisted Gaussian binomials.

    Entry (i, j) is q**((j-1)(lam_i + j - i)) * [lam_i + m - i choose m - j];
    requires m >= number of parts of lam.
    """
    lam = check_partition(lam)
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    if m < n:
        raise ValueError(f"need at least {n} variables for {lam}")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            tw = LaurentPoly.q_power((j - 1) * (lam[i - 1] + j - i))
            row.append(tw * qbinomial(lam[i - 1] + m - i, m - j))
        rows.append(row)
    return det_fraction_free(PolyMatrix(rows))


def weight_shift_check(lam: Sequence[int], n: int) -> bool:
    """True iff the value at (q, ..., q**n) is q**|lam| times the value at (1, ..., q**(n-1))."""
    shifted = bialternant(lam, tuple(range(1, n + 1)))
    base = bialternant(lam, tuple(range(n)))
    return shifted == base.shift(weight(lam))


def limit_vanishing_vars(lam: Sequence[int], n: int, k: int) -> Partition:
    """Drop k vanishing variables: requires the last k parts of lam (padded to n) to be 0.

    Returns the truncated partition on n - k parts; raises NonzeroTail otherwise.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    full = pad(check_partition(lam), n)
    tail = full[n - k:]
    if any(tail):
        raise NonzeroTail(f"last {k} parts of {full} are not all zero")
    return full[: n - k]
