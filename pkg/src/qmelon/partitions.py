"""Integer partitions with an explicit length context.

Partitions are plain tuples of weakly decreasing nonnegative ints.
Trailing zeros are permitted and significant: helpers that need a fixed
number of parts state the length explicitly instead of guessing.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(parts)
    for x in lam:
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"partition parts must be nonnegative ints: {lam}")
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def weight(lam: Sequence[int]) -> int:
    """Total number of cells."""
    return sum(lam)


def n_statistic(lam: Sequence[int]) -> int:
    """sum of (i-1) * lam_i over rows i, 1-indexed."""
    return sum(i * x for i, x in enumerate(lam))


def pad(lam: Sequence[int], n: int) -> Partition:
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"partition {tuple(lam)} has more than {n} nonzero parts")
        return tuple(lam[:n])
    return tuple(lam) + (0,) * (n - len(lam))


def strip(lam: Sequence[int]) -> Partition:
    """Drop trailing zero parts."""
    out = list(lam)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def fits_in_box(lam: Sequence[int], n: int, m: int) -> bool:
    """True iff lam has at most n nonzero parts, each at most m."""
    s = strip(lam)
    return len(s) <= n and (not s or s[0] <= m)


def conjugate(lam: Sequence[int]) -> Partition:
    s = strip(lam)
    if not s:
        return ()
    return tuple(sum(1 for x in s if x >= c) for c in range(1, s[0] + 1))


def to_strict(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """Strictly decreasing parts mu_j = lam_j + n - j, j = 1..n."""
    full = pad(lam, n)
    return tuple(full[j] + n - 1 - j for j in range(n))


def from_strict(mu: Sequence[int]) -> Partition:
    """Inverse of to_strict: lam_j = mu_j - (n - j)."""
    n = len(mu)
    for a, b in zip(mu, mu[1:]):
        if a <= b:
            raise ValueError(f"parts must be strictly decreasing: {tuple(mu)}")
    lam = tuple(mu[j] - (n - 1 - j) for j in range(n))
    if any(x < 0 for x in lam):
        raise ValueError(f"not in the image of to_strict: {tuple(mu)}")
    return check_partition(lam)


def from_occupation(counts: Sequence[int]) -> Partition:
    """Partition from site occupation numbers.

    ``counts[s]`` is the multiplicity of the part value s, for s = 0..M.
    """
    lam: list[int] = []
    for s in range(len(counts) - 1, -1, -1):
        c = counts[s]
        if c < 0:
            raise ValueError("occupation numbers must be nonnegative")
        lam.extend([s] * c)
    return tuple(lam)


def to_occupation(lam: Sequence[int], m: int) -> tuple[int, ...]:
    """Occupation numbers (index = part value, 0..m) of a partition."""
    lam = check_partition(lam)
    if lam and lam[0] > m:
        raise ValueError(f"part {lam[0]} exceeds the site bound {m}")
    counts = [0] * (m + 1)
    for x in lam:
        counts[x] += 1
    return tuple(counts)


def enumerate_in_box(n: int, m: int) -> Iterator[Partition]:
    """All partitions with at most n parts, each at most m, padded to length n.

    Order: ascending lexicographic on the padded part vector, so the zero
    partition comes first and (m,...,m) last.  Yields exactly
    binomial(n+m, n) partitions.
    """
    if n < 0 or m < 0:
        raise ValueError("box dimensions must be nonnegative")

    def rec(prefix: list[int], remaining: int, bound: int) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for v in range(bound + 1):
            prefix.append(v)
            yield from rec(prefix, remaining - 1, v)
            prefix.pop()

    yield from rec([], n, m)


_PARTITION_RE = re.compile(r"^\[\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\]$")


def parse_partition(text: str) -> Partition:
    """Parse the bracketed textual form, e.g. '[5,5,3,2,2,0]' or '[]'."""
    text = text.strip()
    if not _PARTITION_RE.match(text):
        raise ValueError(f"malformed partition literal: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return check_partition(int(x) for x in inner.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"
