"""Executable checks of the determinant and generating-function identities.

Every verify_* function computes both sides of one identity from scratch,
through independent code paths, and returns an IdentityReport with the two
serialized polynomials.  A report never asserts; callers decide what a
failed equality means.  All checks are exact, no floating point anywhere.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .laurent import (
    LaurentPoly,
    PolyMatrix,
    det_fraction_free,
    geometric_sum,
    vandermonde,
)
from .partitions import enumerate_in_box, strip, weight
from .paths import (
    closed_genfunc,
    enumerate_watermelons,
    genfunc_det_forms,
    gv_count,
    horizontal_reading,
    watermelon_genfunc,
)
from .qanalogs import qbinomial
from .schur import DegeneratePoint, bialternant, principal_product
from .tableaux import count_ssyt


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict
    lhs: LaurentPoly
    rhs: LaurentPoly
    equal: bool
    elapsed_ms: float

    def to_json_dict(self) -> dict:
        params = {
            key: list(value) if isinstance(value, tuple) else value
            for key, value in self.params.items()
        }
        return {
            "identity": self.identity,
            "params": params,
            "lhs": self.lhs.to_pairs(),
            "rhs": self.rhs.to_pairs(),
            "equal": self.equal,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def report_json_line(report: IdentityReport) -> str:
    return json.dumps(report.to_json_dict(), sort_keys=True)


def _report(identity: str, params: dict, lhs: LaurentPoly, rhs: LaurentPoly,
            started: float) -> IdentityReport:
    return IdentityReport(
        identity=identity,
        params=params,
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )


def _checked_point(point: Sequence[int], size: int, label: str) -> tuple[int, ...]:
    exps = tuple(int(v) for v in point)
    if len(exps) != size:
        raise ValueError(f"{label} must have {size} exponents, got {len(exps)}")
    if len(set(exps)) != len(exps):
        raise DegeneratePoint(f"{label} has repeated exponents: {exps}")
    return exps


def verify_binet_cauchy(n: int, m: int, a: Sequence[int], b: Sequence[int]) -> IdentityReport:
    """Schur pairing over the box against the geometric-entry determinant.

    LHS sums S_lam(q^a) S_lam(q^b) over lam inside the m**n box; RHS is
    det(sum_{t<m+n} q^{(a_k+b_j)t}) divided by both Vandermonde products.
    Points with a repeated exponent, or with a_k + b_j = 0 for some pair,
    are rejected.
    """
    start = time.perf_counter()
    av = _checked_point(a, n, "a")
    bv = _checked_point(b, n, "b")
    if any(x + y == 0 for x in av for y in bv):
        raise DegeneratePoint(f"a_k + b_j = 0 for some pair of {av} and {bv}")
    lhs = LaurentPoly.zero()
    for lam in enumerate_in_box(n, m):
        lhs = lhs + bialternant(lam, av) * bialternant(lam, bv)
    entries = [[geometric_sum(x + y, m + n) for y in bv] for x in av]
    det = det_fraction_free(PolyMatrix(entries))
    rhs = det.exact_div(vandermonde(av) * vandermonde(bv))
    return _report(
        "binet-cauchy", {"N": n, "M": m, "a": av, "b": bv}, lhs, rhs, start)


def verify_q_binet_cauchy(n: int, m: int) -> IdentityReport:
    """The box pairing at the adjacent principal points q^(0..n-1), q^(1..n)."""
    inner = verify_binet_cauchy(n, m, tuple(range(n)), tuple(range(1, n + 1)))
    return IdentityReport(
        identity="q-binet-cauchy",
        params={"N": n, "M": m},
        lhs=inner.lhs,
        rhs=inner.rhs,
        equal=inner.equal,
        elapsed_ms=inner.elapsed_ms,
    )


def verify_kuperberg(n: int, m: int) -> IdentityReport:
    """Normalized geometric determinant against the box product.

    LHS is det(sum_{t<m+n} q^{t(j+k-1)}) divided by the Vandermondes of
    the exponent points (1..n) and (0..n-1); RHS is the literal double
    product over j, k <= n of (1 - q^{m+j+k-1}) / (1 - q^{j+k-1}).
    """
    start = time.perf_counter()
    entries = [[geometric_sum(j + k - 1, m + n) for k in range(1, n + 1)]
               for j in range(1, n + 1)]
    det = det_fraction_free(PolyMatrix(entries))
    norm = vandermonde(tuple(range(1, n + 1))) * vandermonde(tuple(range(n)))
    lhs = det.exact_div(norm)
    one = LaurentPoly.one()
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            num = num * (one - LaurentPoly.q_power(m + j + k - 1))
            den = den * (one - LaurentPoly.q_power(j + k - 1))
    rhs = num.exact_div(den)
    return _report("kuperberg", {"N": n, "M": m}, lhs, rhs, start)


def verify_qbinomial_det(n: int, m: int) -> IdentityReport:
    """Schur pairing at adjacent principal points against an m x m q-binomial determinant.

    RHS is q^(nm(1-m)/2) det([2n+i-1 choose n+j-1]) with i, j running to m.
    The prefactor exponent is recorded in the params.
    """
    start = time.perf_counter()
    av = tuple(range(1, n + 1))
    bv = tuple(range(n))
    lhs = LaurentPoly.zero()
    for lam in enumerate_in_box(n, m):
        lhs = lhs + bialternant(lam, av) * bialternant(lam, bv)
    entries = [[qbinomial(2 * n + i - 1, n + j - 1) for j in range(1, m + 1)]
               for i in range(1, m + 1)]
    prefactor = n * m * (1 - m) // 2
    rhs = det_fraction_free(PolyMatrix(entries)).shift(prefactor)
    return _report(
        "q-binomial-det",
        {"N": n, "M": m, "prefactor_exponent": prefactor},
        lhs, rhs, start)


def verify_deviation_binet_cauchy(n: int, m: int, k: int,
                                  a: Sequence[int], b: Sequence[int]) -> IdentityReport:
    """Box pairing with k vanished variables against the confluent determinant.

    The sum runs over lam inside the m**(n-k) box, pairing S_lam in the
    n - k surviving x-variables with S_lam in all n y-variables.  The
    determinant replaces the k collapsed rows by the monomial rows
    (q^{b_j s})_j for s = 0..k-1, placed first; the remaining rows keep
    the geometric entries.  A prefactor q^(-k sum(a)) restores the scale.
    At k = 0 this is verify_binet_cauchy unchanged.
    """
    start = time.perf_counter()
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    lines = n - k
    av = _checked_point(a, lines, "a")
    bv = _checked_point(b, n, "b")
    lhs = LaurentPoly.zero()
    for lam in enumerate_in_box(lines, m):
        lhs = lhs + bialternant(lam, av) * bialternant(lam, bv)
    rows = [[LaurentPoly.q_power(y * s) for y in bv] for s in range(k)]
    rows += [[geometric_sum(x + y, m + n) for y in bv] for x in av]
    det = det_fraction_free(PolyMatrix(rows))
    rhs = det.exact_div(vandermonde(av) * vandermonde(bv)).shift(-k * sum(av))
    return _report(
        "deviation-binet-cauchy",
        {"N": n, "M": m, "k": k, "a": av, "b": bv},
        lhs, rhs, start)


def verify_watermelon_suite(n: int, m: int, k: int) -> list[IdentityReport]:
    """Five cross-checks of the watermelon partition function at one (n, m, k).

    Direct enumeration against the interface Schur sum and the closed
    product; the closed product against both determinant forms and the
    rectangle-shape specialization.  The specialization report measures
    the level-reading offset on every enumerated watermelon, requires it
    constant, and records it in the params.
    """
    lines = n - k
    reports = []

    start = time.perf_counter()
    enum = watermelon_genfunc(n, m, k)
    schur_sum = LaurentPoly.zero()
    c_point = tuple(range(lines))
    b_point = tuple(range(n))
    for lam in enumerate_in_box(lines, m):
        term = bialternant(lam, c_point) * bialternant(lam, b_point)
        schur_sum = schur_sum + term.shift(weight(lam))
    reports.append(_report(
        "watermelon-enum-vs-schur-sum", {"N": n, "M": m, "k": k},
        enum, schur_sum, start))

    start = time.perf_counter()
    enum = watermelon_genfunc(n, m, k)
    product = closed_genfunc(n, lines, m)
    reports.append(_report(
        "watermelon-enum-vs-product", {"N": n, "M": m, "k": k},
        enum, product, start))

    start = time.perf_counter()
    product = closed_genfunc(n, lines, m)
    reports.append(_report(
        "watermelon-product-vs-qbinom-det", {"N": n, "M": m, "k": k},
        product, genfunc_det_forms(n, lines, m, form=1), start))

    start = time.perf_counter()
    product = closed_genfunc(n, lines, m)
    reports.append(_report(
        "watermelon-product-vs-h-det", {"N": n, "M": m, "k": k},
        product, genfunc_det_forms(n, lines, m, form=2), start))

    start = time.perf_counter()
    offsets = set()
    for w in enumerate_watermelons(n, m, k):
        steps = horizontal_reading(w)
        offsets.add(sum(j * s for j, s in enumerate(steps)) - w.volume)
    if len(offsets) != 1:
        raise RuntimeError(
            f"level-reading offset is not constant on ({n}, {m}, {k}): {sorted(offsets)}")
    offset = offsets.pop()
    product = closed_genfunc(n, lines, m)
    rect = (lines,) * n
    spec = principal_product(rect, n + m).shift(-offset)
    reports.append(_report(
        "watermelon-product-vs-specialization",
        {"N": n, "M": m, "k": k, "offset": offset},
        product, spec, start))

    return reports


def verify_gessel_viennot(lam: Sequence[int], n: int) -> IdentityReport:
    """Binomial determinant against the tableau count and the Schur value at 1.

    All three integers must agree; the polynomials in the report are the
    constant embeddings of the determinant and the tableau count, and the
    Schur value is recorded in the params.
    """
    start = time.perf_counter()
    shape = strip(tuple(int(v) for v in lam))
    det = gv_count(shape, n)
    nests = count_ssyt(shape, n)
    schur_at_one = bialternant(shape, tuple(range(n))).eval_at_one()
    lhs = LaurentPoly.const(det)
    rhs = LaurentPoly.const(nests)
    report = _report(
        "gessel-viennot",
        {"lambda": shape, "N": n, "schur_at_one": schur_at_one},
        lhs, rhs, start)
    if report.equal and det != schur_at_one:
        report = IdentityReport(
            identity=report.identity, params=report.params,
            lhs=report.lhs, rhs=report.rhs, equal=False,
            elapsed_ms=report.elapsed_ms)
    return report


def verify_zq_equals_w(n: int, l: int, m: int) -> IdentityReport:
    """Boxed plane partition generating function against the watermelon one."""
    from .planepartitions import zq

    start = time.perf_counter()
    if l > n:
        raise ValueError("need l <= n so the deviation k = n - l is nonnegative")
    lhs = zq(n, l, m)
    rhs = watermelon_genfunc(n, m, n - l)
    return _report("zq-equals-w", {"N": n, "L": l, "M": m}, lhs, rhs, start)


# Fixed generic exponent points for the determinant identities, per size.
# Chosen small, pairwise distinct within each tuple, with a_k + b_j never 0;
# one pair per size exercises negative exponents.
GOLDEN_POINTS: dict[int, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]] = {
    1: (((1,), (1,)), ((0,), (2,)), ((-2,), (3,))),
    2: (((0, 1), (1, 2)), ((0, 3), (1, 5)), ((-1, 2), (3, 4))),
    3: (((0, 1, 2), (1, 2, 3)), ((0, 2, 5), (1, 3, 4)), ((-1, 1, 4), (2, 3, 7))),
}


def random_points(n: int, seed: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Seeded generic exponent pair for fuzzing: distinct entries, no zero sums."""
    rng = random.Random(seed)
    while True:
        a = tuple(rng.sample(range(-3, 7), n))
        b = tuple(rng.sample(range(1, 10), n))
        if all(x + y != 0 for x in a for y in b):
            return a, b


_CASE_FUNCS = {
    "binet-cauchy": verify_binet_cauchy,
    "q-binet-cauchy": verify_q_binet_cauchy,
    "kuperberg": verify_kuperberg,
    "q-binomial-det": verify_qbinomial_det,
    "deviation-binet-cauchy": verify_deviation_binet_cauchy,
    "watermelon-suite": verify_watermelon_suite,
    "gessel-viennot": verify_gessel_viennot,
    "zq-equals-w": verify_zq_equals_w,
}

Case = tuple[str, dict]


def _dispatch(case: Case) -> list[IdentityReport]:
    name, kwargs = case
    result = _CASE_FUNCS[name](**kwargs)
    return result if isinstance(result, list) else [result]


def run_cases(cases: Sequence[Case], workers: int | None = None) -> list[IdentityReport]:
    """Run verification cases, one report list per case, input order preserved.

    With workers > 1 the cases go through a process pool; results are
    merged in submission order, so the output is identical either way.
    """
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            groups = list(pool.map(_dispatch, cases))
    else:
        groups = [_dispatch(case) for case in cases]
    out: list[IdentityReport] = []
    for group in groups:
        out.extend(group)
    return out
