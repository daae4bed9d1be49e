import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmelon.laurent import LaurentPoly
from qmelon.qanalogs import h_complete, pascal_check, qbinomial, qfactorial, qint


def h_oracle(r: int, m: int) -> LaurentPoly:
    """Sum q**(e1+...+er) over weakly increasing exponent tuples below m."""
    terms: dict[int, int] = {}
    for combo in itertools.combinations_with_replacement(range(m), r):
        e = sum(combo)
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(terms)


def qbinomial_oracle(big: int, small: int) -> LaurentPoly:
    """Pascal-triangle oracle built from scratch."""
    row = [LaurentPoly.one()]
    for n in range(1, big + 1):
        new = [LaurentPoly.one()]
        for k in range(1, n):
            new.append(row[k - 1] + row[k].shift(k))
        new.append(LaurentPoly.one())
        row = new
    if small < 0 or small > big:
        return LaurentPoly.zero()
    return row[small]


def test_qint_values():
    assert qint(0).is_zero()
    assert qint(1) == LaurentPoly.one()
    assert qint(4) == LaurentPoly({0: 1, 1: 1, 2: 1, 3: 1})
    with pytest.raises(ValueError):
        qint(-1)


def test_qfactorial_values():
    assert qfactorial(0) == LaurentPoly.one()
    assert qfactorial(2) == LaurentPoly({0: 1, 1: 1})
    # [3]! = (1+q)(1+q+q^2) = 1+2q+2q^2+q^3
    assert qfactorial(3) == LaurentPoly({0: 1, 1: 2, 2: 2, 3: 1})


def test_qbinomial_frozen_values():
    assert qbinomial(2, 1) == LaurentPoly({0: 1, 1: 1})
    # [4 choose 2] = 1+q+2q^2+q^3+q^4
    assert qbinomial(4, 2) == LaurentPoly({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert qbinomial(5, 0) == LaurentPoly.one()
    assert qbinomial(5, 5) == LaurentPoly.one()
    assert qbinomial(3, 4).is_zero()
    assert qbinomial(3, -1).is_zero()
    with pytest.raises(ValueError):
        qbinomial(-1, 0)


@pytest.mark.parametrize("big", range(0, 13))
def test_qbinomial_against_pascal_oracle(big):
    for small in range(-1, big + 2):
        assert qbinomial(big, small) == qbinomial_oracle(big, small)


@pytest.mark.parametrize("big", range(1, 13))
def test_pascal_recurrence(big):
    for small in range(0, big + 1):
        assert pascal_check(big, small)


@pytest.mark.parametrize("big", range(0, 13))
def test_symmetry_and_palindromicity(big):
    for small in range(0, big + 1):
        p = qbinomial(big, small)
        assert p == qbinomial(big, big - small)
        terms = dict(p.terms())
        deg = small * (big - small)
        assert all(terms.get(e, 0) == terms.get(deg - e, 0) for e in range(deg + 1))


def test_qbinomial_counts_at_one():
    import math
    for big in range(0, 10):
        for small in range(0, big + 1):
            assert qbinomial(big, small).eval_at_one() == math.comb(big, small)


@given(st.integers(min_value=0, max_value=7), st.integers(min_value=1, max_value=5))
def test_h_complete_matches_enumeration(r, m):
    assert h_complete(r, m) == h_oracle(r, m)


def test_h_complete_edges():
    assert h_complete(-2, 3).is_zero()
    assert h_complete(0, 3) == LaurentPoly.one()
    with pytest.raises(ValueError):
        h_complete(1, 0)
