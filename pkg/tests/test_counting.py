from fractions import Fraction
from math import comb, factorial

import pytest

from seprec.counting import bell, binomial, stirling2


def stirling2_explicit(n: int, k: int) -> int:
    """Independent route: S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n."""
    if k == 0:
        return 1 if n == 0 else 0
    total = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
    value = Fraction(total, factorial(k))
    assert value.denominator == 1
    return value.numerator


def bell_binomial_recurrence(nmax: int) -> list[int]:
    """Independent route: B_{n+1} = sum_k C(n,k) B_k."""
    out = [1]
    for n in range(nmax):
        out.append(sum(comb(n, k) * out[k] for k in range(n + 1)))
    return out


def test_binomial_values():
    assert binomial(5, 0) == 1
    assert binomial(4, 2) == 6
    assert binomial(6, 3) == 20
    assert binomial(3, 7) == 0


def test_binomial_rejects_negatives():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


def test_stirling_values():
    assert stirling2(3, 3) == 1
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(2, 6) == 0


def test_stirling_rejects_negatives():
    with pytest.raises(ValueError):
        stirling2(-1, 1)
    with pytest.raises(ValueError):
        stirling2(1, -1)


def test_stirling_matches_explicit_formula():
    for n in range(26):
        for k in range(n + 1):
            assert stirling2(n, k) == stirling2_explicit(n, k)


def test_stirling_boundary_rows():
    for n in range(1, 30):
        assert stirling2(n, 1) == 1
        assert stirling2(n, n) == 1


def test_bell_values():
    assert bell(0) == 1
    assert bell(3) == 5
    assert bell(5) == 52
    assert bell(12) == 4213597


def test_bell_rejects_negative():
    with pytest.raises(ValueError):
        bell(-1)


def test_bell_equals_binomial_recurrence():
    want = bell_binomial_recurrence(40)
    for n in range(41):
        assert bell(n) == want[n]


def test_stirling_rows_sum_to_bell():
    for n in range(26):
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)


def test_bell_count_matches_enumeration():
    from seprec.setpart import iterate_all

    for n in range(1, 8):
        assert bell(n) == sum(1 for _ in iterate_all(n))
