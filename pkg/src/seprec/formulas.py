"""Closed forms for the sep statistic totals, their rational and exponential
generating-series expansions, and exact partial fraction tables.

Four independent routes compute the total of sep over partitions of [n] with
k blocks and must agree exactly:

* brute-force enumeration (:mod:`seprec.oracle`),
* the q-derivative of the distribution series (:mod:`seprec.series`),
* the closed form :func:`total_sep_nk` in Stirling numbers,
* the rational-series expansion :func:`rational_series_totals`.

The Bell-number form :func:`total_sep_n` covers all partitions of [n] at
once; :func:`egf_coeffs` reproduces it through the exponential generating
series.  The partial fraction table has both a closed form
(:func:`pfd_coeffs`) and an exact residue oracle (:func:`pfd_oracle`).

All rational arithmetic uses ``fractions.Fraction``; nothing here touches
floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .counting import bell, stirling2


def _record_offset_total(k: int) -> int:
    """Sum over a = 1..k of a(a-1)/2, the statistic offset contributed by the
    record letters themselves (equals C(k+1, 3))."""
    return k * (k + 1) * (k - 1) // 6


def total_sep_nk(n: int, k: int) -> int:
    """Total of sep over all partitions of [n] with exactly ``k`` blocks:

        S(n,k) * sum_{a=1..k} a(a-1)/2
        + sum_{i=1..k-1} (k-i)i(i+1)/2 * sum_{j=1..n-k} S(n-j,k) i^(j-1)

    Both inner sums are empty when they have no terms (k = 1 or n = k).

    >>> total_sep_nk(3, 2)
    4
    >>> total_sep_nk(4, 3)
    29
    >>> total_sep_nk(7, 1)
    0
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = stirling2(n, k) * _record_offset_total(k)
    for i in range(1, k):
        geom = 0
        ipow = 1
        for j in range(1, n - k + 1):
            geom += stirling2(n - j, k) * ipow
            ipow *= i
        total += (k - i) * i * (i + 1) // 2 * geom
    return total


def total_sep_n(n: int) -> int:
    """Total of sep over all set partitions of [n], in Bell numbers:

        (1/3) B_{n+3} - (1/4) B_{n+2} - (n/2 + 13/12) B_{n+1} - (n/2 + 1/12) B_n

    Evaluated in exact rationals and asserted integral before returning.

    >>> [total_sep_n(n) for n in range(1, 5)]
    [0, 1, 8, 50]
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = (
        Fraction(bell(n + 3), 3)
        - Fraction(bell(n + 2), 4)
        - (Fraction(n, 2) + Fraction(13, 12)) * bell(n + 1)
        - (Fraction(n, 2) + Fraction(1, 12)) * bell(n)
    )
    if total.denominator != 1:
        raise ArithmeticError(f"Bell-number total for n={n} is not an integer: {total}")
    return total.numerator


def _int_series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j, bj in enumerate(b[: order + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _int_geom(i: int, order: int) -> list[int]:
    """Coefficients of 1/(1 - i*x): [1, i, i^2, ...]."""
    out = [1]
    for _ in range(order):
        out.append(out[-1] * i)
    return out


def rational_series_totals(k: int, order: int) -> list[int]:
    """Totals of sep over partitions of [n] with exactly ``k`` blocks for
    n = 0..order, by expanding the rational form

        x^k / ((1-x)...(1-kx)) * sum_{a=1..k} a(a-1)/2
        + x^(k+1) / ((1-x)...(1-kx)) * sum_{i=1..k-1} (k-i)i(i+1) / (2(1-ix))

    as a power series in x.  This route uses no Stirling table and no
    q-polynomials, so it is independent of both :func:`total_sep_nk` and
    :func:`seprec.series.sep_totals_by_length`.

    >>> rational_series_totals(2, 4)
    [0, 0, 1, 4, 11]
    """
    if not 1 <= k <= order:
        raise ValueError(f"need 1 <= k <= order, got k={k}, order={order}")
    base = [1]
    for i in range(1, k + 1):
        base = _int_series_mul(base, _int_geom(i, order), order)
    weighted = [0] * (order + 1)
    for i in range(1, k):
        c = (k - i) * i * (i + 1) // 2
        for m, g in enumerate(_int_geom(i, order)):
            weighted[m] += c * g
    tail = _int_series_mul(base, weighted, order)
    c0 = _record_offset_total(k)
    out = [0] * (order + 1)
    for n in range(k, order + 1):
        out[n] = c0 * base[n - k]
        if n >= k + 1:
            out[n] += tail[n - k - 1]
    return out


@dataclass(frozen=True)
class PfdCoefficients:
    """Exact partial fraction table for a fixed block count ``k``:
    the double-pole coefficients ``a[m-1]`` and simple-pole coefficients
    ``b[m-1]`` at y = m, for m = 1..k."""

    k: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def row(self, m: int) -> tuple[Fraction, Fraction]:
        if not 1 <= m <= self.k:
            raise ValueError(f"need 1 <= m <= {self.k}, got {m}")
        return self.a[m - 1], self.b[m - 1]


def pfd_target_value(k: int, y: Fraction) -> Fraction:
    """The rational function whose partial fractions are tabulated:

        F_k(y) = (sum_{a=1..k} a(a-1)/2 + sum_{i=1..k} (k-i)i(i+1)/(2(y-i)))
                 * prod_{i=1..k} 1/(y-i)

    ``y`` must avoid the poles 1..k.

    >>> pfd_target_value(2, Fraction(3))
    Fraction(3, 4)
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    y = Fraction(y)
    if y.denominator == 1 and 1 <= y.numerator <= k:
        raise ValueError(f"y = {y} is a pole")
    s = Fraction(_record_offset_total(k))
    p = Fraction(1)
    for i in range(1, k + 1):
        s += Fraction((k - i) * i * (i + 1), 2) / (y - i)
        p /= y - i
    return s * p


def pfd_value(coeffs: PfdCoefficients, y: Fraction) -> Fraction:
    """Evaluate the decomposition sum_m (a_m/(y-m)^2 + b_m/(y-m)) exactly."""
    y = Fraction(y)
    total = Fraction(0)
    for m in range(1, coeffs.k + 1):
        am, bm = coeffs.row(m)
        total += am / (y - m) ** 2 + bm / (y - m)
    return total


def pfd_coeffs(k: int, literal: bool = False) -> PfdCoefficients:
    """Closed-form partial fraction coefficients for block count ``k``:

        a_{k,m} = (-1)^(k-m) (k-m) m (m+1) / (2 (m-1)! (k-m)!)
        b_{k,m} = (-1)^(k-m) (-k^3/12 - k^2(m+1)/4 + k(6m^2+21m+10)/12
                   - 3m^2/2 - m + sum_{i=1..k} i(i-1)/2) / ((m-1)! (k-m)!)

    ``literal=True`` flips the cubic term to +k^3/12, a variant that fails the
    residue oracle for every k and is kept only for comparison (see the README
    section on formula variants).

    >>> pfd_coeffs(2).a
    (Fraction(-1, 1), Fraction(0, 1))
    >>> pfd_coeffs(2).b
    (Fraction(-2, 1), Fraction(2, 1))
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    cubic_sign = 1 if literal else -1
    offset = _record_offset_total(k)
    a_row = []
    b_row = []
    for m in range(1, k + 1):
        sign = -1 if (k - m) % 2 else 1
        denom = factorial(m - 1) * factorial(k - m)
        a_row.append(Fraction(sign * (k - m) * m * (m + 1), 2 * denom))
        numer = (
            Fraction(cubic_sign * k**3, 12)
            - Fraction(k**2 * (m + 1), 4)
            + Fraction(k * (6 * m * m + 21 * m + 10), 12)
            - Fraction(3 * m * m, 2)
            - m
            + offset
        )
        b_row.append(Fraction(sign, denom) * numer)
    return PfdCoefficients(k, tuple(a_row), tuple(b_row))


def pfd_oracle(k: int) -> PfdCoefficients:
    """Partial fraction coefficients by exact residue computation, independent
    of the closed form.

    Writing (y-m)^2 F_k(y) = A(y)/B(y) with the pole at m cancelled
    symbolically, A and B are regular at y = m and

        a_{k,m} = A(m)/B(m),
        b_{k,m} = A'(m)/B(m) - A(m) B'(m)/B(m)^2.

    Here A(y) = (y-m) * (numerator sum of F_k) stays polynomial-free of the
    pole because the i = m summand contributes the constant (k-m)m(m+1)/2,
    and B(y) = prod_{i != m} (y-i).

    >>> pfd_oracle(2) == pfd_coeffs(2)
    True
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    offset = _record_offset_total(k)
    a_row = []
    b_row = []
    for m in range(1, k + 1):
        a_at_m = Fraction((k - m) * m * (m + 1), 2)
        # A'(m) = offset + sum_{i != m} (k-i)i(i+1)/(2(m-i))
        a_deriv = Fraction(offset)
        b_at_m = Fraction(1)
        b_log_deriv = Fraction(0)  # B'(m)/B(m) = sum_{i != m} 1/(m-i)
        for i in range(1, k + 1):
            if i == m:
                continue
            a_deriv += Fraction((k - i) * i * (i + 1), 2 * (m - i))
            b_at_m *= m - i
            b_log_deriv += Fraction(1, m - i)
        a_row.append(a_at_m / b_at_m)
        b_row.append(a_deriv / b_at_m - a_at_m * b_log_deriv / b_at_m)
    return PfdCoefficients(k, tuple(a_row), tuple(b_row))


def pfd_golden_lines(max_k: int) -> list[str]:
    """Frozen-format lines ``k m a_num a_den b_num b_den`` from the residue
    oracle, for 1 <= m <= k <= max_k."""
    lines = []
    for k in range(1, max_k + 1):
        table = pfd_oracle(k)
        for m in range(1, k + 1):
            am, bm = table.row(m)
            lines.append(
                f"{k} {m} {am.numerator} {am.denominator} {bm.numerator} {bm.denominator}"
            )
    return lines


def _exp_series(m: int, order: int) -> list[Fraction]:
    """Coefficients of e^(m*x): m^n / n!."""
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * Fraction(m, n))
    return out


def _frac_series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j, bj in enumerate(b[: order + 1 - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _shift_x(a: list[Fraction], order: int) -> list[Fraction]:
    """Multiply a series by x, truncating at ``order``."""
    return ([Fraction(0)] + a)[: order + 1]


def bell_egf(order: int) -> list[Fraction]:
    """Coefficients of the Bell-number exponential generating series
    e^(e^x - 1): B_n / n! for n = 0..order."""
    return [Fraction(bell(n), factorial(n)) for n in range(order + 1)]


def egf_coeffs(order: int) -> list[Fraction]:
    """Coefficients e_n of the exponential generating series of the sep totals:

        e^(e^x - 1) * ((1/3)e^(3x) - (1/2)x e^(2x) + (3/4)e^(2x)
                       - x e^x - e^x - 1/12)

    so that n! * e_n = total_sep_n(n) for every n (and e_0 = 0: the constant
    terms cancel, 1/3 + 3/4 - 1 - 1/12 = 0).

    >>> [c * factorial(n) for n, c in enumerate(egf_coeffs(4))]
    [Fraction(0, 1), Fraction(0, 1), Fraction(1, 1), Fraction(8, 1), Fraction(50, 1)]
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    e1 = _exp_series(1, order)
    e2 = _exp_series(2, order)
    e3 = _exp_series(3, order)
    combo = [Fraction(0)] * (order + 1)
    for n in range(order + 1):
        combo[n] = e3[n] / 3 + 3 * e2[n] / 4 - e1[n]
    for n, v in enumerate(_shift_x(e2, order)):
        combo[n] -= v / 2
    for n, v in enumerate(_shift_x(e1, order)):
        combo[n] -= v
    combo[0] -= Fraction(1, 12)
    return _frac_series_mul(bell_egf(order), combo, order)


def bell_shift_identities_check(order: int) -> dict[str, bool]:
    """Exact coefficient checks, for n = 0..order, of the shift identities for
    E = e^(e^x - 1) = sum B_n x^n / n!:

        e^x E      -> B_{n+1}
        e^(2x) E   -> B_{n+2} - B_{n+1}
        e^(3x) E   -> B_{n+3} - 3 B_{n+2} + 2 B_{n+1}
        x e^x E    -> n B_n
        x e^(2x) E -> n (B_{n+1} - B_n)

    (each right-hand side divided by n!).  Returns {identity name: bool}.
    """
    if order < 1:
        raise ValueError(f"need order >= 1, got {order}")
    E = bell_egf(order)
    e1 = _exp_series(1, order)
    e2 = _exp_series(2, order)
    e3 = _exp_series(3, order)

    def expected(values) -> list[Fraction]:
        return [Fraction(v, factorial(n)) for n, v in enumerate(values)]

    ns = range(order + 1)
    checks = {
        "exp_x": (
            _frac_series_mul(e1, E, order),
            expected(bell(n + 1) for n in ns),
        ),
        "exp_2x": (
            _frac_series_mul(e2, E, order),
            expected(bell(n + 2) - bell(n + 1) for n in ns),
        ),
        "exp_3x": (
            _frac_series_mul(e3, E, order),
            expected(bell(n + 3) - 3 * bell(n + 2) + 2 * bell(n + 1) for n in ns),
        ),
        "x_exp_x": (
            _shift_x(_frac_series_mul(e1, E, order), order),
            expected(n * bell(n) for n in ns),
        ),
        "x_exp_2x": (
            _shift_x(_frac_series_mul(e2, E, order), order),
            expected(n * (bell(n + 1) - bell(n)) for n in ns),
        ),
    }
    return {name: got == want for name, (got, want) in checks.items()}
