"""Exact truncated power series in x whose coefficients are integer polynomials in q.

The series here expand the bivariate counting functions for partitions of [n]
with k blocks: x marks the word length n and q marks the statistic value, so
the coefficient of x^n q^s is a count.  Everything is integer arithmetic on
dense coefficient lists; truncation order is fixed per series and preserved by
the ring operations.
"""
from __future__ import annotations

from typing import Iterable


class QPoly:
    """Polynomial in q with integer coefficients, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPoly":
        """coeff * q**power"""
        if power < 0:
            raise ValueError(f"power must be nonnegative, got {power}")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def at_one(self) -> int:
        """Value at q = 1 (the plain count)."""
        return sum(self.coeffs)

    def deriv_at_one(self) -> int:
        """d/dq at q = 1: sum of s * c_s, the total statistic weight."""
        return sum(s * c for s, c in enumerate(self.coeffs))

    def to_dict(self) -> dict[int, int]:
        """Nonzero coefficients as {power: coefficient}."""
        return {s: c for s, c in enumerate(self.coeffs) if c}

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"


def format_qpoly(p: QPoly) -> str:
    """Deterministic text form: nonzero terms ``c*q^s`` ascending in s, or ``0``."""
    if not p:
        return "0"
    return " + ".join(f"{c}*q^{s}" for s, c in enumerate(p.coeffs) if c)


class XSeries:
    """Power series in x truncated at a fixed order, with QPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[QPoly] = ()):
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        cs = list(coeffs)
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients exceed truncation order {order}")
        cs.extend(QPoly.zero() for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "XSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "XSeries":
        return cls(order, (QPoly.one(),))

    @classmethod
    def monomial(cls, order: int, xpower: int, qpower: int = 0, coeff: int = 1) -> "XSeries":
        """coeff * q**qpower * x**xpower, truncated at ``order``."""
        if not 0 <= xpower <= order:
            raise ValueError(f"x power {xpower} outside truncation order {order}")
        cs = [QPoly.zero()] * xpower + [QPoly.monomial(qpower, coeff)]
        return cls(order, cs)

    def coefficient(self, n: int) -> QPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"x power {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, XSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _check_order(self, other: "XSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} != {other.order}")

    def __add__(self, other: "XSeries") -> "XSeries":
        self._check_order(other)
        return XSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "XSeries") -> "XSeries":
        self._check_order(other)
        n = self.order
        out = [QPoly.zero()] * (n + 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j in range(n + 1 - i):
                    bj = other.coeffs[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return XSeries(n, out)

    def geom_inverse(self) -> "XSeries":
        """1 / (1 - self), requiring a zero constant term.

        >>> x = XSeries.monomial(3, 1)
        >>> [g.to_dict() for g in x.geom_inverse().coeffs]
        [{0: 1}, {0: 1}, {0: 1}, {0: 1}]
        """
        if self.coeffs[0]:
            raise ValueError("geometric inverse needs a zero constant term")
        n = self.order
        g: list[QPoly] = [QPoly.one()]
        for m in range(1, n + 1):
            acc = QPoly.zero()
            for i in range(1, m + 1):
                fi = self.coeffs[i]
                if fi:
                    acc = acc + fi * g[m - i]
            g.append(acc)
        return XSeries(n, g)

    def __repr__(self) -> str:
        return f"XSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def format_series(series: XSeries) -> str:
    """One line per x power: ``n: c*q^s + ...`` with deterministic ordering."""
    return "\n".join(f"{n}: {format_qpoly(c)}" for n, c in enumerate(series.coeffs))


def word_sum_factor(j: int, order: int) -> XSeries:
    """Series of all words over the alphabet [j], x marking length and q
    marking the sum of the letters: 1 / (1 - x*(q + q^2 + ... + q^j)).
    """
    if j < 1:
        raise ValueError(f"alphabet size must be positive, got {j}")
    letter = QPoly((0,) + (1,) * j)
    return XSeries(order, (QPoly.zero(), letter)).geom_inverse()


def word_count_factor(i: int, order: int) -> XSeries:
    """Series of all words over the alphabet [i] counted by length only:
    1 / (1 - i*x).
    """
    if i < 1:
        raise ValueError(f"alphabet size must be positive, got {i}")
    return XSeries(order, (QPoly.zero(), QPoly((i,)))).geom_inverse()


def distribution_series(k: int, a: int, order: int, literal: bool = False) -> XSeries:
    """Series whose x^n q^s coefficient counts the partitions of [n] with
    exactly ``k`` blocks whose sum of elements preceding record ``a`` is s.

    A canonical word with k blocks factors around the first occurrences of
    1..k.  Letters before the first ``a`` contribute to the statistic: the
    records 1..a-1 add the fixed offset a(a-1)/2 and each free segment over
    [j] (j < a) is weighted by its letter sum.  Letters from the first ``a``
    on only contribute length, one count factor per alphabet [i], i = a..k.

    With ``literal=True`` the count factors are instead attached inside the
    weighted product, once per j with alphabet size frozen at ``a``.  That
    variant fails the brute-force distribution check and is kept only for
    comparison; see the README section on formula variants.
    """
    if not 1 <= a <= k <= order:
        raise ValueError(f"need 1 <= a <= k <= order, got a={a}, k={k}, order={order}")
    cur = XSeries.monomial(order, k, a * (a - 1) // 2)
    if literal:
        for j in range(1, a):
            cur = cur * word_sum_factor(j, order)
            for _ in range(a, k + 1):
                cur = cur * word_count_factor(a, order)
        return cur
    for i in range(a, k + 1):
        cur = cur * word_count_factor(i, order)
    for j in range(1, a):
        cur = cur * word_sum_factor(j, order)
    return cur


def sep_totals_by_length(k: int, order: int, literal: bool = False) -> list[int]:
    """Totals of the sep statistic over partitions of [n] with exactly ``k``
    blocks, for n = 0..order, read off the q-derivative at q = 1 of the
    distribution series summed over all records a.

    >>> sep_totals_by_length(2, 4)
    [0, 0, 1, 4, 11]
    """
    if not 1 <= k <= order:
        raise ValueError(f"need 1 <= k <= order, got k={k}, order={order}")
    totals = [0] * (order + 1)
    for a in range(1, k + 1):
        series = distribution_series(k, a, order, literal=literal)
        for n, c in enumerate(series.coeffs):
            totals[n] += c.deriv_at_one()
    return totals
