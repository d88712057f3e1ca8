#!/usr/bin/env python3
"""Closed forms for the sep totals, checked four ways.

The total of sep over partitions of [n] with exactly k blocks has a closed
form in Stirling numbers; the total over all partitions of [n] has a closed
form in Bell numbers.  Both are validated here against brute-force
enumeration and against two independent series expansions.
"""
from seprec import (
    bell,
    brute_total,
    brute_total_nk,
    egf_coeffs,
    rational_series_totals,
    sep_totals_by_length,
    total_sep_n,
    total_sep_nk,
)
from math import factorial

print("per-(n, k) totals, four routes (enumeration / closed / rational / q-series):")
print(f"{'n':>3} {'k':>3} {'brute':>8} {'closed':>8} {'rational':>9} {'q-series':>9}")
for n in range(2, 8):
    for k in range(2, n + 1):
        routes = (
            brute_total_nk(n, k),
            total_sep_nk(n, k),
            rational_series_totals(k, n)[n],
            sep_totals_by_length(k, n)[n],
        )
        assert len(set(routes)) == 1
        print(f"{n:>3} {k:>3} {routes[0]:>8} {routes[1]:>8} {routes[2]:>9} {routes[3]:>9}")
print()

print("totals over all partitions of [n]: Bell-number closed form")
print("(1/3)B(n+3) - (1/4)B(n+2) - (n/2 + 13/12)B(n+1) - (n/2 + 1/12)B(n):")
for n in range(1, 11):
    closed = total_sep_n(n)
    brute = brute_total(n)
    assert closed == brute
    print(f"  n={n:2d}: total={closed:>9}  (B_{n} = {bell(n)})")
print()

print("the exponential generating series reproduces the same totals:")
coeffs = egf_coeffs(12)
for n in (3, 4, 8, 12):
    value = coeffs[n] * factorial(n)
    print(f"  n={n:2d}: n! * coefficient = {value} = {total_sep_n(n)}")
print()

print("and the totals keep growing fast (exact integers throughout):")
for n in (20, 30, 40):
    print(f"  n={n}: {total_sep_n(n)}")
