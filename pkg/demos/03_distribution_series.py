#!/usr/bin/env python3
"""The distribution series: counting partitions by their sep_a value.

For fixed block count k and record value a, the series in x (marking length)
with q-polynomial coefficients (q marking the statistic) is a product of
closed factors: one monomial for the record letters, one letter-sum-weighted
geometric factor per alphabet below a, and one plain counting factor per
alphabet from a to k.  Expanding it must reproduce brute-force enumeration
coefficient by coefficient, and it does.
"""
from seprec import (
    brute_distribution_a,
    distribution_series,
    format_series,
    sep_totals_by_length,
    stirling2,
)

k, a, order = 3, 2, 6
xs = distribution_series(k, a, order)
print(f"series for k={k}, a={a} up to x^{order} (lines are 'n: count*q^statistic + ...'):")
print(format_series(xs))
print()

n = 5
print(f"x^{n} coefficient vs brute-force distribution over partitions of [{n}]:")
print(f"  series:      {xs.coefficient(n).to_dict()}")
print(f"  enumeration: {brute_distribution_a(n, k, a)}")
print()

print("setting q = 1 forgets the statistic and leaves the plain count:")
for a_ in range(1, k + 1):
    count = distribution_series(k, a_, n).coefficient(n).at_one()
    print(f"  a={a_}: {count} = S({n},{k}) = {stirling2(n, k)}")
print()

print("differentiating in q at q = 1 turns counts into totals; summing over")
print("all record values a gives the total of sep per length:")
totals = sep_totals_by_length(k, 8)
for n_, total in enumerate(totals):
    if total:
        print(f"  n={n_}: total sep over partitions with {k} blocks = {total}")
