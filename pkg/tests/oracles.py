"""Independent oracles used by the tests.

Everything here is deliberately written against plain Fractions and lists,
not against the library's own polynomial/series machinery, so that a test
comparing library output to an oracle value really is a dual-route check.
"""

import math
from fractions import Fraction


def poly_divmod(num, den):
    """Long division of coefficient lists (lowest degree first) over Q."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while den and not den[-1]:
        den.pop()
    if not den:
        raise ZeroDivisionError
    dq = len(num) - len(den)
    if dq < 0:
        return [], num
    quot = [Fraction(0)] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        quot[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    while num and not num[-1]:
        num.pop()
    return quot, num


def classic_stirling2(n_max):
    """Classical second-kind Stirling triangle by its recurrence."""
    table = {(0, 0): 1}
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            table[(n, k)] = k * table.get((n - 1, k), 0) + table.get((n - 1, k - 1), 0)
    return table


def classic_stirling1(n_max):
    """Classical signed first-kind Stirling triangle by its recurrence."""
    table = {(0, 0): 1}
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            table[(n, k)] = table.get((n - 1, k - 1), 0) - (n - 1) * table.get((n - 1, k), 0)
    return table


def bernoulli_numbers(n_max):
    """Classical Bernoulli numbers (B_1 = -1/2 flavour) by inverting the
    series sum_k t^k/(k+1)! with plain Fraction lists."""
    a = [Fraction(1, math.factorial(k + 1)) for k in range(n_max + 1)]
    b = [Fraction(0)] * (n_max + 1)
    b[0] = Fraction(1)
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for i in range(n):
            acc += b[i] * a[n - i]
        b[n] = -acc
    return [b[n] * math.factorial(n) for n in range(n_max + 1)]


def series_product_coeff(f_coeffs, g_coeffs, m):
    """Coefficient m of the product of two coefficient lists, provided every
    contributing index is available."""
    acc = None
    for i in range(m + 1):
        if i >= len(f_coeffs) or m - i >= len(g_coeffs):
            continue
        term = f_coeffs[i] * g_coeffs[m - i]
        acc = term if acc is None else acc + term
    return acc
