"""Deformed Stirling numbers of both kinds and their truncated variants.

The second-kind numbers are n! times the t^n coefficients of the k-th power
of the deformed exponential minus one, over k!; the first-kind numbers use
the deformed logarithm instead.  The truncated variants remove the first r
coefficients of the base series before powering, which pushes the valuation
of the k-th power up to k*r.

For the truncated second kind three independent routes are implemented:

* ``stirling2r_gf``           coefficient extraction from the power series,
* ``stirling2r_composition``  brute-force sum over compositions with parts >= r,
* ``stirling2r_binomial``     an alternating binomial multiple sum.

They must return identical canonical values; the tests and the ``verify``
command lean on that redundancy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import compositions
from .core import degen_exp, degen_log, int_falling, one_falling
from .errors import PrecisionExceeded
from .field import FieldElem, const
from .series import Series


def _pad(n: int) -> int:
    # round precision up so cached series are shared across nearby requests
    return n + (-n) % 8


@lru_cache(maxsize=None)
def _exp_block(r: int, precision: int, lam) -> Series:
    """Deformed exponential with every coefficient below t^r removed."""
    e = degen_exp(1, precision, lam)
    z = const(0, lam)
    return Series(tuple(z if k < r else e.coeffs[k] for k in range(precision + 1)))


@lru_cache(maxsize=None)
def _exp_block_pow(k: int, r: int, precision: int, lam) -> Series:
    return _exp_block(r, precision, lam) ** k


@lru_cache(maxsize=None)
def _exp_minus_one_pow(k: int, precision: int, lam) -> Series:
    return (degen_exp(1, precision, lam) - 1) ** k


@lru_cache(maxsize=None)
def _log_block(r: int, precision: int, lam) -> Series:
    g = degen_log(precision, lam)
    z = const(0, lam)
    return Series(tuple(z if 0 < k < r else g.coeffs[k] for k in range(precision + 1)))


@lru_cache(maxsize=None)
def _log_block_pow(k: int, r: int, precision: int, lam) -> Series:
    return _log_block(r, precision, lam) ** k


def _check_precision(n: int, N: int):
    if n > N:
        raise PrecisionExceeded("index %d exceeds requested precision %d" % (n, N))


def stirling2_degen(n: int, k: int, N=None, lam=None) -> FieldElem:
    """Second kind: n! [t^n] (e(t) - 1)^k / k!."""
    N = n if N is None else N
    _check_precision(n, N)
    ser = _exp_minus_one_pow(k, _pad(N), lam)
    return ser.coeff(n) * Fraction(math.factorial(n), math.factorial(k))


def stirling1_degen(n: int, k: int, N=None, lam=None) -> FieldElem:
    """First kind: n! [t^n] (log-series)^k / k!."""
    N = n if N is None else N
    _check_precision(n, N)
    ser = _log_block_pow(k, 1, _pad(N), lam)
    return ser.coeff(n) * Fraction(math.factorial(n), math.factorial(k))


def stirling2r_gf(n: int, k: int, r: int, N=None, lam=None) -> FieldElem:
    """Truncated second kind via the defining series (the power route)."""
    N = n if N is None else N
    _check_precision(n, N)
    ser = _exp_block_pow(k, r, _pad(N), lam)
    return ser.coeff(n) * Fraction(math.factorial(n), math.factorial(k))


def stirling1r_gf(n: int, k: int, r: int, N=None, lam=None) -> FieldElem:
    """Truncated first kind via the defining series."""
    N = n if N is None else N
    _check_precision(n, N)
    ser = _log_block_pow(k, r, _pad(N), lam)
    return ser.coeff(n) * Fraction(math.factorial(n), math.factorial(k))


def stirling2r_composition(n: int, k: int, r: int, lam=None) -> FieldElem:
    """Truncated second kind by brute-force enumeration of the compositions
    of n into k parts, every part at least r."""
    if k == 0:
        return const(1 if n == 0 else 0, lam)
    total = const(0, lam)
    n_fact = math.factorial(n)
    for comp in compositions(n, k, r):
        coef = Fraction(n_fact)
        for part in comp:
            coef /= math.factorial(part)
        term = const(coef, lam)
        for part in comp:
            term = term * one_falling(part, lam)
        total = total + term
    return total / math.factorial(k)


def stirling2r_binomial(n: int, k: int, r: int, lam=None) -> FieldElem:
    """Truncated second kind by the alternating binomial multiple sum.

    Tuples whose partial sum exceeds n contribute nothing (the descending
    product of the residual index would need a negative length) and are
    skipped.
    """
    import itertools

    total = const(0, lam)
    n_fact = math.factorial(n)
    for m in range(k + 1):
        inner = const(0, lam)
        for ls in itertools.product(range(r), repeat=m):
            residual = n - sum(ls)
            if residual < 0:
                continue
            coef = Fraction(n_fact, math.factorial(residual))
            term = int_falling(k - m, residual, lam)
            for l in ls:
                coef /= math.factorial(l)
                term = term * one_falling(l, lam)
            inner = inner + coef * term
        sign = -1 if m % 2 else 1
        total = total + (sign * math.comb(k, m)) * inner
    return total / math.factorial(k)


KIND_SECOND = "second-degenerate"
KIND_FIRST = "first-degenerate"
KIND_SECOND_TRUNCATED = "second-truncated"
KIND_FIRST_TRUNCATED = "first-truncated"

_KINDS = (KIND_SECOND, KIND_FIRST, KIND_SECOND_TRUNCATED, KIND_FIRST_TRUNCATED)


@dataclass(frozen=True)
class StirlingTriangle:
    """A computed block of Stirling-style numbers.

    ``entries`` maps (n, m) to the value, where m is the second index of the
    quantity itself: k for the plain kinds, k*r for the truncated kinds.
    Iteration order is n ascending then m ascending.
    """

    kind: str
    r: int
    n_max: int
    entries: dict

    def rows(self):
        for (n, m), value in self.entries.items():
            yield n, m, value

    def to_csv_lines(self):
        lines = ["n,k,value"]
        lines.extend("%d,%d,%s" % (n, m, value) for n, m, value in self.rows())
        return lines

    def to_json_rows(self):
        return [[n, m, str(value)] for n, m, value in self.rows()]


def build_triangle(kind: str, n_max: int, k_max=None, r: int = 1, lam=None,
                   N=None) -> StirlingTriangle:
    """Compute a triangle.  Plain kinds emit the classical region k <= n;
    truncated kinds emit every power up to k_max so the vanishing cells
    below the staircase (n < k*r) appear as explicit zeros."""
    if kind not in _KINDS:
        raise ValueError("unknown triangle kind %r" % (kind,))
    if kind in (KIND_SECOND, KIND_FIRST):
        r = 1
    k_max = n_max if k_max is None else k_max
    N = n_max if N is None else N
    truncated = kind in (KIND_SECOND_TRUNCATED, KIND_FIRST_TRUNCATED)
    entries = {}
    for n in range(n_max + 1):
        for k in range(k_max + 1 if truncated else min(k_max, n) + 1):
            if kind == KIND_SECOND:
                value = stirling2_degen(n, k, N, lam)
            elif kind == KIND_FIRST:
                value = stirling1_degen(n, k, N, lam)
            elif kind == KIND_SECOND_TRUNCATED:
                value = stirling2r_gf(n, k, r, N, lam)
            else:
                value = stirling1r_gf(n, k, r, N, lam)
            entries[(n, k * r)] = value
    return StirlingTriangle(kind=kind, r=r, n_max=n_max, entries=entries)
