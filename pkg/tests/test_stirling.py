"""Stirling triangles: both kinds, truncation, and the three-route check."""

from fractions import Fraction as F

import pytest

from degenstir import (
    KIND_SECOND,
    KIND_SECOND_TRUNCATED,
    PrecisionExceeded,
    build_triangle,
    const,
    falling_factorial,
    gen_falling,
    lam_elem,
    stirling1_degen,
    stirling1r_gf,
    stirling2_degen,
    stirling2r_binomial,
    stirling2r_composition,
    stirling2r_gf,
)
from oracles import classic_stirling1, classic_stirling2

LAM = lam_elem()


def test_second_kind_examples():
    for k in range(6):
        assert stirling2_degen(k, k) == 1
    assert stirling2_degen(2, 1) == 1 - LAM
    with pytest.raises(PrecisionExceeded):
        stirling2_degen(5, 2, N=4)


def test_second_kind_classical_limit():
    table = classic_stirling2(12)
    for n in range(13):
        for k in range(n + 1):
            assert stirling2_degen(n, k, N=12, lam=F(0)) == table[(n, k)]


def test_first_kind_examples():
    for k in range(6):
        assert stirling1_degen(k, k) == 1
    assert stirling1_degen(2, 1) == LAM - 1


def test_first_kind_classical_limit():
    table = classic_stirling1(10)
    for n in range(11):
        for k in range(n + 1):
            assert stirling1_degen(n, k, N=10, lam=F(0)) == table[(n, k)]


def test_triangles_are_inverse_matrices():
    top = 10
    for n in range(top + 1):
        for m in range(top + 1):
            acc = const(0)
            for k in range(top + 1):
                acc = acc + stirling1_degen(n, k, N=top) * stirling2_degen(k, m, N=top)
            assert acc == (1 if n == m else 0)
            acc = const(0)
            for k in range(top + 1):
                acc = acc + stirling2_degen(n, k, N=top) * stirling1_degen(k, m, N=top)
            assert acc == (1 if n == m else 0)


def test_basis_change_identities():
    # second kind: the deformed product expands over plain falling factorials;
    # first kind: the mirror statement
    for n in range(9):
        for x in range(n + 1):
            xe = const(x)
            rhs = const(0)
            for k in range(n + 1):
                rhs = rhs + stirling2_degen(n, k, N=n) * falling_factorial(xe, k)
            assert gen_falling(xe, n) == rhs
            rhs = const(0)
            for k in range(n + 1):
                rhs = rhs + stirling1_degen(n, k, N=n) * gen_falling(xe, k)
            assert falling_factorial(xe, n) == rhs


def test_truncated_gf_examples():
    for n in range(9):
        for k in range(n + 1):
            assert stirling2r_gf(n, k, 1, N=n) == stirling2_degen(n, k, N=n)
    assert stirling2r_gf(3, 1, 2) == (1 - LAM) * (1 - 2 * LAM)
    assert stirling2r_gf(4, 2, 2) == 3 * (1 - LAM) ** 2


def test_truncated_vanishing_region_from_the_series_itself():
    for r in (1, 2, 3):
        for k in range(5):
            for n in range(k * r):
                assert stirling2r_gf(n, k, r, N=max(n, 1)) == 0


def test_composition_route_examples():
    for k in (1, 2, 3):
        for r in (1, 2, 3):
            if k * r - 1 >= 0:
                assert stirling2r_composition(k * r - 1, k, r) == 0
    assert stirling2r_composition(4, 2, 2) == 3 * (1 - LAM) ** 2
    for n in range(9):
        for k in range(9):
            assert stirling2r_composition(n, k, 1) == stirling2_degen(n, k, N=n)


def test_binomial_route_examples():
    assert stirling2r_binomial(1, 1, 2) == 0
    assert stirling2r_binomial(4, 2, 2) == 3 * (1 - LAM) ** 2
    assert stirling2r_binomial(2, 1, 2) == 1 - LAM


def test_three_routes_agree():
    for r in (1, 2, 3):
        for k in range(4):
            for n in range(9):
                a = stirling2r_gf(n, k, r, N=n)
                assert a == stirling2r_composition(n, k, r)
                assert a == stirling2r_binomial(n, k, r)


def test_first_kind_truncated():
    for n in range(9):
        for k in range(n + 1):
            assert stirling1r_gf(n, k, 1, N=n) == stirling1_degen(n, k, N=n)
    assert stirling1r_gf(2, 1, 2) == LAM - 1
    assert stirling1r_gf(1, 1, 2) == 0
    for k in (1, 2):
        for n in range(2 * k):
            assert stirling1r_gf(n, k, 2, N=max(n, 1)) == 0


def test_triangle_construction_and_serialization():
    tri = build_triangle(KIND_SECOND, 4, lam=F(0))
    lines = tri.to_csv_lines()
    assert lines[0] == "n,k,value"
    assert "4,2,7" in lines
    assert tri.entries[(3, 3)] == 1
    tri2 = build_triangle(KIND_SECOND_TRUNCATED, 6, k_max=2, r=2)
    assert tri2.entries[(3, 2)] == (1 - LAM) * (1 - 2 * LAM)
    rows = tri2.to_json_rows()
    assert rows[0] == [0, 0, "1"]
    keys = list(tri2.entries)
    assert keys == sorted(keys)


def test_diagonal_is_one_for_plain_kinds():
    tri = build_triangle(KIND_SECOND, 6)
    for n in range(7):
        assert tri.entries[(n, n)] == 1
