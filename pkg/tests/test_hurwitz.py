from fractions import Fraction

import pytest

from transfact.core import Partition, partitions
from transfact.fit import GridTooSmall, fit_polynomial
from transfact.hurwitz import (
    HurwitzQuery, double_hurwitz, double_hurwitz_brute, double_hurwitz_r,
    double_piecewise_probe, hurwitz_brute, hurwitz_char, hurwitz_g0_closed,
    joincut_table, lagrange_consistency_check, polynomiality_probe,
    transposition_count,
)


def P(*parts):
    return Partition(parts)


def test_transposition_count():
    assert transposition_count(HurwitzQuery(P(1, 1, 1))) == 4
    assert transposition_count(HurwitzQuery(P(3))) == 2
    assert transposition_count(HurwitzQuery(P(2, 1), 0, P(3))) == 1


def test_closed_form_examples():
    assert hurwitz_g0_closed(P(3)) == 1
    assert hurwitz_g0_closed(P(1, 1, 1)) == 4
    assert hurwitz_g0_closed(P(2, 1)) == 4
    for n in range(1, 8):
        assert hurwitz_g0_closed(P(n)) == Fraction(n) ** (n - 3)


def test_character_and_brute_examples():
    assert hurwitz_char(P(3)) == 1
    assert hurwitz_char(P(1, 1, 1)) == 4
    assert hurwitz_char(P(1)) == 1
    assert hurwitz_brute(P(3)) == 1
    assert hurwitz_brute(P(1, 1, 1)) == 4
    assert hurwitz_brute(P(2, 1)) == 4


def test_brute_all_targets_agrees():
    for a in partitions(4):
        assert hurwitz_brute(a, all_targets=True) == hurwitz_brute(a)


def test_genus_one_small():
    for a in (P(2), P(1, 1), P(3), P(2, 1)):
        assert hurwitz_char(a, 1) == hurwitz_brute(a, 1)


def test_joincut_examples():
    t = joincut_table(6)
    assert t[P(1)] == 1
    assert t[P(3)] == 1
    assert t[P(2, 1)] == 4
    for alpha, v in t.rows():
        assert v == hurwitz_g0_closed(alpha)


def test_lagrange_check():
    assert lagrange_consistency_check(3).passed
    assert lagrange_consistency_check(5).passed


def test_lagrange_fault_injection():
    bad = joincut_table(5).perturbed(P(2, 1))
    rep = lagrange_consistency_check(5, bad)
    assert not rep.passed
    assert rep.mismatch[0] == 3 and rep.mismatch[1] == P(2, 1)


def test_double_hurwitz_examples():
    for n in range(1, 6):
        assert double_hurwitz(P(n), P(n)) == Fraction(1, n)
    assert double_hurwitz_r(P(1, 1), P(2), 2) == 0
    assert double_hurwitz_r(P(1, 1), P(2), 0) == 0
    v = double_hurwitz(P(2, 1), P(3))
    assert v == double_hurwitz_brute(P(2, 1), P(3))
    assert v == 1


def test_double_hurwitz_brute_small():
    for a in partitions(4):
        for b in partitions(4):
            for g in (0,):
                assert double_hurwitz(a, b, g) == double_hurwitz_brute(a, b, g)


def test_genus0_polynomiality_constant_and_sum():
    for ell in (1, 2, 3):
        rep = polynomiality_probe(0, ell, 4)
        assert rep.matches_closed_form
        assert rep.fit.held_out
    rep = polynomiality_probe(0, 4, 3)
    assert rep.matches_closed_form
    assert rep.degree == 1


def test_genus1_one_part_fit():
    rep = polynomiality_probe(1, 1, 5)
    assert rep.fit.held_out
    assert {k: v for k, v in rep.fit.terms().items()} == {P(1): Fraction(1, 24), Partition(()): Fraction(-1, 24)}


def test_fit_rejects_tiny_grid():
    with pytest.raises(GridTooSmall):
        fit_polynomial([(1,), (2,)], [1, 4], symmetric=True)


def test_two_part_one_part_family_is_constant():
    # H^0_{(a,b),(a+b)} = 1: a single polynomial on both sides of a = b
    rep = double_piecewise_probe(0, 2, 1, lambda a, b: a[0] < a[1], 8,
                                 across=lambda a, b: a[0] > a[1])
    assert rep.in_chamber.terms() == {(0, 0): 1}
    assert not rep.mispredicted
    assert rep.fits_differ is False


def test_genuine_wall_crossing():
    rep = double_piecewise_probe(0, 2, 2, ((1, 3), (2, 2)), 8)
    assert rep.in_chamber.held_out
    assert rep.in_chamber.degree == 1
    assert rep.mispredicted
    assert rep.wall_witness
    assert rep.degree_candidates["4g-3+l+k"] == 1


def test_one_cycle_family_degenerate_fit():
    pts = [(n,) for n in range(1, 7)]
    fit = fit_polynomial(pts, [n * double_hurwitz(P(n), P(n)) for (n,) in pts], symmetric=False)
    assert fit.degree == 0 and fit.terms() == {(0,): 1}
