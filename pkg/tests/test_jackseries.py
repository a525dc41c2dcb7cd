from fractions import Fraction
from math import factorial, prod

import pytest

from transfact.core import Partition, partitions
from transfact.jackseries import (
    ALPHA, SymFunc, alpha_inner_product, b_conjecture_scan, b_report, jack,
    jack_norm, monomial_in_power_sums, psi_series, schur_in_power_sums,
    schur_series,
)
from transfact.maps import count_rooted_hypermaps
from transfact.ratfunc import AlphaRational

ONE = AlphaRational.const(1)


def P(*parts):
    return Partition(parts)


def p(*parts):
    return SymFunc.p(P(*parts))


def hooks(lam):
    conj = lam.conjugate()
    return prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))


def test_schur_examples():
    assert schur_in_power_sums(P(1)) == p(1)
    assert schur_in_power_sums(P(2)) == (p(1, 1) + p(2)).scale(Fraction(1, 2))
    assert schur_in_power_sums(P(1, 1)) == (p(1, 1) - p(2)).scale(Fraction(1, 2))


def test_inner_product_examples():
    assert alpha_inner_product(p(1), p(1)) == ALPHA
    assert alpha_inner_product(p(2), p(2)) == 2 * ALPHA
    assert alpha_inner_product(p(1, 1), p(2)) == 0
    assert alpha_inner_product(p(1, 1), p(1, 1), a=2) == 8


def test_jack_examples():
    assert jack(P(1)) == p(1)
    assert jack(P(2)) == p(1, 1) + p(2).scale(ALPHA)
    assert jack(P(1, 1)) == p(1, 1) - p(2)


def test_jack_norms():
    assert jack_norm(P(1)) == ALPHA
    assert jack_norm(P(2)) == 2 * ALPHA ** 2 * (ONE + ALPHA)
    assert jack_norm(P(1, 1)) == 2 * ALPHA ** 2 + 2 * ALPHA


def test_jack_orthogonal_weight_4():
    lams = partitions(4)
    for i, a in enumerate(lams):
        for b in lams[i + 1:]:
            assert alpha_inner_product(jack(a), jack(b)).is_zero()


def test_jack_at_one_is_scaled_schur():
    for n in range(1, 6):
        for lam in partitions(n):
            assert jack(lam).specialize(1) == schur_in_power_sums(lam).scale(hooks(lam))


def test_jack_triangularity():
    for lam in partitions(5):
        m = jack(lam).monomial_coefficients()
        for mu, c in m.items():
            if c != 0:
                assert lam.dominates(mu)
        assert m[P(1, 1, 1, 1, 1)] == factorial(5)


def test_monomial_roundtrip():
    m21 = monomial_in_power_sums(P(2, 1))
    assert m21 == p(2, 1) - p(3)


def test_psi_examples():
    psi = psi_series(3)
    assert psi.coefficient(P(1), P(1), P(1)) == 1
    assert psi.coefficient(P(2), P(1, 1), P(2))(1) == 1
    assert psi.coefficient(P(2), P(1, 1), P(1)) == 0
    assert psi.coefficient(P(3), P(3), P(3)) == 2 * ALPHA ** 2 - 3 * ALPHA + 2


def test_schur_series_examples():
    sch = schur_series(4)
    assert sch.coefficient(P(2), P(1, 1), P(2)) == 1
    assert sch.coefficient(P(1, 1), P(2), P(2)) == 1
    assert sch.coefficient(P(1), P(1), P(1)) == 1
    for lam in partitions(4):
        for mu in partitions(4):
            assert sch.coefficient(lam, mu, P(2, 2)) == count_rooted_hypermaps(lam, mu, P(2, 2))


def test_psi_at_one_matches_schur_weight_4():
    psi = psi_series(4).specialize(1)
    sch = schur_series(4)
    for n in range(1, 5):
        for t in [(a, b, c) for a in partitions(n) for b in partitions(n) for c in partitions(n)]:
            assert psi.coefficient(*t) == sch.coefficient(*t)


def test_b_report_examples():
    rep = b_report((P(1), P(1), P(1)), 1)
    assert rep.passed and rep.b_coefficients() == [1]
    psi = psi_series(2)
    rep = b_report((P(2), P(1, 1), P(2)), psi.coefficient(P(2), P(1, 1), P(2)))
    assert rep.passed and rep.coefficient(0) == 1
    bad = b_report((P(1), P(1), P(1)), ALPHA / 2)
    assert bad.is_polynomial and not bad.integer_coefficients
    neg = b_report((P(1), P(1), P(1)), ONE - ALPHA * 2)
    assert not neg.nonnegative_coefficients


def test_b_scan_weight_4():
    reports = b_conjecture_scan(4)
    assert all(r.passed for r in reports)
    assert len(reports) == sum(len(partitions(n)) ** 3 for n in range(1, 5))
    assert all(len({x.weight for x in r.triple}) == 1 for r in reports)
    # b = 1 counts maps on all surfaces; at least the orientable ones
    sch = schur_series(4)
    for r in reports:
        assert r.coefficient(1) >= sch.coefficient(*r.triple)
