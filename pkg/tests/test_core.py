from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from transfact.core import (
    COMPOSITION, Partition, Perm, aut_order, class_representative, class_size,
    cycle_type, partitions, rh_genus,
)


def P(*parts):
    return Partition(parts)


def test_partition_basics():
    lam = Partition([1, 3, 1])
    assert lam == (3, 1, 1)
    assert lam.weight == 5 and lam.length == 3
    assert str(lam) == "[3,1,1]"
    assert Partition.parse("[3,1,1]") == lam == Partition.parse("3,1,1")
    assert Partition.parse("[]") == Partition(())
    assert lam.conjugate() == P(3, 1, 1)
    assert P(4, 1).conjugate() == P(2, 1, 1, 1)
    assert P(3, 1).dominates(P(2, 2))
    assert not P(2, 2).dominates(P(3, 1))


@pytest.mark.parametrize("bad", ["3,x", "[1,,2]", "1.5"])
def test_partition_parse_rejects(bad):
    with pytest.raises(ValueError):
        Partition.parse(bad)


def test_partition_rejects_nonpositive():
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_partition_counts():
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(3) == (P(3), P(2, 1), P(1, 1, 1))


def test_cycle_type_examples(torus):
    assert cycle_type(Perm.identity(4)) == P(1, 1, 1, 1)
    assert cycle_type(Perm.from_images([2, 1, 3])) == P(2, 1)
    phi = Perm.parse(torus["garbled"]["phi"], 18)
    assert cycle_type(phi) == P(7, 5, 5, 1)


def test_class_size_examples():
    assert class_size(P(1, 1, 1)) == 1
    assert class_size(P(3)) == 2
    assert class_size(P(2, 1)) == 3
    for n in range(1, 8):
        assert sum(class_size(a) for a in partitions(n)) == factorial(n)


def test_aut_order_examples():
    assert aut_order(P(1, 1, 1, 1)) == 24
    assert aut_order(P(3)) == 1
    assert aut_order(P(2, 2, 1)) == 2


def test_rh_genus_examples():
    assert rh_genus(P(3), [P(2, 1), P(2, 1)]).genus == 0
    assert rh_genus(P(1, 1, 1), [P(2, 1)] * 4).genus == 0
    rep = rh_genus(P(3), [P(2, 1)])
    assert not rep.feasible
    assert rep.value == Fraction(-1, 2)
    assert rep.reason == "parity"
    with pytest.raises(ValueError):
        rh_genus(P(3), [P(2, 1, 1)])


def test_composition_is_right_to_left():
    assert COMPOSITION == "right-to-left"
    p = Perm.parse("(1 2)", 3)
    q = Perm.parse("(2 3)", 3)
    # (p*q)(x) = p(q(x)): 2 -> 3 -> 3, 3 -> 2 -> 1
    assert tuple((p * q).images) == (2, 3, 1)


def test_perm_parse_roundtrip():
    p = Perm.parse("(1 3 2)(4 5)")
    assert str(p) == "(1 3 2)(4 5)"
    assert Perm.parse(str(p), 5) == p
    assert Perm.parse("[2,1,3]") == Perm.parse("(1 2)", 3)
    with pytest.raises(ValueError):
        Perm.parse("(1 2)(2 3)")
    with pytest.raises(ValueError):
        Perm.parse("(1 a)")


def test_class_representative():
    for lam in partitions(6):
        assert cycle_type(class_representative(lam)) == lam


perm_st = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


@given(perm_st)
def test_inverse_and_cycle_type(images):
    p = Perm.from_images(images)
    e = p * p.inverse()
    assert e == Perm.identity(len(images))
    assert cycle_type(p).weight == len(images)
    assert cycle_type(p.inverse()) == cycle_type(p)
    assert p.num_cycles() == cycle_type(p).length
