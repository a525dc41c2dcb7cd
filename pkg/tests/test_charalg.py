from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from transfact.charalg import (
    CHARACTERS, FactorizationSpec, character, dimension, factorization_count,
    product_class_coefficient, transitive_factorization_count,
    transitive_transposition_count,
)
from transfact.core import Partition, class_size, partitions


def P(*parts):
    return Partition(parts)


def S(target, *factors):
    return FactorizationSpec(P(*target), [P(*b) for b in factors])


def test_character_examples():
    for n in range(1, 7):
        for theta in partitions(n):
            assert character(P(n), theta) == 1
    assert character(P(1, 1, 1), P(2, 1)) == -1
    assert character(P(2, 1), P(1, 1, 1)) == 2
    assert character(P(2, 1), P(2, 1)) == 0
    assert character(P(2, 1), P(3)) == -1


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        character(P(2, 1), P(2))


def test_character_table_s4():
    # rows lambda, columns theta, both in decreasing lex order
    table = [
        [1, 1, 1, 1, 1],
        [-1, 0, -1, 1, 3],
        [0, -1, 2, 0, 2],
        [1, 0, -1, -1, 3],
        [-1, 1, 1, -1, 1],
    ]
    lams = partitions(4)
    assert [[character(l, t) for t in lams] for l in lams] == table


def test_orthogonality_small():
    for n in range(1, 6):
        lams = partitions(n)
        for a in lams:
            for b in lams:
                s = sum(Fraction(character(a, t) * character(b, t), t.z()) for t in lams)
                assert s == (1 if a == b else 0)


def test_dimension_hook_length():
    assert dimension(P(3, 2)) == 5
    assert dimension(P(2, 2, 1)) == 5
    assert dimension(P(4, 2, 1)) == 35


def test_product_class_coefficient_examples():
    assert product_class_coefficient(S((1, 1, 1), (3,), (3,))) == 2
    assert product_class_coefficient(S((3,), (2, 1), (2, 1))) == 3
    assert product_class_coefficient(S((2, 1), (2, 1))) == 1


def test_factorization_count_examples():
    assert factorization_count(S((1, 1, 1), (3,), (3,))) == 2
    assert factorization_count(S((3,), (2, 1), (2, 1))) == 6
    assert factorization_count(S((2, 1), (2, 1), (1, 1, 1))) == 3


def test_transitive_count_examples():
    assert transitive_factorization_count(S((1, 1, 1), (3,), (3,))) == 2
    assert transitive_factorization_count(S((1, 1), (2,), (2,))) == 1
    assert transitive_factorization_count(S((1, 1, 1, 1), (2, 1, 1), (2, 1, 1))) == 0


def test_spec_rejects_weight_mismatch():
    with pytest.raises(ValueError):
        S((3,), (2,))


def test_minimal_identity_factorizations():
    # transitive factorizations of the identity into 2n-2 transpositions:
    # n! n^(n-3) (2n-2)! / n!  per fixed identity
    for n in range(2, 7):
        got = transitive_transposition_count(P(*([1] * n)), 2 * n - 2)
        assert got == Fraction(n) ** (n - 3) * factorial(2 * n - 2)


def test_cache_is_populated():
    character(P(3, 2), P(2, 2, 1))
    assert (P(3, 2), P(2, 2, 1)) in dict(CHARACTERS.items())


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.sampled_from(partitions(n)),
                        st.lists(st.sampled_from(partitions(n)), min_size=1, max_size=3))))
def test_counts_are_symmetric_and_bounded(data):
    alpha, betas = data
    total = factorization_count(FactorizationSpec(alpha, betas))
    trans = transitive_factorization_count(FactorizationSpec(alpha, betas))
    assert 0 <= trans <= total
    # the factor order does not matter
    assert factorization_count(FactorizationSpec(alpha, betas[::-1])) == total
    if len(betas) == 1:
        assert total == (class_size(alpha) if betas[0] == alpha else 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda n: st.lists(st.sampled_from(partitions(n)), min_size=1, max_size=3)))
def test_target_sum_is_product_of_class_sizes(betas):
    n = betas[0].weight
    total = sum(factorization_count(FactorizationSpec(a, betas)) for a in partitions(n))
    assert total == prod(class_size(b) for b in betas)
