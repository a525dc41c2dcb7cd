"""Characters of S_n and counts of (transitive) factorizations in the class algebra.

Class product coefficient
-------------------------
Writing each class sum in the idempotent basis, ``K_b = |C_b| sum_l chi^l(b)/f^l F_l``
with ``f^l = chi^l(1^n)``, multiplying diagonally and converting back gives::

    [K_a] K_b1 ... K_bm = (prod_i |C_bi|) / n! * sum_l (f^l)^(1-m) chi^l(a) prod_i chi^l(bi)

and the number of factorizations is ``|C_a|`` times that coefficient.

Transitive counts
-----------------
The orbits of the group generated by a factorization split the symbols into
blocks, and each block carries a transitive factorization whose classes are
sub-multisets of the original ones.  Conditioning on the block containing
symbol 1 (of size k, with C(n-1, k-1) label choices) gives::

    N_tot(s) = sum_{s1} C(n-1, k-1) N_conn(s1) N_tot(s - s1)

over componentwise sub-multiset specs ``s1`` of weight k.  The k = n term is
``N_conn(s)``; everything else has smaller weight, so the recursion solves
for ``N_conn``.  Identity factors are dropped and factors are sorted before
memoization, since neither count depends on them.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .core import Partition, class_size, partitions, sub_multisets


class CharacterTableCache:
    """Lazily filled table of chi^lam(theta); reads are lock-free, writes locked."""

    def __init__(self):
        self._values: dict[tuple[Partition, Partition], int] = {}
        self._lock = threading.Lock()

    def get(self, lam: Partition, theta: Partition) -> int:
        key = (lam, theta)
        val = self._values.get(key)
        if val is None:
            val = _mn(lam, theta, self)
            with self._lock:
                self._values[key] = val
        return val

    def __len__(self):
        return len(self._values)

    def items(self):
        return list(self._values.items())

    def update(self, entries: Iterable[tuple[tuple[Partition, Partition], int]]):
        with self._lock:
            for key, val in entries:
                self._values[key] = val

    def clear(self):
        with self._lock:
            self._values.clear()

    def warm(self, max_n: int):
        for n in range(1, max_n + 1):
            for lam in partitions(n):
                for theta in partitions(n):
                    self.get(lam, theta)


CHARACTERS = CharacterTableCache()


def _beta_set(lam: Partition) -> list[int]:
    ell = len(lam)
    return [lam[i] + ell - 1 - i for i in range(ell)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return Partition(b - (ell - 1 - i) for i, b in enumerate(beta) if b - (ell - 1 - i) > 0)


def _mn(lam: Partition, theta: Partition, cache: CharacterTableCache) -> int:
    if not theta:
        return 1 if not lam else 0
    k, rest = theta[0], Partition(theta[1:])
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in occupied:
            continue
        # ribbon height = beads strictly between the new and old positions
        height = sum(1 for x in beta if c < x < b)
        new = [c if x == b else x for x in beta]
        sign = -1 if height % 2 else 1
        total += sign * cache.get(_from_beta(new), rest)
    return total


def character(lam: Partition, theta: Partition) -> int:
    """chi^lam evaluated on the class theta (Murnaghan-Nakayama)."""
    lam, theta = Partition(lam), Partition(theta)
    if lam.weight != theta.weight:
        raise ValueError(f"weight mismatch: {lam} vs {theta}")
    return CHARACTERS.get(lam, theta)


def dimension(lam: Partition) -> int:
    return character(lam, Partition((1,) * Partition(lam).weight))


@dataclass(frozen=True)
class FactorizationSpec:
    """Target class and factor classes, all partitions of the same n."""

    target: Partition
    factors: tuple[Partition, ...]

    def __init__(self, target, factors=()):
        target = Partition(target)
        factors = tuple(Partition(b) for b in factors)
        for b in factors:
            if b.weight != target.weight:
                raise ValueError(f"weight mismatch: target {target} vs factor {b}")
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "factors", factors)

    @property
    def n(self) -> int:
        return self.target.weight

    @property
    def m(self) -> int:
        return len(self.factors)

    def __str__(self):
        return f"{self.target} <- " + " ".join(map(str, self.factors))


def _as_spec(spec, factors=None) -> FactorizationSpec:
    if isinstance(spec, FactorizationSpec):
        return spec
    return FactorizationSpec(spec, factors or ())


def product_class_coefficient(spec: FactorizationSpec) -> Fraction:
    """[K_target] K_b1 ... K_bm, as an exact rational."""
    spec = _as_spec(spec)
    if spec.m < 1:
        raise ValueError("need at least one factor")
    return _class_coefficient(spec.target, tuple(sorted(spec.factors)))


@lru_cache(maxsize=None)
def _class_coefficient(alpha: Partition, betas: tuple[Partition, ...]) -> Fraction:
    n = alpha.weight
    m = len(betas)
    total = Fraction(0)
    for lam in partitions(n):
        f = dimension(lam)
        term = character(lam, alpha)
        if not term:
            continue
        for b in betas:
            term *= character(lam, b)
            if not term:
                break
        if term:
            total += Fraction(term) * Fraction(f) ** (1 - m)
    return total * prod(class_size(b) for b in betas) / factorial(n)


def factorization_count(spec: FactorizationSpec) -> int:
    """Number of tuples (rho, pi_1..pi_m) with pi_1...pi_m = rho in the given classes."""
    spec = _as_spec(spec)
    alpha, betas = _canonical(spec.target, spec.factors)
    return _total(alpha, betas)


def transitive_factorization_count(spec: FactorizationSpec) -> int:
    """As :func:`factorization_count`, restricted to factor groups transitive on {1..n}."""
    spec = _as_spec(spec)
    alpha, betas = _canonical(spec.target, spec.factors)
    return _connected(alpha, betas)


def _canonical(alpha: Partition, betas: Sequence[Partition]):
    kept = tuple(sorted(b for b in betas if b and b[0] > 1))
    return alpha, kept


@lru_cache(maxsize=None)
def _total(alpha: Partition, betas: tuple[Partition, ...]) -> int:
    if not betas:
        return 1 if all(a == 1 for a in alpha) else 0
    val = class_size(alpha) * _class_coefficient(alpha, betas)
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(f"non-integral factorization count {val} for {alpha} {betas}")
    return int(val)


def _split_group(beta: Partition, count: int, k: int):
    """Ways to choose weight-k sub-multisets for ``count`` identical factors.

    Yields (chosen parts, complementary parts, multiplicity) where the parts
    lists hold one partition per factor.
    """
    options = list(sub_multisets(beta, k))
    if not options:
        return

    def rec(i, left, chosen, mult):
        if i == len(options) - 1:
            yield chosen + [options[i]] * left, mult
            return
        for c in range(left + 1):
            yield from rec(i + 1, left - c, chosen + [options[i]] * c, mult * comb(left, c))

    for chosen, mult in rec(0, count, [], 1):
        yield chosen, [beta.remove(o) for o in chosen], mult


def _sub_specs(alpha: Partition, betas: tuple[Partition, ...], k: int):
    groups: dict[Partition, int] = {}
    for b in betas:
        groups[b] = groups.get(b, 0) + 1
    group_choices = [list(_split_group(b, c, k)) for b, c in groups.items()]
    for a1 in sub_multisets(alpha, k):
        a2 = alpha.remove(a1)
        for combo in product(*group_choices):
            s1, s2, mult = [], [], 1
            for chosen, rest, m in combo:
                s1.extend(chosen)
                s2.extend(rest)
                mult *= m
            yield _canonical(a1, s1), _canonical(a2, s2), mult


@lru_cache(maxsize=None)
def _connected(alpha: Partition, betas: tuple[Partition, ...]) -> int:
    n = alpha.weight
    if n == 1:
        return 1
    acc = _total(alpha, betas)
    for k in range(1, n):
        inner = 0
        for (a1, b1), (a2, b2), mult in _sub_specs(alpha, betas, k):
            c = _connected(a1, b1)
            if c:
                t = _total(a2, b2)
                if t:
                    inner += mult * c * t
        acc -= comb(n - 1, k - 1) * inner
    if acc < 0:
        raise ArithmeticError(f"negative connected count {acc} for {alpha} {betas}")
    return acc


def transposition_factors(n: int, r: int) -> tuple[Partition, ...]:
    if r == 0:
        return ()
    if n < 2:
        return ()
    return (Partition((2,) + (1,) * (n - 2)),) * r


def transitive_transposition_count(alpha: Partition, r: int, extra: Sequence[Partition] = ()) -> int:
    """Transitive factorizations (class-summed) of C_alpha into ``extra`` then r transpositions."""
    alpha = Partition(alpha)
    n = alpha.weight
    if r < 0:
        return 0
    if n < 2 and r > 0:
        return 0
    return transitive_factorization_count(
        FactorizationSpec(alpha, tuple(extra) + transposition_factors(n, r)))
