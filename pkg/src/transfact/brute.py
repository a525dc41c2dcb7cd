"""Exhaustive oracles for factorization and map counts.

Nothing here uses characters.  Searches walk conjugacy classes element by
element; the only shortcut is solving for the last factor once the others
and the target are fixed.  Work is bounded up front by a
:class:`SearchBudget` and an over-budget search raises instead of returning
a partial count.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import prod
from typing import Iterator, Sequence

from .core import (
    Partition,
    Perm,
    class_representative,
    class_size,
    compose,
    cycle_type_of,
    inverse,
    partitions,
)
from .charalg import FactorizationSpec


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_tuples: int = 50_000_000
    workers: int = 1

    def __post_init__(self):
        if self.max_tuples <= 0:
            raise ValueError("budget must be positive")
        if self.workers < 1:
            raise ValueError("need at least one worker")

    def check(self, planned: int, what: str = "search"):
        if planned > self.max_tuples:
            raise BudgetExceeded(f"{what} needs {planned} tuples, budget is {self.max_tuples}")


DEFAULT_BUDGET = SearchBudget()


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[y] = x
            return True
        return False


def _transitive0(ws: Sequence[Sequence[int]], n: int) -> bool:
    if n <= 1:
        return True
    uf = UnionFind(n)
    merged = 0
    for w in ws:
        for x in range(n):
            if uf.union(x, w[x]):
                merged += 1
                if merged == n - 1:
                    return True
    return False


def is_transitive(ws: Sequence[Perm], n: int) -> bool:
    """True iff the group generated by ``ws`` has a single orbit on {1..n}."""
    imgs = []
    for w in ws:
        img = w.images0 if isinstance(w, Perm) else tuple(i - 1 for i in w)
        if len(img) != n:
            raise ValueError(f"permutation on {len(img)} symbols, expected {n}")
        imgs.append(img)
    return _transitive0(imgs, n)


def class_elements(alpha: Partition) -> Iterator[tuple[int, ...]]:
    """Every permutation of cycle type alpha, as 0-based image tuples, generated lazily.

    Each cycle is emitted starting from its smallest symbol and cycles are
    opened in increasing order of that symbol, so nothing repeats.
    """
    alpha = Partition(alpha)
    n = alpha.weight
    img = [0] * n

    def rec(free: list[int], lengths: dict[int, int]):
        if not free:
            yield tuple(img)
            return
        start, rest = free[0], free[1:]
        for L in sorted(lengths):
            left = dict(lengths)
            left[L] -= 1
            if not left[L]:
                del left[L]
            for tail in permutations(rest, L - 1):
                cyc = (start,) + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    img[a] = b
                used = set(tail)
                yield from rec([x for x in rest if x not in used], left)

    yield from rec(list(range(n)), alpha.multiplicities())


@lru_cache(maxsize=None)
def _class_list(alpha: Partition) -> tuple[tuple[int, ...], ...]:
    return tuple(class_elements(alpha))


def _resolve_target(spec: FactorizationSpec, fixed_target) -> tuple[int, ...] | None:
    if fixed_target is None:
        return None
    t = fixed_target if isinstance(fixed_target, Perm) else Perm.parse(str(fixed_target), spec.n)
    if t.n != spec.n:
        raise ValueError("target on the wrong number of symbols")
    if t.cycle_type() != spec.target:
        raise ValueError(f"target {t} is not in class {spec.target}")
    return t.images0


def _count_for_target(rho, betas, transitive, heads=None):
    """Tuples with pi_1...pi_m = rho; ``heads`` restricts pi_1 (worker slice)."""
    n = len(rho)
    m = len(betas)
    if m == 0:
        ok = all(rho[i] == i for i in range(n))
        return int(ok and (not transitive or n <= 1))
    last = betas[-1]
    first = heads if heads is not None else _class_list(betas[0])
    pools = [first] + [_class_list(b) for b in betas[1:-1]]
    count = 0
    if m == 1:
        if cycle_type_of(rho) == last and (not transitive or _transitive0([rho], n)):
            return 1 if heads is None or rho in heads else 0
        return 0
    for prefix in product(*pools):
        acc = prefix[0]
        for p in prefix[1:]:
            acc = compose(acc, p)
        final = compose(inverse(acc), rho)
        if cycle_type_of(final) != last:
            continue
        if transitive and not _transitive0(prefix + (final,), n):
            continue
        count += 1
    return count


def _worker(args):
    rho, betas, transitive, heads = args
    return _count_for_target(rho, betas, transitive, heads)


def _search(spec: FactorizationSpec, fixed_target, budget: SearchBudget, transitive: bool) -> int:
    betas = spec.factors
    rho = _resolve_target(spec, fixed_target)
    per_target = prod(class_size(b) for b in betas[:-1]) if betas else 1
    targets = 1 if rho is not None else class_size(spec.target)
    budget.check(per_target * targets, "factorization search")
    rhos = [rho] if rho is not None else list(class_elements(spec.target))
    if budget.workers == 1 or len(betas) < 2:
        return sum(_count_for_target(r, betas, transitive) for r in rhos)
    heads = _class_list(betas[0])
    chunks = [heads[i::budget.workers] for i in range(budget.workers)]
    jobs = [(r, betas, transitive, c) for r in rhos for c in chunks if c]
    with ProcessPoolExecutor(max_workers=budget.workers) as ex:
        return sum(ex.map(_worker, jobs))


def enumerate_factorizations(spec: FactorizationSpec, fixed_target=None,
                             budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Brute-force count of factorizations; all of C_target unless a target is fixed."""
    return _search(spec, fixed_target, budget, transitive=False)


def enumerate_transitive_factorizations(spec: FactorizationSpec, fixed_target=None,
                                        budget: SearchBudget = DEFAULT_BUDGET) -> int:
    return _search(spec, fixed_target, budget, transitive=True)


# -- bulk censuses ------------------------------------------------------------
#
# One pass over S_n^(m-1) per target class covers every factor-class
# combination at once.  The target is the class representative and the count
# is scaled by |C_alpha|; per-target counts are conjugation invariant, which
# the tests check separately against the all-targets search.

@lru_cache(maxsize=None)
def _group_tables(n: int):
    elems = [p for lam in partitions(n) for p in _class_list(lam)]
    index = {p: i for i, p in enumerate(elems)}
    mult = [[index[compose(p, q)] for q in elems] for p in elems]
    inv = [index[inverse(p)] for p in elems]
    types = [cycle_type_of(p) for p in elems]
    return elems, index, mult, inv, types


def factorization_census(n: int, m: int, transitive: bool = False,
                         budget: SearchBudget = DEFAULT_BUDGET) -> Counter:
    """Counts for every spec of weight n with m factors, keyed by (target, factors)."""
    if m < 1:
        raise ValueError("census needs m >= 1")
    elems, index, mult, inv, types = _group_tables(n)
    size = len(elems)
    budget.check(len(partitions(n)) * size ** (m - 1), "census")
    out: Counter = Counter()
    for alpha in partitions(n):
        rho = index[class_representative(alpha).images0]
        local: Counter = Counter()
        mult_rho = [mult[i][rho] for i in range(size)]
        for prefix in product(range(size), repeat=m - 1):
            acc = prefix[0] if prefix else None
            for p in prefix[1:]:
                acc = mult[acc][p]
            last = mult_rho[inv[acc]] if prefix else rho
            if transitive and not _transitive0([elems[p] for p in prefix] + [elems[last]], n):
                continue
            local[prefix + (last,)] += 1
        scale = class_size(alpha)
        for key, c in local.items():
            out[(alpha, tuple(types[p] for p in key))] += c * scale
    return out


# -- decorated maps ------------------------------------------------------------

@lru_cache(maxsize=None)
def _decorated_histogram(lam: Partition, tau: Partition) -> Counter:
    n = lam.weight
    edges = _class_list(tau)
    hist: Counter = Counter()
    for nu in _class_list(lam):
        for eps in edges:
            phi = compose(eps, nu)
            if _transitive0((nu, eps), n):
                hist[cycle_type_of(phi)] += 1
    return hist


def enumerate_decorated_maps(lam: Partition, mu: Partition, tau: Partition,
                             budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """Pairs (nu, eps), nu in C_lam, eps in C_tau, eps*nu in C_mu, generating a transitive group."""
    lam, mu, tau = Partition(lam), Partition(mu), Partition(tau)
    if not lam.weight == mu.weight == tau.weight:
        raise ValueError("weight mismatch")
    budget.check(class_size(lam) * class_size(tau), "decorated map search")
    return _decorated_histogram(lam, tau).get(mu, 0)
