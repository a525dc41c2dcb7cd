"""Rooted maps and hypermaps as permutation triples.

A decorated rooted map on 2n darts is a triple (nu, eps, phi) of vertex,
edge and face permutations with ``eps * nu == phi`` (nu applied first) and
<nu, eps> transitive.  Rooted maps are decorated ones divided by (2n-1)!,
and the same scaling by (N-1)! turns transitive triples with an arbitrary
edge class into rooted hypermaps.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial

from .brute import is_transitive
from .charalg import FactorizationSpec, transitive_factorization_count
from .core import Partition, Perm


class TripleRejected(ValueError):
    """A candidate triple failed validation; ``invariant`` names the failed check."""

    def __init__(self, invariant: str, message: str):
        super().__init__(message)
        self.invariant = invariant


@dataclass(frozen=True)
class MapTriple:
    nu: Perm
    eps: Perm
    phi: Perm
    hypermap: bool = False

    @property
    def n_darts(self) -> int:
        return self.nu.n

    def to_text(self) -> dict:
        return {"nu": str(self.nu), "eps": str(self.eps), "phi": str(self.phi)}


def _as_perm(x, n, name):
    if isinstance(x, Perm):
        return x
    try:
        return Perm.parse(x, n)
    except ValueError as e:
        raise TripleRejected("parse", f"{name}: {e}") from None


def _infer_n(*texts):
    n = 0
    for t in texts:
        if isinstance(t, Perm):
            n = max(n, t.n)
        else:
            n = max([n] + [int(x) for x in re.findall(r"\d+", t)])
    return n


def validate_triple(nu, eps, phi, hypermap: bool = False) -> MapTriple:
    """Check a (nu, eps, phi) triple, given as permutations or cycle-notation text."""
    n = _infer_n(nu, eps, phi)
    nu, eps, phi = _as_perm(nu, n, "nu"), _as_perm(eps, n, "eps"), _as_perm(phi, n, "phi")
    if not nu.n == eps.n == phi.n:
        raise TripleRejected("size", "permutations on different symbol counts")
    if eps * nu != phi:
        raise TripleRejected("product", f"eps*nu = {eps * nu} differs from phi = {phi}")
    if not hypermap and (n % 2 or eps.cycle_type() != Partition((2,) * (n // 2))):
        raise TripleRejected("involution", "eps is not a fixed-point-free involution")
    if not is_transitive([nu, eps], n):
        raise TripleRejected("transitive", "<nu, eps> is not transitive")
    return MapTriple(nu, eps, phi, hypermap)


def map_genus(t: MapTriple) -> int:
    """Genus from Euler's formula; c(nu) + c(eps) + c(phi) = N + 2 - 2g.

    For maps c(eps) = N/2 and this is V - E + F = 2 - 2g.
    """
    chi = t.nu.num_cycles() + t.eps.num_cycles() + t.phi.num_cycles() - t.n_darts
    if chi % 2 or chi > 2:
        raise ValueError(f"Euler characteristic {chi} gives no valid genus")
    return (2 - chi) // 2


def count_rooted_hypermaps(lam: Partition, mu: Partition, tau: Partition) -> int:
    """Rooted (hyper)maps with vertex degrees lam, face degrees mu and edge class tau.

    Transitive factorizations phi = eps * nu with eps in C_tau, nu in C_lam,
    summed over phi in C_mu, divided by (N-1)!.
    """
    lam, mu, tau = Partition(lam), Partition(mu), Partition(tau)
    N = lam.weight
    if not N == mu.weight == tau.weight:
        raise ValueError("weight mismatch")
    total = transitive_factorization_count(FactorizationSpec(mu, (tau, lam)))
    q, r = divmod(total, factorial(N - 1))
    if r:
        raise ArithmeticError(f"{total} decorated objects not divisible by {N - 1}!")
    return q


def single_symbol_repairs(nu_text: str, eps, phi) -> list[tuple[int, int, int, MapTriple]]:
    """Try every one-symbol substitution in a garbled vertex permutation.

    Returns (cycle index, position, replacement symbol, repaired triple) for
    each substitution that yields a valid map with ``eps * nu == phi``.
    """
    cycles = [[int(x) for x in body.split()] for body in re.findall(r"\(([^()]*)\)", nu_text)]
    n = _infer_n(nu_text, eps, phi)
    eps, phi = _as_perm(eps, n, "eps"), _as_perm(phi, n, "phi")
    found = []
    for ci, cyc in enumerate(cycles):
        for pos, old in enumerate(cyc):
            for new in range(1, n + 1):
                if new == old:
                    continue
                trial = [list(c) for c in cycles]
                trial[ci][pos] = new
                try:
                    nu = Perm.from_cycles(trial, n)
                    t = validate_triple(nu, eps, phi)
                except ValueError:
                    continue
                found.append((ci, pos, new, t))
    return found
