"""Exact polynomial fitting over Q on lattice points."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import prod
from typing import Callable, Sequence

from .core import Partition, partitions


class GridTooSmall(ValueError):
    pass


def rank_and_solve(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Gaussian elimination; returns (rank, solution or None).

    The solution is returned only for a square nonsingular system.
    """
    n = len(rows[0]) if rows else 0
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == len(M):
            break
    if r < n:
        return r, None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = M[i][n]
    return r, sol


def msym(kappa: Partition, point: Sequence[int]) -> Fraction:
    """Monomial symmetric polynomial m_kappa evaluated at ``point``."""
    ell = len(point)
    exps = tuple(kappa) + (0,) * (ell - len(kappa))
    return Fraction(sum(prod(x ** e for x, e in zip(point, perm)) for perm in set(permutations(exps))))


def symmetric_basis(ell: int, degree: int) -> list[Partition]:
    out = []
    for d in range(degree + 1):
        out.extend(p for p in (partitions(d) if d else (Partition(),)) if len(p) <= ell)
    return out


def monomial_basis(nvars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _mono(e: tuple[int, ...], point) -> Fraction:
    return Fraction(prod(x ** k for x, k in zip(point, e)))


@dataclass
class Fit:
    degree: int
    basis: list
    coefficients: list[Fraction]
    fit_points: list
    held_out: list
    evaluator: Callable = field(repr=False)

    def __call__(self, point) -> Fraction:
        return sum((c * self.evaluator(b, point) for b, c in zip(self.basis, self.coefficients)),
                   Fraction(0))

    def terms(self) -> dict:
        return {b: c for b, c in zip(self.basis, self.coefficients) if c}


def fit_polynomial(points: Sequence, values: Sequence[Fraction], symmetric: bool,
                   max_degree: int = 12) -> Fit:
    """Smallest-degree exact fit that reproduces every supplied value.

    Fit points are chosen greedily (in the order given) until the basis is
    determined; the remaining points are held out and must match exactly.
    At least one point is always held out.
    """
    points = [tuple(p) for p in points]
    values = [Fraction(v) for v in values]
    nvars = len(points[0])
    for d in range(max_degree + 1):
        if symmetric:
            basis, ev = symmetric_basis(nvars, d), msym
        else:
            basis, ev = monomial_basis(nvars, d), _mono
        if len(basis) >= len(points):
            break
        chosen, rows = [], []
        for i, p in enumerate(points):
            row = [ev(b, p) for b in basis]
            rank, _ = rank_and_solve(rows + [row], [Fraction(0)] * (len(rows) + 1))
            if rank > len(rows):
                rows.append(row)
                chosen.append(i)
                if len(rows) == len(basis):
                    break
        if len(rows) < len(basis):
            continue
        _, sol = rank_and_solve(rows, [values[i] for i in chosen])
        fit = Fit(d, basis, sol, [points[i] for i in chosen],
                  [p for i, p in enumerate(points) if i not in set(chosen)], ev)
        if not fit.held_out:
            break
        if all(fit(p) == v for p, v in zip(points, values)):
            return fit
    raise GridTooSmall(f"no exact fit with a held-out point on {len(points)} points")
