"""Hurwitz and double Hurwitz numbers.

All values use the class-summed normalization: the number of transitive
factorizations with the target ranging over its whole class, divided by n!
(and multiplied by |Aut alpha| |Aut beta| for double numbers).  With this
reading H^0_(n) = n^(n-3) and H^0_(n),(n) = 1/n.

Join-cut recurrence
-------------------
With ``h_a = H^0_a / (n + l - 2)!`` the coefficient of z^n p_a in the
join-cut equation reads::

    (n + l - 2) h_a = 1/2 sum_{(i, j) in a} (i+j) m_{i+j}(b) h_b
                    + 1/2 sum_{k in a} sum_{i+j=k} sum_{b' + c' = a - k}
                          i m_i(b'+i) h_{b'+i} * j m_j(c'+j) h_{c'+j}

where ``b = a - {i, j} + {i + j}`` (cut) and the second line joins two
smaller covers.  Every term on the right has smaller n + l, so the table
is filled from the seed h_(1) = 1, which the equation itself leaves free.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Sequence

from . import brute
from .charalg import transitive_transposition_count
from .core import (
    Partition,
    aut_order,
    class_representative,
    class_size,
    partitions,
    sub_multisets,
    transposition_class,
)
from .charalg import FactorizationSpec
from .fit import Fit, GridTooSmall, fit_polynomial


@dataclass(frozen=True)
class HurwitzQuery:
    alpha: Partition
    genus: int = 0
    beta: Partition | None = None

    def __init__(self, alpha, genus=0, beta=None):
        alpha = Partition(alpha)
        if beta is not None:
            beta = Partition(beta)
            if beta.weight != alpha.weight:
                raise ValueError("alpha and beta must have the same weight")
        if genus < 0 or int(genus) != genus:
            raise ValueError("genus must be a nonnegative integer")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "beta", beta)

    @property
    def n(self) -> int:
        return self.alpha.weight


def transposition_count(q: HurwitzQuery) -> int:
    """Number of simple branch points from Riemann-Hurwitz."""
    if q.beta is None:
        return q.n + len(q.alpha) + 2 * q.genus - 2
    return len(q.alpha) + len(q.beta) + 2 * q.genus - 2


def hurwitz_g0_closed(alpha) -> Fraction:
    """Genus-0 closed form (n+l-2)!/|Aut a| n^(l-3) prod a_j^a_j / a_j!."""
    alpha = Partition(alpha)
    n, ell = alpha.weight, len(alpha)
    val = Fraction(factorial(n + ell - 2), aut_order(alpha)) * Fraction(n) ** (ell - 3)
    for a in alpha:
        val *= Fraction(a ** a, factorial(a))
    return val


def hurwitz_char(alpha, genus: int = 0) -> Fraction:
    """H^g_alpha from transitive factorization counts in the class algebra."""
    q = HurwitzQuery(alpha, genus)
    r = transposition_count(q)
    return Fraction(transitive_transposition_count(q.alpha, r), factorial(q.n))


def hurwitz_brute(alpha, genus: int = 0, budget: brute.SearchBudget = brute.DEFAULT_BUDGET,
                  all_targets: bool = False) -> Fraction:
    """H^g_alpha by exhaustive search.

    By default the target is the class representative and the count is
    scaled by |C_alpha|; ``all_targets`` walks the whole class instead.
    """
    q = HurwitzQuery(alpha, genus)
    r = transposition_count(q)
    n = q.n
    if r < 0 or (n < 2 and r > 0):
        return Fraction(0)
    factors = (transposition_class(n),) * r if r else ()
    spec = FactorizationSpec(q.alpha, factors)
    if all_targets:
        count = brute.enumerate_transitive_factorizations(spec, None, budget)
    else:
        rho = class_representative(q.alpha)
        count = class_size(q.alpha) * brute.enumerate_transitive_factorizations(spec, rho, budget)
    return Fraction(count, factorial(n))


def double_hurwitz(alpha, beta, genus: int = 0) -> Fraction:
    """H^g_{alpha,beta} = |Aut a||Aut b|/n! times transitive (beta, r transpositions) counts."""
    q = HurwitzQuery(alpha, genus, beta)
    r = transposition_count(q)
    return double_hurwitz_r(q.alpha, q.beta, r)


def double_hurwitz_r(alpha, beta, r: int) -> Fraction:
    """Same normalization as :func:`double_hurwitz` with the transposition count given directly."""
    alpha, beta = Partition(alpha), Partition(beta)
    n = alpha.weight
    count = transitive_transposition_count(alpha, r, extra=(beta,))
    return Fraction(aut_order(alpha) * aut_order(beta) * count, factorial(n))


def double_hurwitz_brute(alpha, beta, genus: int = 0,
                         budget: brute.SearchBudget = brute.DEFAULT_BUDGET) -> Fraction:
    q = HurwitzQuery(alpha, genus, beta)
    r = transposition_count(q)
    n = q.n
    if r < 0 or (n < 2 and r > 0):
        return Fraction(0)
    spec = FactorizationSpec(q.alpha, (q.beta,) + (transposition_class(n),) * r)
    count = brute.enumerate_transitive_factorizations(spec, None, budget)
    return Fraction(aut_order(q.alpha) * aut_order(q.beta) * count, factorial(n))


# -- join-cut table ------------------------------------------------------------------

@dataclass
class JoinCutTable:
    """Genus-0 series coefficients h_a = H^0_a/(n+l-2)! for all |a| <= N (h_(1) = 1)."""

    N: int
    series: dict[Partition, Fraction] = field(default_factory=dict)

    def hurwitz(self, alpha) -> Fraction:
        alpha = Partition(alpha)
        r = alpha.weight + len(alpha) - 2
        h = self.series[alpha]
        return h if r < 0 else h * factorial(r)

    def __getitem__(self, alpha) -> Fraction:
        return self.hurwitz(alpha)

    def perturbed(self, alpha, delta=1) -> "JoinCutTable":
        """Copy with one Hurwitz number shifted by ``delta`` (fault injection)."""
        alpha = Partition(alpha)
        r = alpha.weight + len(alpha) - 2
        scale = factorial(r) if r >= 0 else 1
        series = dict(self.series)
        series[alpha] += Fraction(delta, scale)
        return JoinCutTable(self.N, series)

    def rows(self):
        for n in range(1, self.N + 1):
            for alpha in partitions(n):
                yield alpha, self.hurwitz(alpha)


def _mult(alpha: Partition, part: int) -> int:
    return sum(1 for a in alpha if a == part)


def joincut_table(N: int) -> JoinCutTable:
    if N < 1:
        raise ValueError("N must be >= 1")
    h: dict[Partition, Fraction] = {Partition((1,)): Fraction(1)}
    for n in range(2, N + 1):
        for alpha in sorted(partitions(n), key=len):
            r = n + len(alpha) - 2
            distinct = sorted(set(alpha))
            cut = Fraction(0)
            for i in distinct:
                for j in distinct:
                    if i == j and _mult(alpha, i) < 2:
                        continue
                    beta = alpha.remove((i, j)).union((i + j,))
                    cut += (i + j) * _mult(beta, i + j) * h[beta]
            join = Fraction(0)
            for k in distinct:
                rest = alpha.remove((k,))
                for i in range(1, k):
                    j = k - i
                    for b in sub_multisets(rest):
                        c = rest.remove(b)
                        bi, cj = b.union((i,)), c.union((j,))
                        join += i * _mult(bi, i) * h[bi] * j * _mult(cj, j) * h[cj]
            h[alpha] = (cut + join) / (2 * r)
    return JoinCutTable(N, h)


# -- change of variables check ---------------------------------------------------------
#
# Series in z whose coefficients are polynomials in p_1, p_2, ...; a
# polynomial is a dict from Partition (the p-monomial) to Fraction.

def _padd(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v * scale
    return {k: v for k, v in out.items() if v}


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = k1.union(k2)
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _smul(A: list, B: list, N: int) -> list:
    out = [{} for _ in range(N + 1)]
    for i, a in enumerate(A):
        if not a:
            continue
        for j in range(0, N + 1 - i):
            if j < len(B) and B[j]:
                out[i + j] = _padd(out[i + j], _pmul(a, B[j]))
    return out


def _sexp(W: list, N: int) -> list:
    """exp of a series with zero constant term."""
    one = {Partition(): Fraction(1)}
    out = [one] + [{} for _ in range(N)]
    term = [one] + [{} for _ in range(N)]
    for k in range(1, N + 1):
        term = _smul(term, W, N)
        term = [{m: v / k for m, v in c.items()} for c in term]
        out = [_padd(o, t) for o, t in zip(out, term)]
    return out


def _slog1p(W: list, N: int) -> list:
    """log(1 + W) for W with zero constant term."""
    out = [{} for _ in range(N + 1)]
    power = W
    for k in range(1, N + 1):
        sign = Fraction(1 if k % 2 else -1, k)
        out = [_padd(o, p, sign) for o, p in zip(out, power)]
        power = _smul(power, W, N)
    return out


def _inner_sum(s: list, N: int) -> list:
    """sum_i i^i/i! p_i s^i, truncated at z^N."""
    W = [{} for _ in range(N + 1)]
    power = s
    for i in range(1, N + 1):
        c = Fraction(i ** i, factorial(i))
        W = [_padd(w, {m.union((i,)): v * c for m, v in p.items()}) for w, p in zip(W, power)]
        power = _smul(power, s, N)
    return W


def series_s(N: int) -> list:
    """s(z) with s = z exp(sum_i i^i/i! p_i s^i), coefficients of z^0..z^N."""
    s = [{}, {Partition(): Fraction(1)}] + [{} for _ in range(N - 1)]
    for _ in range(N):
        e = _sexp(_inner_sum(s, N), N)
        s = [{}] + e[:N]
    return s


@dataclass
class LagrangeReport:
    N: int
    passed: bool
    mismatch: tuple | None = None  # (z-degree, p-monomial, lhs, rhs)


def lagrange_consistency_check(N: int, table: JoinCutTable | None = None) -> LagrangeReport:
    """Check (z d/dz)^2 H^0 == log(s/z) through z^N, with H^0 built from the join-cut table."""
    if N < 3:
        raise ValueError("N must be >= 3")
    table = table or joincut_table(N)
    s = series_s(N + 1)
    ratio = [c for c in s[1:N + 2]]  # s/z
    rhs = _slog1p([{}] + ratio[1:N + 1], N)
    for n in range(1, N + 1):
        lhs = {a: table.series[a] * n * n for a in partitions(n)}
        lhs = {k: v for k, v in lhs.items() if v}
        keys = sorted(set(lhs) | set(rhs[n]))
        for k in keys:
            if lhs.get(k, 0) != rhs[n].get(k, 0):
                return LagrangeReport(N, False, (n, k, lhs.get(k, 0), rhs[n].get(k, 0)))
    return LagrangeReport(N, True)


# -- polynomiality probes ---------------------------------------------------------------

@dataclass
class PolynomialityReport:
    genus: int
    length: int
    part_bound: int
    cleared_power: int  # P multiplied by n^cleared_power before fitting
    points: list
    values: list
    fit: Fit
    matches_closed_form: bool | None

    @property
    def degree(self) -> int:
        return self.fit.degree


def _hurwitz_source(genus: int, source: str) -> Callable[[Partition], Fraction]:
    if source == "auto":
        source = "joincut" if genus == 0 else "char"
    if source == "joincut":
        if genus != 0:
            raise ValueError("join-cut table is genus 0 only")
        return lambda a: joincut_table(a.weight).hurwitz(a)
    if source == "char":
        return lambda a: hurwitz_char(a, genus)
    if source == "closed":
        return hurwitz_g0_closed
    raise ValueError(f"unknown source {source!r}")


@lru_cache(maxsize=None)
def _cached_table(N):
    return joincut_table(N)


def polynomiality_probe(genus: int, length: int, part_bound: int,
                        source: str = "auto") -> PolynomialityReport:
    """Fit P_{g,l}(a_1..a_l) = H^g_a |Aut a| / ((n+l+2g-2)! prod a^a/a!) on parts <= part_bound.

    When 2g - 2 + l <= 0 the values are multiplied by n^(3 - l) (genus 0,
    l < 3) so that a polynomial exists; genus 0 fits are then compared with
    (a_1 + ... + a_l)^(l - 3) times that same factor.
    """
    if source == "auto" and genus == 0:
        table = _cached_table(part_bound * length)
        get = table.hurwitz
    else:
        get = _hurwitz_source(genus, source)
    cleared = max(0, 3 - length) if genus == 0 else 0
    pts, vals = [], []
    for n in range(length, part_bound * length + 1):
        for a in partitions(n):
            if len(a) != length or a[0] > part_bound:
                continue
            r = n + length + 2 * genus - 2
            denom = factorial(r) * prod(Fraction(x ** x, factorial(x)) for x in a)
            P = get(a) * aut_order(a) / denom
            pts.append(tuple(a))
            vals.append(P * Fraction(n) ** cleared)
    fit = fit_polynomial(pts, vals, symmetric=True)
    matches = None
    if genus == 0:
        target_power = length - 3 + cleared
        matches = all(fit(p) == Fraction(sum(p)) ** target_power for p in pts) and \
            _is_power_of_sum(fit, target_power)
    return PolynomialityReport(genus, length, part_bound, cleared, pts, vals, fit, matches)


def _is_power_of_sum(fit: Fit, d: int) -> bool:
    """Coefficientwise comparison with (x_1 + ... + x_l)^d in the monomial symmetric basis."""
    expected = {}
    for kappa in fit.basis:
        if kappa.weight == d:
            expected[kappa] = Fraction(factorial(d), prod(factorial(k) for k in kappa))
    got = fit.terms()
    return got == {k: v for k, v in expected.items() if v}


# -- double Hurwitz piecewise polynomiality --------------------------------------------

@dataclass
class PiecewiseReport:
    genus: int
    lengths: tuple[int, int]
    in_chamber: Fit
    chamber_points: list
    across_points: list
    mispredicted: list  # across-wall points where the chamber fit is wrong
    across_fit: Fit | None
    fits_differ: bool | None
    degree_candidates: dict

    @property
    def wall_witness(self) -> bool:
        return bool(self.mispredicted) or bool(self.fits_differ)


def wall_forms(ell: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Subsets (I, J) whose equation sum a_I = sum b_J is a wall."""
    out = []
    for mi in range(1 << ell):
        for mj in range(1 << k):
            I = tuple(i for i in range(ell) if mi >> i & 1)
            J = tuple(j for j in range(k) if mj >> j & 1)
            if (not I and not J) or (len(I) == ell and len(J) == k):
                continue
            out.append((I, J))
    return out


def chamber_signature(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...] | None:
    """Signs of all wall forms at (a, b); None on a wall."""
    sig = []
    for I, J in wall_forms(len(a), len(b)):
        v = sum(a[i] for i in I) - sum(b[j] for j in J)
        if v == 0:
            return None
        sig.append(1 if v > 0 else -1)
    return tuple(sig)


def _lattice(ell: int, k: int, max_n: int):
    """Ordered tuples (a, b) with |a| = |b| <= max_n, all parts positive."""
    def compositions(n, parts):
        if parts == 1:
            yield (n,)
            return
        for first in range(1, n - parts + 2):
            for rest in compositions(n - first, parts - 1):
                yield (first,) + rest

    for n in range(max(ell, k), max_n + 1):
        for a in compositions(n, ell):
            for b in compositions(n, k):
                yield a, b


def _region(spec, ell, k):
    if spec is None:
        return None
    if callable(spec):
        return spec
    a0, b0 = spec
    sig = chamber_signature(a0, b0)
    if sig is None:
        raise ValueError("reference point lies on a wall")
    return lambda a, b: chamber_signature(a, b) == sig


def double_piecewise_probe(genus: int, ell: int, k: int, chamber, part_bound: int,
                           across=None) -> PiecewiseReport:
    """Exact in-chamber fit of H^g_{a,b} plus a wall-crossing test.

    ``chamber`` and ``across`` are either predicates on (a, b) tuples or a
    reference point (a, b) whose resonance chamber is used.  Coordinates of
    the fit are a_1..a_l, b_1..b_{k-1}.  Without ``across`` every off-chamber
    lattice point is tested.
    """
    inside = _region(chamber, ell, k)
    other = _region(across, ell, k)
    pts_in, vals_in, pts_out, vals_out = [], [], [], []
    for a, b in _lattice(ell, k, part_bound):
        coords = a + b[:-1]
        if inside(a, b):
            pts_in.append(coords)
            vals_in.append(double_hurwitz(a, b, genus))
        elif other is None or other(a, b):
            pts_out.append(coords)
            vals_out.append(double_hurwitz(a, b, genus))
    if not pts_in:
        raise GridTooSmall("no lattice points in the chamber")
    fit = fit_polynomial(pts_in, vals_in, symmetric=False)
    wrong = [p for p, v in zip(pts_out, vals_out) if fit(p) != v]
    across_fit = None
    differ = None
    if other is not None and pts_out:
        try:
            across_fit = fit_polynomial(pts_out, vals_out, symmetric=False)
            differ = across_fit.terms() != fit.terms()
        except GridTooSmall:
            pass
    cands = {"4g-3+l-k": 4 * genus - 3 + ell - k, "4g-3+l+k": 4 * genus - 3 + ell + k}
    return PiecewiseReport(genus, (ell, k), fit, pts_in, pts_out, wrong, across_fit, differ, cands)
