"""Symmetric functions in the power-sum basis, Jack functions, and the triple series.

Coefficients live in Q(alpha) (:class:`AlphaRational`) or, for the Schur
path, in Q.  The alpha-deformed inner product is
``<p_lam, p_mu> = delta z_lam alpha^l(lam)``.

Jack functions are obtained by Gram-Schmidt on monomial symmetric functions
in increasing lexicographic order (a linear extension of dominance), then
rescaled so that [m_(1^n)] J = n!, i.e. [p_(1^n)] J = 1.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .charalg import character, dimension
from .core import Partition, class_size, partitions
from .ratfunc import AlphaRational, pshift

ALPHA = AlphaRational.alpha()


def _zero_like(c):
    return AlphaRational() if isinstance(c, AlphaRational) else Fraction(0)


@lru_cache(maxsize=None)
def _union(a: Partition, b: Partition) -> Partition:
    return a.union(b)


class SymFunc:
    """Homogeneous symmetric function of weight n: sparse map p_theta -> coefficient."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, object] | None = None):
        self.n = n
        clean = {}
        for k, v in (coeffs or {}).items():
            k = Partition(k)
            if k.weight != n:
                raise ValueError(f"key {k} has weight {k.weight}, expected {n}")
            if v:
                clean[k] = v
        self.coeffs = clean

    @classmethod
    def p(cls, theta) -> "SymFunc":
        theta = Partition(theta)
        return cls(theta.weight, {theta: Fraction(1)})

    def __getitem__(self, theta) -> object:
        return self.coeffs.get(Partition(theta), 0)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.n != other.n:
            raise ValueError("weight mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return SymFunc(self.n, out)

    def __neg__(self):
        return SymFunc(self.n, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        return SymFunc(self.n, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        out: dict = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                k = _union(a, b)
                out[k] = out[k] + x * y if k in out else x * y
        return SymFunc(self.n + other.n, out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def specialize(self, a) -> "SymFunc":
        """Evaluate alpha-dependent coefficients at alpha = a."""
        return SymFunc(self.n, {k: v(a) if isinstance(v, AlphaRational) else v
                                for k, v in self.coeffs.items()})

    def monomial_coefficients(self) -> dict[Partition, object]:
        """Expansion in the monomial basis: [m_mu] f = sum_theta f_theta R(theta, mu)."""
        R = _power_to_monomial(self.n)
        out: dict = {}
        for theta, c in self.coeffs.items():
            for mu, r in R[theta].items():
                term = c * r
                out[mu] = out[mu] + term if mu in out else term
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        body = " + ".join(f"({v})*p{list(k)}" for k, v in sorted(self.coeffs.items()))
        return f"SymFunc({self.n}: {body or 0})"


# -- power sums <-> monomials ----------------------------------------------------

def _placements(parts: tuple[int, ...], targets: tuple[int, ...]) -> int:
    """Functions from parts to target slots whose per-slot sums equal targets."""
    if not parts:
        return 1 if all(t == 0 for t in targets) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    seen = {}
    for j, t in enumerate(targets):
        if t >= first:
            nxt = targets[:j] + (t - first,) + targets[j + 1:]
            key = tuple(sorted(nxt))
            if key not in seen:
                seen[key] = _placements(rest, nxt)
            total += seen[key]
    return total


@lru_cache(maxsize=None)
def _power_to_monomial(n: int) -> dict[Partition, dict[Partition, int]]:
    """R[theta][mu] with p_theta = sum_mu R[theta][mu] m_mu."""
    table = {}
    for theta in partitions(n):
        row = {}
        for mu in partitions(n):
            r = _placements(tuple(theta), tuple(mu))
            if r:
                row[mu] = r
        table[theta] = row
    return table


@lru_cache(maxsize=None)
def _monomial_to_power(n: int) -> dict[Partition, SymFunc]:
    R = _power_to_monomial(n)
    out: dict[Partition, SymFunc] = {}
    # p_theta = R[theta][theta] m_theta + sum over strictly dominating mu,
    # so solve from the top of the lexicographic order down.
    for theta in partitions(n):
        acc = SymFunc.p(theta)
        for mu, r in R[theta].items():
            if mu != theta:
                acc = acc - out[mu].scale(Fraction(r))
        out[theta] = acc.scale(Fraction(1, R[theta][theta]))
    return out


def monomial_in_power_sums(mu) -> SymFunc:
    mu = Partition(mu)
    return _monomial_to_power(mu.weight)[mu]


# -- Schur functions and the inner product -----------------------------------------

def schur_in_power_sums(lam) -> SymFunc:
    """s_lam = sum_theta |C_theta|/n! chi^lam(theta) p_theta."""
    lam = Partition(lam)
    n = lam.weight
    return SymFunc(n, {theta: Fraction(class_size(theta) * character(lam, theta), factorial(n))
                       for theta in partitions(n)})


def alpha_inner_product(f: SymFunc, g: SymFunc, a=None):
    """<f, g>_alpha; symbolic in alpha unless a value ``a`` is given."""
    if f.n != g.n:
        raise ValueError("weight mismatch")
    total = AlphaRational() if a is None else Fraction(0)
    for theta, x in f.coeffs.items():
        y = g.coeffs.get(theta)
        if y is None:
            continue
        w = theta.z() * (ALPHA ** len(theta) if a is None else Fraction(a) ** len(theta))
        total = total + x * y * w
    return total


# -- Jack functions ----------------------------------------------------------------

class _JackStore:
    def __init__(self):
        self.by_weight: dict[int, dict[Partition, SymFunc]] = {}
        self.lock = threading.Lock()

    def weight(self, n: int) -> dict[Partition, SymFunc]:
        got = self.by_weight.get(n)
        if got is None:
            got = _gram_schmidt(n)
            with self.lock:
                self.by_weight[n] = got
        return got


JACKS = _JackStore()


def _to_alpha(f: SymFunc) -> SymFunc:
    return SymFunc(f.n, {k: v if isinstance(v, AlphaRational) else AlphaRational.const(v)
                         for k, v in f.coeffs.items()})


def _gram_schmidt(n: int) -> dict[Partition, SymFunc]:
    order = sorted(partitions(n))  # increasing lex refines dominance
    ones = Partition((1,) * n)
    done: list[tuple[SymFunc, AlphaRational]] = []
    out = {}
    for theta in order:
        m = _to_alpha(monomial_in_power_sums(theta))
        P = m
        for Q, qq in done:
            c = alpha_inner_product(m, Q) / qq
            if c:
                P = P - Q.scale(c)
        done.append((P, alpha_inner_product(P, P)))
        out[theta] = P.scale(P[ones].inverse())
    return out


def jack(theta) -> SymFunc:
    """J_theta(alpha) in power sums, normalized by [m_(1^n)] J = n!."""
    theta = Partition(theta)
    if not theta:
        return SymFunc(0, {theta: AlphaRational.const(1)})
    return JACKS.weight(theta.weight)[theta]


def jack_norm(theta) -> AlphaRational:
    J = jack(theta)
    return alpha_inner_product(J, J)


# -- triple series -------------------------------------------------------------------

Triple = tuple  # (Partition, Partition, Partition)


@dataclass
class TripleSeries:
    """Truncated series in t; ``coeffs[n]`` maps (lam, mu, tau) to the t^n coefficient."""

    N: int
    coeffs: dict[int, dict[Triple, object]] = field(default_factory=dict)

    def coefficient(self, lam, mu, tau):
        lam, mu, tau = Partition(lam), Partition(mu), Partition(tau)
        n = lam.weight
        if not n == mu.weight == tau.weight or n > self.N:
            return 0
        return self.coeffs.get(n, {}).get((lam, mu, tau), 0)

    def items(self):
        for n in sorted(self.coeffs):
            for key in sorted(self.coeffs[n]):
                yield key, self.coeffs[n][key]

    def specialize(self, a) -> "TripleSeries":
        return TripleSeries(self.N, {n: {k: (v(a) if isinstance(v, AlphaRational) else v)
                                         for k, v in comp.items()}
                                     for n, comp in self.coeffs.items()})


def _triple_mul(A: dict[int, dict], B: dict[int, dict], N: int) -> dict[int, dict]:
    out: dict[int, dict] = {}
    for a, Aa in A.items():
        for b, Bb in B.items():
            if a + b > N:
                continue
            target = out.setdefault(a + b, {})
            for (l1, m1, t1), x in Aa.items():
                for (l2, m2, t2), y in Bb.items():
                    key = (_union(l1, l2), _union(m1, m2), _union(t1, t2))
                    v = x * y
                    target[key] = target[key] + v if key in target else v
    return {n: {k: v for k, v in comp.items() if v} for n, comp in out.items()}


def _log1p(U: dict[int, dict], N: int) -> dict[int, dict]:
    """log(1 + U) = sum_k (-1)^(k+1) U^k / k, truncated at t^N (U has no t^0 term)."""
    result: dict[int, dict] = {}
    power = U
    for k in range(1, N + 1):
        sign = Fraction(1 if k % 2 else -1, k)
        for n, comp in power.items():
            dest = result.setdefault(n, {})
            for key, v in comp.items():
                v = v * sign
                dest[key] = dest[key] + v if key in dest else v
        if k < N:
            power = _triple_mul(power, U, N)
    return {n: {k: v for k, v in comp.items() if v} for n, comp in result.items()}


def _tensor_cube(f: SymFunc, weight) -> dict[Triple, object]:
    items = list(f.coeffs.items())
    out = {}
    for l, x in items:
        xw = x * weight
        for m, y in items:
            xy = xw * y
            for t, z in items:
                out[(l, m, t)] = xy * z
    return out


def _add_into(dest: dict, src: dict):
    for k, v in src.items():
        dest[k] = dest[k] + v if k in dest else v


def psi_series(N: int) -> TripleSeries:
    """alpha t d/dt log sum_theta J x J x J / <J, J> t^|theta|, symbolic in alpha."""
    if N < 1:
        raise ValueError("truncation degree must be >= 1")
    U: dict[int, dict] = {}
    for n in range(1, N + 1):
        comp: dict = {}
        for theta in partitions(n):
            _add_into(comp, _tensor_cube(jack(theta), jack_norm(theta).inverse()))
        U[n] = {k: v for k, v in comp.items() if v}
    L = _log1p(U, N)
    return TripleSeries(N, {n: {k: v * ALPHA * n for k, v in L.get(n, {}).items()}
                            for n in range(1, N + 1)})


def schur_series(N: int) -> TripleSeries:
    """t d/dt log sum_theta |theta|!/chi^theta(1) s x s x s t^|theta|, over Q."""
    if N < 1:
        raise ValueError("truncation degree must be >= 1")
    U: dict[int, dict] = {}
    for n in range(1, N + 1):
        comp: dict = {}
        for theta in partitions(n):
            _add_into(comp, _tensor_cube(schur_in_power_sums(theta),
                                         Fraction(factorial(n), dimension(theta))))
        U[n] = {k: v for k, v in comp.items() if v}
    L = _log1p(U, N)
    return TripleSeries(N, {n: {k: v * n for k, v in L.get(n, {}).items()}
                            for n in range(1, N + 1)})


# -- b-conjecture --------------------------------------------------------------------

@dataclass(frozen=True)
class BPolynomialReport:
    triple: Triple
    coefficient: AlphaRational  # as a function of b = alpha - 1
    is_polynomial: bool
    integer_coefficients: bool
    nonnegative_coefficients: bool

    @property
    def passed(self) -> bool:
        return self.is_polynomial and self.integer_coefficients and self.nonnegative_coefficients

    def b_coefficients(self) -> list[Fraction]:
        return list(self.coefficient.num) if self.is_polynomial else []

    def to_json(self) -> dict:
        lam, mu, tau = self.triple
        return {
            "lambda": str(lam), "mu": str(mu), "tau": str(tau),
            "b_polynomial": [str(c) for c in self.b_coefficients()],
            "value": self.coefficient.format("b"),
            "is_polynomial": self.is_polynomial,
            "integer_coefficients": self.integer_coefficients,
            "nonnegative_coefficients": self.nonnegative_coefficients,
        }


def b_report(triple: Triple, value) -> BPolynomialReport:
    if not isinstance(value, AlphaRational):
        value = AlphaRational.const(value)
    in_b = value.shift(1)
    poly_ok = in_b.is_polynomial()
    coeffs = in_b.num if poly_ok else ()
    integer = poly_ok and all(c.denominator == 1 for c in coeffs)
    nonneg = poly_ok and all(c >= 0 for c in coeffs)
    return BPolynomialReport(triple, in_b, poly_ok, integer, nonneg)


def b_conjecture_scan(N: int, series: TripleSeries | None = None) -> list[BPolynomialReport]:
    """One report per triple of common weight <= N (zero coefficients included)."""
    psi = series if series is not None else psi_series(N)
    reports = []
    for n in range(1, N + 1):
        comp = psi.coeffs.get(n, {})
        for lam in partitions(n):
            for mu in partitions(n):
                for tau in partitions(n):
                    key = (lam, mu, tau)
                    reports.append(b_report(key, comp.get(key, AlphaRational())))
    return reports
