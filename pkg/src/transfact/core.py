"""Partitions, permutations and Riemann-Hurwitz bookkeeping.

Composition convention
----------------------
Permutations act on the left: ``(p * q)(x) = p(q(x))``, so in a product
``p1 * p2 * ... * pm`` the rightmost factor is applied first.  This is the
only convention under which the torus example map (vertex, edge and face
permutations on 18 darts) satisfies ``edge * vertex == face``.  Every module
composes through :func:`compose` or ``Perm.__mul__``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

COMPOSITION = "right-to-left"


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Construction sorts the parts, so ``Partition([1, 3, 1]) == (3, 1, 1)``.
    The empty partition is allowed and has weight 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        return super().__new__(cls, sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self:
            m[p] = m.get(p, 0) + 1
        return m

    def z(self) -> int:
        """Centralizer order prod i^m_i m_i!."""
        return prod(i**k * factorial(k) for i, k in self.multiplicities().items())

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def remove(self, other: Iterable[int]) -> "Partition":
        """Multiset difference; raises ValueError if ``other`` is not contained."""
        rest = list(self)
        for p in other:
            rest.remove(p)
        return Partition(rest)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > i) for i in range(self[0]))

    def dominates(self, other: "Partition") -> bool:
        if self.weight != other.weight:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __add__(self, other):
        raise TypeError("use Partition.union for multiset union")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the ``[3,1,1]`` literal (``3,1,1`` and ``[]`` also accepted)."""
        s = text.strip()
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1]
        s = s.strip()
        if not s:
            return cls(())
        try:
            parts = [int(x) for x in s.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition literal {text!r}") from None
        return cls(parts)


def ones(n: int) -> Partition:
    return Partition((1,) * n)


def transposition_class(n: int) -> Partition:
    if n < 2:
        raise ValueError("no transpositions on fewer than 2 symbols")
    return Partition((2,) + (1,) * (n - 2))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    out: list[Partition] = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(Partition(acc))
            return
        for k in range(min(rem, cap), 0, -1):
            rec(rem - k, k, acc + (k,))

    rec(n, n, ())
    return tuple(out)


def partitions_with_length(n: int, length: int, max_part: int | None = None) -> list[Partition]:
    return [p for p in partitions(n) if len(p) == length and (max_part is None or p[0] <= max_part)]


def sub_multisets(lam: Partition, weight: int | None = None) -> Iterator[Partition]:
    """Sub-multisets of the parts of ``lam``, optionally of a fixed weight."""
    items = sorted(lam.multiplicities().items(), reverse=True)

    def rec(i, acc, w):
        if weight is not None and w > weight:
            return
        if i == len(items):
            if weight is None or w == weight:
                yield Partition(acc)
            return
        part, mult = items[i]
        for k in range(mult + 1):
            yield from rec(i + 1, acc + (part,) * k, w + part * k)

    yield from rec(0, (), 0)


def class_size(alpha: Partition) -> int:
    """Number of permutations of cycle type ``alpha``: n!/z_alpha."""
    alpha = Partition(alpha)
    return factorial(alpha.weight) // alpha.z()


def aut_order(alpha: Partition) -> int:
    """|Aut alpha|, the product of factorials of the part multiplicities."""
    return prod(factorial(k) for k in Partition(alpha).multiplicities().values())


# -- permutations -----------------------------------------------------------

def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Image table of p*q on 0-based tuples: apply q, then p."""
    return tuple([p[i] for i in q])


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles_of(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type_of(p: Sequence[int]) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        lengths.append(k)
    return Partition(lengths)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm:
    """A permutation of {1..n}.

    Stored as a 0-based image table; ``Perm.from_images([2, 1, 3])`` takes
    the 1-based form.  ``p * q`` applies ``q`` first.
    """

    __slots__ = ("_img",)

    def __init__(self, images0: Sequence[int]):
        img = tuple(images0)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation: {[i + 1 for i in img]}")
        self._img = img

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Perm":
        return cls([i - 1 for i in images])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> "Perm":
        cycles = [tuple(c) for c in cycles]
        seen: set[int] = set()
        for c in cycles:
            for x in c:
                if x < 1:
                    raise ValueError(f"symbols start at 1, got {x}")
                if x in seen:
                    raise ValueError(f"symbol {x} appears in more than one cycle")
                seen.add(x)
        top = max(seen, default=0)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"symbol {top} exceeds n={n}")
        img = list(range(n))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Perm":
        """Accept cycle notation ``(1 2 3)(4 5)`` or an image table ``[2,1,3]``."""
        s = text.strip()
        if s.startswith("["):
            inner = s.strip("[]").strip()
            try:
                images = [int(x) for x in inner.split(",")] if inner else []
            except ValueError:
                raise ValueError(f"malformed image table {text!r}") from None
            if n is not None and len(images) != n:
                raise ValueError(f"image table has length {len(images)}, expected {n}")
            return cls.from_images(images)
        if _CYCLE_RE.sub("", s).strip():
            raise ValueError(f"malformed cycle notation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            toks = body.replace(",", " ").split()
            try:
                cycles.append([int(t) for t in toks])
            except ValueError:
                raise ValueError(f"malformed cycle notation {text!r}") from None
        return cls.from_cycles([c for c in cycles if c], n)

    @property
    def n(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    @property
    def images0(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, x: int) -> int:
        return self._img[x - 1] + 1

    def __mul__(self, other: "Perm") -> "Perm":
        if self.n != other.n:
            raise ValueError("permutations on different symbol sets")
        return Perm(compose(self._img, other._img))

    def inverse(self) -> "Perm":
        return Perm(inverse(self._img))

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        return [tuple(x + 1 for x in c) for c in cycles_of(self._img)
                if include_fixed or len(c) > 1]

    def cycle_type(self) -> Partition:
        return cycle_type_of(self._img)

    def num_cycles(self) -> int:
        return len(cycles_of(self._img))

    def __eq__(self, other):
        return isinstance(other, Perm) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __repr__(self):
        return f"Perm({self})"

    def __str__(self):
        if self.n == 0:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def cycle_type(w: Perm | Sequence[int]) -> Partition:
    if isinstance(w, Perm):
        return w.cycle_type()
    return Perm.from_images(w).cycle_type()


def class_representative(alpha: Partition) -> Perm:
    """The permutation (1 .. a1)(a1+1 .. a1+a2)... of cycle type alpha."""
    img = []
    start = 0
    for a in Partition(alpha):
        img.extend(range(start + 1, start + a))
        img.append(start)
        start += a
    return Perm(img)


# -- Riemann-Hurwitz ---------------------------------------------------------

@dataclass(frozen=True)
class GenusReport:
    """Outcome of solving the Riemann-Hurwitz relation for the genus."""

    value: Fraction

    @property
    def feasible(self) -> bool:
        return self.value.denominator == 1 and self.value >= 0

    @property
    def reason(self) -> str | None:
        if self.value.denominator != 1:
            return "parity"
        if self.value < 0:
            return "negative"
        return None

    @property
    def genus(self) -> int:
        if not self.feasible:
            raise ValueError(f"no genus: {self.reason} (g = {self.value})")
        return int(self.value)


def rh_genus(alpha: Partition, betas: Sequence[Partition]) -> GenusReport:
    """Solve sum_i (n - l(beta_i)) = n + l(alpha) + 2g - 2 for g."""
    alpha = Partition(alpha)
    n = alpha.weight
    betas = [Partition(b) for b in betas]
    for b in betas:
        if b.weight != n:
            raise ValueError(f"weight mismatch: {alpha} vs {b}")
    lhs = sum(n - len(b) for b in betas)
    return GenusReport(Fraction(lhs - n - len(alpha) + 2, 2))
