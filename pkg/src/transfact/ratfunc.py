"""Exact rational functions in one symbol (the Jack parameter alpha).

Polynomials are tuples of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  :class:`AlphaRational` keeps
numerator and denominator coprime with a monic denominator, so equality is
structural.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Poly = tuple  # tuple[Fraction, ...]

_ONE: Poly = (Fraction(1),)
_ZERO: Poly = ()


def _trim(c: Sequence) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly(coeffs: Sequence) -> Poly:
    return _trim(Fraction(x) for x in coeffs)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return _ZERO
    if len(b) == 1:
        c = b[0]
        return tuple(x * c for x in a)
    if len(a) == 1:
        c = a[0]
        return tuple(x * c for x in b)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def pscale(a: Poly, c) -> Poly:
    if not c:
        return _ZERO
    return tuple(x * c for x in a)


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return _ZERO, a
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c:
            c = c / lead
            q[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
    return _trim(q), _trim(rem[:db])


def pmonic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(x / lead for x in a)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while b:
        a, b = b, pmonic(pdivmod(a, b)[1])
    return pmonic(a)


def peval(a: Poly, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pshift(a: Poly, h) -> Poly:
    """Coefficients of a(x + h)."""
    out: Poly = _ZERO
    lin = (Fraction(h), Fraction(1))
    for c in reversed(a):
        out = padd(pmul(out, lin), (c,) if c else _ZERO)
    return out


def pformat(a: Poly, var: str = "a") -> str:
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mon = var if k == 1 else f"{var}^{k}"
            body = mon if mag == 1 else f"{mag}*{mon}"
        terms.append((sign, body))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


Scalar = Union[int, Fraction]


class AlphaRational:
    """Element of Q(alpha) with reduced numerator/denominator, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence = _ZERO, den: Sequence = _ONE, *, _reduced: bool = False):
        if _reduced:
            self.num, self.den = num, den
            return
        num, den = poly(num), poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = _ZERO, _ONE
            return
        g = pgcd(num, den)
        if len(g) > 1:
            num, den = pdivmod(num, g)[0], pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num, den = pscale(num, 1 / lead), pscale(den, 1 / lead)
        self.num, self.den = num, den

    @classmethod
    def const(cls, c: Scalar) -> "AlphaRational":
        c = Fraction(c)
        return cls((c,) if c else _ZERO, _ONE, _reduced=True)

    @classmethod
    def alpha(cls) -> "AlphaRational":
        return cls((Fraction(0), Fraction(1)), _ONE, _reduced=True)

    @classmethod
    def polynomial(cls, coeffs: Sequence) -> "AlphaRational":
        return cls(poly(coeffs), _ONE, _reduced=True)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "AlphaRational":
        if isinstance(x, AlphaRational):
            return x
        if isinstance(x, (int, Fraction)):
            return AlphaRational.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            if len(b) == 1:
                return AlphaRational(padd(a, c), _ONE, _reduced=True)
            return AlphaRational(padd(a, c), b)
        if len(b) == 1:
            return AlphaRational(padd(pmul(a, d), c), d, _reduced=True)
        if len(d) == 1:
            return AlphaRational(padd(a, pmul(c, b)), b, _reduced=True)
        g = pgcd(b, d)
        if len(g) == 1:
            return AlphaRational(padd(pmul(a, d), pmul(c, b)), pmul(b, d), _reduced=True)
        b1 = pdivmod(b, g)[0]
        d1 = pdivmod(d, g)[0]
        num = padd(pmul(a, d1), pmul(c, b1))
        if not num:
            return AlphaRational()
        den = pmul(b1, d)
        g2 = pgcd(num, g)
        if len(g2) > 1:
            num, den = pdivmod(num, g2)[0], pdivmod(den, g2)[0]
        return AlphaRational(num, den, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return AlphaRational(pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return AlphaRational()
            return AlphaRational(pscale(self.num, Fraction(other)), self.den, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return AlphaRational()
        a, b, c, d = self.num, self.den, other.num, other.den
        if len(b) == 1 and len(d) == 1:
            return AlphaRational(pmul(a, c), _ONE, _reduced=True)
        g1 = pgcd(a, d) if len(d) > 1 else _ONE
        g2 = pgcd(c, b) if len(b) > 1 else _ONE
        if len(g1) > 1:
            a, d = pdivmod(a, g1)[0], pdivmod(d, g1)[0]
        if len(g2) > 1:
            c, b = pdivmod(c, g2)[0], pdivmod(b, g2)[0]
        return AlphaRational(pmul(a, c), pmul(b, d), _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "AlphaRational":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        lead = self.num[-1]
        return AlphaRational(pscale(self.den, 1 / lead), pscale(self.num, 1 / lead), _reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = AlphaRational.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlphaRational.const(other)
        if not isinstance(other, AlphaRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation ---------------------------------------------------------
    def __call__(self, x) -> Fraction:
        d = peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at alpha = {x}")
        return peval(self.num, x) / d

    def shift(self, h) -> "AlphaRational":
        """Substitute alpha -> alpha + h."""
        return AlphaRational(pshift(self.num, h), pshift(self.den, h))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else Fraction(0)

    def __repr__(self):
        return f"AlphaRational({self})"

    def format(self, var: str = "a") -> str:
        n = pformat(self.num, var)
        if len(self.den) == 1:
            return n
        return f"({n})/({pformat(self.den, var)})"

    def __str__(self):
        return self.format()

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num], "den": [str(c) for c in self.den]}

    @classmethod
    def from_json(cls, obj: dict) -> "AlphaRational":
        return cls([Fraction(c) for c in obj["num"]], [Fraction(c) for c in obj["den"]])
